#include "contact/serialization.hpp"

#include <fstream>
#include <limits>

#include "contact/errors.hpp"

namespace contact
{

namespace
{

const Json& req(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing key \"") + key + "\"");
    }
    return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key)
{
    try {
        return req(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("key \"") + key + "\": " + e.what());
    }
}

template <typename T>
std::optional<T> get_optional(const Json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return get<T>(j, key);
}

template <typename T, typename F>
Json array_of(const std::vector<T>& items, F convert)
{
    Json out = Json::array();
    for (const auto& item : items) {
        out.push_back(convert(item));
    }
    return out;
}

const char* status_name(RankStatus s)
{
    switch (s) {
    case RankStatus::zero:
        return "zero";
    case RankStatus::exact:
        return "exact";
    case RankStatus::bounds:
        return "bounds";
    }
    return "zero";
}

RankStatus status_from(const std::string& s)
{
    if (s == "zero") {
        return RankStatus::zero;
    }
    if (s == "exact") {
        return RankStatus::exact;
    }
    if (s == "bounds") {
        return RankStatus::bounds;
    }
    throw ValidationError("unknown rank status \"" + s + "\"");
}

Json torsion_blocks_to_json(const std::vector<TorsionBlock>& blocks)
{
    return array_of(blocks, [](const TorsionBlock& t) { return Json{{"degree", t.degree}, {"orders", t.orders}}; });
}

std::vector<TorsionBlock> torsion_blocks_from_json(const Json& j)
{
    std::vector<TorsionBlock> out;
    for (const auto& t : j) {
        out.push_back({get<int>(t, "degree"), get<std::vector<long long>>(t, "orders")});
    }
    return out;
}

} // namespace

Json integer_to_json(const Integer& n)
{
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
        return static_cast<long long>(n);
    }
    return n.str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<long long>());
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw ValidationError("not an integer: " + j.get<std::string>());
        }
    }
    throw ValidationError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& r)
{
    if (denominator(r) == 1) {
        return integer_to_json(numerator(r));
    }
    return to_string(r);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw ValidationError("expected an exact rational (integer or \"p/q\"), got " + j.dump());
}

Json polynomial_to_json(const Polynomial& f)
{
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(Json{{"exp", e}, {"coef", rational_to_json(c)}});
    }
    return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j)
{
    const Json& terms = req(j, "terms");
    int nvars = get_optional<int>(j, "nvars").value_or(0);
    for (const auto& t : terms) {
        nvars = std::max(nvars, static_cast<int>(req(t, "exp").size()));
    }
    Polynomial f(std::max(nvars, 1));
    for (const auto& t : terms) {
        auto e = get<std::vector<int>>(t, "exp");
        for (int x : e) {
            if (x < 0) {
                throw ValidationError("negative exponent in polynomial document");
            }
        }
        e.resize(static_cast<std::size_t>(f.nvars()), 0);
        f.add_term(e, rational_from_json(req(t, "coef")));
    }
    return f;
}

Json to_json(const SncConfiguration& cfg)
{
    Json divisors = Json::array();
    for (const auto& d : cfg.divisors) {
        Json jd{{"id", d.id},       {"label", d.label},           {"mult", d.mult},
                {"disc", d.disc},   {"exceptional", d.exceptional}, {"over_sigma", d.over_sigma}};
        if (d.genus) {
            jd["genus"] = *d.genus;
        }
        if (d.self_int) {
            jd["self_int"] = *d.self_int;
        }
        if (d.euler) {
            jd["euler"] = *d.euler;
        }
        if (d.cover) {
            Json cover{{"betti", d.cover->betti}};
            if (d.cover->components) {
                cover["components"] = *d.cover->components;
            }
            cover["torsion"] = torsion_blocks_to_json(d.cover->torsion);
            jd["cover"] = cover;
        }
        divisors.push_back(jd);
    }
    Json cells = Json::array();
    for (const auto& c : cfg.cells) {
        Json jc{{"ids", c.ids}, {"count", c.count}};
        if (c.over_sigma) {
            jc["over_sigma"] = *c.over_sigma;
        }
        cells.push_back(jc);
    }
    Json out{{"ambient_dim", cfg.ambient_dim}, {"sigma", cfg.sigma_label}, {"divisors", divisors}, {"cells", cells}};
    if (cfg.weights) {
        out["weights"] = weights_to_json(*cfg.weights);
    }
    return out;
}

SncConfiguration configuration_from_json(const Json& j)
{
    SncConfiguration cfg;
    cfg.ambient_dim = get<int>(j, "ambient_dim");
    cfg.sigma_label = get_optional<std::string>(j, "sigma").value_or("origin");
    for (const auto& jd : req(j, "divisors")) {
        Divisor d;
        d.id = get<int>(jd, "id");
        d.label = get_optional<std::string>(jd, "label").value_or("");
        d.mult = get<long long>(jd, "mult");
        d.disc = get<long long>(jd, "disc");
        d.exceptional = get<bool>(jd, "exceptional");
        d.over_sigma = get<bool>(jd, "over_sigma");
        d.genus = get_optional<int>(jd, "genus");
        d.self_int = get_optional<long long>(jd, "self_int");
        d.euler = get_optional<long long>(jd, "euler");
        if (jd.contains("cover")) {
            const Json& jc = jd.at("cover");
            SuppliedCover cover;
            cover.betti = get<std::vector<long long>>(jc, "betti");
            cover.components = get_optional<long long>(jc, "components");
            if (jc.contains("torsion")) {
                cover.torsion = torsion_blocks_from_json(jc.at("torsion"));
            }
            d.cover = cover;
        } else if (jd.contains("cover_betti")) {
            SuppliedCover cover;
            cover.betti = get<std::vector<long long>>(jd, "cover_betti");
            d.cover = cover;
        }
        cfg.divisors.push_back(d);
    }
    if (j.contains("cells")) {
        for (const auto& jc : j.at("cells")) {
            IntersectionCell c;
            c.ids = get<std::vector<int>>(jc, "ids");
            c.count = get_optional<long long>(jc, "count").value_or(1);
            c.over_sigma = get_optional<bool>(jc, "over_sigma");
            cfg.cells.push_back(c);
        }
    }
    if (j.contains("weights") && !j.at("weights").is_null()) {
        cfg.weights = weights_from_json(j.at("weights"));
    }
    return cfg;
}

Json to_json(const ValidationReport& report)
{
    Json issues = Json::array();
    for (const auto& issue : report.issues) {
        issues.push_back(Json{{"severity", issue.severity == Severity::error ? "error" : "warning"},
                              {"subject", issue.subject},
                              {"message", issue.message}});
    }
    return Json{{"valid", report.valid()}, {"issues", issues}};
}

Json weights_to_json(const WeightVector& w)
{
    Json out = Json::object();
    for (const auto& [id, value] : w) {
        out[std::to_string(id)] = value;
    }
    return out;
}

WeightVector weights_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw ValidationError("weights must be an object mapping divisor id to integer");
    }
    WeightVector w;
    for (const auto& [key, value] : j.items()) {
        int id = 0;
        try {
            std::size_t used = 0;
            id = std::stoi(key, &used);
            if (used != key.size()) {
                throw std::invalid_argument(key);
            }
        } catch (const std::exception&) {
            throw ValidationError("weight key \"" + key + "\" is not a divisor id");
        }
        if (!value.is_number_integer()) {
            throw ValidationError("weight for divisor " + key + " must be an integer");
        }
        w[id] = value.get<long long>();
    }
    return w;
}

Json to_json(const ResolutionLog& log)
{
    Json factors = Json::array();
    for (const auto& [g, a] : log.factors) {
        factors.push_back(Json{{"factor", g.to_string()}, {"polynomial", polynomial_to_json(g)}, {"exponent", a}});
    }
    Json steps = array_of(log.steps, [](const BlowupRecord& r) {
        return Json{{"step", r.step},
                    {"center", r.center},
                    {"through", r.through},
                    {"strict_multiplicity", r.strict_multiplicity},
                    {"reduced_multiplicity", r.reduced_multiplicity},
                    {"new_divisor", r.new_divisor},
                    {"mult", r.mult},
                    {"disc", r.disc}};
    });
    Json valuations = Json::object();
    for (const auto& [id, v] : log.valuations) {
        valuations[std::to_string(id)] = v;
    }
    return Json{{"factors", factors}, {"steps", steps}, {"valuations", valuations}};
}

ResolutionLog resolution_log_from_json(const Json& j)
{
    ResolutionLog log;
    for (const auto& f : req(j, "factors")) {
        log.factors.emplace_back(polynomial_from_json(req(f, "polynomial")), get<int>(f, "exponent"));
    }
    for (const auto& s : req(j, "steps")) {
        BlowupRecord r;
        r.step = get<int>(s, "step");
        r.center = get<std::string>(s, "center");
        r.through = get<std::vector<int>>(s, "through");
        r.strict_multiplicity = get<int>(s, "strict_multiplicity");
        r.reduced_multiplicity = get<int>(s, "reduced_multiplicity");
        r.new_divisor = get<int>(s, "new_divisor");
        r.mult = get<long long>(s, "mult");
        r.disc = get<long long>(s, "disc");
        log.steps.push_back(r);
    }
    if (j.contains("valuations")) {
        for (const auto& [key, v] : j.at("valuations").items()) {
            log.valuations[std::stoi(key)] = v.get<std::vector<long long>>();
        }
    }
    return log;
}

Json to_json(const SeparationResult& result)
{
    Json records = array_of(result.records, [](const SubdivisionRecord& r) {
        return Json{{"pass", r.pass},
                    {"cell", {r.i, r.j}},
                    {"point_index", r.point_index},
                    {"new_divisor", r.new_divisor},
                    {"mult", r.mult},
                    {"disc", r.disc},
                    {"over_sigma", r.over_sigma},
                    {"over_sigma_defaulted", r.over_sigma_defaulted}};
    });
    Json warnings = array_of(result.warnings, [](const Issue& i) {
        return Json{{"subject", i.subject}, {"message", i.message}};
    });
    return Json{{"configuration", to_json(result.config)}, {"subdivisions", records}, {"warnings", warnings}};
}

SeparationResult separation_from_json(const Json& j)
{
    SeparationResult out;
    out.config = configuration_from_json(req(j, "configuration"));
    for (const auto& r : req(j, "subdivisions")) {
        SubdivisionRecord rec;
        rec.pass = get<int>(r, "pass");
        auto cell = get<std::vector<int>>(r, "cell");
        if (cell.size() != 2) {
            throw ValidationError("subdivision cell must have two ids");
        }
        rec.i = cell[0];
        rec.j = cell[1];
        rec.point_index = get<long long>(r, "point_index");
        rec.new_divisor = get<int>(r, "new_divisor");
        rec.mult = get<long long>(r, "mult");
        rec.disc = get<long long>(r, "disc");
        rec.over_sigma = get<bool>(r, "over_sigma");
        rec.over_sigma_defaulted = get<bool>(r, "over_sigma_defaulted");
        out.records.push_back(rec);
    }
    if (j.contains("warnings")) {
        for (const auto& w : j.at("warnings")) {
            out.warnings.push_back({Severity::warning, get<std::string>(w, "subject"), get<std::string>(w, "message")});
        }
    }
    return out;
}

Json to_json(const CoverHomology& cover)
{
    return Json{{"id", cover.id},
                {"components", cover.components},
                {"betti", cover.betti},
                {"torsion", torsion_blocks_to_json(cover.torsion)},
                {"source", cover.source == CoverSource::computed ? "computed" : "supplied"},
                {"euler", cover.euler()}};
}

CoverHomology cover_from_json(const Json& j)
{
    CoverHomology c;
    c.id = get<int>(j, "id");
    c.components = get<long long>(j, "components");
    c.betti = get<std::vector<long long>>(j, "betti");
    c.torsion = torsion_blocks_from_json(req(j, "torsion"));
    c.source = get<std::string>(j, "source") == "supplied" ? CoverSource::supplied : CoverSource::computed;
    return c;
}

Json to_json(const ContributingSet& set)
{
    Json members = array_of(set.members, [](const Contributor& c) {
        return Json{{"id", c.id}, {"k", c.k}, {"p", c.p}};
    });
    return Json{{"m", set.m}, {"members", members}};
}

ContributingSet contributing_set_from_json(const Json& j)
{
    ContributingSet set;
    set.m = get<long long>(j, "m");
    for (const auto& c : req(j, "members")) {
        set.members.push_back({get<int>(c, "id"), get<long long>(c, "k"), get<long long>(c, "p")});
    }
    return set;
}

Json to_json(const E1Page& page)
{
    Json entries = Json::array();
    for (const auto& [pq, e] : page.entries) {
        Json contributors = array_of(e.contributors, [](const EntryContribution& c) {
            return Json{{"id", c.id}, {"homology_degree", c.homology_degree}, {"rank", c.rank}, {"torsion", c.torsion}};
        });
        entries.push_back(Json{{"p", pq.first},
                               {"q", pq.second},
                               {"total_degree", pq.first + pq.second},
                               {"rank", e.rank},
                               {"torsion", e.torsion},
                               {"contributors", contributors}});
    }
    return Json{{"m", page.m}, {"d", page.d}, {"degree_shift", page.degree_shift}, {"entries", entries},
                {"euler", page.euler()}};
}

E1Page e1_page_from_json(const Json& j)
{
    E1Page page;
    page.m = get<long long>(j, "m");
    page.d = get<int>(j, "d");
    page.degree_shift = get_optional<long long>(j, "degree_shift").value_or(0);
    for (const auto& e : req(j, "entries")) {
        E1Entry entry;
        entry.rank = get<long long>(e, "rank");
        entry.torsion = get<std::vector<long long>>(e, "torsion");
        for (const auto& c : req(e, "contributors")) {
            entry.contributors.push_back({get<int>(c, "id"), get<int>(c, "homology_degree"), get<long long>(c, "rank"),
                                          get<std::vector<long long>>(c, "torsion")});
        }
        page.entries[{get<long long>(e, "p"), get<long long>(e, "q")}] = entry;
    }
    return page;
}

Json to_json(const HcReport& report)
{
    Json degrees = Json::array();
    for (const auto& [n, dr] : report.degrees) {
        degrees.push_back(Json{{"degree", dr.degree},
                               {"e1_rank", dr.e1_rank},
                               {"status", status_name(dr.status)},
                               {"lo", dr.lo},
                               {"hi", dr.hi},
                               {"integral_exact", dr.integral_exact},
                               {"torsion", dr.torsion},
                               {"graded_only", dr.graded_only}});
    }
    return Json{{"m", report.m},
                {"d", report.d},
                {"degree_shift", report.degree_shift},
                {"integral_forced", report.integral_forced},
                {"rational_window_forced", report.rational_window_forced},
                {"euler", report.euler},
                {"degrees", degrees}};
}

HcReport hc_report_from_json(const Json& j)
{
    HcReport r;
    r.m = get<long long>(j, "m");
    r.d = get<int>(j, "d");
    r.degree_shift = get_optional<long long>(j, "degree_shift").value_or(0);
    r.integral_forced = get<bool>(j, "integral_forced");
    r.rational_window_forced = get<bool>(j, "rational_window_forced");
    r.euler = get<long long>(j, "euler");
    for (const auto& jd : req(j, "degrees")) {
        DegreeReport dr;
        dr.degree = get<long long>(jd, "degree");
        dr.e1_rank = get<long long>(jd, "e1_rank");
        dr.status = status_from(get<std::string>(jd, "status"));
        dr.lo = get<long long>(jd, "lo");
        dr.hi = get<long long>(jd, "hi");
        dr.integral_exact = get<bool>(jd, "integral_exact");
        dr.torsion = get<std::vector<long long>>(jd, "torsion");
        dr.graded_only = get<bool>(jd, "graded_only");
        r.degrees[dr.degree] = dr;
    }
    return r;
}

Json to_json(const ZetaFactorization& zeta)
{
    auto factors = [](const std::vector<ZetaFactor>& fs) {
        return array_of(fs, [](const ZetaFactor& f) { return Json{{"cycle", f.cycle}, {"exponent", f.exponent}}; });
    };
    return Json{{"factors", factors(zeta.factors)}, {"reduced", factors(zeta.reduced)}, {"rendered", zeta.render()}};
}

ZetaFactorization zeta_from_json(const Json& j)
{
    ZetaFactorization z;
    for (const auto& f : req(j, "factors")) {
        z.factors.push_back({get<long long>(f, "cycle"), get<long long>(f, "exponent")});
    }
    for (const auto& f : req(j, "reduced")) {
        z.reduced.push_back({get<long long>(f, "cycle"), get<long long>(f, "exponent")});
    }
    return z;
}

Json to_json(const EulerCheck& check)
{
    return Json{{"pass", check.pass}, {"page_euler", check.page_euler}, {"lefschetz", check.lefschetz}};
}

EulerCheck euler_check_from_json(const Json& j)
{
    return {get<bool>(j, "pass"), get<long long>(j, "page_euler"), get<long long>(j, "lefschetz")};
}

Json to_json(const CountReport& report)
{
    Json strata = Json::array();
    for (const auto& [orders, n] : report.strata) {
        strata.push_back(Json{{"orders", orders}, {"count", integer_to_json(n)}});
    }
    return Json{{"f", report.f},
                {"d", report.d},
                {"m", report.m},
                {"l", report.l},
                {"q", report.q},
                {"total", integer_to_json(report.total)},
                {"strata", strata},
                {"nodes", report.nodes},
                {"method", report.method},
                {"elapsed_seconds", report.elapsed_seconds}};
}

CountReport count_report_from_json(const Json& j)
{
    CountReport r;
    r.f = get<std::string>(j, "f");
    r.d = get<int>(j, "d");
    r.m = get<long long>(j, "m");
    r.l = get<long long>(j, "l");
    r.q = get<long long>(j, "q");
    r.total = integer_from_json(req(j, "total"));
    for (const auto& s : req(j, "strata")) {
        r.strata[get<OrderVector>(s, "orders")] = integer_from_json(req(s, "count"));
    }
    r.nodes = get<std::uint64_t>(j, "nodes");
    r.method = get<std::string>(j, "method");
    r.elapsed_seconds = get<double>(j, "elapsed_seconds");
    return r;
}

Json to_json(const ChiFit& fit)
{
    Json coefficients = array_of(fit.coefficients, [](const Rational& c) { return rational_to_json(c); });
    return Json{{"sufficient", fit.sufficient},
                {"polynomial", fit.polynomial},
                {"known_power", fit.known_power},
                {"coefficients", coefficients},
                {"degree", fit.degree},
                {"chi", rational_to_json(fit.chi)},
                {"residual", rational_to_json(fit.residual)},
                {"verdict", fit.verdict}};
}

ChiFit chi_fit_from_json(const Json& j)
{
    ChiFit fit;
    fit.sufficient = get<bool>(j, "sufficient");
    fit.polynomial = get<bool>(j, "polynomial");
    fit.known_power = get<long long>(j, "known_power");
    for (const auto& c : req(j, "coefficients")) {
        fit.coefficients.push_back(rational_from_json(c));
    }
    fit.degree = get<int>(j, "degree");
    fit.chi = rational_from_json(req(j, "chi"));
    fit.residual = rational_from_json(req(j, "residual"));
    fit.verdict = get<std::string>(j, "verdict");
    return fit;
}

Json to_json(const FibrationCheck& check)
{
    Json histogram = Json::array();
    for (const auto& [size, images] : check.histogram) {
        histogram.push_back(Json{{"fiber_size", size}, {"images", images}});
    }
    return Json{{"pass", check.pass},
                {"expected_fiber", integer_to_json(check.expected_fiber)},
                {"source_jets", check.source_jets},
                {"histogram", histogram}};
}

FibrationCheck fibration_from_json(const Json& j)
{
    FibrationCheck c;
    c.pass = get<bool>(j, "pass");
    c.expected_fiber = integer_from_json(req(j, "expected_fiber"));
    c.source_jets = get<std::uint64_t>(j, "source_jets");
    for (const auto& h : req(j, "histogram")) {
        c.histogram[get<std::uint64_t>(h, "fiber_size")] = get<std::uint64_t>(h, "images");
    }
    return c;
}

Json to_json(const GapAnalysis& gap)
{
    return Json{{"minimal_scale", gap.minimal_scale},
                {"weights", weights_to_json(gap.weights)},
                {"page", to_json(gap.page)},
                {"report", to_json(gap.report)},
                {"label", gap.label}};
}

GapAnalysis gap_analysis_from_json(const Json& j)
{
    GapAnalysis gap;
    gap.minimal_scale = get<long long>(j, "minimal_scale");
    gap.weights = weights_from_json(req(j, "weights"));
    gap.page = e1_page_from_json(req(j, "page"));
    gap.report = hc_report_from_json(req(j, "report"));
    gap.label = get<std::string>(j, "label");
    return gap;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

} // namespace contact
