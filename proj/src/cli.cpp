#include "contact/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "contact/covers.hpp"
#include "contact/curve_builder.hpp"
#include "contact/errors.hpp"
#include "contact/expression.hpp"
#include "contact/jet_oracle.hpp"
#include "contact/lefschetz.hpp"
#include "contact/render.hpp"
#include "contact/serialization.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"
#include "contact/weights.hpp"

namespace contact
{

namespace
{

const std::vector<long long> kDefaultPrimes{3, 5, 7, 11, 13};
constexpr const char* kNodeCapVariable = "CONTACT_NODE_CAP";

struct JobSpec
{
    std::string poly;
    std::string poly_json;
    std::string config;
    long long m = 0;
    std::string weights;
    long long weight_scale = 1;
    std::vector<long long> primes;
    long long level = 0;
    std::string format = "table";
    bool gap = false;
    int dim = 0;
    bool split = false;
    unsigned threads = 1;
    std::string csv;
    bool enumerate_tail = false;
    int nu = 2;
};

struct Input
{
    SncConfiguration cfg;
    std::optional<Polynomial> poly;
    std::optional<ResolutionLog> log;
    std::string description;
};

struct Prepared
{
    Input input;
    SeparationResult separation;
    WeightVector weights;
    std::string weight_source;
};

// Thrown for failed checks whose report was already printed.
struct CheckFailed
{
};

bool json_output(const JobSpec& job)
{
    return job.format == "json";
}

Polynomial load_polynomial(const JobSpec& job)
{
    if (!job.poly.empty()) {
        try {
            return parse_polynomial(job.poly, job.dim);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("cannot parse polynomial: ") + e.what());
        }
    }
    Polynomial f = polynomial_from_json(read_json_file(job.poly_json));
    if (job.dim > f.nvars()) {
        f = f.with_nvars(job.dim);
    }
    return f;
}

Input load_input(const JobSpec& job)
{
    int sources = (!job.poly.empty()) + (!job.poly_json.empty()) + (!job.config.empty());
    if (sources != 1) {
        throw ValidationError("give exactly one input: --poly, --poly-json or --config");
    }
    Input in;
    if (!job.config.empty()) {
        in.cfg = configuration_from_json(read_json_file(job.config));
        in.description = job.config;
        return in;
    }
    Polynomial f = load_polynomial(job);
    in.poly = f;
    in.description = "f = " + f.to_string();
    if (f.nvars() == 1) {
        in.cfg = resolve_univariate(f);
    } else if (f.nvars() == 2) {
        auto res = resolve_plane_curve(f);
        in.cfg = res.config;
        in.log = res.log;
    } else {
        throw UnsupportedError("unsupported dimension: resolution is built for d ≤ 2; supply a configuration");
    }
    return in;
}

WeightVector parse_weight_override(const std::string& text)
{
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed.front() == '{') {
        try {
            return weights_from_json(Json::parse(trimmed));
        } catch (const nlohmann::json::parse_error& e) {
            throw ValidationError(std::string("malformed --weights JSON: ") + e.what());
        }
    }
    WeightVector w;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ValidationError("--weights expects id:w pairs separated by commas or a JSON object");
        }
        try {
            w[std::stoi(item.substr(0, colon))] = std::stoll(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw ValidationError("--weights entry \"" + item + "\" is not id:w");
        }
    }
    return w;
}

bool has_exceptional(const SncConfiguration& cfg)
{
    return std::any_of(cfg.divisors.begin(), cfg.divisors.end(), [](const Divisor& d) { return d.exceptional; });
}

WeightVector choose_weights(const JobSpec& job, const SncConfiguration& cfg, bool grew, std::string& source)
{
    WeightVector w;
    if (!job.weights.empty()) {
        w = parse_weight_override(job.weights);
        source = "override";
    } else if (cfg.weights && !(grew && cfg.ambient_dim == 2)) {
        w = *cfg.weights;
        source = "configuration";
    } else if (cfg.ambient_dim == 2) {
        w = solve_weights(cfg);
        source = "solver";
    } else if (!has_exceptional(cfg)) {
        source = "none needed";
    } else {
        throw PreconditionError("weights must be supplied (configuration \"weights\" or --weights) when ambient_dim ≠ 2");
    }
    if (job.weight_scale != 1) {
        w = scale_weights(w, job.weight_scale);
        source += ", scaled by " + std::to_string(job.weight_scale);
    }
    return w;
}

Prepared prepare(const JobSpec& job, bool need_m)
{
    Prepared p;
    p.input = load_input(job);
    require_valid(p.input.cfg);
    if (need_m && job.m < 1) {
        throw ValidationError("--m ≥ 1 required");
    }
    p.separation = need_m ? separate(p.input.cfg, job.m) : SeparationResult{p.input.cfg, {}, {}};
    p.weights = choose_weights(job, p.separation.config, !p.separation.records.empty(), p.weight_source);
    auto check = check_weights(p.separation.config, p.weights);
    if (!check.valid) {
        std::string msg;
        for (const auto& v : check.violations) {
            msg += (msg.empty() ? "" : "; ") + v;
        }
        throw PreconditionError("invalid weights: " + msg);
    }
    return p;
}

std::string weights_text(const WeightVector& w, const std::map<int, std::string>& labels)
{
    if (w.empty()) {
        return "(none)";
    }
    std::string s;
    for (const auto& [id, value] : w) {
        s += (s.empty() ? "" : ", ") + (labels.count(id) ? labels.at(id) : std::to_string(id)) + "=" +
             std::to_string(value);
    }
    return s;
}

std::string series_text(const std::vector<Rational>& coefficients)
{
    if (coefficients.empty()) {
        return "0";
    }
    return UPoly(coefficients).to_string("q");
}

std::uint64_t node_cap()
{
    const char* env = std::getenv(kNodeCapVariable);
    if (!env) {
        return CountOptions{}.node_cap;
    }
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw ValidationError(std::string(kNodeCapVariable) + " must be a positive integer");
    }
}

std::vector<long long> prime_pool(const JobSpec& job)
{
    auto primes = job.primes.empty() ? kDefaultPrimes : job.primes;
    for (long long q : primes) {
        if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
            throw ValidationError("--primes: " + std::to_string(q) + " is not prime");
        }
    }
    return primes;
}

long long lcm_of_contributors(const SncConfiguration& cfg, const ContributingSet& set)
{
    long long l = 1;
    for (const auto& c : set.members) {
        l = std::lcm(l, cfg.divisor(c.id).mult);
    }
    return l;
}

struct OracleRun
{
    long long level = 0;
    std::vector<long long> primes;
    std::optional<long long> modulus; // primes restricted to q ≡ 1 mod modulus
    std::vector<CountReport> counts;
};

OracleRun run_oracle(const JobSpec& job, const Polynomial& f, const SncConfiguration* cfg)
{
    OracleRun run;
    run.level = job.level > 0 ? job.level : job.m;
    run.primes = prime_pool(job);
    if (job.split) {
        if (!cfg) {
            throw PreconditionError("--split needs a resolution to know the cover degrees");
        }
        long long mod = lcm_of_contributors(*cfg, contributing_set(*cfg, {}, job.m));
        run.modulus = mod;
        std::vector<long long> kept;
        for (long long q : run.primes) {
            if ((q - 1) % mod == 0) {
                kept.push_back(q);
            }
        }
        run.primes = kept;
    }
    CountOptions options;
    options.threads = std::max(1U, job.threads);
    options.node_cap = node_cap();
    options.tail = job.enumerate_tail ? TailMode::enumerate : TailMode::multiply;
    for (long long q : run.primes) {
        run.counts.push_back(contact_count(f, job.m, run.level, static_cast<std::uint32_t>(q), options));
    }
    if (!job.csv.empty()) {
        std::ofstream csv(job.csv);
        if (!csv) {
            throw ValidationError("cannot write " + job.csv);
        }
        csv << counts_csv(run.counts);
    }
    return run;
}

// Expected dimension and known power of q for the counts at level l.
std::pair<long long, long long> count_shape(const SncConfiguration& cfg, long long m, long long l)
{
    auto set = contributing_set(cfg, {}, m);
    long long dim = 0;
    std::optional<long long> power;
    const long long d = cfg.ambient_dim;
    for (const auto& c : set.members) {
        const Divisor& div = cfg.divisor(c.id);
        dim = std::max(dim, stratum_dimension(cfg, c.id, m, l));
        long long pw = d * l - c.k * div.disc;
        power = power ? std::min(*power, pw) : pw;
    }
    return {dim, std::max(0LL, power.value_or(0))};
}

std::string verdict_text(std::optional<bool> pass)
{
    if (!pass) {
        return "INCONCLUSIVE";
    }
    return *pass ? "PASS" : "FAIL";
}

int cmd_validate(const JobSpec& job, std::ostream& out)
{
    Input in = load_input(job);
    auto report = validate_configuration(in.cfg);
    if (json_output(job)) {
        out << to_json(report).dump(2) << "\n";
    } else if (report.issues.empty()) {
        out << "valid\n";
    } else {
        for (const auto& issue : report.issues) {
            out << (issue.severity == Severity::error ? "error: " : "warning: ") << issue.subject << ": "
                << issue.message << "\n";
        }
    }
    return report.valid() ? 0 : 1;
}

int cmd_resolve(const JobSpec& job, std::ostream& out)
{
    Input in = load_input(job);
    if (json_output(job)) {
        Json doc{{"configuration", to_json(in.cfg)}};
        if (in.log) {
            doc["log"] = to_json(*in.log);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << in.description << "\n";
    out << render_configuration(in.cfg);
    if (in.log) {
        std::vector<std::vector<std::string>> rows{{"step", "center", "through", "strict mult", "new", "m", "nu"}};
        for (const auto& s : in.log->steps) {
            std::string through;
            for (int id : s.through) {
                through += (through.empty() ? "" : ",") + std::to_string(id);
            }
            rows.push_back({std::to_string(s.step), s.center, through.empty() ? "-" : through,
                            std::to_string(s.strict_multiplicity), std::to_string(s.new_divisor),
                            std::to_string(s.mult), std::to_string(s.disc)});
        }
        out << render_table(rows);
    }
    return 0;
}

int cmd_separate(const JobSpec& job, std::ostream& out)
{
    Input in = load_input(job);
    if (job.m < 1) {
        throw ValidationError("--m ≥ 1 required");
    }
    auto result = separate(in.cfg, job.m);
    if (json_output(job)) {
        out << to_json(result).dump(2) << "\n";
        return 0;
    }
    out << "m = " << job.m << ": " << result.records.size() << " subdivision(s)\n";
    for (const auto& r : result.records) {
        out << "  pass " << r.pass << ": cell (" << r.i << "," << r.j << ") point " << r.point_index << " -> divisor "
            << r.new_divisor << " (m=" << r.mult << ", nu=" << r.disc << ")\n";
    }
    for (const auto& w : result.warnings) {
        out << "warning: " << w.subject << ": " << w.message << "\n";
    }
    out << render_configuration(result.config);
    return 0;
}

int cmd_weights(const JobSpec& job, std::ostream& out)
{
    Input in = load_input(job);
    require_valid(in.cfg);
    SncConfiguration cfg = job.m > 0 ? separate(in.cfg, job.m).config : in.cfg;
    std::string source;
    WeightVector w = choose_weights(job, cfg, cfg.divisors.size() != in.cfg.divisors.size(), source);
    auto check = check_weights(cfg, w);
    if (json_output(job)) {
        Json violations = check.violations;
        out << Json{{"weights", weights_to_json(w)},
                    {"source", source},
                    {"valid", check.valid},
                    {"violations", violations},
                    {"note", kAmplenessNote}}
                   .dump(2)
            << "\n";
    } else {
        out << "weights (" << source << "): " << weights_text(w, divisor_labels(cfg)) << "\n";
        out << (check.valid ? "valid" : "invalid") << "\n";
        for (const auto& v : check.violations) {
            out << "  " << v << "\n";
        }
        out << "note: " << kAmplenessNote << "\n";
    }
    return check.valid ? 0 : 1;
}

int cmd_e1(const JobSpec& job, std::ostream& out, bool relabel)
{
    Prepared p = prepare(job, true);
    const auto& cfg = p.separation.config;
    E1Page page = e1_page(cfg, p.weights, job.m);
    if (relabel) {
        page = mclean_relabel(page);
    }
    HcReport hc = degeneration_analysis(page);
    if (json_output(job)) {
        out << Json{{"weights", weights_to_json(p.weights)},
                    {"subdivisions", p.separation.records.size()},
                    {"page", to_json(page)},
                    {"hc", to_json(hc)}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << render_e1(page, divisor_labels(cfg));
    if (!relabel) {
        out << render_hc(hc);
    }
    return 0;
}

int cmd_hc(const JobSpec& job, std::ostream& out)
{
    Prepared p = prepare(job, true);
    const auto& cfg = p.separation.config;
    E1Page page = e1_page(cfg, p.weights, job.m);
    HcReport hc = degeneration_analysis(page);
    std::optional<GapAnalysis> gap;
    if (job.gap) {
        gap = gap_analysis(cfg, p.weights, job.m);
    }
    if (json_output(job)) {
        Json doc{{"hc", to_json(hc)}, {"note", kAmplenessNote}};
        if (gap) {
            doc["gap_analysis"] = to_json(*gap);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << render_hc(hc);
    if (gap) {
        out << "gap analysis (" << gap->label << "):\n";
        out << "  minimal weight scale with no arrow for r <= d: " << gap->minimal_scale << "\n";
        out << "  scaled weights: " << weights_text(gap->weights, divisor_labels(cfg)) << "\n";
        out << render_hc(gap->report);
    }
    return 0;
}

int cmd_zeta(const JobSpec& job, std::ostream& out)
{
    Input in = load_input(job);
    require_valid(in.cfg);
    auto z = zeta_factorization(in.cfg);
    if (json_output(job)) {
        out << to_json(z).dump(2) << "\n";
    } else {
        out << "zeta(t) = " << z.render() << "\n";
    }
    return 0;
}

int cmd_lefschetz(const JobSpec& job, std::ostream& out)
{
    Input in = load_input(job);
    require_valid(in.cfg);
    if (job.m < 1) {
        throw ValidationError("--m ≥ 1 required");
    }
    long long value = lefschetz_number(in.cfg, job.m);
    if (json_output(job)) {
        out << Json{{"m", job.m}, {"lefschetz", value}}.dump(2) << "\n";
    } else {
        out << "Lefschetz number of the " << job.m << "-th iterate: " << value << "\n";
    }
    return 0;
}

int cmd_check_euler(const JobSpec& job, std::ostream& out)
{
    Prepared p = prepare(job, true);
    auto check = cross_check_euler(p.separation.config, p.weights, job.m);
    if (json_output(job)) {
        out << to_json(check).dump(2) << "\n";
    } else {
        out << "chi(E1) = " << check.page_euler << ", Lefschetz = " << check.lefschetz << ": "
            << (check.pass ? "PASS" : "FAIL") << "\n";
    }
    return check.pass ? 0 : 1;
}

int cmd_oracle_count(const JobSpec& job, std::ostream& out)
{
    if (job.m < 1) {
        throw ValidationError("--m ≥ 1 required");
    }
    Polynomial f = load_polynomial(job);
    std::optional<SncConfiguration> cfg;
    if (job.split) {
        cfg = load_input(job).cfg;
    }
    auto run = run_oracle(job, f, cfg ? &*cfg : nullptr);
    if (json_output(job)) {
        Json counts = Json::array();
        for (const auto& c : run.counts) {
            counts.push_back(to_json(c));
        }
        Json doc{{"counts", counts}};
        if (run.modulus) {
            doc["congruence"] = "q ≡ 1 mod " + std::to_string(*run.modulus);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (run.modulus) {
        out << "primes restricted to q ≡ 1 mod " << *run.modulus << "\n";
    }
    for (const auto& c : run.counts) {
        out << render_count(c);
    }
    return 0;
}

int cmd_oracle_chi(const JobSpec& job, std::ostream& out)
{
    if (job.m < 1) {
        throw ValidationError("--m ≥ 1 required");
    }
    Prepared p = prepare(job, true);
    if (!p.input.poly) {
        throw PreconditionError("oracle-chi needs --poly or --poly-json");
    }
    const auto& cfg = p.separation.config;
    auto run = run_oracle(job, *p.input.poly, &cfg);
    auto [dim, power] = count_shape(cfg, job.m, run.level);
    if (job.dim > 0 && !p.input.poly) {
        dim = job.dim;
    }
    std::vector<std::pair<long long, Integer>> samples;
    for (const auto& c : run.counts) {
        samples.emplace_back(c.q, c.total);
    }
    ChiFit fit = interpolate_chi(samples, dim, std::min(power, dim));
    if (json_output(job)) {
        Json doc{{"expected_dim", dim}, {"fit", to_json(fit)}};
        if (run.modulus) {
            doc["congruence"] = "q ≡ 1 mod " + std::to_string(*run.modulus);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (run.modulus) {
        out << "primes restricted to q ≡ 1 mod " << *run.modulus << "\n";
    }
    for (const auto& c : run.counts) {
        out << "q = " << c.q << ": N = " << c.total.str() << "\n";
    }
    out << "fit: " << series_text(fit.coefficients) << " (degree " << fit.degree << ", expected " << dim << ")\n";
    out << "chi estimate = " << to_string(fit.chi) << ": " << fit.verdict << "\n";
    return 0;
}

int cmd_verify_fibration(const JobSpec& job, std::ostream& out)
{
    if (job.m < 0) {
        throw ValidationError("--m ≥ 0 required");
    }
    const int d = job.dim > 0 ? job.dim : 2;
    const long long l = job.level > 0 ? job.level : job.m;
    bool all = true;
    Json results = Json::array();
    for (long long q : prime_pool(job)) {
        auto check = verify_chart_fibration(job.m, l, static_cast<std::uint32_t>(q), d, job.nu, node_cap());
        all = all && check.pass;
        if (json_output(job)) {
            Json r = to_json(check);
            r["q"] = q;
            results.push_back(r);
            continue;
        }
        out << "d = " << d << ", nu = " << job.nu << ", m = " << job.m << ", l = " << l << ", q = " << q
            << ": expected fiber " << check.expected_fiber.str() << ", histogram";
        for (const auto& [size, images] : check.histogram) {
            out << " " << size << "x" << images;
        }
        out << ": " << (check.pass ? "PASS" : "FAIL") << "\n";
    }
    if (json_output(job)) {
        out << Json{{"pass", all}, {"results", results}}.dump(2) << "\n";
    }
    return all ? 0 : 1;
}

int cmd_report(const JobSpec& job, std::ostream& out)
{
    Prepared p = prepare(job, true);
    const auto& cfg = p.separation.config;
    const auto labels = divisor_labels(cfg);
    auto set = contributing_set(cfg, p.weights, job.m);
    E1Page page = e1_page(cfg, p.weights, job.m);
    HcReport hc = degeneration_analysis(page);
    auto euler = cross_check_euler(cfg, p.weights, job.m);
    auto zeta = zeta_factorization(cfg);

    std::optional<bool> multiplicity_pass;
    std::map<long long, long long> prediction;
    if (p.input.poly && job.m == p.input.poly->order()) {
        try {
            prediction = multiplicity_case_prediction(cfg.ambient_dim, job.m,
                                                      milnor_betti_from_initial_form(*p.input.poly));
            std::map<long long, long long> exact;
            bool determined = true;
            for (const auto& [n, dr] : hc.degrees) {
                if (dr.status == RankStatus::bounds) {
                    determined = false;
                }
                if (dr.lo > 0) {
                    exact[n] = dr.lo;
                }
            }
            if (determined) {
                multiplicity_pass = exact == prediction;
            }
        } catch (const UnsupportedError&) {
        }
    }

    std::optional<OracleRun> oracle;
    std::optional<ChiFit> fit;
    std::optional<bool> chi_pass;
    std::optional<bool> degree_pass;
    long long expected_dim = 0;
    std::string oracle_skipped;
    if (p.input.poly) {
        try {
            oracle = run_oracle(job, *p.input.poly, &cfg);
        } catch (const ResourceError& e) {
            oracle_skipped = e.what();
        }
    }
    if (oracle) {
        std::vector<std::pair<long long, Integer>> samples;
        bool all_zero = true;
        for (const auto& c : oracle->counts) {
            samples.emplace_back(c.q, c.total);
            all_zero = all_zero && c.total == 0;
        }
        if (set.members.empty()) {
            chi_pass = all_zero && euler.lefschetz == 0;
            degree_pass = all_zero;
        } else {
            auto [dim, power] = count_shape(cfg, job.m, oracle->level);
            expected_dim = dim;
            fit = interpolate_chi(samples, dim, std::min(power, dim));
            if (fit->polynomial) {
                chi_pass = fit->chi == Rational(euler.lefschetz);
                degree_pass = fit->degree == dim;
            }
        }
    }
    bool failed = !euler.pass || (multiplicity_pass && !*multiplicity_pass) || (chi_pass && !*chi_pass) ||
                  (degree_pass && !*degree_pass);

    if (json_output(job)) {
        Json doc{{"input", p.input.description},
                 {"m", job.m},
                 {"configuration", to_json(cfg)},
                 {"subdivisions", to_json(p.separation)["subdivisions"]},
                 {"weights", weights_to_json(p.weights)},
                 {"weight_source", p.weight_source},
                 {"note", kAmplenessNote},
                 {"contributing_set", to_json(set)},
                 {"page", to_json(page)},
                 {"hc", to_json(hc)},
                 {"euler_check", to_json(euler)},
                 {"zeta", to_json(zeta)}};
        if (!set.members.empty()) {
            doc["stabilization_level"] = stabilization_level(cfg, job.m);
        }
        if (multiplicity_pass) {
            Json pred = Json::object();
            for (const auto& [n, r] : prediction) {
                pred[std::to_string(n)] = r;
            }
            doc["multiplicity_case"] = Json{{"prediction", pred}, {"pass", *multiplicity_pass}};
        }
        if (oracle) {
            Json counts = Json::array();
            for (const auto& c : oracle->counts) {
                counts.push_back(to_json(c));
            }
            doc["oracle"] = Json{{"level", oracle->level}, {"counts", counts}, {"expected_dim", expected_dim}};
            if (oracle->modulus) {
                doc["oracle"]["congruence"] = "q ≡ 1 mod " + std::to_string(*oracle->modulus);
            }
            if (fit) {
                doc["oracle"]["fit"] = to_json(*fit);
            }
            doc["oracle"]["chi_check"] = verdict_text(chi_pass);
            doc["oracle"]["degree_check"] = verdict_text(degree_pass);
        } else if (!oracle_skipped.empty()) {
            doc["oracle"] = Json{{"skipped", oracle_skipped}};
        }
        doc["verdict"] = failed ? "FAIL" : "PASS";
        out << doc.dump(2) << "\n";
        return failed ? 1 : 0;
    }

    out << p.input.description << ", m = " << job.m << "\n";
    out << "divisors: " << cfg.divisors.size() << ", subdivisions for m-separation: " << p.separation.records.size()
        << "\n";
    out << "weights (" << p.weight_source << "): " << weights_text(p.weights, labels) << "\n";
    out << "note: " << kAmplenessNote << "\n";
    out << "contributing set:";
    if (set.members.empty()) {
        out << " (empty)";
    }
    for (const auto& c : set.members) {
        out << " " << labels.at(c.id) << "(k=" << c.k << ", p=" << c.p
            << ", dim=" << stratum_dimension(cfg, c.id, job.m) << ")";
    }
    out << "\n";
    if (!set.members.empty()) {
        out << "stabilization level: " << stabilization_level(cfg, job.m) << "\n";
    }
    out << render_e1(page, labels);
    out << render_hc(hc);
    out << "zeta(t) = " << zeta.render() << "\n";
    out << "Lefschetz number = " << euler.lefschetz << ", chi(E1) = " << euler.page_euler << ": "
        << (euler.pass ? "PASS" : "FAIL") << "\n";
    if (multiplicity_pass) {
        out << "multiplicity case prediction:";
        for (const auto& [n, r] : prediction) {
            out << " H_c^" << n << " rank " << r;
        }
        out << ": " << (*multiplicity_pass ? "PASS" : "FAIL") << "\n";
    }
    if (oracle) {
        if (oracle->modulus) {
            out << "oracle primes restricted to q ≡ 1 mod " << *oracle->modulus << "\n";
        }
        out << "oracle counts (l = " << oracle->level << "):";
        for (const auto& c : oracle->counts) {
            out << " q=" << c.q << ":" << c.total.str();
        }
        out << "\n";
        if (fit) {
            out << "oracle fit: " << series_text(fit->coefficients) << ", chi = " << to_string(fit->chi) << " ("
                << fit->verdict << ")\n";
        }
        out << "oracle chi check: " << verdict_text(chi_pass) << "\n";
        out << "oracle degree check (expected " << expected_dim << "): " << verdict_text(degree_pass) << "\n";
    } else if (!oracle_skipped.empty()) {
        out << "oracle skipped: " << oracle_skipped << "\n";
    }
    out << "verdict: " << (failed ? "FAIL" : "PASS") << "\n";
    return failed ? 1 : 0;
}

void add_input(CLI::App* sub, JobSpec& job)
{
    sub->add_option("--poly", job.poly, "polynomial expression, e.g. \"x^2 + y^3\"");
    sub->add_option("--poly-json", job.poly_json, "polynomial as a sparse-monomial JSON file");
    sub->add_option("--config", job.config, "configuration JSON file");
    sub->add_option("--dim", job.dim, "ambient dimension for polynomial input (or d for verify-fibration)");
    sub->add_option("--format", job.format, "table or json")->check(CLI::IsMember({"table", "json"}));
}

void add_weights(CLI::App* sub, JobSpec& job)
{
    sub->add_option("--weights", job.weights, "weight override: id:w,id:w or a JSON object");
    sub->add_option("--weight-scale", job.weight_scale, "multiply the weights by this factor")->check(CLI::PositiveNumber);
}

void add_oracle(CLI::App* sub, JobSpec& job)
{
    sub->add_option("--primes", job.primes, "comma-separated primes")->delimiter(',');
    sub->add_option("--level", job.level, "jet level l ≥ m (default m)");
    sub->add_option("--threads", job.threads, "worker threads for enumeration");
    sub->add_flag("--split,--congruence", job.split, "keep only primes q ≡ 1 mod lcm of contributing multiplicities");
    sub->add_option("--csv", job.csv, "write (q, N) pairs to this CSV file");
    sub->add_flag("--enumerate-tail", job.enumerate_tail, "enumerate every level instead of multiplying the tail");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    JobSpec job;
    CLI::App app{"Contact loci of hypersurface singularities: E1 pages, degeneration bounds and oracles"};
    app.name(args.empty() ? "contact" : args[0]);
    app.require_subcommand(1, 1);

    auto* validate = app.add_subcommand("validate", "check a configuration against the model invariants");
    auto* resolve = app.add_subcommand("resolve", "embedded resolution of a plane curve germ");
    auto* separate_cmd = app.add_subcommand("separate", "m-separate a configuration");
    auto* weights = app.add_subcommand("weights", "solve or validate a weight vector");
    auto* e1 = app.add_subcommand("e1", "first page of the spectral sequence");
    auto* hc = app.add_subcommand("hc", "compactly supported cohomology: exact values and bounds");
    auto* mclean = app.add_subcommand("mclean", "E1 page with the total degree shifted by -(2dm+d-1)");
    auto* zeta = app.add_subcommand("zeta", "monodromy zeta function");
    auto* lefschetz = app.add_subcommand("lefschetz", "Lefschetz number of the m-th monodromy iterate");
    auto* check_euler = app.add_subcommand("check-euler", "compare chi(E1) with the Lefschetz number");
    auto* oracle_count = app.add_subcommand("oracle-count", "count m-contact jets over finite fields");
    auto* oracle_chi = app.add_subcommand("oracle-chi", "fit counts in q and evaluate at q = 1");
    auto* fibration = app.add_subcommand("verify-fibration", "check the chart fibration fiber sizes");
    auto* report = app.add_subcommand("report", "full pipeline with cross-checks and oracle");

    for (auto* sub : {validate, resolve, separate_cmd, weights, e1, hc, mclean, zeta, lefschetz, check_euler,
                      oracle_count, oracle_chi, fibration, report}) {
        add_input(sub, job);
    }
    for (auto* sub : {separate_cmd, weights, e1, hc, mclean, lefschetz, check_euler, oracle_count, oracle_chi,
                      fibration, report}) {
        sub->add_option("--m", job.m, "contact order m");
    }
    for (auto* sub : {weights, e1, hc, mclean, check_euler, oracle_chi, report}) {
        add_weights(sub, job);
    }
    for (auto* sub : {oracle_count, oracle_chi, report}) {
        add_oracle(sub, job);
    }
    fibration->add_option("--primes", job.primes, "comma-separated primes")->delimiter(',');
    fibration->add_option("--level", job.level, "jet level l ≥ m (default m)");
    fibration->add_option("--nu", job.nu, "discrepancy nu of the chart (1 ≤ nu ≤ d)");
    hc->add_flag("--gap-analysis", job.gap, "smallest weight scale that forces rational degeneration");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    if (argv.empty()) {
        argv.push_back("contact");
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(job, out);
        }
        if (resolve->parsed()) {
            return cmd_resolve(job, out);
        }
        if (separate_cmd->parsed()) {
            return cmd_separate(job, out);
        }
        if (weights->parsed()) {
            return cmd_weights(job, out);
        }
        if (e1->parsed()) {
            return cmd_e1(job, out, false);
        }
        if (hc->parsed()) {
            return cmd_hc(job, out);
        }
        if (mclean->parsed()) {
            return cmd_e1(job, out, true);
        }
        if (zeta->parsed()) {
            return cmd_zeta(job, out);
        }
        if (lefschetz->parsed()) {
            return cmd_lefschetz(job, out);
        }
        if (check_euler->parsed()) {
            return cmd_check_euler(job, out);
        }
        if (oracle_count->parsed()) {
            return cmd_oracle_count(job, out);
        }
        if (oracle_chi->parsed()) {
            return cmd_oracle_chi(job, out);
        }
        if (fibration->parsed()) {
            return cmd_verify_fibration(job, out);
        }
        if (report->parsed()) {
            return cmd_report(job, out);
        }
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace contact
