#include "contact/curve_builder.hpp"

#include <algorithm>
#include <set>

#include "contact/errors.hpp"

namespace contact
{

int ChartPoint::strict_multiplicity() const
{
    int s = 0;
    for (const auto& f : strict) {
        s += f.exponent * f.equation.order();
    }
    return s;
}

int ChartPoint::reduced_multiplicity() const
{
    int s = 0;
    for (const auto& f : strict) {
        s += f.equation.order();
    }
    return s;
}

bool is_snc_point(const ChartPoint& point)
{
    int s = point.reduced_multiplicity();
    if (s == 0) {
        return point.divisor_count() <= 2;
    }
    if (s != 1 || point.divisor_count() > 1) {
        return point.divisor_count() == 0 && s == 1;
    }
    if (point.divisor_count() == 0) {
        return true;
    }
    // One smooth branch and one exceptional axis: need transversality.
    for (const auto& f : point.strict) {
        if (f.equation.order() != 1) {
            continue;
        }
        Rational cu = f.equation.coefficient({1, 0});
        Rational cv = f.equation.coefficient({0, 1});
        return point.v_divisor ? cu != 0 : cv != 0;
    }
    return false;
}

namespace
{

// g(u1 * v, v) / v^s
Polynomial chart_a(const Polynomial& g, int s)
{
    Polynomial out(2);
    for (const auto& [e, c] : g.terms()) {
        out.add_term({e[0], e[0] + e[1] - s}, c);
    }
    return out;
}

// g(u, v1 * u) / u^s
Polynomial chart_b(const Polynomial& g, int s)
{
    Polynomial out(2);
    for (const auto& [e, c] : g.terms()) {
        out.add_term({e[0] + e[1] - s, e[1]}, c);
    }
    return out;
}

// g(u + t, v)
Polynomial translate_u(const Polynomial& g, const Rational& t)
{
    if (t == 0) {
        return g;
    }
    Polynomial out(2);
    for (const auto& [e, c] : g.terms()) {
        // (u + t)^a = sum_k C(a, k) t^(a-k) u^k
        Integer binom = 1;
        for (int k = 0; k <= e[0]; ++k) {
            Rational tp = 1;
            for (int r = 0; r < e[0] - k; ++r) {
                tp *= t;
            }
            out.add_term({k, e[1]}, c * Rational(binom) * tp);
            binom = binom * (e[0] - k) / (k + 1);
        }
    }
    return out;
}

// Initial form of g dehomogenized at v = 1, as a polynomial in the slope.
UPoly tangent_polynomial(const Polynomial& g, int s)
{
    std::vector<Rational> c(static_cast<std::size_t>(s) + 1);
    const Polynomial initial = g.homogeneous_part(s);
    for (const auto& [e, coef] : initial.terms()) {
        c[static_cast<std::size_t>(e[0])] += coef;
    }
    return UPoly(std::move(c));
}

std::string exceptional_label(int id)
{
    return "E" + std::to_string(id + 1);
}

void classify(BlowupChartState& state, ChartPoint point)
{
    if (point.reduced_multiplicity() == 0) {
        return; // only exceptional axes through it, already recorded as a cell
    }
    if (is_snc_point(point)) {
        const StrictFactor* branch = nullptr;
        for (const auto& f : point.strict) {
            if (f.equation.order() == 1) {
                branch = &f;
            }
        }
        int meets = point.u_divisor ? *point.u_divisor : *point.v_divisor;
        state.branches.push_back({branch->exponent, meets, 1});
        return;
    }
    state.pending.push_back(std::move(point));
}

} // namespace

BlowupChartState initial_state(const Polynomial& f)
{
    if (f.nvars() != 2) {
        throw DomainError("plane curve resolution needs a polynomial in x, y");
    }
    if (f.is_zero()) {
        throw DomainError("f must be nonzero");
    }
    if (f.constant_term() != 0) {
        throw DomainError("f must vanish at the origin");
    }
    BlowupChartState state;
    ChartPoint origin;
    origin.name = "origin";
    origin.coordinates = {Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    for (auto& [g, a] : squarefree_decomposition(f)) {
        if (g.constant_term() == 0) {
            origin.strict.push_back({g, a});
        }
    }
    state.pending.push_back(std::move(origin));
    return state;
}

BlowupChartState blowup_step(const BlowupChartState& state, const ChartPoint& center)
{
    const int e = center.divisor_count();
    const int s = center.strict_multiplicity();
    const int s_red = center.reduced_multiplicity();
    if (e == 0 && s_red == 0) {
        throw DomainError("blowup center " + center.name + " is not on the total transform");
    }
    for (const auto& f : center.strict) {
        if (f.equation.constant_term() != 0) {
            throw DomainError("strict factor does not vanish at the center " + center.name);
        }
    }

    BlowupChartState next = state;
    auto it = std::find(next.pending.begin(), next.pending.end(), center);
    if (it != next.pending.end()) {
        next.pending.erase(it);
    }

    const int id = static_cast<int>(next.exceptional.size());
    ExceptionalCurve curve;
    curve.mult = s;
    curve.disc = 2;
    for (const auto& c : center.coordinates) {
        curve.valuation.push_back(c.order());
    }
    BlowupRecord record;
    record.step = static_cast<int>(next.log.size()) + 1;
    record.center = center.name;
    record.strict_multiplicity = s;
    record.reduced_multiplicity = s_red;
    record.new_divisor = id;

    std::vector<int> through;
    for (const auto& d : {center.u_divisor, center.v_divisor}) {
        if (d) {
            through.push_back(*d);
        }
    }
    std::sort(through.begin(), through.end());
    for (int d : through) {
        auto& old = next.exceptional.at(static_cast<std::size_t>(d));
        curve.mult += old.mult;
        curve.disc += old.disc - 1;
        old.self_int -= 1;
        next.cells[{d, id}] += 1;
    }
    if (through.size() == 2) {
        auto key = std::minmax(through[0], through[1]);
        auto cell = next.cells.find({key.first, key.second});
        if (cell == next.cells.end()) {
            throw DomainError("center lies on two divisors that do not meet");
        }
        if (--cell->second == 0) {
            next.cells.erase(cell);
        }
    }
    next.exceptional.push_back(curve);
    record.through = through;
    record.mult = curve.mult;
    record.disc = curve.disc;
    next.log.push_back(record);

    const std::string base = exceptional_label(id);

    // Slopes of the strict transform along the new divisor.
    struct FactorData
    {
        UPoly slope;
        Polynomial in_a{2};
        Polynomial in_b{2};
        bool at_infinity = false;
        int exponent = 1;
    };
    std::vector<FactorData> data;
    std::set<Rational> finite;
    for (const auto& f : center.strict) {
        int sj = f.equation.order();
        FactorData fd;
        fd.slope = tangent_polynomial(f.equation, sj);
        fd.in_a = chart_a(f.equation, sj);
        fd.in_b = chart_b(f.equation, sj);
        fd.at_infinity = fd.slope.degree() < sj;
        fd.exponent = f.exponent;
        for (const auto& [root, mult] : rational_roots(fd.slope)) {
            finite.insert(root);
        }
        data.push_back(std::move(fd));
    }
    if (center.u_divisor) {
        finite.insert(Rational(0));
    }

    for (const Rational& t : finite) {
        ChartPoint p;
        p.name = base + "[" + to_string(t) + "]";
        for (const auto& fd : data) {
            if (fd.slope(t) == 0) {
                p.strict.push_back({translate_u(fd.in_a, t), fd.exponent});
            }
        }
        for (const auto& c : center.coordinates) {
            p.coordinates.push_back(translate_u(chart_a(c, 0), t));
        }
        p.v_divisor = id;
        if (t == 0 && center.u_divisor) {
            p.u_divisor = center.u_divisor;
        }
        classify(next, std::move(p));
    }

    // Conjugate clusters of non-rational slopes.
    std::vector<UPoly> irrational(data.size());
    for (std::size_t j = 0; j < data.size(); ++j) {
        UPoly rest = data[j].slope;
        for (const auto& [root, mult] : rational_roots(rest)) {
            UPoly lin(std::vector<Rational>{-root, Rational(1)});
            for (int k = 0; k < mult; ++k) {
                rest = divmod(rest, lin).first;
            }
        }
        irrational[j] = rest;
    }
    for (std::size_t j = 0; j < data.size(); ++j) {
        if (irrational[j].degree() <= 0) {
            continue;
        }
        bool simple = gcd(irrational[j], irrational[j].derivative()).degree() == 0;
        for (std::size_t k = 0; k < data.size() && simple; ++k) {
            if (k != j && gcd(irrational[j], data[k].slope).degree() > 0) {
                simple = false;
            }
        }
        if (!simple) {
            throw UnsupportedError("non-rational infinitely near point on " + base +
                                   " needs further blowups (slope polynomial " +
                                   irrational[j].to_string() + ")");
        }
        next.branches.push_back({data[j].exponent, id, irrational[j].degree()});
    }

    bool infinity = center.v_divisor.has_value() ||
                    std::any_of(data.begin(), data.end(), [](const auto& fd) { return fd.at_infinity; });
    if (infinity) {
        ChartPoint p;
        p.name = base + "[inf]";
        for (const auto& fd : data) {
            if (fd.at_infinity) {
                p.strict.push_back({fd.in_b, fd.exponent});
            }
        }
        for (const auto& c : center.coordinates) {
            p.coordinates.push_back(chart_b(c, 0));
        }
        p.u_divisor = id;
        p.v_divisor = center.v_divisor;
        classify(next, std::move(p));
    }
    return next;
}

SncConfiguration to_configuration(const BlowupChartState& state)
{
    SncConfiguration cfg;
    cfg.ambient_dim = 2;
    cfg.sigma_label = "origin";
    const int n = static_cast<int>(state.exceptional.size());
    for (int i = 0; i < n; ++i) {
        const auto& c = state.exceptional[static_cast<std::size_t>(i)];
        Divisor d;
        d.id = i;
        d.label = exceptional_label(i);
        d.mult = c.mult;
        d.disc = c.disc;
        d.exceptional = true;
        d.over_sigma = true;
        d.genus = 0;
        d.self_int = c.self_int;
        cfg.divisors.push_back(d);
    }
    for (const auto& [key, count] : state.cells) {
        cfg.cells.push_back({{key.first, key.second}, count, true});
    }
    for (std::size_t k = 0; k < state.branches.size(); ++k) {
        const auto& b = state.branches[k];
        Divisor d;
        d.id = n + static_cast<int>(k);
        d.label = "D" + std::to_string(k + 1);
        d.mult = b.mult;
        d.disc = 1;
        d.exceptional = false;
        d.over_sigma = false;
        d.genus = 0;
        cfg.divisors.push_back(d);
        cfg.cells.push_back({{b.meets, d.id}, b.count, true});
    }
    std::stable_sort(cfg.cells.begin(), cfg.cells.end(),
                     [](const auto& a, const auto& b) { return a.ids < b.ids; });
    return cfg;
}

CurveResolution resolve_plane_curve(const Polynomial& f, int max_blowups)
{
    BlowupChartState state = initial_state(f);
    ResolutionLog log;
    for (const auto& sf : state.pending.front().strict) {
        log.factors.emplace_back(sf.equation, sf.exponent);
    }
    if (log.factors.empty()) {
        throw DomainError("f has no factor through the origin");
    }
    int steps = 0;
    while (!state.pending.empty()) {
        if (++steps > max_blowups) {
            throw ResourceError("resolution did not finish within " + std::to_string(max_blowups) +
                                " blowups");
        }
        ChartPoint center = state.pending.front();
        state = blowup_step(state, center);
    }
    log.steps = state.log;
    for (std::size_t i = 0; i < state.exceptional.size(); ++i) {
        log.valuations[static_cast<int>(i)] = state.exceptional[i].valuation;
    }
    CurveResolution out{to_configuration(state), std::move(log)};
    require_valid(out.config);
    return out;
}

SncConfiguration power_configuration(long long r)
{
    if (r < 1) {
        throw DomainError("x^r needs r ≥ 1");
    }
    SncConfiguration cfg;
    cfg.ambient_dim = 1;
    Divisor d;
    d.id = 0;
    d.label = "P";
    d.mult = r;
    d.disc = 1;
    d.exceptional = false;
    d.over_sigma = true;
    cfg.divisors.push_back(d);
    return cfg;
}

SncConfiguration resolve_univariate(const Polynomial& f)
{
    if (f.nvars() != 1) {
        throw DomainError("univariate resolution needs a polynomial in x");
    }
    if (f.is_zero()) {
        throw DomainError("f must be nonzero");
    }
    if (f.constant_term() != 0) {
        throw DomainError("f must vanish at the origin");
    }
    return power_configuration(f.order());
}

SncConfiguration blowup_free_point(const SncConfiguration& cfg, int id)
{
    if (cfg.ambient_dim != 2) {
        throw UnsupportedError("unsupported dimension: point blowups need ambient_dim = 2");
    }
    SncConfiguration out = cfg;
    Divisor& base = out.divisor(id);
    if (base.self_int) {
        *base.self_int -= 1;
    }
    Divisor d;
    d.id = out.next_id();
    d.label = "F" + std::to_string(d.id);
    d.mult = base.mult;
    d.disc = base.disc + 1;
    d.exceptional = true;
    d.over_sigma = base.over_sigma;
    d.genus = 0;
    d.self_int = -1;
    out.cells.push_back({{id, d.id}, 1, base.over_sigma});
    out.divisors.push_back(d);
    return out;
}

} // namespace contact
