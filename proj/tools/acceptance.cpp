// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "contact/curve_builder.hpp"
#include "contact/errors.hpp"
#include "contact/expression.hpp"
#include "contact/jet_oracle.hpp"
#include "contact/lefschetz.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"
#include "contact/weights.hpp"

using namespace contact;

namespace
{

struct Verdict
{
    bool pass = true;
    std::vector<std::string> failures;
    std::string summary;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

struct Prepared
{
    Polynomial f;
    SncConfiguration cfg;
    WeightVector weights;
};

Polynomial plane(const std::string& text)
{
    return parse_polynomial(text, 2);
}

SncConfiguration resolve(const Polynomial& f)
{
    return f.nvars() == 1 ? resolve_univariate(f) : resolve_plane_curve(f).config;
}

Prepared prepare(const std::string& text, long long m, int nvars = 2)
{
    Prepared p{parse_polynomial(text, nvars), {}, {}};
    p.cfg = separate(resolve(p.f), m).config;
    p.weights = p.cfg.ambient_dim == 2 ? solve_weights(p.cfg) : WeightVector{};
    return p;
}

Integer count(const Polynomial& f, long long m, long long l, long long q)
{
    return contact_count(f, m, l, static_cast<std::uint32_t>(q), {}).total;
}

Integer power(long long q, long long e)
{
    Integer r = 1;
    for (long long i = 0; i < e; ++i) {
        r *= q;
    }
    return r;
}

// The single nonzero degree of `hc`, or nothing.
std::optional<std::pair<long long, DegreeReport>> only_degree(const HcReport& hc)
{
    if (hc.degrees.size() != 1) {
        return std::nullopt;
    }
    return *hc.degrees.begin();
}

bool exact_free(const DegreeReport& r, long long rank)
{
    return r.status == RankStatus::exact && r.lo == rank && r.hi == rank && r.integral_exact && r.torsion.empty();
}

std::string str(const Integer& n)
{
    return n.str();
}

Verdict criterion_power_family()
{
    Verdict v;
    const std::vector<std::pair<long long, long long>> cases{{2, 2}, {2, 4}, {3, 6}, {5, 5}, {3, 5}};
    for (const auto& [r, m] : cases) {
        const std::string tag = "(r,m)=(" + std::to_string(r) + "," + std::to_string(m) + ")";
        auto p = prepare("x^" + std::to_string(r), m, 1);
        auto hc = degeneration_analysis(e1_page(p.cfg, p.weights, m));
        if (m % r == 0) {
            auto only = only_degree(hc);
            const long long degree = 2 * (m - m / r);
            v.require(only && only->first == degree && exact_free(only->second, r),
                      tag + ": H_c^" + std::to_string(degree) + " not exactly Z^" + std::to_string(r));
        } else {
            v.require(hc.degrees.empty(), tag + ": H_c not zero");
        }
        for (long long q : {3, 5, 7, 11, 13}) {
            Integer expected = 0;
            if (m % r == 0) {
                expected = std::gcd(r, q - 1) * power(q, m - m / r);
            }
            Integer got = count(p.f, m, m, q);
            v.require(got == expected, tag + " q=" + std::to_string(q) + ": count " + str(got) + " != " + str(expected));
        }
    }
    v.summary = "x^r for 5 (r,m) pairs, counts at q in {3,5,7,11,13}";
    return v;
}

Verdict criterion_cusp_two()
{
    Verdict v;
    auto p = prepare("x^2 + y^3", 2);
    auto page = e1_page(p.cfg, p.weights, 2);
    std::set<long long> columns;
    for (const auto& [pq, entry] : page.entries) {
        if (entry.nonzero()) {
            columns.insert(pq.first);
        }
    }
    v.require(columns.size() == 1, "page has " + std::to_string(columns.size()) + " nonzero columns");
    auto hc = degeneration_analysis(page);
    auto only = only_degree(hc);
    v.require(only && only->first == 6 && exact_free(only->second, 2), "H_c^6 not exactly Z^2");
    auto fiber = milnor_betti_from_initial_form(p.f);
    v.require(fiber == std::vector<long long>{2}, "initial-form Milnor fiber Betti numbers differ from b0 = 2");
    auto predicted = multiplicity_case_prediction(2, 2, fiber);
    std::map<long long, long long> observed;
    for (const auto& [n, r] : hc.degrees) {
        observed[n] = r.lo;
    }
    v.require(predicted == observed, "multiplicity-case prediction disagrees with H_c");
    for (long long q : {3, 5, 7, 11}) {
        Integer got = count(p.f, 2, 2, q);
        v.require(got == 2 * power(q, 3), "q=" + std::to_string(q) + ": count " + str(got) + " != 2q^3");
    }
    v.summary = "single column, H_c^6 = Z^2 = prediction, N = 2q^3";
    return v;
}

Verdict criterion_cusp_three()
{
    Verdict v;
    auto p = prepare("x^2 + y^3", 3);
    auto hc = degeneration_analysis(e1_page(p.cfg, p.weights, 3));
    auto only = only_degree(hc);
    v.require(only && only->first == 8 && exact_free(only->second, 3), "H_c^8 not exactly Z^3");
    for (long long q : {7, 13}) {
        Integer got = count(p.f, 3, 3, q);
        v.require(got == 3 * power(q, 4), "q=" + std::to_string(q) + ": count " + str(got) + " != 3q^4");
    }
    v.summary = "H_c^8 = Z^3, N = 3q^4 at q in {7,13}";
    return v;
}

Verdict criterion_cusp_six()
{
    Verdict v;
    auto p = prepare("x^2 + y^3", 6);
    auto page = e1_page(p.cfg, p.weights, 6);
    const long long page_chi = page.euler();
    const long long lefschetz = lefschetz_number(p.cfg, 6);
    v.require(page_chi == -1, "chi(E1) = " + std::to_string(page_chi));
    v.require(lefschetz == -1, "Lefschetz number = " + std::to_string(lefschetz));
    auto hc = degeneration_analysis(page);
    v.require(hc.degrees.count(16) && exact_free(hc.degrees.at(16), 1), "H_c^16 not exactly Z");
    // Some choice of ranks inside the bounds must reproduce chi.
    long long lo = 0;
    long long hi = 0;
    for (const auto& [n, r] : hc.degrees) {
        v.require(r.lo >= 0 && r.lo <= r.hi && r.hi <= r.e1_rank, "degree " + std::to_string(n) + ": bad bounds");
        const long long sign = n % 2 == 0 ? 1 : -1;
        lo += sign > 0 ? r.lo : -r.hi;
        hi += sign > 0 ? r.hi : -r.lo;
    }
    v.require(lo <= -1 && -1 <= hi, "no ranks within the bounds give chi = -1");
    for (long long n : {14, 15}) {
        v.require(hc.degrees.count(n) && hc.degrees.at(n).status == RankStatus::bounds,
                  "degree " + std::to_string(n) + " not reported as bounds");
    }
    std::ostringstream s;
    s << "chi(E1) = " << page_chi << ", Lefschetz = " << lefschetz << ", H_c^14 in [" << hc.degrees[14].lo << ","
      << hc.degrees[14].hi << "], H_c^15 in [" << hc.degrees[15].lo << "," << hc.degrees[15].hi << "]";
    v.summary = s.str();
    return v;
}

Verdict criterion_node()
{
    Verdict v;
    const Polynomial f = plane("x*y");
    for (long long m : {1, 3, 5}) {
        auto p = prepare("x*y", m);
        auto page = e1_page(p.cfg, p.weights, m);
        bool empty = std::none_of(page.entries.begin(), page.entries.end(),
                                  [](const auto& e) { return e.second.nonzero(); });
        v.require(empty, "m=" + std::to_string(m) + ": E1 page is not empty");
        for (long long q : {3, 5, 7}) {
            Integer got = count(f, m, m, q);
            v.require(got == 0, "m=" + std::to_string(m) + " q=" + std::to_string(q) + ": count " + str(got) + " != 0");
        }
    }
    auto p = prepare("x*y", 2);
    auto hc = degeneration_analysis(e1_page(p.cfg, p.weights, 2));
    v.require(hc.degrees.size() == 2 && hc.degrees.count(5) && hc.degrees.count(6) &&
                  exact_free(hc.degrees.at(5), 1) && exact_free(hc.degrees.at(6), 1),
              "m=2: H_c^5 = H_c^6 = Z fails");
    v.require(lefschetz_number(p.cfg, 2) == 0, "m=2: Lefschetz number nonzero");
    for (long long q : {3, 5, 7}) {
        Integer got = count(f, 2, 2, q);
        v.require(got == (q - 1) * power(q, 2), "m=2 q=" + std::to_string(q) + ": count " + str(got));
    }
    v.summary = "odd m in {1,3,5} empty and zero; m = 2 gives Z in degrees 5, 6";
    return v;
}

const std::vector<std::string> kSuite{"x^2 + y^3", "x*y", "x^3 + y^4", "x^2 + y^5"};

Verdict criterion_separation()
{
    Verdict v;
    for (const auto& text : kSuite) {
        auto base = resolve(plane(text));
        const auto zeta = zeta_factorization(base).reduced;
        for (long long m = 1; m <= 12; ++m) {
            const std::string tag = text + " m=" + std::to_string(m);
            auto result = separate(base, m);
            const auto& cfg = result.config;
            v.require(is_m_separating(cfg, m), tag + ": output not m-separating");
            for (const auto& r : result.records) {
                const auto& a = cfg.divisor(r.i);
                const auto& b = cfg.divisor(r.j);
                const auto& n = cfg.divisor(r.new_divisor);
                v.require(n.mult == a.mult + b.mult && n.disc == a.disc + b.disc,
                          tag + ": divisor " + std::to_string(r.new_divisor) + " breaks (m, nu) additivity");
            }
            for (long long k = 1; k <= 12; ++k) {
                v.require(lefschetz_number(cfg, k) == lefschetz_number(base, k),
                          tag + ": Lefschetz number of iterate " + std::to_string(k) + " changed");
            }
            v.require(zeta_factorization(cfg).reduced == zeta, tag + ": reduced zeta changed");
            auto again = separate(cfg, m);
            v.require(again.records.empty() && again.config == cfg, tag + ": separation not idempotent");
        }
    }
    v.summary = "4 curves x m <= 12";
    return v;
}

Verdict criterion_weights()
{
    Verdict v;
    long long configurations = 0;
    for (const auto& text : kSuite) {
        auto base = resolve(plane(text));
        for (long long m = 1; m <= 12; ++m) {
            const std::string tag = text + " m=" + std::to_string(m);
            auto cfg = separate(base, m).config;
            auto w = solve_weights(cfg);
            v.require(validate_weights(cfg, w), tag + ": solver weights invalid");
            std::vector<WeightVector> family{w, scale_weights(w, 2), scale_weights(w, 7)};
            // A non-proportional choice: bump one weight of 3w while it stays valid.
            for (const auto& [id, value] : w) {
                WeightVector bumped = scale_weights(w, 3);
                bumped[id] += 1;
                if (validate_weights(cfg, bumped)) {
                    family.push_back(bumped);
                    break;
                }
            }
            std::set<WeightVector> distinct(family.begin(), family.end());
            v.require(distinct.size() >= 3, tag + ": fewer than 3 distinct weight vectors");
            const auto content = page_content(e1_page(cfg, w, m));
            for (const auto& alt : family) {
                v.require(validate_weights(cfg, alt), tag + ": alternative weights invalid");
                v.require(page_content(e1_page(cfg, alt, m)) == content, tag + ": E1 content depends on weights");
            }
            ++configurations;
        }
    }
    v.summary = std::to_string(configurations) + " configurations, >= 3 weight vectors each";
    return v;
}

Verdict criterion_euler()
{
    Verdict v;
    long long checks = 0;
    for (int a = 2; a <= 5; ++a) {
        for (int b = a; b <= 5; ++b) {
            const std::string text = "x^" + std::to_string(a) + " + y^" + std::to_string(b);
            auto base = resolve(plane(text));
            for (long long m = 1; m <= 12; ++m) {
                auto cfg = separate(base, m).config;
                auto check = cross_check_euler(cfg, solve_weights(cfg), m);
                v.require(check.pass, text + " m=" + std::to_string(m) + ": chi(E1) = " +
                                          std::to_string(check.page_euler) + ", Lefschetz = " +
                                          std::to_string(check.lefschetz));
                ++checks;
            }
        }
    }
    v.summary = std::to_string(checks) + " (f, m) pairs";
    return v;
}

Verdict criterion_fibration()
{
    Verdict v;
    for (long long m : {1, 2}) {
        for (long long l : {m, m + 1}) {
            for (std::uint32_t q : {3U, 5U}) {
                auto check = verify_chart_fibration(m, l, q, 2, 2, 100000000);
                v.require(check.pass, "m=" + std::to_string(m) + " l=" + std::to_string(l) +
                                          " q=" + std::to_string(q) + ": fiber sizes differ from q^m");
            }
        }
    }
    v.summary = "d = nu = 2, m in {1,2}, l in {m,m+1}, q in {3,5}";
    return v;
}

Verdict criterion_dimensions()
{
    Verdict v;
    struct Case
    {
        std::string text;
        long long m;
        std::vector<long long> fit_primes;
        std::vector<long long> lift_primes;
    };
    const std::vector<Case> cases{{"x^2 + y^3", 2, {3, 5, 7, 11, 13}, {3, 5, 7}},
                                  {"x^2 + y^3", 3, {7, 13, 19, 31, 37, 43}, {7}},
                                  {"x*y", 2, {3, 5, 7, 11, 13}, {3, 5, 7}}};
    std::ostringstream summary;
    for (const auto& c : cases) {
        const std::string tag = c.text + " m=" + std::to_string(c.m);
        auto p = prepare(c.text, c.m);
        auto set = contributing_set(p.cfg, p.weights, c.m);
        long long dim = 0;
        for (const auto& member : set.members) {
            dim = std::max(dim, stratum_dimension(p.cfg, member.id, c.m));
        }
        std::vector<std::pair<long long, Integer>> samples;
        for (long long q : c.fit_primes) {
            samples.emplace_back(q, count(p.f, c.m, c.m, q));
        }
        auto fit = interpolate_chi(samples, dim);
        v.require(fit.polynomial && fit.degree == dim, tag + ": fitted degree " + std::to_string(fit.degree) +
                                                           " != stratum dimension " + std::to_string(dim));
        for (long long q : c.lift_primes) {
            Integer low = count(p.f, c.m, c.m, q);
            Integer high = count(p.f, c.m, c.m + 1, q);
            v.require(high == low * power(q, 2), tag + " q=" + std::to_string(q) + ": count(m+1) = " + str(high) +
                                                     " != count(m) q^2 = " + str(low * power(q, 2)));
        }
        summary << (summary.tellp() > 0 ? "; " : "") << tag << " degree " << fit.degree;
    }
    v.summary = summary.str();
    return v;
}

struct Criterion
{
    int number;
    const char* name;
    std::optional<double> budget_seconds;
    std::function<Verdict()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "power family x^r", 1.0, criterion_power_family},
        {2, "cusp m = 2 multiplicity case", 1.0, criterion_cusp_two},
        {3, "cusp m = 3", 5.0, criterion_cusp_three},
        {4, "cusp m = 6 Euler and bounds", 1.0, criterion_cusp_six},
        {5, "node suite", 1.0, criterion_node},
        {6, "separation properties", 5.0, criterion_separation},
        {7, "weight solver and weight independence", std::nullopt, criterion_weights},
        {8, "Euler cross-check x^p + y^q", 30.0, criterion_euler},
        {9, "chart fibration", 10.0, criterion_fibration},
        {10, "dimension checks", std::nullopt, criterion_dimensions},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds && seconds >= *c.budget_seconds) {
            std::ostringstream s;
            s << "runtime " << std::fixed << std::setprecision(2) << seconds << " s over budget " << *c.budget_seconds
              << " s";
            v.require(false, s.str());
        }
        failures += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " (" << std::fixed
                  << std::setprecision(2) << seconds << " s)";
        if (!v.summary.empty()) {
            std::cout << ": " << v.summary;
        }
        std::cout << "\n";
        for (const auto& f : v.failures) {
            std::cout << "    " << f << "\n";
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
