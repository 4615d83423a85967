#include "contact/lefschetz.hpp"

#include <sstream>

#include "contact/errors.hpp"
#include "contact/spectral.hpp"

namespace contact
{

long long lefschetz_number(const SncConfiguration& cfg, long long m)
{
    if (m < 1) {
        throw DomainError("m ≥ 1");
    }
    long long total = 0;
    for (const auto& d : cfg.divisors) {
        if (d.over_sigma && m % d.mult == 0) {
            total += d.mult * euler_open_stratum(cfg, d.id);
        }
    }
    return total;
}

ZetaFactorization zeta_factorization(const SncConfiguration& cfg)
{
    ZetaFactorization z;
    std::map<long long, long long> merged;
    for (int id : cfg.ids()) {
        const Divisor& d = cfg.divisor(id);
        if (!d.over_sigma) {
            continue;
        }
        long long e = -euler_open_stratum(cfg, id);
        z.factors.push_back({d.mult, e});
        merged[d.mult] += e;
    }
    for (const auto& [cycle, e] : merged) {
        if (e != 0) {
            z.reduced.push_back({cycle, e});
        }
    }
    return z;
}

namespace
{

std::string factor(long long cycle, long long e)
{
    std::string base = cycle == 1 ? "(1-t)" : "(1-t^" + std::to_string(cycle) + ")";
    return e == 1 ? base : base + "^" + std::to_string(e);
}

} // namespace

std::string ZetaFactorization::render() const
{
    std::string num;
    std::string den;
    for (const auto& f : reduced) {
        std::string& side = f.exponent > 0 ? num : den;
        side += factor(f.cycle, f.exponent > 0 ? f.exponent : -f.exponent);
    }
    if (num.empty() && den.empty()) {
        return "1";
    }
    if (den.empty()) {
        return num;
    }
    return (num.empty() ? "1" : num) + " / " + (den.find(")(") != std::string::npos ? "(" + den + ")" : den);
}

EulerCheck cross_check_euler(const SncConfiguration& cfg, const WeightVector& w, long long m,
                             const std::map<int, CoverHomology>& covers)
{
    EulerCheck out;
    out.page_euler = e1_page(cfg, w, m, covers).euler();
    out.lefschetz = lefschetz_number(cfg, m);
    out.pass = out.page_euler == out.lefschetz;
    return out;
}

EulerCheck cross_check_euler(const SncConfiguration& cfg, const WeightVector& w, long long m)
{
    auto set = contributing_set(cfg, w, m);
    std::vector<int> ids;
    for (const auto& c : set.members) {
        ids.push_back(c.id);
    }
    return cross_check_euler(cfg, w, m, cover_table(cfg, ids));
}

} // namespace contact
