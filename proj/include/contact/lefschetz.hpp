#pragma once

#include <map>
#include <string>
#include <vector>

#include "contact/covers.hpp"
#include "contact/resolution_model.hpp"
#include "contact/weights.hpp"

namespace contact
{

// A'Campo: sum over over_sigma divisors with m_i | m of m_i * chi(E_i°).
long long lefschetz_number(const SncConfiguration& cfg, long long m);

struct ZetaFactor
{
    long long cycle = 0;    // m_i
    long long exponent = 0; // -chi(E_i°)

    friend bool operator==(const ZetaFactor&, const ZetaFactor&) = default;
};

struct ZetaFactorization
{
    std::vector<ZetaFactor> factors; // one per over_sigma divisor, id order
    std::vector<ZetaFactor> reduced; // distinct cycle lengths, nonzero exponents, ascending

    std::string render() const; // prod (1 - t^m)^e as a quotient

    friend bool operator==(const ZetaFactorization&, const ZetaFactorization&) = default;
};

ZetaFactorization zeta_factorization(const SncConfiguration& cfg);

struct EulerCheck
{
    bool pass = false;
    long long page_euler = 0;
    long long lefschetz = 0;
};

// chi of the E1 page (through the covers) against the Lefschetz number
// (through chi(E_i°) directly).
EulerCheck cross_check_euler(const SncConfiguration& cfg, const WeightVector& w, long long m,
                             const std::map<int, CoverHomology>& covers);
EulerCheck cross_check_euler(const SncConfiguration& cfg, const WeightVector& w, long long m);

} // namespace contact
