#pragma once

#include <map>
#include <vector>

#include "contact/resolution_model.hpp"

namespace contact
{

enum class CoverSource
{
    computed,
    supplied
};

// Homology of the unramified cyclic cover of degree m_i over the open stratum.
struct CoverHomology
{
    int id = 0;
    long long components = 0;
    std::vector<long long> betti;
    std::vector<TorsionBlock> torsion;
    CoverSource source = CoverSource::computed;

    long long euler() const;

    friend bool operator==(const CoverHomology&, const CoverHomology&) = default;
};

// gcd of m_i with the multiplicities of the divisors meeting E_i.
long long cover_component_count(const SncConfiguration& cfg, int id);

CoverHomology cover_betti(const SncConfiguration& cfg, int id);

std::map<int, CoverHomology> cover_table(const SncConfiguration& cfg, const std::vector<int>& ids);

} // namespace contact
