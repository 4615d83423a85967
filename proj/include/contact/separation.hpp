#pragma once

#include <optional>
#include <vector>

#include "contact/resolution_model.hpp"

namespace contact
{

// Minimum of m_sigma over all 1-cells; empty when there are none.
std::optional<long long> min_pair_multiplicity(const DualComplex& complex);

// True iff every 1-cell has m_sigma > m.
bool is_m_separating(const SncConfiguration& cfg, long long m);

// The first 1-cell (in id order) with m_sigma <= m.
std::optional<OneCell> first_unseparated_cell(const SncConfiguration& cfg, long long m);

struct SubdivisionRecord
{
    int pass = 0;
    int i = 0;
    int j = 0;
    long long point_index = 0; // index of the point within the cell at the start of the pass
    int new_divisor = 0;
    long long mult = 0;
    long long disc = 0;
    bool over_sigma = false;
    bool over_sigma_defaulted = false;

    friend bool operator==(const SubdivisionRecord&, const SubdivisionRecord&) = default;
};

struct SeparationResult
{
    SncConfiguration config;
    std::vector<SubdivisionRecord> records;
    std::vector<Issue> warnings;
};

// Blows up intersection points (stellar subdivision of 1-cells) until the
// configuration is m-separating. Each pass handles every point of every
// minimum-level cell in (min id, max id, point index) order.
SeparationResult separate(const SncConfiguration& cfg, long long m);

} // namespace contact
