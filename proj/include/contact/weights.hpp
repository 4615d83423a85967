#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contact/resolution_model.hpp"

namespace contact
{

// Divisor id -> w_i. Ids absent from the map carry weight 0.
using WeightVector = std::map<int, long long>;

struct IntersectionMatrix
{
    std::vector<int> ids; // ascending divisor ids, row/column order
    std::vector<std::vector<long long>> entries;
    std::vector<bool> diagonal_known; // false on non-exceptional rows

    long long at(int id_a, int id_b) const;
    std::size_t index(int id) const;
};

IntersectionMatrix intersection_matrix(const SncConfiguration& cfg);

// Sylvester's criterion on the exceptional block, exact.
bool exceptional_block_negative_definite(const SncConfiguration& cfg);

struct WeightCheck
{
    bool valid = true;
    std::vector<std::string> violations;
};

WeightCheck check_weights(const SncConfiguration& cfg, const WeightVector& w);
bool validate_weights(const SncConfiguration& cfg, const WeightVector& w);

// Start from 1 on every exceptional divisor, then repeatedly raise the
// lowest-id violated w_j to the least value satisfying its constraint.
WeightVector solve_weights(const SncConfiguration& cfg, long long max_iterations = 1000000);

WeightVector scale_weights(const WeightVector& w, long long factor);

// Ample is used in place of very ample; every report carries this note.
inline constexpr const char* kAmplenessNote =
    "weights certify relative ampleness (strict positivity on exceptional curves), not very ampleness";

} // namespace contact
