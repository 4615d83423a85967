#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace contact
{

// Torsion of H_degree as elementary divisors, e.g. {1, {2, 4}} is Z/2 + Z/4 in H_1.
struct TorsionBlock
{
    int degree = 0;
    std::vector<long long> orders;

    friend bool operator==(const TorsionBlock&, const TorsionBlock&) = default;
};

// Homology of the cyclic cover supplied by the user when it is not
// determined by the dual graph (positive genus, dimension >= 3).
struct SuppliedCover
{
    std::optional<long long> components;
    std::vector<long long> betti;
    std::vector<TorsionBlock> torsion;

    friend bool operator==(const SuppliedCover&, const SuppliedCover&) = default;
};

struct Divisor
{
    int id = 0;
    std::string label;
    long long mult = 1;  // order of f along the divisor
    long long disc = 1;  // order of the relative canonical divisor plus one
    bool exceptional = false;
    bool over_sigma = false;
    std::optional<int> genus;          // curve case
    std::optional<long long> self_int; // curve case, exceptional divisors
    std::optional<long long> euler;    // supplied Euler characteristic of the open stratum
    std::optional<SuppliedCover> cover;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

// An irreducible component (curve case: a set of `count` points) of the
// intersection of the listed divisors.
struct IntersectionCell
{
    std::vector<int> ids;
    long long count = 1;
    std::optional<bool> over_sigma;

    friend bool operator==(const IntersectionCell&, const IntersectionCell&) = default;
};

struct SncConfiguration
{
    int ambient_dim = 2;
    std::vector<Divisor> divisors;
    std::vector<IntersectionCell> cells;
    std::string sigma_label = "origin";
    std::optional<std::map<int, long long>> weights;

    bool has_divisor(int id) const;
    const Divisor& divisor(int id) const;
    Divisor& divisor(int id);
    int next_id() const;
    std::vector<int> ids() const;

    friend bool operator==(const SncConfiguration&, const SncConfiguration&) = default;
};

enum class Severity
{
    error,
    warning
};

struct Issue
{
    Severity severity = Severity::error;
    std::string subject; // "divisor 3 (E2)", "cell 0 [1,2]", "configuration"
    std::string message;
};

struct ValidationReport
{
    std::vector<Issue> issues;

    bool valid() const;
    std::vector<Issue> errors() const;
    std::string summary() const;
};

ValidationReport validate_configuration(const SncConfiguration& cfg);

// Throws ValidationError carrying the summary of every error-level issue.
void require_valid(const SncConfiguration& cfg);

struct DualVertex
{
    int id = 0;
    long long mult = 0;
};

struct OneCell
{
    int i = 0;
    int j = 0;
    long long m_sigma = 0; // mult(i) + mult(j)
    long long count = 0;   // number of components of the intersection
    bool over_sigma = false;
};

struct DualComplex
{
    std::vector<DualVertex> vertices;
    std::vector<OneCell> one_cells;
    std::vector<std::vector<int>> higher_cells;
};

DualComplex build_dual_complex(const SncConfiguration& cfg);

// Number of points of E_i removed by the other divisors (curve case).
long long puncture_count(const SncConfiguration& cfg, int id);

// Euler characteristic of E_i minus the other divisors.
long long euler_open_stratum(const SncConfiguration& cfg, int id);

} // namespace contact
