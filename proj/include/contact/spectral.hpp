#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "contact/covers.hpp"
#include "contact/polynomial.hpp"
#include "contact/resolution_model.hpp"
#include "contact/weights.hpp"

namespace contact
{

struct Contributor
{
    int id = 0;
    long long k = 0; // m / m_i
    long long p = 0; // -w_i k_i

    friend bool operator==(const Contributor&, const Contributor&) = default;
};

struct ContributingSet
{
    long long m = 0;
    std::vector<Contributor> members; // ascending id

    friend bool operator==(const ContributingSet&, const ContributingSet&) = default;
};

// {i : over_sigma(i), m_i | m}; throws PreconditionError when cfg is not m-separating.
ContributingSet contributing_set(const SncConfiguration& cfg, const WeightVector& w, long long m);

struct EntryContribution
{
    int id = 0;
    int homology_degree = 0;
    long long rank = 0;
    std::vector<long long> torsion;

    friend bool operator==(const EntryContribution&, const EntryContribution&) = default;
};

struct E1Entry
{
    long long rank = 0;
    std::vector<long long> torsion; // elementary divisor orders
    std::vector<EntryContribution> contributors;

    bool nonzero() const { return rank != 0 || !torsion.empty(); }

    friend bool operator==(const E1Entry&, const E1Entry&) = default;
};

struct E1Page
{
    long long m = 0;
    int d = 0;
    long long degree_shift = 0; // total degrees are n - degree_shift after relabeling
    std::map<std::pair<long long, long long>, E1Entry> entries; // (p, q)

    long long euler() const;
    std::map<long long, long long> rank_by_degree() const;

    friend bool operator==(const E1Page&, const E1Page&) = default;
};

// Total degree at which homology degree n of divisor i lands.
long long e1_total_degree(int d, long long m, long long k, long long nu, int homology_degree);

E1Page e1_page(const SncConfiguration& cfg, const WeightVector& w, long long m,
               const std::map<int, CoverHomology>& covers);
E1Page e1_page(const SncConfiguration& cfg, const WeightVector& w, long long m);

// Multiset of (total degree, rank, divisor, homology degree); independent of weights.
std::vector<std::tuple<long long, long long, int, int>> page_content(const E1Page& page);

enum class RankStatus
{
    zero,
    exact,
    bounds
};

struct DegreeReport
{
    long long degree = 0;
    long long e1_rank = 0;
    RankStatus status = RankStatus::zero; // rational status, window 1 <= r <= d
    long long lo = 0;
    long long hi = 0;
    bool integral_exact = true; // no arrow of any r >= 1 touches this degree
    std::vector<long long> torsion;
    bool graded_only = false; // torsion present, extension not determined

    friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct HcReport
{
    long long m = 0;
    int d = 0;
    long long degree_shift = 0;
    std::map<long long, DegreeReport> degrees; // only degrees with nonzero E1 terms
    bool integral_forced = true;
    bool rational_window_forced = true;
    long long euler = 0;

    friend bool operator==(const HcReport&, const HcReport&) = default;
};

HcReport degeneration_analysis(const E1Page& page);

// Shift of total degree by -(2dm + d - 1).
long long mclean_shift(int d, long long m);
E1Page mclean_relabel(const E1Page& page);
E1Page mclean_relabel_inverse(const E1Page& page);

// Betti numbers of the Milnor fiber of the initial form.
std::vector<long long> milnor_betti_power(long long p);
std::vector<long long> milnor_betti_homogeneous_isolated(int d, long long m);
// Classifies the initial form of f (d <= 2): a power of a linear form or an
// isolated homogeneous singularity. Throws UnsupportedError otherwise.
std::vector<long long> milnor_betti_from_initial_form(const Polynomial& f);

// H_c^n(X_m) = H_{2(dm-1)-n}(F) for m = multiplicity of f at 0; degree -> rank.
std::map<long long, long long> multiplicity_case_prediction(int d, long long m,
                                                            const std::vector<long long>& milnor_betti);

long long stabilization_level(const SncConfiguration& cfg, long long m);

// jet(l): d(l+1) - k nu - 1; contact(m) when jet_level is empty: d(m+1) - k nu - 1.
long long stratum_dimension(int d, long long m, long long k, long long nu, std::optional<long long> jet_level);
long long stratum_dimension(const SncConfiguration& cfg, int id, long long m,
                            std::optional<long long> jet_level = std::nullopt);

// e = sum k_i (nu_i - 1).
long long fiber_dimension(const std::vector<std::pair<long long, long long>>& k_nu);
long long fiber_dimension(const SncConfiguration& cfg, int id, long long m);

struct GapAnalysis
{
    long long minimal_scale = 1;
    WeightVector weights;
    E1Page page;
    HcReport report;
    std::string label;
};

// Smallest factor c such that the page for c*w has no arrow inside the
// rational window.
GapAnalysis gap_analysis(const SncConfiguration& cfg, const WeightVector& w, long long m);

inline constexpr const char* kGapAnalysisLabel =
    "conditional on the page bound applying to the scaled weight choice";

} // namespace contact
