#include "contact/spectral.hpp"

#include <algorithm>

#include "contact/errors.hpp"
#include "contact/separation.hpp"

namespace contact
{

ContributingSet contributing_set(const SncConfiguration& cfg, const WeightVector& w, long long m)
{
    if (m < 1) {
        throw DomainError("m ≥ 1");
    }
    if (auto cell = first_unseparated_cell(cfg, m)) {
        throw PreconditionError("configuration is not " + std::to_string(m) + "-separating: cell (" +
                                std::to_string(cell->i) + "," + std::to_string(cell->j) + ") has m_sigma = " +
                                std::to_string(cell->m_sigma));
    }
    ContributingSet out;
    out.m = m;
    for (int id : cfg.ids()) {
        const Divisor& d = cfg.divisor(id);
        if (!d.over_sigma || m % d.mult != 0) {
            continue;
        }
        long long k = m / d.mult;
        auto it = w.find(id);
        long long wi = it == w.end() ? 0 : it->second;
        out.members.push_back({id, k, -wi * k});
    }
    return out;
}

long long E1Page::euler() const
{
    long long chi = 0;
    for (const auto& [pq, entry] : entries) {
        chi += ((pq.first + pq.second) % 2 == 0 ? 1 : -1) * entry.rank;
    }
    return chi;
}

std::map<long long, long long> E1Page::rank_by_degree() const
{
    std::map<long long, long long> out;
    for (const auto& [pq, entry] : entries) {
        out[pq.first + pq.second] += entry.rank;
    }
    return out;
}

long long e1_total_degree(int d, long long m, long long k, long long nu, int homology_degree)
{
    return 2 * (d * (m + 1) - k * nu - 1) - homology_degree;
}

E1Page e1_page(const SncConfiguration& cfg, const WeightVector& w, long long m,
               const std::map<int, CoverHomology>& covers)
{
    auto set = contributing_set(cfg, w, m);
    std::vector<int> missing;
    for (const auto& c : set.members) {
        if (!covers.count(c.id)) {
            missing.push_back(c.id);
        }
    }
    if (!missing.empty()) {
        std::string ids;
        for (int id : missing) {
            ids += (ids.empty() ? "" : ", ") + std::to_string(id);
        }
        throw PreconditionError("missing cover data for divisor(s) " + ids);
    }
    E1Page page;
    page.m = m;
    page.d = cfg.ambient_dim;
    for (const auto& c : set.members) {
        const Divisor& div = cfg.divisor(c.id);
        const CoverHomology& cover = covers.at(c.id);
        std::size_t top = cover.betti.size();
        for (const auto& t : cover.torsion) {
            top = std::max(top, static_cast<std::size_t>(t.degree) + 1);
        }
        for (std::size_t n = 0; n < top; ++n) {
            long long rank = n < cover.betti.size() ? cover.betti[n] : 0;
            std::vector<long long> torsion;
            for (const auto& t : cover.torsion) {
                if (t.degree == static_cast<int>(n)) {
                    torsion.insert(torsion.end(), t.orders.begin(), t.orders.end());
                }
            }
            if (rank == 0 && torsion.empty()) {
                continue;
            }
            long long total = e1_total_degree(page.d, m, c.k, div.disc, static_cast<int>(n));
            if (total < 0) {
                throw Error("internal: negative total degree for divisor " + std::to_string(c.id));
            }
            E1Entry& entry = page.entries[{c.p, total - c.p}];
            entry.rank += rank;
            entry.torsion.insert(entry.torsion.end(), torsion.begin(), torsion.end());
            std::sort(entry.torsion.begin(), entry.torsion.end());
            entry.contributors.push_back({c.id, static_cast<int>(n), rank, torsion});
        }
    }
    return page;
}

E1Page e1_page(const SncConfiguration& cfg, const WeightVector& w, long long m)
{
    auto set = contributing_set(cfg, w, m);
    std::vector<int> ids;
    for (const auto& c : set.members) {
        ids.push_back(c.id);
    }
    return e1_page(cfg, w, m, cover_table(cfg, ids));
}

std::vector<std::tuple<long long, long long, int, int>> page_content(const E1Page& page)
{
    std::vector<std::tuple<long long, long long, int, int>> out;
    for (const auto& [pq, entry] : page.entries) {
        for (const auto& c : entry.contributors) {
            out.emplace_back(pq.first + pq.second, c.rank, c.id, c.homology_degree);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{

struct Arrow
{
    std::pair<long long, long long> source;
    std::pair<long long, long long> target;
    long long cap = 0;
};

std::vector<Arrow> arrows(const E1Page& page, std::optional<long long> max_r)
{
    std::vector<Arrow> out;
    for (const auto& [src, a] : page.entries) {
        if (!a.nonzero()) {
            continue;
        }
        for (const auto& [tgt, b] : page.entries) {
            long long r = tgt.first - src.first;
            if (r < 1 || (max_r && r > *max_r) || !b.nonzero()) {
                continue;
            }
            if (tgt.second != src.second - r + 1) {
                continue;
            }
            out.push_back({src, tgt, std::min(a.rank, b.rank)});
        }
    }
    return out;
}

} // namespace

HcReport degeneration_analysis(const E1Page& page)
{
    HcReport report;
    report.m = page.m;
    report.d = page.d;
    report.degree_shift = page.degree_shift;
    report.euler = page.euler();

    const auto window = arrows(page, page.d);
    const auto all = arrows(page, std::nullopt);
    report.rational_window_forced = window.empty();
    report.integral_forced = all.empty();

    for (const auto& [pq, entry] : page.entries) {
        if (!entry.nonzero()) {
            continue;
        }
        long long n = pq.first + pq.second;
        DegreeReport& dr = report.degrees[n];
        dr.degree = n;
        dr.e1_rank += entry.rank;
        dr.torsion.insert(dr.torsion.end(), entry.torsion.begin(), entry.torsion.end());
        std::sort(dr.torsion.begin(), dr.torsion.end());

        long long touching = 0;
        for (const auto& a : window) {
            if (a.source == pq || a.target == pq) {
                touching += a.cap;
            }
        }
        dr.lo += entry.rank - std::min(entry.rank, touching);
        for (const auto& a : all) {
            if (a.source == pq || a.target == pq) {
                dr.integral_exact = false;
            }
        }
    }
    for (auto& [n, dr] : report.degrees) {
        dr.hi = dr.e1_rank;
        if (dr.lo == dr.hi) {
            dr.status = dr.hi == 0 && dr.torsion.empty() ? RankStatus::zero : RankStatus::exact;
        } else {
            dr.status = RankStatus::bounds;
        }
        dr.graded_only = !dr.torsion.empty();
        if (!dr.integral_exact) {
            dr.torsion.clear();
            dr.graded_only = false;
        }
    }
    return report;
}

long long mclean_shift(int d, long long m)
{
    return 2 * d * m + d - 1;
}

E1Page mclean_relabel(const E1Page& page)
{
    E1Page out = page;
    const long long s = mclean_shift(page.d, page.m);
    out.entries.clear();
    out.degree_shift = page.degree_shift + s;
    for (const auto& [pq, entry] : page.entries) {
        out.entries[{pq.first, pq.second - s}] = entry;
    }
    return out;
}

E1Page mclean_relabel_inverse(const E1Page& page)
{
    E1Page out = page;
    const long long s = mclean_shift(page.d, page.m);
    out.entries.clear();
    out.degree_shift = page.degree_shift - s;
    for (const auto& [pq, entry] : page.entries) {
        out.entries[{pq.first, pq.second + s}] = entry;
    }
    return out;
}

std::vector<long long> milnor_betti_power(long long p)
{
    if (p < 1) {
        throw DomainError("power must be ≥ 1");
    }
    return {p};
}

std::vector<long long> milnor_betti_homogeneous_isolated(int d, long long m)
{
    if (d < 1 || m < 1) {
        throw DomainError("d ≥ 1 and m ≥ 1 required");
    }
    std::vector<long long> b(static_cast<std::size_t>(d), 0);
    long long mu = 1;
    for (int k = 0; k < d; ++k) {
        mu *= m - 1;
    }
    b[0] = 1;
    b[static_cast<std::size_t>(d - 1)] += mu;
    return b;
}

std::vector<long long> milnor_betti_from_initial_form(const Polynomial& f)
{
    const int m = f.order();
    if (m < 1) {
        throw DomainError("f must vanish at the origin");
    }
    if (f.nvars() == 1) {
        return milnor_betti_power(m);
    }
    if (f.nvars() != 2) {
        throw UnsupportedError("unsupported dimension: initial form analysis needs d ≤ 2");
    }
    const Polynomial initial = f.homogeneous_part(m);
    auto factors = squarefree_decomposition(initial);
    if (factors.size() == 1 && factors[0].second == m && factors[0].first.total_degree() == 1) {
        return milnor_betti_power(m);
    }
    if (factors.size() == 1 && factors[0].second == 1) {
        return milnor_betti_homogeneous_isolated(2, m);
    }
    throw UnsupportedError("initial form " + initial.to_string() +
                           " is neither a power of a linear form nor squarefree");
}

std::map<long long, long long> multiplicity_case_prediction(int d, long long m,
                                                            const std::vector<long long>& milnor_betti)
{
    std::map<long long, long long> out;
    const long long top = 2 * (d * m - 1);
    for (std::size_t n = 0; n < milnor_betti.size(); ++n) {
        if (milnor_betti[n] != 0) {
            out[top - static_cast<long long>(n)] = milnor_betti[n];
        }
    }
    return out;
}

long long stabilization_level(const SncConfiguration& cfg, long long m)
{
    auto set = contributing_set(cfg, WeightVector{}, m);
    if (set.members.empty()) {
        throw PreconditionError("contributing set is empty for m = " + std::to_string(m));
    }
    long long level = 0;
    for (const auto& c : set.members) {
        long long e = c.k * (cfg.divisor(c.id).disc - 1);
        level = std::max({level, 2 * e, e + m});
    }
    return level;
}

long long stratum_dimension(int d, long long m, long long k, long long nu, std::optional<long long> jet_level)
{
    long long l = jet_level.value_or(m);
    return d * (l + 1) - k * nu - 1;
}

long long stratum_dimension(const SncConfiguration& cfg, int id, long long m, std::optional<long long> jet_level)
{
    const Divisor& d = cfg.divisor(id);
    if (!d.over_sigma || m % d.mult != 0) {
        throw PreconditionError("divisor " + std::to_string(id) + " is not in S_" + std::to_string(m));
    }
    return stratum_dimension(cfg.ambient_dim, m, m / d.mult, d.disc, jet_level);
}

long long fiber_dimension(const std::vector<std::pair<long long, long long>>& k_nu)
{
    long long e = 0;
    for (const auto& [k, nu] : k_nu) {
        e += k * (nu - 1);
    }
    return e;
}

long long fiber_dimension(const SncConfiguration& cfg, int id, long long m)
{
    const Divisor& d = cfg.divisor(id);
    if (m % d.mult != 0) {
        throw PreconditionError("m_i does not divide m for divisor " + std::to_string(id));
    }
    return fiber_dimension({{m / d.mult, d.disc}});
}

GapAnalysis gap_analysis(const SncConfiguration& cfg, const WeightVector& w, long long m)
{
    auto set = contributing_set(cfg, w, m);
    std::vector<int> ids;
    for (const auto& c : set.members) {
        ids.push_back(c.id);
    }
    auto covers = cover_table(cfg, ids);
    for (long long c = 1;; ++c) {
        GapAnalysis out;
        out.minimal_scale = c;
        out.weights = scale_weights(w, c);
        out.page = e1_page(cfg, out.weights, m, covers);
        out.report = degeneration_analysis(out.page);
        out.label = kGapAnalysisLabel;
        if (out.report.rational_window_forced) {
            return out;
        }
    }
}

} // namespace contact
