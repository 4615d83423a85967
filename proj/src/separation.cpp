#include "contact/separation.hpp"

#include <algorithm>

#include "contact/errors.hpp"

namespace contact
{

std::optional<long long> min_pair_multiplicity(const DualComplex& complex)
{
    std::optional<long long> best;
    for (const auto& cell : complex.one_cells) {
        if (!best || cell.m_sigma < *best) {
            best = cell.m_sigma;
        }
    }
    return best;
}

std::optional<OneCell> first_unseparated_cell(const SncConfiguration& cfg, long long m)
{
    auto complex = build_dual_complex(cfg);
    std::optional<OneCell> found;
    for (const auto& cell : complex.one_cells) {
        if (cell.m_sigma <= m &&
            (!found || std::pair(cell.i, cell.j) < std::pair(found->i, found->j))) {
            found = cell;
        }
    }
    return found;
}

bool is_m_separating(const SncConfiguration& cfg, long long m)
{
    auto least = min_pair_multiplicity(build_dual_complex(cfg));
    return !least || *least > m;
}

namespace
{

IntersectionCell* find_cell(SncConfiguration& cfg, int i, int j)
{
    for (auto& c : cfg.cells) {
        if (c.ids.size() == 2 && std::min(c.ids[0], c.ids[1]) == i && std::max(c.ids[0], c.ids[1]) == j) {
            return &c;
        }
    }
    return nullptr;
}

// Blows up one point of the cell (i, j).
SubdivisionRecord subdivide_point(SncConfiguration& cfg, int i, int j, std::vector<Issue>& warnings)
{
    IntersectionCell* cell = find_cell(cfg, i, j);
    const std::optional<bool> cell_flag = cell->over_sigma;
    Divisor& a = cfg.divisor(i);
    Divisor& b = cfg.divisor(j);

    SubdivisionRecord rec;
    rec.i = i;
    rec.j = j;
    rec.new_divisor = cfg.next_id();
    rec.mult = a.mult + b.mult;
    rec.disc = a.disc + b.disc;
    if (cell_flag) {
        rec.over_sigma = *cell_flag;
    } else {
        rec.over_sigma = a.over_sigma || b.over_sigma;
        rec.over_sigma_defaulted = true;
        warnings.push_back({Severity::warning,
                            "cell [" + std::to_string(i) + "," + std::to_string(j) + "]",
                            "over_sigma missing; new divisor " + std::to_string(rec.new_divisor) +
                                " takes over_sigma of its endpoints"});
    }
    for (Divisor* end : {&a, &b}) {
        if (end->self_int) {
            *end->self_int -= 1;
        }
    }

    if (--cell->count == 0) {
        cfg.cells.erase(cfg.cells.begin() + (cell - cfg.cells.data()));
    }

    Divisor d;
    d.id = rec.new_divisor;
    d.label = "S" + std::to_string(rec.new_divisor);
    d.mult = rec.mult;
    d.disc = rec.disc;
    d.exceptional = true;
    d.over_sigma = rec.over_sigma;
    d.genus = 0;
    d.self_int = -1;
    cfg.divisors.push_back(d);
    cfg.cells.push_back({{i, d.id}, 1, rec.over_sigma});
    cfg.cells.push_back({{j, d.id}, 1, rec.over_sigma});
    return rec;
}

} // namespace

SeparationResult separate(const SncConfiguration& cfg, long long m)
{
    if (m < 1) {
        throw DomainError("m ≥ 1");
    }
    require_valid(cfg);
    SeparationResult result{cfg, {}, {}};
    std::optional<long long> previous;
    int pass = 0;
    while (true) {
        auto complex = build_dual_complex(result.config);
        auto least = min_pair_multiplicity(complex);
        if (!least || *least > m) {
            break;
        }
        if (cfg.ambient_dim != 2) {
            throw UnsupportedError("unsupported dimension: separation needs ambient_dim = 2; supply an "
                                   "m-separating configuration");
        }
        if (previous && *least <= *previous) {
            throw Error("internal: minimum pair multiplicity did not increase");
        }
        previous = least;
        ++pass;
        std::vector<OneCell> level;
        for (const auto& c : complex.one_cells) {
            if (c.m_sigma == *least) {
                level.push_back(c);
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const OneCell& a, const OneCell& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
        for (const auto& c : level) {
            for (long long point = 0; point < c.count; ++point) {
                auto rec = subdivide_point(result.config, c.i, c.j, result.warnings);
                rec.pass = pass;
                rec.point_index = point;
                result.records.push_back(rec);
            }
        }
    }
    return result;
}

} // namespace contact
