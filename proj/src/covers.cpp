#include "contact/covers.hpp"

#include <algorithm>
#include <numeric>

#include "contact/errors.hpp"

namespace contact
{

long long CoverHomology::euler() const
{
    long long chi = 0;
    for (std::size_t n = 0; n < betti.size(); ++n) {
        chi += (n % 2 == 0 ? 1 : -1) * betti[n];
    }
    return chi;
}

namespace
{

std::string subject(const Divisor& d)
{
    return "divisor " + std::to_string(d.id) + (d.label.empty() ? "" : " (" + d.label + ")");
}

void require_combinatorial(const SncConfiguration& cfg, const Divisor& d)
{
    if (cfg.ambient_dim >= 3) {
        throw UnsupportedError("cover not combinatorially determined for " + subject(d) +
                               ": supply cover data when ambient_dim ≥ 3");
    }
    if (cfg.ambient_dim == 2 && d.genus.value_or(0) > 0) {
        throw UnsupportedError("cover not combinatorially determined for " + subject(d) +
                               ": genus > 0 needs supplied cover data");
    }
}

} // namespace

long long cover_component_count(const SncConfiguration& cfg, int id)
{
    const Divisor& d = cfg.divisor(id);
    if (d.cover) {
        if (d.cover->components) {
            return *d.cover->components;
        }
        if (!d.cover->betti.empty()) {
            return d.cover->betti[0];
        }
    }
    require_combinatorial(cfg, d);
    long long c = d.mult;
    for (const auto& cell : cfg.cells) {
        if (std::find(cell.ids.begin(), cell.ids.end(), id) == cell.ids.end()) {
            continue;
        }
        for (int other : cell.ids) {
            if (other != id) {
                c = std::gcd(c, cfg.divisor(other).mult);
            }
        }
    }
    return c;
}

CoverHomology cover_betti(const SncConfiguration& cfg, int id)
{
    const Divisor& d = cfg.divisor(id);
    CoverHomology out;
    out.id = id;
    if (d.cover) {
        out.source = CoverSource::supplied;
        out.betti = d.cover->betti;
        out.torsion = d.cover->torsion;
        out.components = d.cover->components.value_or(out.betti.empty() ? 0 : out.betti[0]);
        if (out.betti.empty() || out.betti[0] != out.components) {
            throw ValidationError(subject(d) + ": supplied cover needs betti[0] = components");
        }
        return out;
    }
    require_combinatorial(cfg, d);
    const long long m = d.mult;
    if (cfg.ambient_dim == 1) {
        out.components = m;
        out.betti = {m};
        return out;
    }
    const long long k = puncture_count(cfg, id);
    if (k == 0) {
        out.components = m;
        out.betti = {m, 0, m};
        return out;
    }
    const long long c = cover_component_count(cfg, id);
    const long long b1 = c * (1 - (m / c) * (2 - k));
    if (b1 < 0) {
        throw ValidationError("inconsistent configuration: " + subject(d) + " with " + std::to_string(k) +
                              " puncture(s) gives a cover with negative first Betti number (c = " +
                              std::to_string(c) + ", m = " + std::to_string(m) + ")");
    }
    out.components = c;
    out.betti = {c, b1};
    return out;
}

std::map<int, CoverHomology> cover_table(const SncConfiguration& cfg, const std::vector<int>& ids)
{
    std::map<int, CoverHomology> out;
    for (int id : ids) {
        out.emplace(id, cover_betti(cfg, id));
    }
    return out;
}

} // namespace contact
