#include "contact/weights.hpp"

#include <algorithm>

#include "contact/errors.hpp"
#include "contact/polynomial.hpp"

namespace contact
{

std::size_t IntersectionMatrix::index(int id) const
{
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
        throw DomainError("no divisor with id " + std::to_string(id));
    }
    return static_cast<std::size_t>(it - ids.begin());
}

long long IntersectionMatrix::at(int id_a, int id_b) const
{
    return entries[index(id_a)][index(id_b)];
}

IntersectionMatrix intersection_matrix(const SncConfiguration& cfg)
{
    if (cfg.ambient_dim != 2) {
        throw UnsupportedError("unsupported dimension: intersection matrix needs ambient_dim = 2");
    }
    require_valid(cfg);
    IntersectionMatrix mat;
    mat.ids = cfg.ids();
    const std::size_t n = mat.ids.size();
    mat.entries.assign(n, std::vector<long long>(n, 0));
    mat.diagonal_known.assign(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const Divisor& d = cfg.divisor(mat.ids[k]);
        if (d.exceptional && d.self_int) {
            mat.entries[k][k] = *d.self_int;
            mat.diagonal_known[k] = true;
        }
    }
    for (const auto& c : cfg.cells) {
        std::size_t a = mat.index(c.ids[0]);
        std::size_t b = mat.index(c.ids[1]);
        mat.entries[a][b] += c.count;
        mat.entries[b][a] += c.count;
    }
    return mat;
}

bool exceptional_block_negative_definite(const SncConfiguration& cfg)
{
    auto mat = intersection_matrix(cfg);
    std::vector<std::size_t> rows;
    for (std::size_t k = 0; k < mat.ids.size(); ++k) {
        if (cfg.divisor(mat.ids[k]).exceptional) {
            rows.push_back(k);
        }
    }
    // Bareiss elimination on -M; every leading principal minor must be positive.
    const std::size_t n = rows.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a[r][c] = -mat.entries[rows[r]][rows[c]];
        }
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) {
            return false;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
            }
        }
        prev = a[k][k];
    }
    return true;
}

WeightCheck check_weights(const SncConfiguration& cfg, const WeightVector& w)
{
    WeightCheck out;
    auto fail = [&](std::string message) {
        out.valid = false;
        out.violations.push_back(std::move(message));
    };
    bool any_exceptional = false;
    bool any_positive = false;
    for (const auto& [id, value] : w) {
        if (!cfg.has_divisor(id)) {
            fail("weight for unknown divisor " + std::to_string(id));
            continue;
        }
        if (value < 0) {
            fail("w_" + std::to_string(id) + " < 0");
        }
        if (!cfg.divisor(id).exceptional && value != 0) {
            fail("w_" + std::to_string(id) + " ≠ 0 on a non-exceptional divisor");
        }
        any_positive = any_positive || value > 0;
    }
    for (const auto& d : cfg.divisors) {
        any_exceptional = any_exceptional || d.exceptional;
    }
    if (!out.valid) {
        return out;
    }
    if (cfg.ambient_dim != 2) {
        if (any_exceptional && !any_positive) {
            fail("all weights zero although exceptional divisors exist");
        }
        return out;
    }
    auto mat = intersection_matrix(cfg);
    for (const auto& dj : cfg.divisors) {
        if (!dj.exceptional) {
            continue;
        }
        long long pairing = 0;
        for (const auto& [id, value] : w) {
            pairing += value * mat.at(id, dj.id);
        }
        if (-pairing <= 0) {
            fail("-Σ w_i E_i·E_" + std::to_string(dj.id) + " = " + std::to_string(-pairing) + " not > 0");
        }
    }
    return out;
}

bool validate_weights(const SncConfiguration& cfg, const WeightVector& w)
{
    return check_weights(cfg, w).valid;
}

WeightVector solve_weights(const SncConfiguration& cfg, long long max_iterations)
{
    if (cfg.ambient_dim != 2) {
        throw UnsupportedError("unsupported dimension: weights must be supplied when ambient_dim ≠ 2");
    }
    if (!exceptional_block_negative_definite(cfg)) {
        throw PreconditionError("not a resolution over a point cluster: exceptional intersection matrix is "
                                "not negative definite");
    }
    auto mat = intersection_matrix(cfg);
    WeightVector w;
    std::vector<int> exceptional;
    for (int id : cfg.ids()) {
        if (cfg.divisor(id).exceptional) {
            w[id] = 1;
            exceptional.push_back(id);
        }
    }
    for (long long iter = 0; iter < max_iterations; ++iter) {
        bool changed = false;
        for (int j : exceptional) {
            long long others = 0;
            for (int i : exceptional) {
                if (i != j) {
                    others += w[i] * mat.at(i, j);
                }
            }
            long long s = -mat.at(j, j);
            if (w[j] * s - others > 0) {
                continue;
            }
            w[j] = others / s + 1;
            changed = true;
            break;
        }
        if (!changed) {
            return w;
        }
    }
    throw ResourceError("weight solver exceeded " + std::to_string(max_iterations) + " iterations");
}

WeightVector scale_weights(const WeightVector& w, long long factor)
{
    if (factor < 1) {
        throw DomainError("weight scale factor must be ≥ 1");
    }
    WeightVector out;
    for (const auto& [id, value] : w) {
        out[id] = value * factor;
    }
    return out;
}

} // namespace contact
