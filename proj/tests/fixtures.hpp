#pragma once

#include "contact/curve_builder.hpp"
#include "contact/expression.hpp"
#include "contact/resolution_model.hpp"

namespace fixtures
{

inline contact::SncConfiguration cusp()
{
    return contact::resolve_plane_curve(contact::parse_polynomial("x^2 + y^3", 2)).config;
}

inline contact::SncConfiguration node()
{
    return contact::resolve_plane_curve(contact::parse_polynomial("x*y", 2)).config;
}

inline contact::SncConfiguration curve(const char* text)
{
    return contact::resolve_plane_curve(contact::parse_polynomial(text, 2)).config;
}

// Long-hand cusp configuration, ids 0..3 = E1, E2, E3, D.
inline contact::SncConfiguration cusp_by_hand()
{
    using namespace contact;
    SncConfiguration cfg;
    cfg.ambient_dim = 2;
    auto ex = [](int id, const char* label, long long m, long long nu, long long s) {
        Divisor d;
        d.id = id;
        d.label = label;
        d.mult = m;
        d.disc = nu;
        d.exceptional = true;
        d.over_sigma = true;
        d.genus = 0;
        d.self_int = s;
        return d;
    };
    cfg.divisors = {ex(0, "E1", 2, 2, -3), ex(1, "E2", 3, 3, -2), ex(2, "E3", 6, 5, -1)};
    Divisor strict;
    strict.id = 3;
    strict.label = "D";
    strict.genus = 0;
    cfg.divisors.push_back(strict);
    cfg.cells = {{{0, 2}, 1, true}, {{1, 2}, 1, true}, {{2, 3}, 1, true}};
    return cfg;
}

} // namespace fixtures
