#include "doctest.h"
#include "fixtures.hpp"

#include <numeric>

#include "contact/errors.hpp"

using namespace contact;

namespace
{

struct Triple
{
    long long m, nu, s;
    bool operator==(const Triple&) const = default;
};

std::vector<Triple> exceptional_triples(const SncConfiguration& cfg)
{
    std::vector<Triple> out;
    for (const auto& d : cfg.divisors) {
        if (d.exceptional) {
            out.push_back({d.mult, d.disc, *d.self_int});
        }
    }
    return out;
}

} // namespace

TEST_CASE("cusp resolves in three blowups")
{
    auto res = resolve_plane_curve(parse_polynomial("x^2 + y^3"));
    const auto& cfg = res.config;
    CHECK(exceptional_triples(cfg) == std::vector<Triple>{{2, 2, -3}, {3, 3, -2}, {6, 5, -1}});
    REQUIRE(cfg.divisors.size() == 4);
    CHECK(cfg.divisors[3].mult == 1);
    CHECK(cfg.divisors[3].disc == 1);
    CHECK_FALSE(cfg.divisors[3].exceptional);
    REQUIRE(cfg.cells.size() == 3);
    CHECK(cfg.cells[0].ids == std::vector<int>{0, 2});
    CHECK(cfg.cells[1].ids == std::vector<int>{1, 2});
    CHECK(cfg.cells[2].ids == std::vector<int>{2, 3});
    CHECK(res.log.steps.size() == 3);
    CHECK(res.log.steps[1].mult == 3);
    CHECK(res.log.steps[1].disc == 3);
    CHECK(res.log.steps[2].through == std::vector<int>{0, 1});
    CHECK(res.log.steps[2].strict_multiplicity == 1);
    CHECK(res.log.valuations.at(0) == std::vector<long long>{1, 1});
    CHECK(res.log.valuations.at(1) == std::vector<long long>{2, 1});
    CHECK(res.log.valuations.at(2) == std::vector<long long>{3, 2});
}

TEST_CASE("node resolves in one blowup")
{
    auto cfg = fixtures::node();
    CHECK(exceptional_triples(cfg) == std::vector<Triple>{{2, 2, -1}});
    REQUIRE(cfg.divisors.size() == 3);
    CHECK(cfg.cells.size() == 2);
    CHECK(cfg.divisors[1].mult == 1);
    CHECK(cfg.divisors[2].mult == 1);
}

TEST_CASE("blowup step bookkeeping")
{
    auto state = initial_state(parse_polynomial("x^2 + y^3"));
    state = blowup_step(state, state.pending.front());
    CHECK(state.exceptional[0].mult == 2);
    CHECK(state.exceptional[0].disc == 2);
    REQUIRE(state.pending.size() == 1);
    CHECK(state.pending.front().strict_multiplicity() == 1);
    state = blowup_step(state, state.pending.front());
    CHECK(state.exceptional[1].mult == 3);
    CHECK(state.exceptional[1].disc == 3);
    state = blowup_step(state, state.pending.front());
    CHECK(state.exceptional[2].mult == 6);
    CHECK(state.exceptional[2].disc == 5);
    CHECK(state.pending.empty());

    auto smooth = initial_state(parse_polynomial("y - x^2 - x^3"));
    smooth = blowup_step(smooth, smooth.pending.front());
    CHECK(smooth.exceptional[0].mult == 1);
    CHECK(smooth.exceptional[0].disc == 2);

    ChartPoint empty;
    empty.name = "nowhere";
    CHECK_THROWS_AS(blowup_step(smooth, empty), DomainError);
}

TEST_CASE("input errors")
{
    CHECK_THROWS_AS(resolve_plane_curve(parse_polynomial("x^2 + y^3 + 1")), DomainError);
    CHECK_THROWS_AS(resolve_plane_curve(Polynomial(2)), DomainError);
    CHECK_THROWS_AS(resolve_plane_curve(parse_polynomial("x^2 + y^3"), 2), ResourceError);
}

TEST_CASE("non-reduced input keeps the exponent")
{
    auto cfg = fixtures::curve("x^2");
    CHECK(exceptional_triples(cfg) == std::vector<Triple>{{2, 2, -1}});
    REQUIRE(cfg.divisors.size() == 2);
    CHECK(cfg.divisors[1].mult == 2);

    auto mixed = fixtures::curve("x^2*y");
    CHECK(exceptional_triples(mixed) == std::vector<Triple>{{3, 2, -1}});
}

TEST_CASE("univariate identity resolution")
{
    auto cfg = resolve_univariate(parse_polynomial("x^3 + x^4"));
    REQUIRE(cfg.divisors.size() == 1);
    CHECK(cfg.divisors[0].mult == 3);
    CHECK(cfg.divisors[0].disc == 1);
    CHECK(cfg.divisors[0].over_sigma);
    CHECK(cfg.ambient_dim == 1);
}

TEST_CASE("Brieskorn curves: top multiplicity is p*q for coprime exponents")
{
    for (int p = 2; p <= 5; ++p) {
        for (int q = p; q <= 5; ++q) {
            auto cfg = fixtures::curve(("x^" + std::to_string(p) + "+y^" + std::to_string(q)).c_str());
            CAPTURE(p);
            CAPTURE(q);
            CHECK(validate_configuration(cfg).valid());
            long long top = 0;
            for (const auto& d : cfg.divisors) {
                top = std::max(top, d.mult);
            }
            if (std::gcd(p, q) == 1) {
                CHECK(top == p * q);
            } else {
                CHECK(top == p * q / std::gcd(p, q));
            }
        }
    }
    auto x3y4 = fixtures::curve("x^3+y^4");
    long long top = 0;
    for (const auto& d : x3y4.divisors) {
        top = std::max(top, d.mult);
    }
    CHECK(top == 12);
}

TEST_CASE("property: discrepancy exceeds the number of divisors through each center")
{
    for (const char* f : {"x^2+y^3", "x^3+y^4", "x^2+y^5", "x^3+y^5", "x^4+y^5", "(x^2+y^3)*(x^2-y^3)"}) {
        auto res = resolve_plane_curve(parse_polynomial(f, 2));
        for (const auto& step : res.log.steps) {
            CHECK(step.disc - 1 >= static_cast<long long>(step.through.size()));
        }
    }
}

TEST_CASE("non-rational clusters that are already transverse")
{
    auto cfg = fixtures::curve("x^2+y^2");
    REQUIRE(cfg.divisors.size() == 2);
    CHECK(cfg.cells[0].count == 2);
    CHECK(euler_open_stratum(cfg, 0) == 0);
    CHECK_THROWS_AS(fixtures::curve("(x^2+y^2)^2 + y^5"), UnsupportedError);
}
