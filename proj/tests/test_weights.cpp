#include "doctest.h"
#include "fixtures.hpp"

#include "contact/errors.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"
#include "contact/weights.hpp"

using namespace contact;

TEST_CASE("intersection matrices")
{
    auto cusp = intersection_matrix(fixtures::cusp());
    CHECK(cusp.at(0, 0) == -3);
    CHECK(cusp.at(1, 1) == -2);
    CHECK(cusp.at(2, 2) == -1);
    CHECK(cusp.at(0, 2) == 1);
    CHECK(cusp.at(1, 2) == 1);
    CHECK(cusp.at(2, 3) == 1);
    CHECK(cusp.at(0, 1) == 0);
    CHECK_FALSE(cusp.diagonal_known[3]);

    auto node = intersection_matrix(fixtures::node());
    CHECK(node.at(0, 0) == -1);
    CHECK(node.at(0, 1) == 1);
    CHECK(node.at(0, 2) == 1);

    SncConfiguration lone;
    Divisor e;
    e.exceptional = true;
    e.over_sigma = true;
    e.genus = 0;
    e.self_int = -1;
    e.disc = 2;
    lone.divisors = {e};
    auto one = intersection_matrix(lone);
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries[0][0] == -1);
}

TEST_CASE("weight solver")
{
    CHECK(solve_weights(fixtures::cusp()) == WeightVector{{0, 4}, {1, 6}, {2, 11}});
    CHECK(solve_weights(fixtures::node()) == WeightVector{{0, 1}});
    CHECK_THROWS_AS(solve_weights(power_configuration(3)), UnsupportedError);

    auto bad = fixtures::node();
    bad.divisor(0).self_int = -1;
    bad.divisors.push_back(bad.divisor(0));
    bad.divisors.back().id = 7;
    bad.cells.push_back({{0, 7}, 2, true});
    CHECK_THROWS_AS(solve_weights(bad), PreconditionError);
}

TEST_CASE("weight validation")
{
    auto cusp = fixtures::cusp();
    CHECK(validate_weights(cusp, {{0, 4}, {1, 6}, {2, 11}}));
    CHECK_FALSE(validate_weights(cusp, {{0, 2}, {1, 3}, {2, 6}}));
    CHECK_FALSE(validate_weights(cusp, {{0, 0}, {1, 0}, {2, 0}}));
    CHECK_FALSE(validate_weights(cusp, {{0, 4}, {1, 6}, {2, 11}, {3, 1}}));
    CHECK_FALSE(validate_weights(cusp, {{0, -4}}));
    CHECK(validate_weights(power_configuration(2), {}));

    SncConfiguration high;
    high.ambient_dim = 3;
    Divisor e;
    e.exceptional = true;
    e.over_sigma = true;
    e.disc = 3;
    high.divisors = {e};
    CHECK_FALSE(validate_weights(high, {}));
    CHECK(validate_weights(high, {{0, 2}}));
}

TEST_CASE("property: solver output, scaling and weight independence of page content")
{
    for (const char* f : {"x^2+y^3", "x*y", "x^3+y^4", "x^2+y^5", "x^3+y^5", "x^4+y^5", "x*y*(x-y)"}) {
        auto base = fixtures::curve(f);
        for (long long m = 1; m <= 12; ++m) {
            auto cfg = separate(base, m).config;
            auto w = solve_weights(cfg);
            CAPTURE(f);
            CAPTURE(m);
            REQUIRE(validate_weights(cfg, w));
            std::vector<WeightVector> choices{w, scale_weights(w, 2), scale_weights(w, 3)};
            WeightVector bumped = w;
            for (auto& [id, value] : bumped) {
                value *= 5;
            }
            bumped.begin()->second += 1;
            if (validate_weights(cfg, bumped)) {
                choices.push_back(bumped);
            }
            auto reference = page_content(e1_page(cfg, w, m));
            for (const auto& v : choices) {
                CHECK(validate_weights(cfg, v));
                CHECK(page_content(e1_page(cfg, v, m)) == reference);
            }
        }
    }
}
