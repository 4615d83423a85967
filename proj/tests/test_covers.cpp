#include "doctest.h"
#include "fixtures.hpp"

#include "contact/covers.hpp"
#include "contact/errors.hpp"

using namespace contact;

TEST_CASE("component counts")
{
    auto cusp = fixtures::cusp();
    CHECK(cover_component_count(cusp, 0) == 2);
    CHECK(cover_component_count(cusp, 2) == 1);
    SncConfiguration lone;
    Divisor d;
    d.mult = 5;
    d.disc = 2;
    d.exceptional = true;
    d.over_sigma = true;
    d.genus = 0;
    d.self_int = -1;
    lone.divisors = {d};
    CHECK(cover_component_count(lone, 0) == 5);
    CHECK(cover_betti(lone, 0).betti == std::vector<long long>{5, 0, 5});
}

TEST_CASE("cover Betti numbers")
{
    auto cusp = fixtures::cusp();
    CHECK(cover_betti(cusp, 0).betti == std::vector<long long>{2, 0});
    CHECK(cover_betti(cusp, 1).betti == std::vector<long long>{3, 0});
    CHECK(cover_betti(cusp, 2).betti == std::vector<long long>{1, 7});
    auto node = cover_betti(fixtures::node(), 0);
    CHECK(node.components == 1);
    CHECK(node.betti == std::vector<long long>{1, 1});
    CHECK(cover_betti(power_configuration(4), 0).betti == std::vector<long long>{4});
}

TEST_CASE("one-puncture consistency is enforced")
{
    auto cusp = fixtures::cusp();
    cusp.divisor(0).mult = 4; // E1 meets E3 (m = 6) once: gcd 2 ≠ 4
    CHECK_THROWS_AS(cover_betti(cusp, 0), ValidationError);
}

TEST_CASE("positive genus and higher dimension need supplied data")
{
    auto cusp = fixtures::cusp();
    cusp.divisor(2).genus = 1;
    CHECK_THROWS_AS(cover_betti(cusp, 2), UnsupportedError);
    cusp.divisor(2).cover = SuppliedCover{1, {1, 9}, {{1, {2}}}};
    auto supplied = cover_betti(cusp, 2);
    CHECK(supplied.source == CoverSource::supplied);
    CHECK(supplied.torsion.size() == 1);
    CHECK(supplied.betti == std::vector<long long>{1, 9});
}

TEST_CASE("property: cover Euler characteristic is m times the base")
{
    for (const char* f : {"x^2+y^3", "x*y", "x^3+y^4", "x^2+y^5", "x^3+y^5", "x^4+y^5", "x^2+y^4", "x*y*(x-y)",
                          "(x^2-y^3)*(x^3-y^2)"}) {
        auto cfg = fixtures::curve(f);
        for (const auto& d : cfg.divisors) {
            CAPTURE(f);
            CAPTURE(d.id);
            auto cover = cover_betti(cfg, d.id);
            CHECK(cover.betti[0] == cover.components);
            CHECK(d.mult % cover.components == 0);
            CHECK(cover.euler() == d.mult * euler_open_stratum(cfg, d.id));
        }
    }
}
