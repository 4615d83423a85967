#include "doctest.h"
#include "fixtures.hpp"

#include "contact/covers.hpp"
#include "contact/errors.hpp"
#include "contact/lefschetz.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"

using namespace contact;

TEST_CASE("minimum pair multiplicity")
{
    CHECK(min_pair_multiplicity(build_dual_complex(fixtures::cusp())) == 7);
    CHECK(min_pair_multiplicity(build_dual_complex(fixtures::node())) == 3);
    CHECK_FALSE(min_pair_multiplicity(build_dual_complex(power_configuration(3))).has_value());
}

TEST_CASE("m-separation predicate")
{
    CHECK(is_m_separating(fixtures::cusp(), 6));
    CHECK_FALSE(is_m_separating(fixtures::cusp(), 7));
    CHECK(is_m_separating(fixtures::node(), 2));
    CHECK(is_m_separating(power_configuration(2), 100));
}

TEST_CASE("cusp at m = 7 needs one subdivision")
{
    auto cusp = fixtures::cusp();
    auto res = separate(cusp, 7);
    REQUIRE(res.records.size() == 1);
    const auto& rec = res.records[0];
    CHECK(rec.i == 2);
    CHECK(rec.j == 3);
    CHECK(rec.mult == 7);
    CHECK(rec.disc == 6);
    CHECK(is_m_separating(res.config, 7));
    auto dc = build_dual_complex(res.config);
    std::vector<long long> sums;
    for (const auto& c : dc.one_cells) {
        sums.push_back(c.m_sigma);
    }
    std::sort(sums.begin(), sums.end());
    CHECK(sums == std::vector<long long>{8, 8, 9, 13});
    CHECK(*res.config.divisor(2).self_int == -2);
    CHECK(*res.config.divisor(rec.new_divisor).self_int == -1);
    CHECK(separate(cusp, 6).records.empty());
    CHECK(separate(cusp, 6).config == cusp);
}

TEST_CASE("node at m = 3 subdivides both edges")
{
    auto res = separate(fixtures::node(), 3);
    REQUIRE(res.records.size() == 2);
    for (const auto& rec : res.records) {
        CHECK(rec.mult == 3);
        CHECK(rec.disc == 3);
    }
    CHECK(min_pair_multiplicity(build_dual_complex(res.config)) == 4);
}

TEST_CASE("multi-point cells are subdivided one point at a time")
{
    auto cfg = fixtures::curve("x^2+y^2");
    REQUIRE(cfg.cells[0].count == 2);
    auto res = separate(cfg, 3);
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[0].point_index == 0);
    CHECK(res.records[1].point_index == 1);
    CHECK(is_m_separating(res.config, 3));
}

TEST_CASE("missing over_sigma flag defaults with a warning")
{
    auto cfg = fixtures::node();
    cfg.cells[0].over_sigma.reset();
    auto res = separate(cfg, 3);
    CHECK(res.records[0].over_sigma_defaulted);
    CHECK(res.records[0].over_sigma);
    CHECK(res.warnings.size() == 1);
}

TEST_CASE("higher dimension: checker only")
{
    SncConfiguration cfg;
    cfg.ambient_dim = 3;
    Divisor a;
    a.id = 0;
    a.mult = 1;
    a.disc = 2;
    a.exceptional = true;
    a.over_sigma = true;
    Divisor b = a;
    b.id = 1;
    cfg.divisors = {a, b};
    cfg.cells = {{{0, 1}, 1, true}};
    CHECK(separate(cfg, 1).records.empty());
    CHECK_THROWS_AS(separate(cfg, 2), UnsupportedError);
}

TEST_CASE("property: separation over the curve suite")
{
    for (const char* f : {"x^2+y^3", "x*y", "x^3+y^4", "x^2+y^5"}) {
        auto cfg = fixtures::curve(f);
        for (long long m = 1; m <= 12; ++m) {
            CAPTURE(f);
            CAPTURE(m);
            auto res = separate(cfg, m);
            CHECK(is_m_separating(res.config, m));
            for (const auto& rec : res.records) {
                CHECK(rec.mult == res.config.divisor(rec.i).mult + res.config.divisor(rec.j).mult);
                CHECK(rec.disc == res.config.divisor(rec.i).disc + res.config.divisor(rec.j).disc);
            }
            CHECK(lefschetz_number(res.config, m) == lefschetz_number(cfg, m));
            CHECK(zeta_factorization(res.config).reduced == zeta_factorization(cfg).reduced);
            CHECK(separate(res.config, m).records.empty());
            auto further = separate(res.config, m + 3);
            auto a = contributing_set(res.config, {}, m);
            auto b = contributing_set(further.config, {}, m);
            CHECK(a == b);
            for (const auto& c : a.members) {
                CHECK(cover_betti(res.config, c.id) == cover_betti(further.config, c.id));
            }
        }
    }
}
