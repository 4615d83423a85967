#include "doctest.h"
#include "fixtures.hpp"

#include "contact/errors.hpp"

using namespace contact;

TEST_CASE("hand-written cusp configuration validates")
{
    auto report = validate_configuration(fixtures::cusp_by_hand());
    CHECK(report.valid());
    CHECK(report.issues.empty());
}

TEST_CASE("invalid divisors are reported by name")
{
    auto cfg = fixtures::cusp_by_hand();
    cfg.divisor(0).disc = 0;
    auto report = validate_configuration(cfg);
    REQUIRE_FALSE(report.valid());
    CHECK(report.issues[0].message == "disc ≥ 1");
    CHECK(report.issues[0].subject == "divisor 0 (E1)");

    cfg = fixtures::cusp_by_hand();
    cfg.divisor(3).disc = 2;
    report = validate_configuration(cfg);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].message == "non-exceptional ⇒ disc = 1");
}

TEST_CASE("structural violations")
{
    auto cfg = fixtures::cusp_by_hand();
    cfg.divisor(2).self_int = 0;
    CHECK(validate_configuration(cfg).issues[0].message == "exceptional ⇒ self_int < 0");

    cfg = fixtures::cusp_by_hand();
    cfg.divisor(1).genus.reset();
    CHECK(validate_configuration(cfg).issues[0].message == "genus required when ambient_dim = 2");

    cfg = fixtures::cusp_by_hand();
    for (auto& d : cfg.divisors) {
        d.over_sigma = false;
    }
    CHECK_FALSE(validate_configuration(cfg).valid());

    cfg = fixtures::cusp_by_hand();
    cfg.cells.push_back({{1, 1}, 1, true});
    CHECK_FALSE(validate_configuration(cfg).valid());

    cfg = fixtures::cusp_by_hand();
    cfg.cells.push_back({{1, 9}, 1, true});
    CHECK_FALSE(validate_configuration(cfg).valid());

    auto line = power_configuration(3);
    line.cells.push_back({{0, 0}, 1, true});
    auto r = validate_configuration(line);
    CHECK_FALSE(r.valid());
    CHECK_THROWS_AS(require_valid(line), ValidationError);
}

TEST_CASE("dual complex multiplicities")
{
    auto dc = build_dual_complex(fixtures::cusp_by_hand());
    REQUIRE(dc.one_cells.size() == 3);
    CHECK(dc.one_cells[0].m_sigma == 8);
    CHECK(dc.one_cells[1].m_sigma == 9);
    CHECK(dc.one_cells[2].m_sigma == 7);

    auto node = build_dual_complex(fixtures::node());
    REQUIRE(node.one_cells.size() == 2);
    CHECK(node.one_cells[0].m_sigma == 3);
    CHECK(node.one_cells[1].m_sigma == 3);

    CHECK(build_dual_complex(power_configuration(4)).one_cells.empty());

    auto bad = fixtures::cusp_by_hand();
    bad.divisor(0).mult = 0;
    CHECK_THROWS_AS(build_dual_complex(bad), ValidationError);
}

TEST_CASE("Euler characteristics of open strata")
{
    auto cusp = fixtures::cusp_by_hand();
    CHECK(euler_open_stratum(cusp, 2) == -1);
    CHECK(euler_open_stratum(cusp, 0) == 1);
    CHECK(euler_open_stratum(fixtures::node(), 0) == 0);
    CHECK(euler_open_stratum(power_configuration(5), 0) == 1);

    SncConfiguration high;
    high.ambient_dim = 3;
    Divisor d;
    d.over_sigma = true;
    high.divisors.push_back(d);
    CHECK_THROWS_AS(euler_open_stratum(high, 0), UnsupportedError);
    high.divisors[0].euler = -2;
    CHECK(euler_open_stratum(high, 0) == -2);
}

// Each intersection point is removed from exactly two open strata.
TEST_CASE("property: strata Euler characteristics and punctures balance")
{
    for (const char* f : {"x^2+y^3", "x*y", "x^3+y^4", "x^2+y^5", "x^3+y^5", "x*y*(x+y)", "y^2-x^2-x^3"}) {
        auto cfg = fixtures::curve(f);
        long long lhs = 0;
        long long rhs = 0;
        for (const auto& d : cfg.divisors) {
            lhs += euler_open_stratum(cfg, d.id);
            rhs += 2 - 2 * *d.genus;
        }
        for (const auto& c : cfg.cells) {
            lhs += 2 * c.count;
        }
        CAPTURE(f);
        CHECK(lhs == rhs);
        auto a = build_dual_complex(cfg);
        auto b = build_dual_complex(cfg);
        REQUIRE(a.one_cells.size() == b.one_cells.size());
        for (std::size_t k = 0; k < a.one_cells.size(); ++k) {
            CHECK(a.one_cells[k].m_sigma == b.one_cells[k].m_sigma);
            CHECK(a.one_cells[k].m_sigma > std::max(cfg.divisor(a.one_cells[k].i).mult,
                                                    cfg.divisor(a.one_cells[k].j).mult));
        }
    }
}
