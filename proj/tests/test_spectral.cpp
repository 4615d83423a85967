#include "doctest.h"
#include "fixtures.hpp"

#include "contact/errors.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"

using namespace contact;

namespace
{

const WeightVector kCuspWeights{{0, 4}, {1, 6}, {2, 11}};

} // namespace

TEST_CASE("contributing sets")
{
    auto cusp = fixtures::cusp();
    auto s6 = contributing_set(cusp, kCuspWeights, 6);
    REQUIRE(s6.members.size() == 3);
    CHECK(s6.members[0] == Contributor{0, 3, -12});
    CHECK(s6.members[1] == Contributor{1, 2, -12});
    CHECK(s6.members[2] == Contributor{2, 1, -11});
    CHECK(contributing_set(cusp, kCuspWeights, 5).members.empty());
    auto node = contributing_set(fixtures::node(), {{0, 1}}, 2);
    REQUIRE(node.members.size() == 1);
    CHECK(node.members[0] == Contributor{0, 1, -1});
    CHECK_THROWS_AS(contributing_set(cusp, kCuspWeights, 7), PreconditionError);
}

TEST_CASE("x^r pages")
{
    for (long long r = 1; r <= 5; ++r) {
        for (long long m = 1; m <= 10; ++m) {
            auto page = e1_page(power_configuration(r), {}, m);
            if (m % r != 0) {
                CHECK(page.entries.empty());
                continue;
            }
            REQUIRE(page.entries.size() == 1);
            auto [pq, entry] = *page.entries.begin();
            CHECK(pq == std::pair<long long, long long>{0, 2 * (m - m / r)});
            CHECK(entry.rank == r);
        }
    }
}

TEST_CASE("cusp pages")
{
    auto cusp = fixtures::cusp();
    auto p2 = e1_page(cusp, kCuspWeights, 2);
    REQUIRE(p2.entries.size() == 1);
    CHECK(p2.rank_by_degree() == std::map<long long, long long>{{6, 2}});

    auto p6 = e1_page(cusp, kCuspWeights, 6);
    CHECK(p6.rank_by_degree() == std::map<long long, long long>{{14, 5}, {15, 7}, {16, 1}});
    CHECK(p6.entries.at({-12, 26}).rank == 5);
    CHECK(p6.entries.at({-12, 26}).contributors.size() == 2);
    CHECK(p6.entries.at({-11, 26}).rank == 7);
    CHECK(p6.entries.at({-11, 27}).rank == 1);
    CHECK(p6.euler() == -1);
}

TEST_CASE("missing cover data is reported")
{
    CHECK_THROWS_WITH_AS(e1_page(fixtures::cusp(), kCuspWeights, 6, {}),
                         "missing cover data for divisor(s) 0, 1, 2", PreconditionError);
}

TEST_CASE("degeneration analysis")
{
    auto cusp = fixtures::cusp();
    auto h2 = degeneration_analysis(e1_page(cusp, kCuspWeights, 2));
    REQUIRE(h2.degrees.size() == 1);
    CHECK(h2.degrees.at(6).status == RankStatus::exact);
    CHECK(h2.degrees.at(6).lo == 2);
    CHECK(h2.degrees.at(6).integral_exact);
    CHECK(h2.integral_forced);

    auto h6 = degeneration_analysis(e1_page(cusp, kCuspWeights, 6));
    CHECK(h6.degrees.at(16).status == RankStatus::exact);
    CHECK(h6.degrees.at(16).lo == 1);
    CHECK(h6.degrees.at(16).integral_exact);
    CHECK(h6.degrees.at(14).status == RankStatus::bounds);
    CHECK(h6.degrees.at(14).lo == 0);
    CHECK(h6.degrees.at(14).hi == 5);
    CHECK(h6.degrees.at(15).lo == 2);
    CHECK(h6.degrees.at(15).hi == 7);
    CHECK(h6.euler == -1);
    CHECK_FALSE(h6.rational_window_forced);

    auto empty = degeneration_analysis(e1_page(cusp, kCuspWeights, 5));
    CHECK(empty.degrees.empty());
    CHECK(empty.euler == 0);

    auto node = degeneration_analysis(e1_page(fixtures::node(), {{0, 1}}, 2));
    CHECK(node.degrees.at(5).status == RankStatus::exact);
    CHECK(node.degrees.at(6).status == RankStatus::exact);
    CHECK(node.degrees.at(5).lo == 1);
    CHECK(node.degrees.at(6).lo == 1);
}

TEST_CASE("torsion is carried and downgrades to graded")
{
    auto cusp = fixtures::cusp();
    cusp.divisor(0).cover = SuppliedCover{2, {2, 0}, {{1, {3}}}};
    auto page = e1_page(cusp, kCuspWeights, 2);
    auto report = degeneration_analysis(page);
    REQUIRE(report.degrees.count(5));
    CHECK(report.degrees.at(5).torsion == std::vector<long long>{3});
    CHECK(report.degrees.at(5).graded_only);
    CHECK(report.degrees.at(5).status == RankStatus::exact);
}

TEST_CASE("relabeling")
{
    auto page = e1_page(fixtures::cusp(), kCuspWeights, 2);
    auto moved = mclean_relabel(page);
    CHECK(moved.rank_by_degree() == std::map<long long, long long>{{-3, 2}});
    CHECK(mclean_relabel_inverse(moved) == page);
    auto xr = mclean_relabel(e1_page(power_configuration(3), {}, 3));
    CHECK(xr.rank_by_degree() == std::map<long long, long long>{{-2, 3}});
    E1Page none;
    none.d = 2;
    none.m = 4;
    CHECK(mclean_relabel(none).entries.empty());
}

TEST_CASE("multiplicity case")
{
    CHECK(multiplicity_case_prediction(2, 2, milnor_betti_power(2)) == std::map<long long, long long>{{6, 2}});
    CHECK(milnor_betti_from_initial_form(parse_polynomial("x^2+y^3")) == std::vector<long long>{2});
    auto b = milnor_betti_from_initial_form(parse_polynomial("x^3+y^3"));
    CHECK(b == std::vector<long long>{1, 4});
    CHECK(multiplicity_case_prediction(2, 3, b) == std::map<long long, long long>{{10, 1}, {9, 4}});
    CHECK(multiplicity_case_prediction(1, 4, milnor_betti_power(4)) == std::map<long long, long long>{{6, 4}});
    CHECK(milnor_betti_homogeneous_isolated(1, 4) == std::vector<long long>{4});
    CHECK_THROWS_AS(milnor_betti_from_initial_form(parse_polynomial("x^2*y+y^4")), UnsupportedError);
}

TEST_CASE("dimensions and stabilization")
{
    auto cusp = fixtures::cusp();
    CHECK(stabilization_level(cusp, 2) == 3);
    CHECK(stabilization_level(cusp, 6) == 10);
    CHECK(stabilization_level(power_configuration(4), 4) == 4);
    CHECK_THROWS_AS(stabilization_level(cusp, 5), PreconditionError);
    CHECK(stratum_dimension(cusp, 0, 2) == 3);
    CHECK(stratum_dimension(cusp, 2, 6) == 8);
    CHECK(stratum_dimension(fixtures::node(), 0, 2, 3) == 5);
    CHECK(fiber_dimension({{1, 2}}) == 1);
    CHECK(fiber_dimension(cusp, 2, 6) == 4);
    CHECK(fiber_dimension({{3, 1}}) == 0);
}

TEST_CASE("gap analysis")
{
    auto gap = gap_analysis(fixtures::cusp(), kCuspWeights, 6);
    CHECK(gap.minimal_scale == 3);
    CHECK(gap.report.rational_window_forced);
    CHECK(gap.label == kGapAnalysisLabel);
    CHECK(gap_analysis(fixtures::cusp(), kCuspWeights, 2).minimal_scale == 1);
}

TEST_CASE("property: page invariants across the curve suite")
{
    for (const char* f : {"x^2+y^3", "x*y", "x^3+y^4", "x^2+y^5", "x^3+y^5", "x^4+y^5", "x*y*(x-y)", "x^2"}) {
        auto base = fixtures::curve(f);
        for (long long m = 1; m <= 12; ++m) {
            CAPTURE(f);
            CAPTURE(m);
            auto cfg = separate(base, m).config;
            auto w = solve_weights(cfg);
            auto page = e1_page(cfg, w, m);
            long long covers_chi = 0;
            for (const auto& c : contributing_set(cfg, w, m).members) {
                covers_chi += cover_betti(cfg, c.id).euler();
            }
            CHECK(page.euler() == covers_chi);
            auto report = degeneration_analysis(page);
            long long lo = 0;
            long long hi = 0;
            for (const auto& [n, dr] : report.degrees) {
                CHECK(dr.lo <= dr.hi);
                lo += n % 2 == 0 ? dr.lo : -dr.hi;
                hi += n % 2 == 0 ? dr.hi : -dr.lo;
            }
            CHECK(lo <= page.euler());
            CHECK(page.euler() <= hi);
            CHECK(report.euler == page.euler());
            CHECK(mclean_relabel_inverse(mclean_relabel(page)) == page);
            CHECK(e1_page(separate(cfg, m).config, w, m) == page);
            for (const auto& [pq, entry] : page.entries) {
                for (const auto& c : entry.contributors) {
                    CHECK(cfg.divisor(c.id).mult <= m);
                }
            }
        }
    }
}
