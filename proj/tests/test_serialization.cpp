#include "doctest.h"
#include "fixtures.hpp"

#include "contact/errors.hpp"
#include "contact/jet_oracle.hpp"
#include "contact/lefschetz.hpp"
#include "contact/separation.hpp"
#include "contact/serialization.hpp"
#include "contact/spectral.hpp"
#include "contact/weights.hpp"

using namespace contact;

namespace
{

const WeightVector kCuspWeights{{0, 4}, {1, 6}, {2, 11}};

// to_json(from_json(to_json(x))) must reproduce the document.
template <class T, class Parse>
void check_fixpoint(const T& value, Parse parse)
{
    Json first = to_json(value);
    Json second = to_json(parse(first));
    CHECK(first.dump() == second.dump());
}

} // namespace

TEST_CASE("scalars survive JSON")
{
    CHECK(integer_to_json(Integer(42)) == Json(42));
    Integer big("123456789012345678901234567890");
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json("-17")) == -17);
    CHECK(rational_from_json(rational_to_json(Rational(-3, 7))) == Rational(-3, 7));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(integer_from_json(Json("x1")), ValidationError);
}

TEST_CASE("polynomials survive JSON")
{
    for (const char* text : {"x^2 + y^3", "x*y", "3*x^5 - 2*x*y^2 + 7", "x^2 + y^2 + z^2"}) {
        Polynomial f = parse_polynomial(text);
        CHECK(polynomial_from_json(polynomial_to_json(f)) == f);
    }
    Json j = Json::parse(R"({"nvars": 2, "terms": [{"exp": [2, 0], "coef": 1}, {"exp": [0, 3], "coef": "1"}]})");
    CHECK(polynomial_from_json(j) == parse_polynomial("x^2 + y^3"));
    CHECK(polynomial_from_json(Json::parse(R"({"nvars": 2, "terms": [{"exp": [1], "coef": 1}]})")) ==
          parse_polynomial("x", 2));
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"nvars": 2})")), ValidationError);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"terms": [{"exp": [-1], "coef": 1}]})")), ValidationError);
}

TEST_CASE("configurations survive JSON")
{
    for (const char* text : {"x^2 + y^3", "x*y", "x^3 + y^4", "x^2 + y^5", "x^2*y + y^4"}) {
        auto cfg = fixtures::curve(text);
        CHECK(configuration_from_json(to_json(cfg)) == cfg);
    }
    auto cfg = fixtures::cusp();
    cfg.weights = kCuspWeights;
    CHECK(configuration_from_json(to_json(cfg)) == cfg);

    Json broken = to_json(fixtures::cusp());
    broken["divisors"][0].erase("mult");
    CHECK_THROWS_AS(configuration_from_json(broken), ValidationError);
    Json dangling = to_json(fixtures::cusp());
    dangling["cells"][0]["ids"] = Json::array({0, 9});
    CHECK_FALSE(validate_configuration(configuration_from_json(dangling)).valid());
}

TEST_CASE("supplied cover data survives JSON")
{
    Json j = Json::parse(R"({
      "ambient_dim": 3, "sigma": "origin",
      "divisors": [
        {"id": 0, "label": "E", "mult": 2, "disc": 3, "exceptional": true, "over_sigma": true, "euler": 1,
         "cover": {"betti": [1, 0, 1], "components": 1, "torsion": [{"degree": 1, "orders": [2]}]}},
        {"id": 1, "label": "D", "mult": 1, "disc": 1, "exceptional": false, "over_sigma": false}
      ],
      "cells": [{"ids": [0, 1], "count": 1, "over_sigma": true}],
      "weights": {"0": 1}
    })");
    auto cfg = configuration_from_json(j);
    REQUIRE(cfg.divisors[0].cover);
    CHECK(cfg.divisors[0].cover->betti == std::vector<long long>{1, 0, 1});
    CHECK(cfg.weights == WeightVector{{0, 1}});
    CHECK(configuration_from_json(to_json(cfg)) == cfg);
}

TEST_CASE("pipeline results survive JSON")
{
    auto cusp = fixtures::cusp();
    SUBCASE("weights")
    {
        CHECK(weights_from_json(weights_to_json(kCuspWeights)) == kCuspWeights);
        CHECK_THROWS_AS(weights_from_json(Json::parse(R"({"a": 1})")), ValidationError);
    }
    SUBCASE("resolution log")
    {
        auto log = resolve_plane_curve(parse_polynomial("x^2 + y^3", 2)).log;
        check_fixpoint(log, resolution_log_from_json);
    }
    SUBCASE("separation")
    {
        auto result = separate(fixtures::node(), 3);
        auto back = separation_from_json(to_json(result));
        CHECK(back.config == result.config);
        CHECK(back.records == result.records);
    }
    SUBCASE("page and report")
    {
        auto page = e1_page(cusp, kCuspWeights, 6);
        CHECK(e1_page_from_json(to_json(page)) == page);
        auto report = degeneration_analysis(page);
        CHECK(hc_report_from_json(to_json(report)) == report);
        auto set = contributing_set(cusp, kCuspWeights, 6);
        CHECK(contributing_set_from_json(to_json(set)) == set);
    }
    SUBCASE("zeta and Euler check")
    {
        auto zeta = zeta_factorization(cusp);
        CHECK(zeta_from_json(to_json(zeta)) == zeta);
        check_fixpoint(cross_check_euler(cusp, kCuspWeights, 6), euler_check_from_json);
        check_fixpoint(gap_analysis(cusp, kCuspWeights, 6), gap_analysis_from_json);
    }
    SUBCASE("oracle")
    {
        auto f = parse_polynomial("x^2 + y^3", 2);
        auto count = contact_count(f, 2, 2, 5, {});
        auto back = count_report_from_json(to_json(count));
        CHECK(back.total == count.total);
        CHECK(back.strata == count.strata);
        check_fixpoint(count, count_report_from_json);
        check_fixpoint(interpolate_chi({{3, 54}, {5, 250}, {7, 686}, {11, 2662}}, 3), chi_fit_from_json);
        check_fixpoint(verify_chart_fibration(1, 1, 3, 2, 2, 1000000), fibration_from_json);
    }
}
