#include "doctest.h"
#include "fixtures.hpp"

#include "contact/errors.hpp"
#include "contact/lefschetz.hpp"
#include "contact/separation.hpp"

using namespace contact;

TEST_CASE("Lefschetz numbers")
{
    auto cusp = fixtures::cusp();
    std::vector<long long> got;
    for (long long m = 1; m <= 6; ++m) {
        got.push_back(lefschetz_number(cusp, m));
    }
    CHECK(got == std::vector<long long>{0, 2, 3, 2, 0, -1});
    for (long long m = 1; m <= 8; ++m) {
        CHECK(lefschetz_number(fixtures::node(), m) == 0);
        CHECK(lefschetz_number(power_configuration(3), m) == (m % 3 == 0 ? 3 : 0));
    }
}

TEST_CASE("zeta functions")
{
    auto cusp = zeta_factorization(fixtures::cusp());
    CHECK(cusp.reduced == std::vector<ZetaFactor>{{2, -1}, {3, -1}, {6, 1}});
    CHECK(cusp.render() == "(1-t^6) / ((1-t^2)(1-t^3))");
    auto node = zeta_factorization(fixtures::node());
    CHECK(node.reduced.empty());
    CHECK(node.render() == "1");
    CHECK(zeta_factorization(power_configuration(4)).render() == "1 / (1-t^4)");
}

TEST_CASE("Euler cross-check")
{
    const WeightVector w{{0, 4}, {1, 6}, {2, 11}};
    auto six = cross_check_euler(fixtures::cusp(), w, 6);
    CHECK(six.pass);
    CHECK(six.page_euler == -1);
    auto five = cross_check_euler(fixtures::cusp(), w, 5);
    CHECK(five.pass);
    CHECK(five.lefschetz == 0);
    CHECK(cross_check_euler(fixtures::node(), {{0, 1}}, 2).pass);
    CHECK_THROWS_AS(cross_check_euler(fixtures::cusp(), w, 7), PreconditionError);
}

TEST_CASE("property: invariance under extra blowups at free points")
{
    for (const char* f : {"x^2+y^3", "x^3+y^4", "x*y"}) {
        auto cfg = fixtures::curve(f);
        auto z = zeta_factorization(cfg);
        for (int id : cfg.ids()) {
            if (!cfg.divisor(id).exceptional) {
                continue;
            }
            auto bigger = blowup_free_point(cfg, id);
            CHECK(validate_configuration(bigger).valid());
            CHECK(zeta_factorization(bigger).reduced == z.reduced);
            for (long long m = 1; m <= 12; ++m) {
                CHECK(lefschetz_number(bigger, m) == lefschetz_number(cfg, m));
            }
        }
    }
}
