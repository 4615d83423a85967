#include "doctest.h"
#include "fixtures.hpp"

#include <random>

#include "contact/errors.hpp"
#include "contact/jet_oracle.hpp"

using namespace contact;

namespace
{

Polynomial poly(const char* text, int vars = 2)
{
    return parse_polynomial(text, vars);
}

TruncatedSeries series(std::uint32_t q, std::vector<std::uint32_t> c)
{
    return TruncatedSeries(q, std::move(c));
}

} // namespace

TEST_CASE("evaluation on jets")
{
    auto cusp = evaluate_on_jet(poly("x^2+y^3"), {series(5, {0, 1, 0}), series(5, {0, 1, 0})}, 2);
    CHECK(cusp == series(5, {0, 0, 1}));
    auto node = evaluate_on_jet(poly("x*y"), {series(7, {0, 2, 0}), series(7, {0, 3, 0})}, 2);
    CHECK(node == series(7, {0, 0, 6}));
    auto square = evaluate_on_jet(poly("x^2", 1), {series(11, {0, 1, 1, 0})}, 3);
    CHECK(square == series(11, {0, 0, 1, 2}));
    CHECK(square.to_string() == "t^2 + 2t^3");
    CHECK(square.order() == 2);
    CHECK_THROWS_AS(evaluate_on_jet(poly("x*y"), {series(7, {0, 1})}, 1), DomainError);
}

TEST_CASE("reduction mod q")
{
    auto g = reduce_mod(poly("x^2 - 3*y"), 7);
    REQUIRE(g.terms.size() == 2);
    CHECK(g.order() == 1);
    CHECK_THROWS_AS(reduce_mod(poly("x") , 9), DomainError);
    Polynomial half(1);
    half.add_term({1}, Rational(1, 3));
    CHECK_THROWS_AS(reduce_mod(half, 3), DomainError);
    CHECK(reduce_mod(half, 5).terms[0].second == 2);
}

TEST_CASE("contact counts of worked examples")
{
    CHECK(contact_count(poly("x^3", 1), 3, 3, 7).total == 147);
    CHECK(contact_count(poly("x^2+y^3"), 2, 2, 5).total == 250);
    CHECK(contact_count(poly("x*y"), 2, 2, 3).total == 18);
    CHECK(contact_count(poly("x^2+y^3"), 1, 1, 5).total == 0);
    CHECK(contact_count(poly("x^2+y^3"), 3, 3, 7).total == 3 * 2401);
}

TEST_CASE("x^r closed form")
{
    for (long long r = 1; r <= 5; ++r) {
        for (long long m = 1; m <= 6; ++m) {
            for (std::uint32_t q : {3U, 5U, 7U}) {
                CAPTURE(r);
                CAPTURE(m);
                CAPTURE(q);
                auto got = contact_count(poly(("x^" + std::to_string(r)).c_str(), 1), m, m, q).total;
                CHECK(got == closed_form_power(r, m, q));
                if (m % r != 0) {
                    CHECK(got == 0);
                }
            }
        }
    }
}

TEST_CASE("stratified counts")
{
    auto cusp2 = contact_count(poly("x^2+y^3"), 2, 3, 5);
    CHECK(cusp2.total == 2 * 3125);
    Integer sum = 0;
    for (const auto& [orders, n] : cusp2.strata) {
        CHECK(orders[0] == 1);
        sum += n;
    }
    CHECK(sum == cusp2.total);
    auto att = attribute_strata(cusp2, {{0, 1, 2, {1, 1}}});
    REQUIRE(att.groups.size() == 1);
    CHECK(att.unattributed.empty());
    CHECK(att.groups[0].count == cusp2.total);
    CHECK(att.groups[0].fiber_exponent == 4);
    CHECK(att.groups[0].divisible);
    CHECK(att.groups[0].quotient == 10);

    auto cusp3 = contact_count(poly("x^2+y^3"), 3, 3, 7);
    auto att3 = attribute_strata(cusp3, {{1, 1, 3, {2, 1}}});
    CHECK(att3.groups[0].count == 3 * 2401);
    CHECK(att3.groups[0].quotient == 21);
    CHECK(cusp3.strata.count({2, 1}) == 1);
}

TEST_CASE("tail modes agree with each other and with full enumeration")
{
    std::mt19937 rng(20240611);
    const char* family[] = {"x^2+y^3", "x*y", "x^2", "x^2+y^2", "x^3+x*y", "y^2-x^3+x*y", "x^2*y"};
    for (const char* f : family) {
        for (std::uint32_t q : {2U, 3U}) {
            for (long long m = 1; m <= 3; ++m) {
                for (long long l = m; l <= 4; ++l) {
                    if (2 * l > 8) {
                        continue;
                    }
                    CAPTURE(f);
                    CAPTURE(q);
                    CAPTURE(m);
                    CAPTURE(l);
                    auto fast = contact_count(poly(f), m, l, q);
                    CountOptions opt;
                    opt.tail = TailMode::enumerate;
                    auto slow = contact_count(poly(f), m, l, q, opt);
                    auto naive = naive_contact_count(poly(f), m, l, q);
                    CHECK(fast.total == naive.total);
                    CHECK(fast.strata == naive.strata);
                    CHECK(slow.strata == naive.strata);
                }
            }
        }
    }
    // Random sparse polynomials with small integer coefficients.
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f(2);
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; a + b <= 3; ++b) {
                if (a + b >= 1 && rng() % 3 == 0) {
                    f.add_term({a, b}, coef(rng));
                }
            }
        }
        if (f.is_zero()) {
            continue;
        }
        for (long long m = 1; m <= 3; ++m) {
            CAPTURE(f.to_string());
            CAPTURE(m);
            CHECK(contact_count(f, m, 4, 2).strata == naive_contact_count(f, m, 4, 2).strata);
            CHECK(contact_count(f, m, m, 3).strata == naive_contact_count(f, m, m, 3).strata);
        }
    }
}

TEST_CASE("parallel partitioning is bit-identical")
{
    for (unsigned threads : {2U, 3U, 5U}) {
        CountOptions opt;
        opt.threads = threads;
        auto a = contact_count(poly("x^2+y^3"), 3, 4, 7);
        auto b = contact_count(poly("x^2+y^3"), 3, 4, 7, opt);
        CHECK(a.total == b.total);
        CHECK(a.strata == b.strata);
        CHECK(a.nodes == b.nodes);
    }
}

TEST_CASE("dummy variable multiplies by q^l")
{
    for (long long l = 2; l <= 3; ++l) {
        auto base = contact_count(poly("x*y"), 2, l, 3);
        auto lifted = contact_count(poly("x*y", 3), 2, l, 3);
        Integer ql = 1;
        for (long long k = 0; k < l; ++k) {
            ql *= 3;
        }
        CHECK(lifted.total == base.total * ql);
    }
}

TEST_CASE("node cap and progress")
{
    CountOptions opt;
    opt.node_cap = 10;
    CHECK_THROWS_AS(contact_count(poly("x^2+y^3"), 3, 3, 7, opt), ResourceError);
    CountOptions watch;
    watch.progress_every = 100;
    std::uint64_t calls = 0;
    watch.progress = [&](std::uint64_t) { ++calls; };
    auto r = contact_count(poly("x^2+y^3"), 3, 3, 7, watch);
    CHECK(calls >= r.nodes / 4096 / 1);
    CHECK_THROWS_AS(contact_count(poly("x*y"), 2, 1, 3), DomainError);
    CHECK_THROWS_AS(contact_count(poly("x*y"), 2, 2, 4), DomainError);
}

TEST_CASE("Euler characteristic interpolation")
{
    auto node = interpolate_chi({{3, 18}, {5, 100}, {7, 294}}, 3, 2);
    CHECK(node.polynomial);
    CHECK(node.chi == 0);
    CHECK(node.coefficients == std::vector<Rational>{0, 0, -1, 1});
    auto cusp = interpolate_chi({{3, 54}, {5, 250}, {7, 686}}, 3, 2);
    CHECK(cusp.chi == 2);
    CHECK(cusp.degree == 3);
    auto constant = interpolate_chi({{3, 7}, {5, 7}}, 0);
    CHECK(constant.polynomial);
    CHECK(constant.chi == 7);
    auto full = interpolate_chi({{3, 18}, {5, 100}, {7, 294}, {11, 1210}, {13, 2028}}, 3);
    CHECK(full.polynomial);
    CHECK(full.degree == 3);
    auto few = interpolate_chi({{3, 18}, {5, 100}}, 3);
    CHECK_FALSE(few.sufficient);
    auto twisted = interpolate_chi({{5, 125}, {7, 3 * 343}, {11, 1331}}, 3, 3);
    CHECK_FALSE(twisted.polynomial);
    CHECK(twisted.verdict == "not polynomial-count, inconclusive");
}

TEST_CASE("chart fibration")
{
    CHECK(verify_chart_fibration(1, 1, 3, 2, 2).histogram == std::map<std::uint64_t, std::uint64_t>{{3, 6}});
    auto two = verify_chart_fibration(2, 2, 3, 2, 2);
    CHECK(two.pass);
    CHECK(two.histogram.begin()->first == 9);
    auto zero = verify_chart_fibration(0, 1, 3, 2, 2);
    CHECK(zero.pass);
    CHECK(zero.histogram.begin()->first == 1);
    CHECK(verify_chart_fibration(2, 3, 5, 2, 2).pass);
    CHECK(verify_chart_fibration(1, 2, 3, 3, 3).pass);
    CHECK_THROWS_AS(verify_chart_fibration(1, 1, 3, 2, 3), DomainError);
}

TEST_CASE("CSV export")
{
    std::vector<CountReport> reports{contact_count(poly("x*y"), 2, 2, 3), contact_count(poly("x*y"), 2, 2, 5)};
    CHECK(counts_csv(reports) == "q,N\n3,18\n5,100\n");
}
