#include <doctest.h>

#include "support/generators.hpp"
#include "tropdiff/error.hpp"
#include "tropdiff/series.hpp"
#include "tropdiff/textio.hpp"

using namespace tropdiff;
using tropdiff::testing::Gen;

namespace {

const Field Q = Field::rationals();
const Field Q2 = Field::quadratic(2);

PowerSeries ps(std::string_view text, std::size_t m, Field f = Q)
{
    return parse_series(text, ParseContext{m, 1, f});
}

FieldElement q(long a, long b = 1) { return FieldElement(Q, Rational(a, b)); }

} // namespace

TEST_CASE("quadratic field arithmetic")
{
    CHECK_THROWS_AS(Field::quadratic(4), InvalidInput);
    CHECK_THROWS_AS(Field::quadratic(-2), InvalidInput);
    CHECK_THROWS_AS(FieldElement(Q, 1, 1), FieldMismatch);

    const FieldElement r2(Q2, 0, 1);
    CHECK(r2 * r2 == FieldElement(Q2, 2));
    const FieldElement x(Q2, Rational(3, 2), Rational(-1, 3));
    CHECK(x * x.inverse() == FieldElement(Q2, 1));
    CHECK(x / x == FieldElement(Q2, 1));
    CHECK_THROWS_AS(FieldElement(Q2, 0).inverse(), std::domain_error);
    CHECK_THROWS_AS(x + FieldElement(Field::quadratic(3), 1), FieldMismatch);
}

TEST_CASE("property: norm identity and exact zero test")
{
    Gen g(41);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t d = std::vector<std::int64_t>{2, 3, 5, 6, 7}[g.uniform(0, 4)];
        const Field f = Field::quadratic(d);
        const Rational a = g.small_rational(9, 5), b = g.small_rational(9, 5);
        const FieldElement x(f, a, b);
        CHECK(x * x.conjugate() == FieldElement(f, a * a - d * b * b));
        CHECK(x.is_zero() == (a == 0 && b == 0));
        // d is not a square, so a + b sqrt(d) = 0 forces a = b = 0.
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("arithmetic")
{
    CHECK(ps("2*t1 + t2", 2) * ps("2*t1 - t2", 2) == ps("4*t1^2 - t2^2", 2));
    const auto phi = ps("1 + t1*t2", 2);
    CHECK(phi + PowerSeries(2, Q) == phi);
    const auto x = ps("(t1 + t2)*t3 + (t1 - t2)*t4", 4);
    CHECK(x == ps("t1*t3 + t2*t3 + t1*t4 - t2*t4", 4));
    CHECK_THROWS_AS(ps("t1", 1) + ps("t1", 2), InvalidInput);
    CHECK_THROWS_AS(ps("t1", 1) + ps("t1", 1, Q2), FieldMismatch);
}

TEST_CASE("derivation")
{
    CHECK(derive(ps("t1^2 + sqrtd*t1*t2 + 1/2*t2^2", 2, Q2), 0) == ps("2*t1 + sqrtd*t2", 2, Q2));
    CHECK(derive(ps("7", 2), 0).is_zero());
    CHECK(derive(ps("t1*t2^2", 2), 1) == ps("2*t1*t2", 2));
    CHECK(theta(Point{1, 1}, ps("t1^2*t2", 2)) == ps("2*t1", 2));
    const auto phi = ps("t1^3 + t2", 2);
    CHECK(theta(Point{0, 0}, phi) == phi);

    const auto phi2 = ps("1 - 1/2*sqrtd*t2 + 1/3*t1^3 + 1/2*sqrtd*t1^2*t2 + 1/2*t1*t2^2 + "
                         "1/12*sqrtd*t2^3",
                         2, Q2);
    // d^2/dt1^2 of 1/3 t1^3 is 2 t1; of 1/2 sqrt2 t1^2 t2 is sqrt2 t2.
    CHECK(theta(Point{2, 0}, phi2) == ps("2*t1 + sqrtd*t2", 2, Q2));
}

TEST_CASE("truncated series track precision")
{
    const auto a = ps("1 + t1 + O(3)", 1);
    REQUIRE(a.precision() == 3);
    CHECK(a.coefficient(Point{1}) == q(1));
    CHECK_THROWS_AS(a.coefficient(Point{3}), PrecisionError);
    CHECK((a + ps("t1^5", 1)).precision() == 3);
    CHECK((a + ps("t1^5", 1)).terms().size() == 2);
    // (1 + t + O(t^3)) * t = t + t^2 + O(t^4)
    const auto b = a * ps("t1", 1);
    CHECK(b.precision() == 4);
    CHECK(b == ps("t1 + t1^2 + O(4)", 1));
    // The product of two truncated series is known below min(N_x + ord y, N_y + ord x).
    const auto c = ps("t1 + O(3)", 1) * ps("t1^2 + O(5)", 1);
    CHECK(c.precision() == 5);
    CHECK(derive(a, 0).precision() == 2);
    CHECK_THROWS_AS(support(a), PrecisionError);
    CHECK_THROWS_AS(trop(a), PrecisionError);
    CHECK(taylor_coefficient(a, Point{1}) == q(1));
    CHECK_THROWS_AS(taylor_coefficient(a, Point{4}), PrecisionError);
}

TEST_CASE("support and trop")
{
    CHECK(support(ps("t1^2 + sqrtd*t1*t2 + 1/2*t2^2", 2, Q2)) ==
          SupportSet::finite(FinitePointSet(2, {Point{2, 0}, Point{1, 1}, Point{0, 2}})));
    CHECK(support(PowerSeries(2, Q)).empty());
    CHECK(support(ps("1 + t1^3", 2)) ==
          SupportSet::finite(FinitePointSet(2, {Point{0, 0}, Point{3, 0}})));

    CHECK(trop(ps("2*t1 + t1^2 + 3*t1*t2", 2)) == VertexSet(FinitePointSet(2, {Point{1, 0}})));
    CHECK(trop(PowerSeries(2, Q)).empty());
    CHECK(trop(ps("-1", 2)) == VertexSet::unit(2));
    CHECK(trop(ps("1", 2)) == VertexSet::unit(2));
}

TEST_CASE("Taylor coefficients")
{
    CHECK(taylor_coefficient(ps("t1^2", 2), Point{2, 0}) == q(2));
    CHECK(taylor_coefficient(ps("t1*t2", 2), Point{1, 1}) == q(1));
    CHECK(taylor_coefficient(ps("1/2*t2^2", 2), Point{0, 2}) == q(1));
    CHECK(multi_factorial(Point{3, 2}) == 12);
    const auto all = taylor_coefficients(ps("3*t1^3*t2 + 5", 2));
    REQUIRE(all.size() == 2);
    CHECK(all.at(Point{3, 1}) == q(18));
    CHECK(all.at(Point{0, 0}) == q(5));
}

TEST_CASE("property: valuation laws")
{
    Gen g(42);
    for (int i = 0; i < 200; ++i) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
        const Field f = g.coin() ? Q : Q2;
        const auto phi = g.series(m, f), psi = g.series(m, f);
        CHECK(trop(phi * psi) == odot(trop(phi), trop(psi)));
        CHECK(oplus(oplus(trop(phi + psi), trop(phi)), trop(psi)) ==
              oplus(trop(phi), trop(psi)));
        CHECK(trop(phi).empty() == phi.is_zero());
    }
}

TEST_CASE("property: support subadditivity")
{
    Gen g(43);
    for (int i = 0; i < 200; ++i) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
        const auto phi = g.series(m, Q2), psi = g.series(m, Q2);
        CHECK(is_subset(support(phi + psi), unite(support(phi), support(psi))));
        CHECK(is_subset(support(phi * psi), minkowski(support(phi), support(psi))));
    }
}

TEST_CASE("property: product coefficients by direct convolution")
{
    Gen g(44);
    for (int i = 0; i < 100; ++i) {
        const auto phi = g.series(2, Q2), psi = g.series(2, Q2);
        const auto prod = phi * psi;
        for (const auto& j : testing::grid(2, 6)) {
            FieldElement sum(Q2);
            for (const auto& [a, ca] : phi.terms())
                for (const auto& [b, cb] : psi.terms())
                    if (a + b == j)
                        sum += ca * cb;
            CHECK(prod.coefficient(j) == sum);
        }
    }
}
