#include <doctest.h>

#include "support/generators.hpp"
#include "tropdiff/diff_algebra.hpp"
#include "tropdiff/error.hpp"
#include "tropdiff/fixtures.hpp"
#include "tropdiff/textio.hpp"

using namespace tropdiff;
using tropdiff::testing::Gen;

namespace {

const Field Q = Field::rationals();
const Field Q2 = Field::quadratic(2);

DiffPolynomial dp(std::string_view text, std::size_t m, std::size_t n = 1, Field f = Q)
{
    return parse_diff_poly(text, ParseContext{m, n, f});
}

PowerSeries ps(std::string_view text, std::size_t m, Field f = Q)
{
    return parse_series(text, ParseContext{m, 1, f});
}

} // namespace

TEST_CASE("construction validates keys and fields")
{
    DiffPolynomial p(2, 1, Q);
    CHECK_THROWS_AS(p.add_term(DiffMonomial::single({2, Point{0, 0}}), ps("1", 2)), InvalidInput);
    CHECK_THROWS_AS(p.add_term(DiffMonomial::single({1, Point{0}}), ps("1", 2)), InvalidInput);
    CHECK_THROWS_AS(p.add_term(DiffMonomial::single({1, Point{0, 0}}), ps("1", 2, Q2)),
                    FieldMismatch);
    p.add_term(DiffMonomial::single({1, Point{1, 0}}), ps("t1", 2));
    p.add_term(DiffMonomial::single({1, Point{1, 0}}), ps("-t1", 2));
    CHECK(p.is_zero());
    CHECK_THROWS_AS(DiffSystem({dp("x1[0]", 1), dp("x1[0,0]", 2)}), InvalidInput);
}

TEST_CASE("theta_poly")
{
    const auto p1 = dp("x1[1,0]^2 - 4*x1[0,0]", 2);
    CHECK(theta_poly(Point{1, 0}, p1) == dp("2*x1[1,0]*x1[2,0] - 4*x1[1,0]", 2));
    CHECK(theta_poly(Point{0, 0}, p1) == p1);
    const auto p = dp("2*t1*x1[1] - x1[0]", 1);
    CHECK(theta_poly(Point{1}, p) == dp("2*t1*x1[2] + x1[1]", 1));
    // Theta(I)P = 2t x[I+1] + (2I - 1) x[I]
    for (std::int64_t i = 0; i <= 5; ++i) {
        DiffPolynomial expected(1, 1, Q);
        expected.add_term(DiffMonomial::single({1, Point{i + 1}}), ps("2*t1", 1));
        expected.add_term(DiffMonomial::single({1, Point{i}}),
                          PowerSeries::constant(1, FieldElement(Q, 2 * i - 1)));
        CHECK(theta_poly(Point{i}, p) == expected);
    }
}

TEST_CASE("evaluate")
{
    const ParseContext ctx{2, 2, Q2};
    const DiffSystem sys = parse_system(fixtures::kQuadraticSystem, ctx);
    const std::vector<PowerSeries> phi{parse_series(fixtures::kQuadraticPhi1, ctx),
                                       parse_series(fixtures::kQuadraticPhi2, ctx)};
    for (const auto& p : sys)
        CHECK(evaluate(p, phi).is_zero());

    const std::vector<PowerSeries> zero{PowerSeries(2, Q2), PowerSeries(2, Q2)};
    CHECK(evaluate(sys.polynomials()[0], zero).is_zero());

    const ParseContext ctx4{4, 1, Q};
    const std::vector<PowerSeries> phi4{parse_series(fixtures::kWitnessPhi, ctx4)};
    CHECK(evaluate(parse_diff_poly(fixtures::kWitnessPoly, ctx4), phi4).is_zero());

    CHECK_THROWS_AS(evaluate(sys.polynomials()[0], std::vector<PowerSeries>{phi[0]}),
                    InvalidInput);
}

TEST_CASE("taylor_coeff_poly")
{
    const auto p1 = dp("x1[1,0]^2 - 4*x1[0,0]", 2);
    CHECK(taylor_coeff_poly(p1, Point{0, 0}) == p1);
    CHECK(taylor_coeff_poly(dp("2*t1*x1[1] - x1[0]", 1), Point{0}) == dp("-x1[0]", 1));
    const auto p2 = dp("x1[1,1]*x2[0,1] - x1[0,0] + 1", 2, 2);
    CHECK(taylor_coeff_poly(p2, Point{0, 0}) == p2);
    CHECK_THROWS_AS(taylor_coeff_poly(dp("(1 + O(1))*x1[0]", 1), Point{1}), PrecisionError);
}

TEST_CASE("tropicalize")
{
    const auto t1 = tropicalize(dp("x1[1,0]^2 - 4*x1[0,0]", 2));
    REQUIRE(t1.size() == 2);
    for (const auto& [mono, coeff] : t1.terms())
        CHECK(coeff == VertexSet::unit(2));
    const auto t2 = tropicalize(parse_diff_poly(fixtures::kWitnessPoly, ParseContext{4, 1, Q}));
    REQUIRE(t2.size() == 2);
    CHECK(t2.terms()[1].second ==
          VertexSet(FinitePointSet(4, {Point{2, 0, 0, 0}, Point{0, 2, 0, 0}})));
    CHECK_THROWS_AS(tropicalize(dp("(1 + O(2))*x1[0]", 1)), PrecisionError);
}

TEST_CASE("orders_up_to enumerates the box")
{
    const auto o = orders_up_to(2, 1);
    CHECK(o == std::vector<Point>{Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}});
    CHECK(orders_up_to(3, 2).size() == 27);
}

TEST_CASE("property: derivations commute and act as ring maps")
{
    Gen g(51);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 3));
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 2));
        const Field f = g.coin() ? Q : Q2;
        const auto p = g.diff_poly(m, n, f), q = g.diff_poly(m, n, f);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                CHECK(derive_poly(derive_poly(p, j), k) == derive_poly(derive_poly(p, k), j));

        std::vector<PowerSeries> phi;
        for (std::size_t v = 0; v < n; ++v)
            phi.push_back(g.series(m, f, 3, 3));
        CHECK(evaluate(p * q, phi) == evaluate(p, phi) * evaluate(q, phi));
        CHECK(evaluate(p + q, phi) == evaluate(p, phi) + evaluate(q, phi));
        const Point order = g.point(m, 2);
        CHECK(evaluate(theta_poly(order, p), phi) == theta(order, evaluate(p, phi)));
    }
}

TEST_CASE("property: Taylor formula")
{
    Gen g(52);
    for (int i = 0; i < 30; ++i) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 2));
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 2));
        const Field f = g.coin() ? Q : Q2;
        const auto p = g.diff_poly(m, n, f);
        std::vector<PowerSeries> phi;
        for (std::size_t v = 0; v < n; ++v)
            phi.push_back(g.series(m, f, 3, 3));
        const auto value = evaluate(p, phi);
        for (const auto& order : orders_up_to(m, 3)) {
            const auto fi = taylor_coeff_poly(p, order);
            const FieldElement at_a = evaluate_constant(fi, [&](const DerivativeKey& k) {
                return taylor_coefficient(phi[k.var - 1], k.order);
            });
            CHECK(value.coefficient(order) ==
                  at_a / FieldElement(f, multi_factorial(order)));
        }
    }
}
