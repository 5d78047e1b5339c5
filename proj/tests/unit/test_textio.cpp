#include <doctest.h>

#include "support/generators.hpp"
#include "tropdiff/error.hpp"
#include "tropdiff/json_io.hpp"
#include "tropdiff/textio.hpp"

using namespace tropdiff;
using tropdiff::testing::Gen;

namespace {

const Field Q = Field::rationals();
const Field Q2 = Field::quadratic(2);

} // namespace

TEST_CASE("parse differential polynomials")
{
    const ParseContext c2{2, 1, Q};
    const auto p1 = parse_diff_poly("x1[1,0]^2 - 4*x1[0,0]", c2);
    CHECK(p1.terms().size() == 2);
    CHECK(p1.order() == 1);
    CHECK(parse_diff_poly("0", c2).is_zero());
    const auto p = parse_diff_poly("(-t1^2 + t2^2)*x1[1,0,1,0]", ParseContext{4, 1, Q});
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->second.terms().size() == 2);
    // Bare x and t are accepted when unambiguous.
    CHECK(parse_diff_poly("2*t*x[1] - x[0]", ParseContext{1, 1, Q}) ==
          parse_diff_poly("2*t1*x1[1] - x1[0]", ParseContext{1, 1, Q}));
}

TEST_CASE("parse supports and series")
{
    const ParseContext c2{2, 1, Q};
    const auto s = parse_support("{(1,4),(2,3)} + cone{(0,5)}", c2);
    CHECK(s.explicit_points().size() == 2);
    CHECK(s.cone_generators().size() == 1);
    CHECK(parse_support("{}", c2).empty());
    CHECK(parse_support(" { ( 1 , 4 ) } ", c2) == parse_support("{(1,4)}", c2));

    const ParseContext q2{2, 1, Q2};
    const auto phi = parse_series("1/2*t2^2 + sqrtd*t1*t2 + t1^2", q2);
    CHECK(phi.terms().size() == 3);
    CHECK(phi.coefficient(Point{1, 1}) == FieldElement(Q2, 0, 1));
    CHECK(phi.coefficient(Point{0, 2}) == FieldElement(Q2, Rational(1, 2)));
    CHECK(to_string(phi) == "1/2*t2^2 + sqrtd*t1*t2 + t1^2");
}

TEST_CASE("parse errors carry positions")
{
    const ParseContext c2{2, 1, Q};
    CHECK_THROWS_AS(parse_series("1.5*t1", c2), ParseError);
    CHECK_THROWS_AS(parse_series("sqrtd*t1", c2), ParseError);
    CHECK_THROWS_AS(parse_series("t3", c2), ParseError);
    CHECK_THROWS_AS(parse_diff_poly("x2[0,0]", c2), ParseError);
    CHECK_THROWS_AS(parse_diff_poly("x1[0]", c2), ParseError);
    CHECK_THROWS_AS(parse_support("{(1,2,3)}", c2), ParseError);
    CHECK_THROWS_AS(parse_support("{(1,-2)}", c2), ParseError);
    try {
        parse_series("t1 + * t2", c2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    try {
        parse_system("x1[0,0]\nx1[0,0] +\n", c2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(ParseContext({0, 1, Q}).validate(), InvalidInput);
}

TEST_CASE("systems skip comments and blank lines")
{
    const auto sys = parse_system("# header\n\nx1[1] - x1[0]  # trailing\n  \nx1[0]\n",
                                  ParseContext{1, 1, Q});
    CHECK(sys.size() == 2);
}

TEST_CASE("tuples")
{
    const ParseContext c{2, 2, Q};
    CHECK(parse_support_tuple("{(0,0)};{}", c).size() == 2);
    CHECK_THROWS_AS(parse_support_tuple("{(0,0)}", c), ParseError);
    CHECK(parse_series_tuple("t1; t2^2", c).size() == 2);
    CHECK(infer_arity("{(1,2,3)}") == 3);
    CHECK(infer_arity("{}") == 0);
}

TEST_CASE("printing")
{
    const ParseContext c2{2, 1, Q};
    CHECK(to_string(parse_support("cone{(1,1)} + {(0,3)}", c2)) == "{(0,3)} + cone{(1,1)}");
    CHECK(to_string(parse_support("cone{(2,0),(1,1)}", c2)) == "cone{(1,1),(2,0)}");
    CHECK(to_string(parse_series("t1 + O(3)", c2)) == "t1 + O(3)");
    CHECK(to_string(parse_series("0", c2)) == "0");
    CHECK(to_string(TropPolynomial(2, 1)) == "0");
    CHECK(to_string(parse_series("(1 + sqrtd)*t1 - sqrtd", ParseContext{2, 1, Q2})) ==
          "-sqrtd + (1 + sqrtd)*t1");
}

TEST_CASE("json schema")
{
    const ParseContext c{1, 1, Q};
    const auto p = tropicalize(parse_diff_poly("2*t1*x1[1] - x1[0]", c));
    const auto r = is_solution(p, std::vector<SupportSet>{parse_support("{(0)}", c)});
    const Json j = to_json(r);
    CHECK(j["evaluation"] == Json::parse("[[0]]"));
    CHECK(j["witnesses"] == Json::parse(R"j({"(0)": [0]})j"));
    CHECK(j["solution"] == false);
    const Json s = to_json(parse_support("{(1)} + cone{(3)}", c));
    CHECK(s["explicit"] == Json::parse("[[1]]"));
    CHECK(s["cones"] == Json::parse("[[3]]"));
}

TEST_CASE("property: parse(print(v)) == v")
{
    Gen g(71);
    for (int i = 0; i < 500; ++i) {
        const std::size_t m = static_cast<std::size_t>(g.uniform(1, 4));
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
        const Field f = g.coin() ? Q : Field::quadratic(g.coin() ? 2 : 5);
        const ParseContext ctx{m, n, f};

        const Point pt = g.point(m, 9);
        CHECK(parse_point(to_string(pt), m) == pt);

        const auto s = g.support(m, 7);
        CHECK(parse_support(to_string(s), ctx) == s);

        const auto v = g.vertex_set(m, 7);
        CHECK(parse_vertex_set(to_string(v), ctx) == v);

        auto phi = g.series(m, f, 5, 4);
        if (g.coin(0.3))
            phi = phi.truncated(g.uniform(0, 6));
        CHECK(parse_series(to_string(phi), ctx) == phi);

        const auto dp = g.diff_poly(m, n, f, 4, 2, 3, 2);
        const std::string text = to_string(dp);
        CHECK(parse_diff_poly(text, ctx) == dp);
        CHECK(to_string(parse_diff_poly(text, ctx)) == text);

        const auto tp = g.trop_poly(m, n);
        CHECK(parse_trop_poly(to_string(tp), ctx) == tp);
    }
}
