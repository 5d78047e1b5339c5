#include "tropdiff/fixtures.hpp"

#include "tropdiff/textio.hpp"

#include <exception>

namespace tropdiff::fixtures {

namespace {

template <class Fn>
FixtureResult run(std::string name, Fn&& body)
{
    FixtureResult r{std::move(name), false, {}};
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    return r;
}

std::vector<TropPolynomial> tropicalized_sample(const DiffSystem& system, Point::value_type bound)
{
    std::vector<TropPolynomial> h;
    for (const auto& p : derivative_sample(system, bound))
        h.push_back(tropicalize(p));
    return h;
}

} // namespace

std::vector<FixtureResult> replay_examples()
{
    std::vector<FixtureResult> out;

    out.push_back(run("staircase-vertices", [](std::string& detail) {
        const ParseContext ctx{2, 1, Field::rationals()};
        const VertexSet v = vertices(parse_support(kStaircase, ctx));
        detail = "Vert" + std::string(kStaircase) + " = " + to_string(v);
        return to_string(v) == "{(1,4),(4,1)}";
    }));

    out.push_back(run("quadratic-system", [](std::string& detail) {
        const ParseContext ctx{2, 2, Field::quadratic(2)};
        const DiffSystem system = parse_system(kQuadraticSystem, ctx);
        const std::vector<PowerSeries> phi{parse_series(kQuadraticPhi1, ctx),
                                           parse_series(kQuadraticPhi2, ctx)};
        bool ok = true;
        for (const auto& p : system)
            ok = ok && evaluate(p, phi).is_zero();
        const std::vector<SupportSet> s{support(phi[0]), support(phi[1])};
        ok = ok && to_string(s[0]) == "{(0,2),(1,1),(2,0)}";
        const auto h = tropicalized_sample(system, 1);
        const bool solves = is_solution_system(h, s).solution;
        detail = "Supp = (" + to_string(s[0]) + ", " + to_string(s[1]) +
                 "), tropical solution for ||I|| <= 1: " + (solves ? "yes" : "no");
        return ok && solves;
    }));

    out.push_back(run("vertex-witnesses", [](std::string& detail) {
        const ParseContext ctx{4, 1, Field::rationals()};
        const TropPolynomial p = tropicalize(parse_diff_poly(kWitnessPoly, ctx));
        const std::vector<SupportSet> s{support(parse_series(kWitnessPhi, ctx))};
        const SolutionReport r = is_solution(p, s);
        bool multiply = true;
        for (const auto& [v, hits] : r.witnesses)
            multiply = multiply && hits.size() >= 2;
        detail = "p(S) = " + to_string(r.evaluation);
        return to_string(r.evaluation) == "{(0,2,0,0),(2,0,0,0)}" && r.solution && multiply;
    }));

    out.push_back(run("no-series-solution", [](std::string& detail) {
        const ParseContext ctx{1, 1, Field::rationals()};
        const DiffSystem system({parse_diff_poly(kNoSeriesSolution, ctx)});
        const auto h = tropicalized_sample(system, 5);
        EnumerationRequest req;
        req.m = 1;
        req.n = 1;
        req.box = Point{5};
        const auto sols = enumerate_solutions(h, req);
        detail = std::to_string(sols.size()) + " solution(s) among subsets of {0..5}";
        return sols.size() == 1 && sols.front().front().empty();
    }));

    return out;
}

} // namespace tropdiff::fixtures
