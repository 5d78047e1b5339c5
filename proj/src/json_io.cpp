#include "tropdiff/json_io.hpp"

#include "tropdiff/textio.hpp"

namespace tropdiff {

using json = Json;

json to_json(const Point& p) { return json(std::vector<Point::value_type>(p.begin(), p.end())); }

json to_json(const FinitePointSet& s)
{
    json out = json::array();
    for (const auto& p : s)
        out.push_back(to_json(p));
    return out;
}

json to_json(const VertexSet& s) { return to_json(s.points()); }

json to_json(const SupportSet& s)
{
    return json{{"explicit", to_json(s.explicit_points())},
                {"cones", to_json(s.cone_generators())},
                {"text", to_string(s)}};
}

json to_json(const FieldElement& c)
{
    return json{{"a", c.rational_part().get_str()}, {"b", c.sqrt_part().get_str()}};
}

json to_json(const PowerSeries& s)
{
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(json{{"exponent", to_json(e)}, {"coefficient", to_json(c)}});
    return json{{"arity", s.arity()},
                {"d", s.field().d()},
                {"precision", s.precision() ? json(*s.precision()) : json(nullptr)},
                {"terms", std::move(terms)},
                {"text", to_string(s)}};
}

namespace {

template <class Tag>
json monomial_json(const BasicMonomial<Tag>& m)
{
    json out = json::array();
    for (const auto& [key, e] : m)
        out.push_back(json{{"var", key.var}, {"order", to_json(key.order)}, {"power", e}});
    return out;
}

} // namespace

json to_json(const DiffMonomial& m) { return monomial_json(m); }
json to_json(const TropMonomial& m) { return monomial_json(m); }

json to_json(const DiffPolynomial& p)
{
    json terms = json::array();
    for (const auto& [mono, c] : p.terms())
        terms.push_back(json{{"monomial", to_json(mono)}, {"coefficient", to_json(c)}});
    return json{{"m", p.arity()},
                {"n", p.variables()},
                {"d", p.field().d()},
                {"terms", std::move(terms)},
                {"text", to_string(p)}};
}

json to_json(const TropPolynomial& p)
{
    json terms = json::array();
    std::size_t index = 0;
    for (const auto& [mono, c] : p.term_map())
        terms.push_back(
            json{{"index", index++}, {"monomial", to_json(mono)}, {"coefficient", to_json(c)}});
    return json{{"m", p.arity()}, {"n", p.variables()}, {"terms", std::move(terms)},
                {"text", to_string(p)}};
}

json to_json(const SolutionReport& r)
{
    json witnesses = json::object();
    for (const auto& [vertex, hits] : r.witnesses)
        witnesses[to_string(vertex)] = hits;
    return json{{"evaluation", to_json(r.evaluation)},
                {"witnesses", std::move(witnesses)},
                {"solution", r.solution}};
}

} // namespace tropdiff
