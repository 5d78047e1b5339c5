#pragma once

// JSON views of every value kind. Each object carries a "text" field holding
// the canonical DSL form, so JSON output can be fed back to the parser.

#include "tropdiff/diff_algebra.hpp"
#include "tropdiff/series.hpp"
#include "tropdiff/supports.hpp"
#include "tropdiff/trop_poly.hpp"
#include "tropdiff/tropical_series.hpp"

#include <json.hpp>

namespace tropdiff {

/// Insertion-ordered, so keys appear in canonical (lexicographic-by-value) order.
using Json = nlohmann::ordered_json;

Json to_json(const Point& p);
/// Array of points.
Json to_json(const FinitePointSet& s);
Json to_json(const VertexSet& s);
/// {"explicit": [...], "cones": [...], "text": ...}
Json to_json(const SupportSet& s);
/// {"a": "p/q", "b": "p/q"} meaning a + b*sqrt(d).
Json to_json(const FieldElement& c);
/// {"arity", "d", "precision": null|N, "terms": [{"exponent", "coefficient"}], "text"}
Json to_json(const PowerSeries& s);
/// [{"var", "order", "power"}, ...]
Json to_json(const DiffMonomial& m);
Json to_json(const TropMonomial& m);
/// {"m", "n", "d", "terms": [{"monomial", "coefficient"}], "text"}
Json to_json(const DiffPolynomial& p);
/// {"m", "n", "terms": [{"index", "monomial", "coefficient"}], "text"}
Json to_json(const TropPolynomial& p);
/// {"evaluation": [[...]], "witnesses": {"(i,j)": [indices]}, "solution": bool}
Json to_json(const SolutionReport& r);

} // namespace tropdiff
