#pragma once

// Text DSL for every value kind, and its canonical printer.
//
//   series        1/2*t2^2 + sqrtd*t1*t2 + t1^2          (+ O(N) marks truncation)
//   diff poly     x1[1,0]^2 - 4*x1[0,0]      (-t1^2 + t2^2)*x1[1,0,1,0]
//   support       {(1,4),(2,3)} + cone{(0,5)}             {}
//   vertex set    {(0,2),(2,0)}
//   trop poly     {(0,0)}*x1[1,0]^2 + {(0,0)}*x1[0,0]      0
//
// Coefficients are exact rationals p or p/q, optionally times `sqrtd`, the
// square root of the context's d. `t` and `x` abbreviate t1 and x1 when
// m = 1 or n = 1. Whitespace is insignificant. Printing is canonical:
// equal values print identically and parse back to the same value.

#include "tropdiff/diff_algebra.hpp"
#include "tropdiff/field.hpp"
#include "tropdiff/lattice.hpp"
#include "tropdiff/series.hpp"
#include "tropdiff/supports.hpp"
#include "tropdiff/trop_poly.hpp"
#include "tropdiff/tropical_series.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tropdiff {

struct ParseContext {
    std::size_t m = 1;
    std::size_t n = 1;
    Field field;

    /// Throws InvalidInput unless m >= 1 and n >= 1.
    void validate() const;
};

Point parse_point(std::string_view text, std::size_t m);
SupportSet parse_support(std::string_view text, const ParseContext& ctx);
/// Parses a point list and canonicalizes it through Vert.
VertexSet parse_vertex_set(std::string_view text, const ParseContext& ctx);
PowerSeries parse_series(std::string_view text, const ParseContext& ctx);
DiffPolynomial parse_diff_poly(std::string_view text, const ParseContext& ctx);
TropPolynomial parse_trop_poly(std::string_view text, const ParseContext& ctx);

/// One polynomial per line; `#` starts a comment; blank lines are skipped.
DiffSystem parse_system(std::string_view text, const ParseContext& ctx);
/// `S1;S2;...` with exactly ctx.n components.
std::vector<SupportSet> parse_support_tuple(std::string_view text, const ParseContext& ctx);
/// `phi1;phi2;...` with exactly ctx.n components.
std::vector<PowerSeries> parse_series_tuple(std::string_view text, const ParseContext& ctx);

/// Arity of the first parenthesized point in the text, or 0 if there is none.
std::size_t infer_arity(std::string_view text);

std::string to_string(const Point& p);
std::string to_string(const FinitePointSet& s);
std::string to_string(const VertexSet& s);
std::string to_string(const SupportSet& s);
std::string to_string(const FieldElement& c);
std::string to_string(const PowerSeries& s);
std::string to_string(const DerivativeKey& key);
std::string to_string(const DiffMonomial& m);
std::string to_string(const TropMonomial& m);
std::string to_string(const DiffPolynomial& p);
std::string to_string(const TropPolynomial& p);

} // namespace tropdiff
