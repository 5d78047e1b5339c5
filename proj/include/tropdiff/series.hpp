#pragma once

// Multivariate formal power series over an exact coefficient field.
//
// A series is either Exact (a polynomial, every coefficient known) or
// TruncatedAt(N): only coefficients of total degree < N are known, and no
// term of total degree >= N is stored.

#include "tropdiff/field.hpp"
#include "tropdiff/lattice.hpp"
#include "tropdiff/supports.hpp"
#include "tropdiff/tropical_series.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

namespace tropdiff {

class PowerSeries {
public:
    using Terms = std::map<Point, FieldElement>;

    PowerSeries() = default;
    /// Exact zero.
    PowerSeries(std::size_t arity, Field field);

    static PowerSeries constant(std::size_t arity, const FieldElement& c);
    static PowerSeries monomial(std::size_t arity, const FieldElement& c, const Point& exponent);
    /// t_{axis+1}.
    static PowerSeries variable(std::size_t arity, Field field, std::size_t axis);

    std::size_t arity() const noexcept { return arity_; }
    const Field& field() const noexcept { return field_; }
    /// nullopt for Exact.
    std::optional<std::int64_t> precision() const noexcept { return precision_; }
    bool is_exact() const noexcept { return !precision_.has_value(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }

    /// Coefficient of t^J; throws PrecisionError if |J| >= precision.
    FieldElement coefficient(const Point& exponent) const;
    FieldElement constant_term() const;
    /// Smallest total degree of a stored term; nullopt for the zero series.
    std::optional<std::int64_t> order() const;

    /// Drops terms of total degree >= n and records the (tighter) precision.
    PowerSeries truncated(std::int64_t n) const;

    void add_term(const Point& exponent, const FieldElement& c);

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const PowerSeries& o);
    PowerSeries& operator*=(const FieldElement& c);
    PowerSeries operator-() const;

    friend PowerSeries operator+(PowerSeries x, const PowerSeries& y) { return x += y; }
    friend PowerSeries operator-(PowerSeries x, const PowerSeries& y) { return x -= y; }
    friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y);
    friend PowerSeries operator*(PowerSeries x, const FieldElement& c) { return x *= c; }
    friend PowerSeries operator*(const FieldElement& c, PowerSeries x) { return x *= c; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    void require_compatible(const PowerSeries& o) const;
    void drop_beyond_precision();

    std::size_t arity_ = 0;
    Field field_;
    Terms terms_;
    std::optional<std::int64_t> precision_;
};

/// Formal partial derivative along axis (0-based). TruncatedAt(N) becomes TruncatedAt(N-1).
PowerSeries derive(const PowerSeries& phi, std::size_t axis);
/// Theta(I) = d^{i_1}/dt_1^{i_1} ... d^{i_m}/dt_m^{i_m}.
PowerSeries theta(const Point& order, const PowerSeries& phi);

/// Exponents with nonzero coefficient. Exact series only.
SupportSet support(const PowerSeries& phi);
/// Vert(support(phi)). Exact series only.
VertexSet trop(const PowerSeries& phi);

/// J! = j_1! ... j_m! as a rational.
Rational multi_factorial(const Point& j);
/// a_J = J! * coeff(t^J): the coordinates of phi = sum a_J t^J / J!.
FieldElement taylor_coefficient(const PowerSeries& phi, const Point& exponent);
/// All nonzero a_J of an Exact series.
std::map<Point, FieldElement> taylor_coefficients(const PowerSeries& phi);

} // namespace tropdiff
