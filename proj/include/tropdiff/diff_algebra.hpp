#pragma once

// Differential polynomials with power-series coefficients:
//   P = sum_M alpha_M E_M,  alpha_M in K[[t_1..t_m]],  E_M a product of x_{i,J}.

#include "tropdiff/field.hpp"
#include "tropdiff/monomial.hpp"
#include "tropdiff/series.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace tropdiff {

class TropPolynomial;

class DiffPolynomial {
public:
    using Terms = std::map<DiffMonomial, PowerSeries>;

    DiffPolynomial() = default;
    /// The zero polynomial in n variables over series in m parameters.
    DiffPolynomial(std::size_t m, std::size_t n, Field field);

    static DiffPolynomial constant(std::size_t n, const PowerSeries& c);
    /// x_{var, order} with coefficient 1.
    static DiffPolynomial derivative(std::size_t m, std::size_t n, Field field, DerivativeKey key);

    std::size_t arity() const noexcept { return m_; }
    std::size_t variables() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest ||J||_inf among all derivatives that occur.
    Point::value_type order() const noexcept;

    /// Adds alpha * E_M, merging with an existing term and dropping zeros.
    void add_term(const DiffMonomial& monomial, const PowerSeries& coefficient);

    DiffPolynomial& operator+=(const DiffPolynomial& o);
    DiffPolynomial& operator-=(const DiffPolynomial& o);
    DiffPolynomial operator-() const;
    friend DiffPolynomial operator+(DiffPolynomial x, const DiffPolynomial& y) { return x += y; }
    friend DiffPolynomial operator-(DiffPolynomial x, const DiffPolynomial& y) { return x -= y; }
    friend DiffPolynomial operator*(const DiffPolynomial& x, const DiffPolynomial& y);
    friend DiffPolynomial operator*(const PowerSeries& c, const DiffPolynomial& p);

    friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

private:
    void check_key(const DerivativeKey& key) const;
    void require_compatible(const DiffPolynomial& o) const;

    std::size_t m_ = 0;
    std::size_t n_ = 0;
    Field field_;
    Terms terms_;
};

/// A finite list of differential polynomials sharing (m, n, field).
class DiffSystem {
public:
    DiffSystem() = default;
    explicit DiffSystem(std::vector<DiffPolynomial> polys);

    const std::vector<DiffPolynomial>& polynomials() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    bool empty() const noexcept { return polys_.empty(); }
    auto begin() const noexcept { return polys_.begin(); }
    auto end() const noexcept { return polys_.end(); }

private:
    std::vector<DiffPolynomial> polys_;
};

/// delta_axis P by linearity and the Leibniz rule (axis is 0-based).
DiffPolynomial derive_poly(const DiffPolynomial& p, std::size_t axis);
/// Theta(I) P.
DiffPolynomial theta_poly(const Point& order, const DiffPolynomial& p);

/// P(phi_1..phi_n): substitute Theta(J) phi_i for x_{i,J} and expand.
PowerSeries evaluate(const DiffPolynomial& p, std::span<const PowerSeries> phi);

/// F_I = (Theta(I) P) at t = 0; a polynomial with constant coefficients.
DiffPolynomial taylor_coeff_poly(const DiffPolynomial& p, const Point& order);

/// Value of a polynomial with constant coefficients when every x_{i,J} is
/// replaced by values(key). Throws InvalidInput on non-constant coefficients.
FieldElement evaluate_constant(const DiffPolynomial& p,
                               const std::function<FieldElement(const DerivativeKey&)>& values);

/// All multi-indices I with ||I||_inf <= bound, lexicographic.
std::vector<Point> orders_up_to(std::size_t arity, Point::value_type bound);

/// { Theta(I) P : P in system, ||I||_inf <= bound }, polynomial-major, I lexicographic.
std::vector<DiffPolynomial> derivative_sample(const DiffSystem& system, Point::value_type bound);

/// sum trop(alpha_M) odot epsilon_M. Coefficients must be Exact.
TropPolynomial tropicalize(const DiffPolynomial& p);

} // namespace tropdiff
