#pragma once

// Random value generators and brute-force oracles shared by the test suites.
// Nothing here calls into the code path it is used to check.

#include "tropdiff/diff_algebra.hpp"
#include "tropdiff/lattice.hpp"
#include "tropdiff/series.hpp"
#include "tropdiff/supports.hpp"
#include "tropdiff/trop_poly.hpp"
#include "tropdiff/tropical_series.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace tropdiff::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& engine() { return rng_; }

    Point point(std::size_t m, std::int64_t max_coord)
    {
        std::vector<Point::value_type> c(m);
        for (auto& x : c)
            x = uniform(0, max_coord);
        return Point(std::move(c));
    }

    FinitePointSet point_set(std::size_t m, std::size_t max_size, std::int64_t max_coord,
                             std::size_t min_size = 0)
    {
        const auto size = static_cast<std::size_t>(
            uniform(static_cast<std::int64_t>(min_size), static_cast<std::int64_t>(max_size)));
        std::vector<Point> pts;
        for (std::size_t i = 0; i < size; ++i)
            pts.push_back(point(m, max_coord));
        return FinitePointSet(m, std::move(pts));
    }

    SupportSet support(std::size_t m, std::int64_t max_coord, std::size_t max_explicit = 4,
                       std::size_t max_cones = 2)
    {
        return SupportSet::normalize(point_set(m, max_explicit, max_coord),
                                     point_set(m, max_cones, max_coord));
    }

    VertexSet vertex_set(std::size_t m, std::int64_t max_coord, std::size_t max_size = 5)
    {
        return VertexSet(point_set(m, max_size, max_coord));
    }

    Rational small_rational(std::int64_t num_range = 5, std::int64_t den_max = 3)
    {
        Rational q(uniform(-num_range, num_range), uniform(1, den_max));
        q.canonicalize();
        return q;
    }

    FieldElement nonzero_scalar(const Field& f)
    {
        for (;;) {
            const Rational a = small_rational();
            const Rational b = f.is_rational() || coin(0.6) ? Rational(0) : small_rational();
            FieldElement c(f, a, b);
            if (!c.is_zero())
                return c;
        }
    }

    /// Exact polynomial series with up to max_terms terms of degree <= max_coord per axis.
    PowerSeries series(std::size_t m, const Field& f, std::size_t max_terms = 4,
                       std::int64_t max_coord = 3)
    {
        PowerSeries s(m, f);
        const auto k = uniform(0, static_cast<std::int64_t>(max_terms));
        for (std::int64_t i = 0; i < k; ++i)
            s.add_term(point(m, max_coord), nonzero_scalar(f));
        return s;
    }

    PowerSeries nonzero_series(std::size_t m, const Field& f, std::size_t max_terms = 4,
                               std::int64_t max_coord = 3)
    {
        for (;;) {
            PowerSeries s = series(m, f, max_terms, max_coord);
            if (!s.is_zero())
                return s;
        }
    }

    DerivativeKey key(std::size_t m, std::size_t n, std::int64_t max_order)
    {
        return DerivativeKey{static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(n))),
                             point(m, max_order)};
    }

    DiffMonomial diff_monomial(std::size_t m, std::size_t n, std::int64_t max_order,
                               std::size_t max_factors = 3, unsigned max_power = 2)
    {
        DiffMonomial::Exponents e;
        const auto k = uniform(0, static_cast<std::int64_t>(max_factors));
        for (std::int64_t i = 0; i < k; ++i)
            e[key(m, n, max_order)] += static_cast<unsigned>(uniform(1, max_power));
        return DiffMonomial(std::move(e));
    }

    DiffPolynomial diff_poly(std::size_t m, std::size_t n, const Field& f,
                             std::size_t max_terms = 3, std::int64_t max_order = 1,
                             std::size_t coeff_terms = 2, std::int64_t coeff_degree = 2)
    {
        DiffPolynomial p(m, n, f);
        const auto k = uniform(0, static_cast<std::int64_t>(max_terms));
        for (std::int64_t i = 0; i < k; ++i)
            p.add_term(diff_monomial(m, n, max_order),
                       nonzero_series(m, f, coeff_terms, coeff_degree));
        return p;
    }

    TropPolynomial trop_poly(std::size_t m, std::size_t n, std::size_t max_terms = 3,
                             std::int64_t max_order = 1, std::int64_t max_coord = 3)
    {
        TropPolynomial p(m, n);
        const auto k = uniform(0, static_cast<std::int64_t>(max_terms));
        for (std::int64_t i = 0; i < k; ++i) {
            VertexSet c(point_set(m, 3, max_coord, 1));
            p.add_term(to_tropical(diff_monomial(m, n, max_order)), c);
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Brute-force oracles over the finite grid [0, bound]^m.

inline std::vector<Point> grid(std::size_t m, std::int64_t bound)
{
    std::vector<Point> out;
    std::vector<Point::value_type> c(m, 0);
    for (;;) {
        out.emplace_back(c);
        std::size_t k = m;
        for (;;) {
            if (k == 0)
                return out;
            --k;
            if (c[k] < bound) {
                ++c[k];
                break;
            }
            c[k] = 0;
        }
    }
}

inline bool leq(const Point& a, const Point& b)
{
    for (std::size_t k = 0; k < a.arity(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

/// The denoted set of S intersected with [0, bound]^m.
inline std::set<Point> denote(const SupportSet& s, std::int64_t bound)
{
    std::set<Point> out;
    for (const auto& p : grid(s.arity(), bound)) {
        bool in = std::find(s.explicit_points().begin(), s.explicit_points().end(), p) !=
                  s.explicit_points().end();
        for (const auto& g : s.cone_generators())
            in = in || leq(g, p);
        if (in)
            out.insert(p);
    }
    return out;
}

inline std::set<Point> box_union(const std::set<Point>& a, const std::set<Point>& b)
{
    std::set<Point> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

/// Minkowski sum clipped to the box; exact because coordinates only grow.
inline std::set<Point> box_sum(const std::set<Point>& a, const std::set<Point>& b,
                               std::int64_t bound)
{
    std::set<Point> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            std::vector<Point::value_type> c(x.arity());
            bool inside = true;
            for (std::size_t k = 0; k < c.size(); ++k) {
                c[k] = x[k] + y[k];
                inside = inside && c[k] <= bound;
            }
            if (inside)
                out.emplace(std::move(c));
        }
    return out;
}

inline std::int64_t max_coordinate(const SupportSet& s)
{
    std::int64_t b = 0;
    for (const auto& p : s.explicit_points())
        b = std::max(b, p.max_norm());
    for (const auto& p : s.cone_generators())
        b = std::max(b, p.max_norm());
    return b;
}

/// Planar Newton-polygon membership by interpolating along the lower chain of
/// the staircase hull. Exact; no LP involved.
inline bool newton_member_2d(const Point& p, const FinitePointSet& c)
{
    const FinitePointSet chain = staircase_hull_2d(c);
    if (chain.empty())
        return false;
    const auto& v = chain.points();
    if (p[0] < v.front()[0] || p[1] < v.back()[1])
        return false;
    if (p[0] >= v.back()[0])
        return true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[i + 1];
        if (p[0] < a[0] || p[0] > b[0])
            continue;
        // p above the segment ab:  (p_y - a_y)(b_x - a_x) >= (b_y - a_y)(p_x - a_x)
        return (p[1] - a[1]) * (b[0] - a[0]) >= (b[1] - a[1]) * (p[0] - a[0]);
    }
    return false;
}

/// Every p in the grid agrees on membership in N(a) and N(b).
template <class MemberA, class MemberB>
bool same_newton_polygon_on_grid(std::size_t m, std::int64_t bound, MemberA in_a, MemberB in_b)
{
    for (const auto& p : grid(m, bound))
        if (in_a(p) != in_b(p))
            return false;
    return true;
}

} // namespace tropdiff::testing
