#include "tropdiff/lattice.hpp"

#include "tropdiff/error.hpp"
#include "tropdiff/lp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropdiff {

Point::Point(std::vector<value_type> coords) : coords_(std::move(coords))
{
    for (auto c : coords_)
        if (c < 0)
            throw InvalidInput("lattice point has a negative coordinate");
}

Point::Point(std::initializer_list<value_type> coords) : Point(std::vector<value_type>(coords)) {}

Point Point::origin(std::size_t arity) { return Point(std::vector<value_type>(arity, 0)); }

Point Point::unit(std::size_t arity, std::size_t axis)
{
    if (axis >= arity)
        throw InvalidInput("unit vector axis out of range");
    std::vector<value_type> c(arity, 0);
    c[axis] = 1;
    return Point(std::move(c));
}

Point::value_type Point::max_norm() const noexcept
{
    value_type m = 0;
    for (auto c : coords_)
        m = std::max(m, c);
    return m;
}

Point::value_type Point::total_degree() const noexcept
{
    return std::accumulate(coords_.begin(), coords_.end(), value_type{0});
}

void require_arity(const Point& p, std::size_t arity)
{
    if (p.arity() != arity)
        throw InvalidInput("arity mismatch: expected " + std::to_string(arity) + ", got " +
                           std::to_string(p.arity()));
}

Point operator+(const Point& a, const Point& b)
{
    require_arity(b, a.arity());
    std::vector<Point::value_type> c(a.arity());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a[k] + b[k];
    return Point(std::move(c));
}

bool dominates_below(const Point& a, const Point& b)
{
    require_arity(b, a.arity());
    for (std::size_t k = 0; k < a.arity(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

Point clamped_difference(const Point& a, const Point& b)
{
    require_arity(b, a.arity());
    std::vector<Point::value_type> c(a.arity());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = std::max<Point::value_type>(a[k] - b[k], 0);
    return Point(std::move(c));
}

FinitePointSet::FinitePointSet(std::size_t arity, std::vector<Point> points)
    : arity_(arity), points_(std::move(points))
{
    for (const auto& p : points_)
        require_arity(p, arity_);
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool FinitePointSet::contains(const Point& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

FinitePointSet FinitePointSet::without(const Point& p) const
{
    FinitePointSet out(arity_);
    out.points_.reserve(points_.size());
    for (const auto& q : points_)
        if (q != p)
            out.points_.push_back(q);
    return out;
}

FinitePointSet FinitePointSet::with(const Point& p) const
{
    auto pts = points_;
    pts.push_back(p);
    return FinitePointSet(arity_, std::move(pts));
}

FinitePointSet set_union(const FinitePointSet& a, const FinitePointSet& b)
{
    if (a.arity() != b.arity())
        throw InvalidInput("set union of point sets with different arities");
    std::vector<Point> pts(a.points());
    pts.insert(pts.end(), b.begin(), b.end());
    return FinitePointSet(a.arity(), std::move(pts));
}

FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b)
{
    if (a.arity() != b.arity())
        throw InvalidInput("Minkowski sum of point sets with different arities");
    std::vector<Point> pts;
    pts.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            pts.push_back(x + y);
    return FinitePointSet(a.arity(), std::move(pts));
}

FinitePointSet minimal_elements(const FinitePointSet& c)
{
    std::vector<Point> out;
    for (const auto& x : c) {
        // Anything strictly below x precedes it lexicographically.
        const bool dominated = std::any_of(c.begin(), c.end(), [&](const Point& y) {
            return y < x && dominates_below(y, x);
        });
        if (!dominated)
            out.push_back(x);
    }
    return FinitePointSet(c.arity(), std::move(out));
}

bool member_newton(const Point& p, const FinitePointSet& c)
{
    require_arity(p, c.arity());
    if (c.empty())
        return false;

    // Unknowns: one weight per point of C, then one slack per coordinate.
    //   sum_c w_c = 1,   sum_c w_c * c_k + s_k = p_k,   w, s >= 0.
    const std::size_t m = c.arity();
    const std::size_t k = c.size();
    lp::Matrix A(m + 1, std::vector<Rational>(k + m));
    std::vector<Rational> b(m + 1);
    for (std::size_t j = 0; j < k; ++j)
        A[0][j] = 1;
    b[0] = 1;
    for (std::size_t axis = 0; axis < m; ++axis) {
        for (std::size_t j = 0; j < k; ++j)
            A[axis + 1][j] = Rational(static_cast<long>(c.points()[j][axis]));
        A[axis + 1][k + axis] = 1;
        b[axis + 1] = Rational(static_cast<long>(p[axis]));
    }
    return lp::feasible(A, b);
}

FinitePointSet vertices_of_finite(const FinitePointSet& c)
{
    // Non-minimal points are never vertices, and dropping them does not change
    // the Newton polygon of the remaining candidates.
    const FinitePointSet candidates = minimal_elements(c);
    if (candidates.size() <= 2)
        return candidates;
    std::vector<Point> out;
    for (const auto& x : candidates)
        if (!member_newton(x, candidates.without(x)))
            out.push_back(x);
    return FinitePointSet(c.arity(), std::move(out));
}

FinitePointSet staircase_hull_2d(const FinitePointSet& c)
{
    if (c.arity() != 2)
        throw InvalidInput("staircase_hull_2d requires arity 2");
    // Minimal elements in lexicographic order have strictly increasing first
    // and strictly decreasing second coordinate.
    const FinitePointSet stairs = minimal_elements(c);
    std::vector<Point> chain;
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (const auto& p : stairs) {
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0)
            chain.pop_back();
        chain.push_back(p);
    }
    return FinitePointSet(2, std::move(chain));
}

} // namespace tropdiff
