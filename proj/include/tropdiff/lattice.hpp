#pragma once

// Points of the nonnegative integer lattice Z^m_{>=0} and exact geometry of
// Newton polyhedra conv(C + Z^m_{>=0}) for finite C.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tropdiff {

/// A multi-index J = (j_1, ..., j_m) with every j_k >= 0.
class Point {
public:
    using value_type = std::int64_t;

    Point() = default;
    explicit Point(std::vector<value_type> coords);
    Point(std::initializer_list<value_type> coords);

    static Point origin(std::size_t arity);
    /// e_k for 0 <= axis < arity.
    static Point unit(std::size_t arity, std::size_t axis);

    std::size_t arity() const noexcept { return coords_.size(); }
    value_type operator[](std::size_t k) const { return coords_[k]; }
    std::span<const value_type> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    value_type max_norm() const noexcept;
    value_type total_degree() const noexcept;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<value_type> coords_;
};

Point operator+(const Point& a, const Point& b);

/// Componentwise a <= b.
bool dominates_below(const Point& a, const Point& b);

/// max(a - b, 0) componentwise.
Point clamped_difference(const Point& a, const Point& b);

/// Throws InvalidInput unless both points have the given arity.
void require_arity(const Point& p, std::size_t arity);

/// A finite, deduplicated set of lattice points of one arity, iterated in
/// lexicographic order.
class FinitePointSet {
public:
    explicit FinitePointSet(std::size_t arity = 0) : arity_(arity) {}
    FinitePointSet(std::size_t arity, std::vector<Point> points);
    FinitePointSet(std::size_t arity, std::initializer_list<Point> points)
        : FinitePointSet(arity, std::vector<Point>(points)) {}

    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    bool contains(const Point& p) const;

    const std::vector<Point>& points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    FinitePointSet without(const Point& p) const;
    FinitePointSet with(const Point& p) const;

    friend bool operator==(const FinitePointSet&, const FinitePointSet&) = default;

private:
    std::size_t arity_;
    std::vector<Point> points_;
};

FinitePointSet set_union(const FinitePointSet& a, const FinitePointSet& b);
FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b);

/// Elements of C not dominated (componentwise >=, distinct) by another element.
FinitePointSet minimal_elements(const FinitePointSet& c);

/// True iff p lies in the Newton polygon of C, i.e. some convex combination of
/// the points of C is componentwise <= p. Decided by exact rational LP.
bool member_newton(const Point& p, const FinitePointSet& c);

/// The vertices of the Newton polygon of C: points x of C with x outside the
/// Newton polygon of C \ {x}.
FinitePointSet vertices_of_finite(const FinitePointSet& c);

/// Planar vertex extraction by lower convex chain over the minimal staircase.
/// Independent of the LP route; used to cross-check vertices_of_finite.
FinitePointSet staircase_hull_2d(const FinitePointSet& c);

} // namespace tropdiff
