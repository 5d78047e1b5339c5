#pragma once

#include "tropdiff/lattice.hpp"

#include <cstddef>

namespace tropdiff {

/// An element of the idempotent semiring of vertex sets (tropical formal power
/// series): a finite antichain that is its own vertex set.
///
/// Every constructor re-canonicalizes through vertices_of_finite, so a
/// VertexSet value always satisfies Vert(points) == points.
class VertexSet {
public:
    /// The zero element (empty set) of the given arity.
    explicit VertexSet(std::size_t arity = 0) : points_(arity) {}
    /// Vert(points).
    explicit VertexSet(const FinitePointSet& points);

    /// The unit element {(0,...,0)}.
    static VertexSet unit(std::size_t arity);

    std::size_t arity() const noexcept { return points_.arity(); }
    bool empty() const noexcept { return points_.empty(); }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const Point& p) const { return points_.contains(p); }
    const FinitePointSet& points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    FinitePointSet points_;
};

/// Vert(S u T).
VertexSet oplus(const VertexSet& s, const VertexSet& t);
/// Vert(S + T); the empty set annihilates.
VertexSet odot(const VertexSet& s, const VertexSet& t);
/// n-fold odot power; exponent 0 gives the unit.
VertexSet odot_power(const VertexSet& s, unsigned n);

} // namespace tropdiff
