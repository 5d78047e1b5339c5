#pragma once

// Staircase subsets of Z^m_{>=0}: finitely many explicit points together with
// finitely many translated orthants g + Z^m_{>=0}. The class is closed under
// union, Minkowski sum and the tropical derivative, which makes it a
// computable sub-semiring of the semiring of supports.

#include "tropdiff/lattice.hpp"
#include "tropdiff/tropical_series.hpp"

#include <cstddef>

namespace tropdiff {

class SupportSet {
public:
    /// The empty support of the given arity.
    explicit SupportSet(std::size_t arity = 0);

    /// The unique normalized representative of explicit u (cones + Z^m_{>=0}).
    static SupportSet normalize(const FinitePointSet& explicit_points,
                                const FinitePointSet& cone_generators);
    static SupportSet finite(const FinitePointSet& points);
    static SupportSet cones(const FinitePointSet& generators);
    /// {(0,...,0)}, the multiplicative identity.
    static SupportSet origin(std::size_t arity);

    std::size_t arity() const noexcept { return explicit_.arity(); }
    bool empty() const noexcept { return explicit_.empty() && generators_.empty(); }
    bool is_finite() const noexcept { return generators_.empty(); }
    const FinitePointSet& explicit_points() const noexcept { return explicit_; }
    const FinitePointSet& cone_generators() const noexcept { return generators_; }

    /// Normal forms are canonical, so this is equality of denoted sets.
    friend bool operator==(const SupportSet&, const SupportSet&) = default;

private:
    FinitePointSet explicit_;
    FinitePointSet generators_;
};

SupportSet unite(const SupportSet& s, const SupportSet& t);
SupportSet minkowski(const SupportSet& s, const SupportSet& t);
/// n-fold Minkowski power; 0 * S = {(0,...,0)}.
SupportSet n_fold(const SupportSet& s, unsigned n);
/// Translate by -J and keep the part in the nonnegative orthant.
SupportSet trop_derivative(const Point& order, const SupportSet& s);

bool member(const Point& p, const SupportSet& s);
/// Containment of denoted sets.
bool is_subset(const SupportSet& s, const SupportSet& t);
/// p in the Newton polygon of the (possibly infinite) denoted set.
bool newton_member(const Point& p, const SupportSet& s);

VertexSet vertices(const SupportSet& s);
/// Vert(trop_derivative(J, S)).
VertexSet val(const Point& order, const SupportSet& s);

} // namespace tropdiff
