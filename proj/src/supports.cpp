#include "tropdiff/supports.hpp"

#include "tropdiff/error.hpp"

#include <algorithm>
#include <vector>

namespace tropdiff {

namespace {

void require_same_arity(const SupportSet& s, const SupportSet& t)
{
    if (s.arity() != t.arity())
        throw InvalidInput("support sets of different arities");
}

bool covered_by_cone(const Point& p, const FinitePointSet& generators)
{
    return std::any_of(generators.begin(), generators.end(),
                       [&](const Point& g) { return dominates_below(g, p); });
}

} // namespace

SupportSet::SupportSet(std::size_t arity) : explicit_(arity), generators_(arity) {}

SupportSet SupportSet::normalize(const FinitePointSet& explicit_points,
                                 const FinitePointSet& cone_generators)
{
    if (explicit_points.arity() != cone_generators.arity())
        throw InvalidInput("explicit points and cone generators have different arities");
    SupportSet s(explicit_points.arity());
    s.generators_ = minimal_elements(cone_generators);
    std::vector<Point> kept;
    for (const auto& p : explicit_points)
        if (!covered_by_cone(p, s.generators_))
            kept.push_back(p);
    s.explicit_ = FinitePointSet(s.arity(), std::move(kept));
    return s;
}

SupportSet SupportSet::finite(const FinitePointSet& points)
{
    return normalize(points, FinitePointSet(points.arity()));
}

SupportSet SupportSet::cones(const FinitePointSet& generators)
{
    return normalize(FinitePointSet(generators.arity()), generators);
}

SupportSet SupportSet::origin(std::size_t arity)
{
    return finite(FinitePointSet(arity, {Point::origin(arity)}));
}

SupportSet unite(const SupportSet& s, const SupportSet& t)
{
    require_same_arity(s, t);
    return SupportSet::normalize(set_union(s.explicit_points(), t.explicit_points()),
                                 set_union(s.cone_generators(), t.cone_generators()));
}

SupportSet minkowski(const SupportSet& s, const SupportSet& t)
{
    require_same_arity(s, t);
    // explicit + explicit stays explicit; any block with an orthant is an orthant.
    const auto explicit_part = minkowski_sum(s.explicit_points(), t.explicit_points());
    auto cones = minkowski_sum(s.explicit_points(), t.cone_generators());
    cones = set_union(cones, minkowski_sum(s.cone_generators(), t.explicit_points()));
    cones = set_union(cones, minkowski_sum(s.cone_generators(), t.cone_generators()));
    return SupportSet::normalize(explicit_part, cones);
}

SupportSet n_fold(const SupportSet& s, unsigned n)
{
    SupportSet result = SupportSet::origin(s.arity());
    SupportSet base = s;
    while (n > 0) {
        if (n & 1U)
            result = minkowski(result, base);
        n >>= 1U;
        if (n > 0)
            base = minkowski(base, base);
    }
    return result;
}

SupportSet trop_derivative(const Point& order, const SupportSet& s)
{
    require_arity(order, s.arity());
    std::vector<Point> shifted;
    for (const auto& p : s.explicit_points())
        if (dominates_below(order, p))
            shifted.push_back(clamped_difference(p, order));
    std::vector<Point> cones;
    for (const auto& g : s.cone_generators())
        cones.push_back(clamped_difference(g, order));
    return SupportSet::normalize(FinitePointSet(s.arity(), std::move(shifted)),
                                 FinitePointSet(s.arity(), std::move(cones)));
}

bool member(const Point& p, const SupportSet& s)
{
    require_arity(p, s.arity());
    return s.explicit_points().contains(p) || covered_by_cone(p, s.cone_generators());
}

bool is_subset(const SupportSet& s, const SupportSet& t)
{
    require_same_arity(s, t);
    for (const auto& p : s.explicit_points())
        if (!member(p, t))
            return false;
    // An orthant is never covered by finitely many explicit points.
    for (const auto& g : s.cone_generators())
        if (!covered_by_cone(g, t.cone_generators()))
            return false;
    return true;
}

bool newton_member(const Point& p, const SupportSet& s)
{
    return member_newton(p, set_union(s.explicit_points(), s.cone_generators()));
}

VertexSet vertices(const SupportSet& s)
{
    const std::size_t m = s.arity();
    const FinitePointSet all = set_union(s.explicit_points(), s.cone_generators());
    const FinitePointSet candidates = minimal_elements(all);
    std::vector<Point> out;
    for (const auto& x : candidates) {
        FinitePointSet rest = candidates.without(x);
        // (x + Z^m) \ {x} has the same Newton polygon as {x + e_k}.
        if (s.cone_generators().contains(x))
            for (std::size_t k = 0; k < m; ++k)
                rest = rest.with(x + Point::unit(m, k));
        if (!member_newton(x, rest))
            out.push_back(x);
    }
    // Result is already a fixed point of Vert; the constructor re-checks it.
    return VertexSet(FinitePointSet(m, std::move(out)));
}

VertexSet val(const Point& order, const SupportSet& s) { return vertices(trop_derivative(order, s)); }

} // namespace tropdiff
