#include "tropdiff/tropical_series.hpp"

#include "tropdiff/error.hpp"

namespace tropdiff {

VertexSet::VertexSet(const FinitePointSet& points) : points_(vertices_of_finite(points)) {}

VertexSet VertexSet::unit(std::size_t arity)
{
    return VertexSet(FinitePointSet(arity, {Point::origin(arity)}));
}

namespace {

void require_same_arity(const VertexSet& s, const VertexSet& t)
{
    if (s.arity() != t.arity())
        throw InvalidInput("vertex sets of different arities");
}

} // namespace

VertexSet oplus(const VertexSet& s, const VertexSet& t)
{
    require_same_arity(s, t);
    return VertexSet(set_union(s.points(), t.points()));
}

VertexSet odot(const VertexSet& s, const VertexSet& t)
{
    require_same_arity(s, t);
    return VertexSet(minkowski_sum(s.points(), t.points()));
}

VertexSet odot_power(const VertexSet& s, unsigned n)
{
    VertexSet result = VertexSet::unit(s.arity());
    VertexSet base = s;
    // Square-and-multiply; valid since odot is associative.
    while (n > 0) {
        if (n & 1U)
            result = odot(result, base);
        n >>= 1U;
        if (n > 0)
            base = odot(base, base);
    }
    return result;
}

} // namespace tropdiff
