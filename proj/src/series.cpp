#include "tropdiff/series.hpp"

#include "tropdiff/error.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace tropdiff {

PowerSeries::PowerSeries(std::size_t arity, Field field) : arity_(arity), field_(field) {}

PowerSeries PowerSeries::constant(std::size_t arity, const FieldElement& c)
{
    return monomial(arity, c, Point::origin(arity));
}

PowerSeries PowerSeries::monomial(std::size_t arity, const FieldElement& c, const Point& exponent)
{
    PowerSeries s(arity, c.field());
    s.add_term(exponent, c);
    return s;
}

PowerSeries PowerSeries::variable(std::size_t arity, Field field, std::size_t axis)
{
    return monomial(arity, FieldElement(field, 1), Point::unit(arity, axis));
}

void PowerSeries::add_term(const Point& exponent, const FieldElement& c)
{
    require_arity(exponent, arity_);
    if (!(c.field() == field_))
        throw FieldMismatch("coefficient field differs from the series field");
    if (precision_ && exponent.total_degree() >= *precision_)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted)
        it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

FieldElement PowerSeries::coefficient(const Point& exponent) const
{
    require_arity(exponent, arity_);
    if (precision_ && exponent.total_degree() >= *precision_)
        throw PrecisionError("coefficient of total degree " +
                             std::to_string(exponent.total_degree()) +
                             " requested from a series truncated at " +
                             std::to_string(*precision_));
    auto it = terms_.find(exponent);
    return it == terms_.end() ? FieldElement(field_) : it->second;
}

FieldElement PowerSeries::constant_term() const { return coefficient(Point::origin(arity_)); }

std::optional<std::int64_t> PowerSeries::order() const
{
    std::optional<std::int64_t> best;
    for (const auto& [e, c] : terms_)
        if (!best || e.total_degree() < *best)
            best = e.total_degree();
    return best;
}

void PowerSeries::drop_beyond_precision()
{
    if (!precision_)
        return;
    std::erase_if(terms_, [&](const auto& kv) { return kv.first.total_degree() >= *precision_; });
}

PowerSeries PowerSeries::truncated(std::int64_t n) const
{
    PowerSeries s = *this;
    const std::int64_t bound = std::max<std::int64_t>(n, 0);
    s.precision_ = precision_ ? std::min(*precision_, bound) : bound;
    s.drop_beyond_precision();
    return s;
}

void PowerSeries::require_compatible(const PowerSeries& o) const
{
    if (arity_ != o.arity_)
        throw InvalidInput("series of different arities");
    if (!(field_ == o.field_))
        throw FieldMismatch("series over different coefficient fields");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o)
{
    require_compatible(o);
    if (o.precision_)
        precision_ = precision_ ? std::min(*precision_, *o.precision_) : *o.precision_;
    drop_beyond_precision();
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) { return *this += -o; }

PowerSeries PowerSeries::operator-() const
{
    PowerSeries s = *this;
    for (auto& [e, c] : s.terms_)
        c = -c;
    return s;
}

PowerSeries& PowerSeries::operator*=(const FieldElement& c)
{
    if (!(c.field() == field_))
        throw FieldMismatch("scalar from a different field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

PowerSeries operator*(const PowerSeries& x, const PowerSeries& y)
{
    x.require_compatible(y);
    PowerSeries out(x.arity_, x.field_);
    // An Exact zero factor makes the product exactly zero.
    if ((x.is_exact() && x.is_zero()) || (y.is_exact() && y.is_zero()))
        return out;
    // Unknown terms of x start at degree N_x and are multiplied by terms of
    // y of degree >= ord(y), so the product is known below N_x + ord(y).
    auto bound = [](const PowerSeries& a, const PowerSeries& b) -> std::optional<std::int64_t> {
        if (!a.precision_)
            return std::nullopt;
        return *a.precision_ + b.order().value_or(b.precision_.value_or(0));
    };
    const auto bx = bound(x, y);
    const auto by = bound(y, x);
    if (bx && by)
        out.precision_ = std::min(*bx, *by);
    else if (bx)
        out.precision_ = bx;
    else if (by)
        out.precision_ = by;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            out.add_term(ex + ey, cx * cy);
    return out;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) { return *this = *this * o; }

PowerSeries derive(const PowerSeries& phi, std::size_t axis)
{
    if (axis >= phi.arity())
        throw InvalidInput("derivative axis out of range");
    PowerSeries out(phi.arity(), phi.field());
    if (phi.precision())
        out = out.truncated(std::max<std::int64_t>(*phi.precision() - 1, 0));
    for (const auto& [e, c] : phi.terms()) {
        if (e[axis] == 0)
            continue;
        std::vector<Point::value_type> lowered(e.begin(), e.end());
        --lowered[axis];
        out.add_term(Point(std::move(lowered)),
                     c * FieldElement(phi.field(), Rational(static_cast<long>(e[axis]))));
    }
    return out;
}

PowerSeries theta(const Point& order, const PowerSeries& phi)
{
    require_arity(order, phi.arity());
    PowerSeries out = phi;
    for (std::size_t axis = 0; axis < order.arity(); ++axis)
        for (Point::value_type i = 0; i < order[axis]; ++i)
            out = derive(out, axis);
    return out;
}

SupportSet support(const PowerSeries& phi)
{
    if (!phi.is_exact())
        throw PrecisionError("support of a truncated series is not determined");
    std::vector<Point> pts;
    pts.reserve(phi.terms().size());
    for (const auto& [e, c] : phi.terms())
        pts.push_back(e);
    return SupportSet::finite(FinitePointSet(phi.arity(), std::move(pts)));
}

VertexSet trop(const PowerSeries& phi) { return vertices(support(phi)); }

Rational multi_factorial(const Point& j)
{
    mpz_class f = 1;
    for (auto c : j) {
        mpz_class jf;
        mpz_fac_ui(jf.get_mpz_t(), static_cast<unsigned long>(c));
        f *= jf;
    }
    return Rational(f);
}

FieldElement taylor_coefficient(const PowerSeries& phi, const Point& exponent)
{
    return phi.coefficient(exponent) * FieldElement(phi.field(), multi_factorial(exponent));
}

std::map<Point, FieldElement> taylor_coefficients(const PowerSeries& phi)
{
    if (!phi.is_exact())
        throw PrecisionError("all Taylor coefficients of a truncated series are not determined");
    std::map<Point, FieldElement> out;
    for (const auto& [e, c] : phi.terms())
        out.emplace(e, c * FieldElement(phi.field(), multi_factorial(e)));
    return out;
}

} // namespace tropdiff
