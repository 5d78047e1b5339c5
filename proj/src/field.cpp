#include "tropdiff/field.hpp"

#include "tropdiff/error.hpp"

#include <cmath>
#include <string>

namespace tropdiff {

Field Field::quadratic(std::int64_t d)
{
    if (d <= 0)
        throw InvalidInput("quadratic field needs a positive d, got " + std::to_string(d));
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
    while (r * r > d)
        --r;
    while ((r + 1) * (r + 1) <= d)
        ++r;
    if (r * r == d)
        throw InvalidInput("quadratic field needs a nonsquare d, got " + std::to_string(d));
    return Field(d);
}

FieldElement::FieldElement(Field field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
    if (field_.is_rational() && b_ != 0)
        throw FieldMismatch("sqrt part is only available over a quadratic field");
}

void FieldElement::require_same_field(const FieldElement& o) const
{
    if (!(field_ == o.field_))
        throw FieldMismatch("field elements over different fields");
}

FieldElement FieldElement::conjugate() const { return FieldElement(field_, a_, -b_); }

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero in field");
    // (a + b r)^{-1} = (a - b r) / (a^2 - d b^2); the norm vanishes only at 0.
    const Rational norm = a_ * a_ - Rational(static_cast<long>(field_.d())) * b_ * b_;
    return FieldElement(field_, a_ / norm, -b_ / norm);
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    require_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    require_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    require_same_field(o);
    const Rational d(static_cast<long>(field_.d()));
    Rational a = a_ * o.a_ + d * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

} // namespace tropdiff
