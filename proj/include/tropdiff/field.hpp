#pragma once

#include "tropdiff/rational.hpp"

#include <cstdint>

namespace tropdiff {

/// Coefficient field: the rationals, or Q(sqrt d) for a positive nonsquare d.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    /// Throws InvalidInput unless d is a positive nonsquare integer.
    static Field quadratic(std::int64_t d);

    bool is_rational() const noexcept { return d_ == 0; }
    /// 0 for the rationals.
    std::int64_t d() const noexcept { return d_; }

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::int64_t d) : d_(d) {}
    std::int64_t d_ = 0;
};

/// a + b*sqrt(d) with exact rational a, b; over the rationals b is always 0.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(Field field, Rational a = 0, Rational b = 0);

    const Field& field() const noexcept { return field_; }
    const Rational& rational_part() const noexcept { return a_; }
    const Rational& sqrt_part() const noexcept { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }

    FieldElement inverse() const;
    /// a - b*sqrt(d).
    FieldElement conjugate() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
    FieldElement operator-() const { return FieldElement(field_, -a_, -b_); }

    friend bool operator==(const FieldElement& x, const FieldElement& y)
    {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    void require_same_field(const FieldElement& o) const;

    Field field_;
    Rational a_;
    Rational b_;
};

} // namespace tropdiff
