#include "tropdiff/diff_algebra.hpp"

#include "tropdiff/error.hpp"
#include "tropdiff/trop_poly.hpp"

#include <string>

namespace tropdiff {

DiffPolynomial::DiffPolynomial(std::size_t m, std::size_t n, Field field)
    : m_(m), n_(n), field_(field)
{
    if (m == 0 || n == 0)
        throw InvalidInput("differential polynomials need m >= 1 and n >= 1");
}

DiffPolynomial DiffPolynomial::constant(std::size_t n, const PowerSeries& c)
{
    DiffPolynomial p(c.arity(), n, c.field());
    p.add_term(DiffMonomial(), c);
    return p;
}

DiffPolynomial DiffPolynomial::derivative(std::size_t m, std::size_t n, Field field,
                                          DerivativeKey key)
{
    DiffPolynomial p(m, n, field);
    p.add_term(DiffMonomial::single(key), PowerSeries::constant(m, FieldElement(field, 1)));
    return p;
}

Point::value_type DiffPolynomial::order() const noexcept
{
    Point::value_type r = 0;
    for (const auto& [mono, c] : terms_)
        r = std::max(r, mono.order());
    return r;
}

void DiffPolynomial::check_key(const DerivativeKey& key) const
{
    if (key.var < 1 || key.var > n_)
        throw InvalidInput("variable index " + std::to_string(key.var) + " outside 1.." +
                           std::to_string(n_));
    require_arity(key.order, m_);
}

void DiffPolynomial::require_compatible(const DiffPolynomial& o) const
{
    if (m_ != o.m_ || n_ != o.n_)
        throw InvalidInput("differential polynomials with different (m, n)");
    if (!(field_ == o.field_))
        throw FieldMismatch("differential polynomials over different fields");
}

void DiffPolynomial::add_term(const DiffMonomial& monomial, const PowerSeries& coefficient)
{
    for (const auto& [key, e] : monomial)
        check_key(key);
    if (coefficient.arity() != m_)
        throw InvalidInput("coefficient arity differs from the polynomial arity");
    if (!(coefficient.field() == field_))
        throw FieldMismatch("coefficient field differs from the polynomial field");
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted)
        it->second += coefficient;
    // A truncated zero is an unknown tail, not a zero coefficient.
    if (it->second.is_zero() && it->second.is_exact())
        terms_.erase(it);
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& o)
{
    require_compatible(o);
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, c);
    return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& o) { return *this += -o; }

DiffPolynomial DiffPolynomial::operator-() const
{
    DiffPolynomial p = *this;
    for (auto& [mono, c] : p.terms_)
        c = -c;
    return p;
}

DiffPolynomial operator*(const DiffPolynomial& x, const DiffPolynomial& y)
{
    x.require_compatible(y);
    DiffPolynomial out(x.m_, x.n_, x.field_);
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_)
            out.add_term(mx * my, cx * cy);
    return out;
}

DiffPolynomial operator*(const PowerSeries& c, const DiffPolynomial& p)
{
    DiffPolynomial out(p.m_, p.n_, p.field_);
    for (const auto& [mono, a] : p.terms_)
        out.add_term(mono, c * a);
    return out;
}

DiffSystem::DiffSystem(std::vector<DiffPolynomial> polys) : polys_(std::move(polys))
{
    for (const auto& p : polys_)
        if (p.arity() != polys_.front().arity() || p.variables() != polys_.front().variables() ||
            !(p.field() == polys_.front().field()))
            throw InvalidInput("system polynomials must share (m, n, field)");
}

DiffPolynomial derive_poly(const DiffPolynomial& p, std::size_t axis)
{
    if (axis >= p.arity())
        throw InvalidInput("derivation axis out of range");
    const Point step = Point::unit(p.arity(), axis);
    DiffPolynomial out(p.arity(), p.variables(), p.field());
    for (const auto& [mono, alpha] : p.terms()) {
        out.add_term(mono, derive(alpha, axis));
        // Leibniz: x^e -> e * x^(e-1) * delta(x), with delta(x_{i,J}) = x_{i,J+e_k}.
        for (const auto& [key, e] : mono) {
            auto exps = mono.exponents();
            if (--exps[key] == 0)
                exps.erase(key);
            exps[DerivativeKey{key.var, key.order + step}] += 1;
            const FieldElement mult(p.field(), Rational(static_cast<unsigned long>(e)));
            out.add_term(DiffMonomial(std::move(exps)), alpha * mult);
        }
    }
    return out;
}

DiffPolynomial theta_poly(const Point& order, const DiffPolynomial& p)
{
    require_arity(order, p.arity());
    DiffPolynomial out = p;
    for (std::size_t axis = 0; axis < order.arity(); ++axis)
        for (Point::value_type i = 0; i < order[axis]; ++i)
            out = derive_poly(out, axis);
    return out;
}

PowerSeries evaluate(const DiffPolynomial& p, std::span<const PowerSeries> phi)
{
    if (phi.size() != p.variables())
        throw InvalidInput("evaluation needs " + std::to_string(p.variables()) + " series, got " +
                           std::to_string(phi.size()));
    for (const auto& s : phi) {
        if (s.arity() != p.arity())
            throw InvalidInput("series arity differs from the polynomial arity");
        if (!(s.field() == p.field()))
            throw FieldMismatch("series field differs from the polynomial field");
    }
    std::map<DerivativeKey, PowerSeries> derivatives;
    auto lookup = [&](const DerivativeKey& key) -> const PowerSeries& {
        auto it = derivatives.find(key);
        if (it == derivatives.end())
            it = derivatives.emplace(key, theta(key.order, phi[key.var - 1])).first;
        return it->second;
    };
    PowerSeries out(p.arity(), p.field());
    for (const auto& [mono, alpha] : p.terms()) {
        PowerSeries term = alpha;
        for (const auto& [key, e] : mono)
            for (unsigned k = 0; k < e; ++k)
                term *= lookup(key);
        out += term;
    }
    return out;
}

DiffPolynomial taylor_coeff_poly(const DiffPolynomial& p, const Point& order)
{
    const DiffPolynomial derived = theta_poly(order, p);
    DiffPolynomial out(p.arity(), p.variables(), p.field());
    for (const auto& [mono, alpha] : derived.terms()) {
        // constant_term() raises PrecisionError on coefficients truncated to nothing.
        const FieldElement c = alpha.constant_term();
        if (!c.is_zero())
            out.add_term(mono, PowerSeries::constant(p.arity(), c));
    }
    return out;
}

FieldElement evaluate_constant(const DiffPolynomial& p,
                               const std::function<FieldElement(const DerivativeKey&)>& values)
{
    FieldElement total(p.field());
    for (const auto& [mono, alpha] : p.terms()) {
        for (const auto& [e, c] : alpha.terms())
            if (e.total_degree() != 0)
                throw InvalidInput("evaluate_constant needs constant coefficients");
        FieldElement term = alpha.constant_term();
        for (const auto& [key, e] : mono) {
            const FieldElement v = values(key);
            for (unsigned k = 0; k < e; ++k)
                term *= v;
        }
        total += term;
    }
    return total;
}

std::vector<Point> orders_up_to(std::size_t arity, Point::value_type bound)
{
    std::vector<Point> out;
    if (bound < 0)
        return out;
    std::vector<Point::value_type> c(arity, 0);
    for (;;) {
        out.emplace_back(c);
        std::size_t k = arity;
        while (k > 0) {
            --k;
            if (c[k] < bound) {
                ++c[k];
                break;
            }
            c[k] = 0;
            if (k == 0)
                return out;
        }
        if (arity == 0)
            return out;
    }
}

std::vector<DiffPolynomial> derivative_sample(const DiffSystem& system, Point::value_type bound)
{
    std::vector<DiffPolynomial> out;
    for (const auto& p : system)
        for (const auto& order : orders_up_to(p.arity(), bound))
            out.push_back(theta_poly(order, p));
    return out;
}

TropPolynomial tropicalize(const DiffPolynomial& p)
{
    TropPolynomial out(p.arity(), p.variables());
    for (const auto& [mono, alpha] : p.terms()) {
        if (!alpha.is_exact())
            throw PrecisionError("tropicalization needs Exact coefficients");
        out.add_term(to_tropical(mono), trop(alpha));
    }
    return out;
}

} // namespace tropdiff
