#pragma once

#include "tropdiff/lattice.hpp"

#include <compare>
#include <cstddef>
#include <map>

namespace tropdiff {

/// The derivative x_{i,J}: variable index i (1-based) differentiated by Theta(J).
struct DerivativeKey {
    std::size_t var = 1;
    Point order;

    friend bool operator==(const DerivativeKey&, const DerivativeKey&) = default;
    friend auto operator<=>(const DerivativeKey&, const DerivativeKey&) = default;
};

/// A finite product of derivatives with positive exponents, stored sparsely.
/// The tag distinguishes classical differential monomials E_M from tropical
/// monomials epsilon_M, which share the representation but not the semantics.
template <class Tag>
class BasicMonomial {
public:
    using Exponents = std::map<DerivativeKey, unsigned>;

    BasicMonomial() = default;
    explicit BasicMonomial(Exponents exponents) : exponents_(std::move(exponents))
    {
        std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
    }

    static BasicMonomial single(const DerivativeKey& key, unsigned power = 1)
    {
        return BasicMonomial(Exponents{{key, power}});
    }

    const Exponents& exponents() const noexcept { return exponents_; }
    bool is_constant() const noexcept { return exponents_.empty(); }
    auto begin() const noexcept { return exponents_.begin(); }
    auto end() const noexcept { return exponents_.end(); }

    /// max ||J||_inf over the derivatives present; 0 for the constant monomial.
    Point::value_type order() const noexcept
    {
        Point::value_type r = 0;
        for (const auto& [key, e] : exponents_)
            r = std::max(r, key.order.max_norm());
        return r;
    }

    unsigned degree() const noexcept
    {
        unsigned d = 0;
        for (const auto& [key, e] : exponents_)
            d += e;
        return d;
    }

    friend BasicMonomial operator*(const BasicMonomial& a, const BasicMonomial& b)
    {
        Exponents e = a.exponents_;
        for (const auto& [key, p] : b.exponents_)
            e[key] += p;
        return BasicMonomial(std::move(e));
    }

    friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;
    friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;

private:
    Exponents exponents_;
};

struct ClassicalTag;
struct TropicalTag;
using DiffMonomial = BasicMonomial<ClassicalTag>;
using TropMonomial = BasicMonomial<TropicalTag>;

inline TropMonomial to_tropical(const DiffMonomial& m) { return TropMonomial(m.exponents()); }

} // namespace tropdiff
