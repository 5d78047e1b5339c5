#pragma once

// Tropical differential polynomials p = (+)_M a_M (.) epsilon_M over vertex
// sets, their evaluation at tuples of supports, and the tropical vanishing
// condition.

#include "tropdiff/monomial.hpp"
#include "tropdiff/supports.hpp"
#include "tropdiff/tropical_series.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace tropdiff {

class TropPolynomial {
public:
    using Term = std::pair<TropMonomial, VertexSet>;

    TropPolynomial() = default;
    /// The empty tropical polynomial.
    TropPolynomial(std::size_t m, std::size_t n) : m_(m), n_(n) {}

    std::size_t arity() const noexcept { return m_; }
    std::size_t variables() const noexcept { return n_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Terms in canonical (monomial) order; a term's position is its monomial index.
    std::vector<Term> terms() const { return {terms_.begin(), terms_.end()}; }
    const std::map<TropMonomial, VertexSet>& term_map() const noexcept { return terms_; }

    /// (+)-accumulates a_M onto epsilon_M. Throws InvalidInput on an empty
    /// coefficient, wrong arity or out-of-range variable.
    void add_term(const TropMonomial& monomial, const VertexSet& coefficient);

    friend bool operator==(const TropPolynomial&, const TropPolynomial&) = default;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::map<TropMonomial, VertexSet> terms_;
};

/// epsilon_M(S) = (.)_{i,J} Val_J(S_i)^{(.)M_{i,J}}.
VertexSet eval_monomial(const TropMonomial& monomial, std::span<const SupportSet> s);

/// Per-term values a_M (.) epsilon_M(S), in monomial-index order.
std::vector<VertexSet> term_values(const TropPolynomial& p, std::span<const SupportSet> s);

/// p(S) = (+)_M a_M (.) epsilon_M(S).
VertexSet eval(const TropPolynomial& p, std::span<const SupportSet> s);

struct SolutionReport {
    VertexSet evaluation;
    /// For each vertex of the evaluation (lexicographic), the monomial indices
    /// whose term value contains it (ascending).
    std::vector<std::pair<Point, std::vector<std::size_t>>> witnesses;
    bool solution = true;
};

/// Every vertex of p(S) must lie in the term values of two distinct monomials.
SolutionReport is_solution(const TropPolynomial& p, std::span<const SupportSet> s);

struct SystemReport {
    std::vector<SolutionReport> reports;
    bool solution = true;
};

SystemReport is_solution_system(std::span<const TropPolynomial> h, std::span<const SupportSet> s);

struct EnumerationRequest {
    std::size_t m = 1;
    std::size_t n = 1;
    /// Candidate points lie in [0, box_k] on each axis.
    Point box;
    /// At most this many points per component; larger than the box means no limit.
    std::size_t max_points = static_cast<std::size_t>(-1);
    /// Refuse when the number of candidate tuples exceeds this.
    std::size_t max_candidates = 1'000'000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Number of candidate tuples the request would examine (saturating).
std::size_t candidate_count(const EnumerationRequest& request);

/// All tuples of finite supports inside the box that solve every polynomial in h.
/// Components are ordered by size then lexicographically by point list; tuples
/// lexicographically by component rank. Throws CapExceeded when too large.
std::vector<std::vector<SupportSet>> enumerate_solutions(std::span<const TropPolynomial> h,
                                                         const EnumerationRequest& request);

} // namespace tropdiff
