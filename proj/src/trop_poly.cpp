#include "tropdiff/trop_poly.hpp"

#include "tropdiff/error.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <string>
#include <thread>

namespace tropdiff {

void TropPolynomial::add_term(const TropMonomial& monomial, const VertexSet& coefficient)
{
    if (coefficient.empty())
        throw InvalidInput("tropical coefficient must be a nonempty vertex set");
    if (coefficient.arity() != m_)
        throw InvalidInput("tropical coefficient arity differs from the polynomial arity");
    for (const auto& [key, e] : monomial) {
        if (key.var < 1 || key.var > n_)
            throw InvalidInput("variable index " + std::to_string(key.var) + " outside 1.." +
                               std::to_string(n_));
        require_arity(key.order, m_);
    }
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted)
        it->second = oplus(it->second, coefficient);
}

namespace {

void check_tuple(std::size_t m, std::size_t n, std::span<const SupportSet> s)
{
    if (s.size() != n)
        throw InvalidInput("expected a tuple of " + std::to_string(n) + " supports, got " +
                           std::to_string(s.size()));
    for (const auto& si : s)
        if (si.arity() != m)
            throw InvalidInput("support arity differs from the polynomial arity");
}

} // namespace

VertexSet eval_monomial(const TropMonomial& monomial, std::span<const SupportSet> s)
{
    if (s.empty())
        throw InvalidInput("eval_monomial needs at least one support");
    const std::size_t m = s.front().arity();
    VertexSet out = VertexSet::unit(m);
    for (const auto& [key, e] : monomial) {
        if (key.var < 1 || key.var > s.size())
            throw InvalidInput("monomial refers to a variable outside the support tuple");
        const VertexSet v = val(key.order, s[key.var - 1]);
        if (v.empty())
            return VertexSet(m);
        out = odot(out, odot_power(v, e));
    }
    return out;
}

std::vector<VertexSet> term_values(const TropPolynomial& p, std::span<const SupportSet> s)
{
    check_tuple(p.arity(), p.variables(), s);
    std::vector<VertexSet> out;
    out.reserve(p.size());
    for (const auto& [mono, coeff] : p.term_map())
        out.push_back(odot(coeff, eval_monomial(mono, s)));
    return out;
}

namespace {

VertexSet combine(std::size_t m, const std::vector<VertexSet>& values)
{
    VertexSet out(m);
    for (const auto& v : values)
        out = oplus(out, v);
    return out;
}

} // namespace

VertexSet eval(const TropPolynomial& p, std::span<const SupportSet> s)
{
    return combine(p.arity(), term_values(p, s));
}

SolutionReport is_solution(const TropPolynomial& p, std::span<const SupportSet> s)
{
    const auto values = term_values(p, s);
    SolutionReport report;
    report.evaluation = combine(p.arity(), values);
    for (const auto& vertex : report.evaluation) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i].contains(vertex))
                hits.push_back(i);
        if (hits.size() < 2)
            report.solution = false;
        report.witnesses.emplace_back(vertex, std::move(hits));
    }
    return report;
}

SystemReport is_solution_system(std::span<const TropPolynomial> h, std::span<const SupportSet> s)
{
    SystemReport out;
    for (const auto& p : h) {
        out.reports.push_back(is_solution(p, s));
        out.solution = out.solution && out.reports.back().solution;
    }
    return out;
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
    if (a != 0 && b > kSaturated / a)
        return kSaturated;
    return a * b;
}

std::vector<Point> box_points(const Point& box)
{
    std::vector<Point> out;
    std::vector<Point::value_type> c(box.arity(), 0);
    for (;;) {
        out.emplace_back(c);
        std::size_t k = box.arity();
        for (;;) {
            if (k == 0)
                return out;
            --k;
            if (c[k] < box[k]) {
                ++c[k];
                break;
            }
            c[k] = 0;
        }
    }
}

std::size_t subsets_per_component(std::size_t points, std::size_t max_points)
{
    // sum_{k <= max_points} C(points, k), saturating.
    std::size_t total = 0;
    std::size_t binom = 1;
    for (std::size_t k = 0; k <= std::min(points, max_points); ++k) {
        if (total > kSaturated - binom)
            return kSaturated;
        total += binom;
        if (k < points) {
            // binom * (points - k) / (k + 1) stays integral.
            const std::size_t next = saturating_mul(binom, points - k);
            if (next == kSaturated)
                return kSaturated;
            binom = next / (k + 1);
        }
    }
    return total;
}

// Subsets of `universe` with at most max_points elements, by size then lexicographically.
std::vector<SupportSet> component_candidates(std::size_t m, const std::vector<Point>& universe,
                                             std::size_t max_points)
{
    std::vector<SupportSet> out;
    const std::size_t limit = std::min(universe.size(), max_points);
    std::vector<std::size_t> idx;
    for (std::size_t size = 0; size <= limit; ++size) {
        idx.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        for (;;) {
            std::vector<Point> pts;
            for (auto i : idx)
                pts.push_back(universe[i]);
            out.push_back(SupportSet::finite(FinitePointSet(m, std::move(pts))));
            // Next combination in lexicographic order.
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == universe.size() - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

} // namespace

std::size_t candidate_count(const EnumerationRequest& request)
{
    require_arity(request.box, request.m);
    std::size_t points = 1;
    for (auto b : request.box)
        points = saturating_mul(points, static_cast<std::size_t>(b) + 1);
    const std::size_t per = subsets_per_component(points, request.max_points);
    std::size_t total = 1;
    for (std::size_t i = 0; i < request.n; ++i)
        total = saturating_mul(total, per);
    return total;
}

std::vector<std::vector<SupportSet>> enumerate_solutions(std::span<const TropPolynomial> h,
                                                         const EnumerationRequest& request)
{
    if (request.m == 0 || request.n == 0)
        throw InvalidInput("enumeration needs m >= 1 and n >= 1");
    for (const auto& p : h)
        if (p.arity() != request.m || p.variables() != request.n)
            throw InvalidInput("system shape differs from the enumeration request");
    const std::size_t count = candidate_count(request);
    if (count > request.max_candidates)
        throw CapExceeded("enumeration would examine about " + std::to_string(count) +
                              " candidate tuples, above the cap of " +
                              std::to_string(request.max_candidates),
                          count);

    const auto universe = box_points(request.box);
    const auto comps = component_candidates(request.m, universe, request.max_points);
    const std::size_t per = comps.size();

    auto decode = [&](std::size_t rank) {
        std::vector<SupportSet> tuple(request.n);
        for (std::size_t i = request.n; i-- > 0;) {
            tuple[i] = comps[rank % per];
            rank /= per;
        }
        return tuple;
    };

    unsigned threads = request.threads ? request.threads : std::thread::hardware_concurrency();
    threads = std::max(1U, threads);
    if (count < 256)
        threads = 1;
    const std::size_t chunk = (count + threads - 1) / threads;

    // Each worker scans a contiguous rank range; concatenating in worker order
    // reproduces the sequential output order.
    std::vector<std::future<std::vector<std::size_t>>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = std::min(count, t * chunk);
        const std::size_t hi = std::min(count, lo + chunk);
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<std::size_t> hits;
            for (std::size_t r = lo; r < hi; ++r) {
                const auto tuple = decode(r);
                if (is_solution_system(h, tuple).solution)
                    hits.push_back(r);
            }
            return hits;
        }));
    }
    std::vector<std::vector<SupportSet>> out;
    for (auto& job : jobs)
        for (auto r : job.get())
            out.push_back(decode(r));
    return out;
}

} // namespace tropdiff
