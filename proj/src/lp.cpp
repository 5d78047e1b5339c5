#include "tropdiff/lp.hpp"

#include "tropdiff/error.hpp"

#include <cstddef>
#include <optional>

namespace tropdiff::lp {

bool feasible(const Matrix& A, const std::vector<Rational>& b)
{
    const std::size_t rows = A.size();
    if (rows != b.size())
        throw InvalidInput("lp::feasible: row count of A and b differ");
    if (rows == 0)
        return true;
    const std::size_t cols = A.front().size();
    for (const auto& row : A)
        if (row.size() != cols)
            throw InvalidInput("lp::feasible: ragged constraint matrix");

    // Tableau columns: [original | artificial | rhs]; artificial j basic in row j.
    const std::size_t width = cols + rows;
    Matrix tab(rows, std::vector<Rational>(width + 1));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j)
            tab[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
        tab[i][cols + i] = 1;
        tab[i][width] = flip ? Rational(-b[i]) : b[i];
        basis[i] = cols + i;
    }

    // Reduced costs of "minimize the sum of artificials"; cost[width] = -objective.
    std::vector<Rational> cost(width + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            cost[j] -= tab[i][j];
        cost[width] -= tab[i][width];
    }

    for (;;) {
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < width; ++j) {
            if (cost[j] < 0) {
                entering = j;
                break;
            }
        }
        if (!entering)
            break;
        const std::size_t e = *entering;

        std::optional<std::size_t> leaving;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][e] <= 0)
                continue;
            Rational ratio = tab[i][width] / tab[i][e];
            if (!leaving || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[*leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        // Phase one is bounded below by zero, so a ratio test always succeeds.
        const std::size_t r = *leaving;

        const Rational pivot = tab[r][e];
        for (auto& v : tab[r])
            v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || tab[i][e] == 0)
                continue;
            const Rational factor = tab[i][e];
            for (std::size_t j = 0; j <= width; ++j)
                tab[i][j] -= factor * tab[r][j];
        }
        if (cost[e] != 0) {
            const Rational factor = cost[e];
            for (std::size_t j = 0; j <= width; ++j)
                cost[j] -= factor * tab[r][j];
        }
        basis[r] = e;
    }
    return cost[width] == 0;
}

} // namespace tropdiff::lp
