#pragma once

#include "tropdiff/rational.hpp"

#include <vector>

namespace tropdiff::lp {

using Matrix = std::vector<std::vector<Rational>>;

// Decides exactly whether { x >= 0 : A x = b } is nonempty.
//
// Phase-one simplex on the system augmented with one artificial variable per
// row, pivoting with Bland's rule, so the iteration always terminates.
// Rows of A must all have the same length.
bool feasible(const Matrix& A, const std::vector<Rational>& b);

} // namespace tropdiff::lp
