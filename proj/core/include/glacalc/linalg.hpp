#ifndef GLACALC_LINALG_HPP
#define GLACALC_LINALG_HPP

#include <optional>
#include <vector>

#include "glacalc/rational.hpp"

namespace glacalc {

/// Dense rectangular matrix over the fraction field.
using Matrix = std::vector<std::vector<RatFunc>>;

/// Row-reduced echelon form with its pivot columns.  Reduction is exact:
/// pivots are chosen deterministically (leftmost column, first row with a
/// nonzero entry) and each pivot row is normalized to a leading 1.
struct Reduced {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

Reduced row_reduce(Matrix a, int var_count);

int rank(const Matrix& a, int var_count);

/// Basis of the right nullspace (rows of the result), one vector per free
/// column, each with a 1 in its free column.
std::vector<std::vector<RatFunc>> nullspace(const Matrix& a, int var_count);

struct SolveResult {
  bool consistent = false;
  std::vector<RatFunc> solution;  // free variables pinned to 0
};

/// Solves a x = b exactly; the returned particular solution sets every
/// free variable to zero, so it is canonical for a fixed column order.
SolveResult solve(const Matrix& a, const std::vector<RatFunc>& b, int var_count);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverted(const Matrix& a, int var_count);

}  // namespace glacalc

#endif
