#include "glacalc/linalg.hpp"

namespace glacalc {

Reduced row_reduce(Matrix a, int var_count) {
  Reduced out;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int next_row = 0;
  for (int col = 0; col < cols && next_row < rows; ++col) {
    int pivot = -1;
    for (int r = next_row; r < rows; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[next_row]);
    const RatFunc inv = RatFunc(var_count, 1) / a[next_row][col];
    for (int c = col; c < cols; ++c) a[next_row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == next_row || a[r][col].is_zero()) continue;
      const RatFunc factor = a[r][col];
      for (int c = col; c < cols; ++c) {
        a[r][c] -= factor * a[next_row][c];
      }
    }
    out.pivot_cols.push_back(col);
    ++next_row;
  }
  out.rank = next_row;
  out.mat = std::move(a);
  return out;
}

int rank(const Matrix& a, int var_count) {
  return row_reduce(a, var_count).rank;
}

std::vector<std::vector<RatFunc>> nullspace(const Matrix& a, int var_count) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  const Reduced red = row_reduce(a, var_count);
  std::vector<bool> is_pivot(cols, false);
  for (int c : red.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<RatFunc>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<RatFunc> v(cols, RatFunc(var_count));
    v[free_col] = RatFunc(var_count, 1);
    for (size_t r = 0; r < red.pivot_cols.size(); ++r) {
      v[red.pivot_cols[r]] = -red.mat[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Matrix& a, const std::vector<RatFunc>& b, int var_count) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Matrix aug = a;
  for (int r = 0; r < rows; ++r) aug[r].push_back(b[r]);
  Reduced red = row_reduce(std::move(aug), var_count);

  SolveResult out;
  // A pivot in the appended column marks an inconsistent system.
  for (int c : red.pivot_cols) {
    if (c == cols) return out;
  }
  out.consistent = true;
  out.solution.assign(cols, RatFunc(var_count));
  for (size_t r = 0; r < red.pivot_cols.size(); ++r) {
    out.solution[red.pivot_cols[r]] = red.mat[r][cols];
  }
  return out;
}

std::optional<Matrix> inverted(const Matrix& a, int var_count) {
  const int n = static_cast<int>(a.size());
  Matrix aug = a;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      aug[r].push_back(RatFunc(var_count, r == c ? 1 : 0));
    }
  }
  Reduced red = row_reduce(std::move(aug), var_count);
  if (red.rank < n) return std::nullopt;
  for (int c = 0; c < n; ++c) {
    if (red.pivot_cols[c] != c) return std::nullopt;
  }
  Matrix inv(n, std::vector<RatFunc>(n, RatFunc(var_count)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv[r][c] = red.mat[r][n + c];
  }
  return inv;
}

}  // namespace glacalc
