#pragma once

#include <optional>
#include <vector>

#include "klschubert/ring.hpp"

namespace klschubert {

/// Some solution of A x = b over the scalar field, or nullopt if inconsistent.
/// Free variables are set to zero.
template <ScalarRing R>
std::optional<std::vector<typename R::value_type>> solve_linear(const R& r,
                                                                std::vector<std::vector<typename R::value_type>> A,
                                                                std::vector<typename R::value_type> b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A.front().size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && r.is_zero(A[p][col])) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    const auto inv = r.one() / A[row][col];
    for (std::size_t j = col; j < n; ++j) A[row][j] = A[row][j] * inv;
    b[row] = b[row] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || r.is_zero(A[i][col])) continue;
      const auto f = A[i][col];
      for (std::size_t j = col; j < n; ++j)
        if (!r.is_zero(A[row][j])) A[i][j] = A[i][j] - f * A[row][j];
      b[i] = b[i] - f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!r.is_zero(b[i])) return std::nullopt;
  std::vector<typename R::value_type> x(n, r.zero());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace klschubert
