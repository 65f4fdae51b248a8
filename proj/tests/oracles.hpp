#pragma once
// Independent reference computations used by the tests. Nothing here calls the
// library routine it checks.

#include "crnkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using crnkit::Rational;
using Mat = std::vector<std::vector<Rational>>;

// Rank by plain fraction-free Bareiss elimination on a copy.
inline std::size_t rank(Mat a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  Rational prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Laplace expansion along the first row.
inline Rational det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    total += ((c % 2 == 0) ? 1 : -1) * a[0][c] * det(minor);
  }
  return total;
}

}  // namespace oracle
