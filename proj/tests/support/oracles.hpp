#pragma once

// Independent reference computations for the test suite. Everything here is
// written directly from definitions, without going through the library's
// echelon machinery, so it can catch mistakes in it.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "hopfpar/linalg.hpp"

namespace oracle {

using hopfpar::Mat;
using hopfpar::Scalar;

// Determinant by cofactor-free Bareiss-style elimination on a private copy.
inline Scalar det(Mat a) {
  const std::size_t n = a.rows();
  Scalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Scalar f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

// Rank as the size of the largest nonvanishing minor, by brute force over
// row/column subsets. Only for tiny matrices.
inline std::size_t rank_by_minors(const Mat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t best = 0;
  for (unsigned rows = 1; rows < (1u << m); ++rows)
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(rows));
      if (k != static_cast<std::size_t>(__builtin_popcount(cols)) || k <= best) continue;
      Mat sub(k, k);
      std::size_t r = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(rows >> i & 1u)) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (cols >> j & 1u) sub(r, c++) = a(i, j);
        ++r;
      }
      if (sgn(det(sub)) != 0) best = k;
    }
  return best;
}

// Naive triple loop product.
inline Mat multiply(const Mat& a, const Mat& b) {
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

}  // namespace oracle
