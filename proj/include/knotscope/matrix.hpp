#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace knotscope {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination over an integral domain. `div(a, b)`
// must return a / b for exact divisions.
template <class T, class ExactDiv>
T bareiss_determinant(Matrix<T> m, ExactDiv div) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == T(0)) ++p;
      if (p == n) return T(0);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(0) - det : det;
}

}  // namespace knotscope
