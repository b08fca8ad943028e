#pragma once

#include <utility>
#include <vector>

#include "lgf/errors.hpp"

namespace lgf {

// Cofactor expansion; no division, so entries with a 1/pi part are fine as long
// as the products stay in the ring.
template <class T>
T det_expand(const std::vector<std::vector<T>>& m) {
  const size_t n = m.size();
  if (n == 0) return T(1L);
  if (n == 1) return m[0][0];
  T acc(0L);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<T>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    T term = m[0][j] * det_expand(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

// Gaussian elimination with an exact nonzero-pivot search.  A pivot that cannot
// be divided by (pi part) sends small matrices to cofactor expansion.
template <class T>
T det_exact(std::vector<std::vector<T>> m) {
  const size_t n = m.size();
  const auto saved = n <= 6 ? m : std::vector<std::vector<T>>{};
  try {
    T det(1L);
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && m[piv][col].is_zero()) ++piv;
      if (piv == n) return T(0L);
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (size_t r = col + 1; r < n; ++r) {
        if (m[r][col].is_zero()) continue;
        T f = m[r][col] / m[col][col];
        for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      }
    }
    return det;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DivisorNotSupported || n > 6) throw;
    return det_expand(saved);
  }
}

}  // namespace lgf
