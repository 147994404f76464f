#pragma once

// Brute-force reference computations used only by the tests.

#include <cstddef>
#include <vector>

#include "cgeom/linalg.hpp"

namespace oracle {

inline cgeom::Complex cofactor_det(const cgeom::CMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  cgeom::Complex sum{};
  for (std::size_t c = 0; c < n; ++c) {
    cgeom::CMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(i - 1, kk++) = m(i, k);
    const double sign = c % 2 == 0 ? 1.0 : -1.0;
    sum += sign * m(0, c) * cofactor_det(minor);
  }
  return sum;
}

/// e[j] by enumerating every j-subset of indices.
inline std::vector<cgeom::Complex> minor_sums(const cgeom::CMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<cgeom::Complex> e(n + 1);
  e[0] = 1.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    cgeom::CMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    e[idx.size()] += cofactor_det(sub);
  }
  return e;
}

inline cgeom::CMatrix gaussian_matrix(std::size_t r, std::size_t c, cgeom::Rng& rng, double scale = 1.0) {
  cgeom::CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scale * cgeom::complex_gaussian(rng);
  return m;
}

inline double rel(cgeom::Complex a, cgeom::Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
