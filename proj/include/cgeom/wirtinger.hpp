#pragma once

// Finite-difference Wirtinger calculus on C^n. Each complex coordinate
// z_k = x_k + i y_k contributes two real directions; all real partials are
// central differences, combined as
//   d/dz = (d/dx - i d/dy) / 2,   d/dzbar = (d/dx + i d/dy) / 2.

#include <functional>
#include <span>
#include <vector>

#include "cgeom/linalg.hpp"

namespace cgeom {

/// Scalar field on C^n. Must be re-entrant; it is evaluated many times per stencil.
using ScalarField = std::function<Complex(std::span<const Complex>)>;

struct FdConfig {
  double h1 = 1e-5;        // first derivatives
  double h2 = 1e-4;        // mixed second derivatives
  double h_nested = 1e-3;  // outer step of nested (fourth-order) pipelines
  bool richardson = true;  // combine steps h and 2h, O(h^4) truncation

  /// Throws DomainViolation unless every step lies in (0, 0.1).
  void validate() const;
};

struct WirtingerGradient {
  std::vector<Complex> dz;     // du/dz_i
  std::vector<Complex> dzbar;  // du/dzbar_i
};

/// H(i,j) = d^2 u / dz_i dzbar_j.
struct WirtingerHessian {
  std::size_t n = 0;
  CMatrix H;
};

WirtingerGradient wirt_grad(const ScalarField& u, std::span<const Complex> p, const FdConfig& cfg = {});

/// Mixed Hessian with step cfg.h2, extrapolated when cfg.richardson.
WirtingerHessian wirt_hessian(const ScalarField& u, std::span<const Complex> p, const FdConfig& cfg = {});

/// Mixed Hessian with an explicit step.
WirtingerHessian wirt_hessian_step(const ScalarField& u, std::span<const Complex> p, double h);

}  // namespace cgeom
