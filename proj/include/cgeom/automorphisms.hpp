#pragma once

// Explicit holomorphic automorphisms with their Jacobian determinants.
//
//   V:  W = A [Z - Re Z0 - i(U U0^* + conj(U0) U') + i Re(U0 U0^*)] A',  R = A (U - U0)
//   VI: W = A [Z - Re Z0] A'
//   I:  W = (A Z + B)(C Z + D)^{-1} = (A^* + Z B^*)^{-1} (C^* + Z D^*)
//
// A is real for V and VI, with (A'A)^{-1} equal to the Hermitian form at the
// anchor, so each map sends its anchor to the base point.

#include <span>

#include "cgeom/domains.hpp"
#include "cgeom/linalg.hpp"

namespace cgeom {

/// The two routes to det(J J^*) for the exceptional-domain maps.
struct JacobianRoutes {
  double displayed;    // product of the displayed Jacobian diagonal, squared
  double det_formula;  // det(A'A)^k / (power of the repeated diagonal)
};

struct AutoV {
  CMatrix A;     // 7x7 real: first row a11..a17, then a22 on the remaining diagonal
  Point anchor;  // 16 coordinates

  double a11() const { return A(0, 0).real(); }
  double a22() const { return A(1, 1).real(); }
};

/// Arrowhead factorization of M0 = hermitian_form(V, p0):
/// a22 = delta^{-1/2}, a11 = (alpha - |beta|^2/delta)^{-1/2}, a_{1,j+1} = -a11 beta_j / delta.
AutoV build_auto_V(std::span<const Complex> p0);

/// Throws StructureError if the image loses the (arrowhead, u Q_j) structure.
Point apply_auto_V(const AutoV& map, std::span<const Complex> p);

/// Both routes: diag(a11^2, a11 a22 I6, a22^2, a11 I4, a22 I4) and det(A'A)^12 / a22^120.
JacobianRoutes jacobian_routes_V(const AutoV& map);
/// det(J J^*); throws IdentityViolation when the two routes differ by more than rel 1e-10.
double jacobian_det_sq_V(const AutoV& map);

struct AutoVI {
  CMatrix A;     // 17x17 real block upper triangular
  Point anchor;  // 27 coordinates

  double a11() const { return A(0, 0).real(); }
  double a22() const { return A(1, 1).real(); }
  double a33() const { return A(9, 9).real(); }
};

/// Normalizer sending p0 to the base point, for any interior p0.
AutoVI build_auto_VI(std::span<const Complex> p0);
/// Real translation W = Z - Re Z0 (A = I).
AutoVI translation_VI(std::span<const Complex> p0);

Point apply_auto_VI(const AutoVI& map, std::span<const Complex> p);

/// Both routes: diag(a11^2, a11 a22 I8, a11 a33 I8, a22^2, a22 a33 I8, a33^2) and
/// det(A'A)^18 / (a22^2 a33^2)^126.
JacobianRoutes jacobian_routes_VI(const AutoVI& map);
double jacobian_det_sq_VI(const AutoVI& map);

struct MobiusI {
  std::size_t m = 0;
  std::size_t n = 0;
  CMatrix A;  // m x m, Hermitian: (I - Z0 Z0^*)^{-1/2}
  CMatrix B;  // m x n, -A Z0
  CMatrix C;  // n x m, -D Z0^*
  CMatrix D;  // n x n, Hermitian: (I - Z0^* Z0)^{-1/2}
  CMatrix anchor;
};

MobiusI build_mobius_I(const CMatrix& z0);

/// Evaluates both expressions above and throws IdentityViolation if they
/// differ by more than 1e-10 (relative to 1 + |W|).
CMatrix apply_mobius_I(const MobiusI& map, const CMatrix& z);

/// |det J|^2 at z: the differential is dZ -> (A - W C) dZ (C Z + D)^{-1}.
double jacobian_det_sq_mobius_I(const MobiusI& map, const CMatrix& z);

}  // namespace cgeom
