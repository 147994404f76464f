#pragma once

// Cartan domain registry: canonical coordinates, structured matrix views,
// membership predicates, base points and Shilov-boundary samplers.
//
// Canonical flat coordinate orders (the contract for every derivative,
// metric matrix and file format):
//   I(m,n)  Z row-major, m*n entries
//   II(p)   upper triangle of the symmetric Z, row-major, p(p+1)/2 entries
//   III(q)  strict upper triangle of the skew Z, row-major, q(q-1)/2 entries
//   IV(n)   z_1..z_n
//   V       z_1..z_8, t_1..t_4, u_1..u_4
//   VI      z11, z12[1..8], z13[1..8], z22, z[1..8], z33

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cgeom/linalg.hpp"

namespace cgeom {

enum class DomainKind { I, II, III, IV, V, VI };

struct DomainSpec {
  DomainKind kind = DomainKind::I;
  std::size_t m = 1;  // I: rows, II: p, III: q, IV: n
  std::size_t n = 1;  // I: columns

  static DomainSpec type_I(std::size_t m, std::size_t n);
  static DomainSpec type_II(std::size_t p);
  static DomainSpec type_III(std::size_t q);
  static DomainSpec type_IV(std::size_t n);
  static DomainSpec type_V() { return {DomainKind::V, 0, 0}; }
  static DomainSpec type_VI() { return {DomainKind::VI, 0, 0}; }

  /// Total complex dimension.
  std::size_t dim() const;
  /// e.g. "I(2,3)", "V".
  std::string name() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

using Point = std::vector<Complex>;

/// The six 4x4 matrices Q_1..Q_6 with Q_i Q_j^* + Q_j Q_i^* = 2 delta_ij I.
const std::vector<CMatrix>& q_matrices();
/// The eight real 8x8 matrices T_1..T_8 with T_i T_j' + T_j T_i' = 2 delta_ij I.
const std::vector<CMatrix>& t_matrices();

/// Structured view of a point of the 16-dimensional exceptional domain.
struct PointV {
  std::array<Complex, 8> z{};
  std::array<Complex, 4> t{};
  std::array<Complex, 4> u{};

  static PointV from_flat(std::span<const Complex> p);
  Point flat() const;
  /// 7x7 symmetric arrowhead: Z(0,0)=z1, Z(0,j)=Z(j,0)=z_{j+1}, Z(j,j)=z8.
  CMatrix Z() const;
  /// 7x4: row 0 is t, row j is u Q_j.
  CMatrix U() const;
};

/// Structured view of a point of the 27-dimensional exceptional domain.
struct PointVI {
  Complex z11{};
  std::array<Complex, 8> z12{};
  std::array<Complex, 8> z13{};
  Complex z22{};
  std::array<Complex, 8> z{};
  Complex z33{};

  static PointVI from_flat(std::span<const Complex> p);
  Point flat() const;
  /// 17x17 symmetric [[z11, z12, z13], [z12', z22 I, z23], [z13', z23', z33 I]],
  /// where row i of z23 is z T_i.
  CMatrix Z() const;
};

/// Shilov-boundary point of the 16-dimensional domain. X has imaginary part
/// Re(V V^*) and real part the arrowhead built from `x`; V has rows u, v Q_1..v Q_6.
struct BoundaryPointV {
  std::array<double, 8> x{};
  std::array<Complex, 4> u{};
  std::array<Complex, 4> v{};

  CMatrix V() const;
  CMatrix X() const;
  /// The eight arrowhead coordinates of X.
  std::array<Complex, 8> x_coords() const;
  /// (X, V) as a 16-coordinate point of the closure: (x_1..x_8, u, v).
  Point as_point() const;
};

/// Shilov-boundary point of the 27-dimensional domain: a real structured matrix.
struct BoundaryPointVI {
  std::array<double, 27> x{};

  Point as_point() const;
  CMatrix X() const { return PointVI::from_flat(as_point()).Z(); }
};

/// Shilov-boundary point of I(m,n): U U^* = I.
struct BoundaryPointI {
  CMatrix U;
};

using BoundaryPoint = std::variant<BoundaryPointI, BoundaryPointV, BoundaryPointVI>;

/// Matrix realization of a point of types I, II, III.
CMatrix point_matrix(const DomainSpec& spec, std::span<const Complex> p);
/// Inverse of point_matrix (reads the canonical entries, no symmetry check).
Point point_from_matrix(const DomainSpec& spec, const CMatrix& z);

/// Hermitian form whose positive definiteness defines membership.
///   V:  (Z - Z^*)/(2i) - (U U^* + conj(U) U')/2   (7x7)
///   VI: (Z - Z^*)/(2i)                            (17x17)
///   I, II, III: I - Z Z^*
///   IV: diag(1 + |zz'|^2 - 2 z z^*, 1 - |zz'|^2)
CMatrix hermitian_form(const DomainSpec& spec, std::span<const Complex> p);

bool is_member(const DomainSpec& spec, std::span<const Complex> p, double tol = 1e-10);

/// V: z1 = z8 = i; VI: z11 = z22 = z33 = i; I..IV: origin.
Point base_point(const DomainSpec& spec);

/// Random interior point. Matrix types: Gaussian Z rescaled to spectral norm
/// uniform in (0, scale]. IV, V, VI: base point plus a perturbation with
/// |delta_i| <= r, r starting at `scale` and halved until the membership form
/// has every Cholesky pivot above 0.1 (keeps stencils away from the boundary).
Point sample_interior(const DomainSpec& spec, Rng& rng, double scale);

BoundaryPointI sample_shilov_I(std::size_t m, std::size_t n, Rng& rng);
BoundaryPointV sample_shilov_V(Rng& rng, double scale = 1.0);
BoundaryPointVI sample_shilov_VI(Rng& rng, double scale = 1.0);
/// Dispatch on spec kind (I, V, VI only).
BoundaryPoint sample_shilov(const DomainSpec& spec, Rng& rng);

void require_dim(const DomainSpec& spec, std::span<const Complex> p);

}  // namespace cgeom
