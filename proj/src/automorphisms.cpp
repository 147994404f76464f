#include "cgeom/automorphisms.hpp"

#include <cmath>
#include <string>

#include "cgeom/errors.hpp"

namespace cgeom {

namespace {

constexpr double kStructureTol = 1e-8;
constexpr double kRouteTol = 1e-10;

double positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainViolation(std::string(what) + " is not positive; anchor is not interior");
  return v;
}

void check_routes(const JacobianRoutes& r, const char* what) {
  const double rel = std::abs(r.displayed - r.det_formula) / std::abs(r.det_formula);
  if (!(rel <= kRouteTol))
    throw IdentityViolation(std::string(what) + ": Jacobian routes disagree, rel " + std::to_string(rel));
}

void check_structure(const CMatrix& got, const CMatrix& rebuilt, const char* what) {
  const double res = max_abs_diff(got, rebuilt);
  if (!(res <= kStructureTol * (1.0 + got.max_abs())))
    throw StructureError(std::string(what) + ": image is not structured, residual " + std::to_string(res));
}

}  // namespace

// ---- 16-dimensional domain --------------------------------------------------

AutoV build_auto_V(std::span<const Complex> p0) {
  const DomainSpec spec = DomainSpec::type_V();
  require_dim(spec, p0);
  const CMatrix m0 = hermitian_form(spec, p0);
  if (!is_hpd(m0)) throw DomainViolation("build_auto_V: anchor is not interior");
  const double alpha = m0(0, 0).real();
  const double delta = positive(m0(1, 1).real(), "Im z8 - u u^*");
  double beta_sq = 0.0;
  for (std::size_t j = 1; j <= 6; ++j) beta_sq += m0(0, j).real() * m0(0, j).real();
  const double a22 = 1.0 / std::sqrt(delta);
  const double a11 = 1.0 / std::sqrt(positive(alpha - beta_sq / delta, "arrowhead Schur complement"));
  CMatrix a(7, 7);
  a(0, 0) = a11;
  for (std::size_t j = 1; j <= 6; ++j) {
    a(0, j) = -a11 * m0(0, j).real() / delta;
    a(j, j) = a22;
  }
  return {a, Point(p0.begin(), p0.end())};
}

Point apply_auto_V(const AutoV& map, std::span<const Complex> p) {
  require_dim(DomainSpec::type_V(), p);
  const PointV pv = PointV::from_flat(p);
  const PointV p0 = PointV::from_flat(map.anchor);
  const CMatrix z = pv.Z();
  const CMatrix u = pv.U();
  const CMatrix z0 = p0.Z();
  const CMatrix u0 = p0.U();
  const CMatrix bracket = z - (z0 + z0.adjoint()) * 0.5 - kI * (u * u0.adjoint() + u0.conj() * u.transpose()) +
                          (kI * 0.5) * (u0 * u0.adjoint() + u0.conj() * u0.transpose());
  const CMatrix w = map.A * bracket * map.A.transpose();
  const CMatrix r = map.A * (u - u0);

  PointV out;
  out.z[0] = w(0, 0);
  for (std::size_t j = 1; j <= 6; ++j) out.z[j] = w(0, j);
  out.z[7] = w(1, 1);
  for (std::size_t k = 0; k < 4; ++k) {
    out.t[k] = r(0, k);
    out.u[k] = r(1, k);  // Q_1 = I
  }
  check_structure(w, out.Z(), "apply_auto_V (W)");
  check_structure(r, out.U(), "apply_auto_V (R)");
  return out.flat();
}

JacobianRoutes jacobian_routes_V(const AutoV& map) {
  const double a11 = map.a11();
  const double a22 = map.a22();
  // det J = a11^2 (a11 a22)^6 a22^2 a11^4 a22^4; det(J J^*) = (det J)^2 for real A.
  const double log_det_j = 2 * std::log(a11) + 6 * std::log(a11 * a22) + 2 * std::log(a22) +
                           4 * std::log(a11) + 4 * std::log(a22);
  const double det_ata = positive(det(map.A.transpose() * map.A).real(), "det(A'A)");
  const double log_formula = 12 * std::log(det_ata) - 120 * std::log(a22);
  return {std::exp(2 * log_det_j), std::exp(log_formula)};
}

double jacobian_det_sq_V(const AutoV& map) {
  const JacobianRoutes r = jacobian_routes_V(map);
  check_routes(r, "jacobian_det_sq_V");
  return r.det_formula;
}

// ---- 27-dimensional domain --------------------------------------------------

AutoVI build_auto_VI(std::span<const Complex> p0) {
  const DomainSpec spec = DomainSpec::type_VI();
  require_dim(spec, p0);
  const CMatrix y0 = hermitian_form(spec, p0).real_part();
  if (!is_hpd(y0)) throw DomainViolation("build_auto_VI: anchor is not interior");

  const double y22 = y0(1, 1).real();
  const double y33 = positive(y0(9, 9).real(), "Im z33");
  double yy = 0.0;
  for (std::size_t k = 0; k < 8; ++k) yy += p0[18 + k].imag() * p0[18 + k].imag();
  const double a33 = 1.0 / std::sqrt(y33);
  const double a22 = 1.0 / std::sqrt(positive(y22 - yy / y33, "Im z22 - |Im z|^2 / Im z33"));

  // Lower block A_L = [[a22 I, a23], [0, a33 I]], row i of a23 is a T_i with a = -a22 Im z / Im z33.
  CMatrix avec(1, 8);
  for (std::size_t k = 0; k < 8; ++k) avec(0, k) = -a22 * p0[18 + k].imag() / y33;
  CMatrix a_low(16, 16);
  const auto& t = t_matrices();
  for (std::size_t i = 0; i < 8; ++i) {
    a_low(i, i) = a22;
    a_low(8 + i, 8 + i) = a33;
    a_low.set_block(i, 8, avec * t[i]);
  }

  // Top row: [a12 a13] = -a11 y_1L A_L' A_L, a11^{-2} = y11 - y_1L A_L' A_L y_1L'.
  const CMatrix y1l = y0.block(0, 1, 1, 16);
  const CMatrix gram = a_low.transpose() * a_low;
  const double schur = y0(0, 0).real() - (y1l * gram * y1l.transpose())(0, 0).real();
  const double a11 = 1.0 / std::sqrt(positive(schur, "top Schur complement"));
  const CMatrix top = (y1l * gram) * (-a11);

  CMatrix a(17, 17);
  a(0, 0) = a11;
  a.set_block(0, 1, top);
  a.set_block(1, 1, a_low);
  return {a.real_part(), Point(p0.begin(), p0.end())};
}

AutoVI translation_VI(std::span<const Complex> p0) {
  require_dim(DomainSpec::type_VI(), p0);
  return {CMatrix::identity(17), Point(p0.begin(), p0.end())};
}

Point apply_auto_VI(const AutoVI& map, std::span<const Complex> p) {
  require_dim(DomainSpec::type_VI(), p);
  const CMatrix z = PointVI::from_flat(p).Z();
  const CMatrix z0 = PointVI::from_flat(map.anchor).Z();
  const CMatrix w = map.A * (z - (z0 + z0.adjoint()) * 0.5) * map.A.transpose();

  PointVI out;
  out.z11 = w(0, 0);
  for (std::size_t k = 0; k < 8; ++k) {
    out.z12[k] = w(0, 1 + k);
    out.z13[k] = w(0, 9 + k);
  }
  out.z22 = w(1, 1);
  out.z33 = w(9, 9);
  // Row 0 of w23 is z T_1, and T_1 is orthogonal.
  const CMatrix row0 = w.block(1, 9, 1, 8);
  const CMatrix zvec = row0 * t_matrices()[0].transpose();
  for (std::size_t k = 0; k < 8; ++k) out.z[k] = zvec(0, k);
  check_structure(w, out.Z(), "apply_auto_VI");
  return out.flat();
}

JacobianRoutes jacobian_routes_VI(const AutoVI& map) {
  const double l11 = std::log(map.a11());
  const double l22 = std::log(map.a22());
  const double l33 = std::log(map.a33());
  const double log_det_j = 2 * l11 + 8 * (l11 + l22) + 8 * (l11 + l33) + 2 * l22 + 8 * (l22 + l33) + 2 * l33;
  const double det_ata = positive(det(map.A.transpose() * map.A).real(), "det(A'A)");
  const double log_formula = 18 * std::log(det_ata) - 126 * (2 * l22 + 2 * l33);
  return {std::exp(2 * log_det_j), std::exp(log_formula)};
}

double jacobian_det_sq_VI(const AutoVI& map) {
  const JacobianRoutes r = jacobian_routes_VI(map);
  check_routes(r, "jacobian_det_sq_VI");
  return r.det_formula;
}

// ---- Matrix ball I(m,n) -----------------------------------------------------

MobiusI build_mobius_I(const CMatrix& z0) {
  const std::size_t m = z0.rows();
  const std::size_t n = z0.cols();
  const CMatrix left = CMatrix::identity(m) - z0 * z0.adjoint();
  const CMatrix right = CMatrix::identity(n) - z0.adjoint() * z0;
  if (!is_hpd(left)) throw DomainViolation("build_mobius_I: anchor is not interior");
  const CMatrix a = hpd_roots(left).inv_sqrt;
  const CMatrix d = hpd_roots(right).inv_sqrt;
  const CMatrix b = -(a * z0);
  const CMatrix c = -(d * z0.adjoint());
  return {m, n, a, b, c, d, z0};
}

CMatrix apply_mobius_I(const MobiusI& map, const CMatrix& z) {
  if (z.rows() != map.m || z.cols() != map.n) throw DimensionError("apply_mobius_I: shape mismatch");
  const CMatrix w1 = (map.A * z + map.B) * inverse(map.C * z + map.D);
  const CMatrix w2 = inverse(map.A.adjoint() + z * map.B.adjoint()) * (map.C.adjoint() + z * map.D.adjoint());
  const double res = max_abs_diff(w1, w2);
  if (!(res <= 1e-10 * (1.0 + w1.max_abs())))
    throw IdentityViolation("apply_mobius_I: the two expressions differ by " + std::to_string(res));
  return w1;
}

double jacobian_det_sq_mobius_I(const MobiusI& map, const CMatrix& z) {
  const CMatrix w = apply_mobius_I(map, z);
  const CMatrix left = map.A - w * map.C;
  const CMatrix right = inverse(map.C * z + map.D);
  // vec(L X R) = (L kron R') vec(X): det = det(L)^n det(R)^m.
  return std::pow(std::norm(det(left)), static_cast<double>(map.n)) *
         std::pow(std::norm(det(right)), static_cast<double>(map.m));
}

}  // namespace cgeom
