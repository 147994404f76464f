#include "cgeom/kernels.hpp"

#include <cmath>
#include <string>

#include "cgeom/errors.hpp"

namespace cgeom {

namespace {

constexpr double kBaseTol = 1e-10;

// A base of a real (possibly fractional) power must be positive real.
double positive_base(Complex v, const char* what) {
  if (!(v.real() > 0.0) || std::abs(v.imag()) > kBaseTol * std::abs(v))
    throw DomainViolation(std::string(what) + " is not positive real (" + std::to_string(v.real()) +
                          ", " + std::to_string(v.imag()) + ")");
  return v.real();
}

Complex nonzero(Complex v, const char* what) {
  if (v == Complex{}) throw SingularMatrix(std::string(what) + " vanishes");
  return v;
}

const Complex kInv2i = 1.0 / (2.0 * kI);

// d = Im z8 - u u^*   (scalar lower diagonal of the 16-dimensional form).
double lower_diag_V(const PointV& v) {
  double uu = 0.0;
  for (const auto& w : v.u) uu += std::norm(w);
  return v.z[7].imag() - uu;
}

// Mixed polarizations for the 16-dimensional domain: holomorphic in p, antiholomorphic in q.
Complex mixed_lower_diag_V(const PointV& p, const PointV& q) {
  Complex uv{};
  for (std::size_t k = 0; k < 4; ++k) uv += p.u[k] * std::conj(q.u[k]);
  return (p.z[7] - std::conj(q.z[7])) * kInv2i - uv;
}

CMatrix mixed_form_V(const PointV& p, const PointV& q) {
  const CMatrix z = p.Z();
  const CMatrix x = q.Z();
  const CMatrix u = p.U();
  const CMatrix v = q.U();
  return (z - x.adjoint()) * kInv2i - (u * v.adjoint() + v.conj() * u.transpose()) * 0.5;
}

Complex mixed_q_VI(std::span<const Complex> p, std::span<const Complex> q) {
  auto w = [&](std::size_t k) { return (p[k] - std::conj(q[k])) * kInv2i; };
  Complex s = w(17) * w(26);
  for (std::size_t k = 18; k < 26; ++k) s -= w(k) * w(k);
  return s;
}

Complex mixed_det_VI(std::span<const Complex> p, std::span<const Complex> q) {
  const CMatrix z = PointVI::from_flat(p).Z();
  const CMatrix x = PointVI::from_flat(q).Z();
  return det((z - x.adjoint()) * kInv2i);
}

void require_size(std::span<const Complex> p, std::size_t n, const char* what) {
  if (p.size() != n)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(n) + " coordinates, got " +
                         std::to_string(p.size()));
}

}  // namespace

std::string_view form_name(KernelForm f) {
  switch (f) {
    case KernelForm::bergman_I: return "bergman_I";
    case KernelForm::bergman_V_det: return "bergman_V_det";
    case KernelForm::bergman_V_closed: return "bergman_V_closed";
    case KernelForm::bergman_V_closed_printed: return "bergman_V_closed_printed";
    case KernelForm::bergman_VI: return "bergman_VI";
    case KernelForm::szego_V: return "szego_V";
    case KernelForm::szego_V_printed: return "szego_V_printed";
    case KernelForm::poisson_V: return "poisson_V";
    case KernelForm::poisson_V_printed: return "poisson_V_printed";
    case KernelForm::szego_VI: return "szego_VI";
    case KernelForm::poisson_VI: return "poisson_VI";
    case KernelForm::poisson_I_pj: return "poisson_I_pj";
  }
  return "?";
}

int szego_exponent(SzegoExponentV e) { return e == SzegoExponentV::harmonic ? 8 : 6; }

KernelValue bergman_I(std::size_t m, std::size_t n, const CMatrix& z) {
  if (z.rows() != m || z.cols() != n) throw DimensionError("bergman_I: Z shape does not match (m,n)");
  const double base = positive_base(det(CMatrix::identity(m) - z * z.adjoint()), "det(I - Z Z^*)");
  return {std::pow(base, -static_cast<double>(m + n)), KernelForm::bergman_I};
}

KernelValue bergman_V(std::span<const Complex> p, BergmanVForm form) {
  require_size(p, 16, "bergman_V");
  const PointV v = PointV::from_flat(p);
  const double d = positive_base(lower_diag_V(v), "Im z8 - u u^*");
  if (form == BergmanVForm::det) {
    const double dm = positive_base(det(hermitian_form(DomainSpec::type_V(), p)), "det M");
    return {std::pow(d, 60) / std::pow(dm, 12), KernelForm::bergman_V_det};
  }
  double tt = 0.0;
  for (const auto& w : v.t) tt += std::norm(w);
  const CMatrix t = CMatrix(1, 4, {v.t.begin(), v.t.end()});
  const CMatrix u = CMatrix(1, 4, {v.u.begin(), v.u.end()});
  const auto& q = q_matrices();
  Complex s = form == BergmanVForm::closed ? (v.z[0].imag() - tt) * d : v.z[0].imag() * v.z[7].imag();
  for (std::size_t j = 0; j < 6; ++j) {
    const Complex cross = (u * q[j] * t.adjoint())(0, 0) + (t * q[j].adjoint() * u.adjoint())(0, 0);
    const Complex b = v.z[j + 1].imag() - 0.5 * cross;
    s -= b * b;
  }
  const double base = positive_base(s, "closed-form Bergman base");
  return {std::pow(base, -12),
          form == BergmanVForm::closed ? KernelForm::bergman_V_closed : KernelForm::bergman_V_closed_printed};
}

KernelValue bergman_VI(std::span<const Complex> p) {
  require_size(p, 27, "bergman_VI");
  double q = p[17].imag() * p[26].imag();
  for (std::size_t k = 18; k < 26; ++k) q -= p[k].imag() * p[k].imag();
  q = positive_base(q, "Im z22 Im z33 - |Im z|^2");
  const double dy = positive_base(det(hermitian_form(DomainSpec::type_VI(), p)), "det Im Z");
  return {std::pow(q, 126) / std::pow(dy, 18), KernelForm::bergman_VI};
}

KernelValue szego_V_points(std::span<const Complex> p, std::span<const Complex> q, SzegoExponentV e) {
  require_size(p, 16, "szego_V");
  require_size(q, 16, "szego_V");
  const PointV a = PointV::from_flat(p);
  const PointV b = PointV::from_flat(q);
  const int s = szego_exponent(e);
  const Complex dm = nonzero(mixed_lower_diag_V(a, b), "mixed lower diagonal");
  const Complex detm = nonzero(det(mixed_form_V(a, b)), "mixed determinant");
  return {std::pow(dm, 5 * s) / std::pow(detm, s),
          e == SzegoExponentV::harmonic ? KernelForm::szego_V : KernelForm::szego_V_printed};
}

KernelValue szego_V(std::span<const Complex> p, const BoundaryPointV& b, SzegoExponentV e) {
  return szego_V_points(p, b.as_point(), e);
}

KernelValue poisson_V(std::span<const Complex> p, const BoundaryPointV& b, SzegoExponentV e) {
  require_size(p, 16, "poisson_V");
  const PointV a = PointV::from_flat(p);
  const PointV x = PointV::from_flat(b.as_point());
  const int s = szego_exponent(e);
  const double d = positive_base(lower_diag_V(a), "Im z8 - u u^*");
  const double dm = positive_base(det(hermitian_form(DomainSpec::type_V(), p)), "det M");
  const double mixed_d = std::abs(nonzero(mixed_lower_diag_V(a, x), "mixed lower diagonal"));
  const double mixed_det = std::abs(nonzero(det(mixed_form_V(a, x)), "mixed determinant"));
  const double value = std::pow(dm, s) * std::pow(mixed_d, 10 * s) / (std::pow(d, 5 * s) * std::pow(mixed_det, 2 * s));
  return {value, e == SzegoExponentV::harmonic ? KernelForm::poisson_V : KernelForm::poisson_V_printed};
}

KernelValue szego_VI_points(std::span<const Complex> p, std::span<const Complex> q) {
  require_size(p, 27, "szego_VI");
  require_size(q, 27, "szego_VI");
  const Complex qm = nonzero(mixed_q_VI(p, q), "mixed q");
  const Complex detm = nonzero(mixed_det_VI(p, q), "mixed determinant");
  return {std::pow(qm, 63) / std::pow(detm, 9), KernelForm::szego_VI};
}

KernelValue szego_VI(std::span<const Complex> p, const BoundaryPointVI& b) {
  return szego_VI_points(p, b.as_point());
}

KernelValue poisson_VI(std::span<const Complex> p, const BoundaryPointVI& b) {
  require_size(p, 27, "poisson_VI");
  const Point x = b.as_point();
  const double q = positive_base(mixed_q_VI(p, p), "Im z22 Im z33 - |Im z|^2");
  const double dy = positive_base(det(hermitian_form(DomainSpec::type_VI(), p)), "det Im Z");
  const double qm = std::abs(nonzero(mixed_q_VI(p, x), "mixed q"));
  const double detm = std::abs(nonzero(mixed_det_VI(p, x), "mixed determinant"));
  return {std::pow(dy, 9) * std::pow(qm, 126) / (std::pow(detm, 18) * std::pow(q, 63)), KernelForm::poisson_VI};
}

KernelValue poisson_I_pj(std::size_t m, std::size_t n, std::size_t j, const CMatrix& z, const CMatrix& u) {
  if (z.rows() != m || z.cols() != n || u.rows() != m || u.cols() != n)
    throw DimensionError("poisson_I_pj: Z and U must be m x n");
  if (j < 1 || j > m * n)
    throw ArgumentError("poisson_I_pj: j = " + std::to_string(j) + " outside 1.." + std::to_string(m * n));
  if (max_abs_diff(u * u.adjoint(), CMatrix::identity(m)) > 1e-8)
    throw DomainViolation("poisson_I_pj: U is not on the Shilov boundary (U U^* != I)");
  const CMatrix id = CMatrix::identity(m);
  const double inner = positive_base(det(id - z * z.adjoint()), "det(I - Z Z^*)");
  const double cross = std::abs(nonzero(det(id - z * u.adjoint()), "det(I - Z U^*)"));
  const double power = static_cast<double>(n) / static_cast<double>(j);
  return {std::pow(inner, power) / std::pow(cross, 2.0 * power), KernelForm::poisson_I_pj};
}

}  // namespace cgeom
