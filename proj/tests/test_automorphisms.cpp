#include <doctest.h>

#include <cmath>

#include "cgeom/automorphisms.hpp"
#include "cgeom/errors.hpp"
#include "cgeom/kernels.hpp"
#include "oracles.hpp"

using namespace cgeom;
using oracle::rel;

namespace {

double max_diff(const Point& a, const Point& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

CMatrix ball_point(std::size_t m, std::size_t n, Rng& rng, double r) {
  CMatrix z = oracle::gaussian_matrix(m, n, rng);
  return z * Complex{r / spectral_norm(z)};
}

}  // namespace

TEST_CASE("auto_V anchored at the base point is the identity") {
  const DomainSpec s = DomainSpec::type_V();
  const AutoV f = build_auto_V(base_point(s));
  CHECK(max_abs_diff(f.A, CMatrix::identity(7)) < 1e-15);
  Rng rng(1);
  const Point p = sample_interior(s, rng, 0.4);
  CHECK(max_diff(apply_auto_V(f, p), p) < 1e-14);
  CHECK(std::abs(jacobian_det_sq_V(f) - 1.0) < 1e-14);
}

TEST_CASE("auto_V with a scaled anchor") {
  Point p0 = base_point(DomainSpec::type_V());
  p0[0] = Complex{0.0, 2.0};
  const AutoV f = build_auto_V(p0);
  CHECK(std::abs(f.a22() - 1.0) < 1e-15);
  CHECK(std::abs(f.a11() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(rel(jacobian_det_sq_V(f), std::pow(2.0, -12.0)) < 1e-13);
}

TEST_CASE("auto_V factorization, anchor, membership, kernel law") {
  const DomainSpec s = DomainSpec::type_V();
  Rng rng(2);
  for (int k = 0; k < 5; ++k) {
    const Point p0 = sample_interior(s, rng, 0.4);
    const AutoV f = build_auto_V(p0);
    const CMatrix m0 = hermitian_form(s, p0);
    CHECK(max_abs_diff(inverse(f.A.transpose() * f.A), m0) < 1e-10);
    CHECK(max_diff(apply_auto_V(f, p0), base_point(s)) < 1e-10);
    const JacobianRoutes r = jacobian_routes_V(f);
    CHECK(std::abs(r.displayed - r.det_formula) <= 1e-10 * r.det_formula);
    const Point p = sample_interior(s, rng, 0.4);
    const Point w = apply_auto_V(f, p);
    CHECK(is_member(s, w));
    CHECK(rel(bergman_V(p).value, bergman_V(w).value * jacobian_det_sq_V(f)) < 1e-8);
  }
}

TEST_CASE("auto_V rejects anchors outside the domain") {
  Point p0 = base_point(DomainSpec::type_V());
  p0[0] = -kI;
  CHECK_THROWS_AS(build_auto_V(p0), DomainViolation);
}

TEST_CASE("auto_VI examples") {
  const DomainSpec s = DomainSpec::type_VI();
  const AutoVI id = build_auto_VI(base_point(s));
  CHECK(max_abs_diff(id.A, CMatrix::identity(17)) < 1e-15);
  CHECK(std::abs(jacobian_det_sq_VI(id) - 1.0) < 1e-14);

  Point p0 = base_point(s);
  p0[0] = Complex{0.0, 2.0};
  const AutoVI f = build_auto_VI(p0);
  CHECK(std::abs(f.a11() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(f.a22() - 1.0) < 1e-15);
  CHECK(std::abs(f.a33() - 1.0) < 1e-15);
  CHECK(rel(jacobian_det_sq_VI(f), std::pow(2.0, -18.0)) < 1e-13);
}

TEST_CASE("auto_VI general anchors and translations") {
  const DomainSpec s = DomainSpec::type_VI();
  Rng rng(3);
  for (int k = 0; k < 3; ++k) {
    const Point p0 = sample_interior(s, rng, 0.3);
    const AutoVI f = build_auto_VI(p0);
    CHECK(max_abs_diff(inverse(f.A.transpose() * f.A), hermitian_form(s, p0)) < 1e-10);
    CHECK(max_diff(apply_auto_VI(f, p0), base_point(s)) < 1e-10);
    const Point p = sample_interior(s, rng, 0.3);
    const Point w = apply_auto_VI(f, p);
    CHECK(is_member(s, w));
    CHECK(rel(bergman_VI(p).value, bergman_VI(w).value * jacobian_det_sq_VI(f)) < 1e-8);

    const AutoVI t = translation_VI(p0);
    const Point wt = apply_auto_VI(t, p);
    for (std::size_t c = 0; c < p.size(); ++c) CHECK(std::abs(wt[c] - (p[c] - p0[c].real())) < 1e-12);
    CHECK(std::abs(jacobian_det_sq_VI(t) - 1.0) < 1e-14);
  }
}

TEST_CASE("mobius_I identity and anchor") {
  Rng rng(4);
  const MobiusI id = build_mobius_I(CMatrix(2, 3));
  const CMatrix z = ball_point(2, 3, rng, 0.7);
  CHECK(max_abs_diff(apply_mobius_I(id, z), z) < 1e-14);
  const CMatrix z0 = ball_point(2, 3, rng, 0.6);
  const MobiusI f = build_mobius_I(z0);
  CHECK(apply_mobius_I(f, z0).max_abs() < 1e-12);
  CHECK(max_abs_diff(f.A * f.A, inverse(CMatrix::identity(2) - z0 * z0.adjoint())) < 1e-12);
}

TEST_CASE("mobius on the disk") {
  const Complex a{0.3, -0.2};
  const MobiusI f = build_mobius_I(CMatrix{{a}});
  const Complex z{-0.1, 0.5};
  const Complex want = (z - a) / (1.0 - std::conj(a) * z);
  CHECK(std::abs(apply_mobius_I(f, CMatrix{{z}})(0, 0) - want) < 1e-14);
  const double jac = (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * z);
  CHECK(rel(jacobian_det_sq_mobius_I(f, CMatrix{{z}}), jac * jac) < 1e-13);
}

TEST_CASE("mobius Jacobian matches a finite-difference Jacobian") {
  Rng rng(5);
  const std::size_t m = 2, n = 2;
  const MobiusI f = build_mobius_I(ball_point(m, n, rng, 0.5));
  const CMatrix z = ball_point(m, n, rng, 0.6);
  const double h = 1e-6;
  CMatrix jac(m * n, m * n);
  for (std::size_t c = 0; c < m * n; ++c) {
    CMatrix zp = z, zm = z;
    zp(c / n, c % n) += h;
    zm(c / n, c % n) -= h;
    const CMatrix d = (apply_mobius_I(f, zp) - apply_mobius_I(f, zm)) * Complex{1.0 / (2.0 * h)};
    for (std::size_t r = 0; r < m * n; ++r) jac(r, c) = d(r / n, r % n);
  }
  CHECK(rel(std::norm(det(jac)), jacobian_det_sq_mobius_I(f, z)) < 1e-8);
}

TEST_CASE("mobius kernel law and Shilov boundary") {
  Rng rng(6);
  const MobiusI f = build_mobius_I(ball_point(2, 2, rng, 0.5));
  const CMatrix z = ball_point(2, 2, rng, 0.8);
  const CMatrix w = apply_mobius_I(f, z);
  CHECK(rel(bergman_I(2, 2, z).value, bergman_I(2, 2, w).value * jacobian_det_sq_mobius_I(f, z)) < 1e-8);
  const CMatrix u = sample_shilov_I(2, 2, rng).U;
  const CMatrix v = apply_mobius_I(f, u);
  CHECK(max_abs_diff(v * v.adjoint(), CMatrix::identity(2)) < 1e-12);
}

TEST_CASE("mobius rejects anchors outside the ball") {
  CHECK_THROWS_AS(build_mobius_I(CMatrix{{1.2}}), DomainViolation);
}
