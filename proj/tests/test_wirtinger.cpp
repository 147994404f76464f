#include <doctest.h>

#include <cmath>

#include "cgeom/errors.hpp"
#include "cgeom/wirtinger.hpp"

using namespace cgeom;
using Point = std::vector<Complex>;

namespace {

Complex disk_log_kernel(std::span<const Complex> z) { return -2.0 * std::log(1.0 - std::norm(z[0])); }

double disk_metric(Complex z) { return 2.0 / std::pow(1.0 - std::norm(z), 2); }

}  // namespace

TEST_CASE("Hessian of |z|^2") {
  const ScalarField u = [](std::span<const Complex> z) { return Complex{std::norm(z[0])}; };
  const Point p{{0.2, -0.4}};
  const WirtingerHessian h = wirt_hessian(u, p);
  CHECK(std::abs(h.H(0, 0) - 1.0) < 1e-8);
}

TEST_CASE("Hessian of the squared norm on C^3 is the identity") {
  const ScalarField u = [](std::span<const Complex> z) {
    double s = 0.0;
    for (const auto& w : z) s += std::norm(w);
    return Complex{s};
  };
  const Point p{{0.1, 0.2}, {-0.3, 0.0}, {0.0, 0.5}};
  CHECK(max_abs_diff(wirt_hessian(u, p).H, CMatrix::identity(3)) < 1e-8);
}

TEST_CASE("Hessian of the disk log-kernel") {
  const Point origin{{0.0, 0.0}};
  CHECK(std::abs(wirt_hessian(disk_log_kernel, origin).H(0, 0) - 2.0) < 1e-6);
  const Point p{{0.3, 0.1}};
  CHECK(std::abs(wirt_hessian(disk_log_kernel, p).H(0, 0) - disk_metric(p[0])) < 1e-6);
}

TEST_CASE("plain stencil is second order") {
  const Point p{{0.3, 0.1}};
  const double exact = disk_metric(p[0]);
  const double e1 = std::abs(wirt_hessian_step(disk_log_kernel, p, 1e-2).H(0, 0) - exact);
  const double e2 = std::abs(wirt_hessian_step(disk_log_kernel, p, 5e-3).H(0, 0) - exact);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("extrapolated stencil beats the plain one") {
  const Point p{{0.3, 0.1}};
  const double exact = disk_metric(p[0]);
  FdConfig plain;
  plain.richardson = false;
  plain.h2 = 1e-3;
  FdConfig extra = plain;
  extra.richardson = true;
  const double ep = std::abs(wirt_hessian(disk_log_kernel, p, plain).H(0, 0) - exact);
  const double ee = std::abs(wirt_hessian(disk_log_kernel, p, extra).H(0, 0) - exact);
  CHECK(ee < ep / 10.0);
}

TEST_CASE("mixed Hessian is Hermitian and sees off-diagonal terms") {
  // u = |a . z|^2 with a = (1, 2i): H(i, j) = a_i conj(a_j).
  const ScalarField u = [](std::span<const Complex> z) { return Complex{std::norm(z[0] + 2.0 * kI * z[1])}; };
  const Point p{{0.1, 0.0}, {0.0, 0.2}};
  const CMatrix h = wirt_hessian(u, p).H;
  CHECK(std::abs(h(0, 0) - 1.0) < 1e-8);
  CHECK(std::abs(h(1, 1) - 4.0) < 1e-8);
  CHECK(std::abs(h(0, 1) - (-2.0 * kI)) < 1e-8);
  CHECK(max_abs_diff(h, h.adjoint()) < 1e-8);
}

TEST_CASE("gradient separates holomorphic and antiholomorphic parts") {
  const ScalarField u = [](std::span<const Complex> z) { return z[0] * z[0] + 3.0 * std::conj(z[1]); };
  const Point p{{0.3, -0.2}, {0.1, 0.1}};
  const WirtingerGradient g = wirt_grad(u, p);
  CHECK(std::abs(g.dz[0] - 2.0 * p[0]) < 1e-9);
  CHECK(std::abs(g.dzbar[0]) < 1e-9);
  CHECK(std::abs(g.dz[1]) < 1e-9);
  CHECK(std::abs(g.dzbar[1] - 3.0) < 1e-9);
}

TEST_CASE("non-finite values raise an evaluation error") {
  const ScalarField u = [](std::span<const Complex> z) { return Complex{1.0 / (std::abs(z[0]) > 5e-6 ? 0.0 : 1.0)}; };
  const Point p{{0.0, 0.0}};
  CHECK_THROWS_AS(wirt_hessian(u, p), EvaluationError);
  CHECK_THROWS_AS(wirt_grad(u, p), EvaluationError);
}

TEST_CASE("step validation") {
  FdConfig cfg;
  cfg.h2 = 0.5;
  CHECK_THROWS_AS(cfg.validate(), DomainViolation);
  const ScalarField u = [](std::span<const Complex>) { return Complex{1.0}; };
  const Point p{{0.0, 0.0}};
  CHECK_THROWS_AS(wirt_hessian_step(u, p, 0.0), DomainViolation);
}
