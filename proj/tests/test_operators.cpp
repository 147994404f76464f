#include <doctest.h>

#include <cmath>

#include "cgeom/errors.hpp"
#include "cgeom/harmonic.hpp"
#include "cgeom/operators.hpp"

using namespace cgeom;

TEST_CASE("metric at the origin of I(m,n)") {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    const DomainSpec s = DomainSpec::type_I(m, n);
    const MetricMatrix t = bergman_metric(s, bergman_field(s), base_point(s));
    CHECK(t.n == m * n);
    CHECK(max_abs_diff(t.T, CMatrix::identity(m * n) * Complex{static_cast<double>(m + n)}) < 1e-5);
  }
}

TEST_CASE("disk metric") {
  const DomainSpec s = DomainSpec::type_I(1, 1);
  const Point p{{0.3, 0.4}};
  const MetricMatrix t = bergman_metric(s, bergman_field(s), p);
  CHECK(std::abs(t.T(0, 0) - 2.0 / std::pow(1.0 - 0.25, 2)) < 1e-6);
}

TEST_CASE("L of log K is the identity and L of a pluriharmonic field vanishes") {
  const DomainSpec s = DomainSpec::type_I(2, 2);
  const ScalarField k = bergman_field(s);
  const Point p{{0.1, 0.2}, {-0.2, 0.0}, {0.05, 0.1}, {0.3, -0.1}};
  const ScalarField logk = [k](std::span<const Complex> z) { return std::log(k(z)); };
  CHECK(max_abs_diff(op_L(s, k, logk, p).Lmat, CMatrix::identity(4)) < 1e-5);
  const ScalarField re = [](std::span<const Complex> z) { return Complex{(z[0] * z[3] + z[1]).real()}; };
  CHECK(op_L(s, k, re, p).Lmat.max_abs() < 1e-6);
}

TEST_CASE("disk Poisson kernel is harmonic and its square is not") {
  const DomainSpec s = DomainSpec::type_I(1, 1);
  const ScalarField k = bergman_field(s);
  const Point p{{0.3, 0.1}};
  const CMatrix u{{std::polar(1.0, 0.7)}};
  const ScalarField p1 = poisson_field_I(1, 1, 1, u);
  CHECK(std::abs(op_Lj(s, k, p1, p, 1)) < 1e-6);
  const ScalarField p1n = normalized_at(p1, p);
  CHECK(std::abs(op_Lj(s, k, power_of(p1n, 2.0), p, 1)) >= 1e-2);
}

TEST_CASE("L_j(P_j) vanishes at the origin of I(2,2)") {
  const DomainSpec s = DomainSpec::type_I(2, 2);
  const ScalarField k = bergman_field(s);
  Rng rng(1);
  const CMatrix u = sample_shilov_I(2, 2, rng).U;
  const Point p = base_point(s);
  const MetricMatrix t = bergman_metric(s, k, p);
  const double control = std::abs(op_Lj(t, power_of(poisson_field_I(2, 2, 1, u), 2.0), p, 1));
  CHECK(control >= 1e-2);
  for (std::size_t j = 1; j <= 4; ++j)
    CHECK(zero_test(std::abs(op_Lj(t, poisson_field_I(2, 2, j, u), p, j)), 1e-4, control));
}

TEST_CASE("G operator") {
  const DomainSpec s = DomainSpec::type_I(2, 2);
  const ScalarField k = bergman_field(s);
  const Point p{{0.1, 0.0}, {0.0, 0.2}, {-0.1, 0.1}, {0.2, 0.0}};
  const ScalarField one = [](std::span<const Complex>) { return Complex{1.0}; };
  CHECK(op_G(s, k, one, p).Lmat.max_abs() < 1e-10);

  Rng rng(2);
  const CMatrix u = sample_shilov_I(2, 2, rng).U;
  const MetricMatrix t = bergman_metric(s, k, p);
  for (std::size_t j = 1; j <= 4; ++j) {
    const ScalarField pj = poisson_field_I(2, 2, j, u);
    const CMatrix l = op_L(t, pj, p).Lmat;
    const CMatrix g = op_G(t, pj, p).Lmat;
    CHECK(max_abs_diff(l, g * pj(p)) / l.max_abs() < 1e-5);
    const GPieces pieces = op_G_pieces(t, pj, p);
    CHECK(max_abs_diff(pieces.hess_log + pieces.grad_outer, g) < 1e-12);
  }
  const ScalarField neg = [](std::span<const Complex>) { return Complex{-1.0}; };
  CHECK_THROWS_AS(op_G(t, neg, p), EvaluationError);
}

TEST_CASE("curvature of the disk") {
  const DomainSpec s = DomainSpec::type_I(1, 1);
  const ScalarField k = bergman_field(s);
  const CurvatureMatrix r0 = curvature_R(s, k, base_point(s));
  CHECK(std::abs(r0.R(0, 0) + 2.0) < 5e-3);
  const Point p{{0.3, 0.0}};
  const MetricMatrix t = bergman_metric(s, k, p);
  const CurvatureMatrix r = curvature_R(s, k, p);
  CHECK(max_abs_diff(-(inverse(t.T) * r.R), CMatrix::identity(1)) < 5e-3);
}

TEST_CASE("delta invariants on I(1,2)") {
  const DomainSpec s = DomainSpec::type_I(1, 2);
  const ScalarField k = bergman_field(s);
  const Point p{{0.2, 0.1}, {-0.1, 0.3}};
  const MetricMatrix t = bergman_metric(s, k, p);
  const CurvatureMatrix r = curvature_R(s, k, p);
  const DeltaInvariants d1 = delta_invariants(t, r, 1);
  REQUIRE(d1.delta.size() == 2);
  CHECK(std::abs(d1.delta[0] + 2.0) < 5e-3);
  CHECK(std::abs(d1.delta[1] - 1.0) < 5e-3);
  for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(d1.delta[j] - d1.delta_bar[j]) < 1e-8);
  const DeltaInvariants d2 = delta_invariants(t, r, 2);
  CHECK(std::abs(d2.delta[0] - 2.0) < 1e-2);
  CHECK(std::abs(d2.delta[1] - 1.0) < 1e-2);
}

TEST_CASE("operator argument checks") {
  const DomainSpec s = DomainSpec::type_I(1, 2);
  const ScalarField k = bergman_field(s);
  const ScalarField u = [](std::span<const Complex> z) { return Complex{std::norm(z[0])}; };
  const Point p{{0.0, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(op_Lj(s, k, u, p, 0), ArgumentError);
  CHECK_THROWS_AS(op_Lj(s, k, u, p, 3), ArgumentError);
  CHECK_THROWS_AS(bergman_field(DomainSpec::type_II(2)), UnsupportedError);
}

TEST_CASE("metric on the exceptional domains is positive definite at the base point") {
  for (const DomainSpec& s : {DomainSpec::type_V(), DomainSpec::type_VI()}) {
    const MetricMatrix t = bergman_metric(s, bergman_field(s), base_point(s));
    CHECK(is_hpd(t.T, 1e-8));
    CHECK(t.n == s.dim());
  }
}
