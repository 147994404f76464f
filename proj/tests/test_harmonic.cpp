#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cgeom/errors.hpp"
#include "cgeom/harmonic.hpp"
#include "cgeom/operators.hpp"

using namespace cgeom;

TEST_CASE("disk quadrature") {
  const auto one = BoundaryFunction::const1();
  for (Complex z : {Complex{0.0, 0.0}, Complex{0.5, 0.2}, Complex{0.0, -0.7}})
    CHECK(std::abs(poisson_extend_disk(one, z, 256).value - 1.0) < 1e-12);
  const auto c1 = BoundaryFunction::trig(1);
  const Complex z = std::polar(0.6, 1.1);
  CHECK(std::abs(poisson_extend_disk(c1, z, 256).value - 0.6 * std::cos(1.1)) < 1e-10);
  CHECK(std::abs(poisson_extend_disk(BoundaryFunction::trig(2), 0.0, 256).value) < 1e-14);
  const auto c3 = BoundaryFunction::trig(3);
  CHECK(std::abs(poisson_extend_disk(c3, z, 256).value - std::pow(0.6, 3) * std::cos(3.3)) < 1e-10);
  CHECK(poisson_extend_disk(one, z, 64).method == ExtensionMethod::quadrature);
}

TEST_CASE("disk quadrature argument checks") {
  const auto one = BoundaryFunction::const1();
  CHECK_THROWS_AS(poisson_extend_disk(one, 0.2, 8), ArgumentError);
  CHECK_THROWS_AS(poisson_extend_disk(one, 1.0, 64), DomainViolation);
}

TEST_CASE("boundary function parsing") {
  CHECK(BoundaryFunction::parse("const1").name == "const1");
  const auto t = BoundaryFunction::parse("trig(2)");
  CHECK(std::abs(t(CMatrix{{std::polar(1.0, 0.4)}}) - std::cos(0.8)) < 1e-15);
  const auto r = BoundaryFunction::parse("re_coord(1)");
  CHECK(std::abs(r(CMatrix{{1.0, Complex{0.25, 3.0}}}) - 0.25) < 1e-15);
  CHECK_THROWS_AS(BoundaryFunction::parse("sin(1)"), ArgumentError);
  CHECK(method_name(ExtensionMethod::monte_carlo) == "monte-carlo");
}

TEST_CASE("Monte Carlo extension on I(1,2)") {
  const CMatrix z{{Complex{0.2, 0.1}, Complex{-0.1, 0.25}}};
  const auto one = BoundaryFunction::const1();
  const ExtensionResult r = poisson_extend_I(1, 2, 1, one, z, 200000, 7);
  CHECK(r.samples == 200000);
  CHECK(r.method == ExtensionMethod::monte_carlo);
  CHECK(std::abs(r.value - 1.0) <= 3.0 * r.stderr_est);
  // The Poisson integral reproduces holomorphic data: Re U(0,0) extends to Re Z(0,0).
  const ExtensionResult c = poisson_extend_I(1, 2, 1, BoundaryFunction::re_coord(0), z, 200000, 8);
  CHECK(std::abs(c.value - 0.2) <= 4.0 * c.stderr_est);
}

TEST_CASE("Monte Carlo extension is reproducible") {
  const CMatrix z{{Complex{0.1, 0.0}, Complex{0.0, 0.3}}};
  const auto f = BoundaryFunction::re_coord(1);
  const ExtensionResult a = poisson_extend_I(1, 2, 1, f, z, 5000, 3);
  const ExtensionResult b = poisson_extend_I(1, 2, 1, f, z, 5000, 3);
  const ExtensionResult c = poisson_extend_I(1, 2, 1, f, z, 5000, 4);
  CHECK(a.value == b.value);
  CHECK(a.stderr_est == b.stderr_est);
  CHECK(a.value != c.value);
  CHECK_THROWS_AS(poisson_extend_I(1, 2, 1, f, z, 10, 3), ArgumentError);
  CHECK_THROWS_AS(poisson_extend_I(1, 2, 1, f, CMatrix{{2.0, 0.0}}, 5000, 3), DomainViolation);
}

TEST_CASE("field helpers") {
  const CMatrix u{{std::polar(1.0, 0.3)}};
  const ScalarField p = poisson_field_I(1, 1, 1, u);
  const Point q{{0.2, -0.1}};
  CHECK(std::abs(normalized_at(p, q)(q) - 1.0) < 1e-15);
  CHECK(std::abs(power_of(p, 2.0)(q) - p(q) * p(q)) < 1e-12);
  const ScalarField neg = [](std::span<const Complex>) { return Complex{-1.0}; };
  CHECK_THROWS_AS(power_of(neg, 0.5)(q), EvaluationError);
}

TEST_CASE("harmonicity certificates") {
  const DomainSpec s = DomainSpec::type_I(1, 1);
  const ScalarField k = bergman_field(s);
  const Point q{{0.3, 0.1}};
  const CMatrix u{{std::polar(1.0, -0.4)}};
  const Case c = harmonicity_certificate(s, k, poisson_field_I(1, 1, 1, u), q, 1e-6, "disk.P1");
  CHECK(c.pass);
  CHECK(c.identity == "disk.P1");
  const ScalarField sq = power_of(normalized_at(poisson_field_I(1, 1, 1, u), q), 2.0);
  const Case bad = harmonicity_certificate(s, k, sq, q, 1e-6, "disk.P1_squared");
  CHECK_FALSE(bad.pass);
}
