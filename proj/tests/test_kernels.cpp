#include <doctest.h>

#include <cmath>

#include "cgeom/errors.hpp"
#include "cgeom/kernels.hpp"
#include "oracles.hpp"

using namespace cgeom;
using oracle::rel;

TEST_CASE("bergman_I values") {
  CHECK(std::abs(bergman_I(2, 3, CMatrix(2, 3)).value - 1.0) < 1e-15);
  CHECK(std::abs(bergman_I(1, 1, CMatrix{{0.5}}).value - 16.0 / 9.0) < 1e-14);
  CMatrix z(2, 2);
  z(0, 0) = 0.5;
  CHECK(rel(bergman_I(2, 2, z).value, std::pow(0.75, -4.0)) < 1e-14);
  CHECK(bergman_I(2, 2, z).form == KernelForm::bergman_I);
  CHECK_THROWS_AS(bergman_I(1, 1, CMatrix{{1.5}}), DomainViolation);
  CHECK_THROWS_AS(bergman_I(2, 2, CMatrix(2, 3)), DimensionError);
}

TEST_CASE("bergman_I blows up towards the boundary") {
  Rng rng(1);
  CMatrix z0 = oracle::gaussian_matrix(2, 2, rng);
  z0 = z0 * Complex{1.0 / spectral_norm(z0)};
  double last = 0.0;
  for (double lam : {0.1, 0.5, 0.9, 0.99, 0.999}) {
    const double k = bergman_I(2, 2, z0 * Complex{lam}).value.real();
    CHECK(k > last);
    last = k;
  }
  CHECK(last > 1e10);
}

TEST_CASE("bergman_V forms") {
  const DomainSpec s = DomainSpec::type_V();
  const Point base = base_point(s);
  for (auto f : {BergmanVForm::det, BergmanVForm::closed, BergmanVForm::closed_printed})
    CHECK(std::abs(bergman_V(base, f).value - 1.0) < 1e-14);

  Point p = base;
  p[0] = p[7] = Complex{0.0, 1.7};
  CHECK(rel(bergman_V(p, BergmanVForm::closed).value, std::pow(1.7, -24.0)) < 1e-12);
  CHECK(rel(bergman_V(p, BergmanVForm::det).value, std::pow(1.7, -24.0)) < 1e-12);

  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const Point q = sample_interior(s, rng, 0.4);
    CHECK(rel(bergman_V(q).value, bergman_V(q, BergmanVForm::closed).value) < 1e-9);
  }
}

TEST_CASE("printed closed form agrees with the det form only on the t = u = 0 slice") {
  const DomainSpec s = DomainSpec::type_V();
  Rng rng(3);
  Point q = sample_interior(s, rng, 0.4);
  const double off = rel(bergman_V(q, BergmanVForm::closed_printed).value, bergman_V(q).value);
  CHECK(off > 1e-6);
  for (std::size_t k = 8; k < 16; ++k) q[k] = 0.0;
  CHECK(rel(bergman_V(q, BergmanVForm::closed_printed).value, bergman_V(q).value) < 1e-10);
}

TEST_CASE("bergman_VI values") {
  const DomainSpec s = DomainSpec::type_VI();
  CHECK(std::abs(bergman_VI(base_point(s)).value - 1.0) < 1e-14);
  Point p = base_point(s);
  for (auto& z : p) z *= 2.0;
  CHECK(rel(bergman_VI(p).value, std::pow(2.0, 252.0 - 306.0)) < 1e-12);
}

TEST_CASE("szego_V at the degenerate boundary point") {
  const Point base = base_point(DomainSpec::type_V());
  const BoundaryPointV b{};
  CHECK(rel(szego_V(base, b, SzegoExponentV::printed).value, std::pow(2.0, 12.0)) < 1e-13);
  CHECK(rel(szego_V(base, b).value, std::pow(2.0, 16.0)) < 1e-13);
  CHECK(szego_exponent(SzegoExponentV::harmonic) == 8);
  CHECK(szego_exponent(SzegoExponentV::printed) == 6);
  CHECK(rel(poisson_V(base, b).value, std::pow(2.0, 32.0)) < 1e-12);
}

TEST_CASE("szego_V is Hermitian symmetric and matches the Bergman diagonal") {
  const DomainSpec s = DomainSpec::type_V();
  Rng rng(4);
  for (int k = 0; k < 5; ++k) {
    const Point p = sample_interior(s, rng, 0.4);
    const Point q = sample_interior(s, rng, 0.4);
    for (auto e : {SzegoExponentV::harmonic, SzegoExponentV::printed}) {
      const Complex hpq = szego_V_points(p, q, e).value;
      const Complex hqp = szego_V_points(q, p, e).value;
      CHECK(rel(hpq, std::conj(hqp)) < 1e-10);
    }
    const double kv = bergman_V(p).value.real();
    CHECK(rel(szego_V_points(p, p).value, std::pow(kv, 2.0 / 3.0)) < 1e-10);
    CHECK(rel(szego_V_points(p, p, SzegoExponentV::printed).value, std::sqrt(kv)) < 1e-10);
  }
}

TEST_CASE("poisson_V is the Szego quotient and positive") {
  const DomainSpec s = DomainSpec::type_V();
  Rng rng(5);
  for (int k = 0; k < 5; ++k) {
    const Point p = sample_interior(s, rng, 0.4);
    const BoundaryPointV b = sample_shilov_V(rng, 0.7);
    const Complex h = szego_V(p, b).value;
    const Complex hpp = szego_V_points(p, p).value;
    const Complex pv = poisson_V(p, b).value;
    CHECK(pv.real() > 0.0);
    CHECK(std::abs(pv.imag()) < 1e-12 * pv.real());
    CHECK(rel(pv, std::norm(h) / hpp) < 1e-12);
  }
}

TEST_CASE("VI Szego and Poisson kernels") {
  const DomainSpec s = DomainSpec::type_VI();
  Rng rng(6);
  for (int k = 0; k < 3; ++k) {
    const Point p = sample_interior(s, rng, 0.3);
    const Point q = sample_interior(s, rng, 0.3);
    CHECK(rel(szego_VI_points(p, q).value, std::conj(szego_VI_points(q, p).value)) < 1e-10);
    CHECK(rel(szego_VI_points(p, p).value, std::sqrt(bergman_VI(p).value.real())) < 1e-10);
    const BoundaryPointVI b = sample_shilov_VI(rng, 0.7);
    const Complex pv = poisson_VI(p, b).value;
    CHECK(pv.real() > 0.0);
    CHECK(rel(pv, std::norm(szego_VI(p, b).value) / szego_VI_points(p, p).value) < 1e-12);
  }
}

TEST_CASE("poisson_I_pj") {
  Rng rng(7);
  const BoundaryPointI u = sample_shilov_I(2, 2, rng);
  for (std::size_t j = 1; j <= 4; ++j) CHECK(std::abs(poisson_I_pj(2, 2, j, CMatrix(2, 2), u.U).value - 1.0) < 1e-14);
  const double r = 0.4;
  CHECK(rel(poisson_I_pj(1, 1, 1, CMatrix{{r}}, CMatrix{{1.0}}).value, (1.0 + r) / (1.0 - r)) < 1e-14);

  CMatrix z = oracle::gaussian_matrix(2, 2, rng);
  z = z * Complex{0.6 / spectral_norm(z)};
  const Complex p1 = poisson_I_pj(2, 2, 1, z, u.U).value;
  for (std::size_t j = 2; j <= 4; ++j)
    CHECK(rel(poisson_I_pj(2, 2, j, z, u.U).value, std::pow(p1, 1.0 / static_cast<double>(j))) < 1e-12);
  CHECK_THROWS_AS(poisson_I_pj(2, 2, 5, z, u.U), ArgumentError);
  CHECK_THROWS(poisson_I_pj(2, 2, 1, z, CMatrix::identity(2) * Complex{2.0}));
}

TEST_CASE("form names are distinct") {
  CHECK(form_name(KernelForm::bergman_V_closed) != form_name(KernelForm::bergman_V_closed_printed));
  CHECK(form_name(KernelForm::szego_V) != form_name(KernelForm::szego_V_printed));
}
