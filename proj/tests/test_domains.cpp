#include <doctest.h>

#include <cmath>

#include "cgeom/domains.hpp"
#include "cgeom/errors.hpp"

using namespace cgeom;

namespace {

double max_delta_residual(const std::vector<CMatrix>& ms, bool conj_transpose, std::size_t dim) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j) {
      const CMatrix a = conj_transpose ? ms[j].adjoint() : ms[j].transpose();
      const CMatrix b = conj_transpose ? ms[i].adjoint() : ms[i].transpose();
      CMatrix s = ms[i] * a + ms[j] * b;
      if (i == j) s -= CMatrix::identity(dim) * Complex{2.0};
      worst = std::max(worst, s.max_abs());
    }
  return worst;
}

}  // namespace

TEST_CASE("Q matrices form a Clifford system") {
  const auto& q = q_matrices();
  REQUIRE(q.size() == 6);
  CHECK(max_abs_diff(q[0] * q[0].adjoint(), CMatrix::identity(4)) == 0.0);
  CHECK((q[1] * q[2].adjoint() + q[2] * q[1].adjoint()).max_abs() == 0.0);
  CHECK(q[1](0, 0) == kI);
  CHECK(max_delta_residual(q, true, 4) <= 1e-14);
}

TEST_CASE("T matrices form a real Clifford system") {
  const auto& t = t_matrices();
  REQUIRE(t.size() == 8);
  CHECK(max_abs_diff(t[0] * t[0].transpose(), CMatrix::identity(8)) == 0.0);
  CHECK((t[4] * t[6].transpose() + t[6] * t[4].transpose()).max_abs() == 0.0);
  CHECK(t[0](0, 0) == 1.0);
  CHECK(t[0](1, 1) == -1.0);
  CHECK(t[0](0, 1) == 0.0);
  CHECK(t[0](1, 0) == 0.0);
  for (const auto& m : t) CHECK(m.imag_part().max_abs() == 0.0);
  CHECK(max_delta_residual(t, false, 8) <= 1e-14);
}

TEST_CASE("dimensions and names") {
  CHECK(DomainSpec::type_I(2, 3).dim() == 6);
  CHECK(DomainSpec::type_II(3).dim() == 6);
  CHECK(DomainSpec::type_III(4).dim() == 6);
  CHECK(DomainSpec::type_IV(5).dim() == 5);
  CHECK(DomainSpec::type_V().dim() == 16);
  CHECK(DomainSpec::type_VI().dim() == 27);
  CHECK(DomainSpec::type_I(2, 3).name() == "I(2,3)");
  CHECK(DomainSpec::type_V().name() == "V");
}

TEST_CASE("hermitian form at base points is the identity") {
  CHECK(max_abs_diff(hermitian_form(DomainSpec::type_V(), base_point(DomainSpec::type_V())), CMatrix::identity(7)) <
        1e-15);
  CHECK(max_abs_diff(hermitian_form(DomainSpec::type_VI(), base_point(DomainSpec::type_VI())),
                     CMatrix::identity(17)) < 1e-15);
  CHECK(max_abs_diff(hermitian_form(DomainSpec::type_I(2, 2), Point(4)), CMatrix::identity(2)) == 0.0);
  CHECK(is_hpd(hermitian_form(DomainSpec::type_V(), base_point(DomainSpec::type_V())), 1e-10));
}

TEST_CASE("membership") {
  const DomainSpec v = DomainSpec::type_V();
  Point p = base_point(v);
  CHECK(is_member(v, p));
  p[0] = -kI;
  CHECK_FALSE(is_member(v, p));
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) CHECK(is_member(DomainSpec::type_I(m, n), base_point(DomainSpec::type_I(m, n))));
  CHECK(is_member(DomainSpec::type_IV(3), base_point(DomainSpec::type_IV(3))));
  CHECK_THROWS_AS(is_member(v, Point(3)), DimensionError);
}

TEST_CASE("scaled random matrix lies in I(2,3)") {
  Rng rng(3);
  const DomainSpec s = DomainSpec::type_I(2, 3);
  CMatrix z(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 3; ++k) z(i, k) = complex_gaussian(rng);
  z = z * Complex{0.9 / spectral_norm(z)};
  CHECK(is_member(s, point_from_matrix(s, z)));
  z = z * Complex{1.2 / 0.9};
  CHECK_FALSE(is_member(s, point_from_matrix(s, z)));
}

TEST_CASE("sample_interior") {
  for (const DomainSpec& s : {DomainSpec::type_I(2, 2), DomainSpec::type_II(2), DomainSpec::type_III(3),
                              DomainSpec::type_IV(4), DomainSpec::type_V(), DomainSpec::type_VI()}) {
    Rng rng(17);
    for (int k = 0; k < 5; ++k) CHECK(is_member(s, sample_interior(s, rng, 0.5)));
  }
  Rng rng(1);
  for (int k = 0; k < 50; ++k) CHECK(std::abs(sample_interior(DomainSpec::type_I(1, 1), rng, 0.5)[0]) <= 0.5 + 1e-15);
  Rng a(99), b(99);
  CHECK(sample_interior(DomainSpec::type_V(), a, 0.4) == sample_interior(DomainSpec::type_V(), b, 0.4));
}

TEST_CASE("point matrix round trip for types II and III") {
  Rng rng(4);
  const DomainSpec two = DomainSpec::type_II(3);
  const Point p = sample_interior(two, rng, 0.5);
  const CMatrix z = point_matrix(two, p);
  CHECK(max_abs_diff(z, z.transpose()) == 0.0);
  CHECK(point_from_matrix(two, z) == p);
  const DomainSpec three = DomainSpec::type_III(3);
  const CMatrix w = point_matrix(three, sample_interior(three, rng, 0.5));
  CHECK(max_abs_diff(w, -w.transpose()) == 0.0);
}

TEST_CASE("structured views of the exceptional domains") {
  Rng rng(2);
  const Point p = sample_interior(DomainSpec::type_V(), rng, 0.4);
  const PointV v = PointV::from_flat(p);
  CHECK(v.flat() == p);
  const CMatrix z = v.Z();
  CHECK(z(0, 0) == p[0]);
  CHECK(z(3, 0) == p[3]);
  CHECK(z(2, 2) == p[7]);
  CHECK(z(2, 3) == 0.0);
  const CMatrix u = v.U();
  CHECK(max_abs_diff(u.row(0), CMatrix(1, 4, {v.t.begin(), v.t.end()})) == 0.0);
  CHECK(max_abs_diff(u.row(2), CMatrix(1, 4, {v.u.begin(), v.u.end()}) * q_matrices()[1]) < 1e-15);

  const Point q = sample_interior(DomainSpec::type_VI(), rng, 0.3);
  const PointVI w = PointVI::from_flat(q);
  CHECK(w.flat() == q);
  const CMatrix zz = w.Z();
  CHECK(max_abs_diff(zz, zz.transpose()) == 0.0);
  CHECK(max_abs_diff(zz.block(1, 9, 1, 8), CMatrix(1, 8, {w.z.begin(), w.z.end()}) * t_matrices()[0]) < 1e-15);
}

TEST_CASE("Shilov boundary samples") {
  Rng rng(12);
  const BoundaryPointI b1 = sample_shilov_I(1, 1, rng);
  CHECK(std::abs(std::abs(b1.U(0, 0)) - 1.0) < 1e-14);
  const BoundaryPointI b = sample_shilov_I(2, 3, rng);
  CHECK(max_abs_diff(b.U * b.U.adjoint(), CMatrix::identity(2)) < 1e-12);

  const BoundaryPointV bv = sample_shilov_V(rng);
  const CMatrix x = bv.X();
  const CMatrix vv = bv.V();
  const CMatrix lhs = (x - x.adjoint()) * Complex{0.0, -0.5};
  const CMatrix rhs = (vv * vv.adjoint() + vv.conj() * vv.transpose()) * Complex{0.5};
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);

  const BoundaryPointVI bvi = sample_shilov_VI(rng);
  CHECK(bvi.X().imag_part().max_abs() == 0.0);
}
