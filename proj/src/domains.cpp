#include "cgeom/domains.hpp"

#include <cmath>
#include <string>

#include "cgeom/errors.hpp"

namespace cgeom {

namespace {

using Block2 = std::array<std::array<double, 2>, 2>;

constexpr Block2 kId2{{{1, 0}, {0, 1}}};
constexpr Block2 kNegId2{{{-1, 0}, {0, -1}}};
constexpr Block2 kS3{{{1, 0}, {0, -1}}};    // diag(1, -1)
constexpr Block2 kNegS3{{{-1, 0}, {0, 1}}};
constexpr Block2 kEps{{{0, 1}, {-1, 0}}};   // rotation
constexpr Block2 kNegEps{{{0, -1}, {1, 0}}};
constexpr Block2 kX{{{0, 1}, {1, 0}}};      // swap
constexpr Block2 kNegX{{{0, -1}, {-1, 0}}};

struct Placed {
  int row;
  int col;
  Block2 b;
};

CMatrix from_blocks(std::size_t n, std::initializer_list<Placed> blocks, Complex scale = 1.0) {
  CMatrix m(n, n);
  for (const auto& p : blocks)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(2 * p.row + i, 2 * p.col + j) = scale * p.b[i][j];
  return m;
}

std::vector<CMatrix> build_q() {
  std::vector<CMatrix> q;
  q.push_back(CMatrix::identity(4));
  q.push_back(from_blocks(4, {{0, 0, kId2}, {1, 1, kNegId2}}, kI));
  q.push_back(from_blocks(4, {{0, 1, kId2}, {1, 0, kNegId2}}));
  q.push_back(from_blocks(4, {{0, 1, kS3}, {1, 0, kS3}}, kI));
  q.push_back(from_blocks(4, {{0, 1, kEps}, {1, 0, kEps}}));
  q.push_back(from_blocks(4, {{0, 1, kX}, {1, 0, kX}}, kI));
  return q;
}

std::vector<CMatrix> build_t() {
  std::vector<CMatrix> t;
  t.push_back(from_blocks(8, {{0, 0, kS3}, {1, 1, kNegId2}, {2, 2, kNegId2}, {3, 3, kNegId2}}));
  t.push_back(from_blocks(8, {{0, 0, kX}, {1, 1, kNegEps}, {2, 2, kNegEps}, {3, 3, kEps}}));
  t.push_back(from_blocks(8, {{0, 1, kId2}, {1, 0, kS3}, {2, 3, kNegId2}, {3, 2, kId2}}));
  t.push_back(from_blocks(8, {{0, 1, kEps}, {1, 0, kX}, {2, 3, kNegEps}, {3, 2, kNegEps}}));
  t.push_back(from_blocks(8, {{0, 2, kId2}, {1, 3, kId2}, {2, 0, kS3}, {3, 1, kNegId2}}));
  t.push_back(from_blocks(8, {{0, 2, kEps}, {1, 3, kEps}, {2, 0, kX}, {3, 1, kEps}}));
  t.push_back(from_blocks(8, {{0, 3, kS3}, {1, 2, kNegS3}, {2, 1, kS3}, {3, 0, kId2}}));
  t.push_back(from_blocks(8, {{0, 3, kX}, {1, 2, kNegX}, {2, 1, kX}, {3, 0, kNegEps}}));
  return t;
}

CMatrix row_vector(std::span<const Complex> v) {
  return CMatrix(1, v.size(), std::vector<Complex>(v.begin(), v.end()));
}

// Uniform draw in the closed complex disk of radius r.
Complex disk_draw(Rng& rng, double r) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double rho = r * std::sqrt(uni(rng));
  const double phi = 2.0 * M_PI * uni(rng);
  return std::polar(rho, phi);
}

}  // namespace

DomainSpec DomainSpec::type_I(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DimensionError("type I needs m, n >= 1");
  return {DomainKind::I, m, n};
}
DomainSpec DomainSpec::type_II(std::size_t p) {
  if (p == 0) throw DimensionError("type II needs p >= 1");
  return {DomainKind::II, p, 0};
}
DomainSpec DomainSpec::type_III(std::size_t q) {
  if (q < 2) throw DimensionError("type III needs q >= 2");
  return {DomainKind::III, q, 0};
}
DomainSpec DomainSpec::type_IV(std::size_t n) {
  if (n == 0) throw DimensionError("type IV needs n >= 1");
  return {DomainKind::IV, n, 0};
}

std::size_t DomainSpec::dim() const {
  switch (kind) {
    case DomainKind::I: return m * n;
    case DomainKind::II: return m * (m + 1) / 2;
    case DomainKind::III: return m * (m - 1) / 2;
    case DomainKind::IV: return m;
    case DomainKind::V: return 16;
    case DomainKind::VI: return 27;
  }
  return 0;
}

std::string DomainSpec::name() const {
  switch (kind) {
    case DomainKind::I: return "I(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case DomainKind::II: return "II(" + std::to_string(m) + ")";
    case DomainKind::III: return "III(" + std::to_string(m) + ")";
    case DomainKind::IV: return "IV(" + std::to_string(m) + ")";
    case DomainKind::V: return "V";
    case DomainKind::VI: return "VI";
  }
  return "?";
}

void require_dim(const DomainSpec& spec, std::span<const Complex> p) {
  if (p.size() != spec.dim())
    throw DimensionError(spec.name() + ": point has " + std::to_string(p.size()) +
                         " coordinates, expected " + std::to_string(spec.dim()));
}

const std::vector<CMatrix>& q_matrices() {
  static const std::vector<CMatrix> q = build_q();
  return q;
}

const std::vector<CMatrix>& t_matrices() {
  static const std::vector<CMatrix> t = build_t();
  return t;
}

// ---- PointV ---------------------------------------------------------------

PointV PointV::from_flat(std::span<const Complex> p) {
  if (p.size() != 16) throw DimensionError("PointV: expected 16 coordinates");
  PointV v;
  std::copy(p.begin(), p.begin() + 8, v.z.begin());
  std::copy(p.begin() + 8, p.begin() + 12, v.t.begin());
  std::copy(p.begin() + 12, p.end(), v.u.begin());
  return v;
}

Point PointV::flat() const {
  Point p;
  p.reserve(16);
  p.insert(p.end(), z.begin(), z.end());
  p.insert(p.end(), t.begin(), t.end());
  p.insert(p.end(), u.begin(), u.end());
  return p;
}

namespace {

CMatrix arrowhead(std::span<const Complex> c) {
  CMatrix m(7, 7);
  m(0, 0) = c[0];
  for (std::size_t j = 1; j <= 6; ++j) {
    m(0, j) = c[j];
    m(j, 0) = c[j];
    m(j, j) = c[7];
  }
  return m;
}

CMatrix stacked_q_rows(std::span<const Complex> first, std::span<const Complex> w) {
  CMatrix out(7, 4);
  out.set_block(0, 0, row_vector(first));
  const CMatrix wr = row_vector(w);
  const auto& q = q_matrices();
  for (std::size_t j = 0; j < 6; ++j) out.set_block(j + 1, 0, wr * q[j]);
  return out;
}

}  // namespace

CMatrix PointV::Z() const { return arrowhead(z); }
CMatrix PointV::U() const { return stacked_q_rows(t, u); }

// ---- PointVI --------------------------------------------------------------

PointVI PointVI::from_flat(std::span<const Complex> p) {
  if (p.size() != 27) throw DimensionError("PointVI: expected 27 coordinates");
  PointVI v;
  v.z11 = p[0];
  std::copy(p.begin() + 1, p.begin() + 9, v.z12.begin());
  std::copy(p.begin() + 9, p.begin() + 17, v.z13.begin());
  v.z22 = p[17];
  std::copy(p.begin() + 18, p.begin() + 26, v.z.begin());
  v.z33 = p[26];
  return v;
}

Point PointVI::flat() const {
  Point p;
  p.reserve(27);
  p.push_back(z11);
  p.insert(p.end(), z12.begin(), z12.end());
  p.insert(p.end(), z13.begin(), z13.end());
  p.push_back(z22);
  p.insert(p.end(), z.begin(), z.end());
  p.push_back(z33);
  return p;
}

CMatrix PointVI::Z() const {
  CMatrix m(17, 17);
  m(0, 0) = z11;
  for (std::size_t k = 0; k < 8; ++k) {
    m(0, 1 + k) = m(1 + k, 0) = z12[k];
    m(0, 9 + k) = m(9 + k, 0) = z13[k];
    m(1 + k, 1 + k) = z22;
    m(9 + k, 9 + k) = z33;
  }
  const CMatrix zr = row_vector(z);
  const auto& t = t_matrices();
  for (std::size_t i = 0; i < 8; ++i) {
    const CMatrix r = zr * t[i];
    for (std::size_t k = 0; k < 8; ++k) {
      m(1 + i, 9 + k) = r(0, k);
      m(9 + k, 1 + i) = r(0, k);
    }
  }
  return m;
}

// ---- Boundary points ------------------------------------------------------

CMatrix BoundaryPointV::V() const { return stacked_q_rows(u, v); }

std::array<Complex, 8> BoundaryPointV::x_coords() const {
  // Im X = Re(V V^*), which is itself an arrowhead with scalar lower diagonal.
  const CMatrix vv = V() * V().adjoint();
  std::array<Complex, 8> c{};
  c[0] = Complex(x[0], vv(0, 0).real());
  for (std::size_t j = 1; j <= 6; ++j) c[j] = Complex(x[j], vv(0, j).real());
  c[7] = Complex(x[7], vv(1, 1).real());
  return c;
}

CMatrix BoundaryPointV::X() const { return arrowhead(x_coords()); }

Point BoundaryPointV::as_point() const {
  const auto c = x_coords();
  Point p(c.begin(), c.end());
  p.insert(p.end(), u.begin(), u.end());
  p.insert(p.end(), v.begin(), v.end());
  return p;
}

Point BoundaryPointVI::as_point() const { return Point(x.begin(), x.end()); }

// ---- Matrix types ---------------------------------------------------------

CMatrix point_matrix(const DomainSpec& spec, std::span<const Complex> p) {
  require_dim(spec, p);
  switch (spec.kind) {
    case DomainKind::I:
      return CMatrix(spec.m, spec.n, std::vector<Complex>(p.begin(), p.end()));
    case DomainKind::II: {
      CMatrix z(spec.m, spec.m);
      std::size_t k = 0;
      for (std::size_t i = 0; i < spec.m; ++i)
        for (std::size_t j = i; j < spec.m; ++j) z(i, j) = z(j, i) = p[k++];
      return z;
    }
    case DomainKind::III: {
      CMatrix z(spec.m, spec.m);
      std::size_t k = 0;
      for (std::size_t i = 0; i < spec.m; ++i)
        for (std::size_t j = i + 1; j < spec.m; ++j) {
          z(i, j) = p[k];
          z(j, i) = -p[k];
          ++k;
        }
      return z;
    }
    default:
      throw UnsupportedError("point_matrix: " + spec.name() + " has no single-matrix realization");
  }
}

Point point_from_matrix(const DomainSpec& spec, const CMatrix& z) {
  Point p;
  switch (spec.kind) {
    case DomainKind::I:
      if (z.rows() != spec.m || z.cols() != spec.n) throw DimensionError("point_from_matrix: shape");
      p.assign(z.data().begin(), z.data().end());
      return p;
    case DomainKind::II:
      for (std::size_t i = 0; i < spec.m; ++i)
        for (std::size_t j = i; j < spec.m; ++j) p.push_back(z(i, j));
      return p;
    case DomainKind::III:
      for (std::size_t i = 0; i < spec.m; ++i)
        for (std::size_t j = i + 1; j < spec.m; ++j) p.push_back(z(i, j));
      return p;
    default:
      throw UnsupportedError("point_from_matrix: " + spec.name());
  }
}

CMatrix hermitian_form(const DomainSpec& spec, std::span<const Complex> p) {
  require_dim(spec, p);
  switch (spec.kind) {
    case DomainKind::I:
    case DomainKind::II:
    case DomainKind::III: {
      const CMatrix z = point_matrix(spec, p);
      return CMatrix::identity(z.rows()) - z * z.adjoint();
    }
    case DomainKind::IV: {
      Complex zz{};
      double zzbar = 0.0;
      for (const auto& w : p) {
        zz += w * w;
        zzbar += std::norm(w);
      }
      CMatrix h(2, 2);
      h(0, 0) = 1.0 + std::norm(zz) - 2.0 * zzbar;
      h(1, 1) = 1.0 - std::norm(zz);
      return h;
    }
    case DomainKind::V: {
      const PointV v = PointV::from_flat(p);
      const CMatrix z = v.Z();
      const CMatrix u = v.U();
      return (z - z.adjoint()) * (1.0 / (2.0 * kI)) - (u * u.adjoint() + u.conj() * u.transpose()) * 0.5;
    }
    case DomainKind::VI: {
      const CMatrix z = PointVI::from_flat(p).Z();
      return (z - z.adjoint()) * (1.0 / (2.0 * kI));
    }
  }
  throw UnsupportedError("hermitian_form: unknown kind");
}

bool is_member(const DomainSpec& spec, std::span<const Complex> p, double tol) {
  const CMatrix h = hermitian_form(spec, p);
  if (spec.kind == DomainKind::IV) return h(0, 0).real() > tol && h(1, 1).real() > tol;
  return is_hpd(h, tol);
}

Point base_point(const DomainSpec& spec) {
  Point p(spec.dim());
  if (spec.kind == DomainKind::V) {
    p[0] = kI;
    p[7] = kI;
  } else if (spec.kind == DomainKind::VI) {
    p[0] = kI;
    p[17] = kI;
    p[26] = kI;
  }
  return p;
}

// Minimum Cholesky pivot of the membership form for sampled points of IV, V, VI.
constexpr double kInteriorMargin = 0.1;

Point sample_interior(const DomainSpec& spec, Rng& rng, double scale) {
  if (!(scale > 0.0 && scale < 1.0)) throw DomainViolation("sample_interior: scale must lie in (0,1)");
  switch (spec.kind) {
    case DomainKind::I:
    case DomainKind::II:
    case DomainKind::III: {
      Point raw(spec.dim());
      for (auto& w : raw) w = complex_gaussian(rng);
      const CMatrix z = point_matrix(spec, raw);
      const double norm = spectral_norm(z);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      const double radius = scale * (1.0 - uni(rng));  // in (0, scale]
      Point p = raw;
      if (norm > 0.0)
        for (auto& w : p) w *= radius / norm;
      return p;
    }
    default: {
      const Point base = base_point(spec);
      for (double r = scale;; r *= 0.5) {
        Point p = base;
        for (auto& w : p) w += disk_draw(rng, r);
        if (is_member(spec, p, kInteriorMargin)) return p;
      }
    }
  }
}

BoundaryPointI sample_shilov_I(std::size_t m, std::size_t n, Rng& rng) {
  if (m > n) throw DimensionError("Shilov boundary of I(m,n) needs m <= n");
  return {sample_unitary(n, rng).block(0, 0, m, n)};
}

BoundaryPointV sample_shilov_V(Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, 1.0);
  BoundaryPointV b;
  for (auto& x : b.x) x = scale * g(rng);
  for (auto& w : b.u) w = scale * complex_gaussian(rng);
  for (auto& w : b.v) w = scale * complex_gaussian(rng);
  return b;
}

BoundaryPointVI sample_shilov_VI(Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, 1.0);
  BoundaryPointVI b;
  for (auto& x : b.x) x = scale * g(rng);
  return b;
}

BoundaryPoint sample_shilov(const DomainSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case DomainKind::I: return sample_shilov_I(spec.m, spec.n, rng);
    case DomainKind::V: return sample_shilov_V(rng);
    case DomainKind::VI: return sample_shilov_VI(rng);
    default: throw UnsupportedError("sample_shilov: unsupported kind " + spec.name());
  }
}

}  // namespace cgeom
