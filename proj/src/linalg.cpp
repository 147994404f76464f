#include "cgeom/linalg.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>

#include "cgeom/errors.hpp"

namespace cgeom {

namespace {

bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(),
                     [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void require_square(const CMatrix& m, const char* op) {
  if (!m.is_square())
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
}

// In-place LU with partial pivoting. Returns the permutation sign, or 0 if singular.
struct Lu {
  CMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

Lu lu_decompose(const CMatrix& m) {
  const std::size_t n = m.rows();
  Lu f{m, std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  auto& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const Complex l = a(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  return f;
}

// Smallest pivot met by a diagonally pivoted Cholesky of the Hermitian matrix h;
// stops early (returning that pivot) as soon as a pivot falls to or below `floor`.
double min_cholesky_pivot(CMatrix h, double floor) {
  const std::size_t n = h.rows();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  double min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (h(idx[i], idx[i]).real() > h(idx[p], idx[p]).real()) p = i;
    std::swap(idx[k], idx[p]);
    const std::size_t r = idx[k];
    const double pivot = h(r, r).real();
    min_pivot = std::min(min_pivot, pivot);
    if (!(pivot > floor)) return pivot;
    const double s = std::sqrt(pivot);
    for (std::size_t i = k + 1; i < n; ++i) h(idx[i], r) /= s;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        h(idx[i], idx[j]) -= h(idx[i], r) * std::conj(h(idx[j], r));
      }
    }
  }
  return min_pivot;
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("CMatrix: dimensions must be at least 1x1");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("CMatrix: dimensions must be at least 1x1");
  if (data_.size() != rows * cols)
    throw DimensionError("CMatrix: entry count " + std::to_string(data_.size()) + " != " +
                         std::to_string(rows * cols));
  if (!all_finite(data_)) throw DomainViolation("CMatrix: non-finite entry");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("CMatrix: dimensions must be at least 1x1");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite(data_)) throw DomainViolation("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix c = *this;
  for (auto& z : c.data_) z = std::conj(z);
  return c;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

CMatrix CMatrix::real_part() const {
  CMatrix c = *this;
  for (auto& z : c.data_) z = z.real();
  return c;
}

CMatrix CMatrix::imag_part() const {
  CMatrix c = *this;
  for (auto& z : c.data_) z = z.imag();
  return c;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("CMatrix::block: out of range");
  CMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw DimensionError("CMatrix::set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Complex CMatrix::trace() const {
  require_square(*this, "trace");
  Complex t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("CMatrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("CMatrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= -1.0; }
CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("CMatrix *: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

Complex det(const CMatrix& m) {
  require_square(m, "det");
  if (m.rows() == 1) return m(0, 0);
  const Lu f = lu_decompose(m);
  if (f.singular) return Complex{};
  Complex d = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < m.rows(); ++i) d *= f.lu(i, i);
  return d;
}

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side row mismatch");
  const Lu f = lu_decompose(a);
  if (f.singular) throw SingularMatrix("solve: matrix is singular");
  const std::size_t n = a.rows();
  CMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = b(f.perm[i], c);
      for (std::size_t k = 0; k < i; ++k) s -= f.lu(i, k) * y[k];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = y[i];
      for (std::size_t k = i + 1; k < n; ++k) s -= f.lu(i, k) * x(k, c);
      x(i, c) = s / f.lu(i, i);
    }
  }
  return x;
}

CMatrix inverse(const CMatrix& m) { return solve(m, CMatrix::identity(m.rows())); }

bool is_hpd(const CMatrix& m, double tol) {
  require_square(m, "is_hpd");
  if (max_abs_diff(m, m.adjoint()) > tol) return false;
  const CMatrix h = (m + m.adjoint()) * 0.5;
  return min_cholesky_pivot(h, tol) > tol;
}

CMatrix cholesky(const CMatrix& m) {
  require_square(m, "cholesky");
  const std::size_t n = m.rows();
  CMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex s = m(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * std::conj(l(j, k));
    if (!(s.real() > 0.0)) throw DomainViolation("cholesky: matrix is not positive definite");
    const double d = std::sqrt(s.real());
    l(j, j) = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex t = m(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * std::conj(l(j, k));
      l(i, j) = t / d;
    }
  }
  return l;
}

HpdRoots hpd_roots(const CMatrix& m) {
  require_square(m, "hpd_roots");
  if (!is_hpd(m, 1e-12)) throw DomainViolation("hpd_roots: matrix is not Hermitian positive definite");
  // Denman-Beavers iteration: y -> m^{1/2}, z -> m^{-1/2}.
  CMatrix y = m;
  CMatrix z = CMatrix::identity(m.rows());
  for (int it = 0; it < 100; ++it) {
    CMatrix y_next = (y + inverse(z)) * 0.5;
    CMatrix z_next = (z + inverse(y)) * 0.5;
    const double change = max_abs_diff(y_next, y);
    y = std::move(y_next);
    z = std::move(z_next);
    if (change <= 1e-15 * (1.0 + y.max_abs())) break;
  }
  return {(y + y.adjoint()) * 0.5, (z + z.adjoint()) * 0.5};
}

double spectral_norm(const CMatrix& m) {
  const CMatrix g = m * m.adjoint();
  const std::size_t n = g.rows();
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& z : m.data()) hi += std::norm(z);
  if (hi == 0.0) return 0.0;
  hi *= 1.0 + 1e-12;
  // Bisection on the smallest s with s I - g positive definite.
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    CMatrix shifted = -g;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += mid;
    if (min_cholesky_pivot(shifted, 0.0) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return std::sqrt(hi);
}

CharPolyCoeffs principal_minor_sums(const CMatrix& m) {
  require_square(m, "principal_minor_sums");
  const std::size_t n = m.rows();
  if (n > kMaxMinorDim)
    throw SizeError("principal_minor_sums: dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxMinorDim));
  // Unitary Householder reduction to upper Hessenberg form.
  CMatrix h = m;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm_x = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm_x += std::norm(h(i, k));
    norm_x = std::sqrt(norm_x);
    if (norm_x == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = x0 == Complex{} ? Complex{1.0, 0.0} : x0 / std::abs(x0);
    std::vector<Complex> v(n);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] += phase * norm_x;
    double vv = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vv += std::norm(v[i]);
    // h <- (I - 2 v v^* / vv) h (I - 2 v v^* / vv)
    for (std::size_t c = 0; c < n; ++c) {
      Complex dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, c);
      dot *= 2.0 / vv;
      for (std::size_t i = k + 1; i < n; ++i) h(i, c) -= v[i] * dot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Complex dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += h(r, i) * v[i];
      dot *= 2.0 / vv;
      for (std::size_t i = k + 1; i < n; ++i) h(r, i) -= dot * std::conj(v[i]);
    }
  }

  // p_k = det(xI - H[0..k)): p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonal) p_{i-1}.
  // Polynomials are stored as coefficient vectors, index = power of x.
  std::vector<std::vector<Complex>> p(n + 1);
  p[0] = {Complex{1.0, 0.0}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Complex> next(k + 1);
    for (std::size_t d = 0; d < k; ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Complex sub{1.0, 0.0};
    for (std::size_t i = k - 1; i-- > 0;) {
      sub *= h(i + 1, i);
      const Complex coef = h(i, k - 1) * sub;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
    }
    p[k] = std::move(next);
  }
  const std::vector<Complex>& c = p[n];
  CharPolyCoeffs out{n, std::vector<Complex>(n + 1)};
  for (std::size_t j = 0; j <= n; ++j) out.coeffs[j] = (j % 2 == 0 ? 1.0 : -1.0) * c[n - j];
  return out;
}

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

CMatrix sample_unitary(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("sample_unitary: n must be at least 1");
  CMatrix a(n, n);
  for (auto& z : a.data()) z = complex_gaussian(rng);

  // Householder QR; q accumulates H_0 H_1 ... applied to the identity.
  CMatrix q = CMatrix::identity(n);
  std::vector<Complex> r_diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    double norm_x = 0.0;
    for (std::size_t i = k; i < n; ++i) norm_x += std::norm(a(i, k));
    norm_x = std::sqrt(norm_x);
    const Complex x0 = a(k, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0};
    const Complex alpha = -phase * norm_x;
    r_diag[k] = alpha;
    std::vector<Complex> v(n - k);
    for (std::size_t i = k; i < n; ++i) v[i - k] = a(i, k);
    v[0] -= alpha;
    double vnorm = 0.0;
    for (const auto& z : v) vnorm += std::norm(z);
    if (vnorm == 0.0) continue;
    // Apply H = I - 2 v v^* / (v^* v) to a (left) and accumulate into q (right).
    for (std::size_t j = k; j < n; ++j) {
      Complex s{};
      for (std::size_t i = k; i < n; ++i) s += std::conj(v[i - k]) * a(i, j);
      s *= 2.0 / vnorm;
      for (std::size_t i = k; i < n; ++i) a(i, j) -= v[i - k] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t l = k; l < n; ++l) s += q(i, l) * v[l - k];
      s *= 2.0 / vnorm;
      for (std::size_t l = k; l < n; ++l) q(i, l) -= s * std::conj(v[l - k]);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex ph = std::abs(r_diag[k]) > 0.0 ? r_diag[k] / std::abs(r_diag[k]) : Complex{1.0};
    for (std::size_t i = 0; i < n; ++i) q(i, k) *= ph;
  }
  return q;
}

}  // namespace cgeom
