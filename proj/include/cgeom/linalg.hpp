#pragma once

// Dense complex linear algebra on small matrices.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace cgeom {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr Complex kI{0.0, 1.0};

/// Dense row-major complex matrix. Dimensions are at least 1x1.
class CMatrix {
 public:
  /// Zero matrix.
  CMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of `entries` (row-major); all entries must be finite.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  CMatrix transpose() const;
  CMatrix conj() const;
  /// Conjugate transpose.
  CMatrix adjoint() const;
  CMatrix real_part() const;
  CMatrix imag_part() const;

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);
  /// Row `i` as a 1 x cols matrix.
  CMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  Complex trace() const;
  /// Largest entry modulus (entrywise infinity norm).
  double max_abs() const noexcept;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s) noexcept;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(CMatrix a, Complex s);
CMatrix operator*(Complex s, CMatrix a);

/// Entrywise max |a - b|; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Determinant by partially pivoted LU.
Complex det(const CMatrix& m);
/// Solves a X = b by partially pivoted LU.
CMatrix solve(const CMatrix& a, const CMatrix& b);
CMatrix inverse(const CMatrix& m);

/// True iff `m` is Hermitian within `tol` and its Hermitian part admits a
/// pivoted Cholesky factorization with every pivot above `tol`.
bool is_hpd(const CMatrix& m, double tol = 1e-10);

/// Lower-triangular L with m = L L^*; throws DomainViolation when `m` is not HPD.
CMatrix cholesky(const CMatrix& m);

/// Principal square root and its inverse for a Hermitian positive definite matrix.
struct HpdRoots {
  CMatrix sqrt;
  CMatrix inv_sqrt;
};
HpdRoots hpd_roots(const CMatrix& m);

/// Upper bound for the spectral norm, tight to ~1e-12 relative.
double spectral_norm(const CMatrix& m);

/// Characteristic-polynomial coefficients: e(j) is the sum of all j x j
/// principal minors, so det(xI - M) = x^n - e(1) x^{n-1} + e(2) x^{n-2} - ...
struct CharPolyCoeffs {
  std::size_t n = 0;
  std::vector<Complex> coeffs;  // coeffs[0] == 1, coeffs[j] == e(j)

  Complex e(std::size_t j) const { return coeffs.at(j); }
};

inline constexpr std::size_t kMaxMinorDim = 32;

/// Householder reduction to Hessenberg form, then the Hessenberg determinant
/// recurrence for det(xI - H). Throws SizeError for n > 32.
CharPolyCoeffs principal_minor_sums(const CMatrix& m);

/// Haar-distributed n x n unitary: complex Gaussian matrix, Householder QR,
/// columns rephased so that diag(R) is positive.
CMatrix sample_unitary(std::size_t n, Rng& rng);

/// Standard complex Gaussian draw, E|z|^2 = 1.
Complex complex_gaussian(Rng& rng);

}  // namespace cgeom
