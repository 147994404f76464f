#pragma once

// Poisson integrals over the Shilov boundary of I(m,n) and harmonicity
// certificates for Poisson kernels and their extensions.
//   Y_j(Z) = integral of f(U) P_j(Z, U) dU   (Haar measure, total mass 1)

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "cgeom/domains.hpp"
#include "cgeom/kernels.hpp"
#include "cgeom/report.hpp"
#include "cgeom/wirtinger.hpp"

namespace cgeom {

struct BoundaryFunction {
  std::string name;
  std::function<Complex(const CMatrix&)> f;

  Complex operator()(const CMatrix& u) const { return f(u); }

  static BoundaryFunction const1();
  /// Re of the k-th row-major entry of U.
  static BoundaryFunction re_coord(std::size_t k);
  /// cos(k theta) with theta = arg U(0,0).
  static BoundaryFunction trig(int k);
  /// "const1", "re_coord(k)" or "trig(k)"; throws ArgumentError otherwise.
  static BoundaryFunction parse(std::string_view spec);
};

enum class ExtensionMethod { quadrature, monte_carlo };

std::string_view method_name(ExtensionMethod m);

struct ExtensionResult {
  Complex value;
  double stderr_est = 0.0;
  std::size_t samples = 0;
  ExtensionMethod method = ExtensionMethod::quadrature;
};

/// Trapezoid rule on the unit circle; `nodes` >= 16, |z| < 1.
ExtensionResult poisson_extend_disk(const BoundaryFunction& f, Complex z, std::size_t nodes);

/// Monte Carlo over Haar-distributed U. Samples are drawn in fixed chunks, each
/// with its own generator derived from (seed, chunk index), so the result does
/// not depend on the thread count. samples >= 1000.
ExtensionResult poisson_extend_I(std::size_t m, std::size_t n, std::size_t j, const BoundaryFunction& f,
                                 const CMatrix& z, std::size_t samples, std::uint64_t seed);

/// Z -> P_j(Z, U) on flat coordinates of I(m,n).
ScalarField poisson_field_I(std::size_t m, std::size_t n, std::size_t j, const CMatrix& u);
/// p -> P_V(p, b)^power.
ScalarField poisson_field_V(const BoundaryPointV& b, double power = 1.0,
                            SzegoExponentV e = SzegoExponentV::harmonic);
/// p -> P_VI(p, b)^power.
ScalarField poisson_field_VI(const BoundaryPointVI& b, double power = 1.0);

/// u / u(p): the same field up to a constant, equal to 1 at p.
ScalarField normalized_at(const ScalarField& u, std::span<const Complex> p);
/// u^power (u must be positive real).
ScalarField power_of(const ScalarField& u, double power);

/// Residual |L_1(field)(p)| with control |L_1(field^2)(p)|.
Case harmonicity_certificate(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& field,
                             std::span<const Complex> p, double tol, std::string identity, std::size_t index = 0,
                             const FdConfig& cfg = {});

}  // namespace cgeom
