#pragma once

// Invariant differential operators built on the Bergman metric
//   T = d^2 log K / dz' dzbar,  L(u) = T^{-1} d^2 u / dz' dzbar,
//   L_j(u) = e_j(L(u)) (sum of the j x j principal minors),
//   G(u) = T^{-1} [d^2 log u / dz' dzbar + (d log u / dz')(d log u / dzbar)],
//   R = -d^2 log det T / dz' dzbar.
// L_1 is the Laplace-Beltrami operator and L_n the complex Monge-Ampere operator.

#include <span>
#include <vector>

#include "cgeom/domains.hpp"
#include "cgeom/linalg.hpp"
#include "cgeom/wirtinger.hpp"

namespace cgeom {

/// Bergman kernel of `spec` as a scalar field on flat coordinates (types I, V, VI).
ScalarField bergman_field(const DomainSpec& spec);

struct MetricMatrix {
  std::size_t n = 0;
  CMatrix T;
};

struct OperatorMatrix {
  std::size_t n = 0;
  CMatrix Lmat;
};

struct CurvatureMatrix {
  std::size_t n = 0;
  CMatrix R;
};

/// Hessian of log K (step cfg.h2); throws MetricDegeneracy unless positive definite (tol 1e-8).
MetricMatrix bergman_metric(const DomainSpec& spec, const ScalarField& kernel, std::span<const Complex> p,
                            const FdConfig& cfg = {});

OperatorMatrix op_L(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p,
                    const FdConfig& cfg = {});
OperatorMatrix op_L(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& u,
                    std::span<const Complex> p, const FdConfig& cfg = {});

Complex op_Lj(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p, std::size_t j,
              const FdConfig& cfg = {});
Complex op_Lj(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& u, std::span<const Complex> p,
              std::size_t j, const FdConfig& cfg = {});

/// Throws EvaluationError if u is not positive real at a stencil point.
OperatorMatrix op_G(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p,
                    const FdConfig& cfg = {});
OperatorMatrix op_G(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& u,
                    std::span<const Complex> p, const FdConfig& cfg = {});

/// The two pieces of G(u): T^{-1} Hess(log u) and T^{-1} (grad log u)'(gradbar log u).
struct GPieces {
  CMatrix hess_log;
  CMatrix grad_outer;
};
GPieces op_G_pieces(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p,
                    const FdConfig& cfg = {});

/// Nested differences: outer step cfg.h_nested on log det T, where T itself uses
/// step max(cfg.h2, cfg.h_nested). Throws PrecisionLoss when R is Hermitian only
/// to worse than 1e-2 of its max norm.
CurvatureMatrix curvature_R(const DomainSpec& spec, const ScalarField& kernel, std::span<const Complex> p,
                            const FdConfig& cfg = {});

struct DeltaInvariants {
  std::vector<Complex> delta;      // e_j((T^{-1} R)^N), j = 1..n
  std::vector<Complex> delta_bar;  // e_j((R T^{-1})^N)
};

DeltaInvariants delta_invariants(const MetricMatrix& metric, const CurvatureMatrix& curv, std::size_t power);
DeltaInvariants delta_invariants(const DomainSpec& spec, const ScalarField& kernel, std::span<const Complex> p,
                                 std::size_t power, const FdConfig& cfg = {});

}  // namespace cgeom
