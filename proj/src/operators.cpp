#include "cgeom/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgeom/errors.hpp"
#include "cgeom/kernels.hpp"

namespace cgeom {

namespace {

ScalarField log_of(const ScalarField& u) {
  return [u](std::span<const Complex> q) {
    const Complex v = u(q);
    if (!(v.real() > 0.0)) throw EvaluationError("log of a non-positive field value", Point(q.begin(), q.end()));
    return Complex{std::log(v.real()), 0.0};
  };
}

void require_metric_dim(const MetricMatrix& metric, std::span<const Complex> p) {
  if (p.size() != metric.n)
    throw DimensionError("operator: point has " + std::to_string(p.size()) + " coordinates, metric is " +
                         std::to_string(metric.n) + "-dimensional");
}

CMatrix matrix_power(const CMatrix& m, std::size_t power) {
  CMatrix out = m;
  for (std::size_t k = 1; k < power; ++k) out = out * m;
  return out;
}

}  // namespace

ScalarField bergman_field(const DomainSpec& spec) {
  switch (spec.kind) {
    case DomainKind::I:
      return [spec](std::span<const Complex> p) {
        return bergman_I(spec.m, spec.n, point_matrix(spec, p)).value;
      };
    case DomainKind::V:
      return [](std::span<const Complex> p) { return bergman_V(p).value; };
    case DomainKind::VI:
      return [](std::span<const Complex> p) { return bergman_VI(p).value; };
    default:
      throw UnsupportedError("bergman_field: no kernel implemented for " + spec.name());
  }
}

MetricMatrix bergman_metric(const DomainSpec& spec, const ScalarField& kernel, std::span<const Complex> p,
                            const FdConfig& cfg) {
  require_dim(spec, p);
  const WirtingerHessian h = wirt_hessian(log_of(kernel), p, cfg);
  if (!is_hpd(h.H, 1e-8)) throw MetricDegeneracy("bergman_metric: T is not positive definite at an interior point");
  return {h.n, h.H};
}

OperatorMatrix op_L(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p,
                    const FdConfig& cfg) {
  require_metric_dim(metric, p);
  return {metric.n, solve(metric.T, wirt_hessian(u, p, cfg).H)};
}

OperatorMatrix op_L(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& u,
                    std::span<const Complex> p, const FdConfig& cfg) {
  return op_L(bergman_metric(spec, kernel, p, cfg), u, p, cfg);
}

Complex op_Lj(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p, std::size_t j,
              const FdConfig& cfg) {
  if (j < 1 || j > metric.n)
    throw ArgumentError("op_Lj: j = " + std::to_string(j) + " outside 1.." + std::to_string(metric.n));
  return principal_minor_sums(op_L(metric, u, p, cfg).Lmat).e(j);
}

Complex op_Lj(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& u, std::span<const Complex> p,
              std::size_t j, const FdConfig& cfg) {
  return op_Lj(bergman_metric(spec, kernel, p, cfg), u, p, j, cfg);
}

GPieces op_G_pieces(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p,
                    const FdConfig& cfg) {
  require_metric_dim(metric, p);
  const ScalarField lu = log_of(u);
  const CMatrix hess = wirt_hessian(lu, p, cfg).H;
  const WirtingerGradient g = wirt_grad(lu, p, cfg);
  const std::size_t n = metric.n;
  CMatrix outer(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) outer(i, k) = g.dz[i] * g.dzbar[k];
  return {solve(metric.T, hess), solve(metric.T, outer)};
}

OperatorMatrix op_G(const MetricMatrix& metric, const ScalarField& u, std::span<const Complex> p,
                    const FdConfig& cfg) {
  const GPieces g = op_G_pieces(metric, u, p, cfg);
  return {metric.n, g.hess_log + g.grad_outer};
}

OperatorMatrix op_G(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& u,
                    std::span<const Complex> p, const FdConfig& cfg) {
  return op_G(bergman_metric(spec, kernel, p, cfg), u, p, cfg);
}

CurvatureMatrix curvature_R(const DomainSpec& spec, const ScalarField& kernel, std::span<const Complex> p,
                            const FdConfig& cfg) {
  require_dim(spec, p);
  cfg.validate();
  FdConfig inner = cfg;
  inner.h2 = std::max(cfg.h2, cfg.h_nested);
  const ScalarField lk = log_of(kernel);
  const ScalarField log_det_t = [lk, inner](std::span<const Complex> q) {
    const Complex d = det(wirt_hessian(lk, q, inner).H);
    if (!(d.real() > 0.0)) throw EvaluationError("det T is not positive", Point(q.begin(), q.end()));
    return Complex{std::log(d.real()), 0.0};
  };
  const CMatrix r = -wirt_hessian_step(log_det_t, p, cfg.h_nested).H;
  const double asym = max_abs_diff(r, r.adjoint());
  if (asym > 1e-2 * r.max_abs())
    throw PrecisionLoss("curvature_R: Hermitian asymmetry " + std::to_string(asym) + " exceeds 1e-2 of |R|");
  return {r.rows(), r};
}

DeltaInvariants delta_invariants(const MetricMatrix& metric, const CurvatureMatrix& curv, std::size_t power) {
  if (power < 1) throw ArgumentError("delta_invariants: power must be >= 1");
  if (curv.n != metric.n) throw DimensionError("delta_invariants: metric and curvature sizes differ");
  const CMatrix left = matrix_power(solve(metric.T, curv.R), power);
  const CMatrix right = matrix_power(curv.R * inverse(metric.T), power);
  const CharPolyCoeffs a = principal_minor_sums(left);
  const CharPolyCoeffs b = principal_minor_sums(right);
  DeltaInvariants out;
  for (std::size_t j = 1; j <= metric.n; ++j) {
    out.delta.push_back(a.e(j));
    out.delta_bar.push_back(b.e(j));
  }
  return out;
}

DeltaInvariants delta_invariants(const DomainSpec& spec, const ScalarField& kernel, std::span<const Complex> p,
                                 std::size_t power, const FdConfig& cfg) {
  return delta_invariants(bergman_metric(spec, kernel, p, cfg), curvature_R(spec, kernel, p, cfg), power);
}

}  // namespace cgeom
