#include "cgeom/wirtinger.hpp"

#include <cmath>

#include "cgeom/errors.hpp"
#include "parallel.hpp"

namespace cgeom {

namespace {

// Real direction a: 2k is Re z_k, 2k+1 is Im z_k.
Complex direction(std::size_t a) { return a % 2 == 0 ? Complex{1.0, 0.0} : kI; }

Complex eval_checked(const ScalarField& u, const std::vector<Complex>& q) {
  const Complex v = u(q);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw EvaluationError("scalar field is not finite at a stencil point", q);
  return v;
}

Complex eval_shift(const ScalarField& u, std::span<const Complex> p, std::size_t a, double sa,
                   std::size_t b, double sb) {
  std::vector<Complex> q(p.begin(), p.end());
  q[a / 2] += sa * direction(a);
  q[b / 2] += sb * direction(b);
  return eval_checked(u, q);
}

}  // namespace

void FdConfig::validate() const {
  for (double h : {h1, h2, h_nested})
    if (!(h > 0.0 && h < 1e-1)) throw DomainViolation("FdConfig: steps must lie in (0, 0.1)");
}

namespace {

WirtingerGradient grad_step(const ScalarField& u, std::span<const Complex> p, double h) {
  const std::size_t n = p.size();
  WirtingerGradient g{std::vector<Complex>(n), std::vector<Complex>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Complex> q(p.begin(), p.end());
    q[k] = p[k] + h;
    const Complex fxp = eval_checked(u, q);
    q[k] = p[k] - h;
    const Complex fxm = eval_checked(u, q);
    q[k] = p[k] + h * kI;
    const Complex fyp = eval_checked(u, q);
    q[k] = p[k] - h * kI;
    const Complex fym = eval_checked(u, q);
    const Complex dx = (fxp - fxm) / (2.0 * h);
    const Complex dy = (fyp - fym) / (2.0 * h);
    g.dz[k] = 0.5 * (dx - kI * dy);
    g.dzbar[k] = 0.5 * (dx + kI * dy);
  }
  return g;
}

}  // namespace

WirtingerGradient wirt_grad(const ScalarField& u, std::span<const Complex> p, const FdConfig& cfg) {
  cfg.validate();
  WirtingerGradient g = grad_step(u, p, cfg.h1);
  if (!cfg.richardson) return g;
  const WirtingerGradient g2 = grad_step(u, p, 2.0 * cfg.h1);
  for (std::size_t k = 0; k < g.dz.size(); ++k) {
    g.dz[k] = (4.0 * g.dz[k] - g2.dz[k]) / 3.0;
    g.dzbar[k] = (4.0 * g.dzbar[k] - g2.dzbar[k]) / 3.0;
  }
  return g;
}

WirtingerHessian wirt_hessian_step(const ScalarField& u, std::span<const Complex> p, double h) {
  if (!(h > 0.0 && h < 1e-1)) throw DomainViolation("wirt_hessian: step must lie in (0, 0.1)");
  const std::size_t n = p.size();
  const std::size_t nr = 2 * n;
  const Complex f0 = eval_checked(u, std::vector<Complex>(p.begin(), p.end()));

  std::vector<Complex> real_hess(nr * nr);
  const std::size_t pairs = nr * (nr + 1) / 2;
  detail::parallel_for(pairs, [&](std::size_t idx) {
    // Unrank idx into (a, b) with a <= b.
    std::size_t a = 0;
    std::size_t rem = idx;
    while (rem >= nr - a) {
      rem -= nr - a;
      ++a;
    }
    const std::size_t b = a + rem;
    Complex v;
    if (a == b) {
      const Complex fp = eval_shift(u, p, a, h, a, 0.0);
      const Complex fm = eval_shift(u, p, a, -h, a, 0.0);
      v = (fp - 2.0 * f0 + fm) / (h * h);
    } else {
      const Complex fpp = eval_shift(u, p, a, h, b, h);
      const Complex fpm = eval_shift(u, p, a, h, b, -h);
      const Complex fmp = eval_shift(u, p, a, -h, b, h);
      const Complex fmm = eval_shift(u, p, a, -h, b, -h);
      v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
    real_hess[a * nr + b] = v;
    real_hess[b * nr + a] = v;
  });

  auto r = [&](std::size_t a, std::size_t b) { return real_hess[a * nr + b]; };
  WirtingerHessian out{n, CMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t xi = 2 * i, yi = 2 * i + 1;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t xj = 2 * j, yj = 2 * j + 1;
      out.H(i, j) = 0.25 * (r(xi, xj) + r(yi, yj) + kI * (r(xi, yj) - r(yi, xj)));
    }
  }
  return out;
}

WirtingerHessian wirt_hessian(const ScalarField& u, std::span<const Complex> p, const FdConfig& cfg) {
  cfg.validate();
  WirtingerHessian out = wirt_hessian_step(u, p, cfg.h2);
  if (!cfg.richardson) return out;
  const WirtingerHessian coarse = wirt_hessian_step(u, p, 2.0 * cfg.h2);
  out.H = (out.H * Complex{4.0} - coarse.H) * Complex{1.0 / 3.0};
  return out;
}

}  // namespace cgeom
