#include "cgeom/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <regex>

#include "cgeom/errors.hpp"
#include "cgeom/operators.hpp"
#include "parallel.hpp"

namespace cgeom {

namespace {

constexpr std::size_t kChunk = 1024;

struct Moments {
  Complex sum{};
  double sum_sq = 0.0;
  Complex shift{};  // first sample of the chunk, for a stable variance
  std::size_t count = 0;
};

}  // namespace

BoundaryFunction BoundaryFunction::const1() {
  return {"const1", [](const CMatrix&) { return Complex{1.0, 0.0}; }};
}

BoundaryFunction BoundaryFunction::re_coord(std::size_t k) {
  return {"re_coord(" + std::to_string(k) + ")", [k](const CMatrix& u) {
            if (k >= u.rows() * u.cols()) throw ArgumentError("re_coord: index outside the matrix");
            return Complex{u.data()[k].real(), 0.0};
          }};
}

BoundaryFunction BoundaryFunction::trig(int k) {
  return {"trig(" + std::to_string(k) + ")",
          [k](const CMatrix& u) { return Complex{std::cos(k * std::arg(u(0, 0))), 0.0}; }};
}

BoundaryFunction BoundaryFunction::parse(std::string_view spec) {
  const std::string s(spec);
  if (s == "const1") return const1();
  std::smatch m;
  static const std::regex re_pat(R"(re_coord\((\d+)\))");
  static const std::regex trig_pat(R"(trig\((-?\d+)\))");
  if (std::regex_match(s, m, re_pat)) return re_coord(std::stoul(m[1]));
  if (std::regex_match(s, m, trig_pat)) return trig(std::stoi(m[1]));
  throw ArgumentError("unknown boundary function '" + s + "' (const1, re_coord(k), trig(k))");
}

std::string_view method_name(ExtensionMethod m) {
  return m == ExtensionMethod::quadrature ? "quadrature" : "monte-carlo";
}

ExtensionResult poisson_extend_disk(const BoundaryFunction& f, Complex z, std::size_t nodes) {
  if (nodes < 16) throw ArgumentError("poisson_extend_disk: nodes must be >= 16");
  if (!(std::abs(z) < 1.0)) throw DomainViolation("poisson_extend_disk: |z| must be < 1");
  const CMatrix zm(1, 1, {z});
  Complex acc{};
  double norm = 0.0;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes);
    const CMatrix u(1, 1, {std::polar(1.0, theta)});
    acc += f(u) * poisson_I_pj(1, 1, 1, zm, u).value;
    norm += poisson_I_pj(1, 1, 1, CMatrix(1, 1), u).value.real();
  }
  return {acc / norm, 0.0, nodes, ExtensionMethod::quadrature};
}

ExtensionResult poisson_extend_I(std::size_t m, std::size_t n, std::size_t j, const BoundaryFunction& f,
                                 const CMatrix& z, std::size_t samples, std::uint64_t seed) {
  if (samples < 1000) throw ArgumentError("poisson_extend_I: samples must be >= 1000");
  if (z.rows() != m || z.cols() != n) throw DimensionError("poisson_extend_I: Z must be m x n");
  if (!is_member(DomainSpec::type_I(m, n), point_from_matrix(DomainSpec::type_I(m, n), z)))
    throw DomainViolation("poisson_extend_I: Z is not interior");

  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> parts(chunks);
  const CMatrix origin(m, n);
  detail::parallel_for(
      chunks,
      [&](std::size_t c) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c)};
        Rng rng(seq);
        const std::size_t count = std::min(kChunk, samples - c * kChunk);
        Moments mo;
        mo.count = count;
        for (std::size_t s = 0; s < count; ++s) {
          const CMatrix u = sample_shilov_I(m, n, rng).U;
          const Complex v = f(u) * poisson_I_pj(m, n, j, z, u).value /
                            poisson_I_pj(m, n, j, origin, u).value;
          if (s == 0) mo.shift = v;
          mo.sum += v - mo.shift;
          mo.sum_sq += std::norm(v - mo.shift);
        }
        parts[c] = mo;
      },
      1);

  // Combine chunk moments in index order.
  Complex mean{};
  for (const auto& part : parts) mean += part.sum + static_cast<double>(part.count) * part.shift;
  mean /= static_cast<double>(samples);
  double ss = 0.0;
  for (const auto& part : parts) {
    const double cnt = static_cast<double>(part.count);
    const Complex d = part.shift - mean;
    // sum |v - mean|^2 = sum |w|^2 + 2 Re(conj(d) sum w) + cnt |d|^2, with w = v - shift.
    ss += part.sum_sq + 2.0 * (std::conj(d) * part.sum).real() + cnt * std::norm(d);
  }
  const double var = ss / static_cast<double>(samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples)), samples, ExtensionMethod::monte_carlo};
}

ScalarField poisson_field_I(std::size_t m, std::size_t n, std::size_t j, const CMatrix& u) {
  const DomainSpec spec = DomainSpec::type_I(m, n);
  return [spec, m, n, j, u](std::span<const Complex> p) {
    return poisson_I_pj(m, n, j, point_matrix(spec, p), u).value;
  };
}

ScalarField poisson_field_V(const BoundaryPointV& b, double power, SzegoExponentV e) {
  return [b, power, e](std::span<const Complex> p) {
    return Complex{std::pow(poisson_V(p, b, e).value.real(), power), 0.0};
  };
}

ScalarField poisson_field_VI(const BoundaryPointVI& b, double power) {
  return [b, power](std::span<const Complex> p) {
    return Complex{std::pow(poisson_VI(p, b).value.real(), power), 0.0};
  };
}

ScalarField normalized_at(const ScalarField& u, std::span<const Complex> p) {
  const Complex scale = u(p);
  if (scale == Complex{}) throw EvaluationError("normalized_at: field vanishes at the point", Point(p.begin(), p.end()));
  return [u, scale](std::span<const Complex> q) { return u(q) / scale; };
}

ScalarField power_of(const ScalarField& u, double power) {
  return [u, power](std::span<const Complex> q) {
    const Complex v = u(q);
    if (!(v.real() > 0.0)) throw EvaluationError("power_of: field is not positive", Point(q.begin(), q.end()));
    return Complex{std::pow(v.real(), power), 0.0};
  };
}

Case harmonicity_certificate(const DomainSpec& spec, const ScalarField& kernel, const ScalarField& field,
                             std::span<const Complex> p, double tol, std::string identity, std::size_t index,
                             const FdConfig& cfg) {
  const MetricMatrix metric = bergman_metric(spec, kernel, p, cfg);
  const ScalarField sq = [field](std::span<const Complex> q) {
    const Complex v = field(q);
    return v * v;
  };
  const double residual = std::abs(op_Lj(metric, field, p, 1, cfg));
  const double control = std::abs(op_Lj(metric, sq, p, 1, cfg));
  return make_case(std::move(identity), index, point_digest(p), residual, tol, control);
}

}  // namespace cgeom
