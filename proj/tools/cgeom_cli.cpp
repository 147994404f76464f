// cgeom: evaluate kernels and operators, run verification suites, extend boundary data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgeom/domains.hpp"
#include "cgeom/errors.hpp"
#include "cgeom/harmonic.hpp"
#include "cgeom/io.hpp"
#include "cgeom/kernels.hpp"
#include "cgeom/operators.hpp"
#include "cgeom/verify.hpp"

using namespace cgeom;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kDomain = 3 };

struct DomainArgs {
  std::string domain = "I";
  std::size_t m = 1, n = 1, p = 1, q = 2;

  DomainSpec spec() const {
    if (domain == "I") return DomainSpec::type_I(m, n);
    if (domain == "disk") return DomainSpec::type_I(1, 1);
    if (domain == "II") return DomainSpec::type_II(p);
    if (domain == "III") return DomainSpec::type_III(q);
    if (domain == "IV") return DomainSpec::type_IV(n);
    if (domain == "V") return DomainSpec::type_V();
    if (domain == "VI") return DomainSpec::type_VI();
    throw ArgumentError("unknown domain '" + domain + "' (I, II, III, IV, V, VI, disk)");
  }
};

void add_domain_flags(CLI::App* app, DomainArgs& d) {
  app->add_option("--domain", d.domain, "I, II, III, IV, V, VI or disk")->capture_default_str();
  app->add_option("--m", d.m, "rows of I(m,n)")->capture_default_str();
  app->add_option("--n", d.n, "columns of I(m,n), or n of IV(n)")->capture_default_str();
  app->add_option("--p", d.p, "order of II(p)")->capture_default_str();
  app->add_option("--q", d.q, "order of III(q)")->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Point load_point(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) return parse_point(read_file(file));
  if (inline_text.empty()) throw ArgumentError("a point is required (--point or --point-file)");
  return parse_point(inline_text);
}

// V: {"x": [8 reals], "u": [4 pairs], "v": [4 pairs]}; VI: [27 reals]; I: matrix rows.
BoundaryPoint load_boundary(const DomainSpec& spec, const std::string& text) {
  if (text.empty()) throw ArgumentError("this kernel needs --boundary");
  const json j = parse_json(text, "boundary");
  switch (spec.kind) {
    case DomainKind::I: {
      CMatrix u = matrix_from_json(j);
      if (u.rows() != spec.m || u.cols() != spec.n) throw DimensionError("boundary matrix must be m x n");
      return BoundaryPointI{u};
    }
    case DomainKind::V: {
      BoundaryPointV b;
      const auto& x = j.at("x");
      const auto& u = j.at("u");
      const auto& v = j.at("v");
      if (x.size() != 8 || u.size() != 4 || v.size() != 4) throw DimensionError("V boundary needs 8 x, 4 u, 4 v");
      for (std::size_t k = 0; k < 8; ++k) b.x[k] = x[k].get<double>();
      for (std::size_t k = 0; k < 4; ++k) {
        b.u[k] = complex_from_json(u[k]);
        b.v[k] = complex_from_json(v[k]);
      }
      return b;
    }
    case DomainKind::VI: {
      if (!j.is_array() || j.size() != 27) throw DimensionError("VI boundary needs 27 reals");
      BoundaryPointVI b;
      for (std::size_t k = 0; k < 27; ++k) b.x[k] = j[k].get<double>();
      return b;
    }
    default:
      throw UnsupportedError("no boundary kernels for " + spec.name());
  }
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t seed) {
  if (opt->count() > 0) return seed;
  if (const char* env = std::getenv("CGEOM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ArgumentError("CGEOM_SEED is not an unsigned integer");
    }
  }
  return seed;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << text;
}

struct EvalArgs {
  DomainArgs d;
  std::string kernel = "bergman";
  std::string point, point_file, boundary;
  std::size_t j = 1;
};

int cmd_eval(const EvalArgs& a) {
  const DomainSpec spec = a.d.spec();
  const Point p = load_point(a.point, a.point_file);
  require_dim(spec, p);
  json out{{"kernel", a.kernel}, {"domain", spec.name()}, {"point", point_to_json(p)}};

  const auto boundary = [&] { return load_boundary(spec, a.boundary); };
  const auto szego_exp = [&](bool printed) { return printed ? SzegoExponentV::printed : SzegoExponentV::harmonic; };

  if (a.kernel == "metric" || a.kernel == "curvature") {
    if (!is_member(spec, p)) throw DomainViolation("point is not interior");
    const ScalarField k = bergman_field(spec);
    out["value"] = a.kernel == "metric" ? matrix_to_json(bergman_metric(spec, k, p).T)
                                        : matrix_to_json(curvature_R(spec, k, p).R);
  } else if (a.kernel == "Lj") {
    if (!is_member(spec, p)) throw DomainViolation("point is not interior");
    const BoundaryPoint b = boundary();
    ScalarField field;
    const double power = 1.0 / static_cast<double>(a.j);
    if (auto* bi = std::get_if<BoundaryPointI>(&b)) field = power_of(poisson_field_I(spec.m, spec.n, 1, bi->U), power);
    else if (auto* bv = std::get_if<BoundaryPointV>(&b)) field = poisson_field_V(*bv, power);
    else field = poisson_field_VI(std::get<BoundaryPointVI>(b), power);
    out["j"] = a.j;
    out["value"] = complex_to_json(op_Lj(spec, bergman_field(spec), normalized_at(field, p), p, a.j));
  } else {
    KernelValue v{};
    const bool printed = a.kernel.ends_with("-printed");
    if (a.kernel == "bergman") {
      switch (spec.kind) {
        case DomainKind::I: v = bergman_I(spec.m, spec.n, point_matrix(spec, p)); break;
        case DomainKind::V: v = bergman_V(p); break;
        case DomainKind::VI: v = bergman_VI(p); break;
        default: throw UnsupportedError("no Bergman kernel implemented for " + spec.name());
      }
    } else if (a.kernel == "bergman-closed" || a.kernel == "bergman-closed-printed") {
      if (spec.kind != DomainKind::V) throw ArgumentError(a.kernel + " is defined for domain V only");
      v = bergman_V(p, printed ? BergmanVForm::closed_printed : BergmanVForm::closed);
    } else if (a.kernel == "szego" || a.kernel == "szego-printed") {
      const BoundaryPoint b = boundary();
      if (auto* bv = std::get_if<BoundaryPointV>(&b)) v = szego_V(p, *bv, szego_exp(printed));
      else if (auto* bvi = std::get_if<BoundaryPointVI>(&b)) v = szego_VI(p, *bvi);
      else throw UnsupportedError("szego is offered for V and VI");
    } else if (a.kernel == "poisson" || a.kernel == "poisson-printed") {
      if (!is_member(spec, p)) throw DomainViolation("point is not interior");
      const BoundaryPoint b = boundary();
      if (auto* bi = std::get_if<BoundaryPointI>(&b))
        v = poisson_I_pj(spec.m, spec.n, a.j, point_matrix(spec, p), bi->U);
      else if (auto* bv = std::get_if<BoundaryPointV>(&b)) v = poisson_V(p, *bv, szego_exp(printed));
      else v = poisson_VI(p, std::get<BoundaryPointVI>(b));
    } else {
      throw ArgumentError("unknown kernel '" + a.kernel + "'");
    }
    out["form"] = std::string(form_name(v.form));
    out["value"] = complex_to_json(v.value);
  }
  std::cout << out.dump(2) << '\n';
  return kPass;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  const CLI::Option* seed_opt = nullptr;
  double tol_scale = 1.0;
  std::string out, csv;
  bool no_timing = false;
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (!is_suite(a.suite)) throw ArgumentError("unknown suite '" + a.suite + "'");
  VerifyConfig cfg;
  cfg.seed = resolve_seed(a.seed_opt, a.seed);
  cfg.tol_scale = a.tol_scale;
  const Report r = run_suite(a.suite, cfg);
  write_text(a.out, r.to_json(!a.no_timing).dump(2) + "\n");
  if (!a.csv.empty()) write_text(a.csv, r.to_csv());
  if (!a.quiet)
    std::cerr << r.suite << ": " << r.cases.size() << " cases, " << r.failures() << " failing, "
              << r.wall_time << " s\n";
  return r.passed() ? kPass : kFail;
}

struct ExtendArgs {
  DomainArgs d;
  std::string function = "const1";
  std::string point, point_file;
  std::size_t j = 1;
  std::size_t samples = 200000;
  std::size_t nodes = 256;
  std::uint64_t seed = 1;
  const CLI::Option* seed_opt = nullptr;
};

int cmd_extend(const ExtendArgs& a) {
  const DomainSpec spec = a.d.spec();
  if (spec.kind != DomainKind::I) throw UnsupportedError("extend is offered for I(m,n) and the disk only");
  const BoundaryFunction f = BoundaryFunction::parse(a.function);
  const Point p = load_point(a.point, a.point_file);
  require_dim(spec, p);
  if (!is_member(spec, p)) throw DomainViolation("point is not interior");
  const bool disk = spec.m == 1 && spec.n == 1 && a.d.domain == "disk";
  const ExtensionResult e =
      disk ? poisson_extend_disk(f, p[0], a.nodes)
           : poisson_extend_I(spec.m, spec.n, a.j, f, point_matrix(spec, p), a.samples, resolve_seed(a.seed_opt, a.seed));
  const json out{{"domain", disk ? std::string("disk") : spec.name()},
                 {"function", f.name},
                 {"point", point_to_json(p)},
                 {"j", a.j},
                 {"value", complex_to_json(e.value)},
                 {"stderr", e.stderr_est},
                 {"samples", e.samples},
                 {"method", std::string(method_name(e.method))}};
  std::cout << out.dump(2) << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernels, invariant operators and verification suites on Cartan domains"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a kernel, metric or operator at a point");
  add_domain_flags(eval, ea.d);
  eval->add_option("--kernel", ea.kernel,
                   "bergman, bergman-closed, bergman-closed-printed, szego, szego-printed, poisson, "
                   "poisson-printed, metric, curvature, Lj")
      ->capture_default_str();
  eval->add_option("--point", ea.point, "JSON array of [re, im] pairs");
  eval->add_option("--point-file", ea.point_file, "file holding the point JSON");
  eval->add_option("--boundary", ea.boundary, "boundary point JSON (szego, poisson, Lj)");
  eval->add_option("--j", ea.j, "index of P_j or L_j")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite, "suite name or 'all'")->required();
  va.seed_opt = verify->add_option("--seed", va.seed, "seed (default: CGEOM_SEED or 1)");
  verify->add_option("--tol-scale", va.tol_scale, "global tolerance multiplier")->capture_default_str();
  verify->add_option("--out", va.out, "JSON report path (default stdout)");
  verify->add_option("--csv", va.csv, "CSV report path");
  verify->add_flag("--no-timing", va.no_timing, "omit wall_time from the report");
  verify->add_flag("--quiet", va.quiet, "no summary on stderr");

  ExtendArgs xa;
  auto* extend = app.add_subcommand("extend", "Poisson extension of boundary data");
  add_domain_flags(extend, xa.d);
  extend->add_option("--function", xa.function, "const1, re_coord(k) or trig(k)")->capture_default_str();
  extend->add_option("--point", xa.point, "JSON array of [re, im] pairs");
  extend->add_option("--point-file", xa.point_file, "file holding the point JSON");
  extend->add_option("--j", xa.j, "kernel index j")->capture_default_str();
  extend->add_option("--samples", xa.samples, "Monte Carlo samples")->capture_default_str();
  extend->add_option("--nodes", xa.nodes, "quadrature nodes (disk)")->capture_default_str();
  xa.seed_opt = extend->add_option("--seed", xa.seed, "seed (default: CGEOM_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*eval) return cmd_eval(ea);
    if (*verify) return cmd_verify(va);
    if (*extend) return cmd_extend(xa);
  } catch (const DomainViolation& e) {
    std::cerr << "domain violation: " << e.what() << '\n';
    return kDomain;
  } catch (const ArgumentError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
