#include "cgeom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cgeom {

bool zero_test(double residual, double tol, double control) {
  return std::isfinite(residual) && std::abs(residual) <= tol * (1.0 + std::abs(control));
}

std::string point_digest(std::span<const Complex> p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v == 0.0 ? 0.0 : v);
    for (const char* c = buf; *c; ++c) {
      h ^= static_cast<unsigned char>(*c);
      h *= 1099511628211ull;
    }
  };
  for (const auto& z : p) {
    mix(z.real());
    mix(z.imag());
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

Case make_case(std::string identity, std::size_t index, std::string point, double residual, double tolerance,
               double control) {
  Case c;
  c.identity = std::move(identity);
  c.index = index;
  c.point = std::move(point);
  c.residual = residual;
  c.tolerance = tolerance;
  c.control = control;
  c.pass = zero_test(residual, tolerance, control);
  return c;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const Case& c) { return c.gating && !c.pass; }));
}

void Report::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.index < b.index;
  });
}

void Report::append(const Report& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }

nlohmann::json Report::to_json(bool include_wall_time) const {
  nlohmann::json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["config"] = config;
  out["passed"] = passed();
  out["failures"] = failures();
  auto arr = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json j{{"identity", c.identity}, {"index", c.index},         {"point", c.point},
                     {"residual", c.residual}, {"tolerance", c.tolerance}, {"control", c.control},
                     {"pass", c.pass},         {"gating", c.gating}};
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  out["cases"] = std::move(arr);
  if (include_wall_time) out["wall_time"] = wall_time;
  return out;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "identity,index,point,residual,tolerance,control,pass,gating\n";
  for (const auto& c : cases)
    os << c.identity << ',' << c.index << ',' << c.point << ',' << c.residual << ',' << c.tolerance << ','
       << c.control << ',' << (c.pass ? 1 : 0) << ',' << (c.gating ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace cgeom
