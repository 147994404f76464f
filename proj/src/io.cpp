#include "cgeom/io.hpp"

#include <cmath>
#include <string>

#include "cgeom/errors.hpp"

namespace cgeom {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ArgumentError("expected [re, im] pair, got " + j.dump());
}

json point_to_json(std::span<const Complex> p) {
  json out = json::array();
  for (const auto& z : p) out.push_back(complex_to_json(z));
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ArgumentError("point must be a non-empty array of [re, im] pairs");
  Point p;
  p.reserve(j.size());
  for (const auto& e : j) p.push_back(complex_from_json(e));
  return p;
}

Point parse_point(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("malformed point JSON: ") + e.what());
  }
  return point_from_json(j);
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ArgumentError("matrix must be a non-empty array of rows");
  const std::size_t r = j.size();
  const std::size_t c = j[0].size();
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw ArgumentError("matrix rows differ in length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json spec_to_json(const DomainSpec& spec) {
  json out{{"name", spec.name()}, {"dim", spec.dim()}};
  switch (spec.kind) {
    case DomainKind::I: out["kind"] = "I"; out["m"] = spec.m; out["n"] = spec.n; break;
    case DomainKind::II: out["kind"] = "II"; out["p"] = spec.m; break;
    case DomainKind::III: out["kind"] = "III"; out["q"] = spec.m; break;
    case DomainKind::IV: out["kind"] = "IV"; out["n"] = spec.m; break;
    case DomainKind::V: out["kind"] = "V"; break;
    case DomainKind::VI: out["kind"] = "VI"; break;
  }
  return out;
}

DomainSpec spec_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "I") return DomainSpec::type_I(j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>());
  if (kind == "II") return DomainSpec::type_II(j.at("p").get<std::size_t>());
  if (kind == "III") return DomainSpec::type_III(j.at("q").get<std::size_t>());
  if (kind == "IV") return DomainSpec::type_IV(j.at("n").get<std::size_t>());
  if (kind == "V") return DomainSpec::type_V();
  if (kind == "VI") return DomainSpec::type_VI();
  throw ArgumentError("unknown domain kind '" + kind + "'");
}

json to_json(const AutoV& map) {
  return {{"kind", "auto_V"}, {"anchor", point_to_json(map.anchor)}, {"A", matrix_to_json(map.A)}};
}

json to_json(const AutoVI& map) {
  return {{"kind", "auto_VI"}, {"anchor", point_to_json(map.anchor)}, {"A", matrix_to_json(map.A)}};
}

json to_json(const MobiusI& map) {
  return {{"kind", "mobius_I"},         {"m", map.m},
          {"n", map.n},                 {"anchor", matrix_to_json(map.anchor)},
          {"A", matrix_to_json(map.A)}, {"B", matrix_to_json(map.B)},
          {"C", matrix_to_json(map.C)}, {"D", matrix_to_json(map.D)}};
}

}  // namespace cgeom
