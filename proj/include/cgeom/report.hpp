#pragma once

// Verification reports: one case per (identity, index), each a residual
// checked against tolerance * (1 + |control|).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgeom/linalg.hpp"

namespace cgeom {

/// |residual| <= tol * (1 + |control|).
bool zero_test(double residual, double tol, double control = 0.0);

/// Short stable hex digest of a point (FNV-1a over the coordinates rounded to 12 digits).
std::string point_digest(std::span<const Complex> p);

struct Case {
  std::string identity;
  std::size_t index = 0;
  std::string point;  // digest
  double residual = 0.0;
  double tolerance = 0.0;
  double control = 0.0;
  bool pass = false;
  bool gating = true;  // informational cases are reported but never fail the suite
  std::string note;
};

Case make_case(std::string identity, std::size_t index, std::string point, double residual, double tolerance,
               double control = 0.0);

struct Report {
  std::string suite;
  std::vector<Case> cases;
  std::uint64_t seed = 0;
  nlohmann::json config = nlohmann::json::object();
  double wall_time = 0.0;

  /// All gating cases pass.
  bool passed() const;
  std::size_t failures() const;
  /// Orders cases by identity, then index.
  void sort_cases();
  void append(const Report& other);

  nlohmann::json to_json(bool include_wall_time = true) const;
  std::string to_csv() const;
};

}  // namespace cgeom
