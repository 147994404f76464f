#pragma once

// Named verification suites. Each suite draws from its own generator seeded
// by (seed, suite), so `all` is exactly the concatenation of the others.

#include <cstdint>
#include <string>
#include <vector>

#include "cgeom/report.hpp"
#include "cgeom/wirtinger.hpp"

namespace cgeom {

struct VerifyConfig {
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
  FdConfig fd{};
};

/// clifford, kernels-v, kernels-vi, transform-laws, annihilation-I, annihilation-V,
/// annihilation-VI, curvature, eq4-similarity, harmonic-disk, harmonic-I.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite, or every suite for "all". Throws ArgumentError for unknown names.
Report run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace cgeom
