#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/orbits/orbits.hpp"
#include "skewlab/pdo/pdo.hpp"
#include "skewlab/report/report.hpp"

namespace skewlab {

/// Working precision of the inverse round trips in the pdo suite.
inline constexpr int kRoundTripPrecision = 4;

struct SuiteConfig {
  std::uint64_t characteristic = 0;
  std::string algebra = "g";       // "g" or "q"
  std::string alpha = "rat:2/3";   // element literal, g only
  std::optional<std::string> beta; // element literal for psi
  std::optional<Mat2Z> matrix;     // explicit phi_M
  int precision = kDefaultPrecision;
  std::uint64_t seed = 0;
  unsigned ell_bound = kFiniteBound;
  int samples = 5;
};

const std::vector<std::string>& suite_names();

/// Builds the case described by `cfg`; throws ParseError on bad literals.
CaseSpec config_case(const SuiteConfig& cfg);

/// Runs one suite ("presentations", "centers", "morphisms", "pdo", "orbits")
/// or "all". Unsupported combinations become out-of-scope or fail records;
/// bad literals throw ParseError.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace skewlab
