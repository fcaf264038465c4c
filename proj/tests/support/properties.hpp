#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int rejected = 0;  // construction refused a generated input with a PreconditionError
  int failed = 0;
  std::string first_failure;
  double seconds = 0;
};

/// thm1_deg3, thm1_deg4_from_point, thm2_quartic, thm5_sextic, thm16_cubic,
/// thm16_quartic, rem7_curve, cor8_deg5
const std::vector<std::string>& suite_names();

/// Generates inputs satisfying the construction's stated hypotheses
/// (coefficients in [-20, 20]) until `count` instances were checked. Each
/// instance must pass verify_section, the sampled evaluation oracle, and
/// certificate replay.
SuiteResult run_suite(const std::string& name, int count, std::uint64_t seed);

}  // namespace oracle
