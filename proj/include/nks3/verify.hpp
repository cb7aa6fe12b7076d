#pragma once

// Verification suites: structure identities of the nearly Kaehler S^3 x S^3,
// hypersurface checks on the example families, and isometry relations.
// Every suite is deterministic for a given seed.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nks3/immersion.hpp"

namespace nks3 {

struct CheckResult {
  std::string id;
  // Formula the check evaluates.
  std::string anchor;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  // max_residual <= tolerance; false for NaN or infinite residuals.
  bool pass = false;
};

CheckResult make_check(std::string id, std::string anchor, int samples, double max_residual,
                       double tolerance);

struct Environment {
  std::string compiler;
  std::string simd_isa;
  std::string rounding_mode;
  int flt_eval_method = 0;
  bool fp_contract_off = true;
  std::string eigen_version;
};

Environment current_environment();

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  // Sorted by id.
  std::vector<CheckResult> checks;
  double duration_ms = 0.0;
  Environment environment;

  bool all_pass() const;
};

// Thrown for invalid suite arguments (for example samples < 1).
class SuitePrecondition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SuiteReport run_structure_suite(std::uint64_t seed, int samples);

// Points on the hypersurface are sampled from the family chart. The Gauss
// and Codazzi checks use min(samples, 8) points since each evaluation
// differentiates twice.
SuiteReport run_hypersurface_suite(Family family, const FamilyParams& params, std::uint64_t seed,
                                   int samples);

SuiteReport run_isometry_suite(std::uint64_t seed, int samples);

// Every suite merged into one report named "all": structure and isometry,
// then the hypersurface suite for each family at r in {0.6, 1} (m1..m3) and
// (k, l) = (0.6, 0.8) (m4..m6). Hypersurface check ids are prefixed with the
// family and parameters.
SuiteReport run_all_suites(std::uint64_t seed, int samples);

// JSON document {"suite","seed","checks":[...],"duration_ms","environment"}.
std::string to_json(const SuiteReport& report, int indent = 2);

}  // namespace nks3
