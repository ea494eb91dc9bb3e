#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dh/surface.hpp"
#include "dh/types.hpp"

namespace dh {

// One randomized property check: `trials` seeded samples, `failures` of which
// exceeded the tolerance, and the worst observed error.
struct PropertyResult {
  std::string property;
  long long trials = 0;
  long long failures = 0;
  double worst_error = 0.0;
  double tolerance = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  long long trials = 1000;
  // Negative means: use each property's pinned default tolerance. Otherwise
  // this value replaces every per-property tolerance.
  double tolerance_override = -1.0;
};

// Runs every property against the surface. Results are sorted by property
// name and fully determined by (surface, seed, trials, tolerance_override);
// each property derives its own RNG stream from the seed and its name, so the
// set of properties can change without perturbing the others.
std::vector<PropertyResult> run_properties(const Surface& s, const VerifyOptions& opt);

long long total_failures(const std::vector<PropertyResult>& results);

// Byte-deterministic JSON report.
std::string report_json(const PeriodMatrix& pm, const VerifyOptions& opt,
                        const std::vector<PropertyResult>& results);

}  // namespace dh
