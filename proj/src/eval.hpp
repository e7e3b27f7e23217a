#pragma once

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "types.hpp"

namespace hypercover {

struct CoverageEstimate {
  double mean = 0;  // clamped into [lb, ub]
  double lb = 0;
  double ub = 0;
  uint64_t samples = 0;
  bool precision_met = false;  // false: sample cap hit before the CI closed
};

// Estimate the probability that a random hyperedge touches `solution`,
// sampling until the confidence interval is relatively 2*eps wide (absolute
// below coverage 1e-6) at confidence 1-delta, or until max_samples. The
// interval is an intersection over geometric checkpoints, so more budget
// never widens it.
CoverageEstimate estimate_coverage(SampleOracle& oracle, const std::vector<NodeId>& solution,
                                   double eps, double delta, uint64_t max_samples,
                                   uint32_t workers = 1);

}  // namespace hypercover
