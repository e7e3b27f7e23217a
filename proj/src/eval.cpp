#include "eval.hpp"

#include <algorithm>
#include <cmath>

#include "bounds.hpp"

namespace hypercover {

CoverageEstimate estimate_coverage(SampleOracle& oracle, const std::vector<NodeId>& solution,
                                   double eps, double delta, uint64_t max_samples,
                                   uint32_t workers) {
  const NodeId n = oracle.num_nodes();
  if (solution.empty()) throw Error(ErrorCode::invalid_argument, "empty solution");
  if (!(eps > 0.0)) throw Error(ErrorCode::invalid_argument, "eps must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw Error(ErrorCode::invalid_argument, "delta must lie in (0,1)");
  if (max_samples == 0) throw Error(ErrorCode::invalid_argument, "sample cap must be positive");

  std::vector<uint8_t> in(n, 0);
  for (NodeId v : solution) {
    if (v >= n) throw Error(ErrorCode::invalid_argument, "node id out of range");
    in[v] = 1;
  }

  constexpr double kBeta = 0.1;
  constexpr double kFloor = 1e-6;  // below this, precision goes absolute
  // one evaluation per geometric checkpoint plus a final one at the cap;
  // split delta across them (two sides each)
  const double max_checkpoints =
      std::ceil(std::log(static_cast<double>(max_samples)) / std::log1p(kBeta)) + 2.0;
  const double delta_side = delta / (2.0 * max_checkpoints);

  auto stream = make_stream(oracle, workers);
  Hyperedge buf;
  uint64_t hits = 0, drawn = 0;
  uint32_t cp_exp = 0;
  uint64_t next_cp = 1;
  double lb = 0.0, ub = 1.0;
  bool met = false;

  const auto evaluate = [&] {
    const double mu = static_cast<double>(hits) / static_cast<double>(drawn);
    // intersect with earlier checkpoints: valid under the union bound and
    // keeps the interval monotone in the budget
    lb = std::max(lb, f_lower(drawn, mu, delta_side, drawn));
    ub = std::min(ub, f_upper(drawn, mu, delta_side, drawn));
    const double scale = std::max(lb, mu < kFloor ? kFloor : 0.0);
    return scale > 0.0 && (ub - lb) <= 2.0 * eps * scale;
  };

  while (drawn < max_samples) {
    stream->next(buf);
    ++drawn;
    for (NodeId v : buf) {
      if (in[v]) {
        ++hits;
        break;
      }
    }
    if (drawn == next_cp) {
      if (evaluate()) {
        met = true;
        break;
      }
      do {
        ++cp_exp;
        next_cp = static_cast<uint64_t>(std::ceil(std::pow(1.0 + kBeta, cp_exp)));
      } while (next_cp <= drawn);
    }
  }
  if (!met && drawn == max_samples && drawn != 0) met = evaluate();  // final partial checkpoint

  CoverageEstimate est;
  est.samples = drawn;
  est.lb = lb;
  est.ub = ub;
  est.mean = std::clamp(static_cast<double>(hits) / static_cast<double>(drawn), lb, ub);
  est.precision_met = met;
  return est;
}

}  // namespace hypercover
