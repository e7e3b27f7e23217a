#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bounds.hpp"
#include "oracles.hpp"
#include "types.hpp"

namespace hypercover {

enum class BoundKind { requirement, topk, df2d };

BoundKind bound_from_name(const std::string& name);  // "req" | "topk" | "df2d"

struct Certificate {
  double lb = 0;
  double ub = 0;
  double ratio = 0;
};

// one row per generated sample or selection; state fields are post-event
struct TraceRow {
  enum class Event { sample, select };
  Event event;
  Hyperedge edge;  // sample rows
  NodeId node = 0;  // select rows
  int64_t d_s = 0;
  double f = 0;
  std::vector<NodeId> solution;
  uint64_t live_edges = 0;
};

struct BcaHooks {
  // sees every generated hyperedge before the run processes it; returning
  // false aborts the run. The adaptive drivers own this slot (they install
  // their certification probe), so a caller-supplied assess only applies to
  // direct bca / budgeted_bca runs.
  std::function<bool(const Hyperedge&)> assess;
  // passive tap on the same stream (full-retention comparisons, debugging)
  std::function<void(const Hyperedge&)> observe;
  std::function<void(const TraceRow&)> trace;
};

struct RunOptions {
  BoundKind bound = BoundKind::requirement;
  uint64_t max_samples = 1'000'000'000;
  uint32_t workers = 1;
  BcaHooks hooks;
};

struct RunResult {
  std::vector<NodeId> solution;  // dense ids, selection order
  int64_t d_s = 0;               // generated hyperedges covered by `solution`
  uint64_t samples = 0;          // every generated hyperedge, empty ones included
  int64_t z_used = 0;
  uint64_t peak_elements = 0;  // reduced-sketch node occurrences, running max
  uint32_t peak_max_degree = 0;
  uint64_t full_elements = 0;  // node occurrences a full-retention store would hold
  double wall_seconds = 0;
  std::optional<Certificate> certificate;  // present iff a ratio test ended the run
  bool aborted = false;  // assess hook stopped the run before its k-th selection
};

struct SampleCapError : Error {
  RunResult partial;
  explicit SampleCapError(RunResult r)
      : Error(ErrorCode::sample_cap, "sample cap reached"), partial(std::move(r)) {}
};

// Single threshold run: keep sampling while the bound says no k-set could
// reach z on the retained mass; once it clears z, select the max-degree node.
// Repeat k times. On the generated multiset this pins
//   z >= opt >= d_s >= (1 - (1-1/k)^k) * z   (exactly, in integers).
RunResult bca(SampleOracle& oracle, uint32_t k, int64_t z, const RunOptions& opt = {});

// bca at the derived threshold z*; (1-1/e-eps)-approximate with probability
// 1-delta, without an early-exit certificate
RunResult bca_fixed_guarantee(SampleOracle& oracle, uint32_t k, double eps, double delta,
                              const RunOptions& opt = {});

// Doubling threshold ascent: walks z up a geometric grid, re-assessing the
// previous solution on the fresh stream, and stops as soon as the measured
// lower/upper bound ratio certifies 1-1/e-eps. Returns the certified set (not
// the in-progress one); if the grid is exhausted, the z* solution without a
// certificate.
RunResult dta(SampleOracle& oracle, uint32_t k, double eps, double delta,
              const RunOptions& opt = {});

// ---- budgeted variant -------------------------------------------------------

struct BudgetSpec {
  std::vector<double> cost;  // per dense node id
  double budget = 0;         // L
  uint32_t k_m = 0;          // most cheapest nodes that fit L
  std::vector<uint8_t> infeasible;  // cost > L: never selectable, never v_max

  // validates costs (> 0), drops nodes beyond the budget, computes k_m;
  // errors when nothing fits
  static BudgetSpec make(std::vector<double> cost, double budget);
};

// Cost-aware single run: bound is d_s + L * max ratio deg/cost over nodes
// neither selected nor parked; unaffordable picks are parked for good. The
// returned set is the better of S and the single best-degree node, giving a
// (1 - e^{-1/2} - eps)-style factor. d_s reports the returned set's coverage
// count on the generated stream.
RunResult budgeted_bca(SampleOracle& oracle, const BudgetSpec& spec, int64_t z,
                       const RunOptions& opt = {});

// adaptive driver over budgeted runs, certifying against 1 - e^{-1/2} - eps
RunResult budgeted_dta(SampleOracle& oracle, const BudgetSpec& spec, double eps, double delta,
                       const RunOptions& opt = {});

// ---- explicit-hypergraph baselines -------------------------------------------

// edges a set covers, counted with multiplicity
uint64_t coverage_count(const std::vector<Hyperedge>& edges, const std::vector<NodeId>& set,
                        NodeId n);

// lazy greedy (stale-gain heap); returns selections in order plus covered count
std::pair<std::vector<NodeId>, uint64_t> full_sketch_greedy(const std::vector<Hyperedge>& edges,
                                                            NodeId n, uint32_t k);

// exact best-of-all-k-sets; errors if C(n,k) exceeds 10^7
std::pair<std::vector<NodeId>, uint64_t> brute_force_opt(const std::vector<Hyperedge>& edges,
                                                         NodeId n, uint32_t k);

}  // namespace hypercover
