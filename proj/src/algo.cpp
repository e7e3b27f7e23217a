#include "algo.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <queue>

#include "reduced_sketch.hpp"

namespace hypercover {

BoundKind bound_from_name(const std::string& name) {
  if (name == "req") return BoundKind::requirement;
  if (name == "topk") return BoundKind::topk;
  if (name == "df2d") return BoundKind::df2d;
  throw Error(ErrorCode::invalid_argument, "unknown bound '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RunState {
  ReducedSketch sketch;
  std::vector<uint8_t> selected;
  std::vector<NodeId> solution;
  std::vector<uint32_t> covered;      // covered-edge count per node
  std::vector<NodeId> covered_nodes;  // nodes with covered[] > 0
  std::vector<CovTerm> terms;         // scratch for the 2d bound
  int64_t d_s = 0;
  uint64_t samples = 0;
  uint64_t full_elements = 0;

  RunState(NodeId n, uint32_t k) : sketch(n, k), selected(n, 0), covered(n, 0) {}

  void bump_covered(NodeId v) {
    if (covered[v]++ == 0) covered_nodes.push_back(v);
  }

  double bound_value(BoundKind kind, uint32_t k) {
    switch (kind) {
      case BoundKind::requirement:
        return static_cast<double>(f_requirement(d_s, k, sketch.max_degree()));
      case BoundKind::topk:
        return static_cast<double>(f_topk(d_s, sketch.top_k_sum()));
      case BoundKind::df2d:
        terms.clear();
        for (NodeId v : covered_nodes)
          terms.push_back({static_cast<double>(sketch.degree(v)) + covered[v],
                           static_cast<double>(covered[v])});
        return f_df2d(d_s, k, sketch.max_degree(), terms);
    }
    throw Error(ErrorCode::internal, "unreachable bound kind");
  }

  RunResult result(int64_t z, Clock::time_point t0, bool aborted) const {
    RunResult r;
    r.solution = solution;
    r.d_s = d_s;
    r.samples = samples;
    r.z_used = z;
    r.peak_elements = sketch.peak_elements();
    r.peak_max_degree = sketch.peak_max_degree();
    r.full_elements = full_elements;
    r.wall_seconds = seconds_since(t0);
    r.aborted = aborted;
    return r;
  }
};

void emit_trace(const RunOptions& opt, RunState& st, TraceRow::Event ev, const Hyperedge* edge,
                NodeId node, double f) {
  if (!opt.hooks.trace) return;
  TraceRow row;
  row.event = ev;
  if (edge) row.edge = *edge;
  row.node = node;
  row.d_s = st.d_s;
  row.f = f;
  row.solution = st.solution;
  row.live_edges = st.sketch.live_edge_count();
  opt.hooks.trace(row);
}

// draw one sample into buf and fold it into the run state; returns false when
// the assess hook aborts the run. on_nonempty_node is called once per node of
// a non-empty sample (budgeted runs track full-stream degrees with it).
template <typename NodeFn>
bool pull_sample(SampleStream& stream, RunState& st, const RunOptions& opt, int64_t z,
                 Clock::time_point t0, Hyperedge& buf, NodeFn&& on_nonempty_node) {
  if (st.samples >= opt.max_samples) throw SampleCapError(st.result(z, t0, false));
  stream.next(buf);
  ++st.samples;
  if (opt.hooks.observe) opt.hooks.observe(buf);
  st.full_elements += buf.size();
  if (opt.hooks.assess && !opt.hooks.assess(buf)) return false;
  if (!buf.empty()) {
    bool covered = false;
    for (NodeId v : buf)
      if (st.selected[v]) {
        covered = true;
        break;
      }
    if (covered) {
      ++st.d_s;
      for (NodeId v : buf) st.bump_covered(v);
    } else {
      st.sketch.add_hyperedge(buf);
    }
    for (NodeId v : buf) on_nonempty_node(v);
  }
  return true;
}

}  // namespace

RunResult bca(SampleOracle& oracle, uint32_t k, int64_t z, const RunOptions& opt) {
  const NodeId n = oracle.num_nodes();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "oracle has no nodes");
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
  if (z < 1) throw Error(ErrorCode::invalid_argument, "threshold must be at least 1");

  const auto t0 = Clock::now();
  RunState st(n, k);
  auto stream = make_stream(oracle, opt.workers);
  Hyperedge buf;
  const double zd = static_cast<double>(z);

  for (uint32_t i = 0; i < k; ++i) {
    // sample until the retained mass admits a k-set reaching z
    while (st.bound_value(opt.bound, k) < zd) {
      if (!pull_sample(*stream, st, opt, z, t0, buf, [](NodeId) {}))
        return st.result(z, t0, true);
      emit_trace(opt, st, TraceRow::Event::sample, &buf, 0, st.bound_value(opt.bound, k));
    }
    const auto [u, deg] = st.sketch.max_degree_node(st.selected);
    (void)deg;
    st.selected[u] = 1;
    st.solution.push_back(u);
    st.d_s += static_cast<int64_t>(st.sketch.remove_covered_by(
        u, [&](std::span<const NodeId> nodes) {
          for (NodeId v : nodes) st.bump_covered(v);
        }));
    emit_trace(opt, st, TraceRow::Event::select, nullptr, u, st.bound_value(opt.bound, k));
  }
  return st.result(z, t0, false);
}

RunResult bca_fixed_guarantee(SampleOracle& oracle, uint32_t k, double eps, double delta,
                              const RunOptions& opt) {
  const GuaranteeParams P = derive_params(oracle.num_nodes(), k, eps, delta);
  return bca(oracle, k, P.z_star, opt);
}

// ---- adaptive driver ----------------------------------------------------------

namespace {

// Shared by the unweighted and budgeted drivers. Walks the threshold grid,
// re-assessing the previous run's solution on each fresh stream; stops as
// soon as measured-lb / bound-ub clears `target`.
RunResult adaptive_driver(NodeId n, const GuaranteeParams& P, double target,
                          const RunOptions& opt,
                          const std::function<RunResult(int64_t, const RunOptions&)>& run_one) {
  const auto t0 = Clock::now();

  std::vector<int64_t> grid;
  for (int64_t i = P.i0; i >= 0; --i) {
    const int64_t div = int64_t{1} << i;
    grid.push_back((P.z_star + div - 1) / div);
  }

  std::vector<uint8_t> cert_set(n, 0);
  RunResult best;
  bool have_prev = false;
  double ub = 0;
  uint64_t total_samples = 0, peak_elements = 0, full_elements = 0;
  uint32_t peak_deg = 0;

  for (int64_t z : grid) {
    uint64_t received = 0;
    int64_t hits = 0;
    uint32_t cp_exp = 0;
    uint64_t next_cp = 1;
    double lb_fired = 0, ub_fired = 0;
    bool fired = false;
    const bool can_certify = have_prev;  // first run has nothing to assess

    RunOptions inner = opt;
    if (opt.max_samples < total_samples)
      throw Error(ErrorCode::internal, "sample budget accounting underflow");
    inner.max_samples = opt.max_samples - total_samples;  // budget is global
    inner.hooks.assess = [&](const Hyperedge& e) -> bool {
      ++received;
      if (can_certify) {
        for (NodeId v : e)
          if (cert_set[v]) {
            ++hits;
            break;
          }
      }
      if (received == next_cp) {
        if (can_certify) {
          const double lb = f_lower(received, static_cast<double>(hits) / received,
                                    P.delta_prime, received);
          if (lb / ub >= target) {
            lb_fired = lb;
            ub_fired = ub;
            fired = true;
            return false;
          }
        }
        do {
          ++cp_exp;
          next_cp = static_cast<uint64_t>(std::ceil(std::pow(1.0 + P.beta, cp_exp)));
        } while (next_cp <= received);
      }
      return true;
    };

    RunResult r;
    try {
      r = run_one(z, inner);
    } catch (SampleCapError& e) {
      // surface the driver-level aggregates; the best completed solution is
      // more useful than the truncated one
      e.partial.samples += total_samples;
      e.partial.full_elements += full_elements;
      e.partial.peak_elements = std::max(e.partial.peak_elements, peak_elements);
      e.partial.peak_max_degree = std::max(e.partial.peak_max_degree, peak_deg);
      e.partial.wall_seconds = seconds_since(t0);
      if (have_prev) {
        e.partial.solution = best.solution;
        e.partial.d_s = best.d_s;
        e.partial.z_used = best.z_used;
      }
      throw;
    }
    total_samples += r.samples;
    peak_elements = std::max(peak_elements, r.peak_elements);
    peak_deg = std::max(peak_deg, r.peak_max_degree);
    full_elements += r.full_elements;

    if (r.aborted) {
      RunResult out = best;  // the certified set and its own run's stats
      out.samples = total_samples;
      out.peak_elements = peak_elements;
      out.peak_max_degree = peak_deg;
      out.full_elements = full_elements;
      out.wall_seconds = seconds_since(t0);
      out.aborted = false;
      if (fired) {
        out.certificate = Certificate{lb_fired, ub_fired, lb_fired / ub_fired};
        return out;
      }
      throw Error(ErrorCode::internal, "run aborted without a certificate");
    }

    // completed: this solution becomes the candidate; its coverage is bounded
    // by z successes among this run's own T_z draws
    const uint64_t T_z = r.samples;  // >= 1: z >= 1 forces at least one draw
    const double mu_cap = std::min(static_cast<double>(z) / static_cast<double>(T_z), 1.0);
    const double t_u = std::ceil(std::log(static_cast<double>(T_z)) / std::log1p(P.beta));
    const uint64_t N_u = std::max<uint64_t>(
        T_z, static_cast<uint64_t>(std::ceil(std::pow(1.0 + P.beta, t_u))));
    ub = f_upper(T_z, mu_cap, P.delta_prime, N_u);
    std::fill(cert_set.begin(), cert_set.end(), 0);
    for (NodeId v : r.solution) cert_set[v] = 1;
    best = r;
    have_prev = true;
  }

  best.samples = total_samples;
  best.peak_elements = peak_elements;
  best.peak_max_degree = peak_deg;
  best.full_elements = full_elements;
  best.wall_seconds = seconds_since(t0);
  best.certificate.reset();  // grid exhausted: z* answer stands on its own
  return best;
}

}  // namespace

RunResult dta(SampleOracle& oracle, uint32_t k, double eps, double delta, const RunOptions& opt) {
  const NodeId n = oracle.num_nodes();
  const double delta_alg = 3.0 * delta / 7.0;  // certification + runs union to delta overall
  const GuaranteeParams P = derive_params(n, k, eps, delta_alg);
  const double target = 1.0 - std::exp(-1.0) - eps;
  return adaptive_driver(n, P, target, opt, [&](int64_t z, const RunOptions& inner) {
    return bca(oracle, k, z, inner);
  });
}

// ---- budgeted variant -----------------------------------------------------------

BudgetSpec BudgetSpec::make(std::vector<double> cost, double budget) {
  if (cost.empty()) throw Error(ErrorCode::invalid_argument, "cost table is empty");
  if (!(budget > 0.0)) throw Error(ErrorCode::invalid_argument, "budget must be positive");
  for (double c : cost)
    if (!(c > 0.0)) throw Error(ErrorCode::invalid_argument, "node costs must be positive");
  BudgetSpec s;
  s.cost = std::move(cost);
  s.budget = budget;
  s.infeasible.assign(s.cost.size(), 0);
  std::vector<double> feasible;
  for (size_t v = 0; v < s.cost.size(); ++v) {
    if (s.cost[v] > budget)
      s.infeasible[v] = 1;
    else
      feasible.push_back(s.cost[v]);
  }
  if (feasible.empty()) throw Error(ErrorCode::domain, "no node fits the budget");
  std::sort(feasible.begin(), feasible.end());
  double acc = 0;
  uint32_t km = 0;
  for (double c : feasible) {
    if (acc + c > budget) break;
    acc += c;
    ++km;
  }
  s.k_m = std::max(km, 1u);
  return s;
}

RunResult budgeted_bca(SampleOracle& oracle, const BudgetSpec& spec, int64_t z,
                       const RunOptions& opt) {
  const NodeId n = oracle.num_nodes();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "oracle has no nodes");
  if (spec.cost.size() != n)
    throw Error(ErrorCode::invalid_argument, "cost table size does not match node count");
  if (z < 1) throw Error(ErrorCode::invalid_argument, "threshold must be at least 1");

  const auto t0 = Clock::now();
  RunState st(n, spec.k_m);
  auto stream = make_stream(oracle, opt.workers);
  Hyperedge buf;
  const double zd = static_cast<double>(z);

  std::vector<uint8_t> parked = spec.infeasible;  // Q plus the never-feasible
  std::vector<uint64_t> d_full(n, 0);             // live degree + covered count
  uint64_t d_max = 0;
  NodeId v_max = n;
  double spent = 0;
  double max_ratio = 0;

  const auto bump_full = [&](NodeId v) {
    if (spec.infeasible[v]) return;
    const uint64_t df = ++d_full[v];
    if (df > d_max || (df == d_max && v < v_max)) {
      d_max = df;
      v_max = v;
    }
  };
  const auto note_ratio = [&](NodeId v) {
    if (!st.selected[v] && !parked[v])
      max_ratio = std::max(max_ratio, st.sketch.degree(v) / spec.cost[v]);
  };
  const auto rescan_ratio = [&] {
    max_ratio = 0;
    for (NodeId v = 0; v < n; ++v) note_ratio(v);
  };
  const auto f_now = [&] { return static_cast<double>(st.d_s) + spec.budget * max_ratio; };

  for (;;) {
    // done when no unselected node fits the leftover budget (parked nodes
    // never fit again: spent only grows)
    bool any_affordable = false;
    for (NodeId v = 0; v < n && !any_affordable; ++v)
      any_affordable = !st.selected[v] && !spec.infeasible[v] && spec.cost[v] <= spec.budget - spent;
    if (!any_affordable) break;

    while (f_now() < zd) {
      if (!pull_sample(*stream, st, opt, z, t0, buf, [&](NodeId v) {
            bump_full(v);
            note_ratio(v);
          }))
        return st.result(z, t0, true);
      emit_trace(opt, st, TraceRow::Event::sample, &buf, 0, f_now());
    }

    // trigger: best degree-per-cost candidate; ascending scan makes ties go
    // to the smaller id
    NodeId pick = n;
    double best_r = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (st.selected[v] || parked[v]) continue;
      const double r = st.sketch.degree(v) / spec.cost[v];
      if (r > best_r) {
        best_r = r;
        pick = v;
      }
    }
    if (pick == n) {
      // every candidate sits at degree zero: take the cheapest-feasible
      // smallest id still affordable (exists, checked above)
      for (NodeId v = 0; v < n; ++v) {
        if (!st.selected[v] && !spec.infeasible[v] && spec.cost[v] <= spec.budget - spent) {
          pick = v;
          break;
        }
      }
    }
    if (spec.cost[pick] <= spec.budget - spent) {
      st.selected[pick] = 1;
      st.solution.push_back(pick);
      spent += spec.cost[pick];
      st.d_s += static_cast<int64_t>(st.sketch.remove_covered_by(pick, {}));
      rescan_ratio();
      emit_trace(opt, st, TraceRow::Event::select, nullptr, pick, f_now());
    } else {
      parked[pick] = 1;  // can never become affordable again
      rescan_ratio();
    }
  }

  RunResult r = st.result(z, t0, false);
  // the single best node of the whole stream backstops thin greedy runs
  if (st.d_s < static_cast<int64_t>(d_max) && v_max < n) {
    r.solution = {v_max};
    r.d_s = static_cast<int64_t>(d_max);
  }
  return r;
}

RunResult budgeted_dta(SampleOracle& oracle, const BudgetSpec& spec, double eps, double delta,
                       const RunOptions& opt) {
  const NodeId n = oracle.num_nodes();
  const double budget_factor = 1.0 - std::exp(-0.5);
  if (!(eps > 0.0 && eps < budget_factor))
    throw Error(ErrorCode::invalid_argument, "eps must lie in (0, 1-e^-1/2) for budgeted runs");
  const double delta_alg = 3.0 * delta / 7.0;
  const GuaranteeParams P = derive_params(n, spec.k_m, eps, delta_alg);
  const double target = budget_factor - eps;
  return adaptive_driver(n, P, target, opt, [&](int64_t z, const RunOptions& inner) {
    return budgeted_bca(oracle, spec, z, inner);
  });
}

// ---- explicit-hypergraph baselines ------------------------------------------------

uint64_t coverage_count(const std::vector<Hyperedge>& edges, const std::vector<NodeId>& set,
                        NodeId n) {
  std::vector<uint8_t> in(n, 0);
  for (NodeId v : set) {
    if (v >= n) throw Error(ErrorCode::invalid_argument, "node id out of range");
    in[v] = 1;
  }
  uint64_t covered = 0;
  for (const Hyperedge& e : edges)
    for (NodeId v : e)
      if (in[v]) {
        ++covered;
        break;
      }
  return covered;
}

std::pair<std::vector<NodeId>, uint64_t> full_sketch_greedy(const std::vector<Hyperedge>& edges,
                                                            NodeId n, uint32_t k) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty node set");
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "need 1 <= k <= n");

  std::vector<std::vector<uint32_t>> incidence(n);
  for (uint32_t e = 0; e < edges.size(); ++e)
    for (NodeId v : edges[e]) incidence[v].push_back(e);

  // lazy greedy: stale heap entries are refreshed on pop; gains only shrink,
  // so a fresh top entry is the true argmax. Ties go to the smaller id.
  struct Entry {
    uint64_t gain;
    NodeId v;
    uint32_t round;
  };
  const auto worse = [](const Entry& a, const Entry& b) {
    return a.gain != b.gain ? a.gain < b.gain : a.v > b.v;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (NodeId v = 0; v < n; ++v)
    heap.push({incidence[v].size(), v, 0});

  std::vector<uint8_t> edge_covered(edges.size(), 0);
  std::vector<uint8_t> taken(n, 0);
  std::vector<NodeId> sol;
  uint64_t covered = 0;
  uint32_t round = 0;
  while (sol.size() < k && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (taken[top.v]) continue;
    if (top.round != round) {
      uint64_t gain = 0;
      for (uint32_t e : incidence[top.v]) gain += !edge_covered[e];
      heap.push({gain, top.v, round});
      continue;
    }
    taken[top.v] = 1;
    sol.push_back(top.v);
    for (uint32_t e : incidence[top.v]) {
      if (!edge_covered[e]) {
        edge_covered[e] = 1;
        ++covered;
      }
    }
    ++round;
  }
  return {std::move(sol), covered};
}

std::pair<std::vector<NodeId>, uint64_t> brute_force_opt(const std::vector<Hyperedge>& edges,
                                                         NodeId n, uint32_t k) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty node set");
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "need 1 <= k <= n");
  double combos = 1;
  for (uint32_t i = 1; i <= k; ++i) combos = combos * (n - k + i) / i;
  if (combos > 1e7) throw Error(ErrorCode::domain, "instance too large for exact search");

  std::vector<NodeId> comb(k);
  for (uint32_t i = 0; i < k; ++i) comb[i] = i;
  std::vector<NodeId> best_set;
  uint64_t best = 0;
  std::vector<uint8_t> in(n, 0);
  for (;;) {
    for (NodeId v : comb) in[v] = 1;
    uint64_t covered = 0;
    for (const Hyperedge& e : edges)
      for (NodeId v : e)
        if (in[v]) {
          ++covered;
          break;
        }
    for (NodeId v : comb) in[v] = 0;
    if (covered > best || best_set.empty()) {
      best = covered;
      best_set = comb;
    }
    // next k-combination in lexicographic order
    int32_t i = static_cast<int32_t>(k) - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return {std::move(best_set), best};
}

}  // namespace hypercover
