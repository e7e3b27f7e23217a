#include "hypercover/hypercover.h"

#include <memory>
#include <string>
#include <vector>

#include "algo.hpp"
#include "eval.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "types.hpp"

using namespace hypercover;

struct hc_graph {
  std::shared_ptr<Graph> g;
};

struct hc_hypergraph {
  std::shared_ptr<Hypergraph> h;
};

struct hc_oracle {
  std::unique_ptr<SampleOracle> oracle;
  // id translation back and forth across the boundary
  const std::vector<uint64_t>* orig = nullptr;               // null: dense ids are real
  const std::unordered_map<uint64_t, NodeId>* dense = nullptr;
};

struct hc_result {
  RunResult core;
  std::vector<uint64_t> solution;  // original ids
  bool has_full = false;
  std::vector<uint64_t> full_greedy;
  int64_t full_greedy_coverage = 0;
};

struct hc_estimate {
  CoverageEstimate est;
};

namespace {

thread_local std::string g_last_error;

hc_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument:
      return HC_ERR_INVALID_ARGUMENT;
    case ErrorCode::io:
      return HC_ERR_IO;
    case ErrorCode::parse:
      return HC_ERR_PARSE;
    case ErrorCode::domain:
      return HC_ERR_DOMAIN;
    case ErrorCode::sample_cap:
      return HC_ERR_SAMPLE_CAP;
    case ErrorCode::internal:
      return HC_ERR_INTERNAL;
  }
  return HC_ERR_INTERNAL;
}

template <typename Fn>
hc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HC_ERR_INTERNAL;
  }
}

uint64_t to_orig(const hc_oracle* o, NodeId v) {
  return o->orig ? (*o->orig)[v] : static_cast<uint64_t>(v);
}

NodeId to_dense(const hc_oracle* o, uint64_t id) {
  if (!o->dense) {
    if (id >= o->oracle->num_nodes())
      throw Error(ErrorCode::invalid_argument, "unknown node id " + std::to_string(id));
    return static_cast<NodeId>(id);
  }
  const auto it = o->dense->find(id);
  if (it == o->dense->end())
    throw Error(ErrorCode::invalid_argument, "unknown node id " + std::to_string(id));
  return it->second;
}

RunOptions make_run_options(const hc_run_options* opt) {
  RunOptions ro;
  if (opt) {
    if (opt->bound) ro.bound = bound_from_name(opt->bound);
    if (opt->max_samples) ro.max_samples = opt->max_samples;
    if (opt->workers) ro.workers = opt->workers;
  }
  return ro;
}

hc_result* wrap_result(const hc_oracle* o, RunResult&& core) {
  auto* r = new hc_result;
  r->core = std::move(core);
  r->solution.reserve(r->core.solution.size());
  for (NodeId v : r->core.solution) r->solution.push_back(to_orig(o, v));
  return r;
}

// runs fn with a full-retention tap when requested and attaches the
// full-sketch greedy comparison to the result
template <typename Run>
hc_result* run_with_options(hc_oracle* o, uint32_t k, const hc_run_options* opt, Run&& run) {
  RunOptions ro = make_run_options(opt);
  std::vector<Hyperedge> retained;
  const bool retain = opt && opt->retain_full_sketch;
  if (retain) {
    ro.hooks.observe = [&retained](const Hyperedge& e) {
      if (!e.empty()) retained.push_back(e);
    };
  }
  hc_result* r = wrap_result(o, run(ro));
  if (retain) {
    auto [sol, cov] = full_sketch_greedy(retained, o->oracle->num_nodes(), k);
    r->has_full = true;
    r->full_greedy.reserve(sol.size());
    for (NodeId v : sol) r->full_greedy.push_back(to_orig(o, v));
    r->full_greedy_coverage = static_cast<int64_t>(cov);
  }
  return r;
}

hc_result* wrap_baseline(const hc_hypergraph* h, std::vector<NodeId>&& sol, uint64_t covered,
                         uint64_t samples) {
  auto* r = new hc_result;
  r->core.solution = std::move(sol);
  r->core.d_s = static_cast<int64_t>(covered);
  r->core.samples = samples;
  r->solution.reserve(r->core.solution.size());
  for (NodeId v : r->core.solution) r->solution.push_back(h->h->orig[v]);
  return r;
}

}  // namespace

extern "C" {

const char* hc_status_name(hc_status s) {
  switch (s) {
    case HC_OK:
      return "ok";
    case HC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case HC_ERR_IO:
      return "io error";
    case HC_ERR_PARSE:
      return "parse error";
    case HC_ERR_DOMAIN:
      return "domain error";
    case HC_ERR_SAMPLE_CAP:
      return "sample cap reached";
    case HC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

/* ---- inputs ---------------------------------------------------------- */

hc_status hc_graph_load(const char* path, int directed, hc_graph** out) {
  return guarded([&] {
    if (!path || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto g = std::make_shared<Graph>(load_graph(path, directed != 0));
    *out = new hc_graph{std::move(g)};
  });
}

hc_status hc_graph_assign_weights(hc_graph* g, const char* model, uint64_t seed) {
  return guarded([&] {
    if (!g || !model) throw Error(ErrorCode::invalid_argument, "null argument");
    assign_weights(*g->g, model, seed);
  });
}

uint32_t hc_graph_num_nodes(const hc_graph* g) { return g ? g->g->n : 0; }
uint64_t hc_graph_num_arcs(const hc_graph* g) { return g ? g->g->num_arcs() : 0; }
void hc_graph_free(hc_graph* g) { delete g; }

hc_status hc_hypergraph_load(const char* path, hc_hypergraph** out) {
  return guarded([&] {
    if (!path || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto h = std::make_shared<Hypergraph>(load_hypergraph(path));
    *out = new hc_hypergraph{std::move(h)};
  });
}

uint32_t hc_hypergraph_num_nodes(const hc_hypergraph* h) { return h ? h->h->n : 0; }
uint64_t hc_hypergraph_num_edges(const hc_hypergraph* h) { return h ? h->h->edges.size() : 0; }
void hc_hypergraph_free(hc_hypergraph* h) { delete h; }

/* ---- oracles ---------------------------------------------------------- */

hc_status hc_oracle_explicit(const hc_hypergraph* h, uint64_t seed, hc_oracle** out) {
  return guarded([&] {
    if (!h || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto* o = new hc_oracle;
    o->oracle = std::make_unique<ExplicitOracle>(h->h, seed);
    o->orig = &h->h->orig;
    o->dense = &h->h->dense;
    *out = o;
  });
}

hc_status hc_oracle_domset(const hc_graph* g, uint32_t hops, uint64_t seed, hc_oracle** out) {
  return guarded([&] {
    if (!g || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto* o = new hc_oracle;
    o->oracle = std::make_unique<DomsetOracle>(g->g, hops, seed);
    o->orig = &g->g->orig;
    o->dense = &g->g->dense;
    *out = o;
  });
}

hc_status hc_oracle_ris_ic(const hc_graph* g, uint64_t seed, hc_oracle** out) {
  return guarded([&] {
    if (!g || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto* o = new hc_oracle;
    o->oracle = std::make_unique<RisIcOracle>(g->g, seed);
    o->orig = &g->g->orig;
    o->dense = &g->g->dense;
    *out = o;
  });
}

hc_status hc_oracle_landmark(const hc_graph* g, uint64_t seed, hc_oracle** out) {
  return guarded([&] {
    if (!g || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto* o = new hc_oracle;
    o->oracle = std::make_unique<LandmarkOracle>(g->g, seed);
    o->orig = &g->g->orig;
    o->dense = &g->g->dense;
    *out = o;
  });
}

uint32_t hc_oracle_num_nodes(const hc_oracle* o) { return o ? o->oracle->num_nodes() : 0; }
void hc_oracle_free(hc_oracle* o) { delete o; }

/* ---- runs -------------------------------------------------------------- */

hc_status hc_run_bca(hc_oracle* o, uint32_t k, const hc_run_options* opt, hc_result** out) {
  return guarded([&] {
    if (!o || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    if (!opt || opt->z <= 0)
      throw Error(ErrorCode::invalid_argument, "explicit threshold z required");
    *out = run_with_options(o, k, opt, [&](const RunOptions& ro) {
      return bca(*o->oracle, k, opt->z, ro);
    });
  });
}

hc_status hc_run_bca_fixed(hc_oracle* o, uint32_t k, double eps, double delta,
                           const hc_run_options* opt, hc_result** out) {
  return guarded([&] {
    if (!o || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = run_with_options(o, k, opt, [&](const RunOptions& ro) {
      return bca_fixed_guarantee(*o->oracle, k, eps, delta, ro);
    });
  });
}

hc_status hc_run_dta(hc_oracle* o, uint32_t k, double eps, double delta,
                     const hc_run_options* opt, hc_result** out) {
  return guarded([&] {
    if (!o || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    *out = run_with_options(o, k, opt, [&](const RunOptions& ro) {
      return dta(*o->oracle, k, eps, delta, ro);
    });
  });
}

hc_status hc_run_budgeted_dta(hc_oracle* o, const uint64_t* ids, const double* costs,
                              uint64_t n_costs, double default_cost, double budget, double eps,
                              double delta, const hc_run_options* opt, hc_result** out) {
  return guarded([&] {
    if (!o || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    if (n_costs > 0 && (!ids || !costs))
      throw Error(ErrorCode::invalid_argument, "null cost table");
    std::vector<double> cost(o->oracle->num_nodes(), default_cost);
    for (uint64_t i = 0; i < n_costs; ++i) cost[to_dense(o, ids[i])] = costs[i];
    const BudgetSpec spec = BudgetSpec::make(std::move(cost), budget);
    *out = run_with_options(o, spec.k_m, opt, [&](const RunOptions& ro) {
      return budgeted_dta(*o->oracle, spec, eps, delta, ro);
    });
  });
}

hc_status hc_greedy_full(const hc_hypergraph* h, uint32_t k, hc_result** out) {
  return guarded([&] {
    if (!h || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto [sol, cov] = full_sketch_greedy(h->h->edges, h->h->n, k);
    *out = wrap_baseline(h, std::move(sol), cov, h->h->edges.size());
  });
}

hc_status hc_exact(const hc_hypergraph* h, uint32_t k, hc_result** out) {
  return guarded([&] {
    if (!h || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    auto [sol, cov] = brute_force_opt(h->h->edges, h->h->n, k);
    *out = wrap_baseline(h, std::move(sol), cov, h->h->edges.size());
  });
}

uint64_t hc_result_solution_size(const hc_result* r) { return r ? r->solution.size() : 0; }
uint64_t hc_result_solution_node(const hc_result* r, uint64_t i) { return r->solution.at(i); }
int64_t hc_result_d_s(const hc_result* r) { return r ? r->core.d_s : 0; }
uint64_t hc_result_samples(const hc_result* r) { return r ? r->core.samples : 0; }
int64_t hc_result_z_used(const hc_result* r) { return r ? r->core.z_used : 0; }
uint64_t hc_result_peak_elements(const hc_result* r) { return r ? r->core.peak_elements : 0; }
uint64_t hc_result_full_elements(const hc_result* r) { return r ? r->core.full_elements : 0; }
double hc_result_wall_seconds(const hc_result* r) { return r ? r->core.wall_seconds : 0; }
int hc_result_has_certificate(const hc_result* r) {
  return r && r->core.certificate.has_value() ? 1 : 0;
}
double hc_result_certificate_lb(const hc_result* r) {
  return r && r->core.certificate ? r->core.certificate->lb : 0;
}
double hc_result_certificate_ub(const hc_result* r) {
  return r && r->core.certificate ? r->core.certificate->ub : 0;
}
double hc_result_certificate_ratio(const hc_result* r) {
  return r && r->core.certificate ? r->core.certificate->ratio : 0;
}
int hc_result_has_full_baseline(const hc_result* r) { return r && r->has_full ? 1 : 0; }
uint64_t hc_result_full_greedy_size(const hc_result* r) { return r ? r->full_greedy.size() : 0; }
uint64_t hc_result_full_greedy_node(const hc_result* r, uint64_t i) {
  return r->full_greedy.at(i);
}
int64_t hc_result_full_greedy_coverage(const hc_result* r) {
  return r ? r->full_greedy_coverage : 0;
}
void hc_result_free(hc_result* r) { delete r; }

/* ---- coverage evaluation ------------------------------------------------ */

hc_status hc_estimate_coverage(hc_oracle* o, const uint64_t* ids, uint64_t n_ids, double eps,
                               double delta, uint64_t max_samples, uint32_t workers,
                               hc_estimate** out) {
  return guarded([&] {
    if (!o || !out) throw Error(ErrorCode::invalid_argument, "null argument");
    if (n_ids > 0 && !ids) throw Error(ErrorCode::invalid_argument, "null solution");
    std::vector<NodeId> sol;
    sol.reserve(n_ids);
    for (uint64_t i = 0; i < n_ids; ++i) sol.push_back(to_dense(o, ids[i]));
    *out = new hc_estimate{
        estimate_coverage(*o->oracle, sol, eps, delta, max_samples ? max_samples : 1000000000ULL,
                          workers ? workers : 1)};
  });
}

double hc_estimate_mean(const hc_estimate* e) { return e ? e->est.mean : 0; }
double hc_estimate_lb(const hc_estimate* e) { return e ? e->est.lb : 0; }
double hc_estimate_ub(const hc_estimate* e) { return e ? e->est.ub : 0; }
uint64_t hc_estimate_samples(const hc_estimate* e) { return e ? e->est.samples : 0; }
int hc_estimate_precision_met(const hc_estimate* e) {
  return e && e->est.precision_met ? 1 : 0;
}
void hc_estimate_free(hc_estimate* e) { delete e; }

} /* extern "C" */
