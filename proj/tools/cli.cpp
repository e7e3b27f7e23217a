#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hypercover/hypercover.h"

namespace hypercover_cli {
namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// RAII wrappers for the C handles
// ---------------------------------------------------------------------------

struct GraphDeleter {
  void operator()(hc_graph* g) const { hc_graph_free(g); }
};
struct HypergraphDeleter {
  void operator()(hc_hypergraph* h) const { hc_hypergraph_free(h); }
};
struct OracleDeleter {
  void operator()(hc_oracle* o) const { hc_oracle_free(o); }
};
struct ResultDeleter {
  void operator()(hc_result* r) const { hc_result_free(r); }
};
struct EstimateDeleter {
  void operator()(hc_estimate* e) const { hc_estimate_free(e); }
};

using GraphPtr = std::unique_ptr<hc_graph, GraphDeleter>;
using HypergraphPtr = std::unique_ptr<hc_hypergraph, HypergraphDeleter>;
using OraclePtr = std::unique_ptr<hc_oracle, OracleDeleter>;
using ResultPtr = std::unique_ptr<hc_result, ResultDeleter>;
using EstimatePtr = std::unique_ptr<hc_estimate, EstimateDeleter>;

// A CLI-level failure carrying the exit status to use.
struct CliError {
  int status;
  std::string message;
};

[[noreturn]] void fail(int status, const std::string& message) {
  throw CliError{status, message};
}

void check_status(hc_status st) {
  if (st == HC_OK) return;
  const char* msg = hc_last_error();
  std::string text = msg && *msg ? msg : "unknown failure";
  throw CliError{static_cast<int>(st), text + " (" + hc_status_name(st) + ")"};
}

// ---------------------------------------------------------------------------
// Shared option bag
// ---------------------------------------------------------------------------

struct CommonOptions {
  std::string problem;
  std::string input;
  double eps = 0.1;
  double delta = 0.0;  // 0 means "use 1/n once the instance is loaded"
  std::uint64_t seed = 42;
  std::uint32_t hops = 2;
  std::string weights;  // "", "wc", "tri", or "file"
  bool directed = false;
  std::uint64_t max_samples = 1000000000ull;
  std::uint32_t workers = 0;  // 0 means "all available cores"
};

std::uint32_t resolve_workers(std::uint32_t flag_value) {
  if (const char* env = std::getenv("HYPERCOVER_THREADS")) {
    std::uint32_t parsed = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), parsed);
    if (ec == std::errc() && *ptr == '\0' && parsed > 0) return parsed;
  }
  if (flag_value > 0) return flag_value;
  unsigned cores = std::thread::hardware_concurrency();
  return cores > 0 ? cores : 1;
}

// Loaded instance: exactly one of graph/hypergraph is set; the oracle is
// built on demand (baseline algorithms never need one).
struct Instance {
  GraphPtr graph;
  HypergraphPtr hypergraph;
  std::uint32_t n = 0;
  double delta = 0.0;  // resolved (1/n default applied)
};

Instance load_instance(const CommonOptions& opt, bool hops_given,
                       bool directed_given) {
  Instance inst;
  if (opt.problem == "explicit") {
    if (directed_given)
      fail(1, "--directed does not apply to problem 'explicit'");
    if (!opt.weights.empty())
      fail(1, "--weights only applies to problem 'im'");
    if (hops_given) fail(1, "--hops only applies to problem 'domset'");
    hc_hypergraph* h = nullptr;
    check_status(hc_hypergraph_load(opt.input.c_str(), &h));
    inst.hypergraph.reset(h);
    inst.n = hc_hypergraph_num_nodes(inst.hypergraph.get());
  } else {
    if (opt.problem == "landmark" && opt.directed)
      fail(1, "problem 'landmark' needs an undirected graph");
    if (opt.problem != "im" && !opt.weights.empty())
      fail(1, "--weights only applies to problem 'im'");
    if (opt.problem != "domset" && hops_given)
      fail(1, "--hops only applies to problem 'domset'");
    hc_graph* g = nullptr;
    check_status(hc_graph_load(opt.input.c_str(), opt.directed ? 1 : 0, &g));
    inst.graph.reset(g);
    inst.n = hc_graph_num_nodes(inst.graph.get());
    if (opt.problem == "im") {
      if (opt.weights.empty())
        fail(1, "problem 'im' needs --weights (wc, tri, or file)");
      if (opt.weights != "file") {
        check_status(hc_graph_assign_weights(inst.graph.get(),
                                             opt.weights.c_str(), opt.seed));
      }
    }
  }
  if (inst.n == 0) fail(1, "input instance has no nodes");
  inst.delta = opt.delta > 0.0 ? opt.delta : 1.0 / inst.n;
  if (inst.delta <= 0.0 || inst.delta >= 1.0)
    fail(1, "delta must lie strictly between 0 and 1");
  return inst;
}

OraclePtr make_oracle(const Instance& inst, const CommonOptions& opt) {
  hc_oracle* o = nullptr;
  if (opt.problem == "explicit")
    check_status(hc_oracle_explicit(inst.hypergraph.get(), opt.seed, &o));
  else if (opt.problem == "domset")
    check_status(hc_oracle_domset(inst.graph.get(), opt.hops, opt.seed, &o));
  else if (opt.problem == "im")
    check_status(hc_oracle_ris_ic(inst.graph.get(), opt.seed, &o));
  else if (opt.problem == "landmark")
    check_status(hc_oracle_landmark(inst.graph.get(), opt.seed, &o));
  else
    fail(1, "unknown problem '" + opt.problem + "'");
  return OraclePtr(o);
}

// ---------------------------------------------------------------------------
// Small file readers used only by the CLI
// ---------------------------------------------------------------------------

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::uint64_t> read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(2, "cannot open solution file '" + path + "'");
  std::vector<std::uint64_t> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(strip_comment(line));
    std::uint64_t id = 0;
    if (!(row >> id)) continue;  // blank or comment-only line
    std::string extra;
    if (row >> extra)
      fail(3, "solution file '" + path + "' line " + std::to_string(lineno) +
                  ": expected a single node id");
    ids.push_back(id);
  }
  if (ids.empty()) fail(1, "solution file '" + path + "' is empty");
  return ids;
}

struct BudgetFile {
  std::vector<std::uint64_t> ids;
  std::vector<double> costs;
};

BudgetFile read_budget_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(2, "cannot open budget file '" + path + "'");
  BudgetFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(strip_comment(line));
    std::uint64_t id = 0;
    double cost = 0.0;
    if (!(row >> id)) continue;
    if (!(row >> cost))
      fail(3, "budget file '" + path + "' line " + std::to_string(lineno) +
                  ": expected '<node-id> <cost>'");
    std::string extra;
    if (row >> extra)
      fail(3, "budget file '" + path + "' line " + std::to_string(lineno) +
                  ": trailing characters");
    if (!(cost > 0.0) || !std::isfinite(cost))
      fail(1, "budget file '" + path + "' line " + std::to_string(lineno) +
                  ": cost must be a positive finite number");
    out.ids.push_back(id);
    out.costs.push_back(cost);
  }
  return out;
}

void write_output(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(2, "cannot open output file '" + out_path + "'");
  out << doc.dump(2) << "\n";
  if (!out) fail(2, "failed writing output file '" + out_path + "'");
}

json common_config_json(const CommonOptions& opt, const Instance& inst,
                        std::uint32_t workers) {
  json cfg;
  cfg["problem"] = opt.problem;
  cfg["input"] = opt.input;
  cfg["eps"] = opt.eps;
  cfg["delta"] = inst.delta;
  cfg["seed"] = opt.seed;
  if (opt.problem == "domset") cfg["hops"] = opt.hops;
  if (opt.problem == "im") cfg["weights"] = opt.weights;
  if (opt.problem != "explicit") cfg["directed"] = opt.directed;
  cfg["max_samples"] = opt.max_samples;
  cfg["workers"] = workers;
  return cfg;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunOptions {
  CommonOptions common;
  std::string algo;
  std::uint32_t k = 0;
  std::string bound = "req";
  std::uint64_t z = 0;
  std::string budget_path;
  double budget_limit = 0.0;
  double default_cost = 1.0;
  bool retain_full_sketch = false;
  std::string out_path;
};

json result_to_json(const hc_result* r, bool retained) {
  json doc;
  std::size_t sz = hc_result_solution_size(r);
  json solution = json::array();
  for (std::size_t i = 0; i < sz; ++i)
    solution.push_back(hc_result_solution_node(r, i));
  doc["solution"] = std::move(solution);
  doc["d_S"] = hc_result_d_s(r);
  doc["T"] = hc_result_samples(r);
  if (hc_result_z_used(r) > 0)
    doc["z_used"] = hc_result_z_used(r);
  else
    doc["z_used"] = nullptr;
  std::uint64_t peak = hc_result_peak_elements(r);
  doc["peak_sketch_elements"] = peak;
  doc["peak_sketch_bytes"] = peak * 8;
  doc["wall_time_s"] = hc_result_wall_seconds(r);
  if (hc_result_has_certificate(r)) {
    json cert;
    cert["lb"] = hc_result_certificate_lb(r);
    cert["ub"] = hc_result_certificate_ub(r);
    cert["ratio"] = hc_result_certificate_ratio(r);
    doc["certificate"] = std::move(cert);
  } else {
    doc["certificate"] = nullptr;
  }
  if (retained && hc_result_has_full_baseline(r)) {
    json full;
    std::uint64_t full_elems = hc_result_full_elements(r);
    full["peak_elements"] = full_elems;
    full["peak_bytes"] = full_elems * 8;
    full["reduction_factor"] =
        peak > 0 ? static_cast<double>(full_elems) / static_cast<double>(peak)
                 : 0.0;
    json gsol = json::array();
    std::size_t gsz = hc_result_full_greedy_size(r);
    for (std::size_t i = 0; i < gsz; ++i)
      gsol.push_back(hc_result_full_greedy_node(r, i));
    full["greedy_solution"] = std::move(gsol);
    full["greedy_coverage"] = hc_result_full_greedy_coverage(r);
    doc["full_sketch"] = std::move(full);
  }
  return doc;
}

int cmd_run(const RunOptions& opt, bool hops_given, bool directed_given) {
  const bool budgeted = opt.algo == "budgeted-dta";
  const bool baseline = opt.algo == "greedy-full" || opt.algo == "exact";
  if (baseline && opt.common.problem != "explicit")
    fail(1, "algo '" + opt.algo + "' needs problem 'explicit'");
  if (!budgeted && opt.k == 0)
    fail(1, "--k is required for algo '" + opt.algo + "'");
  if (budgeted && opt.k != 0)
    fail(1, "--k does not apply to algo 'budgeted-dta'; the budget decides");
  if (budgeted && !(opt.budget_limit > 0.0))
    fail(1, "algo 'budgeted-dta' needs --L > 0");
  if (!budgeted && (!opt.budget_path.empty() || opt.budget_limit > 0.0))
    fail(1, "--budget and --L only apply to algo 'budgeted-dta'");
  if (opt.z > 0 && opt.algo != "bca")
    fail(1, "--z only applies to algo 'bca'");

  Instance inst = load_instance(opt.common, hops_given, directed_given);
  std::uint32_t workers = resolve_workers(opt.common.workers);

  hc_run_options ro{};
  ro.bound = opt.bound.c_str();
  ro.max_samples = opt.common.max_samples;
  ro.workers = workers;
  ro.z = opt.z;
  ro.retain_full_sketch = opt.retain_full_sketch ? 1 : 0;

  hc_result* raw = nullptr;
  if (baseline) {
    if (opt.algo == "greedy-full")
      check_status(hc_greedy_full(inst.hypergraph.get(), opt.k, &raw));
    else
      check_status(hc_exact(inst.hypergraph.get(), opt.k, &raw));
  } else if (budgeted) {
    BudgetFile budget;
    if (!opt.budget_path.empty()) budget = read_budget_file(opt.budget_path);
    OraclePtr oracle = make_oracle(inst, opt.common);
    check_status(hc_run_budgeted_dta(
        oracle.get(), budget.ids.empty() ? nullptr : budget.ids.data(),
        budget.ids.empty() ? nullptr : budget.costs.data(), budget.ids.size(),
        opt.default_cost, opt.budget_limit, opt.common.eps, inst.delta, &ro,
        &raw));
  } else if (opt.algo == "bca") {
    OraclePtr oracle = make_oracle(inst, opt.common);
    if (opt.z > 0)
      check_status(hc_run_bca(oracle.get(), opt.k, &ro, &raw));
    else
      check_status(hc_run_bca_fixed(oracle.get(), opt.k, opt.common.eps,
                                    inst.delta, &ro, &raw));
  } else if (opt.algo == "dta") {
    OraclePtr oracle = make_oracle(inst, opt.common);
    check_status(
        hc_run_dta(oracle.get(), opt.k, opt.common.eps, inst.delta, &ro, &raw));
  } else {
    fail(1, "unknown algo '" + opt.algo + "'");
  }
  ResultPtr result(raw);

  json doc;
  doc["schema"] = "hypercover/run/v1";
  json cfg = common_config_json(opt.common, inst, workers);
  cfg["algo"] = opt.algo;
  if (!budgeted) cfg["k"] = opt.k;
  if (!baseline) cfg["bound"] = opt.bound;
  if (opt.algo == "bca") cfg["z"] = opt.z;
  if (budgeted) {
    cfg["budget"] = opt.budget_path.empty() ? json(nullptr)
                                            : json(opt.budget_path);
    cfg["L"] = opt.budget_limit;
    cfg["default_cost"] = opt.default_cost;
  }
  cfg["retain_full_sketch"] = opt.retain_full_sketch;
  doc["config"] = std::move(cfg);
  doc["n"] = inst.n;
  json body = result_to_json(result.get(), opt.retain_full_sketch);
  doc.update(body);
  write_output(doc, opt.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOptions {
  CommonOptions common;
  std::string solution_path;
  std::string out_path;
};

int cmd_eval(const EvalOptions& opt, bool hops_given, bool directed_given) {
  Instance inst = load_instance(opt.common, hops_given, directed_given);
  std::uint32_t workers = resolve_workers(opt.common.workers);
  std::vector<std::uint64_t> ids = read_solution_file(opt.solution_path);
  OraclePtr oracle = make_oracle(inst, opt.common);

  hc_estimate* raw = nullptr;
  check_status(hc_estimate_coverage(oracle.get(), ids.data(), ids.size(),
                                    opt.common.eps, inst.delta,
                                    opt.common.max_samples, workers, &raw));
  EstimatePtr est(raw);

  json doc;
  doc["schema"] = "hypercover/eval/v1";
  json cfg = common_config_json(opt.common, inst, workers);
  cfg["solution"] = opt.solution_path;
  doc["config"] = std::move(cfg);
  doc["n"] = inst.n;
  doc["solution_size"] = ids.size();
  const double mean = hc_estimate_mean(est.get());
  const double lb = hc_estimate_lb(est.get());
  const double ub = hc_estimate_ub(est.get());
  doc["mean"] = mean;
  doc["lb"] = lb;
  doc["ub"] = ub;
  doc["samples"] = hc_estimate_samples(est.get());
  doc["precision_met"] = hc_estimate_precision_met(est.get()) != 0;
  // problem-specific units: the raw estimate is always the covered fraction
  // of the sample space; scale it to an interpretable quantity
  if (opt.common.problem == "domset" || opt.common.problem == "im") {
    json units;
    units["quantity"] =
        opt.common.problem == "domset" ? "dominated_nodes" : "expected_spread";
    units["mean"] = mean * inst.n;
    units["lb"] = lb * inst.n;
    units["ub"] = ub * inst.n;
    doc["units"] = std::move(units);
  } else if (opt.common.problem == "landmark") {
    json units;
    units["quantity"] = "covered_pair_fraction";
    units["mean"] = mean;
    units["lb"] = lb;
    units["ub"] = ub;
    doc["units"] = std::move(units);
  }
  write_output(doc, opt.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 42;
  std::string out_path;
};

// Self-contained deterministic RNG for the generators (the CLI links only the
// public API, so it carries its own bit-portable source of randomness).
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) {
    std::uint64_t s = seed ^ 0x9e3779b97f4a7c15ull;
    auto next = [&s]() {
      s += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = s;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    };
    std::seed_seq seq{next(), next()};
    eng_.seed(seq);
  }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

int cmd_gen(const GenOptions& opt) {
  if (opt.out_path.empty()) fail(1, "gen needs --out");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (opt.kind == "path") {
    if (opt.n < 2) fail(1, "kind 'path' needs --n >= 2");
    for (std::uint32_t v = 0; v + 1 < opt.n; ++v) edges.emplace_back(v, v + 1);
  } else if (opt.kind == "star") {
    if (opt.n < 2) fail(1, "kind 'star' needs --n >= 2");
    for (std::uint32_t v = 1; v < opt.n; ++v) edges.emplace_back(0, v);
  } else if (opt.kind == "er") {
    if (opt.n < 1) fail(1, "kind 'er' needs --n >= 1");
    if (opt.p < 0.0 || opt.p > 1.0) fail(1, "kind 'er' needs --p in [0,1]");
    GenRng rng(opt.seed);
    for (std::uint32_t u = 0; u < opt.n; ++u)
      for (std::uint32_t v = u + 1; v < opt.n; ++v)
        if (rng.uniform01() < opt.p) edges.emplace_back(u, v);
  } else if (opt.kind == "ba") {
    if (opt.m < 1) fail(1, "kind 'ba' needs --m >= 1");
    if (opt.n < opt.m + 1) fail(1, "kind 'ba' needs --n > --m");
    GenRng rng(opt.seed);
    // seed clique on the first m nodes, then preferential attachment:
    // each new node picks m distinct neighbors weighted by current degree
    std::vector<std::uint32_t> stubs;  // node repeated once per incident edge
    for (std::uint32_t u = 0; u < opt.m; ++u)
      for (std::uint32_t v = u + 1; v < opt.m; ++v) {
        edges.emplace_back(u, v);
        stubs.push_back(u);
        stubs.push_back(v);
      }
    if (opt.m == 1) stubs.push_back(0);  // degenerate clique has no stubs
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v = opt.m; v < opt.n; ++v) {
      chosen.clear();
      while (chosen.size() < opt.m) {
        std::uint32_t t = stubs[rng.below(stubs.size())];
        bool seen = false;
        for (std::uint32_t c : chosen) seen = seen || c == t;
        if (!seen) chosen.push_back(t);
      }
      for (std::uint32_t t : chosen) {
        edges.emplace_back(t, v);
        stubs.push_back(t);
        stubs.push_back(v);
      }
    }
  } else {
    fail(1, "unknown kind '" + opt.kind + "'");
  }

  std::ofstream out(opt.out_path);
  if (!out) fail(2, "cannot open output file '" + opt.out_path + "'");
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
  if (!out) fail(2, "failed writing output file '" + opt.out_path + "'");

  json doc;
  doc["schema"] = "hypercover/gen/v1";
  json cfg;
  cfg["kind"] = opt.kind;
  cfg["n"] = opt.n;
  if (opt.kind == "ba") cfg["m"] = opt.m;
  if (opt.kind == "er") cfg["p"] = opt.p;
  cfg["seed"] = opt.seed;
  cfg["out"] = opt.out_path;
  doc["config"] = std::move(cfg);
  doc["nodes"] = opt.n;
  doc["edges"] = edges.size();
  std::cout << doc.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// argument wiring
// ---------------------------------------------------------------------------

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--problem", opt.problem,
                  "problem family: explicit, domset, im, landmark")
      ->required()
      ->check(CLI::IsMember({"explicit", "domset", "im", "landmark"}));
  cmd->add_option("--input", opt.input,
                  "input file (edge list, or hyperedge list for 'explicit')")
      ->required();
  cmd->add_option("--eps", opt.eps, "accuracy parameter (default 0.1)");
  cmd->add_option("--delta", opt.delta,
                  "failure probability (default 1/n after loading)");
  cmd->add_option("--seed", opt.seed, "master random seed (default 42)");
  cmd->add_option("--hops", opt.hops,
                  "domination radius for problem 'domset' (default 2)");
  cmd->add_option("--weights", opt.weights,
                  "arc weights for problem 'im': wc, tri, or file")
      ->check(CLI::IsMember({"wc", "tri", "file"}));
  cmd->add_flag("--directed", opt.directed,
                "treat the edge list as directed arcs");
  cmd->add_option("--max-samples", opt.max_samples,
                  "global sample budget (default 1e9)");
  cmd->add_option("--workers", opt.workers,
                  "sampling threads; 0 = all cores (HYPERCOVER_THREADS "
                  "overrides)");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "hypercover: budget-constrained coverage maximization over sampled "
      "hyperedges"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand(
      "run", "select a coverage-maximizing node set and report it as JSON");
  add_common_options(run_cmd, run_opt.common);
  run_cmd->add_option("--algo", run_opt.algo,
                      "algorithm: dta, bca, greedy-full, exact, budgeted-dta")
      ->required()
      ->check(CLI::IsMember(
          {"dta", "bca", "greedy-full", "exact", "budgeted-dta"}));
  run_cmd->add_option("--k", run_opt.k, "number of nodes to select");
  run_cmd->add_option("--bound", run_opt.bound,
                      "stopping bound: req, topk, or df2d (default req)")
      ->check(CLI::IsMember({"req", "requirement", "topk", "df2d"}));
  run_cmd->add_option("--z", run_opt.z,
                      "explicit coverage threshold for algo 'bca'");
  run_cmd->add_option("--budget", run_opt.budget_path,
                      "node cost file: '<node-id> <cost>' per line");
  run_cmd->add_option("--L", run_opt.budget_limit,
                      "total budget for algo 'budgeted-dta'");
  run_cmd->add_option("--default-cost", run_opt.default_cost,
                      "cost of nodes missing from the budget file (default 1)");
  run_cmd->add_flag("--retain-full-sketch", run_opt.retain_full_sketch,
                    "also keep every sampled hyperedge and report the "
                    "full-retention comparison");
  run_cmd->add_option("--out", run_opt.out_path,
                      "write the JSON record here instead of stdout");

  EvalOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "estimate the coverage of a given node set to +-eps");
  add_common_options(eval_cmd, eval_opt.common);
  eval_cmd->add_option("--solution", eval_opt.solution_path,
                       "node set to evaluate, one node id per line")
      ->required();
  eval_cmd->add_option("--out", eval_opt.out_path,
                       "write the JSON record here instead of stdout");

  GenOptions gen_opt;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "write a synthetic edge-list instance");
  gen_cmd->add_option("--kind", gen_opt.kind,
                      "generator: ba, er, path, star")
      ->required()
      ->check(CLI::IsMember({"ba", "er", "path", "star"}));
  gen_cmd->add_option("--n", gen_opt.n, "number of nodes")->required();
  gen_cmd->add_option("--m", gen_opt.m,
                      "attachment degree for kind 'ba' (default 0)");
  gen_cmd->add_option("--p", gen_opt.p, "edge probability for kind 'er'");
  gen_cmd->add_option("--seed", gen_opt.seed, "random seed (default 42)");
  gen_cmd->add_option("--out", gen_opt.out_path, "output edge-list path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run_cmd->parsed()) {
      // normalize the bound alias before it reaches the library
      if (run_opt.bound == "requirement") run_opt.bound = "req";
      return cmd_run(run_opt, run_cmd->count("--hops") > 0,
                     run_cmd->count("--directed") > 0);
    }
    if (eval_cmd->parsed()) {
      return cmd_eval(eval_opt, eval_cmd->count("--hops") > 0,
                      eval_cmd->count("--directed") > 0);
    }
    if (gen_cmd->parsed()) return cmd_gen(gen_opt);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.status == 0 ? 1 : e.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  }
  return 1;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("hypercover");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& a : full) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace hypercover_cli
