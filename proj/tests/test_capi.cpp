#include <doctest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hypercover/hypercover.h"

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("hypercover_capi_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_SUITE("c_api") {

TEST_CASE("status names are stable strings") {
  CHECK(std::strcmp(hc_status_name(HC_OK), "ok") == 0);
  CHECK(std::strcmp(hc_status_name(HC_ERR_DOMAIN), "domain error") == 0);
  CHECK(std::strcmp(hc_status_name(HC_ERR_SAMPLE_CAP), "sample cap reached") == 0);
}

TEST_CASE("graph loading and weight assignment round-trip") {
  TempFile f("10 20\n20 30\n10 30\n");
  hc_graph* g = nullptr;
  REQUIRE(hc_graph_load(f.str().c_str(), 1, &g) == HC_OK);
  CHECK(hc_graph_num_nodes(g) == 3);
  CHECK(hc_graph_num_arcs(g) == 3);
  CHECK(hc_graph_assign_weights(g, "wc", 7) == HC_OK);
  CHECK(hc_graph_assign_weights(g, "bogus", 7) == HC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hc_last_error()).find("weight") != std::string::npos);
  hc_graph_free(g);

  hc_graph* missing = nullptr;
  CHECK(hc_graph_load("/no/such/file", 0, &missing) == HC_ERR_IO);
  CHECK(missing == nullptr);
}

TEST_CASE("hypergraph loading reports size") {
  TempFile f("100 200\n200 300\n300\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  CHECK(hc_hypergraph_num_nodes(h) == 3);
  CHECK(hc_hypergraph_num_edges(h) == 3);
  hc_hypergraph_free(h);
}

TEST_CASE("a threshold run speaks original ids across the boundary") {
  // node 100 covers three edge patterns, 200 the rest
  TempFile f("100 200\n100 300\n100\n200 300\n200\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_oracle* o = nullptr;
  REQUIRE(hc_oracle_explicit(h, 42, &o) == HC_OK);
  CHECK(hc_oracle_num_nodes(o) == 3);

  hc_run_options opt = {};
  opt.z = 30;
  hc_result* r = nullptr;
  REQUIRE(hc_run_bca(o, 2, &opt, &r) == HC_OK);
  REQUIRE(hc_result_solution_size(r) == 2);
  // selections come back as file ids, not dense ids
  for (uint64_t i = 0; i < 2; ++i) {
    const uint64_t v = hc_result_solution_node(r, i);
    CHECK((v == 100 || v == 200 || v == 300));
  }
  CHECK(hc_result_d_s(r) > 0);
  CHECK(hc_result_z_used(r) == 30);
  CHECK(hc_result_samples(r) > 0);
  CHECK(hc_result_peak_elements(r) > 0);
  CHECK(hc_result_wall_seconds(r) >= 0.0);
  CHECK(hc_result_has_certificate(r) == 0);
  CHECK(hc_result_has_full_baseline(r) == 0);
  hc_result_free(r);

  // the same options without z are rejected
  hc_run_options no_z = {};
  hc_result* r2 = nullptr;
  CHECK(hc_run_bca(o, 2, &no_z, &r2) == HC_ERR_INVALID_ARGUMENT);
  CHECK(r2 == nullptr);

  hc_oracle_free(o);
  hc_hypergraph_free(h);
}

TEST_CASE("full-retention tap adds the greedy comparison") {
  TempFile f("0 1\n0 2\n0\n1 2\n2\n1\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_oracle* o = nullptr;
  REQUIRE(hc_oracle_explicit(h, 9, &o) == HC_OK);
  hc_run_options opt = {};
  opt.z = 40;
  opt.retain_full_sketch = 1;
  hc_result* r = nullptr;
  REQUIRE(hc_run_bca(o, 2, &opt, &r) == HC_OK);
  CHECK(hc_result_has_full_baseline(r) == 1);
  CHECK(hc_result_full_greedy_size(r) == 2);
  CHECK(hc_result_full_greedy_coverage(r) > 0);
  CHECK(hc_result_full_elements(r) >= hc_result_peak_elements(r));
  hc_result_free(r);
  hc_oracle_free(o);
  hc_hypergraph_free(h);
}

TEST_CASE("adaptive run returns a certificate on an easy instance") {
  TempFile f("0 2\n0 3\n1 4\n1 5\n0 1\n0 4\n1 2\n0 5\n1 3\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_oracle* o = nullptr;
  REQUIRE(hc_oracle_explicit(h, 4, &o) == HC_OK);
  hc_result* r = nullptr;
  REQUIRE(hc_run_dta(o, 2, 0.1, 0.2, nullptr, &r) == HC_OK);
  REQUIRE(hc_result_has_certificate(r) == 1);
  CHECK(hc_result_certificate_lb(r) > 0.0);
  CHECK(hc_result_certificate_ub(r) >= hc_result_certificate_lb(r));
  CHECK(hc_result_certificate_ratio(r) >= 1.0 - 0.3678794411714423 - 0.1);
  hc_result_free(r);

  // eps beyond the guarantee range is a caller error
  hc_result* bad = nullptr;
  CHECK(hc_run_dta(o, 2, 0.9, 0.2, nullptr, &bad) == HC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hc_last_error()).find("eps") != std::string::npos);

  hc_oracle_free(o);
  hc_hypergraph_free(h);
}

TEST_CASE("sample cap surfaces as its own status") {
  TempFile f("0 1\n2 3\n4 5\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_oracle* o = nullptr;
  REQUIRE(hc_oracle_explicit(h, 4, &o) == HC_OK);
  hc_run_options opt = {};
  opt.z = 1000000;
  opt.max_samples = 100;
  hc_result* r = nullptr;
  CHECK(hc_run_bca(o, 2, &opt, &r) == HC_ERR_SAMPLE_CAP);
  CHECK(r == nullptr);
  hc_oracle_free(o);
  hc_hypergraph_free(h);
}

TEST_CASE("budgeted run maps costs by original id and fills the default") {
  TempFile f("10 20\n10 30\n10\n20\n30\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_oracle* o = nullptr;
  REQUIRE(hc_oracle_explicit(h, 21, &o) == HC_OK);

  const uint64_t ids[] = {10};
  const double costs[] = {2.0};
  hc_result* r = nullptr;
  REQUIRE(hc_run_budgeted_dta(o, ids, costs, 1, 1.0, 2.0, 0.1, 0.2, nullptr, &r) == HC_OK);
  CHECK(hc_result_solution_size(r) >= 1);
  hc_result_free(r);

  // unknown original id in the cost table
  const uint64_t bad_ids[] = {777};
  hc_result* r2 = nullptr;
  CHECK(hc_run_budgeted_dta(o, bad_ids, costs, 1, 1.0, 2.0, 0.1, 0.2, nullptr, &r2) ==
        HC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hc_last_error()).find("unknown node id") != std::string::npos);

  hc_oracle_free(o);
  hc_hypergraph_free(h);
}

TEST_CASE("baselines answer directly on the stored hypergraph") {
  TempFile f("0 1\n0 2\n1\n1 2\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_result* greedy = nullptr;
  REQUIRE(hc_greedy_full(h, 1, &greedy) == HC_OK);
  CHECK(hc_result_solution_size(greedy) == 1);
  CHECK(hc_result_solution_node(greedy, 0) == 1);
  CHECK(hc_result_d_s(greedy) == 3);
  CHECK(hc_result_z_used(greedy) == 0);
  hc_result_free(greedy);

  hc_result* exact = nullptr;
  REQUIRE(hc_exact(h, 2, &exact) == HC_OK);
  CHECK(hc_result_d_s(exact) == 4);
  hc_result_free(exact);
  hc_hypergraph_free(h);
}

TEST_CASE("coverage estimation through the boundary") {
  TempFile f("5 6\n5 7\n6\n7\n5\n8\n");
  hc_hypergraph* h = nullptr;
  REQUIRE(hc_hypergraph_load(f.str().c_str(), &h) == HC_OK);
  hc_oracle* o = nullptr;
  REQUIRE(hc_oracle_explicit(h, 77, &o) == HC_OK);

  const uint64_t ids[] = {5, 6};
  hc_estimate* e = nullptr;
  REQUIRE(hc_estimate_coverage(o, ids, 2, 0.1, 0.05, 0, 0, &e) == HC_OK);
  // 4 of 6 edges touch {5, 6}
  CHECK(hc_estimate_lb(e) <= 4.0 / 6.0);
  CHECK(hc_estimate_ub(e) >= 4.0 / 6.0);
  CHECK(hc_estimate_precision_met(e) == 1);
  CHECK(hc_estimate_samples(e) > 0);
  hc_estimate_free(e);

  const uint64_t bad[] = {999};
  hc_estimate* e2 = nullptr;
  CHECK(hc_estimate_coverage(o, bad, 1, 0.1, 0.05, 0, 0, &e2) == HC_ERR_INVALID_ARGUMENT);

  hc_oracle_free(o);
  hc_hypergraph_free(h);
}

TEST_CASE("null handles are rejected, not dereferenced") {
  hc_result* r = nullptr;
  CHECK(hc_run_dta(nullptr, 2, 0.1, 0.1, nullptr, &r) == HC_ERR_INVALID_ARGUMENT);
  hc_graph* g = nullptr;
  CHECK(hc_graph_load(nullptr, 0, &g) == HC_ERR_INVALID_ARGUMENT);
  CHECK(hc_oracle_num_nodes(nullptr) == 0);
  CHECK(hc_result_d_s(nullptr) == 0);
  hc_result_free(nullptr);
  hc_graph_free(nullptr);
}

}  // TEST_SUITE
