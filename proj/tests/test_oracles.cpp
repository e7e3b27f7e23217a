#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hypercover;
using namespace hypercover::testing;

namespace {

// unique temp file holding `content`; removed when the guard dies
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("hypercover_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::map<Hyperedge, uint64_t> sample_histogram(SampleOracle& oracle, uint64_t draws) {
  OracleWorkspace ws;
  Hyperedge e;
  std::map<Hyperedge, uint64_t> hist;
  for (uint64_t j = 0; j < draws; ++j) {
    oracle.generate(oracle.claim_next(), ws, e);
    ++hist[e];
  }
  return hist;
}

}  // namespace

TEST_SUITE("graph_io") {

TEST_CASE("edge list: undirected arcs go both ways, comments and blanks skipped") {
  TempFile f("# a comment\n10 20\n\n20 30  # trailing comment\n");
  const Graph g = load_graph(f.str(), false);
  CHECK(g.n == 3);
  CHECK(g.num_arcs() == 4);
  CHECK(g.orig == std::vector<uint64_t>{10, 20, 30});
  // node 20 (dense 1) sees both neighbours on its in-side
  std::set<NodeId> in1(g.in_adj.begin() + g.in_off[1], g.in_adj.begin() + g.in_off[2]);
  CHECK(in1 == std::set<NodeId>{0, 2});
}

TEST_CASE("edge list: directed keeps one arc per line") {
  TempFile f("0 1\n2 1\n");
  const Graph g = load_graph(f.str(), true);
  CHECK(g.directed);
  CHECK(g.n == 3);
  CHECK(g.num_arcs() == 2);
  CHECK(g.in_off[2] - g.in_off[1] == 2);  // node 1 has two in-arcs
  CHECK(g.out_off[2] - g.out_off[1] == 0);
}

TEST_CASE("edge list: duplicate arcs keep the first occurrence") {
  TempFile f("0 1 0.5\n0 1 0.7\n1 2 0.25\n");
  const Graph g = load_graph(f.str(), true);
  CHECK(g.num_arcs() == 2);
  REQUIRE(g.has_probs());
  // in-arc of node 1 is 0->1 with the first probability
  CHECK(g.in_prob[g.in_off[1]] == 0.5);
}

TEST_CASE("edge list: malformed input is rejected with a line number") {
  TempFile bad_token("0 1\n0 x\n");
  CHECK_THROWS_AS(load_graph(bad_token.str(), true), Error);
  TempFile missing_field("0\n");
  CHECK_THROWS_AS(load_graph(missing_field.str(), true), Error);
  TempFile mixed("0 1 0.5\n1 2\n");
  CHECK_THROWS_AS(load_graph(mixed.str(), true), Error);
  TempFile bad_prob("0 1 1.5\n");
  CHECK_THROWS_AS(load_graph(bad_prob.str(), true), Error);
  TempFile zero_prob("0 1 0.0\n");
  CHECK_THROWS_AS(load_graph(zero_prob.str(), true), Error);
  CHECK_THROWS_AS(load_graph("/nonexistent/path/graph", true), Error);
}

TEST_CASE("edge list: undirected self-loop stays a single arc") {
  TempFile f("0 0\n0 1\n");
  const Graph g = load_graph(f.str(), false);
  CHECK(g.num_arcs() == 3);  // loop once, 0-1 twice
}

TEST_CASE("hyperedge list: per-line dedupe and interning") {
  TempFile f("5 3 5\n# note\n\n7\n3 9\n");
  const Hypergraph h = load_hypergraph(f.str());
  CHECK(h.n == 4);
  CHECK(h.orig == std::vector<uint64_t>{5, 3, 7, 9});
  REQUIRE(h.edges.size() == 3);
  CHECK(h.edges[0] == Hyperedge{0, 1});  // 5,3 deduped and sorted densely
  CHECK(h.edges[1] == Hyperedge{2});
  CHECK(h.edges[2] == Hyperedge{1, 3});
}

TEST_CASE("weight assignment: wc uses in-degree, tri draws from three levels") {
  TempFile f("0 2\n1 2\n0 1\n");
  Graph g = load_graph(f.str(), true);
  assign_weights(g, "wc", 1);
  REQUIRE(g.has_probs());
  // dense ids follow first appearance: file node 2 is dense 1 (in-degree 2),
  // file node 1 is dense 2 (in-degree 1)
  REQUIRE(g.dense.at(2) == 1);
  REQUIRE(g.dense.at(1) == 2);
  for (uint64_t s = g.in_off[1]; s < g.in_off[2]; ++s) CHECK(g.in_prob[s] == 0.5);
  CHECK(g.in_prob[g.in_off[2]] == 1.0);

  Graph g2 = load_graph(f.str(), true);
  assign_weights(g2, "tri", 7);
  for (double p : g2.in_prob)
    CHECK((p == 0.1 || p == 0.01 || p == 0.001));
  Graph g3 = load_graph(f.str(), true);
  assign_weights(g3, "tri", 7);
  CHECK(g2.in_prob == g3.in_prob);  // same seed, same draw

  Graph u = load_graph(f.str(), false);
  CHECK_THROWS_AS(assign_weights(u, "wc", 1), Error);
  CHECK_THROWS_AS(assign_weights(g, "nope", 1), Error);
}

}  // TEST_SUITE

TEST_SUITE("oracles") {

TEST_CASE("explicit oracle is uniform over the stored multiset") {
  auto h = make_hypergraph(4, {{0, 1}, {2}, {2, 3}});
  ExplicitOracle oracle(h, 99);
  const uint64_t draws = 30000;
  auto hist = sample_histogram(oracle, draws);
  REQUIRE(hist.size() == 3);
  for (const auto& [edge, count] : hist)
    CHECK(binomial_close(count, draws, 1.0 / 3.0, 3.0));
}

TEST_CASE("explicit oracle rejects an empty hypergraph") {
  auto h = make_hypergraph(3, {});
  CHECK_THROWS_AS(ExplicitOracle(h, 1), Error);
}

TEST_CASE("domset oracle emits the in-ball of a uniform target") {
  // directed arc 0 -> 1: target 0 yields {0}, target 1 yields {0, 1}
  TempFile f("0 1\n");
  auto g = std::make_shared<Graph>(load_graph(f.str(), true));
  DomsetOracle oracle(g, 1, 5);
  const uint64_t draws = 20000;
  auto hist = sample_histogram(oracle, draws);
  REQUIRE(hist.size() == 2);
  CHECK(binomial_close(hist[{0}], draws, 0.5, 3.0));
  CHECK(binomial_close(hist[{0, 1}], draws, 0.5, 3.0));
}

TEST_CASE("domset oracle honors the hop radius") {
  // undirected path 0-1-2-3-4
  TempFile f("0 1\n1 2\n2 3\n3 4\n");
  auto g = std::make_shared<Graph>(load_graph(f.str(), false));
  DomsetOracle oracle(g, 2, 5);
  auto hist = sample_histogram(oracle, 5000);
  // every sample is the radius-2 ball of one of the five targets
  const std::set<Hyperedge> balls = {
      {0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2, 3, 4}, {1, 2, 3, 4}, {2, 3, 4}};
  for (const auto& [edge, count] : hist) CHECK(balls.count(edge) == 1);
  CHECK(hist.size() == balls.size());
  CHECK_THROWS_AS(DomsetOracle(g, 0, 5), Error);
}

TEST_CASE("landmark oracle collects all shortest-path nodes") {
  // 4-cycle 0-1-3-2-0: opposite corners see every node, neighbours only
  // themselves
  TempFile f("0 1\n1 3\n3 2\n2 0\n");
  auto g = std::make_shared<Graph>(load_graph(f.str(), false));
  LandmarkOracle oracle(g, 17);
  const uint64_t draws = 30000;
  auto hist = sample_histogram(oracle, draws);
  uint64_t full = 0, pairs = 0;
  for (const auto& [edge, count] : hist) {
    if (edge.size() == 4) {
      full += count;
    } else {
      REQUIRE(edge.size() == 2);
      pairs += count;
    }
  }
  // 4 of the 12 ordered pairs are opposite corners
  CHECK(binomial_close(full, draws, 4.0 / 12.0, 3.0));
  CHECK(binomial_close(pairs, draws, 8.0 / 12.0, 3.0));
}

TEST_CASE("landmark oracle turns disconnected pairs into empty samples") {
  TempFile f("0 1\n2 3\n");
  auto g = std::make_shared<Graph>(load_graph(f.str(), false));
  LandmarkOracle oracle(g, 3);
  const uint64_t draws = 20000;
  auto hist = sample_histogram(oracle, draws);
  CHECK(binomial_close(hist[{}], draws, 8.0 / 12.0, 3.0));  // cross-component pairs
}

TEST_CASE("landmark oracle validates its graph") {
  TempFile f("0 1\n");
  auto directed = std::make_shared<Graph>(load_graph(f.str(), true));
  CHECK_THROWS_AS(LandmarkOracle(directed, 1), Error);
  auto tiny = std::make_shared<Graph>();
  tiny->n = 1;
  CHECK_THROWS_AS(LandmarkOracle(tiny, 1), Error);
}

TEST_CASE("reverse-reachability oracle matches hand-computed probabilities") {
  // arcs 0->1 and 2->1 at weight 1/2 each (wc); targets 0 and 2 are sources
  TempFile f("0 1\n2 1\n");
  auto g = std::make_shared<Graph>(load_graph(f.str(), true));
  CHECK_THROWS_AS(RisIcOracle(g, 1), Error);  // no probabilities yet
  assign_weights(*g, "wc", 1);
  RisIcOracle oracle(g, 23);
  const uint64_t draws = 60000;
  auto hist = sample_histogram(oracle, draws);
  CHECK(binomial_close(hist[{0}], draws, 1.0 / 3.0, 3.0));
  CHECK(binomial_close(hist[{2}], draws, 1.0 / 3.0, 3.0));
  CHECK(binomial_close(hist[{1}], draws, 1.0 / 12.0, 3.0));
  CHECK(binomial_close(hist[{0, 1}], draws, 1.0 / 12.0, 3.0));
  CHECK(binomial_close(hist[{1, 2}], draws, 1.0 / 12.0, 3.0));
  CHECK(binomial_close(hist[{0, 1, 2}], draws, 1.0 / 12.0, 3.0));
}

TEST_CASE("samples are sorted, duplicate-free, and within range") {
  TempFile f("0 1\n1 2\n2 3\n3 0\n1 3\n");
  auto g = std::make_shared<Graph>(load_graph(f.str(), false));
  for (int which = 0; which < 2; ++which) {
    std::unique_ptr<SampleOracle> oracle;
    if (which == 0)
      oracle = std::make_unique<DomsetOracle>(g, 2, 11);
    else
      oracle = std::make_unique<LandmarkOracle>(g, 11);
    OracleWorkspace ws;
    Hyperedge e;
    for (int j = 0; j < 2000; ++j) {
      oracle->generate(oracle->claim_next(), ws, e);
      CHECK(std::is_sorted(e.begin(), e.end()));
      CHECK(std::adjacent_find(e.begin(), e.end()) == e.end());
      for (NodeId v : e) CHECK(v < g->n);
    }
  }
}

TEST_CASE("samples depend only on seed and index") {
  std::mt19937_64 rng(3);
  auto h = make_hypergraph(6, random_hypergraph(rng, 6, 20, 3));
  ExplicitOracle a(h, 1234);
  ExplicitOracle b(h, 1234);
  ExplicitOracle c(h, 1235);
  OracleWorkspace ws;
  Hyperedge ea, eb, ec;
  bool any_differs = false;
  for (uint64_t j = 0; j < 200; ++j) {
    a.generate(j, ws, ea);
    b.generate(j, ws, eb);
    c.generate(j, ws, ec);
    CHECK(ea == eb);
    any_differs = any_differs || ea != ec;
  }
  CHECK(any_differs);  // a different seed gives a different stream
}

}  // TEST_SUITE

TEST_SUITE("streams") {

TEST_CASE("prefetching yields the exact single-threaded sequence") {
  std::mt19937_64 rng(9);
  auto h = make_hypergraph(8, random_hypergraph(rng, 8, 40, 4));
  const uint64_t draws = 400;

  std::vector<Hyperedge> expect;
  {
    ExplicitOracle oracle(h, 777);
    auto s = make_stream(oracle, 1);
    Hyperedge e;
    for (uint64_t j = 0; j < draws; ++j) {
      s->next(e);
      expect.push_back(e);
    }
  }
  for (uint32_t workers : {2u, 3u, 5u, 8u}) {
    ExplicitOracle oracle(h, 777);
    auto s = make_stream(oracle, workers);
    Hyperedge e;
    for (uint64_t j = 0; j < draws; ++j) {
      s->next(e);
      REQUIRE(e == expect[j]);
    }
    CAPTURE(workers);
  }
}

TEST_CASE("a destroyed stream rewinds to exactly the consumed position") {
  std::mt19937_64 rng(10);
  auto h = make_hypergraph(8, random_hypergraph(rng, 8, 30, 4));
  std::vector<Hyperedge> expect;
  {
    ExplicitOracle oracle(h, 55);
    auto s = make_stream(oracle, 1);
    Hyperedge e;
    for (uint64_t j = 0; j < 150; ++j) {
      s->next(e);
      expect.push_back(e);
    }
  }
  ExplicitOracle oracle(h, 55);
  Hyperedge e;
  {
    auto s = make_stream(oracle, 4);
    for (uint64_t j = 0; j < 100; ++j) s->next(e);
  }  // prefetched-but-unconsumed samples are handed back here
  CHECK(oracle.samples_drawn() == 100);
  auto s2 = make_stream(oracle, 3);
  for (uint64_t j = 100; j < 150; ++j) {
    s2->next(e);
    REQUIRE(e == expect[j]);
  }
}

}  // TEST_SUITE
