#pragma once

// Shared scaffolding for the test binaries: a scripted oracle, instance
// generators, and independent plain-vector reimplementations of the degree
// heap and the threshold run. The reimplementations are deliberately naive --
// full recounts, linear scans -- so they share no code (and no bugs) with the
// library structures they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "algo.hpp"
#include "bounds.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace hypercover::testing {

// ---------------------------------------------------------------------------
// Scripted oracle: replays a fixed list of hyperedges in order
// ---------------------------------------------------------------------------

class SequenceOracle final : public SampleOracle {
 public:
  SequenceOracle(NodeId n, std::vector<Hyperedge> seq, bool cycle = false,
                 uint64_t seed = 0)
      : SampleOracle(seed), n_(n), seq_(std::move(seq)), cycle_(cycle) {
    for (Hyperedge& e : seq_) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
  }

  NodeId num_nodes() const override { return n_; }

  void generate(uint64_t index, OracleWorkspace&, Hyperedge& out) const override {
    if (seq_.empty()) throw std::logic_error("sequence oracle has no edges");
    if (!cycle_ && index >= seq_.size())
      throw std::logic_error("sequence oracle exhausted at index " + std::to_string(index));
    out = seq_[index % seq_.size()];
  }

 private:
  NodeId n_;
  std::vector<Hyperedge> seq_;
  bool cycle_;
};

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

inline Hyperedge random_edge(std::mt19937_64& rng, NodeId n, uint32_t max_size) {
  const uint32_t size = 1 + static_cast<uint32_t>(rng() % max_size);
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  for (uint32_t i = 0; i < std::min<uint32_t>(size, n); ++i)
    std::swap(ids[i], ids[i + rng() % (n - i)]);
  Hyperedge e(ids.begin(), ids.begin() + std::min<uint32_t>(size, n));
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<Hyperedge> random_hypergraph(std::mt19937_64& rng, NodeId n, uint32_t m,
                                                uint32_t max_size) {
  std::vector<Hyperedge> edges;
  edges.reserve(m);
  for (uint32_t j = 0; j < m; ++j) edges.push_back(random_edge(rng, n, max_size));
  return edges;
}

inline std::shared_ptr<Hypergraph> make_hypergraph(NodeId n, std::vector<Hyperedge> edges) {
  auto h = std::make_shared<Hypergraph>();
  h->n = n;
  h->orig.resize(n);
  std::iota(h->orig.begin(), h->orig.end(), uint64_t{0});
  for (NodeId v = 0; v < n; ++v) h->dense[v] = v;
  h->edges = std::move(edges);
  return h;
}

// ---------------------------------------------------------------------------
// Naive degree heap: plain arrays, full recounts
// ---------------------------------------------------------------------------

struct NaiveHeap {
  std::vector<uint32_t> deg;
  uint32_t k;

  NaiveHeap(NodeId n, uint32_t k_) : deg(n, 0), k(k_) {}

  void increment(NodeId v) { ++deg[v]; }
  void decrement(NodeId v) { --deg[v]; }

  uint32_t max_degree() const { return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end()); }

  int64_t top_k_sum() const {
    std::vector<uint32_t> s = deg;
    std::sort(s.begin(), s.end(), std::greater<>());
    int64_t sum = 0;
    for (uint32_t i = 0; i < std::min<size_t>(k, s.size()); ++i) sum += s[i];
    return sum;
  }

  // mirrors the documented contract: max over unselected, smallest id on
  // ties; all-zero -> smallest unselected id
  std::pair<NodeId, uint32_t> max_degree_node(const std::vector<uint8_t>& selected) const {
    const uint32_t dmax = max_degree();
    if (dmax > 0) {
      for (NodeId v = 0; v < deg.size(); ++v)
        if (deg[v] == dmax) return {v, dmax};
    }
    for (NodeId v = 0; v < deg.size(); ++v)
      if (!selected[v]) return {v, 0};
    throw std::logic_error("all nodes selected");
  }
};

// ---------------------------------------------------------------------------
// Naive threshold run over a pre-recorded stream
// ---------------------------------------------------------------------------

struct NaiveRun {
  std::vector<NodeId> solution;  // selection order
  int64_t d_s = 0;
  uint64_t samples = 0;          // stream entries consumed (empties included)
  uint64_t full_elements = 0;    // sum of |e| over nonempty consumed entries
};

class NaiveBca {
 public:
  NaiveBca(NodeId n, uint32_t k, int64_t z, BoundKind bound)
      : n_(n), k_(k), z_(z), bound_(bound), selected_(n, 0), covered_(n, 0) {}

  // stream must hold enough entries to finish; throws otherwise
  NaiveRun run(const std::vector<Hyperedge>& stream) {
    size_t pos = 0;
    NaiveRun out;
    for (uint32_t i = 0; i < k_; ++i) {
      while (bound() < static_cast<double>(z_)) {
        if (pos >= stream.size()) throw std::logic_error("naive run ran out of stream");
        consume(stream[pos++], out);
      }
      select(out);
    }
    out.solution = solution_;
    out.d_s = d_s_;
    out.samples = pos;
    return out;
  }

 private:
  NodeId n_;
  uint32_t k_;
  int64_t z_;
  BoundKind bound_;
  std::vector<Hyperedge> live_;
  std::vector<uint8_t> selected_;
  std::vector<uint32_t> covered_;
  std::vector<NodeId> solution_;
  int64_t d_s_ = 0;

  std::vector<uint32_t> degrees() const {
    std::vector<uint32_t> deg(n_, 0);
    for (const Hyperedge& e : live_)
      for (NodeId v : e) ++deg[v];
    return deg;
  }

  double bound() const {
    const std::vector<uint32_t> deg = degrees();
    const uint32_t dmax = *std::max_element(deg.begin(), deg.end());
    if (bound_ == BoundKind::requirement)
      return static_cast<double>(d_s_ + static_cast<int64_t>(k_) * dmax);
    if (bound_ == BoundKind::topk) {
      std::vector<uint32_t> s = deg;
      std::sort(s.begin(), s.end(), std::greater<>());
      int64_t top = 0;
      for (uint32_t i = 0; i < std::min<size_t>(k_, s.size()); ++i) top += s[i];
      return static_cast<double>(d_s_ + top);
    }
    std::vector<CovTerm> terms;
    for (NodeId v = 0; v < n_; ++v)
      if (covered_[v] > 0)
        terms.push_back({static_cast<double>(deg[v]) + covered_[v],
                         static_cast<double>(covered_[v])});
    return f_df2d(d_s_, k_, dmax, terms);
  }

  void consume(const Hyperedge& e, NaiveRun& out) {
    out.full_elements += e.size();
    if (e.empty()) return;
    bool hit = false;
    for (NodeId v : e) hit = hit || selected_[v];
    if (hit) {
      ++d_s_;
      for (NodeId v : e) ++covered_[v];
    } else {
      live_.push_back(e);
    }
  }

  void select(NaiveRun&) {
    const std::vector<uint32_t> deg = degrees();
    NodeId u = n_;
    uint32_t dmax = 0;
    for (NodeId v = 0; v < n_; ++v)
      if (deg[v] > dmax) {
        dmax = deg[v];
        u = v;
      }
    if (u == n_) {
      for (NodeId v = 0; v < n_; ++v)
        if (!selected_[v]) {
          u = v;
          break;
        }
      if (u == n_) throw std::logic_error("all nodes selected");
    }
    selected_[u] = 1;
    solution_.push_back(u);
    std::vector<Hyperedge> keep;
    for (Hyperedge& e : live_) {
      if (std::binary_search(e.begin(), e.end(), u)) {
        ++d_s_;
        for (NodeId v : e) ++covered_[v];
      } else {
        keep.push_back(std::move(e));
      }
    }
    live_ = std::move(keep);
  }
};

// ---------------------------------------------------------------------------
// Exhaustive budgeted optimum (subset DFS, coverage with multiplicity)
// ---------------------------------------------------------------------------

inline uint64_t budgeted_opt(const std::vector<Hyperedge>& edges, NodeId n,
                             const std::vector<double>& cost, double budget) {
  uint64_t best = 0;
  std::vector<NodeId> set;
  const std::function<void(NodeId, double)> dfs = [&](NodeId next, double left) {
    best = std::max(best, coverage_count(edges, set, n));
    for (NodeId v = next; v < n; ++v) {
      if (cost[v] > left) continue;
      set.push_back(v);
      dfs(v + 1, left - cost[v]);
      set.pop_back();
    }
  };
  dfs(0, budget);
  return best;
}

// ---------------------------------------------------------------------------
// Statistics helpers
// ---------------------------------------------------------------------------

// observed count vs binomial(trials, p), within sigmas standard deviations
inline bool binomial_close(uint64_t count, uint64_t trials, double p, double sigmas) {
  const double mean = static_cast<double>(trials) * p;
  const double sd = std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
  return std::abs(static_cast<double>(count) - mean) <= sigmas * sd + 1e-9;
}

// exact integer form of d_s >= (1 - (1-1/k)^k) * z, i.e.
// d_s * k^k >= z * (k^k - (k-1)^k)
inline bool rho_contract_holds(int64_t d_s, int64_t z, uint32_t k) {
  unsigned __int128 kk = 1, k1k = 1;
  for (uint32_t i = 0; i < k; ++i) {
    kk *= k;
    k1k *= k - 1;
  }
  return static_cast<unsigned __int128>(d_s) * kk >=
         static_cast<unsigned __int128>(z) * (kk - k1k);
}

}  // namespace hypercover::testing
