#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace hypercover {

// Scratch for one generating thread; reused across samples so BFS allocations
// happen once
struct OracleWorkspace {
  std::vector<uint32_t> stamp_a, stamp_b;
  std::vector<uint32_t> dist_a, dist_b;
  std::vector<NodeId> queue;
  uint32_t epoch_a = 0, epoch_b = 0;

  void ensure(NodeId n) {
    if (stamp_a.size() < n) {
      stamp_a.assign(n, 0);
      stamp_b.assign(n, 0);
      dist_a.assign(n, 0);
      dist_b.assign(n, 0);
      epoch_a = epoch_b = 0;
    }
  }

  // stamps are epoch marks; on the (rare) wrap the arrays are re-zeroed
  uint32_t next_epoch_a() {
    if (epoch_a == UINT32_MAX) {
      std::fill(stamp_a.begin(), stamp_a.end(), 0);
      epoch_a = 0;
    }
    return ++epoch_a;
  }
  uint32_t next_epoch_b() {
    if (epoch_b == UINT32_MAX) {
      std::fill(stamp_b.begin(), stamp_b.end(), 0);
      epoch_b = 0;
    }
    return ++epoch_b;
  }
};

// A sampling access to an implicit weighted hypergraph: sample index i maps
// deterministically to one hyperedge, drawn with probability equal to its
// weight. generate() is const and thread-safe; the mutable part is just the
// position counter that streams advance.
class SampleOracle {
 public:
  explicit SampleOracle(uint64_t seed) : seed_(seed) {}
  virtual ~SampleOracle() = default;

  virtual NodeId num_nodes() const = 0;

  // out is sorted and duplicate-free; may be empty
  virtual void generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const = 0;

  // dense -> original id table, or nullptr when dense ids are the real ids
  virtual const std::vector<uint64_t>* orig_ids() const { return nullptr; }

  uint64_t seed() const { return seed_; }
  uint64_t samples_drawn() const { return counter_; }
  uint64_t claim_next() { return counter_++; }
  void rewind(uint64_t to) { counter_ = to; }

 protected:
  uint64_t seed_;

 private:
  uint64_t counter_ = 0;
};

// uniform over the stored hyperedge multiset
class ExplicitOracle final : public SampleOracle {
 public:
  ExplicitOracle(std::shared_ptr<const Hypergraph> h, uint64_t seed);
  NodeId num_nodes() const override { return h_->n; }
  void generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const override;
  const std::vector<uint64_t>* orig_ids() const override { return &h_->orig; }

 private:
  std::shared_ptr<const Hypergraph> h_;
};

// hyperedge = the set of nodes within `hops` of a uniform target, following
// arcs backwards in directed graphs (the nodes that would dominate it)
class DomsetOracle final : public SampleOracle {
 public:
  DomsetOracle(std::shared_ptr<const Graph> g, uint32_t hops, uint64_t seed);
  NodeId num_nodes() const override { return g_->n; }
  void generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const override;
  const std::vector<uint64_t>* orig_ids() const override { return &g_->orig; }

 private:
  std::shared_ptr<const Graph> g_;
  uint32_t hops_;
};

// hyperedge = reverse reachable set of a uniform target under independent
// arc coins (each in-arc of a dequeued node flips exactly once per sample)
class RisIcOracle final : public SampleOracle {
 public:
  RisIcOracle(std::shared_ptr<const Graph> g, uint64_t seed);
  NodeId num_nodes() const override { return g_->n; }
  void generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const override;
  const std::vector<uint64_t>* orig_ids() const override { return &g_->orig; }

 private:
  std::shared_ptr<const Graph> g_;
};

// hyperedge = all nodes on some shortest s-t path for a uniform ordered pair
// s != t; disconnected pairs yield the empty hyperedge (still a sample)
class LandmarkOracle final : public SampleOracle {
 public:
  LandmarkOracle(std::shared_ptr<const Graph> g, uint64_t seed);
  NodeId num_nodes() const override { return g_->n; }
  void generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const override;
  const std::vector<uint64_t>* orig_ids() const override { return &g_->orig; }

 private:
  std::shared_ptr<const Graph> g_;
};

// ---- streams --------------------------------------------------------------

// single-consumer view that hands out samples in index order
class SampleStream {
 public:
  virtual ~SampleStream() = default;
  virtual void next(Hyperedge& out) = 0;
};

// workers > 1 prefetches with a bounded ring; because samples are pure
// functions of (seed, index) and the consumer drains in index order, results
// are bit-identical for every worker count
std::unique_ptr<SampleStream> make_stream(SampleOracle& oracle, uint32_t workers);

}  // namespace hypercover
