#include "oracles.hpp"

#include <algorithm>
#include <condition_variable>
#include <mutex>

namespace hypercover {

ExplicitOracle::ExplicitOracle(std::shared_ptr<const Hypergraph> h, uint64_t seed)
    : SampleOracle(seed), h_(std::move(h)) {
  if (!h_ || h_->edges.empty())
    throw Error(ErrorCode::invalid_argument, "explicit oracle needs at least one hyperedge");
}

void ExplicitOracle::generate(uint64_t index, OracleWorkspace&, Hyperedge& out) const {
  SampleRng rng(seed_, index);
  out = h_->edges[rng.below(h_->edges.size())];
}

DomsetOracle::DomsetOracle(std::shared_ptr<const Graph> g, uint32_t hops, uint64_t seed)
    : SampleOracle(seed), g_(std::move(g)), hops_(hops) {
  if (!g_ || g_->n == 0) throw Error(ErrorCode::invalid_argument, "empty graph");
  if (hops == 0) throw Error(ErrorCode::invalid_argument, "hop radius must be at least 1");
}

void DomsetOracle::generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const {
  const Graph& g = *g_;
  ws.ensure(g.n);
  SampleRng rng(seed_, index);
  const NodeId target = static_cast<NodeId>(rng.below(g.n));

  // nodes that reach `target` within hops_ steps = BFS over in-arcs
  const uint32_t epoch = ws.next_epoch_a();
  ws.stamp_a[target] = epoch;
  ws.dist_a[target] = 0;
  ws.queue.clear();
  ws.queue.push_back(target);
  for (size_t head = 0; head < ws.queue.size(); ++head) {
    const NodeId x = ws.queue[head];
    if (ws.dist_a[x] == hops_) continue;
    for (uint64_t s = g.in_off[x]; s < g.in_off[x + 1]; ++s) {
      const NodeId w = g.in_adj[s];
      if (ws.stamp_a[w] == epoch) continue;
      ws.stamp_a[w] = epoch;
      ws.dist_a[w] = ws.dist_a[x] + 1;
      ws.queue.push_back(w);
    }
  }
  out.assign(ws.queue.begin(), ws.queue.end());
  std::sort(out.begin(), out.end());
}

RisIcOracle::RisIcOracle(std::shared_ptr<const Graph> g, uint64_t seed)
    : SampleOracle(seed), g_(std::move(g)) {
  if (!g_ || g_->n == 0) throw Error(ErrorCode::invalid_argument, "empty graph");
  if (!g_->has_probs())
    throw Error(ErrorCode::invalid_argument, "arc probabilities missing; assign weights first");
}

void RisIcOracle::generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const {
  const Graph& g = *g_;
  ws.ensure(g.n);
  SampleRng rng(seed_, index);
  const NodeId target = static_cast<NodeId>(rng.below(g.n));

  const uint32_t epoch = ws.next_epoch_a();
  ws.stamp_a[target] = epoch;
  ws.queue.clear();
  ws.queue.push_back(target);
  for (size_t head = 0; head < ws.queue.size(); ++head) {
    const NodeId x = ws.queue[head];
    for (uint64_t s = g.in_off[x]; s < g.in_off[x + 1]; ++s) {
      // one coin per in-arc of a dequeued node: each arc is examined at most
      // once per sample, so the draw order is fixed by the BFS order
      const bool live = rng.uniform01() < g.in_prob[s];
      const NodeId w = g.in_adj[s];
      if (!live || ws.stamp_a[w] == epoch) continue;
      ws.stamp_a[w] = epoch;
      ws.queue.push_back(w);
    }
  }
  out.assign(ws.queue.begin(), ws.queue.end());
  std::sort(out.begin(), out.end());
}

LandmarkOracle::LandmarkOracle(std::shared_ptr<const Graph> g, uint64_t seed)
    : SampleOracle(seed), g_(std::move(g)) {
  if (!g_ || g_->n < 2)
    throw Error(ErrorCode::invalid_argument, "landmark oracle needs at least two nodes");
  if (g_->directed)
    throw Error(ErrorCode::invalid_argument, "landmark oracle needs an undirected graph");
}

namespace {

void bfs_all(const Graph& g, NodeId src, std::vector<uint32_t>& stamp, uint32_t epoch,
             std::vector<uint32_t>& dist, std::vector<NodeId>& queue) {
  stamp[src] = epoch;
  dist[src] = 0;
  queue.clear();
  queue.push_back(src);
  for (size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (uint64_t s = g.out_off[x]; s < g.out_off[x + 1]; ++s) {
      const NodeId w = g.out_adj[s];
      if (stamp[w] == epoch) continue;
      stamp[w] = epoch;
      dist[w] = dist[x] + 1;
      queue.push_back(w);
    }
  }
}

}  // namespace

void LandmarkOracle::generate(uint64_t index, OracleWorkspace& ws, Hyperedge& out) const {
  const Graph& g = *g_;
  ws.ensure(g.n);
  SampleRng rng(seed_, index);
  const NodeId s = static_cast<NodeId>(rng.below(g.n));
  NodeId t = static_cast<NodeId>(rng.below(g.n - 1));
  if (t >= s) ++t;  // uniform over ordered pairs with s != t

  const uint32_t ea = ws.next_epoch_a();
  bfs_all(g, s, ws.stamp_a, ea, ws.dist_a, ws.queue);
  out.clear();
  if (ws.stamp_a[t] != ea) return;  // disconnected pair: empty hyperedge, still a sample
  const uint32_t d_st = ws.dist_a[t];
  const uint32_t eb = ws.next_epoch_b();
  bfs_all(g, t, ws.stamp_b, eb, ws.dist_b, ws.queue);
  for (NodeId u = 0; u < g.n; ++u) {
    if (ws.stamp_a[u] != ea || ws.stamp_b[u] != eb) continue;
    if (ws.dist_a[u] + ws.dist_b[u] == d_st) out.push_back(u);  // u lies on a shortest path
  }
}

// ---- streams ----------------------------------------------------------------

namespace {

class DirectStream final : public SampleStream {
 public:
  explicit DirectStream(SampleOracle& o) : oracle_(o) {}
  void next(Hyperedge& out) override { oracle_.generate(oracle_.claim_next(), ws_, out); }

 private:
  SampleOracle& oracle_;
  OracleWorkspace ws_;
};

class PrefetchStream final : public SampleStream {
 public:
  PrefetchStream(SampleOracle& o, uint32_t workers)
      : oracle_(o),
        base_(o.samples_drawn()),
        cap_(4 * static_cast<uint64_t>(workers) + 4),
        ring_(cap_),
        ready_(cap_, 0) {
    threads_.reserve(workers);
    for (uint32_t j = 0; j < workers; ++j)
      threads_.emplace_back([this, j, workers] { run_worker(j, workers); });
  }

  ~PrefetchStream() override {
    {
      std::lock_guard lk(mu_);
      stop_ = true;
    }
    room_.notify_all();
    for (auto& t : threads_) t.join();
    // unconsumed prefetched samples are handed back; generation is pure, so
    // the next stream regenerates them identically
    oracle_.rewind(base_ + next_);
  }

  void next(Hyperedge& out) override {
    std::unique_lock lk(mu_);
    const uint64_t slot = next_ % cap_;
    avail_.wait(lk, [&] { return ready_[slot] != 0; });
    out = std::move(ring_[slot]);
    ready_[slot] = 0;
    ++next_;
    room_.notify_all();
  }

 private:
  void run_worker(uint32_t j, uint32_t workers) {
    OracleWorkspace ws;
    Hyperedge buf;
    for (uint64_t rel = j;; rel += workers) {
      {
        std::unique_lock lk(mu_);
        room_.wait(lk, [&] { return stop_ || rel < next_ + cap_; });
        if (stop_) return;
      }
      oracle_.generate(base_ + rel, ws, buf);
      {
        std::lock_guard lk(mu_);
        if (stop_) return;
        ring_[rel % cap_] = buf;
        ready_[rel % cap_] = 1;
      }
      avail_.notify_all();
    }
  }

  SampleOracle& oracle_;
  const uint64_t base_;
  const uint64_t cap_;
  std::vector<Hyperedge> ring_;
  std::vector<uint8_t> ready_;
  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable avail_, room_;
  uint64_t next_ = 0;
  bool stop_ = false;
};

}  // namespace

std::unique_ptr<SampleStream> make_stream(SampleOracle& oracle, uint32_t workers) {
  if (workers <= 1) return std::make_unique<DirectStream>(oracle);
  return std::make_unique<PrefetchStream>(oracle, workers);
}

}  // namespace hypercover
