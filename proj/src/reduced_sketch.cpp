#include "reduced_sketch.hpp"

#include <algorithm>
#include <cassert>

namespace hypercover {

ReducedSketch::ReducedSketch(NodeId n, uint32_t k) : n_(n), incidence_(n), heap_(n, k) {}

uint64_t ReducedSketch::add_hyperedge(const Hyperedge& e) {
  if (e.empty()) return kNoSlot;
  assert(std::is_sorted(e.begin(), e.end()) && std::adjacent_find(e.begin(), e.end()) == e.end());
  const uint64_t slot = edges_.size();
  edges_.push_back({pool_.size(), static_cast<uint32_t>(e.size()), false});
  for (NodeId v : e) {
    assert(v < n_);
    pool_.push_back(v);
    incidence_[v].push_back(slot);
    heap_.increment(v);
  }
  touched_ += 2 * e.size();
  live_edge_count_ += 1;
  live_elements_ += e.size();
  peak_elements_ = std::max(peak_elements_, live_elements_);
  peak_max_degree_ = std::max(peak_max_degree_, heap_.max_degree());
  return slot;
}

uint64_t ReducedSketch::remove_covered_by(
    NodeId u, const std::function<void(std::span<const NodeId>)>& on_removed) {
  uint64_t removed = 0;
  touched_ += incidence_[u].size();
  for (uint64_t slot : incidence_[u]) {
    EdgeRec& rec = edges_[slot];
    if (rec.dead) continue;
    const std::span<const NodeId> nodes(pool_.data() + rec.offset, rec.len);
    if (on_removed) on_removed(nodes);
    for (NodeId v : nodes) heap_.decrement(v);
    rec.dead = true;
    touched_ += rec.len;
    live_edge_count_ -= 1;
    live_elements_ -= rec.len;
    trash_ += rec.len;  // every incidence entry of this edge is now dead
    removed += 1;
  }
  // u's own incidence list is left in place; its entries are trash now and
  // vanish at the next rebuild (u is never scanned again once selected)
  maybe_compact();
  return removed;
}

void ReducedSketch::maybe_compact() {
  if (3 * trash_ > trash_ + live_elements_) compact();
}

void ReducedSketch::compact() {
  std::vector<NodeId> pool;
  pool.reserve(live_elements_);
  std::vector<EdgeRec> edges;
  edges.reserve(live_edge_count_);
  for (auto& list : incidence_) list.clear();
  for (const EdgeRec& rec : edges_) {
    if (rec.dead) continue;
    const uint64_t slot = edges.size();
    edges.push_back({pool.size(), rec.len, false});
    for (uint32_t i = 0; i < rec.len; ++i) {
      const NodeId v = pool_[rec.offset + i];
      pool.push_back(v);
      incidence_[v].push_back(slot);
    }
  }
  pool_ = std::move(pool);
  edges_ = std::move(edges);
  touched_ += 2 * live_elements_;
  trash_ = 0;
  compactions_ += 1;
}

void ReducedSketch::for_each_live_edge(
    const std::function<void(std::span<const NodeId>)>& fn) const {
  for (const EdgeRec& rec : edges_) {
    if (rec.dead) continue;
    fn(std::span<const NodeId>(pool_.data() + rec.offset, rec.len));
  }
}

}  // namespace hypercover
