#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stepwise_heap.hpp"
#include "types.hpp"

namespace hypercover {

// Store for the retained (uncovered) hyperedges of a run, with node→edge
// incidence for covered-edge eviction and a degree heap over live edges.
//
// Removal tombstones edges in place; a dead incidence entry counts as trash
// until the store is rebuilt. Rebuild triggers when more than a third of the
// tracked entries are trash, which keeps total maintenance work linear in the
// number of node occurrences ever inserted (see touched_cells()). The heap is
// never rebuilt — live degrees don't change during compaction.
class ReducedSketch {
 public:
  static constexpr uint64_t kNoSlot = UINT64_MAX;

  ReducedSketch(NodeId n, uint32_t k);

  // nodes must be sorted and duplicate-free; empty edges are not stored
  uint64_t add_hyperedge(const Hyperedge& e);

  // Tombstones every live edge containing u. on_removed (optional) sees each
  // removed edge's nodes before the edge dies. Returns edges removed.
  uint64_t remove_covered_by(NodeId u,
                             const std::function<void(std::span<const NodeId>)>& on_removed = {});

  std::pair<NodeId, uint32_t> max_degree_node(const std::vector<uint8_t>& selected) const {
    return heap_.max_degree_node(selected);
  }

  const StepwiseHeap& heap() const { return heap_; }
  uint32_t degree(NodeId v) const { return heap_.degree(v); }
  uint32_t max_degree() const { return heap_.max_degree(); }
  int64_t top_k_sum() const { return heap_.top_k_sum(); }

  NodeId num_nodes() const { return n_; }
  uint64_t live_edge_count() const { return live_edge_count_; }
  uint64_t live_elements() const { return live_elements_; }
  uint64_t trash_count() const { return trash_; }
  uint64_t peak_elements() const { return peak_elements_; }
  uint32_t peak_max_degree() const { return peak_max_degree_; }
  uint64_t compactions() const { return compactions_; }

  // cumulative store cells written/scanned; bounded by 8x total node
  // occurrences inserted (heap work is counted by the heap itself)
  uint64_t touched_cells() const { return touched_; }

  void for_each_live_edge(const std::function<void(std::span<const NodeId>)>& fn) const;

 private:
  struct EdgeRec {
    uint64_t offset;
    uint32_t len;
    bool dead;
  };

  NodeId n_;
  std::vector<NodeId> pool_;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<uint64_t>> incidence_;
  StepwiseHeap heap_;

  uint64_t live_edge_count_ = 0;
  uint64_t live_elements_ = 0;
  uint64_t trash_ = 0;
  uint64_t peak_elements_ = 0;
  uint32_t peak_max_degree_ = 0;
  uint64_t compactions_ = 0;
  uint64_t touched_ = 0;

  void maybe_compact();
  void compact();
};

}  // namespace hypercover
