#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "types.hpp"

namespace hypercover {

// Bucket-ordered degree structure with an O(1)-maintained sum of the k
// largest degrees.
//
// order_ holds every node id sorted by nondecreasing degree; position_ is its
// inverse; bucket_start_[d] is the first order_ index of degree-d nodes (one
// past-the-end boundary per populated degree). A degree change moves the node
// to the boundary of its bucket and shifts the boundary by one, so only a
// handful of cells are touched per update. Positions [n-k, n) always hold a
// valid top-k set; equal-degree swaps never change which degrees sit there,
// so top_k_sum_ is maintained by looking at one position per update.
class StepwiseHeap {
 public:
  StepwiseHeap(NodeId n, uint32_t k);

  void increment(NodeId v);
  void decrement(NodeId v);  // degree(v) must be >= 1

  uint32_t degree(NodeId v) const { return degree_[v]; }
  uint32_t max_degree() const { return n_ ? degree_[order_[n_ - 1]] : 0; }
  int64_t top_k_sum() const { return top_k_sum_; }
  NodeId num_nodes() const { return n_; }

  // Node of maximum degree among nodes not flagged in `selected`, smallest id
  // on ties; if every degree is zero, the smallest unselected id. Errors when
  // all nodes are selected.
  std::pair<NodeId, uint32_t> max_degree_node(const std::vector<uint8_t>& selected) const;

  // cumulative count of array cells written by increment/decrement; each op
  // touches a constant number
  uint64_t touched_cells() const { return touched_; }

 private:
  NodeId n_;
  NodeId threshold_;  // order_ positions >= threshold_ are the top-k window
  std::vector<NodeId> order_;
  std::vector<NodeId> position_;
  std::vector<uint32_t> degree_;
  std::vector<NodeId> bucket_start_;
  int64_t top_k_sum_ = 0;
  uint64_t touched_ = 0;

  void swap_positions(NodeId a_pos, NodeId b_pos);
};

}  // namespace hypercover
