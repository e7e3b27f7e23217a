#include "stepwise_heap.hpp"

#include <cassert>
#include <numeric>

namespace hypercover {

StepwiseHeap::StepwiseHeap(NodeId n, uint32_t k) : n_(n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "heap needs at least one node");
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be positive");
  threshold_ = k >= n ? 0 : n - k;
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), NodeId{0});
  position_ = order_;
  degree_.assign(n, 0);
  bucket_start_ = {0, n};  // bucket 0 spans everything; boundary of bucket 1 is n
}

void StepwiseHeap::swap_positions(NodeId pa, NodeId pb) {
  if (pa == pb) {
    touched_ += 1;
    return;
  }
  const NodeId a = order_[pa], b = order_[pb];
  order_[pa] = b;
  order_[pb] = a;
  position_[a] = pb;
  position_[b] = pa;
  touched_ += 4;
}

void StepwiseHeap::increment(NodeId v) {
  const uint32_t d = degree_[v];
  assert(bucket_start_.size() >= d + 2);
  const NodeId last = bucket_start_[d + 1] - 1;  // final slot of bucket d
  swap_positions(position_[v], last);
  bucket_start_[d + 1] = last;
  if (bucket_start_.size() == d + 2) bucket_start_.push_back(n_);
  degree_[v] = d + 1;
  touched_ += 2;
  if (last >= threshold_) {
    ++top_k_sum_;
    touched_ += 1;
  }
}

void StepwiseHeap::decrement(NodeId v) {
  const uint32_t d = degree_[v];
  assert(d >= 1);
  const NodeId first = bucket_start_[d];
  swap_positions(position_[v], first);
  bucket_start_[d] = first + 1;
  degree_[v] = d - 1;
  touched_ += 2;
  if (first >= threshold_) {
    --top_k_sum_;
    touched_ += 1;
  }
}

std::pair<NodeId, uint32_t> StepwiseHeap::max_degree_node(
    const std::vector<uint8_t>& selected) const {
  const uint32_t dmax = max_degree();
  if (dmax > 0) {
    // selected nodes always sit at degree 0, so the whole bucket qualifies
    NodeId best = order_[bucket_start_[dmax]];
    for (NodeId p = bucket_start_[dmax] + 1; p < n_; ++p) best = std::min(best, order_[p]);
    return {best, dmax};
  }
  for (NodeId v = 0; v < n_; ++v)
    if (!selected[v]) return {v, 0};
  throw Error(ErrorCode::domain, "budget exceeds node count");
}

}  // namespace hypercover
