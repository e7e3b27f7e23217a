#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "types.hpp"

namespace hypercover {

// Directed or undirected graph in CSR form with node ids remapped to a dense
// range in first-appearance order. Original ids are kept for output.
// Undirected inputs materialize both arc directions, so in_* always answers
// "who reaches me" regardless of directedness.
struct Graph {
  bool directed = false;
  NodeId n = 0;
  std::vector<uint64_t> orig;  // dense -> original id
  std::unordered_map<uint64_t, NodeId> dense;

  std::vector<uint64_t> out_off;
  std::vector<NodeId> out_adj;
  std::vector<uint64_t> in_off;
  std::vector<NodeId> in_adj;
  std::vector<double> in_prob;  // parallel to in_adj; empty until assigned

  bool has_probs() const { return !in_prob.empty(); }
  uint64_t num_arcs() const { return out_adj.size(); }
};

struct Hypergraph {
  NodeId n = 0;
  std::vector<uint64_t> orig;
  std::unordered_map<uint64_t, NodeId> dense;
  std::vector<Hyperedge> edges;  // each sorted, duplicate-free, nonempty
};

// Edge list, one arc per line: "u v" or "u v p" with p in (0,1]. '#' starts a
// comment, blank lines are skipped, duplicate arcs are dropped (first wins).
// All arcs must agree on whether they carry a probability.
Graph load_graph(const std::string& path, bool directed);

// "wc": p(u->v) = 1 / in-degree(v).  "tri": p uniform over {0.1, 0.01, 0.001},
// drawn deterministically from seed. Directed graphs only.
void assign_weights(Graph& g, const std::string& model, uint64_t seed);

// One hyperedge per line: whitespace-separated node ids, '#' comments, blank
// lines skipped; duplicate ids within a line are deduped.
Hypergraph load_hypergraph(const std::string& path);

}  // namespace hypercover
