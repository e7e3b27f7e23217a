#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rng.hpp"

namespace hypercover {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

uint64_t parse_id(const std::string& tok, uint64_t line_no) {
  uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": bad node id '" + tok + "'");
  return v;
}

double parse_prob(const std::string& tok, uint64_t line_no) {
  try {
    size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (!(v > 0.0 && v <= 1.0))
      throw Error(ErrorCode::parse,
                  "line " + std::to_string(line_no) + ": probability must lie in (0,1]");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse,
                "line " + std::to_string(line_no) + ": bad probability '" + tok + "'");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  return in;
}

NodeId intern(uint64_t id, std::unordered_map<uint64_t, NodeId>& dense,
              std::vector<uint64_t>& orig) {
  const auto [it, fresh] = dense.try_emplace(id, static_cast<NodeId>(orig.size()));
  if (fresh) orig.push_back(id);
  return it->second;
}

}  // namespace

Graph load_graph(const std::string& path, bool directed) {
  auto in = open_or_throw(path);

  struct Arc {
    NodeId u, v;
    double p;
  };
  std::vector<Arc> arcs;
  Graph g;
  g.directed = directed;

  int have_probs = -1;  // -1 undecided, then locked by the first arc line
  std::string line, tok;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    std::vector<std::string> toks;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() < 2 || toks.size() > 3)
      throw Error(ErrorCode::parse,
                  "line " + std::to_string(line_no) + ": expected 'u v' or 'u v p'");
    const bool with_p = toks.size() == 3;
    if (have_probs == -1)
      have_probs = with_p;
    else if (have_probs != static_cast<int>(with_p))
      throw Error(ErrorCode::parse,
                  "line " + std::to_string(line_no) + ": inconsistent arc format");
    const NodeId u = intern(parse_id(toks[0], line_no), g.dense, g.orig);
    const NodeId v = intern(parse_id(toks[1], line_no), g.dense, g.orig);
    const double p = with_p ? parse_prob(toks[2], line_no) : 0.0;
    arcs.push_back({u, v, p});
    if (!directed && u != v) arcs.push_back({v, u, p});
  }
  g.n = static_cast<NodeId>(g.orig.size());

  // drop duplicate arcs, first occurrence wins
  std::vector<uint32_t> idx(arcs.size());
  for (uint32_t i = 0; i < arcs.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    return std::tie(arcs[a].u, arcs[a].v) < std::tie(arcs[b].u, arcs[b].v);
  });
  std::vector<Arc> uniq;
  uniq.reserve(arcs.size());
  for (uint32_t i : idx) {
    if (!uniq.empty() && uniq.back().u == arcs[i].u && uniq.back().v == arcs[i].v) continue;
    uniq.push_back(arcs[i]);
  }

  g.out_off.assign(g.n + 1, 0);
  g.in_off.assign(g.n + 1, 0);
  for (const Arc& a : uniq) {
    ++g.out_off[a.u + 1];
    ++g.in_off[a.v + 1];
  }
  for (NodeId i = 0; i < g.n; ++i) {
    g.out_off[i + 1] += g.out_off[i];
    g.in_off[i + 1] += g.in_off[i];
  }
  g.out_adj.resize(uniq.size());
  g.in_adj.resize(uniq.size());
  if (have_probs == 1) g.in_prob.resize(uniq.size());
  std::vector<uint64_t> op(g.out_off.begin(), g.out_off.end() - 1);
  std::vector<uint64_t> ip(g.in_off.begin(), g.in_off.end() - 1);
  for (const Arc& a : uniq) {
    g.out_adj[op[a.u]++] = a.v;
    const uint64_t slot = ip[a.v]++;
    g.in_adj[slot] = a.u;
    if (have_probs == 1) g.in_prob[slot] = a.p;
  }
  return g;
}

void assign_weights(Graph& g, const std::string& model, uint64_t seed) {
  if (!g.directed)
    throw Error(ErrorCode::invalid_argument, "weight models need a directed graph");
  g.in_prob.assign(g.in_adj.size(), 0.0);
  if (model == "wc") {
    for (NodeId v = 0; v < g.n; ++v) {
      const uint64_t deg = g.in_off[v + 1] - g.in_off[v];
      for (uint64_t s = g.in_off[v]; s < g.in_off[v + 1]; ++s)
        g.in_prob[s] = 1.0 / static_cast<double>(deg);
    }
  } else if (model == "tri") {
    static constexpr double kLevels[3] = {0.1, 0.01, 0.001};
    SampleRng rng(seed, 0x7269ULL);  // one deterministic stream over arcs in storage order
    for (double& p : g.in_prob) p = kLevels[rng.below(3)];
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown weight model '" + model + "'");
  }
}

Hypergraph load_hypergraph(const std::string& path) {
  auto in = open_or_throw(path);
  Hypergraph h;
  std::string line, tok;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    Hyperedge e;
    while (ss >> tok) e.push_back(intern(parse_id(tok, line_no), h.dense, h.orig));
    if (e.empty()) continue;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    h.edges.push_back(std::move(e));
  }
  h.n = static_cast<NodeId>(h.orig.size());
  return h;
}

}  // namespace hypercover
