#include "memdom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace memdom {

Graph grid_graph(int k) {
  if (k < 0) throw std::invalid_argument("grid_graph: k must be >= 0");
  Graph g;
  g.n = 2 * k;
  for (int j = 0; j < k; ++j) {
    g.edges.emplace_back(grid_vertex(0, j), grid_vertex(1, j));
    if (j + 1 < k) {
      g.edges.emplace_back(grid_vertex(0, j), grid_vertex(0, j + 1));
      g.edges.emplace_back(grid_vertex(1, j), grid_vertex(1, j + 1));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Graph delete_vertices(const Graph& g, std::uint32_t removed_mask) {
  Graph out;
  out.n = g.n;
  for (const auto& [a, b] : g.edges)
    if (!((removed_mask >> a) & 1u) && !((removed_mask >> b) & 1u)) out.edges.emplace_back(a, b);
  return out;
}

namespace {

class MatchingSolver {
 public:
  explicit MatchingSolver(const Graph& g) : n_(g.n), adj_(static_cast<size_t>(g.n)) {
    for (const auto& [a, b] : g.edges) {
      if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
        throw std::invalid_argument("matching_polynomial: malformed edge");
      adj_[static_cast<size_t>(a)].push_back(b);
      adj_[static_cast<size_t>(b)].push_back(a);
    }
  }

  const IntPoly& solve(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    // Lowest live vertex with a live neighbor; a matching either leaves it
    // unmatched or uses one of its edges.
    int u = -1;
    for (int v = 0; v < n_; ++v) {
      if (!((mask >> v) & 1u)) continue;
      for (int nb : adj_[static_cast<size_t>(v)]) {
        if ((mask >> nb) & 1u) {
          u = v;
          break;
        }
      }
      if (u >= 0) break;
    }
    if (u < 0) return memo_.emplace(mask, IntPoly{1}).first->second;
    IntPoly res = solve(mask & ~(1u << u));
    for (int nb : adj_[static_cast<size_t>(u)]) {
      if (!((mask >> nb) & 1u)) continue;
      res += solve(mask & ~(1u << u) & ~(1u << nb)).shifted(1);
    }
    return memo_.emplace(mask, std::move(res)).first->second;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::map<std::uint32_t, IntPoly> memo_;
};

}  // namespace

IntPoly matching_polynomial(const Graph& g) {
  if (g.n > kMaxMatchingVertices)
    throw std::length_error("matching_polynomial: graph too large for brute force");
  MatchingSolver solver(g);
  const std::uint32_t all = g.n == 32 ? 0xffffffffu : ((1u << g.n) - 1u);
  return solver.solve(all);
}

GridGraph GridGraph::full(int k) {
  GridGraph g;
  g.k = k;
  g.vertex_mask = k == 16 ? 0xffffffffu : ((1u << (2 * k)) - 1u);
  return g;
}

Graph GridGraph::graph() const {
  return delete_vertices(grid_graph(k), ~vertex_mask);
}

GridMatchingOracle::GridMatchingOracle(int k) : k_(k) {
  if (2 * k > kMaxMatchingVertices)
    throw std::length_error("GridMatchingOracle: grid too large for brute force");
  full_mask_ = (1u << (2 * k)) - 1u;
  const Graph g = grid_graph(k);
  adj_.resize(static_cast<size_t>(g.n));
  for (const auto& [a, b] : g.edges) {
    adj_[static_cast<size_t>(a)].push_back(b);
    adj_[static_cast<size_t>(b)].push_back(a);
  }
}

const IntPoly& GridMatchingOracle::mask_polynomial(std::uint32_t live_mask) {
  if (live_mask & ~full_mask_)
    throw std::invalid_argument("GridMatchingOracle: mask outside the grid");
  return compute(live_mask);
}

const IntPoly& GridMatchingOracle::compute(std::uint32_t mask) {
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;
  int u = -1;
  for (int v = 0; v < 2 * k_; ++v) {
    if (!((mask >> v) & 1u)) continue;
    for (int nb : adj_[static_cast<size_t>(v)]) {
      if ((mask >> nb) & 1u) {
        u = v;
        break;
      }
    }
    if (u >= 0) break;
  }
  if (u < 0) return memo_.emplace(mask, IntPoly{1}).first->second;
  IntPoly res = compute(mask & ~(1u << u));
  for (int nb : adj_[static_cast<size_t>(u)]) {
    if (!((mask >> nb) & 1u)) continue;
    res += compute(mask & ~(1u << u) & ~(1u << nb)).shifted(1);
  }
  return memo_.emplace(mask, std::move(res)).first->second;
}

}  // namespace memdom
