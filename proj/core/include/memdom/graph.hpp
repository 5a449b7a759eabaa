#pragma once

#include "memdom/int_poly.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace memdom {

inline constexpr int kMaxMatchingVertices = 24;

/// Small undirected simple graph on vertices 0..n-1. Kept tiny on purpose:
/// everything built on it is a brute-force oracle.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (a, b) with a < b
};

/// The 2 x k grid graph; vertex (row r in {0,1}, column j) has index 2j + r.
Graph grid_graph(int k);

/// Index of grid vertex (row, col).
inline int grid_vertex(int row, int col) { return 2 * col + row; }

/// Drops the masked vertices' incident edges (isolated vertices do not affect
/// matchings, so the vertex count is left unchanged).
Graph delete_vertices(const Graph& g, std::uint32_t removed_mask);

/// Matching generating polynomial: the coefficient of x^j counts the j-edge
/// matchings (sets of j pairwise non-adjacent edges). Constant term 1.
/// Throws std::length_error above kMaxMatchingVertices.
IntPoly matching_polynomial(const Graph& g);

/// A 2 x k grid with a subset of vertices retained.
struct GridGraph {
  int k = 0;
  std::uint32_t vertex_mask = 0;

  static GridGraph full(int k);
  /// The induced graph (edges with both endpoints retained).
  Graph graph() const;
};

/// Memoizing matching-polynomial evaluator for induced subgraphs of one 2 x k
/// grid, keyed by the live-vertex mask. Shared across many deletion patterns.
class GridMatchingOracle {
 public:
  explicit GridMatchingOracle(int k);
  int k() const { return k_; }
  std::uint32_t full_mask() const { return full_mask_; }
  const IntPoly& mask_polynomial(std::uint32_t live_mask);

 private:
  const IntPoly& compute(std::uint32_t live_mask);
  int k_;
  std::uint32_t full_mask_;
  std::vector<std::vector<int>> adj_;
  std::map<std::uint32_t, IntPoly> memo_;
};

}  // namespace memdom
