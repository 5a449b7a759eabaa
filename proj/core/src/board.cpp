#include "memdom/board.hpp"

#include "memdom/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace memdom {

Board::Board(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (const Cell& c : cells_)
    if (c.row < 0 || c.col < 0)
      throw std::invalid_argument("Board: cell coordinates must be nonnegative");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Board Board::grid_board(int k) {
  std::vector<Cell> cells;
  for (const auto& e : grid_graph(k).edges) cells.push_back(grid_cell_of_edge(k, e));
  return Board(std::move(cells));
}

bool Board::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Board Board::without_cell(Cell c) const {
  if (!contains(c)) throw std::invalid_argument("Board: cell not on the board");
  std::vector<Cell> rest;
  rest.reserve(cells_.size() - 1);
  for (const Cell& e : cells_)
    if (e != c) rest.push_back(e);
  return Board(std::move(rest));
}

Board Board::without_row_and_col(Cell c) const {
  std::vector<Cell> rest;
  for (const Cell& e : cells_)
    if (e.row != c.row && e.col != c.col) rest.push_back(e);
  return Board(std::move(rest));
}

IntPoly board_rook_polynomial(const Board& b) {
  if (b.size() > kMaxBoardCells)
    throw std::length_error("board_rook_polynomial: board too large for brute force");
  // Compress row/column labels so occupancy fits in bit masks.
  std::map<int, int> rows, cols;
  for (const Cell& c : b.cells()) {
    rows.emplace(c.row, 0);
    cols.emplace(c.col, 0);
  }
  int r = 0, q = 0;
  for (auto& [key, id] : rows) id = r++;
  for (auto& [key, id] : cols) id = q++;
  std::vector<std::pair<int, int>> cells;
  for (const Cell& c : b.cells()) cells.emplace_back(rows[c.row], cols[c.col]);

  std::vector<BigInt> counts(cells.size() + 1, BigInt(0));
  // Each subset of pairwise non-attacking cells is reached exactly once.
  auto rec = [&](auto&& self, size_t idx, std::uint32_t used_rows, std::uint32_t used_cols,
                 int placed) -> void {
    if (idx == cells.size()) {
      counts[static_cast<size_t>(placed)] += 1;
      return;
    }
    self(self, idx + 1, used_rows, used_cols, placed);
    const auto [row, col] = cells[idx];
    if (!((used_rows >> row) & 1u) && !((used_cols >> col) & 1u))
      self(self, idx + 1, used_rows | (1u << row), used_cols | (1u << col), placed + 1);
  };
  rec(rec, 0, 0, 0, 0);
  return IntPoly(std::move(counts));
}

std::pair<Board, Board> develop(const Board& b, Cell c) {
  if (!b.contains(c)) throw std::invalid_argument("develop: cell not on the board");
  return {b.without_cell(c), b.without_row_and_col(c)};
}

Cell grid_cell_of_edge(int k, std::pair<int, int> edge) {
  auto [a, b] = edge;
  if (a > b) std::swap(a, b);
  const int ra = a % 2, ca = a / 2;
  const int rb = b % 2, cb = b / 2;
  if (a < 0 || b >= 2 * k) throw std::invalid_argument("grid_cell_of_edge: vertex out of range");
  if (ca == cb && ra == 0 && rb == 1) return Cell{ca, ca};  // vertical edge
  if (ra == rb && cb == ca + 1) {
    // Horizontal edge: the black endpoint (row == col parity) names the column.
    if (ca % 2 == ra) return Cell{cb, ca};  // lower diagonal
    return Cell{ca, cb};                    // upper diagonal
  }
  throw std::invalid_argument("grid_cell_of_edge: not a 2 x k grid edge");
}

std::pair<int, int> grid_edge_of_cell(int k, Cell c) {
  auto check = [k](int v) {
    if (v < 0 || v >= 2 * k) throw std::invalid_argument("grid_edge_of_cell: cell out of range");
    return v;
  };
  if (c.row == c.col) {
    return {check(grid_vertex(0, c.col)), check(grid_vertex(1, c.col))};
  }
  if (c.row == c.col + 1) {  // lower diagonal: row of the black vertex at c.col
    const int r = c.col % 2;
    return {check(grid_vertex(r, c.col)), check(grid_vertex(r, c.col + 1))};
  }
  if (c.col == c.row + 1) {  // upper diagonal: black vertex at c.col
    const int r = c.col % 2;
    return {check(grid_vertex(r, c.row)), check(grid_vertex(r, c.col))};
  }
  throw std::invalid_argument("grid_edge_of_cell: cell not on the three diagonals");
}

}  // namespace memdom
