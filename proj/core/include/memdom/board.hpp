#pragma once

#include "memdom/int_poly.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace memdom {

inline constexpr int kMaxBoardCells = 16;

/// A board cell (row, column); rows index white grid vertices, columns black
/// ones under the checkerboard convention.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// A rook board: a finite set of cells. Non-attacking rook placements on the
/// cells correspond to matchings of the bipartite graph the board encodes.
class Board {
 public:
  Board() = default;
  explicit Board(std::vector<Cell> cells);

  /// The board of the 2 x k grid graph: the three-diagonal k x k board.
  static Board grid_board(int k);

  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;

  Board without_cell(Cell c) const;         // std::invalid_argument if absent
  Board without_row_and_col(Cell c) const;  // drops every cell in c's row or column

  friend bool operator==(const Board&, const Board&) = default;

 private:
  std::vector<Cell> cells_;  // sorted, unique
};

/// Rook polynomial by exhaustive placement enumeration (the oracle);
/// coefficient of x^j counts placements of j non-attacking rooks.
/// Throws std::length_error above kMaxBoardCells cells.
IntPoly board_rook_polynomial(const Board& b);

/// Develops the board at one cell: the rook polynomial of `b` equals that of
/// the first returned board plus x times that of the second.
std::pair<Board, Board> develop(const Board& b, Cell c);

/// Cell of the 2 x k grid board corresponding to a grid edge (vertex index
/// pair as produced by grid_graph): vertical edges map to the central
/// diagonal, horizontal edges to the upper/lower diagonals.
Cell grid_cell_of_edge(int k, std::pair<int, int> edge);

/// Inverse of grid_cell_of_edge.
std::pair<int, int> grid_edge_of_cell(int k, Cell c);

}  // namespace memdom
