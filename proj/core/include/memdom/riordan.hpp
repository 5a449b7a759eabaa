#pragma once

#include "memdom/int_poly.hpp"
#include "memdom/multi_series.hpp"

namespace memdom {

/// The five generating-function families in (x, y) for 2 x k grid rook
/// polynomials and the related staircase boards:
///   T(x,y) = (1 - xy) / (1 - y - 2xy - xy^2 + x^3 y^3)
///   s = T / (1 - xy)^2,  r = (1 - xy) s,  R = y r,
///   S = (1 - 2xy - xy^2 + x^3 y^3) s.
enum class RiordanFamily { T, s, r, R, S };

IntSeries riordan_series(RiordanFamily f, int x_cap, int y_cap);

/// [y^k] of a family series, as a polynomial in x.
IntPoly riordan_coefficient(RiordanFamily f, int k);

/// T_k(x): the rook polynomial of the 2 x k grid board.
IntPoly riordan_Tk(int k);

}  // namespace memdom
