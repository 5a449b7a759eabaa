#include "memdom/riordan.hpp"

namespace memdom {

namespace {

IntSeries xy_monomial(int x_cap, int y_cap, int ex, int ey, BigInt c) {
  return IntSeries::monomial({Var::x, Var::y}, {x_cap, y_cap}, {ex, ey}, std::move(c));
}

}  // namespace

IntSeries riordan_series(RiordanFamily f, int x_cap, int y_cap) {
  const auto mono = [&](int ex, int ey, long c) {
    return xy_monomial(x_cap, y_cap, ex, ey, BigInt(c));
  };
  const IntSeries one = mono(0, 0, 1);
  const IntSeries one_minus_xy = one - mono(1, 1, 1);
  // 1 - y - 2xy - xy^2 + x^3 y^3
  const IntSeries den = one - mono(0, 1, 1) - mono(1, 1, 2) - mono(1, 2, 1) + mono(3, 3, 1);

  const IntSeries t = one_minus_xy * den.reciprocal();
  switch (f) {
    case RiordanFamily::T:
      return t;
    case RiordanFamily::s:
      return t * (one_minus_xy * one_minus_xy).reciprocal();
    case RiordanFamily::r:
      return one_minus_xy * riordan_series(RiordanFamily::s, x_cap, y_cap);
    case RiordanFamily::R:
      return mono(0, 1, 1) * riordan_series(RiordanFamily::r, x_cap, y_cap);
    case RiordanFamily::S: {
      // 1 - 2xy - xy^2 + x^3 y^3
      const IntSeries front = one - mono(1, 1, 2) - mono(1, 2, 1) + mono(3, 3, 1);
      return front * riordan_series(RiordanFamily::s, x_cap, y_cap);
    }
  }
  throw std::invalid_argument("riordan_series: unknown family");
}

IntPoly riordan_coefficient(RiordanFamily f, int k) {
  const IntSeries s = riordan_series(f, k, k);
  std::vector<BigInt> coeffs = s.slice(Var::x, {{Var::y, k}});
  return IntPoly(std::move(coeffs));
}

IntPoly riordan_Tk(int k) { return riordan_coefficient(RiordanFamily::T, k); }

}  // namespace memdom
