#pragma once

#include "memdom/graph.hpp"
#include "memdom/int_poly.hpp"
#include "memdom/multi_series.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace memdom {

inline constexpr int kDefaultAggregateOracleLimit = 8;

/// One way of placing v vertical and h horizontal dominoes disjointly on the
/// 2 x k array. A coincident pair of horizontal dominoes (one above the
/// other) is distinct from the pair of vertical dominoes covering the same
/// cells.
struct Placement {
  std::vector<int> vertical_columns;                  // ascending
  std::vector<std::pair<int, int>> horizontal_starts; // (row, col) covering (row,col)-(row,col+1)

  int vertical_count() const { return static_cast<int>(vertical_columns.size()); }
  int horizontal_count() const { return static_cast<int>(horizontal_starts.size()); }
  /// Bit mask of covered grid vertices.
  std::uint32_t covered_mask(int k) const;
};

/// All placements with exactly v vertical and h horizontal dominoes, in a
/// deterministic order.
std::vector<Placement> enumerate_placements(int k, int v, int h);

BigInt placement_count(int k, int v, int h);

/// Brute-force aggregate matching polynomial: the sum of the matching
/// polynomials of the graphs obtained by deleting each placement's covered
/// vertex pairs from the 2 x k grid.
IntPoly aggregate_oracle(int k, int v, int h, int limit = kDefaultAggregateOracleLimit);

/// Closed-form generating function for the aggregate matching polynomials:
/// [x^j y^(k-v-h) w^v z^h] counts j-edge matchings summed over all deletion
/// patterns with v vertical and h horizontal pairs removed from the 2 x k
/// grid. Note the y power tracks the number of *surviving* vertex pairs.
IntSeries aggregate_series(int x_cap, int y_cap, int w_cap, int z_cap);

/// Cached expansion of aggregate_series with uniform caps, addressed by
/// (k, v, h) in natural coordinates.
class AggregateMatchings {
 public:
  explicit AggregateMatchings(int max_k);

  int max_k() const { return max_k_; }
  const IntSeries& series() const { return series_; }

  /// The aggregate polynomial for (k, v, h); identically zero when v + h > k.
  IntPoly polynomial(int k, int v, int h) const;

  /// Coefficient of x^j in polynomial(k, v, h); std::nullopt (an explicit
  /// out-of-range flag, value 0) when j exceeds k - v - h or is negative.
  std::optional<BigInt> rho(int k, int v, int h, int j) const;

 private:
  int max_k_;
  IntSeries series_;
};

}  // namespace memdom
