#pragma once

#include "memdom/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace memdom {

/// Formal variables available to a series. The set is fixed; a given series
/// activates an ordered subset.
enum class Var : unsigned char { x = 0, y = 1, w = 2, z = 3 };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::w: return "w";
    case Var::z: return "z";
  }
  return "?";
}

namespace detail {

template <typename C>
struct coeff_traits;

template <>
struct coeff_traits<BigInt> {
  static constexpr bool is_field = false;
  static bool is_unit(const BigInt& c) { return c == 1 || c == -1; }
  static BigInt inverse(const BigInt& c) { return c; }  // only called on +-1
};

template <>
struct coeff_traits<BigRat> {
  static constexpr bool is_field = true;
  static bool is_unit(const BigRat& c) { return c != 0; }
  static BigRat inverse(const BigRat& c) { return BigRat(1) / c; }
};

}  // namespace detail

/// Truncated multivariate formal power series with exact coefficients.
///
/// The truncation region is a box given by one degree cap per variable,
/// optionally intersected with a total-degree cap. Every stored coefficient
/// inside the region equals the coefficient of the untruncated value; nothing
/// is ever rounded. Instances are immutable in normal use (all operations
/// return new values) and safe to share across threads once built.
template <typename Coeff>
class Series {
 public:
  static constexpr int kUnbounded = -1;
  static constexpr size_t kMaxEntries = 20'000'000;

  Series(std::vector<Var> vars, std::vector<int> caps, int total_cap = kUnbounded)
      : vars_(std::move(vars)), caps_(std::move(caps)) {
    if (vars_.size() != caps_.size())
      throw std::invalid_argument("series: one cap per variable required");
    for (size_t i = 0; i < vars_.size(); ++i)
      for (size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("series: duplicate variable");
    int cap_sum = 0;
    for (int c : caps_) {
      if (c < 0) throw std::invalid_argument("series: caps must be >= 0");
      cap_sum += c;
    }
    total_cap_ = (total_cap == kUnbounded || total_cap >= cap_sum) ? cap_sum : total_cap;
    if (total_cap_ < 0) throw std::invalid_argument("series: total cap must be >= 0");
    size_t n = 1;
    strides_.assign(vars_.size(), 1);
    for (size_t i = vars_.size(); i-- > 0;) {
      strides_[i] = n;
      n *= static_cast<size_t>(caps_[i]) + 1;
      if (n > kMaxEntries) throw std::length_error("series: truncation region too large");
    }
    data_.assign(n, Coeff(0));
  }

  static Series constant(std::vector<Var> vars, std::vector<int> caps, Coeff c,
                         int total_cap = kUnbounded) {
    Series s(std::move(vars), std::move(caps), total_cap);
    s.data_[0] = std::move(c);
    return s;
  }

  static Series monomial(std::vector<Var> vars, std::vector<int> caps, std::vector<int> exps,
                         Coeff c, int total_cap = kUnbounded) {
    Series s(std::move(vars), std::move(caps), total_cap);
    s.set(exps, std::move(c));
    return s;
  }

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<int>& caps() const { return caps_; }
  int total_cap() const { return total_cap_; }
  bool total_cap_active() const {
    int s = 0;
    for (int c : caps_) s += c;
    return total_cap_ < s;
  }

  bool in_region(std::span<const int> exps) const {
    int sum = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i] < 0 || exps[i] > caps_[i]) return false;
      sum += exps[i];
    }
    return sum <= total_cap_;
  }

  /// Exact coefficient; throws std::out_of_range outside the truncation
  /// region (a request outside the region is a caller bug, never a zero).
  const Coeff& at(std::span<const int> exps) const {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("series: exponent tuple arity mismatch");
    if (!in_region(exps)) throw std::out_of_range("series: exponent outside truncation region");
    return data_[index_of(exps)];
  }

  /// Convenience access by named exponents; unnamed variables get exponent 0.
  const Coeff& coeff(std::initializer_list<std::pair<Var, int>> assignment) const {
    std::vector<int> exps(vars_.size(), 0);
    for (const auto& [v, e] : assignment) exps[var_index(v)] = e;
    return at(exps);
  }

  void set(std::span<const int> exps, Coeff c) {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("series: exponent tuple arity mismatch");
    if (!in_region(exps)) throw std::out_of_range("series: exponent outside truncation region");
    data_[index_of(exps)] = std::move(c);
  }

  bool is_zero() const {
    for (const auto& c : data_)
      if (c != 0) return false;
    return true;
  }

  /// Equality over the intersection of the two truncation regions (both
  /// series are exact there, so this is the meaningful comparison).
  friend bool operator==(const Series& a, const Series& b) {
    if (a.vars_ != b.vars_) return false;
    std::vector<int> caps(a.vars_.size());
    for (size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps_[i], b.caps_[i]);
    const int total = std::min(a.total_cap_, b.total_cap_);
    Series probe(a.vars_, caps, total);
    bool equal = true;
    probe.for_each_region([&](std::span<const int> e) {
      if (equal && a.data_[a.index_of(e)] != b.data_[b.index_of(e)]) equal = false;
    });
    return equal;
  }

  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }

  Series operator-() const {
    Series out(*this);
    for (auto& c : out.data_) c = -c;
    return out;
  }

  Series operator*(const Coeff& s) const {
    Series out(*this);
    for (auto& c : out.data_) c *= s;
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    check_compatible(a, b);
    std::vector<int> caps(a.vars_.size());
    for (size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps_[i], b.caps_[i]);
    Series out(a.vars_, caps, std::min(a.total_cap_, b.total_cap_));
    const auto ea = a.nonzero_entries();
    const auto eb = b.nonzero_entries();  // sorted by total degree
    const size_t m = a.vars_.size();
    std::vector<int> sum(m);
    for (const auto& [fa, ca] : ea) {
      int ta = 0;
      for (size_t i = 0; i < m; ++i) ta += fa[i];
      for (const auto& [fb, cb] : eb) {
        int tb = ta;
        for (size_t i = 0; i < m; ++i) tb += fb[i];
        if (tb > out.total_cap_) break;  // eb sorted by total degree
        bool ok = true;
        for (size_t i = 0; i < m; ++i) {
          sum[i] = fa[i] + fb[i];
          if (sum[i] > out.caps_[i]) {
            ok = false;
            break;
          }
        }
        if (ok) out.data_[out.index_of(sum)] += *ca * *cb;
      }
    }
    return out;
  }

  Series pow(unsigned e) const {
    Series base(*this);
    Series out = constant(vars_, caps_, Coeff(1), total_cap_);
    while (e > 0) {
      if (e & 1u) out = out * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return out;
  }

  /// Multiplicative inverse. Requires a unit constant term (+-1 over the
  /// integers, nonzero over the rationals); the inverse then has coefficients
  /// in the same ring and satisfies a * reciprocal(a) == 1 up to the caps.
  Series reciprocal() const {
    const Coeff& c0 = data_[0];
    if (c0 == 0) throw std::domain_error("series reciprocal: zero constant term");
    if (!detail::coeff_traits<Coeff>::is_unit(c0))
      throw std::domain_error("series reciprocal: constant term is not a unit");
    const Coeff inv0 = detail::coeff_traits<Coeff>::inverse(c0);
    Series out(vars_, caps_, total_cap_);
    out.data_[0] = inv0;
    auto tail = nonzero_entries();
    std::erase_if(tail, [](const auto& e) {
      return std::all_of(e.first.begin(), e.first.end(), [](int v) { return v == 0; });
    });
    const size_t m = vars_.size();
    std::vector<int> rest(m);
    for_each_region_graded([&](std::span<const int> e) {
      int te = 0;
      for (size_t i = 0; i < m; ++i) te += e[i];
      if (te == 0) return;
      Coeff acc(0);
      for (const auto& [f, cf] : tail) {
        bool fits = true;
        for (size_t i = 0; i < m; ++i) {
          rest[i] = e[i] - f[i];
          if (rest[i] < 0) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        const Coeff& prev = out.data_[out.index_of(rest)];
        if (prev != 0) acc += *cf * prev;
      }
      if (acc != 0) out.data_[out.index_of(e)] = -(acc * inv0);
    });
    return out;
  }

  /// Square root with constant term 1 (rational coefficients only).
  Series sqrt() const {
    static_assert(detail::coeff_traits<Coeff>::is_field,
                  "series sqrt needs rational coefficients; integer series do not promote");
    if (data_[0] != 1) throw std::domain_error("series sqrt: constant term must be 1");
    Series out(vars_, caps_, total_cap_);
    out.data_[0] = Coeff(1);
    const size_t m = vars_.size();
    std::vector<std::pair<std::vector<int>, Coeff>> supp;  // nonzero entries of out, degree >= 1
    std::vector<int> rest(m);
    const Coeff half = Coeff(1) / Coeff(2);
    for_each_region_graded([&](std::span<const int> e) {
      int te = 0;
      for (size_t i = 0; i < m; ++i) te += e[i];
      if (te == 0) return;
      Coeff acc(0);
      for (const auto& [f, cf] : supp) {
        bool fits = true;
        int tf = 0;
        for (size_t i = 0; i < m; ++i) {
          rest[i] = e[i] - f[i];
          tf += f[i];
          if (rest[i] < 0) {
            fits = false;
            break;
          }
        }
        if (!fits || tf == te) continue;  // partner exponent must be nonzero
        const Coeff& other = out.data_[out.index_of(rest)];
        if (other != 0) acc += cf * other;
      }
      Coeff val = (data_[index_of(e)] - acc) * half;
      if (val != 0) {
        out.data_[out.index_of(e)] = val;
        supp.emplace_back(std::vector<int>(e.begin(), e.end()), std::move(val));
      }
    });
    return out;
  }

  /// a^(-1/2) with constant term 1 (rational coefficients only);
  /// inv_sqrt(a)^2 * a == 1 up to the caps.
  Series inv_sqrt() const {
    static_assert(detail::coeff_traits<Coeff>::is_field,
                  "series inv_sqrt needs rational coefficients; integer series do not promote");
    if (data_[0] != 1) throw std::domain_error("series inv_sqrt: constant term must be 1");
    return sqrt().reciprocal();
  }

  /// exp(a) for a with zero constant term (rational coefficients only).
  Series exp() const {
    static_assert(detail::coeff_traits<Coeff>::is_field,
                  "series exp needs rational coefficients; integer series do not promote");
    if (data_[0] != 0) throw std::domain_error("series exp: constant term must be 0");
    const Series one = constant(vars_, caps_, Coeff(1), total_cap_);
    if (is_zero()) return one;
    // Depth bound from the valuation of a: a^n vanishes once n * val exceeds
    // any active cap.
    int depth = total_cap_;
    {
      int min_total = total_cap_ + 1;
      std::vector<int> min_exp(vars_.size(), total_cap_ + 1);
      for (const auto& [f, c] : nonzero_entries()) {
        int t = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
          t += f[i];
          min_exp[i] = std::min(min_exp[i], f[i]);
        }
        min_total = std::min(min_total, t);
      }
      if (min_total > 0) depth = std::min(depth, total_cap_ / min_total);
      for (size_t i = 0; i < vars_.size(); ++i)
        if (min_exp[i] > 0) depth = std::min(depth, caps_[i] / min_exp[i]);
    }
    Series out = one;
    for (int n = depth; n >= 1; --n) out = one + (*this * out) * (Coeff(1) / Coeff(n));
    return out;
  }

  /// Partial derivative; the cap of `v` (and any total cap) drops by one,
  /// which is the exact truncation of the derivative.
  Series derivative(Var v) const {
    const size_t vi = var_index(v);
    std::vector<int> caps = caps_;
    caps[vi] = std::max(caps[vi] - 1, 0);
    int total = total_cap_active() ? std::max(total_cap_ - 1, 0) : kUnbounded;
    Series out(vars_, caps, total);
    std::vector<int> src(vars_.size());
    out.for_each_region([&](std::span<const int> e) {
      for (size_t i = 0; i < vars_.size(); ++i) src[i] = e[i];
      src[vi] += 1;
      if (!in_region(src)) return;
      const Coeff& c = data_[index_of(src)];
      if (c != 0) out.data_[out.index_of(e)] = c * Coeff(src[vi]);
    });
    return out;
  }

  /// Restriction to smaller caps.
  Series truncated(std::vector<int> new_caps, int new_total = kUnbounded) const {
    if (new_caps.size() != vars_.size())
      throw std::invalid_argument("series truncate: cap arity mismatch");
    for (size_t i = 0; i < vars_.size(); ++i)
      if (new_caps[i] > caps_[i])
        throw std::invalid_argument("series truncate: cannot widen caps");
    Series out(vars_, std::move(new_caps), new_total);
    if (out.total_cap_ > total_cap_)
      throw std::invalid_argument("series truncate: cannot widen total cap");
    out.for_each_region(
        [&](std::span<const int> e) { out.data_[out.index_of(e)] = data_[index_of(e)]; });
    return out;
  }

  /// Embeds into a larger variable set (new variables get exponent 0).
  Series lifted(std::vector<Var> new_vars, std::vector<int> new_caps,
                int new_total = kUnbounded) const {
    Series out(std::move(new_vars), std::move(new_caps), new_total);
    std::vector<size_t> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) where[i] = out.var_index(vars_[i]);
    std::vector<int> e(out.vars_.size(), 0);
    for (const auto& [f, c] : nonzero_entries()) {
      std::fill(e.begin(), e.end(), 0);
      for (size_t i = 0; i < vars_.size(); ++i) e[where[i]] = f[i];
      if (out.in_region(e)) out.data_[out.index_of(e)] = *c;
    }
    return out;
  }

  /// Sets a variable to 1 by summing over its exponent. Exact when the
  /// variable's support is fully inside the caps (true for all uses here).
  Series substitute_one(Var v) const {
    const size_t vi = var_index(v);
    auto [rvars, rcaps] = drop_var(vi);
    Series out(std::move(rvars), std::move(rcaps));
    std::vector<int> e(out.vars_.size());
    for (const auto& [f, c] : nonzero_entries()) {
      size_t k = 0;
      for (size_t i = 0; i < vars_.size(); ++i)
        if (i != vi) e[k++] = f[i];
      out.data_[out.index_of(e)] += *c;
    }
    return out;
  }

  /// Sets a variable to 0 (keeps only exponent-0 terms of it).
  Series set_var_zero(Var v) const {
    const size_t vi = var_index(v);
    auto [rvars, rcaps] = drop_var(vi);
    Series out(std::move(rvars), std::move(rcaps));
    std::vector<int> e(out.vars_.size());
    for (const auto& [f, c] : nonzero_entries()) {
      if (f[vi] != 0) continue;
      size_t k = 0;
      for (size_t i = 0; i < vars_.size(); ++i)
        if (i != vi) e[k++] = f[i];
      out.data_[out.index_of(e)] = *c;
    }
    return out;
  }

  /// Substitutes `from` := `into` (exponents add). Exact when the support is
  /// fully inside the caps; the cap of `into` widens to hold all sums.
  Series merge_vars(Var from, Var into) const {
    const size_t fi = var_index(from);
    const size_t ti = var_index(into);
    auto [rvars, rcaps] = drop_var(fi);
    for (size_t i = 0; i < rvars.size(); ++i)
      if (rvars[i] == into) rcaps[i] = caps_[fi] + caps_[ti];
    Series out(std::move(rvars), std::move(rcaps), total_cap_);
    std::vector<int> e(out.vars_.size());
    for (const auto& [f, c] : nonzero_entries()) {
      size_t k = 0;
      for (size_t i = 0; i < vars_.size(); ++i)
        if (i != fi) e[k++] = f[i];
      for (size_t i = 0; i < out.vars_.size(); ++i)
        if (out.vars_[i] == into) e[i] += f[fi];
      out.data_[out.index_of(e)] += *c;
    }
    return out;
  }

  /// Coefficients along one variable with every other exponent fixed.
  std::vector<Coeff> slice(Var along, const std::map<Var, int>& fixed) const {
    const size_t ai = var_index(along);
    std::vector<int> e(vars_.size(), 0);
    size_t assigned = 0;
    for (const auto& [v, exp] : fixed) {
      const size_t i = var_index(v);
      if (i == ai) throw std::invalid_argument("series slice: cannot fix the slice variable");
      e[i] = exp;
      ++assigned;
    }
    if (assigned + 1 != vars_.size())
      throw std::invalid_argument("series slice: every other variable must be fixed");
    std::vector<Coeff> out;
    out.reserve(static_cast<size_t>(caps_[ai]) + 1);
    for (int j = 0; j <= caps_[ai]; ++j) {
      e[ai] = j;
      out.push_back(at(e));  // throws if outside the region
    }
    return out;
  }

  template <typename F>
  void for_each_nonzero(F&& f) const {
    std::vector<int> e(vars_.size(), 0);
    for (size_t idx = 0; idx < data_.size(); ++idx) {
      if (data_[idx] == 0) continue;
      decode(idx, e);
      f(std::span<const int>(e), data_[idx]);
    }
  }

  /// Deterministic dump (graded lexicographic order of exponents).
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : nonzero_entries()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(*c) << ")";
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        os << " " << var_name(vars_[i]);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return first ? "0" : os.str();
  }

  size_t var_index(Var v) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == v) return i;
    throw std::invalid_argument(std::string("series: variable ") + var_name(v) + " not present");
  }

  /// Nonzero entries as (exponents, coefficient pointer), sorted by total
  /// degree then lexicographically: the canonical iteration order.
  std::vector<std::pair<std::vector<int>, const Coeff*>> nonzero_entries() const {
    std::vector<std::pair<std::vector<int>, const Coeff*>> out;
    std::vector<int> e(vars_.size(), 0);
    for (size_t idx = 0; idx < data_.size(); ++idx) {
      if (data_[idx] == 0) continue;
      decode(idx, e);
      out.emplace_back(e, &data_[idx]);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      int ta = 0, tb = 0;
      for (int v : a.first) ta += v;
      for (int v : b.first) tb += v;
      if (ta != tb) return ta < tb;
      return a.first < b.first;
    });
    return out;
  }

 private:
  static void check_compatible(const Series& a, const Series& b) {
    if (a.vars_ != b.vars_)
      throw std::invalid_argument("series: incompatible variable sets");
  }

  static Series combine(const Series& a, const Series& b, bool subtract) {
    check_compatible(a, b);
    std::vector<int> caps(a.vars_.size());
    for (size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps_[i], b.caps_[i]);
    Series out(a.vars_, caps, std::min(a.total_cap_, b.total_cap_));
    out.for_each_region([&](std::span<const int> e) {
      const Coeff& ca = a.data_[a.index_of(e)];
      const Coeff& cb = b.data_[b.index_of(e)];
      out.data_[out.index_of(e)] = subtract ? Coeff(ca - cb) : Coeff(ca + cb);
    });
    return out;
  }

  std::pair<std::vector<Var>, std::vector<int>> drop_var(size_t vi) const {
    std::vector<Var> rvars;
    std::vector<int> rcaps;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (i == vi) continue;
      rvars.push_back(vars_[i]);
      rcaps.push_back(caps_[i]);
    }
    return {std::move(rvars), std::move(rcaps)};
  }

  size_t index_of(std::span<const int> exps) const {
    size_t idx = 0;
    for (size_t i = 0; i < vars_.size(); ++i)
      idx += static_cast<size_t>(exps[i]) * strides_[i];
    return idx;
  }

  void decode(size_t idx, std::vector<int>& exps) const {
    for (size_t i = 0; i < vars_.size(); ++i) {
      exps[i] = static_cast<int>(idx / strides_[i]);
      idx %= strides_[i];
    }
  }

  template <typename F>
  void for_each_region(F&& f) const {
    std::vector<int> e(vars_.size(), 0);
    while (true) {
      if (in_region(e)) f(std::span<const int>(e));
      size_t i = vars_.size();
      while (i-- > 0) {
        if (e[i] < caps_[i]) {
          ++e[i];
          break;
        }
        e[i] = 0;
        if (i == 0) return;
      }
      if (vars_.empty()) return;
    }
  }

  template <typename F>
  void for_each_region_graded(F&& f) const {
    std::vector<std::vector<int>> tuples;
    for_each_region([&](std::span<const int> e) { tuples.emplace_back(e.begin(), e.end()); });
    std::stable_sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
      int ta = 0, tb = 0;
      for (int v : a) ta += v;
      for (int v : b) tb += v;
      if (ta != tb) return ta < tb;
      return a < b;
    });
    for (const auto& t : tuples) f(std::span<const int>(t));
  }

  static std::string coeff_str(const BigInt& c) { return c.str(); }
  static std::string coeff_str(const BigRat& c) {
    return boost::multiprecision::numerator(c).str() +
           (boost::multiprecision::denominator(c) == 1
                ? ""
                : "/" + boost::multiprecision::denominator(c).str());
  }

  std::vector<Var> vars_;
  std::vector<int> caps_;
  int total_cap_ = 0;
  std::vector<size_t> strides_;
  std::vector<Coeff> data_;
};

using IntSeries = Series<BigInt>;
using RatSeries = Series<BigRat>;

inline RatSeries to_rational(const IntSeries& s) {
  RatSeries out(s.vars(), s.caps(), s.total_cap());
  s.for_each_nonzero(
      [&](std::span<const int> e, const BigInt& c) { out.set(e, BigRat(c)); });
  return out;
}

/// Renders an exact rational as "p/q" (or "p" when q == 1).
inline std::string rational_string(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace memdom
