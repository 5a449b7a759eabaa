#pragma once

#include "memdom/numeric.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace memdom {

/// Dense univariate polynomial in x with exact integer coefficients.
/// Trailing zero coefficients are always trimmed; the zero polynomial is
/// distinguished by degree() == -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<BigInt> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(int degree, BigInt coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^j; zero outside [0, degree()].
  const BigInt& coeff(int j) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly scaled(const BigInt& s) const;
  IntPoly shifted(int n) const;  // multiply by x^n
  BigInt eval(const BigInt& x) const;

  /// Human-readable form, e.g. "1 + 4x + 2x^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace memdom
