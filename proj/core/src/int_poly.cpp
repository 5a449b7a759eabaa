#include "memdom/int_poly.hpp"

#include <sstream>

namespace memdom {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

const BigInt& IntPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return kZero;
  return c_[static_cast<size_t>(j)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  if (s == 0) return IntPoly();
  IntPoly out(*this);
  for (auto& c : out.c_) c *= s;
  return out;
}

IntPoly IntPoly::shifted(int n) const {
  if (is_zero()) return IntPoly();
  IntPoly out;
  out.c_.assign(c_.size() + static_cast<size_t>(n), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i + static_cast<size_t>(n)] = c_[i];
  return out;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt out = 0;
  for (size_t i = c_.size(); i-- > 0;) out = out * x + c_[i];
  return out;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    BigInt mag = c_[j] < 0 ? BigInt(-c_[j]) : c_[j];
    if (first) {
      if (c_[j] < 0) os << "-";
      first = false;
    } else {
      os << (c_[j] < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (j == 0 || !unit) os << mag.str();
    if (j >= 1) os << "x";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace memdom
