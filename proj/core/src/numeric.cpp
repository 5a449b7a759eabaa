#include "memdom/numeric.hpp"

#include <stdexcept>

namespace memdom {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt double_factorial(long n) {
  if (n < -1) throw std::domain_error("double_factorial: undefined for n < -1");
  BigInt out = 1;
  for (long i = n; i > 1; i -= 2) out *= i;
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);  // exact: product of i+1 consecutive integers
  }
  return out;
}

BigInt falling_factorial(unsigned n, unsigned m) {
  if (m > n) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < m; ++i) out *= (n - i);
  return out;
}

BigInt tiling_count(unsigned k) {
  BigInt a = 1, b = 1;  // tilings of 2x0 and 2x1
  for (unsigned i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::string decimal_string(const BigRat& r, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt whole = num / den;
  BigInt rem = num % den;
  std::string frac;
  frac.reserve(digits);
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  std::string out = sign + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace memdom
