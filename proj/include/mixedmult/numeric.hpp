#ifndef MIXEDMULT_NUMERIC_HPP
#define MIXEDMULT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// C(n, k) for possibly large n; zero when k < 0 or n < k in the integer range.
inline BigInt binomial(const BigInt& n, unsigned k) {
  if (n >= 0 && n < k) return 0;
  BigInt num = 1;
  for (unsigned i = 0; i < k; ++i) num *= (n - i);
  BigInt r = num / factorial(k);
  return r;
}

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  if (r > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("binomial_u64 overflow");
  return static_cast<std::uint64_t>(r);
}

inline BigInt ipow(const BigInt& b, unsigned e) {
  BigInt r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

// floor(x^(1/d)) for x >= 0, d >= 1, by Newton iteration.
inline BigInt iroot_floor(const BigInt& x, unsigned d) {
  if (x < 0) throw std::domain_error("iroot_floor: negative radicand");
  if (d == 0) throw std::domain_error("iroot_floor: zeroth root");
  if (x == 0 || x == 1 || d == 1) return x;
  BigInt lo = 1, hi = 1;
  while (ipow(hi, d) <= x) hi <<= 1;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, d) <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

inline bool is_perfect_power(const BigInt& x, unsigned d, BigInt& root) {
  root = iroot_floor(x, d);
  return ipow(root, d) == x;
}

inline std::string rat_string(const BigRat& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace mm

#endif
