#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace uconj {

// Small exact rational on int64. All uses in this project keep values tiny
// (structure constants, interpolation on q <= 16), so overflow is treated
// as a hard error rather than promoted to bignum.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat overflow");
    return r;
  }

  Rat operator+(const Rat& o) const {
    Rat r(checked_mul(num, o.den) + checked_mul(o.num, den), checked_mul(den, o.den));
    return r;
  }
  Rat operator-(const Rat& o) const {
    Rat r(checked_mul(num, o.den) - checked_mul(o.num, den), checked_mul(den, o.den));
    return r;
  }
  Rat operator*(const Rat& o) const { return Rat(checked_mul(num, o.num), checked_mul(den, o.den)); }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(checked_mul(num, o.den), checked_mul(den, o.num));
  }
  Rat operator-() const { return Rat(-num, den); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace uconj
