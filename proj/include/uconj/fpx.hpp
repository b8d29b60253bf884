#pragma once

#include <cstdint>
#include <vector>

namespace uconj {

// Univariate polynomials over F_p, used as the operator ring of additive maps:
// x acts on F_q as the Frobenius t -> t^p, so an additive polynomial
// sum c_e t^(p^e) with constant c_e corresponds to sum c_e x^e, and F_q is the
// F_p[x]-module F_p[x]/(x^k - 1) by the normal basis theorem.
struct FpxPoly {
  uint32_t p = 2;
  std::vector<uint32_t> c;  // ascending, c[i] mod p

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }
  uint32_t lead() const { return c.back(); }

  static FpxPoly zero(uint32_t p) { return {p, {}}; }
  static FpxPoly constant(uint32_t p, long long k) {
    FpxPoly f{p, {uint32_t(((k % p) + p) % p)}};
    f.trim();
    return f;
  }

  FpxPoly add(const FpxPoly& o) const {
    FpxPoly r{p, {}};
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = (r.c[i] + c[i]) % p;
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = (r.c[i] + o.c[i]) % p;
    r.trim();
    return r;
  }
  FpxPoly sub(const FpxPoly& o) const {
    FpxPoly r{p, {}};
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = (r.c[i] + c[i]) % p;
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = (r.c[i] + p - o.c[i]) % p;
    r.trim();
    return r;
  }
  FpxPoly mul(const FpxPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(p);
    FpxPoly r{p, std::vector<uint32_t>(c.size() + o.c.size() - 1, 0)};
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = uint32_t((r.c[i + j] + uint64_t(c[i]) * o.c[j]) % p);
    r.trim();
    return r;
  }
  // division with remainder by a nonzero divisor
  void divmod(const FpxPoly& d, FpxPoly& q, FpxPoly& r) const {
    q = zero(p);
    r = *this;
    uint32_t inv_lead = 1;
    {  // inverse of d.lead() mod p
      uint32_t a = d.lead(), e = p - 2, acc = 1;
      while (e) {
        if (e & 1) acc = uint32_t(uint64_t(acc) * a % p);
        a = uint32_t(uint64_t(a) * a % p);
        e >>= 1;
      }
      inv_lead = acc;
    }
    while (!r.is_zero() && r.deg() >= d.deg()) {
      int shift = r.deg() - d.deg();
      uint32_t f = uint32_t(uint64_t(r.lead()) * inv_lead % p);
      if (int(q.c.size()) <= shift) q.c.resize(shift + 1, 0);
      q.c[shift] = (q.c[shift] + f) % p;
      for (size_t i = 0; i < d.c.size(); ++i)
        r.c[i + shift] = uint32_t((r.c[i + shift] + uint64_t(p - 1) * f % p * d.c[i]) % p);
      r.trim();
    }
    q.trim();
  }
  FpxPoly mod(const FpxPoly& d) const {
    FpxPoly q, r;
    divmod(d, q, r);
    return r;
  }
  bool operator==(const FpxPoly& o) const { return c == o.c; }
};

inline FpxPoly fpx_gcd(FpxPoly a, FpxPoly b) {
  while (!b.is_zero()) {
    FpxPoly r = a.mod(b);
    a = b;
    b = r;
  }
  // monic normalization
  if (!a.is_zero() && a.lead() != 1) {
    uint32_t l = a.lead(), e = a.p - 2, inv = 1;
    while (e) {
      if (e & 1) inv = uint32_t(uint64_t(inv) * l % a.p);
      l = uint32_t(uint64_t(l) * l % a.p);
      e >>= 1;
    }
    FpxPoly s = FpxPoly::constant(a.p, inv);
    a = a.mul(s);
  }
  return a;
}

// Diagonal invariant factors of a matrix over F_p[x] (values only).
std::vector<FpxPoly> fpx_smith_diagonal(std::vector<std::vector<FpxPoly>> M, uint32_t p);

}  // namespace uconj
