#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "uconj/rational.hpp"

namespace uconj {

// Exponent vector, dense, one byte per variable.
using Mono = std::vector<uint8_t>;

inline Mono mono_one(int nvars) { return Mono(nvars, 0); }

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r[i] = uint8_t(s);
  }
  return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a, a | b assumed
  Mono r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = uint8_t(b[i] - a[i]);
  return r;
}

// Coefficient domain: prime field Z/p with runtime modulus.
struct ZpDom {
  using elem = uint32_t;
  uint32_t p = 2;

  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  elem from_int(long long c) const {
    long long r = c % (long long)p;
    if (r < 0) r += p;
    return elem(r);
  }
  elem add(elem a, elem b) const { return (a + b) % p; }
  elem sub(elem a, elem b) const { return (a + p - b) % p; }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem mul(elem a, elem b) const { return elem((uint64_t(a) * b) % p); }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("ZpDom: inverse of zero");
    // p is tiny; extended Euclid not worth it
    elem r = 1, base = a;
    uint32_t e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }
  std::string str(elem a) const { return std::to_string(a); }
  bool same(const ZpDom& o) const { return p == o.p; }
};

// Coefficient domain: exact rationals (used for structure-constant extraction).
struct RatDom {
  using elem = Rat;
  elem zero() const { return Rat(0); }
  elem one() const { return Rat(1); }
  elem from_int(long long c) const { return Rat(c); }
  elem add(elem a, elem b) const { return a + b; }
  elem sub(elem a, elem b) const { return a - b; }
  elem neg(elem a) const { return -a; }
  elem mul(elem a, elem b) const { return a * b; }
  elem inv(elem a) const { return Rat(1) / a; }
  bool is_zero(const elem& a) const { return a.is_zero(); }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  std::string str(const elem& a) const { return a.str(); }
  bool same(const RatDom&) const { return true; }
};

// Sparse multivariate polynomial over domain D.
template <class D>
struct MPolyT {
  using C = typename D::elem;
  D dom;
  int nvars = 0;
  std::map<Mono, C> terms;

  MPolyT() = default;
  MPolyT(D d, int nv) : dom(d), nvars(nv) {}

  static MPolyT zero(D d, int nv) { return MPolyT(d, nv); }
  static MPolyT constant(D d, int nv, long long c) {
    MPolyT r(d, nv);
    C cc = d.from_int(c);
    if (!d.is_zero(cc)) r.terms.emplace(mono_one(nv), cc);
    return r;
  }
  static MPolyT variable(D d, int nv, int var, int exp = 1) {
    MPolyT r(d, nv);
    Mono m = mono_one(nv);
    m[var] = uint8_t(exp);
    r.terms.emplace(std::move(m), d.one());
    return r;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Mono& m, C c) {
    if (dom.is_zero(c)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second = dom.add(it->second, c);
      if (dom.is_zero(it->second)) terms.erase(it);
    }
  }

  MPolyT operator+(const MPolyT& o) const {
    MPolyT r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }
  MPolyT operator-(const MPolyT& o) const {
    MPolyT r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, dom.neg(c));
    return r;
  }
  MPolyT operator-() const {
    MPolyT r = *this;
    for (auto& [m, c] : r.terms) c = dom.neg(c);
    return r;
  }
  MPolyT operator*(const MPolyT& o) const {
    MPolyT r(dom, nvars);
    for (auto& [ma, ca] : terms)
      for (auto& [mb, cb] : o.terms) r.add_term(mono_mul(ma, mb), dom.mul(ca, cb));
    return r;
  }
  MPolyT scaled(C c) const {
    MPolyT r(dom, nvars);
    if (dom.is_zero(c)) return r;
    for (auto& [m, cc] : terms) r.add_term(m, dom.mul(cc, c));
    return r;
  }
  MPolyT pow(int e) const {
    MPolyT r = constant(dom, nvars, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  bool operator==(const MPolyT& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (auto& [m, c] : terms) {
      if (m != it->first || !dom.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const MPolyT& o) const { return !(*this == o); }

  int degree_in(int var) const {
    int d = 0;
    for (auto& [m, c] : terms) d = std::max(d, int(m[var]));
    return d;
  }

  // Terms where var has exactly exponent e, with that variable stripped out.
  MPolyT coeff_of(int var, int e) const {
    MPolyT r(dom, nvars);
    for (auto& [m, c] : terms) {
      if (int(m[var]) != e) continue;
      Mono mm = m;
      mm[var] = 0;
      r.add_term(mm, c);
    }
    return r;
  }

  bool uses_var(int var) const {
    for (auto& [m, c] : terms)
      if (m[var]) return true;
    return false;
  }

  uint64_t var_mask() const {
    uint64_t mask = 0;
    for (auto& [m, c] : terms)
      for (int v = 0; v < nvars; ++v)
        if (m[v]) mask |= (uint64_t(1) << v);
    return mask;
  }

  bool is_single_term() const { return terms.size() == 1; }

  // Componentwise minimum of all exponent vectors (zero poly -> all zero).
  Mono content_mono() const {
    if (terms.empty()) return mono_one(nvars);
    Mono r = terms.begin()->first;
    for (auto& [m, c] : terms)
      for (int v = 0; v < nvars; ++v) r[v] = std::min(r[v], m[v]);
    return r;
  }

  MPolyT divide_by_mono(const Mono& m) const {
    MPolyT r(dom, nvars);
    for (auto& [mm, c] : terms) {
      if (!mono_divides(m, mm)) throw std::domain_error("divide_by_mono: not divisible");
      r.terms.emplace(mono_div(mm, m), c);
    }
    return r;
  }

  // Exact multivariate division; returns false if the division has a remainder.
  bool exact_divide(const MPolyT& divisor, MPolyT& quotient) const {
    if (divisor.is_zero()) return false;
    MPolyT rem = *this;
    MPolyT q(dom, nvars);
    auto lead = divisor.terms.rbegin();  // max in map order
    const Mono& lm = lead->first;
    C lc_inv = dom.inv(lead->second);
    int guard = 0;
    while (!rem.is_zero()) {
      if (++guard > 100000) return false;
      auto rl = rem.terms.rbegin();
      if (!mono_divides(lm, rl->first)) return false;
      Mono qm = mono_div(rl->first, lm);
      C qc = dom.mul(rl->second, lc_inv);
      MPolyT piece(dom, nvars);
      piece.terms.emplace(qm, qc);
      q = q + piece;
      rem = rem - (divisor * piece);
    }
    quotient = q;
    return true;
  }

  // Substitute variable -> polynomial (no denominators at this level).
  MPolyT substituted(int var, const MPolyT& repl) const {
    int dmax = degree_in(var);
    if (dmax == 0) return *this;
    MPolyT r = coeff_of(var, 0);
    MPolyT rp = constant(dom, nvars, 1);
    for (int e = 1; e <= dmax; ++e) {
      rp = rp * repl;
      MPolyT ce = coeff_of(var, e);
      if (!ce.is_zero()) r = r + ce * rp;
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    // print highest monomial first for readability
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      std::string t;
      bool unit_coeff = dom.eq(it->second, dom.one());
      bool any_var = false;
      for (int v = 0; v < nvars; ++v)
        if (it->first[v]) any_var = true;
      if (!unit_coeff || !any_var) t += dom.str(it->second);
      for (int v = 0; v < nvars; ++v) {
        if (!it->first[v]) continue;
        if (!t.empty()) t += "*";
        t += names[v];
        if (it->first[v] > 1) t += "^" + std::to_string(int(it->first[v]));
      }
      s += t;
    }
    return s;
  }
};

using PolyP = MPolyT<ZpDom>;   // F_p coefficients
using PolyQ = MPolyT<RatDom>;  // rational coefficients

}  // namespace uconj
