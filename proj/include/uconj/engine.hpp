#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "uconj/fq.hpp"
#include "uconj/lie.hpp"
#include "uconj/symexpr.hpp"

namespace uconj {

// Coefficient-ring adapters for the collection engine.

struct FqRing {
  const FqField* f = nullptr;
  using Elem = uint32_t;
  Elem zero() const { return 0; }
  Elem add(Elem a, Elem b) const { return f->add(a, b); }
  Elem mul(Elem a, Elem b) const { return f->mul(a, b); }
  Elem neg(Elem a) const { return f->neg(a); }
  Elem from_int(long long c) const { return f->from_int(c); }
  Elem pow(Elem a, int e) const {
    Elem r = from_int(1);
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool same(const FqRing& o) const { return f == o.f; }
};

struct SymRing {
  SymRingSpec spec;
  using Elem = SymExpr;
  Elem zero() const { return SymExpr::zero(spec); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem from_int(long long c) const { return SymExpr::constant(spec, c); }
  Elem pow(const Elem& a, int e) const {
    Elem r = from_int(1);
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool same(const SymRing& o) const { return spec == o.spec; }
};

// Group element of U in normal form: coefficient j-1 is the x_j-coordinate of
// prod_{j=1..N} x_j(coeffs[j-1]) in enumeration order.  Uniqueness of the
// normal form makes equality entry-wise.
template <class R>
struct UElem {
  std::vector<typename R::Elem> coeffs;

  bool operator==(const UElem& o) const { return coeffs == o.coeffs; }
};

template <class R>
struct Letter {
  int idx;  // 1-based root index
  typename R::Elem c;
};

// Collection from the left over a fixed commutator table.  Words are rewritten
// to ascending root order; rewriting a misordered adjacent pair inserts the
// commutator corrections, whose root indices are strictly larger than both.
// trunc limits the computation to the quotient U/M_trunc (letters above trunc
// are dropped; valid because tails of the enumeration are addition-closed).
template <class R>
class Collector {
 public:
  Collector(const CommutatorTable* tab, R ring, int trunc = -1)
      : tab_(tab), ring_(ring), trunc_(trunc < 0 ? tab->rs.nroots() : trunc) {}

  const R& ring() const { return ring_; }
  int nroots() const { return tab_->rs.nroots(); }

  UElem<R> identity() const {
    UElem<R> e;
    e.coeffs.assign(nroots(), ring_.zero());
    return e;
  }

  std::vector<Letter<R>> letters(const UElem<R>& x) const {
    std::vector<Letter<R>> w;
    for (int j = 1; j <= int(x.coeffs.size()); ++j)
      if (!ring_.is_zero(x.coeffs[j - 1]) && j <= trunc_) w.push_back({j, x.coeffs[j - 1]});
    return w;
  }

  UElem<R> collect(std::vector<Letter<R>> w) const {
    size_t steps = 0;
    size_t i = 0;
    while (i + 1 < w.size()) {
      if (++steps > step_limit_) throw std::runtime_error("collection step limit exceeded");
      int ia = w[i].idx, ib = w[i + 1].idx;
      if (ia < ib) {
        ++i;
        continue;
      }
      if (ia == ib) {
        w[i].c = ring_.add(w[i].c, w[i + 1].c);
        w.erase(w.begin() + i + 1);
        if (ring_.is_zero(w[i].c)) w.erase(w.begin() + i);
        if (i > 0) --i;
        continue;
      }
      // w[i] = x_hi(u), w[i+1] = x_lo(t)  ->  x_lo(t) x_hi(u) corrections...
      auto u = w[i].c;
      auto t = w[i + 1].c;
      int hi = ia, lo = ib;
      w[i].idx = lo;
      w[i].c = t;
      w[i + 1].idx = hi;
      w[i + 1].c = u;
      const auto& rule = tab_->rule(lo, hi);
      size_t insert_at = i + 2;
      for (const auto& corr : rule) {
        if (corr.gamma > trunc_) continue;
        auto c = ring_.mul(ring_.from_int(corr.coeff),
                           ring_.mul(ring_.pow(t, corr.i), ring_.pow(u, corr.j)));
        if (ring_.is_zero(c)) continue;
        w.insert(w.begin() + insert_at, Letter<R>{corr.gamma, c});
        ++insert_at;
      }
      if (i > 0) --i;
    }
    UElem<R> e = identity();
    for (auto& l : w) {
      if (l.idx > trunc_ || ring_.is_zero(l.c)) continue;
      e.coeffs[l.idx - 1] = ring_.add(e.coeffs[l.idx - 1], l.c);
    }
    return e;
  }

  UElem<R> multiply(const UElem<R>& x, const UElem<R>& y) const {
    auto w = letters(x);
    auto wy = letters(y);
    w.insert(w.end(), wy.begin(), wy.end());
    return collect(std::move(w));
  }

  UElem<R> inverse(const UElem<R>& x) const {
    auto w = letters(x);
    std::reverse(w.begin(), w.end());
    for (auto& l : w) l.c = ring_.neg(l.c);
    return collect(std::move(w));
  }

  // x y x^-1 in normal form
  UElem<R> conjugate(const UElem<R>& x, const UElem<R>& y) const {
    auto inv = inverse(x);
    auto w = letters(x);
    auto wy = letters(y);
    auto wi = letters(inv);
    w.insert(w.end(), wy.begin(), wy.end());
    w.insert(w.end(), wi.begin(), wi.end());
    return collect(std::move(w));
  }

  UElem<R> truncate(const UElem<R>& x, int i) const {
    if (i < 0 || i > int(x.coeffs.size())) throw std::out_of_range("truncate: bad quotient index");
    UElem<R> e = x;
    for (int j = i + 1; j <= int(e.coeffs.size()); ++j) e.coeffs[j - 1] = ring_.zero();
    return e;
  }

 private:
  const CommutatorTable* tab_;
  R ring_;
  int trunc_;
  static constexpr size_t step_limit_ = 40'000'000;
};

}  // namespace uconj
