#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uconj/fq.hpp"
#include "uconj/poly.hpp"

namespace uconj {

// Ambient ring R = F_p(a_1..a_N)[t_1..t_N].
// Variable layout: a_j -> index j-1, t_l -> index N+l-1 (j, l are 1-based).
struct SymRingSpec {
  uint32_t p = 2;
  int nroots = 0;  // N

  int nvars() const { return 2 * nroots; }
  int a_var(int j) const { return j - 1; }
  int t_var(int l) const { return nroots + l - 1; }
  bool is_t(int var) const { return var >= nroots; }
  std::vector<std::string> names() const {
    std::vector<std::string> v;
    for (int j = 1; j <= nroots; ++j) v.push_back("a_" + std::to_string(j));
    for (int l = 1; l <= nroots; ++l) v.push_back("t_" + std::to_string(l));
    return v;
  }
  bool operator==(const SymRingSpec& o) const { return p == o.p && nroots == o.nroots; }
};

// Element of F_p(a)[t]: num / den with den a nonzero polynomial in the a-variables
// only.  den is almost always a monomial (inert-case divisions are by monomials);
// general denominators appear only through analyzer branch substitutions and are
// reduced lazily by monomial-content cancellation plus exact-division attempts.
struct SymExpr {
  SymRingSpec ring;
  PolyP num;
  PolyP den;

  SymExpr() = default;
  explicit SymExpr(SymRingSpec r)
      : ring(r),
        num(PolyP::zero(ZpDom{r.p}, r.nvars())),
        den(PolyP::constant(ZpDom{r.p}, r.nvars(), 1)) {}

  static SymExpr zero(SymRingSpec r) { return SymExpr(r); }
  static SymExpr constant(SymRingSpec r, long long c) {
    SymExpr e(r);
    e.num = PolyP::constant(ZpDom{r.p}, r.nvars(), c);
    return e;
  }
  static SymExpr a_sym(SymRingSpec r, int j) {
    SymExpr e(r);
    e.num = PolyP::variable(ZpDom{r.p}, r.nvars(), r.a_var(j));
    return e;
  }
  static SymExpr t_sym(SymRingSpec r, int l) {
    SymExpr e(r);
    e.num = PolyP::variable(ZpDom{r.p}, r.nvars(), r.t_var(l));
    return e;
  }

  bool is_zero() const { return num.is_zero(); }

  void check_ring(const SymExpr& o) const {
    if (!(ring == o.ring)) throw std::invalid_argument("SymExpr: ring mismatch");
  }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("SymExpr: zero denominator");
    for (int l = 1; l <= ring.nroots; ++l)
      if (den.uses_var(ring.t_var(l))) throw std::domain_error("SymExpr: t in denominator");
    if (num.is_zero()) {
      den = PolyP::constant(num.dom, ring.nvars(), 1);
      return;
    }
    // cancel shared monomial content
    Mono cn = num.content_mono();
    Mono cd = den.content_mono();
    Mono g(cn.size());
    bool nontrivial = false;
    for (size_t i = 0; i < g.size(); ++i) {
      g[i] = std::min(cn[i], cd[i]);
      if (g[i]) nontrivial = true;
    }
    if (nontrivial) {
      num = num.divide_by_mono(g);
      den = den.divide_by_mono(g);
    }
    // attempt full cancellation for non-monomial denominators
    if (den.terms.size() > 1) {
      PolyP q(num.dom, ring.nvars());
      if (num.exact_divide(den, q)) {
        num = q;
        den = PolyP::constant(num.dom, ring.nvars(), 1);
      }
    }
    // monic denominator
    auto lead = den.terms.rbegin();
    if (!den.dom.eq(lead->second, den.dom.one())) {
      auto inv = den.dom.inv(lead->second);
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
  }

  SymExpr operator+(const SymExpr& o) const {
    check_ring(o);
    SymExpr r(ring);
    if (den == o.den) {
      r.num = num + o.num;
      r.den = den;
    } else {
      r.num = num * o.den + o.num * den;
      r.den = den * o.den;
    }
    r.normalize();
    return r;
  }
  SymExpr operator-(const SymExpr& o) const { return *this + (-o); }
  SymExpr operator-() const {
    SymExpr r = *this;
    r.num = -r.num;
    return r;
  }
  SymExpr operator*(const SymExpr& o) const {
    check_ring(o);
    SymExpr r(ring);
    r.num = num * o.num;
    r.den = den * o.den;
    r.normalize();
    return r;
  }
  // Division; divisor numerator must be free of t-variables.
  SymExpr operator/(const SymExpr& o) const {
    check_ring(o);
    if (o.is_zero()) throw std::domain_error("SymExpr: division by zero");
    SymExpr r(ring);
    r.num = num * o.den;
    r.den = den * o.num;
    r.normalize();
    return r;
  }

  SymExpr pow_int(int e) const {
    SymExpr r = constant(ring, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // Exact equality via cross multiplication.
  bool equals(const SymExpr& o) const {
    check_ring(o);
    return num * o.den == o.num * den;
  }
  bool is_one() const { return equals(constant(ring, 1)); }

  int degree_t(int l) const { return num.degree_in(ring.t_var(l)); }
  bool uses_t(int l) const { return num.uses_var(ring.t_var(l)); }
  bool uses_a(int j) const { return num.uses_var(ring.a_var(j)) || den.uses_var(ring.a_var(j)); }

  // Coefficient of t_l^e as an element of the ring.
  SymExpr t_coeff(int l, int e) const {
    SymExpr r(ring);
    r.num = num.coeff_of(ring.t_var(l), e);
    r.den = den;
    r.normalize();
    return r;
  }

  // num is c * (monomial) and den a monomial: a Laurent monomial times a scalar.
  bool is_scalar_monomial() const {
    return num.is_single_term() && den.is_single_term();
  }

  // t_l := repl (repl must not mention t_l, except for the identity substitution).
  SymExpr substituted_t(int l, const SymExpr& repl) const {
    check_ring(repl);
    if (repl.uses_t(l)) {
      if (repl.equals(t_sym(ring, l))) return *this;
      throw std::domain_error("SymExpr: self-referential substitution");
    }
    int var = ring.t_var(l);
    int dmax = num.degree_in(var);
    if (dmax == 0) return *this;
    SymExpr r(ring);
    // sum_k coeff_k * repl^k over common denominator den * repl.den^dmax
    PolyP acc(num.dom, ring.nvars());
    PolyP rp_num = PolyP::constant(num.dom, ring.nvars(), 1);
    std::vector<PolyP> repl_num_pow{rp_num};
    std::vector<PolyP> repl_den_pow{rp_num};
    for (int e = 1; e <= dmax; ++e) {
      repl_num_pow.push_back(repl_num_pow.back() * repl.num);
      repl_den_pow.push_back(repl_den_pow.back() * repl.den);
    }
    for (int e = 0; e <= dmax; ++e) {
      PolyP ce = num.coeff_of(var, e);
      if (ce.is_zero()) continue;
      acc = acc + ce * repl_num_pow[e] * repl_den_pow[dmax - e];
    }
    r.num = acc;
    r.den = den * repl_den_pow[dmax];
    r.normalize();
    return r;
  }

  // One-shot change of variables t_l := repl where repl may mention t_l
  // (e.g. t_l := t_l + c*t_m).  Not iterative: occurrences in repl stay.
  SymExpr reparametrized_t(int l, const SymExpr& repl) const {
    check_ring(repl);
    int var = ring.t_var(l);
    int dmax = num.degree_in(var);
    if (dmax == 0) return *this;
    SymExpr r(ring);
    PolyP acc(num.dom, ring.nvars());
    std::vector<PolyP> repl_num_pow{PolyP::constant(num.dom, ring.nvars(), 1)};
    std::vector<PolyP> repl_den_pow{PolyP::constant(num.dom, ring.nvars(), 1)};
    for (int e = 1; e <= dmax; ++e) {
      repl_num_pow.push_back(repl_num_pow.back() * repl.num);
      repl_den_pow.push_back(repl_den_pow.back() * repl.den);
    }
    for (int e = 0; e <= dmax; ++e) {
      PolyP ce = num.coeff_of(var, e);
      if (ce.is_zero()) continue;
      acc = acc + ce * repl_num_pow[e] * repl_den_pow[dmax - e];
    }
    r.num = acc;
    r.den = den * repl_den_pow[dmax];
    r.normalize();
    return r;
  }

  // a_j := value (a-expression).
  SymExpr substituted_a(int j, const SymExpr& value) const {
    check_ring(value);
    int var = ring.a_var(j);
    if (!value.den.is_single_term())
      throw std::domain_error("SymExpr: a-substitution needs monomial-denominator value");
    int dn = num.degree_in(var);
    int dd = den.degree_in(var);
    int dmax = std::max(dn, dd);
    if (dmax == 0) return *this;
    std::vector<PolyP> vn{PolyP::constant(num.dom, ring.nvars(), 1)};
    std::vector<PolyP> vd{PolyP::constant(num.dom, ring.nvars(), 1)};
    for (int e = 1; e <= dmax; ++e) {
      vn.push_back(vn.back() * value.num);
      vd.push_back(vd.back() * value.den);
    }
    PolyP nn(num.dom, ring.nvars()), dd_poly(num.dom, ring.nvars());
    for (int e = 0; e <= dn; ++e) {
      PolyP ce = num.coeff_of(var, e);
      if (!ce.is_zero()) nn = nn + ce * vn[e] * vd[dmax - e];
    }
    for (int e = 0; e <= dd; ++e) {
      PolyP ce = den.coeff_of(var, e);
      if (!ce.is_zero()) dd_poly = dd_poly + ce * vn[e] * vd[dmax - e];
    }
    SymExpr r(ring);
    r.num = nn;
    r.den = dd_poly;
    if (r.den.is_zero()) throw std::domain_error("SymExpr: substitution kills denominator");
    r.normalize();
    return r;
  }

  // evaluate over F_q at the given variable assignment (a-values then t-values,
  // indexed as in the ring layout); coefficients embed through Z -> F_p -> F_q
  uint32_t eval(const FqField& f, const std::vector<uint32_t>& values) const {
    auto eval_poly = [&](const PolyP& poly) {
      uint32_t acc = 0;
      for (auto& [mono, coef] : poly.terms) {
        uint32_t term = f.from_int(coef);
        for (int v = 0; v < ring.nvars(); ++v)
          for (int e = 0; e < int(mono[v]); ++e) term = f.mul(term, values[v]);
        acc = f.add(acc, term);
      }
      return acc;
    };
    uint32_t dn = eval_poly(den);
    if (dn == 0) throw std::domain_error("SymExpr::eval: denominator vanishes");
    return f.mul(eval_poly(num), f.inv(dn));
  }

  std::string str() const {
    auto names = ring.names();
    std::string s = num.str(names);
    if (!(den.is_single_term() && den.terms.begin()->first == mono_one(ring.nvars())))
      s = "(" + s + ")/(" + den.str(names) + ")";
    return s;
  }
};

// Outcome of the single-linear-term occurrence test.
struct LinearOccurrence {
  enum Kind { Absent, SingleLinearTerm, Other } kind = Absent;
  SymExpr h;  // valid for SingleLinearTerm
};

// Does t_l occur in g only as one term h*t_l with h a scalar times a Laurent
// monomial in the a-variables?
inline LinearOccurrence analyze_linear_occurrence(const SymExpr& g, int l) {
  LinearOccurrence out;
  if (!g.uses_t(l)) {
    out.kind = LinearOccurrence::Absent;
    return out;
  }
  if (g.degree_t(l) != 1) {
    out.kind = LinearOccurrence::Other;
    return out;
  }
  SymExpr h = g.t_coeff(l, 1);
  // coefficient must not involve any t-variable, and must be a single term
  for (int m = 1; m <= g.ring.nroots; ++m)
    if (h.uses_t(m)) {
      out.kind = LinearOccurrence::Other;
      return out;
    }
  if (!h.is_scalar_monomial()) {
    out.kind = LinearOccurrence::Other;
    return out;
  }
  out.kind = LinearOccurrence::SingleLinearTerm;
  out.h = h;
  return out;
}

}  // namespace uconj
