#include "uconj/analyzer.hpp"

#include "uconj/fpx.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace uconj {

VPoly CoordResult::factor() const {
  switch (shape) {
    case FreeUnit:
      return VPoly{0, 1};
    case FreeField:
      return VPoly{1, 1};
    case FixedZero:
    case FixedValue:
      return VPoly{1};
    case UnitMinus:
      return VPoly{-1, 1};
    case ZeroOr:
      return VPoly{2};
    case Coset:
      return VPoly{coset_count};
    case FieldMinus:
      return VPoly{0, 1};
    case Block:
      return VPoly{1};  // carried by the branch's block_count
  }
  return VPoly{1};
}

char CoordResult::letter() const {
  switch (shape) {
    case FreeUnit:
      return 'a';
    case FreeField:
      return 'b';
    case Coset:
      return 'c';
    case UnitMinus:
      return 'd';
    case FixedValue:
      return 'e';
    case ZeroOr:
      return 'f';
    case FieldMinus:
      return 'g';
    case FixedZero:
      return '0';
    case Block:
      return '*';
  }
  return '?';
}

std::string Branch::rep_string() const {
  std::string s;
  for (auto& c : coords) {
    if (c.shape == CoordResult::FixedZero) continue;
    s += "x_" + std::to_string(c.index) + "(" + c.letter() + "_" + std::to_string(c.index) + ")";
  }
  if (s.empty()) s = "1";
  return s;
}

namespace {

struct Cond {
  SymExpr expr;
  bool nonzero;  // expr != 0 when true, expr == 0 when false
  std::string text;
};

struct AState {
  SymRingSpec ring;
  uint32_t p;
  std::map<int, CoordResult> coords;
  std::vector<std::pair<int, SymExpr>> pending;  // (coordinate, residual), ascending
  size_t pos = 0;
  std::set<int> free_t, kernel_t, nonpoly_t;
  std::map<int, std::pair<int, SymExpr>> solved_frob;  // t_l^(p^e) = R, keyed by l (stores p^e)
  std::vector<std::tuple<SymExpr, int, int>> pair_rows;  // surjective pair rows (row, t_a, t_b)
  std::map<int, int> twist;                            // coordinate -> Frobenius twists applied
  long long m = 1;
  int e = 0;
  std::vector<Cond> conds;
  int depth = 0;
};

class Analyzer {
 public:
  Analyzer(const RootSystem& rs, uint32_t p) : rs_(rs), p_(p) {}

  std::vector<Branch> run_family(const Family& fam) {
    AState st;
    st.ring = fam.ring;
    st.p = p_;
    for (int j : fam.c) {
      CoordResult r;
      r.index = j;
      r.shape = CoordResult::FreeUnit;
      st.coords[j] = r;
    }
    for (auto& [j, g] : fam.residuals) st.pending.push_back({j, g});
    for (int l = 1; l <= fam.ring.nroots; ++l)
      if (fam.t_free(l)) st.free_t.insert(l);
    st.e = int(st.free_t.size());
    out_.clear();
    run(std::move(st));
    return std::move(out_);
  }

 private:
  const RootSystem& rs_;
  uint32_t p_;
  std::vector<Branch> out_;

  void run(AState st) {
    if (++st.depth > 32) {
      emit_manual(st, "branch depth limit");
      return;
    }
    while (st.pos < st.pending.size()) {
      if (!step(st)) return;  // branched or went manual
      ++st.pos;
    }
    finalize(st);
  }

  void emit_manual(const AState& st, const std::string& why) {
    Branch b;
    for (auto& [idx, r] : st.coords) b.coords.push_back(r);
    b.manual = true;
    b.manual_reason = why + " (coordinate " +
                      (st.pos < st.pending.size() ? std::to_string(st.pending[st.pos].first) : "-") +
                      ", residual " +
                      (st.pos < st.pending.size() ? st.pending[st.pos].second.str() : "-") + ")";
    for (auto& c : st.conds) b.conditions.push_back(c.text);
    out_.push_back(std::move(b));
  }

  void finalize(const AState& st) {
    Branch b;
    b.size = VPoly{1};
    for (auto& [idx, r] : st.coords) {
      b.coords.push_back(r);
      b.size = b.size * r.factor();
    }
    b.cent_m = st.m;
    b.cent_e = st.e;
    for (auto& c : st.conds) b.conditions.push_back(c.text);
    out_.push_back(std::move(b));
  }

  // Joint analysis of the still-open coordinates (prior coset choices undone)
  // as an F_p[x]-module: each residual with constant coefficients is a row
  // sum c_e x^e per variable, and the number of joint orbit representatives is
  // q^(rows - rank) * p^(number of invariant factors divisible by x-1), valid
  // for every q because gcd(x^a (x-1)^b, x^k - 1) = (x-1)^min(b,1) when b <= 1.
  bool try_block(AState& st) {
    std::vector<std::pair<int, SymExpr>> rows;
    for (auto& [idx, r] : st.coords)
      if (r.shape == CoordResult::Coset) rows.push_back({idx, r.coset_map});
    for (size_t k = st.pos; k < st.pending.size(); ++k) rows.push_back(st.pending[k]);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // collect variables and check constant-coefficient additivity
    std::vector<int> vars;
    std::vector<std::map<int, FpxPoly>> entries(rows.size());
    for (size_t ri = 0; ri < rows.size(); ++ri) {
      const SymExpr& g = rows[ri].second;
      if (!g.den.is_single_term() || g.den.terms.begin()->first != mono_one(st.ring.nvars()))
        return false;
      for (auto& [mono, cf] : g.num.terms) {
        int tv = 0, texp = 0, tcount = 0;
        for (int l = 1; l <= st.ring.nroots; ++l)
          if (mono[st.ring.t_var(l)]) {
            ++tcount;
            tv = l;
            texp = mono[st.ring.t_var(l)];
          }
        for (int j = 1; j <= st.ring.nroots; ++j)
          if (mono[st.ring.a_var(j)]) return false;  // non-constant coefficient
        if (tcount != 1) return false;
        if (st.nonpoly_t.count(tv)) return false;
        int e = 0, pe = 1;
        while (pe < texp) {
          pe *= int(st.p);
          ++e;
        }
        if (pe != texp) return false;  // not a p-power exponent
        auto& ent = entries[ri][tv];
        if (ent.c.empty()) ent = FpxPoly::zero(st.p);
        FpxPoly term = FpxPoly::zero(st.p);
        term.c.assign(e + 1, 0);
        term.c[e] = cf;
        ent = ent.add(term);
        if (std::find(vars.begin(), vars.end(), tv) == vars.end()) vars.push_back(tv);
      }
    }
    std::sort(vars.begin(), vars.end());

    // undo prior coset consumptions; the block recounts them jointly
    for (auto& [idx, r] : st.coords) {
      if (r.shape != CoordResult::Coset) continue;
      st.e += 1;
      st.m /= r.coset_count;
      st.kernel_t.erase(r.coset_var);
      st.free_t.insert(r.coset_var);
    }
    for (int v : vars)
      if (!st.free_t.count(v)) return false;

    std::vector<std::vector<FpxPoly>> M(rows.size(),
                                        std::vector<FpxPoly>(vars.size(), FpxPoly::zero(st.p)));
    for (size_t ri = 0; ri < rows.size(); ++ri)
      for (size_t vi = 0; vi < vars.size(); ++vi) {
        auto it = entries[ri].find(vars[vi]);
        if (it != entries[ri].end()) M[ri][vi] = it->second;
      }
    auto diag = fpx_smith_diagonal(M, st.p);
    int rank = int(diag.size());
    int xm1_count = 0;
    FpxPoly xm1 = FpxPoly::zero(st.p);
    xm1.c = {st.p - 1, 1};  // x - 1
    for (auto d : diag) {
      while (!d.is_zero() && d.c[0] == 0) d.c.erase(d.c.begin());  // strip x factors
      int b = 0;
      while (d.deg() >= 1 && d.mod(xm1).is_zero()) {
        FpxPoly q, r;
        d.divmod(xm1, q, r);
        d = q;
        ++b;
      }
      if (d.deg() != 0) return false;  // invariant factor outside x^a (x-1)^(<=1)
      if (b > 1) return false;
      xm1_count += b;
    }

    long long pf = 1;
    for (int i = 0; i < xm1_count; ++i) pf *= st.p;
    st.e -= rank;
    st.m *= pf;

    Branch b;
    b.block = true;
    b.block_count = VPoly::constant(pf) * VPoly::q_power(int(rows.size()) - rank);
    b.size = VPoly{1};
    for (auto& [idx, r] : st.coords) {
      bool in_block = false;
      for (auto& [bidx, g] : rows)
        if (bidx == idx) in_block = true;
      if (in_block) continue;
      b.coords.push_back(r);
      b.size = b.size * r.factor();
    }
    for (auto& [idx, g] : rows) {
      CoordResult r;
      r.index = idx;
      r.shape = CoordResult::Block;
      b.coords.push_back(r);
      b.block_coords.push_back(idx);
    }
    std::sort(b.coords.begin(), b.coords.end(),
              [](const CoordResult& a, const CoordResult& c) { return a.index < c.index; });
    b.size = b.size * b.block_count;
    b.cent_m = st.m;
    b.cent_e = st.e;
    for (auto& c : st.conds) b.conditions.push_back(c.text);
    out_.push_back(std::move(b));
    return true;
  }

  static bool uses_any_t(const SymExpr& g, const std::set<int>& vars) {
    for (int l : vars)
      if (g.uses_t(l)) return true;
    return false;
  }

  bool provably_nonzero(const AState& st, const SymExpr& expr) const {
    if (expr.is_zero()) return false;
    auto vars_ok = [&](const SymExpr& e) {
      for (int j = 1; j <= st.ring.nroots; ++j) {
        if (!e.uses_a(j)) continue;
        auto it = st.coords.find(j);
        if (it == st.coords.end()) return false;
        auto s = it->second.shape;
        if (s != CoordResult::FreeUnit && s != CoordResult::UnitMinus) return false;
      }
      return true;
    };
    if (expr.is_scalar_monomial() && vars_ok(expr)) return true;
    // known-nonzero condition times a Laurent monomial: test divisibility of
    // the cross products in both directions
    for (auto& c : st.conds) {
      if (!c.nonzero) continue;
      PolyP big_n = expr.num * c.expr.den;
      PolyP big_d = expr.den * c.expr.num;
      PolyP q(big_n.dom, big_n.nvars);
      if (big_n.exact_divide(big_d, q) && q.is_single_term()) {
        SymExpr e(st.ring);
        e.num = q;
        if (vars_ok(e)) return true;
      }
      if (big_d.exact_divide(big_n, q) && q.is_single_term()) {
        SymExpr e(st.ring);
        e.num = q;
        if (vars_ok(e)) return true;
      }
    }
    return false;
  }

  // substitute symbol a_s := val in every live piece of state
  static void subst_symbol(AState& st, int s, const SymExpr& val) {
    for (size_t k = st.pos; k < st.pending.size(); ++k)
      st.pending[k].second = st.pending[k].second.substituted_a(s, val);
    for (auto& [idx, r] : st.coords) {
      if (r.shape == CoordResult::FixedValue || r.shape == CoordResult::UnitMinus ||
          r.shape == CoordResult::ZeroOr || r.shape == CoordResult::FieldMinus)
        r.value = r.value.substituted_a(s, val);
      if (r.shape == CoordResult::Coset) r.coset_map = r.coset_map.substituted_a(s, val);
    }
    for (auto& c : st.conds) c.expr = c.expr.substituted_a(s, val);
  }

  static void subst_tvar(AState& st, int l, const SymExpr& val) {
    for (size_t k = st.pos + 1; k < st.pending.size(); ++k)
      st.pending[k].second = st.pending[k].second.substituted_t(l, val);
  }

  // reparameterize t_l := t_l + shift everywhere downstream (current included)
  static void reparam(AState& st, int l, const SymExpr& shift) {
    SymExpr repl = SymExpr::t_sym(st.ring, l) + shift;
    for (size_t k = st.pos; k < st.pending.size(); ++k)
      st.pending[k].second = st.pending[k].second.reparametrized_t(l, repl);
  }

  void consume_full(AState& st, int j, int l, const SymExpr& gamma, const SymExpr& g) {
    CoordResult r;
    r.index = j;
    r.shape = CoordResult::FixedZero;
    st.coords[j] = r;
    st.e -= 1;
    st.free_t.erase(l);
    SymExpr rest = g - gamma * SymExpr::t_sym(st.ring, l);
    subst_tvar(st, l, rest / (-gamma));
    subst_symbol(st, j, SymExpr::zero(st.ring));
  }

  void consume_bijective(AState& st, int j, int l) {
    CoordResult r;
    r.index = j;
    r.shape = CoordResult::FixedZero;
    st.coords[j] = r;
    st.e -= 1;
    st.free_t.erase(l);
    subst_tvar(st, l, SymExpr::zero(st.ring));
    subst_symbol(st, j, SymExpr::zero(st.ring));
  }

  // residual surjective via t_l (Frobenius power or joint additive pair):
  // the coordinate is killed; the solved variables stop being usable
  void consume_surjective(AState& st, int j, const std::vector<int>& solved, bool poly_zero,
                          int frob_pow = 0, const SymExpr* frob_rhs = nullptr) {
    CoordResult r;
    r.index = j;
    r.shape = CoordResult::FixedZero;
    st.coords[j] = r;
    st.e -= 1;
    for (int l : solved) {
      st.free_t.erase(l);
      if (poly_zero) {
        subst_tvar(st, l, SymExpr::zero(st.ring));
      } else {
        st.nonpoly_t.insert(l);
        if (frob_pow && frob_rhs) st.solved_frob[l] = {frob_pow, *frob_rhs};
      }
    }
    subst_symbol(st, j, SymExpr::zero(st.ring));
  }

  // replace t_l^(P*k) by R^k; every t_l exponent must be divisible by P
  static SymExpr subst_t_power(const SymExpr& g, int l, int P, const SymExpr& R) {
    int var = g.ring.t_var(l);
    int dmax = g.num.degree_in(var);
    if (dmax == 0) return g;
    SymExpr out(g.ring);
    PolyP acc(g.num.dom, g.ring.nvars());
    int kmax = dmax / P;
    std::vector<PolyP> rn{PolyP::constant(g.num.dom, g.ring.nvars(), 1)};
    std::vector<PolyP> rd{PolyP::constant(g.num.dom, g.ring.nvars(), 1)};
    for (int k = 1; k <= kmax; ++k) {
      rn.push_back(rn.back() * R.num);
      rd.push_back(rd.back() * R.den);
    }
    for (int e = 0; e <= dmax; ++e) {
      PolyP ce = g.num.coeff_of(var, e);
      if (ce.is_zero()) continue;
      if (e % P) throw std::logic_error("subst_t_power: exponent not divisible");
      acc = acc + ce * rn[e / P] * rd[kmax - e / P];
    }
    out.num = acc;
    out.den = g.den * rd[kmax];
    out.normalize();
    return out;
  }

  // eliminate implicitly solved variables from g by Frobenius twisting:
  // raising to the p-th power is a field automorphism, so the image only
  // twists; the coordinate records how many twists were applied
  bool frobenius_eliminate(AState& st, int j, SymExpr& g) {
    for (int guard = 0; guard < 8 && uses_any_t(g, st.nonpoly_t); ++guard) {
      int l = 0;
      for (int nl : st.nonpoly_t)
        if (g.uses_t(nl)) l = nl;
      auto it = st.solved_frob.find(l);
      if (it == st.solved_frob.end()) return false;
      int P = it->second.first;
      const SymExpr& R = it->second.second;
      int twists = 0, pe = 1;
      while (pe < P) {
        pe *= int(st.p);
        ++twists;
      }
      for (int k = 0; k < twists; ++k) g = g.pow_int(int(st.p));
      st.twist[j] += twists;
      g = subst_t_power(g, l, P, R);
    }
    return !uses_any_t(g, st.nonpoly_t);
  }

  void consume_coset(AState& st, int j, int l, const SymExpr& g, int kern) {
    CoordResult r;
    r.index = j;
    r.shape = CoordResult::Coset;
    r.coset_map = g;
    r.coset_var = l;
    r.coset_count = kern;
    auto tw = st.twist.find(j);
    r.coset_frob_twist = tw == st.twist.end() ? 0 : tw->second;
    st.coords[j] = r;
    st.e -= 1;
    st.m *= kern;
    st.free_t.erase(l);
    st.kernel_t.insert(l);
  }

  // branch on expr = 0 vs expr != 0; both sides re-analyze the current residual
  bool branch_on_zero(AState& st, const SymExpr& expr_in) {
    SymExpr expr = expr_in;
    expr.normalize();
    // strip the monomial content: factors over nonzero-domain symbols cannot
    // vanish; a possibly-zero symbol in the content is itself the branch point
    {
      Mono content = expr.num.content_mono();
      for (int j = 1; j <= st.ring.nroots; ++j) {
        int v = st.ring.a_var(j);
        if (!content[v]) continue;
        auto it = st.coords.find(j);
        auto shape = it == st.coords.end() ? CoordResult::FreeUnit : it->second.shape;
        if (shape == CoordResult::FreeUnit || shape == CoordResult::UnitMinus) continue;
        // content symbol that may be zero: branch directly on it
        SymExpr sym = SymExpr::a_sym(st.ring, j);
        return branch_on_symbol(st, j, SymExpr::zero(st.ring), sym);
      }
      expr.num = expr.num.divide_by_mono(content);
      expr.normalize();
    }
    if (provably_nonzero(st, expr)) {
      // stripping exposed a provably nonzero core; no branch is needed, but the
      // caller expected a split: record the condition and continue on one side
      AState ne = st;
      Cond c;
      c.expr = expr_in;
      c.nonzero = true;
      c.text = expr_in.str() + " != 0";
      ne.conds.push_back(c);
      run(std::move(ne));
      return false;
    }
    // solve for the highest-index symbol occurring linearly with invertible coefficient
    int s = 0;
    SymExpr A(st.ring), B(st.ring);
    for (int j = st.ring.nroots; j >= 1; --j) {
      if (!expr.num.uses_var(st.ring.a_var(j))) continue;
      if (expr.num.degree_in(st.ring.a_var(j)) != 1) continue;
      SymExpr cand_A(st.ring);
      cand_A.num = expr.num.coeff_of(st.ring.a_var(j), 1);
      cand_A.den = expr.den;
      cand_A.normalize();
      if (!provably_nonzero(st, cand_A)) continue;
      s = j;
      A = cand_A;
      B = SymExpr(st.ring);
      B.num = expr.num.coeff_of(st.ring.a_var(j), 0);
      B.den = expr.den;
      B.normalize();
      break;
    }
    if (s == 0) {
      emit_manual(st, "cannot branch on coefficient " + expr.str());
      return false;
    }
    SymExpr val = (-B) / A;
    if (!st.coords.count(s)) {
      emit_manual(st, "branch symbol without coordinate");
      return false;
    }
    return branch_on_symbol(st, s, val, expr);
  }

  // split on a_s = val vs a_s != val (via the vanishing expression expr)
  bool branch_on_symbol(AState& st, int s, const SymExpr& val, const SymExpr& expr) {

    // != branch
    {
      AState ne = st;
      Cond c;
      c.expr = expr;
      c.nonzero = true;
      c.text = expr.str() + " != 0";
      ne.conds.push_back(c);
      CoordResult& r = ne.coords[s];
      bool ok = true;
      if (val.is_zero()) {
        if (r.shape == CoordResult::FreeUnit) {
          // excluding зero from F_q^* changes nothing
        } else if (r.shape == CoordResult::FreeField) {
          r.shape = CoordResult::FreeUnit;
        } else {
          ok = false;
        }
      } else {
        if (r.shape == CoordResult::FreeUnit) {
          r.shape = CoordResult::UnitMinus;
          r.value = val;
        } else if (r.shape == CoordResult::FreeField) {
          r.shape = CoordResult::FieldMinus;
          r.value = val;
        } else {
          ok = false;
        }
      }
      if (ok)
        run(std::move(ne));
      else
        emit_manual(ne, "unsupported domain refinement");
    }
    // == branch
    {
      AState eq = st;
      Cond c;
      c.expr = expr;
      c.nonzero = false;
      std::string sym = (eq.coords[s].shape == CoordResult::FreeUnit ? "a_" : "b_") + std::to_string(s);
      c.text = sym + " = " + val.str();
      eq.conds.push_back(c);
      CoordResult& r = eq.coords[s];
      bool feasible = true;
      if (r.shape == CoordResult::FreeUnit) {
        if (val.is_zero())
          feasible = false;  // c-symbol cannot be zero
        else if (provably_nonzero(eq, val)) {
          r.shape = CoordResult::FixedValue;
          r.value = val;
        } else {
          emit_manual(eq, "cannot certify branch value nonzero: " + val.str());
          feasible = false;
        }
      } else if (r.shape == CoordResult::FreeField) {
        r.shape = val.is_zero() ? CoordResult::FixedZero : CoordResult::FixedValue;
        r.value = val;
      } else {
        emit_manual(eq, "unsupported domain refinement in == branch");
        feasible = false;
      }
      if (feasible) {
        subst_symbol(eq, s, val);
        run(std::move(eq));
      }
    }
    return false;
  }

  // additive single-variable analysis; returns false if it branched or failed
  enum class StepResult { Advanced, Stopped, Rewritten };

  StepResult additive_single(AState& st, int j, SymExpr& g, int l) {
    // exponent -> coefficient
    int dmax = g.degree_t(l);
    std::map<int, SymExpr> terms;
    for (int epow = 1; epow <= dmax; ++epow) {
      SymExpr cf = g.t_coeff(l, epow);
      if (!cf.is_zero()) terms[epow] = cf;
    }
    // Frobenius strip: replace t^(p*k) by t^k when every coefficient allows a p-th root
    auto strippable = [&]() {
      for (auto& [epow, cf] : terms) {
        if (epow % int(st.p)) return false;
        if (!cf.is_scalar_monomial()) return false;
        for (size_t v = 0; v < cf.num.terms.begin()->first.size(); ++v)
          if (cf.num.terms.begin()->first[v] % st.p) return false;
        for (size_t v = 0; v < cf.den.terms.begin()->first.size(); ++v)
          if (cf.den.terms.begin()->first[v] % st.p) return false;
      }
      return true;
    };
    auto proot = [&](const SymExpr& cf) {
      SymExpr r(st.ring);
      Mono mn = cf.num.terms.begin()->first, md = cf.den.terms.begin()->first;
      for (auto& x : mn) x = uint8_t(x / st.p);
      for (auto& x : md) x = uint8_t(x / st.p);
      r.num.terms[mn] = cf.num.terms.begin()->second;  // c^(1/p) = c over F_p
      r.den.terms.clear();
      r.den.terms[md] = cf.den.terms.begin()->second;
      r.normalize();
      return r;
    };
    bool stripped = false;
    while (terms.size() >= 1 && strippable()) {
      std::map<int, SymExpr> nt;
      for (auto& [epow, cf] : terms) nt[epow / st.p] = proot(cf);
      terms = std::move(nt);
      stripped = true;
    }
    if (stripped) {
      g = SymExpr::zero(st.ring);
      for (auto& [epow, cf] : terms) {
        SymExpr mono = SymExpr::constant(st.ring, 1);
        for (int i = 0; i < epow; ++i) mono = mono * SymExpr::t_sym(st.ring, l);
        g = g + cf * mono;
      }
      st.pending[st.pos].second = g;
      return StepResult::Rewritten;
    }

    std::set<int> exps;
    for (auto& [epow, cf] : terms) exps.insert(epow);
    if (exps == std::set<int>{1}) return StepResult::Rewritten;  // linear now

    if (exps == std::set<int>{int(st.p)}) {
      SymExpr alpha = terms[int(st.p)];
      if (!provably_nonzero(st, alpha)) {
        branch_on_zero(st, alpha);
        return StepResult::Stopped;
      }
      consume_bijective(st, j, l);  // alpha t^p alone is bijective
      return StepResult::Advanced;
    }
    if (exps == std::set<int>{1, int(st.p)}) {
      SymExpr alpha = terms[int(st.p)], beta = terms[1];
      if (!provably_nonzero(st, alpha)) {
        branch_on_zero(st, alpha);
        return StepResult::Stopped;
      }
      if (!provably_nonzero(st, beta)) {
        branch_on_zero(st, beta);
        return StepResult::Stopped;
      }
      if (st.p == 2) {
        consume_coset(st, j, l, g, 2);
        return StepResult::Advanced;
      }
      if (st.p == 3) {
        // kernel of alpha t^3 + beta t has size 3 iff -beta/alpha is a square
        SymExpr r = (-beta) / alpha;
        bool square = false;
        if (r.equals(SymExpr::constant(st.ring, 1))) square = true;
        if (!square && r.is_scalar_monomial()) {
          bool even = true;
          for (auto x : r.num.terms.begin()->first)
            if (x % 2) even = false;
          for (auto x : r.den.terms.begin()->first)
            if (x % 2) even = false;
          if (even && r.num.terms.begin()->second == 1 && r.den.terms.begin()->second == 1)
            square = true;
        }
        if (square) {
          consume_coset(st, j, l, g, 3);
          return StepResult::Advanced;
        }
        emit_manual(st, "p=3 additive kernel depends on square class of " + r.str());
        return StepResult::Stopped;
      }
      emit_manual(st, "additive residual at p > 3");
      return StepResult::Stopped;
    }
    emit_manual(st, "unsupported additive exponent pattern");
    return StepResult::Stopped;
  }

  // g restricted to the stabilizer of earlier coset choices: subtract the
  // multiple of each coset map, which vanishes on its kernel
  bool kernel_reduce(AState& st, SymExpr& g) {
    for (int guard = 0; guard < 8 && uses_any_t(g, st.kernel_t); ++guard) {
      int l = 0;
      for (int kl : st.kernel_t)
        if (g.uses_t(kl)) l = kl;
      const CoordResult* owner = nullptr;
      for (auto& [idx, r] : st.coords)
        if (r.shape == CoordResult::Coset && r.coset_var == l) owner = &r;
      if (!owner) return false;
      int pp = int(st.p);
      SymExpr top_g = g.t_coeff(l, pp), top_phi = owner->coset_map.t_coeff(l, pp);
      if (top_phi.is_zero()) return false;
      SymExpr c = top_g / top_phi;
      SymExpr reduced = g - c * owner->coset_map;
      if (reduced.uses_t(l)) return false;  // leave g as is; caller decides
      g = reduced;
    }
    return !uses_any_t(g, st.kernel_t);
  }

  // the additive part of g in a single variable, as (alpha, beta) of alpha t^p + beta t
  bool part_coeffs(const AState& st, const SymExpr& g, int l, SymExpr& alpha, SymExpr& beta) const {
    if (g.degree_t(l) != int(st.p)) return false;
    alpha = g.t_coeff(l, int(st.p));
    beta = g.t_coeff(l, 1);
    for (int e = 2; e < int(st.p); ++e)
      if (!g.t_coeff(l, e).is_zero()) return false;
    return true;
  }

  // Reductions against consumed surjective pair rows, whose stabilizer is the
  // zero set of the row.  Either subtract a multiple of the row outright, or,
  // when g splits as lambda*(one side of the row) + F(t_free), use that the
  // restricted sweep of that side is ker Tr(c_P/lambda .) n ker Tr(c_Q/lambda .)
  // while im F = ker Tr(c_F .): containment holds iff c_F lies in the F_p-span
  // of the adjusted functionals, and then the image over the stabilizer is im F.
  bool pair_reduce(AState& st, SymExpr& g) {
    if (st.p != 2) return false;
    for (auto& [row, ta, tb] : st.pair_rows) {
      bool uses_a = g.uses_t(ta), uses_b = g.uses_t(tb);
      if (!uses_a && !uses_b) continue;
      // full subtraction: g - c*row eliminates both variables
      {
        int lv = uses_a ? ta : tb;
        SymExpr top_g = g.t_coeff(lv, int(st.p)), top_r = row.t_coeff(lv, int(st.p));
        if (!top_r.is_zero()) {
          SymExpr c = top_g / top_r;
          SymExpr red = g - c * row;
          if (!red.uses_t(ta) && !red.uses_t(tb)) {
            g = red;
            return true;
          }
        }
      }
      if (uses_a && uses_b) continue;
      int side = uses_a ? ta : tb, other = uses_a ? tb : ta;
      SymExpr aP(st.ring), bP(st.ring), aQ(st.ring), bQ(st.ring), aG(st.ring), bG(st.ring);
      if (!part_coeffs(st, row, side, aP, bP)) continue;
      if (!part_coeffs(st, row, other, aQ, bQ)) continue;
      if (!part_coeffs(st, g, side, aG, bG)) continue;
      if (bP.is_zero() || bQ.is_zero() || bG.is_zero()) continue;
      SymExpr lambda = bG / bP;
      if (!(aG.equals(lambda * aP))) continue;  // g's part must be lambda * row's part
      SymExpr F = g - lambda * (aP * SymExpr::t_sym(st.ring, side).pow_int(int(st.p)) +
                                bP * SymExpr::t_sym(st.ring, side));
      if (F.uses_t(ta) || F.uses_t(tb)) continue;
      // F must be a single-free-variable alpha t^p + beta t form
      int fv = 0;
      for (int l = 1; l <= st.ring.nroots; ++l)
        if (F.uses_t(l)) {
          if (fv) {
            fv = -1;
            break;
          }
          fv = l;
        }
      if (fv <= 0 || !st.free_t.count(fv)) continue;
      SymExpr aF(st.ring), bF(st.ring);
      if (!part_coeffs(st, F, fv, aF, bF)) continue;
      if (!provably_nonzero(st, aF) || !provably_nonzero(st, bF)) continue;
      if (!provably_nonzero(st, aP) || !provably_nonzero(st, aQ)) continue;
      // functionals: c_X = alpha/beta^p; adjusted by the lambda scaling
      SymExpr cP = aP / (bP * bP), cQ = aQ / (bQ * bQ), cF = aF / (bF * bF);
      SymExpr cPl = cP / lambda, cQl = cQ / lambda;
      bool in_span = false;
      for (int x1 = 0; x1 < int(st.p) && !in_span; ++x1)
        for (int x2 = 0; x2 < int(st.p) && !in_span; ++x2) {
          SymExpr comb = SymExpr::constant(st.ring, x1) * cPl + SymExpr::constant(st.ring, x2) * cQl;
          if (cF.equals(comb)) in_span = true;
        }
      if (!in_span) continue;
      g = F;
      return true;
    }
    return false;
  }

  // returns true when the caller should advance to the next residual
  bool step(AState& st) {
    for (int guard = 0; guard < 64; ++guard) {
      int j = st.pending[st.pos].first;
      SymExpr g = st.pending[st.pos].second;
      g.normalize();

      if (!g.is_zero() && uses_any_t(g, st.kernel_t)) kernel_reduce(st, g);
      g.normalize();
      st.pending[st.pos].second = g;

      if (g.is_zero()) {
        CoordResult r;
        r.index = j;
        r.shape = CoordResult::FreeField;
        st.coords[j] = r;
        return true;
      }
      if (uses_any_t(g, st.nonpoly_t) && frobenius_eliminate(st, j, g)) {
        g.normalize();
        st.pending[st.pos].second = g;
        continue;
      }

      // single-linear candidates, maximal variable first; valid even when other
      // variables are restricted (surjectivity via a free variable)
      std::vector<std::pair<int, SymExpr>> candidates;
      for (auto it = st.free_t.rbegin(); it != st.free_t.rend(); ++it) {
        int l = *it;
        if (g.degree_t(l) != 1) continue;
        SymExpr gamma = g.t_coeff(l, 1);
        bool tfree = true;
        for (int m2 = 1; m2 <= st.ring.nroots; ++m2)
          if (gamma.uses_t(m2)) tfree = false;
        if (tfree) candidates.push_back({l, gamma});
      }
      if (!candidates.empty()) {
        for (auto& [l, gamma] : candidates) {
          if (provably_nonzero(st, gamma)) {
            consume_full(st, j, l, gamma, g);
            return true;
          }
        }
        branch_on_zero(st, candidates.front().second);
        return false;
      }
      if (uses_any_t(g, st.kernel_t) || uses_any_t(g, st.nonpoly_t)) {
        if (pair_reduce(st, g)) {
          st.pending[st.pos].second = g;
          continue;
        }
        if (try_block(st)) return false;  // block leaf emitted
        emit_manual(st, "residual touches a restricted variable");
        return false;
      }

      // additive pattern: every term is a single t-variable with p-power exponent
      std::set<int> avars;
      bool additive = true;
      for (auto& [mono, cf] : g.num.terms) {
        int tv = 0, texp = 0, tcount = 0;
        for (int l = 1; l <= st.ring.nroots; ++l) {
          if (mono[st.ring.t_var(l)]) {
            ++tcount;
            tv = l;
            texp = mono[st.ring.t_var(l)];
          }
        }
        if (tcount != 1) {
          additive = false;
          break;
        }
        int pe = 1;
        bool ppow = false;
        for (int k = 0; k < 8; ++k) {
          if (texp == pe) ppow = true;
          pe *= int(st.p);
        }
        if (!ppow) {
          additive = false;
          break;
        }
        avars.insert(tv);
      }
      if (!additive) {
        emit_manual(st, "non-additive residual");
        return false;
      }
      for (int l : avars)
        if (!st.free_t.count(l)) {
          emit_manual(st, "additive residual uses consumed variable");
          return false;
        }

      // a variable appearing only as one Frobenius-power term makes the whole
      // map surjective in that variable (p-th power roots are unique)
      {
        int fl = 0;
        SymExpr falpha(st.ring);
        for (auto it = avars.rbegin(); it != avars.rend(); ++it) {
          int l = *it;
          int dl = g.degree_t(l);
          if (dl < int(st.p)) continue;
          bool single = true;
          SymExpr alpha(st.ring);
          int nterms = 0;
          for (int epow = 1; epow <= dl; ++epow) {
            SymExpr cf = g.t_coeff(l, epow);
            if (cf.is_zero()) continue;
            ++nterms;
            if (epow != dl) single = false;
            alpha = cf;
          }
          if (!single || nterms != 1) continue;
          fl = l;
          falpha = alpha;
          break;
        }
        if (fl) {
          if (!provably_nonzero(st, falpha)) {
            branch_on_zero(st, falpha);
            return false;
          }
          bool alone = avars.size() == 1;  // rest == 0: the unique solution is t = 0
          int P = g.degree_t(fl);
          SymExpr tpow = SymExpr::constant(st.ring, 1);
          for (int k = 0; k < P; ++k) tpow = tpow * SymExpr::t_sym(st.ring, fl);
          SymExpr rest = g - falpha * tpow;
          SymExpr rhs = (-rest) / falpha;  // t_fl^P = rhs on the stabilizer
          consume_surjective(st, j, {fl}, alone, P, &rhs);
          return true;
        }
      }

      if (avars.size() == 1) {
        auto res = additive_single(st, j, g, *avars.begin());
        if (res == StepResult::Advanced) return true;
        if (res == StepResult::Stopped) return false;
        continue;  // rewritten; reanalyze
      }

      // multi-variable: merge two variables with equal leading p-power exponents
      bool merged = false;
      std::vector<int> vars(avars.begin(), avars.end());
      for (size_t a = 0; a < vars.size() && !merged; ++a) {
        for (size_t b = 0; b < vars.size() && !merged; ++b) {
          if (a == b) continue;
          int l = vars[a], m2 = vars[b];
          int el = g.degree_t(l), em = g.degree_t(m2);
          if (el != em || el <= 1) continue;
          SymExpr alpha = g.t_coeff(l, el), gamma2 = g.t_coeff(m2, em);
          if (alpha.is_zero() || gamma2.is_zero()) continue;
          SymExpr ratio = (-gamma2) / alpha;
          if (!ratio.is_scalar_monomial()) continue;
          // p^k-th root of the monomial, k = log_p(el)
          Mono mn = ratio.num.terms.begin()->first, md = ratio.den.terms.begin()->first;
          bool rootable = true;
          for (auto x : mn)
            if (x % el) rootable = false;
          for (auto x : md)
            if (x % el) rootable = false;
          if (!rootable) continue;
          SymExpr lambda(st.ring);
          for (auto& x : mn) x = uint8_t(x / el);
          for (auto& x : md) x = uint8_t(x / el);
          lambda.num.terms[mn] = ratio.num.terms.begin()->second;
          lambda.den.terms.clear();
          lambda.den.terms[md] = ratio.den.terms.begin()->second;
          lambda.normalize();
          // t_l := t_l + lambda t_m cancels the t_m^el term
          reparam(st, l, lambda * SymExpr::t_sym(st.ring, m2));
          merged = true;
        }
      }
      if (merged) continue;

      // two full alpha t^p + beta t parts: the images are equal subgroups iff
      // alpha delta^p = gamma beta^p; otherwise their sum is everything
      if (st.p == 2 && vars.size() >= 2) {
        int la = 0, lb = 0;
        for (size_t a = 0; a < vars.size() && !la; ++a)
          for (size_t b = a + 1; b < vars.size() && !la; ++b) {
            auto shape_ok = [&](int l) {
              return g.degree_t(l) == int(st.p) && !g.t_coeff(l, int(st.p)).is_zero() &&
                     !g.t_coeff(l, 1).is_zero();
            };
            if (shape_ok(vars[a]) && shape_ok(vars[b])) {
              la = vars[a];
              lb = vars[b];
            }
          }
        if (la) {
          SymExpr alpha = g.t_coeff(la, int(st.p)), beta = g.t_coeff(la, 1);
          SymExpr gamma2 = g.t_coeff(lb, int(st.p)), delta = g.t_coeff(lb, 1);
          bool coeffs_ok = true;
          for (auto& cf : {alpha, beta, gamma2, delta})
            if (!provably_nonzero(st, cf)) {
              branch_on_zero(st, cf);
              coeffs_ok = false;
              break;
            }
          if (!coeffs_ok) return false;
          SymExpr E = alpha * delta.pow_int(int(st.p)) - gamma2 * beta.pow_int(int(st.p));
          if (E.is_zero()) {
            // images coincide; t_la := t_la + (delta/beta) t_lb merges the parts
            reparam(st, la, (delta / beta) * SymExpr::t_sym(st.ring, lb));
            continue;
          }
          if (provably_nonzero(st, E)) {
            // distinct index-p subgroups sum to all of F_q
            st.pair_rows.push_back({g, la, lb});
            consume_surjective(st, j, {la, lb}, false);
            return true;
          }
          branch_on_zero(st, E);
          return false;
        }
      }

      if (try_block(st)) return false;
      emit_manual(st, "no additive merge applies");
      return false;
    }
    emit_manual(st, "analysis loop limit");
    return false;
  }
};

}  // namespace

FamilyAnalysis analyze_family(const Family& fam, const RootSystem& rs, uint32_t p) {
  Analyzer an(rs, p);
  FamilyAnalysis fa;
  fa.c = fam.c;
  fa.d = fam.d;
  fa.normalized = fam.normalized;
  try {
    fa.branches = an.run_family(fam);
  } catch (const std::exception& ex) {
    fa.branches.clear();
    Branch b;
    b.manual = true;
    b.manual_reason = std::string("analysis aborted: ") + ex.what();
    fa.branches.push_back(std::move(b));
  }
  for (auto& b : fa.branches) {
    if (b.manual) {
      fa.manual = true;
      continue;
    }
    fa.total = fa.total + b.size;
  }
  return fa;
}

TypeAnalysis analyze_type(const RootSystem& rs, uint32_t p, ClassifyOptions opts) {
  TypeAnalysis ta;
  ta.classification = classify(rs, p, opts);
  for (auto& fam : ta.classification.families) {
    ta.families.push_back(analyze_family(fam, rs, p));
    if (ta.families.back().manual) ta.any_manual = true;
  }
  if (!ta.any_manual)
    for (auto& fa : ta.families) ta.k_poly = ta.k_poly + fa.total;
  return ta;
}

VPoly total_count(const TypeAnalysis& ta) {
  if (ta.any_manual) {
    std::string msg = "manual families present:";
    for (auto& fa : ta.families)
      if (fa.manual) {
        msg += " {c=";
        for (int j : fa.c) msg += std::to_string(j) + ",";
        msg += "}";
        for (auto& b : fa.branches)
          if (b.manual) msg += " [" + b.manual_reason + "]";
      }
    throw std::runtime_error(msg);
  }
  return ta.k_poly;
}

bool mass_formula_holds(const TypeAnalysis& ta, int nroots) {
  // sum over branches of size * q^(N - e) / m must equal q^N
  // work over common denominator lcm of the m's
  long long lcm = 1;
  for (auto& fa : ta.families)
    for (auto& b : fa.branches) {
      if (b.manual) return false;
      lcm = std::lcm(lcm, b.cent_m);
    }
  VPoly acc;
  for (auto& fa : ta.families)
    for (auto& b : fa.branches) {
      VPoly term = b.size * VPoly::q_power(nroots - b.cent_e);
      term = term * VPoly::constant(lcm / b.cent_m);
      acc = acc + term;
    }
  VPoly expect = VPoly::q_power(nroots) * VPoly::constant(lcm);
  return acc == expect;
}

}  // namespace uconj
