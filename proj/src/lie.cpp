#include "uconj/lie.hpp"

#include <algorithm>
#include <stdexcept>

#include "uconj/poly.hpp"
#include "uconj/rational.hpp"

namespace uconj {

namespace {

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(rs) {
  nplus_ = rs_.nroots();
  dim_ = 2 * nplus_ + rs_.rank;
  for (int i = 1; i <= nplus_; ++i) {
    lookup_[rs_.positive_roots[i - 1].coeffs] = i;
    lookup_[negated(rs_.positive_roots[i - 1].coeffs)] = -i;
  }
  propagate_signs();
  build_adjoint();
  certify();
}

std::vector<int> ChevalleyBasis::root_vec(SRoot a) const {
  const auto& v = rs_.positive_roots[std::abs(a) - 1].coeffs;
  return a > 0 ? v : negated(v);
}

long long ChevalleyBasis::len_sq(SRoot a) const {
  return rs_.root_length_sq(rs_.positive_roots[std::abs(a) - 1]);
}

SRoot ChevalleyBasis::sum(SRoot a, SRoot b) const {
  auto va = root_vec(a), vb = root_vec(b);
  for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
  auto it = lookup_.find(va);
  return it == lookup_.end() ? 0 : it->second;
}

int ChevalleyBasis::basis_index(SRoot a) const { return a > 0 ? a - 1 : nplus_ + (-a) - 1; }

long long ChevalleyBasis::N(SRoot a, SRoot b) const {
  auto it = n_.find({a, b});
  return it == n_.end() ? 0 : it->second;
}

bool ChevalleyBasis::known(SRoot a, SRoot b) const { return n_.count({a, b}) > 0; }

void ChevalleyBasis::set_n(SRoot a, SRoot b, long long v) {
  auto it = n_.find({a, b});
  if (it != n_.end()) {
    if (it->second != v) throw std::logic_error("structure constants: inconsistent sign propagation");
    return;
  }
  n_[{a, b}] = v;
  // R1 antisymmetry and R2 negation give three more pairs
  n_[{b, a}] = -v;
  n_[{-a, -b}] = -v;
  n_[{-b, -a}] = v;
  // R3 on the zero-sum triple {a, b, c} with c = -(a+b):
  //   N_{ab}/(c,c) = N_{bc}/(a,a) = N_{ca}/(b,b)
  SRoot c = sum(a, b);
  if (c == 0) throw std::logic_error("structure constants: pair without root sum");
  c = -c;
  // R3 on the zero-sum triple (a, b, c): N_{ab}/(c,c) = N_{bc}/(a,a) = N_{ca}/(b,b)
  Rat q1 = Rat(v) * Rat(len_sq(a)) / Rat(len_sq(c));
  Rat q2 = Rat(v) * Rat(len_sq(b)) / Rat(len_sq(c));
  if (!q1.is_integer() || !q2.is_integer())
    throw std::logic_error("structure constants: non-integer propagation");
  if (!known(b, c)) set_n(b, c, q1.num);
  if (!known(c, a)) set_n(c, a, q2.num);
}

void ChevalleyBasis::propagate_signs() {
  auto magnitude = [&](SRoot a, SRoot b) -> long long {
    // |N_{ab}| = p + 1 with p the largest m such that b - m a is a root
    auto vb = root_vec(b);
    auto va = root_vec(a);
    int m = 0;
    for (;;) {
      for (size_t i = 0; i < vb.size(); ++i) vb[i] -= va[i];
      if (!lookup_.count(vb)) break;
      ++m;
    }
    return m + 1;
  };

  // process positive roots in enumeration order (refines height)
  for (int g = 1; g <= nplus_; ++g) {
    // special pairs (a, b): a < b, both positive, a + b = beta_g
    std::vector<std::pair<int, int>> special;
    for (int a = 1; a < g; ++a)
      for (int b = a + 1; b <= nplus_; ++b)
        if (sum(a, b) == g) special.push_back({a, b});
    if (special.empty()) continue;
    std::sort(special.begin(), special.end());
    // extraspecial pair: minimal a; fixed positive sign
    {
      auto [a, b] = special.front();
      if (!known(a, b)) set_n(a, b, magnitude(a, b));
    }
    for (size_t s = 1; s < special.size(); ++s) {
      auto [a2, b2] = special[s];
      if (known(a2, b2)) continue;
      auto [a, b] = special.front();
      // Jacobi on (a, b, -b2), which lands in e_{a2}:
      //   N_{a,b} N_{g,-b2} + N_{b,-b2} N_{b-b2,a} + N_{-b2,a} N_{a-b2,b} = 0
      // and R3 turns N_{g,-b2} into N_{a2,b2} * (a2,a2)/(g,g).
      long long t2 = 0, t3 = 0;
      if (sum(b, -b2) != 0 && known(b, -b2) && known(sum(b, -b2), a))
        t2 = N(b, -b2) * N(sum(b, -b2), a);
      else if (sum(b, -b2) != 0)
        throw std::logic_error("sign propagation: missing lower data (t2)");
      if (sum(-b2, a) != 0 && known(-b2, a) && known(sum(-b2, a), b))
        t3 = N(-b2, a) * N(sum(-b2, a), b);
      else if (sum(-b2, a) != 0)
        throw std::logic_error("sign propagation: missing lower data (t3)");
      long long nab = N(a, b);
      // N_{g,-b2} = -(t2 + t3)/N_{a,b}
      if ((t2 + t3) % nab != 0) throw std::logic_error("sign propagation: non-integer quotient");
      long long ng_mb2 = -(t2 + t3) / nab;
      Rat na2b2 = Rat(ng_mb2) * Rat(rs_.root_length_sq(rs_.positive_roots[g - 1])) /
                  Rat(len_sq(a2));
      if (!na2b2.is_integer()) throw std::logic_error("sign propagation: non-integer result");
      long long expect = magnitude(a2, b2);
      if (std::abs(na2b2.num) != expect)
        throw std::logic_error("sign propagation: magnitude mismatch");
      set_n(a2, b2, na2b2.num);
    }
  }

  // sanity: every pair with a root sum has a value now
  for (int a = -nplus_; a <= nplus_; ++a) {
    if (a == 0) continue;
    for (int b = -nplus_; b <= nplus_; ++b) {
      if (b == 0 || b == a || b == -a) continue;
      if (sum(a, b) != 0 && !known(a, b))
        throw std::logic_error("sign propagation: incomplete table");
    }
  }
}

void ChevalleyBasis::build_adjoint() {
  // coroot of gamma in terms of simple coroots: gamma^vee = sum m_i (a_i,a_i)/(g,g) a_i^vee
  auto coroot = [&](SRoot g) {
    std::vector<long long> c(rs_.rank);
    auto v = root_vec(g);
    long long glen = len_sq(g);
    for (int i = 0; i < rs_.rank; ++i) {
      Rat q = Rat(v[i]) * Rat(rs_.length_sq[i]) / Rat(glen);
      if (!q.is_integer()) throw std::logic_error("adjoint: non-integer coroot");
      c[i] = q.num;
    }
    return c;
  };
  auto pairing_with_coroot = [&](SRoot b, int i) {
    // <beta, alpha_i^vee> = sum_j beta_j cartan[j][i]
    auto v = root_vec(b);
    long long s = 0;
    for (int j = 0; j < rs_.rank; ++j) s += (long long)v[j] * rs_.cartan[j][i];
    return s;
  };

  for (int gi = 1; gi <= nplus_; ++gi) {
    for (SRoot g : {gi, -gi}) {
      IMat M(dim_, std::vector<long long>(dim_, 0));
      // action on root vectors
      for (int bi = 1; bi <= nplus_; ++bi) {
        for (SRoot b : {bi, -bi}) {
          int col = basis_index(b);
          if (b == -g) {
            // [e_g, e_{-g}] = h_g
            auto c = coroot(g);
            for (int i = 0; i < rs_.rank; ++i) M[2 * nplus_ + i][col] += c[i];
          } else {
            SRoot s = sum(g, b);
            if (s != 0) M[basis_index(s)][col] += N(g, b);
          }
        }
      }
      // action on h_i: [e_g, h_i] = -<g, a_i^vee> e_g
      for (int i = 0; i < rs_.rank; ++i)
        M[basis_index(g)][2 * nplus_ + i] -= pairing_with_coroot(g, i);
      ad_[g] = std::move(M);
    }
  }
}

const IMat& ChevalleyBasis::ad(SRoot g) const { return ad_.at(g); }

void ChevalleyBasis::certify() const {
  // ad([x,y]) == [ad x, ad y] on all basis pairs is the Jacobi identity in
  // matrix form and certifies the whole table.
  auto ad_of = [&](int k) -> IMat {
    if (k < 2 * nplus_) {
      SRoot g = (k < nplus_) ? (k + 1) : -(k - nplus_ + 1);
      return ad_.at(g);
    }
    int i = k - 2 * nplus_;
    IMat M(dim_, std::vector<long long>(dim_, 0));
    for (int bi = 1; bi <= nplus_; ++bi)
      for (SRoot b : {bi, -bi}) {
        auto v = root_vec(b);
        long long s = 0;
        for (int j = 0; j < rs_.rank; ++j) s += (long long)v[j] * rs_.cartan[j][i];
        M[basis_index(b)][basis_index(b)] = s;
      }
    return M;
  };
  std::vector<IMat> ads(dim_);
  for (int k = 0; k < dim_; ++k) ads[k] = ad_of(k);
  auto bracket_vec = [&](int j, int k) {
    // [b_j, b_k] as a coordinate vector = column k of ad(b_j)
    std::vector<long long> v(dim_);
    for (int r = 0; r < dim_; ++r) v[r] = ads[j][r][k];
    return v;
  };

  for (int x = 0; x < dim_; ++x)
    for (int y = x + 1; y < dim_; ++y) {
      std::vector<long long> b = bracket_vec(x, y);
      IMat lhs(dim_, std::vector<long long>(dim_, 0));
      for (int k = 0; k < dim_; ++k) {
        if (b[k] == 0) continue;
        for (int r = 0; r < dim_; ++r)
          for (int c = 0; c < dim_; ++c) lhs[r][c] += b[k] * ads[k][r][c];
      }
      IMat rhs = imat_mul(ads[x], ads[y]);
      IMat yx = imat_mul(ads[y], ads[x]);
      for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) rhs[r][c] -= yx[r][c];
      if (!imat_equal(lhs, rhs)) throw std::logic_error("Chevalley basis failed Jacobi certification");
    }
}

// ---------------------------------------------------------------------------
// Commutator coefficient extraction in the adjoint representation.

namespace {

using PMat = std::vector<std::vector<PolyQ>>;  // matrices over Q[t,u]

PMat pmat_identity(int n) {
  RatDom dom;
  PMat M(n, std::vector<PolyQ>(n, PolyQ::zero(dom, 2)));
  for (int i = 0; i < n; ++i) M[i][i] = PolyQ::constant(dom, 2, 1);
  return M;
}

PMat pmat_mul(const PMat& a, const PMat& b) {
  int n = int(a.size());
  RatDom dom;
  PMat r(n, std::vector<PolyQ>(n, PolyQ::zero(dom, 2)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = r[i][j] + a[i][k] * b[k][j];
      }
    }
  return r;
}

// exp(c * var * X) for a nilpotent integer matrix X, var in {0 (=t), 1 (=u)}
PMat pmat_exp(const IMat& X, int var, long long scale) {
  int n = int(X.size());
  RatDom dom;
  PMat R = pmat_identity(n);
  // term_k = (scale * var)^k X^k / k!
  IMat Xk = imat_identity(n);
  Rat factor(1);
  for (int k = 1;; ++k) {
    Xk = imat_mul(Xk, X);
    bool zero = true;
    for (auto& row : Xk)
      for (auto v : row)
        if (v) zero = false;
    if (zero) break;
    factor = factor * Rat(scale, k);
    PolyQ mono = PolyQ::variable(dom, 2, var, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (Xk[i][j] == 0) continue;
        R[i][j] = R[i][j] + mono.scaled(factor * Rat(Xk[i][j]));
      }
    if (k > 40) throw std::logic_error("pmat_exp: matrix not nilpotent");
  }
  return R;
}

// exp(P(t,u) * X) for polynomial P and nilpotent X
PMat pmat_exp_poly(const IMat& X, const PolyQ& P) {
  int n = int(X.size());
  RatDom dom;
  PMat R = pmat_identity(n);
  IMat Xk = imat_identity(n);
  Rat factor(1);
  PolyQ Pk = PolyQ::constant(dom, 2, 1);
  for (int k = 1;; ++k) {
    Xk = imat_mul(Xk, X);
    bool zero = true;
    for (auto& row : Xk)
      for (auto v : row)
        if (v) zero = false;
    if (zero) break;
    factor = factor * Rat(1, k);
    Pk = Pk * P;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (Xk[i][j] == 0) continue;
        R[i][j] = R[i][j] + Pk.scaled(factor * Rat(Xk[i][j]));
      }
    if (k > 40) throw std::logic_error("pmat_exp_poly: matrix not nilpotent");
  }
  return R;
}

}  // namespace

std::shared_ptr<const CommutatorTable> commutator_table(const RootSystem& rs) {
  static std::map<std::string, std::shared_ptr<const CommutatorTable>> cache;
  auto key = rs.name();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto tab = std::make_shared<CommutatorTable>();
  tab->rs = rs;
  tab->basis = std::make_shared<ChevalleyBasis>(rs);
  const auto& cb = *tab->basis;
  int N = rs.nroots();
  tab->rules.assign(N, std::vector<std::vector<CommCorrection>>(N));

  for (int lo = 1; lo <= N; ++lo) {
    for (int hi = lo + 1; hi <= N; ++hi) {
      // the correction cone {i*lo + j*hi} in enumeration order
      std::vector<std::tuple<int, int, int>> cone;  // (gamma, i, j)
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          std::vector<int> v = rs.positive_roots[lo - 1].coeffs;
          const auto& w = rs.positive_roots[hi - 1].coeffs;
          for (size_t k = 0; k < v.size(); ++k) v[k] = v[k] * i + w[k] * j;
          int g = rs.index_of(v);
          if (g) cone.push_back({g, i, j});
        }
      if (cone.empty()) continue;
      std::sort(cone.begin(), cone.end());

      // W = exp(-u ad_hi) exp(-t ad_lo) exp(u ad_hi) exp(t ad_lo)
      const IMat& Xl = cb.ad(lo);
      const IMat& Xh = cb.ad(hi);
      PMat W = pmat_mul(pmat_mul(pmat_exp(Xh, 1, -1), pmat_exp(Xl, 0, -1)),
                        pmat_mul(pmat_exp(Xh, 1, 1), pmat_exp(Xl, 0, 1)));

      std::vector<CommCorrection> rule;
      for (auto& [g, gi, gj] : cone) {
        const IMat& Xg = cb.ad(g);
        int r = -1, c = -1;
        for (int i = 0; i < cb.dim() && r < 0; ++i)
          for (int j = 0; j < cb.dim(); ++j)
            if (Xg[i][j] != 0) {
              r = i;
              c = j;
              break;
            }
        if (r < 0) throw std::logic_error("commutator_table: trivial adjoint");
        PolyQ P = W[r][c];
        // divide by the integer Xg[r][c]
        P = P.scaled(Rat(1, Xg[r][c]));
        if (!P.is_zero()) {
          if (!P.is_single_term()) throw std::logic_error("commutator_table: non-monomial correction");
          auto& [mono, coef] = *P.terms.begin();
          if (!coef.is_integer()) throw std::logic_error("commutator_table: non-integer coefficient");
          if (int(mono[0]) != gi || int(mono[1]) != gj)
            throw std::logic_error("commutator_table: unexpected exponents");
          rule.push_back({g, gi, gj, coef.num});
        }
        // peel: W := exp(-P ad_g) W
        if (!P.is_zero()) W = pmat_mul(pmat_exp_poly(Xg, -P), W);
      }
      // after peeling the full cone, W must be the identity
      PMat I = pmat_identity(cb.dim());
      for (int i = 0; i < cb.dim(); ++i)
        for (int j = 0; j < cb.dim(); ++j)
          if (!(W[i][j] == I[i][j])) throw std::logic_error("commutator_table: residue after peeling");
      tab->rules[lo - 1][hi - 1] = std::move(rule);
    }
  }

  cache[key] = tab;
  return tab;
}

}  // namespace uconj
