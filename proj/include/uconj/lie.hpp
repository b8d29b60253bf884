#pragma once

#include <map>
#include <memory>
#include <vector>

#include "uconj/root_system.hpp"
#include "uconj/snf.hpp"

namespace uconj {

// Signed root index: +i for beta_i, -i for -beta_i (i is 1-based).
using SRoot = int;

// Chevalley basis data for the full root system: integer constants N_{ab}
// for every ordered pair of roots with root sum, plus the adjoint action.
// Signs are fixed deterministically: extraspecial pairs (in the module's
// positive-root enumeration) get positive sign and everything else is
// propagated through the standard identities, then the whole table is
// certified by a full Jacobi check on the adjoint bracket.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int dim() const { return dim_; }

  // N_{alpha beta}; zero when alpha + beta is not a root.
  long long N(SRoot a, SRoot b) const;

  // adjoint matrix of e_{gamma} on the basis {e_{+-beta_i}} u {h_1..h_rank}
  const IMat& ad(SRoot g) const;

  SRoot sum(SRoot a, SRoot b) const;  // 0 when not a root
  std::vector<int> root_vec(SRoot a) const;
  long long len_sq(SRoot a) const;

  // basis layout: 0..N-1 positive roots, N..2N-1 negatives, then h_1..h_rank
  int basis_index(SRoot a) const;

 private:
  RootSystem rs_;
  int nplus_ = 0, dim_ = 0;
  std::map<std::vector<int>, SRoot> lookup_;
  std::map<std::pair<SRoot, SRoot>, long long> n_;
  std::map<SRoot, IMat> ad_;

  void propagate_signs();
  void build_adjoint();
  void certify() const;
  void set_n(SRoot a, SRoot b, long long v);
  bool known(SRoot a, SRoot b) const;
};

// One rewriting rule of collection from the left:
//   x_hi(u) x_lo(t) = x_lo(t) x_hi(u) * prod x_gamma(coeff * t^i * u^j)
// with the product ascending in gamma.
struct CommCorrection {
  int gamma;  // 1-based enumeration index
  int i, j;   // exponents on t (lo coefficient) and u (hi coefficient)
  long long coeff;
};

struct CommutatorTable {
  RootSystem rs;
  // rules[lo-1][hi-1], populated for lo < hi
  std::vector<std::vector<std::vector<CommCorrection>>> rules;
  std::shared_ptr<ChevalleyBasis> basis;

  const std::vector<CommCorrection>& rule(int lo, int hi) const { return rules[lo - 1][hi - 1]; }
};

// Build (and cache) the commutator table for a root system.
std::shared_ptr<const CommutatorTable> commutator_table(const RootSystem& rs);

}  // namespace uconj
