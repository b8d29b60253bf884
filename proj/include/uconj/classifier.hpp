#pragma once

#include <map>
#include <string>
#include <vector>

#include "uconj/engine.hpp"
#include "uconj/root_system.hpp"
#include "uconj/symexpr.hpp"

namespace uconj {

// One step decision along a family's history.
struct StepRecord {
  enum Kind { Ramification, Inert, Unresolved } kind;
  int step;        // the coordinate i+1 that was considered
  SymExpr g;       // coordinate i+1 of x . y M_{i+1}
  bool ram_added = false;  // this family is the branch with step in c
  int inert_l = 0;
  SymExpr inert_h;      // monomial coefficient of t_l in g
  SymExpr inert_subst;  // value substituted for t_l
};

// Family state (c, d) with residual functions and the approximated
// centralizer parameterization f_{c,i,j}.
struct Family {
  SymRingSpec ring;
  std::vector<int> c, d;          // ascending index sets, disjoint
  std::vector<int> normalized;    // c' subset of c, coefficients scaled to 1
  std::vector<SymExpr> params;    // f_j at position j-1; starts as (t_1..t_N)
  std::map<int, SymExpr> residuals;  // j in d -> recorded g_j
  std::vector<StepRecord> history;
  int step = 0;

  bool in_c(int j) const { return std::find(c.begin(), c.end(), j) != c.end(); }
  bool in_d(int j) const { return std::find(d.begin(), d.end(), j) != d.end(); }
  bool is_normalized(int j) const {
    return std::find(normalized.begin(), normalized.end(), j) != normalized.end();
  }
  // representative coefficient of coordinate j (1 for normalized, else the symbol)
  SymExpr rep_coeff(int j) const {
    return is_normalized(j) ? SymExpr::constant(ring, 1) : SymExpr::a_sym(ring, j);
  }
  // template string like "x_2(a_2) x_3(a_3) x_7(b_7)"
  std::string rep_string() const;
  int free_t_count() const;
  bool t_free(int l) const { return params[l - 1].equals(SymExpr::t_sym(ring, l)); }
};

struct ClassifyOptions {
  bool normalize = true;
  bool keep_history = true;
};

struct ClassifyResult {
  RootSystem rs;
  uint32_t p = 2;
  ClassifyOptions opts;
  std::vector<Family> families;  // sorted by (|c u d|, c, d)
  bool had_unresolved = false;   // any unresolved step anywhere in the run
};

struct Outcome {
  StepRecord::Kind kind;
  int l = 0;      // inert variable
  SymExpr h;      // its coefficient
};

// The conjugate z = x . y M_upto as coordinates 1..upto; checks that x lies
// in the recorded approximate centralizer (coordinates <= fam.step reproduce
// the representative template and residuals).
std::vector<SymExpr> step_conjugate(const Family& fam, const RootSystem& rs, int upto);

// Case analysis for coordinate fam.step + 1.
Outcome detect_case(const SymExpr& g_next, const Family& fam);

// Successor families (two for ramification, one otherwise).
std::vector<Family> apply_outcome(const Family& fam, const Outcome& out, const SymExpr& g_next,
                                  const RootSystem& rs, const ClassifyOptions& opts);

// Greedy torus normalization test for extending the normalized set by j.
bool torus_normalizable(const RootSystem& rs, const std::vector<int>& current, int j);

ClassifyResult classify(const RootSystem& rs, uint32_t p, ClassifyOptions opts = {});

}  // namespace uconj
