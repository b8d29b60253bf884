#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uconj/classifier.hpp"
#include "uconj/upoly.hpp"

namespace uconj {

// Final domain of one representative coordinate after residual analysis.
// The letters follow the published table notation: a_i, b_i, c_i, d_i, e_i, f_i.
struct CoordResult {
  enum Shape {
    FreeUnit,    // any element of F_q^*                      factor v      'a'
    FreeField,   // any element of F_q                        factor v+1    'b'
    FixedZero,   // 0 (killed by a surjective residual)       factor 1      omitted
    FixedValue,  // one determined nonzero value              factor 1      'e'
    UnitMinus,   // F_q^* minus one excluded value            factor v-1    'd'
    ZeroOr,      // 0 or one determined nonzero value         factor 2      'f'
    Coset,       // coset representatives of an additive map  factor p^f    'c'
    FieldMinus,  // F_q minus one nonzero value               factor v      (no paper letter)
    Block,       // member of a jointly-analyzed block; factor carried by the branch
  };
  int index = 0;
  Shape shape = FreeUnit;
  SymExpr value;       // FixedValue / UnitMinus / ZeroOr / FieldMinus
  SymExpr coset_map;   // Coset: additive residual in one t-variable
  int coset_var = 0;
  int coset_count = 1;
  int coset_frob_twist = 0;  // recorded map = (true map)^(p^twist) pointwise

  VPoly factor() const;
  char letter() const;
};

struct Branch {
  std::vector<CoordResult> coords;  // ascending index, covers c u d
  VPoly size;                       // number of classes, including the (q-1)^|c'| torus factor
  long long cent_m = 1;             // |C_U(y)| = cent_m * q^cent_e
  int cent_e = 0;
  std::vector<std::string> conditions;
  bool manual = false;
  std::string manual_reason;
  // coordinates counted jointly through the F_p[x]-module structure
  bool block = false;
  std::vector<int> block_coords;
  VPoly block_count;

  const CoordResult* coord(int idx) const {
    for (auto& c : coords)
      if (c.index == idx) return &c;
    return nullptr;
  }
  std::string rep_string() const;  // e.g. "x_1(a_1)x_2(a_2)x_4(c_4)"
};

struct FamilyAnalysis {
  std::vector<int> c, d, normalized;
  std::vector<Branch> branches;
  bool manual = false;
  VPoly total;  // sum of branch sizes (valid when !manual)
};

FamilyAnalysis analyze_family(const Family& fam, const RootSystem& rs, uint32_t p);

struct TypeAnalysis {
  ClassifyResult classification;
  std::vector<FamilyAnalysis> families;
  VPoly k_poly;  // total class count, valid when no family is manual
  bool any_manual = false;
};

TypeAnalysis analyze_type(const RootSystem& rs, uint32_t p, ClassifyOptions opts = {});

// Sum of family totals; throws listing manual families if any are flagged.
VPoly total_count(const TypeAnalysis& ta);

// Mass formula: sum of size * q^N / centralizer over all branches == q^N.
bool mass_formula_holds(const TypeAnalysis& ta, int nroots);

}  // namespace uconj
