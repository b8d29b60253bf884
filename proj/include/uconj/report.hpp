#pragma once

#include <string>
#include <vector>

#include "uconj/analyzer.hpp"

namespace uconj {

// One line of the published family-table presentation.  Coordinates killed by
// the analysis are omitted; the letter per coordinate follows the paper's
// a/b/c/d/e/f notation.
struct PresRow {
  std::vector<std::pair<int, char>> kinds;  // ascending coordinate index
  VPoly size;
  long long cent_m = 1;
  int cent_e = 0;
  // ramification events (step, branch-with-coordinate) along the family's
  // history; sibling rows fold only when their trees match
  std::vector<std::pair<int, int>> lineage;

  std::string family_string() const;
  std::string name() const;  // 'a'-indices when present, else 'b'-indices
  std::string cent_string() const;
  bool operator==(const PresRow& o) const {
    return kinds == o.kinds && size == o.size && cent_m == o.cent_m && cent_e == o.cent_e;
  }
};

// Branch lines folded the way the published tables present them: a sibling
// pair differing only by one coordinate being a_j versus absent becomes b_j,
// and a fixed-value/zero pair becomes f_j.
std::vector<PresRow> presentation_rows(const TypeAnalysis& ta);

std::string emit_roots_table(const RootSystem& rs);

// Family table for one type across its prime classes, in the published layout
// Name | Prime | Family | Size of family | Centralizer size.
std::string emit_paper_table(char type_label, int rank);

// All rank <= 3 family tables.
std::string emit_paper_tables();

std::string classify_report_json(const TypeAnalysis& ta, bool analyzed);

}  // namespace uconj
