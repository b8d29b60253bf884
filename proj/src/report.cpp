#include "uconj/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "uconj/golden.hpp"

namespace uconj {

std::string PresRow::family_string() const {
  if (kinds.empty()) return "1";
  std::string s;
  for (auto& [idx, k] : kinds)
    s += "x_" + std::to_string(idx) + "(" + k + "_" + std::to_string(idx) + ")";
  return s;
}

std::string PresRow::name() const {
  std::string a, b;
  for (auto& [idx, k] : kinds) {
    if (k == 'a') a += (a.empty() ? "" : ",") + std::to_string(idx);
    if (k == 'b') b += (b.empty() ? "" : ",") + std::to_string(idx);
  }
  if (!a.empty()) return a;
  if (!b.empty()) return b;
  return "-";
}

std::string PresRow::cent_string() const {
  std::string s;
  if (cent_m != 1) s += std::to_string(cent_m);
  s += "q^" + std::to_string(cent_e);
  return s;
}

namespace {

PresRow row_of_branch(const Branch& b) {
  PresRow r;
  for (auto& c : b.coords) {
    if (c.shape == CoordResult::FixedZero) continue;
    r.kinds.push_back({c.index, c.letter()});
  }
  r.size = b.size;
  r.cent_m = b.cent_m;
  r.cent_e = b.cent_e;
  return r;
}

std::vector<std::pair<int, int>> lineage_of(const Family& fam) {
  std::vector<std::pair<int, int>> lin;
  for (auto& rec : fam.history)
    if (rec.kind == StepRecord::Ramification) lin.push_back({rec.step, rec.ram_added ? 1 : 0});
  return lin;
}

// lineages equal after dropping a (j, 1)/(j, 0) sibling pair, which must be
// present in both or in neither
bool lineage_mergeable(const PresRow& with_j, const PresRow& without_j, int j) {
  auto strip = [&](const std::vector<std::pair<int, int>>& lin, int expect_added, bool& found) {
    std::vector<std::pair<int, int>> out;
    found = false;
    for (auto& e : lin) {
      if (e.first == j) {
        found = true;
        if (e.second != expect_added) return std::vector<std::pair<int, int>>{{-1, -1}};
        continue;
      }
      out.push_back(e);
    }
    return out;
  };
  bool f1 = false, f2 = false;
  auto l1 = strip(with_j.lineage, 1, f1);
  auto l2 = strip(without_j.lineage, 0, f2);
  if (f1 != f2) return false;
  if (!l1.empty() && l1[0].first == -1) return false;
  if (!l2.empty() && l2[0].first == -1) return false;
  return l1 == l2;
}

bool kinds_equal_except(const PresRow& x, const PresRow& y, int skip_idx) {
  // compare kind lists ignoring entries at skip_idx
  size_t i = 0, j = 0;
  while (i < x.kinds.size() || j < y.kinds.size()) {
    if (i < x.kinds.size() && x.kinds[i].first == skip_idx) {
      ++i;
      continue;
    }
    if (j < y.kinds.size() && y.kinds[j].first == skip_idx) {
      ++j;
      continue;
    }
    if (i >= x.kinds.size() || j >= y.kinds.size()) return false;
    if (x.kinds[i] != y.kinds[j]) return false;
    ++i;
    ++j;
  }
  return true;
}

}  // namespace

std::vector<PresRow> presentation_rows(const TypeAnalysis& ta) {
  std::vector<PresRow> rows;
  for (size_t fi = 0; fi < ta.families.size(); ++fi) {
    auto lin = lineage_of(ta.classification.families[fi]);
    for (auto& b : ta.families[fi].branches) {
      if (b.manual) continue;
      rows.push_back(row_of_branch(b));
      rows.back().lineage = lin;
    }
  }

  // At bad primes the published tables group rows under the good-prime family
  // names; a fold that would erase a good-prime name stops there.
  std::set<std::vector<int>> good_names;
  {
    const RootSystem& rs = ta.classification.rs;
    if (prime_class_of(rs, ta.classification.p) != PrimeClass::Good) {
      static std::map<std::string, std::set<std::vector<int>>> cache;
      auto key = rs.name();
      auto it = cache.find(key);
      if (it == cache.end()) {
        uint32_t gp = rs.type_label == 'G' ? 5 : 3;
        auto gta = analyze_type(rs, gp);
        std::set<std::vector<int>> names;
        for (auto& row : presentation_rows(gta)) {
          std::vector<int> aset;
          for (auto& [x, k] : row.kinds)
            if (k == 'a') aset.push_back(x);
          if (!aset.empty()) names.insert(aset);
        }
        it = cache.emplace(key, std::move(names)).first;
      }
      good_names = it->second;
    }
  }

  // fold siblings: a_j + absent -> b_j; e_j + absent -> f_j (matching sizes).
  // Folds run from the highest coordinate down, matching the published
  // presentation where trailing b-coordinates exceed the named ones.
  int nroots = ta.classification.rs.nroots();
  for (int idx = nroots; idx >= 1; --idx) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < rows.size() && !changed; ++i) {
        char kind = 0;
        for (auto& [x, k] : rows[i].kinds)
          if (x == idx) kind = k;
        if (kind != 'a' && kind != 'e') continue;
        for (size_t j = 0; j < rows.size() && !changed; ++j) {
          if (i == j) continue;
          if (rows[i].cent_m != rows[j].cent_m || rows[i].cent_e != rows[j].cent_e) continue;
          bool in_j = false;
          for (auto& [x, k] : rows[j].kinds)
            if (x == idx) in_j = true;
          if (in_j) continue;
          if (!kinds_equal_except(rows[i], rows[j], idx)) continue;
          if (!lineage_mergeable(rows[i], rows[j], idx)) continue;
          if (kind == 'a') {
            bool row_j_empty = rows[j].kinds.empty();
            int max_non_b = 0;
            for (auto& [x, k2] : rows[i].kinds)
              if (k2 != 'b' && x != idx) max_non_b = std::max(max_non_b, x);
            for (auto& [x, k2] : rows[j].kinds)
              if (k2 != 'b') max_non_b = std::max(max_non_b, x);
            if (!row_j_empty && idx < max_non_b) continue;
            if (row_j_empty && idx != nroots) continue;  // identity folds into the center
            std::vector<int> aset;
            for (auto& [x, k2] : rows[i].kinds)
              if (k2 == 'a') aset.push_back(x);
            if (good_names.count(aset)) continue;  // name boundary
          }
          auto merged_lineage = [&]() {
            std::vector<std::pair<int, int>> out;
            for (auto& e : rows[j].lineage)
              if (e.first != idx) out.push_back(e);
            return out;
          };
          if (kind == 'a' && rows[i].size == rows[j].size * VPoly{0, 1}) {
            PresRow merged = rows[j];
            merged.kinds.push_back({idx, 'b'});
            std::sort(merged.kinds.begin(), merged.kinds.end());
            merged.size = rows[i].size + rows[j].size;
            merged.lineage = merged_lineage();
            rows[i] = merged;
            rows.erase(rows.begin() + j);
            changed = true;
          } else if (kind == 'e' && rows[i].size == rows[j].size) {
            PresRow merged = rows[j];
            merged.kinds.push_back({idx, 'f'});
            std::sort(merged.kinds.begin(), merged.kinds.end());
            merged.size = rows[i].size + rows[j].size;
            merged.lineage = merged_lineage();
            rows[i] = merged;
            rows.erase(rows.begin() + j);
            changed = true;
          }
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const PresRow& a, const PresRow& b) {
    return a.kinds < b.kinds;
  });
  return rows;
}

std::string emit_roots_table(const RootSystem& rs) {
  std::ostringstream os;
  os << "Enumeration of positive roots for " << rs.name() << "\n";
  for (int i = 1; i <= rs.nroots(); ++i) {
    os << i << ":";
    for (int c : rs.positive_roots[i - 1].coeffs) os << " " << c;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string prime_class_label(char type_label, PrimeClass pc) {
  bool g2 = type_label == 'G';
  switch (pc) {
    case PrimeClass::Good:
      return g2 ? "!=2,3" : "!=2";
    case PrimeClass::P2:
      return "=2";
    case PrimeClass::P3:
      return "=3";
  }
  return "?";
}

uint32_t sample_prime(char type_label, PrimeClass pc) {
  switch (pc) {
    case PrimeClass::Good:
      return type_label == 'G' ? 5 : 3;
    case PrimeClass::P2:
      return 2;
    case PrimeClass::P3:
      return 3;
  }
  return 2;
}

}  // namespace

std::string emit_paper_table(char type_label, int rank) {
  std::ostringstream os;
  os << "Conjugacy classes of U for G of type " << type_label << rank << "\n";
  os << "Name | Prime | Family | Size of family | Centralizer size\n";
  std::vector<PrimeClass> pcs{PrimeClass::Good, PrimeClass::P2};
  if (type_label == 'G') pcs.push_back(PrimeClass::P3);
  auto rs = build_root_system(type_label, rank);
  // rows shared by every prime class print once with a "-" prime label
  std::vector<std::vector<PresRow>> per_class;
  for (auto pc : pcs) {
    auto ta = analyze_type(rs, sample_prime(type_label, pc));
    per_class.push_back(presentation_rows(ta));
  }
  auto in_all = [&](const PresRow& r) {
    for (auto& rows : per_class)
      if (std::find(rows.begin(), rows.end(), r) == rows.end()) return false;
    return true;
  };
  for (size_t ci = 0; ci < pcs.size(); ++ci) {
    for (auto& row : per_class[ci]) {
      if (in_all(row)) {
        if (ci > 0) continue;  // printed with the first class
        os << row.name() << " | - | " << row.family_string() << " | " << row.size.str() << " | "
           << row.cent_string() << "\n";
      } else {
        os << row.name() << " | " << prime_class_label(type_label, pcs[ci]) << " | "
           << row.family_string() << " | " << row.size.str() << " | " << row.cent_string()
           << "\n";
      }
    }
  }
  return os.str();
}

std::string emit_paper_tables() {
  std::string s;
  s += emit_paper_table('B', 2);
  s += "\n" + emit_paper_table('G', 2);
  s += "\n" + emit_paper_table('B', 3);
  s += "\n" + emit_paper_table('C', 3);
  return s;
}

std::string classify_report_json(const TypeAnalysis& ta, bool analyzed) {
  nlohmann::json j;
  j["type"] = std::string(1, ta.classification.rs.type_label);
  j["rank"] = ta.classification.rs.rank;
  j["p"] = ta.classification.p;
  j["families"] = nlohmann::json::array();
  for (size_t fi = 0; fi < ta.classification.families.size(); ++fi) {
    const Family& fam = ta.classification.families[fi];
    nlohmann::json f;
    f["c"] = fam.c;
    f["d"] = fam.d;
    f["normalized"] = fam.normalized;
    f["representative"] = fam.rep_string();
    nlohmann::json res;
    for (auto& [idx, g] : fam.residuals) res[std::to_string(idx)] = g.str();
    f["residuals"] = res;
    nlohmann::json params = nlohmann::json::array();
    for (auto& p : fam.params) params.push_back(p.str());
    f["centralizer_params"] = params;
    if (analyzed) {
      const FamilyAnalysis& fa = ta.families[fi];
      f["manual"] = fa.manual;
      nlohmann::json branches = nlohmann::json::array();
      for (auto& b : fa.branches) {
        nlohmann::json bj;
        bj["conditions"] = b.conditions;
        if (b.manual) {
          bj["manual"] = b.manual_reason;
        } else {
          bj["family"] = row_of_branch(b).family_string();
          bj["count_poly"] = b.size.c;
          bj["centralizer"] = row_of_branch(b).cent_string();
          if (b.block) bj["block_coords"] = b.block_coords;
        }
        branches.push_back(bj);
      }
      f["branches"] = branches;
      if (!fa.manual) f["count_poly"] = fa.total.c;
    }
    j["families"].push_back(f);
  }
  if (analyzed && !ta.any_manual) j["k_poly"] = ta.k_poly.c;
  if (analyzed && ta.any_manual) j["manual_families_present"] = true;
  return j.dump(2);
}

}  // namespace uconj
