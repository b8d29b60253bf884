#include "uconj/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "uconj/golden.hpp"
#include "uconj/report.hpp"
#include "uconj/snf.hpp"

namespace uconj {

std::string VerifyReport::summary() const {
  if (ok) return "ok (" + std::to_string(classes_checked) + " classes checked)";
  std::string s = "FAILED:";
  for (auto& e : errors) s += "\n  " + e;
  return s;
}

std::vector<uint32_t> torus_scalings(const RootSystem& rs, const FqField& f,
                                     const std::vector<int>& normalized,
                                     const std::vector<uint32_t>& taus) {
  long long mod = f.q - 1;
  int rank = rs.rank;
  IMat M;
  for (int j : normalized)
    M.emplace_back(rs.positive_roots[j - 1].coeffs.begin(), rs.positive_roots[j - 1].coeffs.end());
  auto s = smith_normal_form(M);
  // D = U M V with unit diagonal; x = V (U L) solves M x = L over Z
  std::vector<long long> L(normalized.size());
  for (size_t i = 0; i < normalized.size(); ++i) L[i] = f.dlog(taus[i]);
  std::vector<long long> UL(normalized.size(), 0);
  for (size_t i = 0; i < normalized.size(); ++i)
    for (size_t k = 0; k < normalized.size(); ++k) UL[i] += s.U[i][k] * L[k];
  std::vector<long long> x(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (size_t k = 0; k < normalized.size(); ++k) x[i] += s.V[i][k] * UL[k];
  // verify M x = L mod q-1
  for (size_t i = 0; i < normalized.size(); ++i) {
    long long acc = 0;
    for (int k = 0; k < rank; ++k) acc += M[i][k] * x[k];
    if (((acc - L[i]) % mod + mod) % mod != 0)
      throw std::logic_error("torus_scalings: solve failed");
  }
  std::vector<uint32_t> scale(rs.nroots());
  for (int m = 1; m <= rs.nroots(); ++m) {
    long long e = 0;
    for (int k = 0; k < rank; ++k) e += (long long)rs.positive_roots[m - 1].coeffs[k] * x[k];
    e = ((e % mod) + mod) % mod;
    scale[m - 1] = f.pow(f.generator(), uint64_t(e));
  }
  return scale;
}

namespace {

// coset representatives of the image of an additive map, lex-least per coset
std::vector<uint32_t> coset_reps(const FqField& f, const CoordResult& c,
                                 const std::vector<uint32_t>& values) {
  std::vector<uint32_t> scratch = values;
  std::vector<char> in_image(f.q, 0);
  int tv = c.coset_map.ring.t_var(c.coset_var);
  for (uint32_t t = 0; t < f.q; ++t) {
    scratch[tv] = t;
    in_image[c.coset_map.eval(f, scratch)] = 1;
  }
  // undo the Frobenius twist: true image is the preimage of the recorded one
  for (int tw = 0; tw < c.coset_frob_twist; ++tw) {
    std::vector<char> pre(f.q, 0);
    for (uint32_t y = 0; y < f.q; ++y)
      if (in_image[f.pow(y, f.p)]) pre[y] = 1;
    in_image = pre;
  }
  std::vector<char> covered(f.q, 0);
  std::vector<uint32_t> reps;
  for (uint32_t y = 0; y < f.q; ++y) {
    if (covered[y]) continue;
    reps.push_back(y);
    for (uint32_t z = 0; z < f.q; ++z)
      if (in_image[z]) covered[f.add(y, z)] = 1;
  }
  return reps;
}

struct BranchEnumerator {
  const RootSystem& rs;
  const FqField& f;
  const Family& fam;
  const Branch& branch;
  VerifyReport& report;

  // enumerate all representative coefficient vectors of the normalized slice
  template <class Fn>
  void enumerate(Fn&& emit) {
    std::vector<uint32_t> values(2 * rs.nroots(), 0);  // a then t variables
    for (int j : fam.normalized) values[j - 1] = 1;
    recurse(0, values, emit);
  }

 private:
  template <class Fn>
  void recurse(size_t ci, std::vector<uint32_t>& values, Fn&& emit) {
    if (ci == branch.coords.size()) {
      std::vector<uint32_t> rep(rs.nroots(), 0);
      for (auto& c : branch.coords) rep[c.index - 1] = values[c.index - 1];
      for (int j : fam.normalized) rep[j - 1] = 1;
      emit(rep);
      return;
    }
    const CoordResult& c = branch.coords[ci];
    if (fam.is_normalized(c.index)) {
      values[c.index - 1] = 1;
      recurse(ci + 1, values, emit);
      return;
    }
    auto with = [&](uint32_t val) {
      values[c.index - 1] = val;
      recurse(ci + 1, values, emit);
    };
    switch (c.shape) {
      case CoordResult::FreeUnit:
        for (uint32_t v = 1; v < f.q; ++v) with(v);
        break;
      case CoordResult::FreeField:
      case CoordResult::Block:
        for (uint32_t v = 0; v < f.q; ++v) with(v);
        break;
      case CoordResult::FixedZero:
        with(0);
        break;
      case CoordResult::FixedValue: {
        uint32_t val = c.value.eval(f, values);
        if (val == 0) report.fail("fixed value evaluates to zero");
        with(val);
        break;
      }
      case CoordResult::UnitMinus: {
        uint32_t ex = c.value.eval(f, values);
        for (uint32_t v = 1; v < f.q; ++v)
          if (v != ex) with(v);
        break;
      }
      case CoordResult::FieldMinus: {
        uint32_t ex = c.value.eval(f, values);
        for (uint32_t v = 0; v < f.q; ++v)
          if (v != ex) with(v);
        break;
      }
      case CoordResult::ZeroOr: {
        uint32_t val = c.value.eval(f, values);
        with(0);
        if (val != 0)
          with(val);
        else
          report.fail("zero-or value evaluates to zero");
        break;
      }
      case CoordResult::Coset: {
        auto reps = coset_reps(f, c, values);
        if (int(reps.size()) != c.coset_count)
          report.fail("coset count mismatch: got " + std::to_string(reps.size()) + " expected " +
                      std::to_string(c.coset_count));
        for (uint32_t v : reps) with(v);
        break;
      }
    }
  }
};

}  // namespace

VerifyReport verify_families(const RootSystem& rs, const TypeAnalysis& ta, const FqField& f) {
  VerifyReport report;
  std::vector<uint32_t> class_of;
  auto inv = count_classes(rs, f, &class_of);
  ElementCodec codec(f.q, rs.nroots());
  std::vector<int> claimed(inv.classes.size(), -1);

  // all torus targets over the normalized set, reused per family
  auto torus_targets = [&](const std::vector<int>& normalized) {
    std::vector<std::vector<uint32_t>> targets;
    std::vector<uint32_t> cur(normalized.size(), 1);
    for (;;) {
      targets.push_back(cur);
      size_t i = 0;
      for (; i < cur.size(); ++i) {
        if (++cur[i] < f.q) break;
        cur[i] = 1;
      }
      if (i == cur.size()) break;
    }
    if (normalized.empty()) targets = {std::vector<uint32_t>{}};
    return targets;
  };

  for (size_t fi = 0; fi < ta.families.size(); ++fi) {
    const Family& fam = ta.classification.families[fi];
    const FamilyAnalysis& fa = ta.families[fi];
    auto targets = torus_targets(fam.normalized);
    std::vector<std::vector<uint32_t>> scalings;
    for (auto& tau : targets) scalings.push_back(torus_scalings(rs, f, fam.normalized, tau));

    for (size_t bi = 0; bi < fa.branches.size(); ++bi) {
      const Branch& b = fa.branches[bi];
      if (b.manual) {
        report.fail("manual branch present");
        continue;
      }
      long long expected = b.size.eval_at_q(f.q);
      if (expected == 0) continue;
      // block-analyzed coordinates enumerate a full slice whose members are
      // not pairwise non-conjugate; count distinct classes there instead
      bool allow_collide = b.block;
      uint64_t found = 0;
      std::set<uint32_t> branch_classes;
      BranchEnumerator en{rs, f, fam, b, report};
      en.enumerate([&](const std::vector<uint32_t>& rep) {
        for (auto& scale : scalings) {
          std::vector<uint32_t> y(rep);
          for (int m = 1; m <= rs.nroots(); ++m) y[m - 1] = f.mul(y[m - 1], scale[m - 1]);
          uint32_t idx = codec.encode(y);
          uint32_t cls = class_of[idx];
          if (!branch_classes.insert(cls).second) {
            if (!allow_collide)
              report.fail(rs.name() + " family " + fam.rep_string() +
                          ": representatives collide in one class");
            continue;
          }
          if (claimed[cls] != -1) {
            report.fail(rs.name() + " family " + fam.rep_string() + ": class already claimed");
            continue;
          }
          claimed[cls] = int(fi);
          uint64_t cent = inv.classes[cls].centralizer;
          uint64_t expect_cent = b.cent_m;
          for (int e = 0; e < b.cent_e; ++e) expect_cent *= f.q;
          if (cent != expect_cent)
            report.fail(rs.name() + " family " + fam.rep_string() + ": centralizer " +
                        std::to_string(cent) + " != " + std::to_string(expect_cent));
          ++found;
        }
      });
      if ((long long)found != expected)
        report.fail(rs.name() + " family " + fam.rep_string() + " branch " + std::to_string(bi) +
                    ": " + std::to_string(found) + " classes, expected " + std::to_string(expected));
      report.classes_checked += found;
    }
  }
  for (size_t c = 0; c < claimed.size(); ++c)
    if (claimed[c] == -1) {
      report.fail("class " + std::to_string(inv.classes[c].rep) + " not covered by any family");
      break;
    }
  return report;
}

VerifyReport verify_tables(const RootSystem& rs, uint32_t p, const std::vector<uint32_t>& qs) {
  VerifyReport report;
  auto pc = prime_class_of(rs, p);
  VPoly expect = published_k_poly(rs.type_label, rs.rank, pc);
  for (uint32_t q : qs) {
    uint32_t k = 0;
    uint64_t qq = 1;
    while (qq < q) {
      qq *= p;
      ++k;
    }
    if (qq != q) {
      report.fail("q = " + std::to_string(q) + " is not a power of p");
      continue;
    }
    FqField f(p, k == 0 ? 1 : k);
    auto inv = count_classes(rs, f);
    long long want = expect.eval_at_q(q);
    if ((long long)inv.total_classes() != want)
      report.fail(rs.name() + " q=" + std::to_string(q) + ": " +
                  std::to_string(inv.total_classes()) + " classes, polynomial gives " +
                  std::to_string(want));
    else
      ++report.classes_checked;
  }
  if (rs.rank <= 3 && rs.type_label != 'A') {
    auto ta = analyze_type(rs, p);
    auto rows = presentation_rows(ta);
    auto golden = golden_family_rows(rs.type_label, rs.rank);
    std::vector<GoldenRow> expected;
    for (auto& g : golden)
      if (g.pc == pc) expected.push_back(g);
    auto match = [&](const PresRow& r, const GoldenRow& g) {
      return r.kinds == g.kinds && r.size == g.size && r.cent_m == g.cent_m && r.cent_e == g.cent_e;
    };
    std::vector<bool> used(expected.size(), false);
    for (auto& r : rows) {
      bool hit = false;
      for (size_t i = 0; i < expected.size() && !hit; ++i)
        if (!used[i] && match(r, expected[i])) {
          used[i] = true;
          hit = true;
        }
      if (!hit) report.fail("row not in golden table: " + r.family_string() + " | " +
                            r.size.str() + " | " + r.cent_string());
    }
    for (size_t i = 0; i < expected.size(); ++i)
      if (!used[i]) report.fail("golden row missing from output (index " + std::to_string(i) + ")");
  }
  return report;
}

}  // namespace uconj
