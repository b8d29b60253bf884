// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "support/matrix_realization.hpp"
#include "uconj/analyzer.hpp"
#include "uconj/brute.hpp"
#include "uconj/golden.hpp"
#include "uconj/report.hpp"
#include "uconj/verify.hpp"

using namespace uconj;
using testsupport::MatrixRealization;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string what;
  std::vector<std::string> notes;
  bool ok = true;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      notes.push_back(msg);
    }
  }
  ~Criterion() {
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    printf("%s criterion %d (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", id, what.c_str(), dt);
    for (auto& n : notes) printf("       %s\n", n.c_str());
    if (!ok) ++failures;
    fflush(stdout);
  }
};

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  Criterion c{1, "root tables match the published enumerations"};
  for (auto [t, r] : {std::pair<char, int>{'B', 2}, {'G', 2}, {'B', 3}, {'C', 3}}) {
    auto rs = build_root_system(t, r);
    auto table = golden_root_table(t, r);
    std::ostringstream want;
    want << "Enumeration of positive roots for " << rs.name() << "\n";
    for (size_t i = 0; i < table.size(); ++i) {
      want << (i + 1) << ":";
      for (int x : table[i]) want << " " << x;
      want << "\n";
    }
    c.expect(emit_roots_table(rs) == want.str(), std::string("mismatch for ") + t);
  }
}

// ---------------------------------------------------------------- criterion 2
using U8Mat = std::vector<uint8_t>;  // flattened dim x dim

void criterion2() {
  Criterion c{2, "engine soundness: associativity, matrix realization, closure"};
  std::vector<std::pair<char, int>> types{{'B', 2}, {'G', 2}, {'B', 3}, {'C', 3},
                                          {'B', 4}, {'C', 4}, {'D', 4}};
  // associativity, 10^4 triples per type over F_2, F_3, F_4
  for (auto [t, r] : types) {
    auto rs = build_root_system(t, r);
    auto tab = commutator_table(rs);
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
      FqField f(p, k);
      Collector<FqRing> col(tab.get(), FqRing{&f});
      uint64_t seed = 1000 * p + k;
      bool all = true;
      for (int it = 0; it < 10000; ++it) {
        UElem<FqRing> x = col.identity(), y = col.identity(), z = col.identity();
        for (int j = 0; j < rs.nroots(); ++j) {
          x.coeffs[j] = splitmix(seed) % f.q;
          y.coeffs[j] = splitmix(seed) % f.q;
          z.coeffs[j] = splitmix(seed) % f.q;
        }
        if (!(col.multiply(col.multiply(x, y), z) == col.multiply(x, col.multiply(y, z))))
          all = false;
      }
      c.expect(all, rs.name() + " associativity failed over F_" + std::to_string(f.q));
    }
  }
  // matrix realization agreement: exhaustive at q = 2, random pairs at q = 3, 4
  for (auto [t, r] : {std::pair<char, int>{'B', 2}, {'B', 3}, {'C', 3}, {'B', 4}, {'C', 4},
                      {'D', 4}}) {
    auto rs = build_root_system(t, r);
    auto tab = commutator_table(rs);
    MatrixRealization mr(rs, *tab->basis);
    int dim = mr.dim();
    {
      FqField f(2, 1);
      Collector<FqRing> col(tab.get(), FqRing{&f});
      ElementCodec codec(2, rs.nroots());
      auto mat_mul = [&](const U8Mat& a, const U8Mat& b) {
        U8Mat m(dim * dim, 0);
        for (int i = 0; i < dim; ++i)
          for (int kk = 0; kk < dim; ++kk) {
            if (!a[i * dim + kk]) continue;
            for (int j = 0; j < dim; ++j) m[i * dim + j] ^= b[kk * dim + j];
          }
        return m;
      };
      std::vector<U8Mat> gen_mat(rs.nroots());
      for (int g = 1; g <= rs.nroots(); ++g) {
        auto M = mr.xmat(f, g, 1);
        U8Mat m(dim * dim);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) m[i * dim + j] = uint8_t(M[i][j]);
        gen_mat[g - 1] = std::move(m);
      }
      // trusted matrices by breadth-first products, engine normal forms checked
      std::vector<U8Mat> mat(codec.order);
      std::vector<uint8_t> seen(codec.order, 0);
      U8Mat id(dim * dim, 0);
      for (int i = 0; i < dim; ++i) id[i * dim + i] = 1;
      mat[0] = id;
      seen[0] = 1;
      std::vector<uint32_t> queue{0}, buf(rs.nroots());
      bool all = true;
      for (size_t head = 0; head < queue.size(); ++head) {
        uint32_t xi = queue[head];
        codec.decode(xi, buf);
        UElem<FqRing> x;
        x.coeffs = buf;
        for (int g = 1; g <= rs.nroots(); ++g) {
          UElem<FqRing> gen = col.identity();
          gen.coeffs[g - 1] = 1;
          auto prod = col.multiply(x, gen);
          uint32_t pi = codec.encode(prod.coeffs);
          U8Mat expect = mat_mul(mat[xi], gen_mat[g - 1]);
          if (!seen[pi]) {
            mat[pi] = expect;
            seen[pi] = 1;
            queue.push_back(pi);
          } else if (mat[pi] != expect) {
            all = false;
          }
        }
      }
      // every element reached and its claimed matrix equals the coordinate product
      for (uint32_t xi = 0; xi < codec.order && all; ++xi) {
        codec.decode(xi, buf);
        U8Mat direct = id;
        for (int j = 1; j <= rs.nroots(); ++j) {
          if (!buf[j - 1]) continue;
          direct = mat_mul(direct, gen_mat[j - 1]);
        }
        if (direct != mat[xi]) all = false;
      }
      c.expect(all && queue.size() == codec.order,
               rs.name() + " exhaustive matrix agreement at q=2 failed");
    }
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 1}, {2, 2}}) {
      FqField f(p, k);
      Collector<FqRing> col(tab.get(), FqRing{&f});
      auto fq_mat_mul = [&](const std::vector<std::vector<uint32_t>>& a,
                            const std::vector<std::vector<uint32_t>>& b) {
        std::vector<std::vector<uint32_t>> m(dim, std::vector<uint32_t>(dim, 0));
        for (int i = 0; i < dim; ++i)
          for (int kk = 0; kk < dim; ++kk) {
            if (!a[i][kk]) continue;
            for (int j = 0; j < dim; ++j) m[i][j] = f.add(m[i][j], f.mul(a[i][kk], b[kk][j]));
          }
        return m;
      };
      auto elem_matrix = [&](const UElem<FqRing>& x) {
        auto M = mr.xmat(f, 1, x.coeffs[0]);
        for (int j = 2; j <= rs.nroots(); ++j) M = fq_mat_mul(M, mr.xmat(f, j, x.coeffs[j - 1]));
        return M;
      };
      uint64_t seed = 7 * p + k;
      bool all = true;
      for (int it = 0; it < 10000; ++it) {
        UElem<FqRing> x = col.identity(), y = col.identity();
        for (int j = 0; j < rs.nroots(); ++j) {
          x.coeffs[j] = splitmix(seed) % f.q;
          y.coeffs[j] = splitmix(seed) % f.q;
        }
        if (elem_matrix(col.multiply(x, y)) != fq_mat_mul(elem_matrix(x), elem_matrix(y)))
          all = false;
      }
      c.expect(all, rs.name() + " matrix agreement failed over F_" + std::to_string(f.q));
    }
  }
  // |U(q)| = q^N closure by generator span
  for (auto [t, r, p] : {std::tuple<char, int, uint32_t>{'B', 2, 2}, {'B', 2, 3}, {'G', 2, 2}}) {
    auto rs = build_root_system(t, r);
    auto tab = commutator_table(rs);
    FqField f(p, 1);
    Collector<FqRing> col(tab.get(), FqRing{&f});
    ElementCodec codec(f.q, rs.nroots());
    std::vector<uint8_t> seen(codec.order, 0);
    std::vector<uint32_t> queue{0}, buf(rs.nroots());
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      codec.decode(queue[head], buf);
      UElem<FqRing> x;
      x.coeffs = buf;
      for (int g = 1; g <= rs.nroots(); ++g)
        for (uint32_t lam = 1; lam < f.q; ++lam) {
          UElem<FqRing> gen = col.identity();
          gen.coeffs[g - 1] = lam;
          uint32_t pi = codec.encode(col.multiply(gen, x).coeffs);
          if (!seen[pi]) {
            seen[pi] = 1;
            queue.push_back(pi);
          }
        }
    }
    c.expect(queue.size() == codec.order,
             rs.name() + "/F_" + std::to_string(p) + " closure span mismatch");
  }
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
  Criterion c{3, "worked-example replay: C3, p=2, family {2,3}"};
  auto rs = build_root_system('C', 3);
  SymRingSpec R{2, 9};
  auto a = [&](int j) { return SymExpr::a_sym(R, j); };
  auto t = [&](int l) { return SymExpr::t_sym(R, l); };

  ClassifyOptions raw;
  raw.normalize = false;
  auto res = classify(rs, 2, raw);
  const Family* fam = nullptr;
  for (auto& f : res.families)
    if (f.c == std::vector<int>{2, 3} && f.d == std::vector<int>{7}) fam = &f;
  c.expect(fam != nullptr, "family {2,3} with d={7} not found");
  if (fam) {
    std::map<int, const StepRecord*> rec;
    for (auto& r : fam->history) rec[r.step] = &r;
    c.expect(rec.count(4) && rec[4]->g.equals(a(2) * t(1)), "g_4 != a_2 t_1");
    c.expect(rec.count(5) && rec[5]->g.equals(a(3) * t(2) + a(2) * t(3)), "g_5 != a_3t_2 + a_2t_3");
    c.expect(rec.count(5) && rec[5]->inert_subst.equals(a(3) * t(2) / a(2)),
             "inert substitution != a_3 t_2 / a_2");
    c.expect(rec.count(6) && rec[6]->g.equals(a(3) * t(4)), "g_6 != a_3 t_4");
    c.expect(rec.count(7) && rec[7]->g.equals(a(3) * t(2) * t(2) + a(2) * a(3) * t(2)),
             "g_7 != a_3 t_2^2 + a_2 a_3 t_2");
  }
  // final family count 2v^2(v+1) in the folded presentation
  auto ta = analyze_type(rs, 2);
  bool found = false;
  for (auto& row : presentation_rows(ta))
    if (row.kinds == std::vector<std::pair<int, char>>{{2, 'a'}, {3, 'a'}, {7, 'c'}, {9, 'b'}} &&
        row.size == VPoly{0, 0, 2, 2})
      found = true;
  c.expect(found, "folded count 2v^2(v+1) not found");
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
  Criterion c{4, "Table 1 polynomials, bad primes, symbolic"};
  struct Want {
    char t;
    int r;
    uint32_t p;
  };
  for (auto [t, r, p] : {Want{'B', 2, 2}, {'G', 2, 2}, {'G', 2, 3}, {'B', 3, 2}, {'C', 3, 2},
                         {'D', 4, 2}, {'B', 4, 2}, {'C', 4, 2}}) {
    auto rs = build_root_system(t, r);
    auto ta = analyze_type(rs, p);
    int manual = 0;
    for (auto& fa : ta.families)
      if (fa.manual) ++manual;
    c.expect(manual == 0, rs.name() + " p=" + std::to_string(p) + ": " + std::to_string(manual) +
                              " manual families");
    VPoly want = published_k_poly(t, r, prime_class_of(rs, p));
    if (!ta.any_manual)
      c.expect(ta.k_poly == want, rs.name() + " p=" + std::to_string(p) + ": k = " +
                                      ta.k_poly.str() + " expected " + want.str());
  }
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
  Criterion c{5, "Table 1 polynomials, good primes, no unresolved steps"};
  struct Want {
    char t;
    int r;
    uint32_t p;
  };
  for (auto [t, r, p] : {Want{'B', 2, 3}, {'G', 2, 5}, {'B', 3, 3}, {'C', 3, 3}, {'B', 4, 3},
                         {'C', 4, 3}, {'D', 4, 3}}) {
    auto rs = build_root_system(t, r);
    auto ta = analyze_type(rs, p);
    c.expect(!ta.classification.had_unresolved,
             rs.name() + " p=" + std::to_string(p) + ": unresolved step at a good prime");
    c.expect(!ta.any_manual, rs.name() + ": manual families at a good prime");
    VPoly want = published_k_poly(t, r, PrimeClass::Good);
    if (!ta.any_manual)
      c.expect(ta.k_poly == want, rs.name() + ": k = " + ta.k_poly.str() + " expected " +
                                      want.str());
    if (t == 'G' && !ta.any_manual) {
      VPoly printed = printed_k_poly(t, r, PrimeClass::Good);
      c.notes.push_back(
          "note: G2 good-prime polynomial checked as " + want.str() + " (= its own Table 4 row sum" +
          "; brute force gives 169 at q=5, 433 at q=7); the printed Table 1 entry " +
          printed.str() + " repeats the B2 row and fails both checks");
    }
  }
}

// ---------------------------------------------------------------- criterion 6
std::vector<ClassInventory> g_inventories;  // reused by criterion 9

void criterion6() {
  Criterion c{6, "brute-force class counts across the q grid"};
  struct Want {
    char t;
    int r;
    uint32_t p, k;
    uint64_t expect;
  };
  for (auto [t, r, p, k, expect] :
       {Want{'B', 2, 2, 1, 10},  {'B', 2, 2, 2, 58},  {'B', 2, 2, 3, 274}, {'B', 2, 3, 1, 17},
        Want{'G', 2, 2, 1, 16},  {'G', 2, 2, 2, 118}, {'G', 2, 3, 1, 73},  {'B', 3, 2, 1, 56},
        Want{'C', 3, 2, 1, 56},  {'C', 3, 3, 1, 163}, {'D', 4, 2, 1, 103}, {'D', 4, 3, 1, 753},
        Want{'B', 4, 2, 1, 436}, {'C', 4, 2, 1, 436}}) {
    auto rs = build_root_system(t, r);
    FqField f(p, k);
    auto inv = count_classes(rs, f);
    c.expect(inv.total_classes() == expect,
             rs.name() + " q=" + std::to_string(f.q) + ": " + std::to_string(inv.total_classes()) +
                 " classes, expected " + std::to_string(expect));
    g_inventories.push_back(std::move(inv));
  }
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
  Criterion c{7, "family-level verification and published-table comparison"};
  struct Case {
    char t;
    int r;
    uint32_t p, k;
  };
  for (auto [t, r, p, k] : {Case{'B', 2, 2, 1}, {'G', 2, 2, 1}, {'B', 3, 2, 1}, {'C', 3, 2, 1},
                            {'G', 2, 3, 1}, {'B', 2, 3, 1}, {'C', 3, 3, 1},
                            {'B', 4, 2, 1}, {'C', 4, 2, 1}, {'D', 4, 2, 1},
                            // larger fields: pins the p=3 additive kernel size at q=9
                            // and the coset-representative extraction at q=4, 8
                            {'G', 2, 3, 2}, {'G', 2, 2, 2}, {'B', 2, 2, 3}, {'C', 3, 2, 2},
                            {'B', 3, 2, 2}}) {
    auto rs = build_root_system(t, r);
    auto ta = analyze_type(rs, p);
    FqField f(p, k);
    auto rep = verify_families(rs, ta, f);
    c.expect(rep.ok, rs.name() + " p=" + std::to_string(p) + " q=" + std::to_string(f.q) + ": " +
                         rep.summary());
  }
  for (auto [t, r, p] : {std::tuple<char, int, uint32_t>{'B', 2, 2}, {'B', 2, 3}, {'G', 2, 2},
                         {'G', 2, 3}, {'G', 2, 5}, {'B', 3, 2}, {'B', 3, 3}, {'C', 3, 2},
                         {'C', 3, 3}}) {
    auto rs = build_root_system(t, r);
    auto rep = verify_tables(rs, p, {});
    c.expect(rep.ok, rs.name() + " p=" + std::to_string(p) + " golden rows: " + rep.summary());
  }
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
  Criterion c{8, "mass formula as a polynomial identity"};
  for (auto [t, r] : {std::pair<char, int>{'B', 2}, {'G', 2}, {'B', 3}, {'C', 3}, {'B', 4},
                      {'C', 4}, {'D', 4}}) {
    auto rs = build_root_system(t, r);
    std::vector<uint32_t> primes{2, t == 'G' ? 5u : 3u};
    if (t == 'G') primes.push_back(3);
    for (uint32_t p : primes) {
      auto ta = analyze_type(rs, p);
      c.expect(mass_formula_holds(ta, rs.nroots()),
               rs.name() + " p=" + std::to_string(p) + ": mass formula failed");
    }
  }
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
  Criterion c{9, "property suites: SNF certificates, orbit-stabilizer, additive images"};
  // SNF certificate re-multiplication on 10^3 random matrices
  uint64_t seed = 31337;
  for (int it = 0; it < 1000; ++it) {
    int rows = 1 + int(splitmix(seed) % 4), cols = 1 + int(splitmix(seed) % 6);
    IMat M(rows, std::vector<long long>(cols));
    for (auto& row : M)
      for (auto& x : row) x = (long long)(splitmix(seed) % 19) - 9;
    auto s = smith_normal_form(M);
    bool ok = imat_equal(imat_mul(imat_mul(s.U, M), s.V), s.D);
    long long du = imat_det(s.U), dv = imat_det(s.V);
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    if (!ok) {
      c.expect(false, "SNF certificate failed at iteration " + std::to_string(it));
      break;
    }
  }
  // orbit-stabilizer identity on every brute-force class record
  uint64_t records = 0;
  for (auto& inv : g_inventories)
    for (auto& rec : inv.classes) {
      if (rec.size * rec.centralizer != inv.group_order) {
        c.expect(false, "orbit-stabilizer identity failed");
        break;
      }
      ++records;
    }
  c.notes.push_back("orbit-stabilizer checked on " + std::to_string(records) + " class records");
  // class count from BFS equals the Burnside centralizer sum, with centralizer
  // orders re-derived by direct enumeration (all cases with q^N <= 2^16)
  for (auto [t, r, p, k] : {std::tuple<char, int, uint32_t, uint32_t>{'B', 2, 2, 1},
                            {'B', 2, 2, 2}, {'B', 2, 2, 3}, {'B', 2, 3, 1}, {'G', 2, 2, 1},
                            {'G', 2, 2, 2}, {'G', 2, 3, 1}, {'B', 3, 2, 1}, {'C', 3, 2, 1},
                            {'D', 4, 2, 1}, {'B', 4, 2, 1}, {'C', 4, 2, 1}}) {
    auto rs = build_root_system(t, r);
    FqField f(p, k);
    auto inv = count_classes(rs, f);
    uint64_t burnside = 0;
    std::vector<uint32_t> rep(rs.nroots());
    ElementCodec codec(f.q, rs.nroots());
    bool ok = true;
    for (auto& cls : inv.classes) {
      codec.decode(cls.rep, rep);
      uint64_t direct = centralizer_order_direct(rs, f, rep);
      if (direct != cls.centralizer) ok = false;
      burnside += cls.size * direct;
    }
    c.expect(ok && burnside / inv.group_order == inv.total_classes(),
             rs.name() + " q=" + std::to_string(f.q) + ": Burnside sum disagrees with BFS count");
  }
  // image size x kernel size = q for additive maps over F_q, q <= 256
  for (auto [p, kmax] : {std::pair<uint32_t, uint32_t>{2, 8}, {3, 5}, {5, 3}, {7, 2}}) {
    for (uint32_t k = 1; k <= kmax; ++k) {
      uint64_t qq = 1;
      for (uint32_t i = 0; i < k; ++i) qq *= p;
      if (qq > 256) continue;
      FqField f(p, k);
      uint64_t s2 = 17 * p + k;
      for (int it = 0; it < 30; ++it) {
        uint32_t alpha = 1 + uint32_t(splitmix(s2) % (f.q - 1));
        uint32_t beta = uint32_t(splitmix(s2) % f.q);
        auto phi = [&](uint32_t x) { return f.add(f.mul(alpha, f.pow(x, f.p)), f.mul(beta, x)); };
        int img = image_size_enum(f, phi);
        int ker = 0;
        for (uint32_t x = 0; x < f.q; ++x)
          if (phi(x) == 0) ++ker;
        if (uint64_t(img) * uint64_t(ker) != f.q) {
          c.expect(false, "image x kernel != q over F_" + std::to_string(f.q));
          break;
        }
      }
    }
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) {
    printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  printf("all acceptance criteria passed\n");
  return 0;
}
