#include <set>

#include "doctest.h"
#include "json.hpp"
#include "uconj/golden.hpp"
#include "uconj/report.hpp"
#include "uconj/verify.hpp"

using namespace uconj;

TEST_CASE("torus scalings realize arbitrary targets on the normalized set") {
  auto rs = build_root_system('C', 3);
  FqField f(3, 2);  // q = 9
  std::vector<int> normalized{2, 3};
  for (uint32_t t2 = 1; t2 < f.q; t2 += 3)
    for (uint32_t t3 = 1; t3 < f.q; t3 += 2) {
      auto sc = torus_scalings(rs, f, normalized, {t2, t3});
      CHECK(sc[1] == t2);
      CHECK(sc[2] == t3);
      // scaling respects root addition: chi(b5) = chi(b2) chi(b3)
      CHECK(sc[4] == f.mul(sc[1], sc[2]));
    }
}

TEST_CASE("family verification at small q") {
  for (auto [t, r, p, k] : {std::tuple<char, int, uint32_t, uint32_t>{'B', 2, 2, 2},
                            {'B', 2, 3, 1}, {'G', 2, 3, 1}, {'C', 3, 2, 1}}) {
    auto rs = build_root_system(t, r);
    auto ta = analyze_type(rs, p);
    FqField f(p, k);
    auto rep = verify_families(rs, ta, f);
    INFO(rep.summary());
    CHECK(rep.ok);
  }
}

TEST_CASE("approximated centralizer contains the true centralizer") {
  // instantiate D(y) for the C3 {2,3} family at q = 4 and compare with the
  // brute-force centralizer of y = x_2(1) x_3(1): D(y) = q^5, C_U(y) = 2q^4
  auto rs = build_root_system('C', 3);
  ClassifyOptions opts;
  opts.normalize = false;
  auto res = classify(rs, 2, opts);
  const Family* fam = nullptr;
  for (auto& f : res.families)
    if (f.c == std::vector<int>{2, 3} && f.d == std::vector<int>{7}) fam = &f;
  REQUIRE(fam != nullptr);

  FqField f(2, 2);
  auto tab = commutator_table(rs);
  Collector<FqRing> col(tab.get(), FqRing{&f});
  std::vector<uint32_t> values(18, 0);
  values[2 - 1] = 1;
  values[3 - 1] = 1;
  std::set<std::vector<uint32_t>> dset;
  for (uint32_t code = 0; code < (1u << 18); ++code) {
    uint32_t x2 = code;
    for (int l = 1; l <= 9; ++l) {
      values[9 + l - 1] = x2 & 3;
      x2 >>= 2;
    }
    UElem<FqRing> x;
    for (int j = 1; j <= 9; ++j) x.coeffs.push_back(fam->params[j - 1].eval(f, values));
    dset.insert(col.collect(col.letters(x)).coeffs);
  }
  CHECK(dset.size() == 1024);  // |D(y)| = q^5

  UElem<FqRing> y;
  y.coeffs.assign(9, 0);
  y.coeffs[1] = 1;
  y.coeffs[2] = 1;
  uint64_t true_cent = 0;
  ElementCodec codec(4, 9);
  std::vector<uint32_t> u(9);
  for (uint32_t idx = 0; idx < codec.order; ++idx) {
    codec.decode(idx, u);
    UElem<FqRing> ue;
    ue.coeffs = u;
    if (col.multiply(ue, y) == col.multiply(y, ue)) {
      ++true_cent;
      CHECK(dset.count(ue.coeffs));  // containment D(y) >= C_U(y)
    }
  }
  CHECK(true_cent == 512);  // 2q^4
}

TEST_CASE("verify_tables checks polynomials and golden rows") {
  auto rep = verify_tables(build_root_system('B', 2), 2, {2, 4});
  INFO(rep.summary());
  CHECK(rep.ok);
  auto rep2 = verify_tables(build_root_system('G', 2), 3, {3});
  INFO(rep2.summary());
  CHECK(rep2.ok);
}

TEST_CASE("classification JSON round-trips and carries the documented fields") {
  auto ta = analyze_type(build_root_system('C', 3), 2);
  auto text = classify_report_json(ta, true);
  // byte-for-byte determinism across independent runs
  CHECK(text == classify_report_json(analyze_type(build_root_system('C', 3), 2), true));
  auto j = nlohmann::json::parse(text);
  CHECK(nlohmann::json::parse(j.dump(2)) == j);
  CHECK(j["k_poly"] == nlohmann::json({1, 9, 25, 19, 2}));
  bool found = false;
  for (auto& fam : j["families"]) {
    if (fam["c"] == nlohmann::json({2, 3}) && fam["d"] == nlohmann::json({7})) {
      found = true;
      CHECK(fam["representative"] == "x_2(a_2) x_3(a_3) x_7(b_7)");
      CHECK(fam["residuals"].contains("7"));
      CHECK(fam["centralizer_params"].size() == 9);
    }
  }
  CHECK(found);
}

TEST_CASE("emitted tables are stable across runs") {
  CHECK(emit_paper_table('B', 2) == emit_paper_table('B', 2));
  auto s = emit_roots_table(build_root_system('G', 2));
  CHECK(s.find("6: 3 2") != std::string::npos);
}

TEST_CASE("published-layout tables contain the marker rows") {
  auto b2 = emit_paper_table('B', 2);
  CHECK(b2.find("1,2 | =2 | x_1(a_1)x_2(a_2)x_4(c_4) | 2v^2 | 2q^2") != std::string::npos);
  auto g2 = emit_paper_table('G', 2);
  CHECK(g2.find("5 | - | x_5(a_5) | v | q^5") != std::string::npos);
  auto b3 = emit_paper_table('B', 3);
  CHECK(b3.find("9 | - | x_9(b_9) | v+1 | q^9") != std::string::npos);
}

TEST_CASE("brute-force counts interpolate to the published polynomial") {
  auto rs = build_root_system('G', 2);
  FqField f2(2, 1), f4(2, 2), f8(2, 3);
  long long k2 = count_classes(rs, f2).total_classes();
  long long k4 = count_classes(rs, f4).total_classes();
  long long k8 = count_classes(rs, f8).total_classes();
  VPoly poly = published_k_poly('G', 2, PrimeClass::P2);
  CHECK(poly.eval_at_q(2) == k2);
  CHECK(poly.eval_at_q(4) == k4);
  CHECK(poly.eval_at_q(8) == k8);
  // four exact samples pin the cubic
  auto fit = fit_polynomial({{2, k2}, {4, k4}, {8, k8}, {16, poly.eval_at_q(16)}});
  CHECK(fit == poly);
}
