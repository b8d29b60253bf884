#include "doctest.h"
#include "uconj/symexpr.hpp"
#include "uconj/upoly.hpp"

using namespace uconj;

namespace {
SymRingSpec ring9(uint32_t p) { return SymRingSpec{p, 9}; }
}  // namespace

TEST_CASE("symbolic ring arithmetic in characteristic 2") {
  auto R = ring9(2);
  auto t1 = SymExpr::t_sym(R, 1);
  CHECK((t1 + t1).is_zero());

  // (a_2 t_3) * (a_3 / a_2) = a_3 t_3
  auto a2 = SymExpr::a_sym(R, 2), a3 = SymExpr::a_sym(R, 3), t3 = SymExpr::t_sym(R, 3);
  auto lhs = (a2 * t3) * (a3 / a2);
  CHECK(lhs.equals(a3 * t3));

  // a_3 t_2^2 + a_2 a_3 t_2 is a valid element with denominator 1
  auto t2 = SymExpr::t_sym(R, 2);
  auto g = a3 * t2 * t2 + a2 * a3 * t2;
  CHECK(g.den.is_single_term());
  CHECK(g.den == PolyP::constant(ZpDom{2}, R.nvars(), 1));
}

TEST_CASE("substitution") {
  auto R = ring9(2);
  auto a2 = SymExpr::a_sym(R, 2), a3 = SymExpr::a_sym(R, 3);
  auto t2 = SymExpr::t_sym(R, 2), t3 = SymExpr::t_sym(R, 3);

  auto repl = a3 * t2 / a2;
  CHECK(t3.substituted_t(3, repl).equals(repl));
  CHECK((a2 * SymExpr::t_sym(R, 1)).substituted_t(1, SymExpr::zero(R)).is_zero());

  // char-2 squares add: t_2^2 + t_6^2 with t_6 := t_2 collapses to zero
  auto t6 = SymExpr::t_sym(R, 6);
  auto sq = t2 * t2 + t6 * t6;
  CHECK(sq.substituted_t(6, t2).is_zero());

  // identity substitution
  auto g = a3 * t2 * t2 + a2 * a3 * t2;
  CHECK(g.substituted_t(2, t2).equals(g));

  CHECK_THROWS(t3.substituted_t(3, t3 + a2));  // self reference
}

TEST_CASE("linear occurrence analysis") {
  auto R = ring9(2);
  auto a2 = SymExpr::a_sym(R, 2), a3 = SymExpr::a_sym(R, 3);
  auto t1 = SymExpr::t_sym(R, 1), t2 = SymExpr::t_sym(R, 2);

  auto g1 = a2 * t1;
  auto r1 = analyze_linear_occurrence(g1, 1);
  CHECK(r1.kind == LinearOccurrence::SingleLinearTerm);
  CHECK(r1.h.equals(a2));

  auto g2 = a3 * t2 * t2 + a2 * a3 * t2;
  CHECK(analyze_linear_occurrence(g2, 2).kind == LinearOccurrence::Other);

  auto g3 = a3 * SymExpr::t_sym(R, 4);
  CHECK(analyze_linear_occurrence(g3, 5).kind == LinearOccurrence::Absent);
}

TEST_CASE("ring axioms on random symbolic elements") {
  for (uint32_t p : {2u, 3u}) {
    SymRingSpec R{p, 4};
    uint64_t seed = 99;
    auto rnd = [&]() {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      return uint32_t(seed >> 33);
    };
    auto rand_expr = [&]() {
      SymExpr e = SymExpr::zero(R);
      int terms = 1 + rnd() % 3;
      for (int i = 0; i < terms; ++i) {
        SymExpr t = SymExpr::constant(R, 1 + rnd() % (p - 1 ? p - 1 : 1));
        t = t * SymExpr::a_sym(R, 1 + rnd() % 4);
        if (rnd() % 2) t = t * SymExpr::t_sym(R, 1 + rnd() % 4);
        if (rnd() % 3 == 0) t = t / SymExpr::a_sym(R, 1 + rnd() % 4);
        e = e + t;
      }
      return e;
    };
    for (int it = 0; it < 1000; ++it) {
      auto x = rand_expr(), y = rand_expr(), z = rand_expr();
      CHECK((x * y).equals(y * x));
      CHECK(((x + y) + z).equals(x + (y + z)));
      CHECK(((x * y) * z).equals(x * (y * z)));
      CHECK((x * (y + z)).equals(x * y + x * z));
    }
  }
}

TEST_CASE("cross-multiplication equality is an equivalence relation") {
  SymRingSpec R{3, 4};
  auto a1 = SymExpr::a_sym(R, 1), a2 = SymExpr::a_sym(R, 2);
  auto x = a1 / a2;
  auto y = (a1 * a1) / (a2 * a1);
  auto z = (a1 * a2) / (a2 * a2);
  CHECK(x.equals(x));
  CHECK(y.equals(x));
  CHECK(x.equals(y));
  CHECK((x.equals(y) && y.equals(z)) == x.equals(z));
}

TEST_CASE("v-polynomials and interpolation") {
  VPoly p{1, 4, 5};  // 5v^2 + 4v + 1
  CHECK(p.str() == "5v^2+4v+1");
  CHECK(p.eval_at_q(2) == 10);
  CHECK(p.eval_at_q(4) == 58);
  CHECK(p.eval_at_q(8) == 274);

  auto fit = fit_polynomial({{2, 10}, {4, 58}, {8, 274}});
  CHECK(fit == p);

  auto c = fit_polynomial({{2, 7}, {4, 7}, {8, 7}});
  CHECK(c == VPoly::constant(7));

  CHECK_THROWS(fit_polynomial({{2, 1}, {3, 2}, {5, 3}, {9, 100}}));
}
