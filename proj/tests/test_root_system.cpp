#include "doctest.h"
#include "uconj/root_system.hpp"

using namespace uconj;

namespace {
std::vector<std::vector<int>> coeff_list(const RootSystem& rs) {
  std::vector<std::vector<int>> v;
  for (auto& r : rs.positive_roots) v.push_back(r.coeffs);
  return v;
}
}  // namespace

TEST_CASE("published enumerations are reproduced exactly") {
  auto b2 = build_root_system('B', 2);
  CHECK(coeff_list(b2) == std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});

  auto g2 = build_root_system('G', 2);
  CHECK(coeff_list(g2) ==
        std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});

  auto b3 = build_root_system('B', 3);
  CHECK(coeff_list(b3) == std::vector<std::vector<int>>{{1, 0, 0},
                                                        {0, 1, 0},
                                                        {0, 0, 1},
                                                        {1, 1, 0},
                                                        {0, 1, 1},
                                                        {1, 1, 1},
                                                        {0, 1, 2},
                                                        {1, 1, 2},
                                                        {1, 2, 2}});

  auto c3 = build_root_system('C', 3);
  CHECK(coeff_list(c3) == std::vector<std::vector<int>>{{1, 0, 0},
                                                        {0, 1, 0},
                                                        {0, 0, 1},
                                                        {1, 1, 0},
                                                        {0, 1, 1},
                                                        {1, 1, 1},
                                                        {0, 2, 1},
                                                        {1, 2, 1},
                                                        {2, 2, 1}});
}

TEST_CASE("root counts per type") {
  CHECK(build_root_system('A', 1).nroots() == 1);
  CHECK(build_root_system('B', 2).nroots() == 4);
  CHECK(build_root_system('G', 2).nroots() == 6);
  CHECK(build_root_system('B', 3).nroots() == 9);
  CHECK(build_root_system('C', 3).nroots() == 9);
  CHECK(build_root_system('B', 4).nroots() == 16);
  CHECK(build_root_system('C', 4).nroots() == 16);
  CHECK(build_root_system('D', 4).nroots() == 12);
  CHECK(build_root_system('A', 4).nroots() == 10);
}

TEST_CASE("unsupported systems are refused") {
  CHECK_THROWS(build_root_system('F', 4));
  CHECK_THROWS(build_root_system('B', 5));
  CHECK_THROWS(build_root_system('E', 6));
}

TEST_CASE("heights never decrease along the enumeration") {
  for (auto [t, r] : {std::pair<char, int>{'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                      {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}}) {
    auto rs = build_root_system(t, r);
    for (int i = 1; i < rs.nroots(); ++i)
      CHECK(rs.positive_roots[i - 1].height() <= rs.positive_roots[i].height());
  }
}

TEST_CASE("enumeration refines dominance") {
  for (auto [t, r] : {std::pair<char, int>{'B', 2}, {'G', 2}, {'B', 3}, {'C', 3},
                      {'B', 4}, {'C', 4}, {'D', 4}}) {
    auto rs = build_root_system(t, r);
    for (int i = 1; i <= rs.nroots(); ++i)
      for (int j = 1; j <= rs.nroots(); ++j)
        if (dominance_leq(rs, i, j)) CHECK(i <= j);
  }
}

TEST_CASE("tails are closed under root addition") {
  for (auto [t, r] : {std::pair<char, int>{'B', 3}, {'C', 3}, {'G', 2}, {'B', 4},
                      {'C', 4}, {'D', 4}}) {
    auto rs = build_root_system(t, r);
    for (int i = 1; i <= rs.nroots(); ++i)
      for (int j = i; j <= rs.nroots(); ++j) {
        std::vector<int> s(rs.rank);
        for (int k = 0; k < rs.rank; ++k)
          s[k] = rs.positive_roots[i - 1].coeffs[k] + rs.positive_roots[j - 1].coeffs[k];
        int idx = rs.index_of(s);
        if (idx) CHECK(idx > std::max(i, j));
      }
  }
}

TEST_CASE("dominance examples in B2") {
  auto rs = build_root_system('B', 2);
  CHECK(dominance_leq(rs, 1, 4));   // (1,0) <= (1,2)
  CHECK(!dominance_leq(rs, 1, 2));  // incomparable simple roots
  for (int i = 1; i <= 4; ++i) CHECK(dominance_leq(rs, i, i));
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(build_root_system('B', 2)) == std::set<int>{2});
  CHECK(bad_primes(build_root_system('G', 2)) == std::set<int>{2, 3});
  CHECK(bad_primes(build_root_system('A', 2)) == std::set<int>{});
  CHECK(bad_primes(build_root_system('D', 4)) == std::set<int>{2});
}
