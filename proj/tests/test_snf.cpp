#include "doctest.h"
#include "uconj/snf.hpp"

using namespace uconj;

TEST_CASE("SNF basics") {
  auto s = smith_normal_form(imat_identity(3));
  CHECK(imat_equal(s.D, imat_identity(3)));

  auto s2 = smith_normal_form({{1, 1}, {0, 2}});
  CHECK(s2.D[0][0] == 1);
  CHECK(s2.D[1][1] == 2);
  CHECK(s2.D[0][1] == 0);
  CHECK(s2.D[1][0] == 0);

  // single row (1,2): gcd 1
  auto s3 = smith_normal_form({{1, 2}});
  CHECK(s3.D[0][0] == 1);
  CHECK(s3.D[0][1] == 0);

  auto s4 = smith_normal_form({{2, 2, 1}});
  CHECK(s4.D[0][0] == 1);
}

TEST_CASE("SNF certificate on random matrices") {
  uint64_t seed = 4242;
  auto rnd = [&]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return (long long)((seed >> 33) % 19) - 9;
  };
  for (int it = 0; it < 1000; ++it) {
    int rows = 1 + it % 4, cols = 1 + (it / 4) % 6;
    IMat M(rows, std::vector<long long>(cols));
    for (auto& r : M)
      for (auto& x : r) x = rnd();
    auto s = smith_normal_form(M);
    CHECK(imat_equal(imat_mul(imat_mul(s.U, M), s.V), s.D));
    long long du = imat_det(s.U), dv = imat_det(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, divisibility chain, nonnegative
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j) CHECK(s.D[i][j] == 0);
    for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
      CHECK(s.D[i][i] >= 0);
      if (s.D[i + 1][i + 1] != 0) {
        if (s.D[i][i] == 0)
          CHECK(s.D[i + 1][i + 1] == 0);
        else
          CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
      }
    }
  }
}
