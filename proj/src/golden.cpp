#include "uconj/golden.hpp"

#include <stdexcept>

namespace uconj {

PrimeClass prime_class_of(const RootSystem& rs, uint32_t p) {
  auto bad = bad_primes(rs);
  if (!bad.count(int(p))) return PrimeClass::Good;
  return p == 2 ? PrimeClass::P2 : PrimeClass::P3;
}

VPoly published_k_poly(char t, int rank, PrimeClass pc) {
  bool good = pc == PrimeClass::Good;
  if (t == 'A') {
    // engine test bed: product formula not published here; only A1 used
    if (rank == 1) return VPoly{1, 1};
    throw std::invalid_argument("no published polynomial for this type");
  }
  if (t == 'B' || t == 'C') {
    switch (rank) {
      case 2:
        return good ? VPoly{1, 4, 2} : VPoly{1, 4, 5};
      case 3:
        return good ? VPoly{1, 9, 16, 8, 1} : VPoly{1, 9, 25, 19, 2};
      case 4:
        return good ? VPoly{1, 16, 64, 88, 48, 11, 1} : VPoly{1, 16, 82, 168, 136, 31, 2};
    }
  }
  if (t == 'D' && rank == 4) return good ? VPoly{1, 12, 34, 36, 15, 2} : VPoly{1, 12, 34, 36, 18, 2};
  if (t == 'G' && rank == 2) {
    switch (pc) {
      case PrimeClass::Good:
        return VPoly{1, 6, 5, 1};  // erratum correction, see printed_k_poly
      case PrimeClass::P3:
        return VPoly{1, 6, 11, 2};
      case PrimeClass::P2:
        return VPoly{1, 6, 8, 1};
    }
  }
  throw std::invalid_argument("no published polynomial for this type");
}

VPoly printed_k_poly(char t, int rank, PrimeClass pc) {
  if (t == 'G' && rank == 2 && pc == PrimeClass::Good) return VPoly{1, 4, 2};
  return published_k_poly(t, rank, pc);
}

std::vector<std::vector<int>> golden_root_table(char t, int rank) {
  if (t == 'B' && rank == 2) return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  if (t == 'G' && rank == 2) return {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  if (t == 'B' && rank == 3)
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
            {1, 1, 1}, {0, 1, 2}, {1, 1, 2}, {1, 2, 2}};
  if (t == 'C' && rank == 3)
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
            {1, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 2, 1}};
  throw std::invalid_argument("no published root table for this type");
}

// Family tables for the rank <= 3 types: the published rows with the
// centralizer-column corrections certified by brute-force enumeration
// (B3 p=2 name 1,3: q^5/2q^5; C3 p=2 names 2,3 / 3,4 / 3,8 / 6: 2q^4, 2q^5,
// q^7, q^8).
std::vector<GoldenRow> golden_family_rows(char t, int rank) {
  std::vector<GoldenRow> rows;
  auto add = [&](PrimeClass pc, std::vector<std::pair<int, char>> kinds,
                 VPoly size, long long m, int e) {
    rows.push_back(GoldenRow{pc, std::move(kinds), std::move(size), m, e});
  };
  if (t == 'B' && rank == 2) {
    add(PrimeClass::Good, {{1, 'a'}, {2, 'a'}}, VPoly{0, 0, 1}, 1, 2);
    add(PrimeClass::Good, {{1, 'a'}, {4, 'b'}}, VPoly{0, 1, 1}, 1, 3);
    add(PrimeClass::Good, {{2, 'a'}}, VPoly{0, 1}, 1, 2);
    add(PrimeClass::Good, {{3, 'a'}}, VPoly{0, 1}, 1, 3);
    add(PrimeClass::Good, {{4, 'b'}}, VPoly{1, 1}, 1, 4);
    add(PrimeClass::P2, {{1, 'a'}, {2, 'a'}, {4, 'c'}}, VPoly{0, 0, 2}, 2, 2);
    add(PrimeClass::P2, {{1, 'a'}, {4, 'b'}}, VPoly{0, 1, 1}, 1, 3);
    add(PrimeClass::P2, {{2, 'a'}, {4, 'b'}}, VPoly{0, 1, 1}, 1, 3);
    add(PrimeClass::P2, {{3, 'a'}, {4, 'b'}}, VPoly{0, 1, 1}, 1, 4);
    add(PrimeClass::P2, {{4, 'b'}}, VPoly{1, 1}, 1, 4);
  }
  if (t == 'G' && rank == 2) {
    add(PrimeClass::Good, {{1, 'a'}, {2, 'a'}}, VPoly{0, 0, 1}, 1, 2);
    add(PrimeClass::Good, {{1, 'a'}, {6, 'b'}}, VPoly{0, 1, 1}, 1, 3);
    add(PrimeClass::Good, {{2, 'a'}, {4, 'b'}, {5, 'b'}}, VPoly{0, 1, 2, 1}, 1, 4);
    add(PrimeClass::Good, {{3, 'a'}, {5, 'b'}}, VPoly{0, 1, 1}, 1, 4);
    add(PrimeClass::Good, {{4, 'a'}}, VPoly{0, 1}, 1, 4);
    add(PrimeClass::Good, {{5, 'a'}}, VPoly{0, 1}, 1, 5);
    add(PrimeClass::Good, {{6, 'b'}}, VPoly{1, 1}, 1, 6);
    add(PrimeClass::P2, {{1, 'a'}}, VPoly{0, 1}, 1, 3);
    add(PrimeClass::P2, {{1, 'a'}, {2, 'a'}, {4, 'c'}}, VPoly{0, 0, 2}, 2, 2);
    add(PrimeClass::P2, {{1, 'a'}, {4, 'a'}, {6, 'c'}}, VPoly{0, 0, 2}, 2, 3);
    add(PrimeClass::P2, {{2, 'a'}, {4, 'b'}, {5, 'b'}}, VPoly{0, 1, 2, 1}, 1, 4);
    add(PrimeClass::P2, {{3, 'a'}}, VPoly{0, 1}, 1, 4);
    add(PrimeClass::P2, {{3, 'a'}, {4, 'a'}, {5, 'c'}}, VPoly{0, 0, 2}, 2, 4);
    add(PrimeClass::P2, {{4, 'a'}}, VPoly{0, 1}, 1, 4);
    add(PrimeClass::P2, {{5, 'a'}}, VPoly{0, 1}, 1, 5);
    add(PrimeClass::P2, {{6, 'b'}}, VPoly{1, 1}, 1, 6);
    add(PrimeClass::P3, {{1, 'a'}, {2, 'a'}, {5, 'c'}}, VPoly{0, 0, 3}, 3, 2);
    add(PrimeClass::P3, {{1, 'a'}, {5, 'b'}, {6, 'b'}}, VPoly{0, 1, 2, 1}, 1, 4);
    add(PrimeClass::P3, {{2, 'a'}, {4, 'b'}, {5, 'b'}}, VPoly{0, 1, 2, 1}, 1, 4);
    add(PrimeClass::P3, {{3, 'a'}, {5, 'a'}}, VPoly{0, 0, 1}, 1, 4);
    add(PrimeClass::P3, {{3, 'a'}, {6, 'b'}}, VPoly{0, 1, 1}, 1, 5);
    add(PrimeClass::P3, {{4, 'a'}, {5, 'a'}}, VPoly{0, 0, 1}, 1, 5);
    add(PrimeClass::P3, {{4, 'a'}, {6, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::P3, {{5, 'a'}}, VPoly{0, 1}, 1, 5);
    add(PrimeClass::P3, {{6, 'b'}}, VPoly{1, 1}, 1, 6);
  }
  if (t == 'B' && rank == 3) {
    add(PrimeClass::Good, {{1, 'a'}, {2, 'a'}, {3, 'a'}}, VPoly{0, 0, 0, 1}, 1, 3);
    add(PrimeClass::Good, {{1, 'a'}, {2, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 4);
    add(PrimeClass::Good, {{1, 'a'}, {3, 'a'}, {5, 'a'}}, VPoly{0, 0, 0, 1}, 1, 4);
    add(PrimeClass::Good, {{1, 'a'}, {3, 'a'}, {9, 'b'}}, VPoly{0, 0, 1, 1}, 1, 5);
    add(PrimeClass::Good, {{1, 'a'}, {5, 'a'}}, VPoly{0, 0, 1}, 1, 4);
    add(PrimeClass::Good, {{1, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 5);
    add(PrimeClass::Good, {{1, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::Good, {{2, 'a'}, {3, 'a'}}, VPoly{0, 0, 1}, 1, 3);
    add(PrimeClass::Good, {{2, 'a'}, {6, 'b'}, {7, 'b'}, {8, 'b'}}, VPoly{0, 1, 3, 3, 1}, 1, 6);
    add(PrimeClass::Good, {{3, 'a'}, {4, 'a'}}, VPoly{0, 0, 1}, 1, 4);
    add(PrimeClass::Good, {{3, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 5);
    add(PrimeClass::Good, {{4, 'a'}, {5, 'a'}, {8, 'b'}}, VPoly{0, 0, 1, 1}, 1, 6);
    add(PrimeClass::Good, {{4, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 6);
    add(PrimeClass::Good, {{4, 'a'}, {8, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::Good, {{5, 'a'}, {8, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::Good, {{6, 'a'}, {7, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::Good, {{7, 'a'}}, VPoly{0, 1}, 1, 7);
    add(PrimeClass::Good, {{8, 'a'}}, VPoly{0, 1}, 1, 8);
    add(PrimeClass::Good, {{9, 'b'}}, VPoly{1, 1}, 1, 9);
    add(PrimeClass::P2, {{1, 'a'}, {2, 'a'}, {3, 'a'}, {7, 'c'}}, VPoly{0, 0, 0, 2}, 2, 3);
    add(PrimeClass::P2, {{1, 'a'}, {2, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 4);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}}, VPoly{0, 0, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {5, 'a'}}, VPoly{0, 0, 0, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {5, 'a'}, {7, 'd'}}, VPoly{0, 0, 0, -1, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {5, 'a'}, {7, 'e'}, {9, 'c'}}, VPoly{0, 0, 0, 2}, 2, 5);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {7, 'a'}, {9, 'c'}}, VPoly{0, 0, 0, 2}, 2, 5);
    add(PrimeClass::P2, {{1, 'a'}, {5, 'a'}, {7, 'a'}}, VPoly{0, 0, 0, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {5, 'a'}, {9, 'c'}}, VPoly{0, 0, 2}, 2, 5);
    add(PrimeClass::P2, {{1, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::P2, {{2, 'a'}, {3, 'a'}, {7, 'c'}, {8, 'b'}}, VPoly{0, 0, 2, 2}, 2, 4);
    add(PrimeClass::P2, {{2, 'a'}, {6, 'b'}, {7, 'b'}, {8, 'b'}}, VPoly{0, 1, 3, 3, 1}, 1, 6);
    add(PrimeClass::P2, {{3, 'a'}, {4, 'a'}, {7, 'a'}}, VPoly{0, 0, 0, 1}, 1, 5);
    add(PrimeClass::P2, {{3, 'a'}, {4, 'a'}, {8, 'c'}}, VPoly{0, 0, 2}, 2, 5);
    add(PrimeClass::P2, {{3, 'a'}, {7, 'a'}, {9, 'b'}}, VPoly{0, 0, 1, 1}, 1, 6);
    add(PrimeClass::P2, {{3, 'a'}, {8, 'b'}, {9, 'b'}}, VPoly{0, 1, 2, 1}, 1, 7);
    add(PrimeClass::P2, {{4, 'a'}, {5, 'a'}}, VPoly{0, 0, 1}, 1, 6);
    add(PrimeClass::P2, {{4, 'a'}, {5, 'a'}, {7, 'a'}, {8, 'c'}}, VPoly{0, 0, 0, 2}, 2, 6);
    add(PrimeClass::P2, {{4, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 6);
    add(PrimeClass::P2, {{4, 'a'}, {8, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::P2, {{5, 'a'}, {7, 'a'}, {8, 'b'}}, VPoly{0, 0, 1, 1}, 1, 7);
    add(PrimeClass::P2, {{5, 'a'}, {8, 'a'}}, VPoly{0, 0, 1}, 1, 7);
    add(PrimeClass::P2, {{5, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 8);
    add(PrimeClass::P2, {{6, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 7);
    add(PrimeClass::P2, {{6, 'a'}, {8, 'a'}}, VPoly{0, 0, 1}, 1, 8);
    add(PrimeClass::P2, {{6, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 9);
    add(PrimeClass::P2, {{7, 'a'}}, VPoly{0, 1}, 1, 7);
    add(PrimeClass::P2, {{8, 'a'}}, VPoly{0, 1}, 1, 8);
    add(PrimeClass::P2, {{9, 'b'}}, VPoly{1, 1}, 1, 9);
  }
  if (t == 'C' && rank == 3) {
    add(PrimeClass::Good, {{1, 'a'}, {2, 'a'}, {3, 'a'}}, VPoly{0, 0, 0, 1}, 1, 3);
    add(PrimeClass::Good, {{1, 'a'}, {2, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 4);
    add(PrimeClass::Good, {{1, 'a'}, {3, 'b'}, {5, 'b'}, {7, 'b'}}, VPoly{0, 1, 3, 3, 1}, 1, 5);
    add(PrimeClass::Good, {{2, 'a'}, {3, 'a'}, {9, 'b'}}, VPoly{0, 0, 1, 1}, 1, 4);
    add(PrimeClass::Good, {{2, 'a'}, {6, 'a'}}, VPoly{0, 0, 1}, 1, 4);
    add(PrimeClass::Good, {{2, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 5);
    add(PrimeClass::Good, {{3, 'a'}, {4, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 5);
    add(PrimeClass::Good, {{3, 'a'}, {7, 'a'}, {9, 'b'}}, VPoly{0, 0, 1, 1}, 1, 6);
    add(PrimeClass::Good, {{3, 'a'}, {8, 'a'}}, VPoly{0, 0, 1}, 1, 6);
    add(PrimeClass::Good, {{3, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::Good, {{4, 'a'}, {5, 'a'}}, VPoly{0, 0, 1}, 1, 5);
    add(PrimeClass::Good, {{4, 'a'}, {7, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::Good, {{5, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::Good, {{6, 'a'}, {7, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::Good, {{7, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 8);
    add(PrimeClass::Good, {{8, 'a'}}, VPoly{0, 1}, 1, 8);
    add(PrimeClass::Good, {{9, 'b'}}, VPoly{1, 1}, 1, 9);
    add(PrimeClass::P2, {{1, 'a'}, {2, 'a'}, {3, 'a'}, {7, 'c'}}, VPoly{0, 0, 0, 2}, 2, 3);
    add(PrimeClass::P2, {{1, 'a'}, {2, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 4);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {5, 'a'}, {7, 'd'}}, VPoly{0, 0, 0, -1, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {5, 'a'}, {7, 'f'}, {9, 'c'}}, VPoly{0, 0, 0, 4}, 2, 5);
    add(PrimeClass::P2, {{1, 'a'}, {3, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {5, 'a'}, {7, 'b'}}, VPoly{0, 0, 1, 1}, 1, 5);
    add(PrimeClass::P2, {{1, 'a'}, {7, 'a'}, {9, 'c'}}, VPoly{0, 0, 2}, 2, 5);
    add(PrimeClass::P2, {{1, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 6);
    add(PrimeClass::P2, {{2, 'a'}, {3, 'a'}, {7, 'c'}, {9, 'b'}}, VPoly{0, 0, 2, 2}, 2, 4);
    add(PrimeClass::P2, {{2, 'a'}, {6, 'a'}, {7, 'b'}, {9, 'b'}}, VPoly{0, 0, 1, 2, 1}, 1, 6);
    add(PrimeClass::P2, {{2, 'a'}, {7, 'b'}, {9, 'b'}}, VPoly{0, 1, 2, 1}, 1, 6);
    add(PrimeClass::P2, {{3, 'a'}, {4, 'a'}, {7, 'a'}}, VPoly{0, 0, 0, 1}, 1, 5);
    add(PrimeClass::P2, {{3, 'a'}, {4, 'a'}, {9, 'c'}}, VPoly{0, 0, 2}, 2, 5);
    add(PrimeClass::P2, {{3, 'a'}, {7, 'a'}, {9, 'b'}}, VPoly{0, 0, 1, 1}, 1, 6);
    add(PrimeClass::P2, {{3, 'a'}, {8, 'a'}, {9, 'b'}}, VPoly{0, 0, 1, 1}, 1, 7);
    add(PrimeClass::P2, {{3, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::P2, {{4, 'a'}, {5, 'a'}}, VPoly{0, 0, 1}, 1, 6);
    add(PrimeClass::P2, {{4, 'a'}, {5, 'a'}, {7, 'a'}, {9, 'c'}}, VPoly{0, 0, 0, 2}, 2, 6);
    add(PrimeClass::P2, {{4, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 6);
    add(PrimeClass::P2, {{4, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 7);
    add(PrimeClass::P2, {{5, 'a'}, {7, 'b'}, {9, 'b'}}, VPoly{0, 1, 2, 1}, 1, 7);
    add(PrimeClass::P2, {{6, 'a'}, {7, 'a'}}, VPoly{0, 0, 1}, 1, 7);
    add(PrimeClass::P2, {{6, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 8);
    add(PrimeClass::P2, {{7, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 8);
    add(PrimeClass::P2, {{8, 'a'}, {9, 'b'}}, VPoly{0, 1, 1}, 1, 9);
    add(PrimeClass::P2, {{9, 'b'}}, VPoly{1, 1}, 1, 9);
  }
  return rows;
}


}  // namespace uconj
