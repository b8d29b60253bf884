#pragma once

#include <set>
#include <string>
#include <vector>

namespace uconj {

// A positive root written in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }
};

// Positive roots of a simple system of type A/B/C/D (rank <= 4) or G2, in the
// fixed enumeration the whole pipeline depends on: ascending height, then
// descending lexicographic on coefficient vectors.  This reproduces the
// published orders for B2, G2, B3 and C3.
struct RootSystem {
  char type_label = 'A';
  int rank = 1;
  std::vector<Root> positive_roots;            // beta_1..beta_N (0-based storage)
  std::vector<std::vector<int>> cartan;        // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> length_sq;                  // (alpha_i, alpha_i), up to global scale

  int nroots() const { return int(positive_roots.size()); }
  std::string name() const { return std::string(1, type_label) + std::to_string(rank); }

  // 1-based index of a coefficient vector, or 0 when it is not a positive root.
  int index_of(const std::vector<int>& coeffs) const;
  // (beta_i, beta_j) in the same scale as length_sq
  long long inner(const Root& a, const Root& b) const;
  long long root_length_sq(const Root& a) const { return inner(a, a); }
};

RootSystem build_root_system(char type_label, int rank);

// beta_i <= beta_j in the dominance order (1-based indices).
bool dominance_leq(const RootSystem& rs, int i, int j);

std::set<int> bad_primes(const RootSystem& rs);

// True for the pairs the classification pipeline accepts.
bool classification_supported(char type_label, int rank);

}  // namespace uconj
