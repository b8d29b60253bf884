#include "uconj/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uconj {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
  std::vector<std::vector<int>> A(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) A[i][i] = 2;
  auto link = [&](int i, int j, int aij, int aji) {
    A[i][j] = aij;
    A[j][i] = aji;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_rank short
      if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
      link(rank - 2, rank - 1, -2, -1);
      break;
    case 'C':  // long simple root at one end of the chain
      if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
      if (rank == 4) {
        // rank 4 uses the long-root-first labeling; with the long root last,
        // the classification hits value-dependent steps even at good primes
        link(0, 1, -2, -1);
        link(1, 2, -1, -1);
        link(2, 3, -1, -1);
      } else {
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
        link(rank - 2, rank - 1, -1, -2);
      }
      break;
    case 'D':
      if (rank != 4) throw std::invalid_argument("type D supported only at rank 4");
      link(0, 1, -1, -1);
      link(1, 2, -1, -1);
      link(1, 3, -1, -1);
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("type G needs rank 2");
      // alpha_1 short: highest root is 3*alpha_1 + 2*alpha_2
      link(0, 1, -1, -3);
      break;
    default:
      throw std::invalid_argument("unknown type label");
  }
  return A;
}

std::vector<int> simple_lengths(char type, int rank) {
  // (alpha_i, alpha_i) up to one global scale per system
  std::vector<int> d(rank, 2);
  switch (type) {
    case 'B':
      d.assign(rank, 4);
      d[rank - 1] = 2;
      break;
    case 'C':
      d.assign(rank, 2);
      d[rank == 4 ? 0 : rank - 1] = 4;
      break;
    case 'G':
      d = {2, 6};
      break;
    default:
      break;  // simply laced
  }
  return d;
}

}  // namespace

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  for (int i = 0; i < nroots(); ++i)
    if (positive_roots[i].coeffs == coeffs) return i + 1;
  return 0;
}

long long RootSystem::inner(const Root& a, const Root& b) const {
  // (a, b) = sum_{i,j} a_i b_j (alpha_i, alpha_j); recover (alpha_i, alpha_j)
  // from the Cartan matrix: <alpha_i, alpha_j^vee> = 2 (alpha_i,alpha_j)/(alpha_j,alpha_j).
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      long long aij = (long long)cartan[i][j] * length_sq[j] / 2;
      s += (long long)a.coeffs[i] * b.coeffs[j] * aij;
    }
  return s;
}

bool classification_supported(char type_label, int rank) {
  switch (type_label) {
    case 'A':
      return rank >= 1 && rank <= 4;
    case 'B':
    case 'C':
      return rank >= 2 && rank <= 4;
    case 'D':
      return rank == 4;
    case 'G':
      return rank == 2;
    default:
      return false;
  }
}

RootSystem build_root_system(char type_label, int rank) {
  if (!classification_supported(type_label, rank))
    throw std::invalid_argument("unsupported root system " + std::string(1, type_label) +
                                std::to_string(rank));
  RootSystem rs;
  rs.type_label = type_label;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type_label, rank);
  rs.length_sq = simple_lengths(type_label, rank);

  // Generate positive roots by height: gamma + alpha_s is a root iff
  // q = p - <gamma, alpha_s^vee> > 0, where p is the length of the alpha_s-string
  // below gamma.  Everything stays in the simple-root basis.
  std::set<std::vector<int>> known;
  std::vector<std::vector<std::vector<int>>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < rank; ++i) {
    std::vector<int> simple(rank, 0);
    simple[i] = 1;
    by_height.back().push_back(simple);
    known.insert(simple);
  }
  while (!by_height.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& gamma : by_height.back()) {
      for (int s = 0; s < rank; ++s) {
        // p = max m with gamma - m*alpha_s a root
        int pdown = 0;
        std::vector<int> g = gamma;
        for (;;) {
          g[s] -= 1;
          bool nonneg = g[s] >= 0;
          if (!nonneg || !known.count(g)) break;
          ++pdown;
        }
        long long pairing = 0;
        for (int i = 0; i < rank; ++i) pairing += (long long)gamma[i] * rs.cartan[i][s];
        if (pdown - pairing > 0) {
          std::vector<int> up = gamma;
          up[s] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    by_height.push_back(std::move(next));
  }

  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), std::greater<>());  // descending lex
    for (auto& v : level) rs.positive_roots.push_back(Root{v});
  }
  return rs;
}

namespace {

// delta expressible as a nonnegative-integer combination of positive roots
bool sum_of_positive_roots(const RootSystem& rs, const std::vector<int>& delta,
                           std::map<std::vector<int>, bool>& memo) {
  bool all_zero = true;
  for (int c : delta) {
    if (c < 0) return false;
    if (c != 0) all_zero = false;
  }
  if (all_zero) return true;
  auto it = memo.find(delta);
  if (it != memo.end()) return it->second;
  memo[delta] = false;  // cut cycles
  for (const auto& r : rs.positive_roots) {
    std::vector<int> rest(delta.size());
    bool ok = true;
    for (size_t i = 0; i < delta.size(); ++i) {
      rest[i] = delta[i] - r.coeffs[i];
      if (rest[i] < 0) ok = false;
    }
    if (ok && sum_of_positive_roots(rs, rest, memo)) {
      memo[delta] = true;
      return true;
    }
  }
  return false;
}

}  // namespace

bool dominance_leq(const RootSystem& rs, int i, int j) {
  if (i < 1 || j < 1 || i > rs.nroots() || j > rs.nroots())
    throw std::out_of_range("dominance_leq: bad index");
  if (i == j) return true;
  const auto& bi = rs.positive_roots[i - 1].coeffs;
  const auto& bj = rs.positive_roots[j - 1].coeffs;
  std::vector<int> delta(bi.size());
  for (size_t k = 0; k < bi.size(); ++k) delta[k] = bj[k] - bi[k];
  std::map<std::vector<int>, bool> memo;
  return sum_of_positive_roots(rs, delta, memo);
}

std::set<int> bad_primes(const RootSystem& rs) {
  switch (rs.type_label) {
    case 'A':
      return {};
    case 'B':
    case 'C':
    case 'D':
      return {2};
    case 'G':
      return {2, 3};
    default:
      return {};
  }
}

}  // namespace uconj
