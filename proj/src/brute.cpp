#include "uconj/brute.hpp"

#include <stdexcept>

#include "uconj/lie.hpp"

namespace uconj {

namespace {

constexpr uint64_t kCeiling = uint64_t(1) << 22;

struct Expander {
  const RootSystem& rs;
  const FqField& f;
  std::shared_ptr<const CommutatorTable> tab;
  Collector<FqRing> col;
  ElementCodec codec;
  std::vector<std::pair<int, uint32_t>> gens;  // (root index, field element)

  Expander(const RootSystem& rs_, const FqField& f_)
      : rs(rs_),
        f(f_),
        tab(commutator_table(rs_)),
        col(tab.get(), FqRing{&f_}),
        codec(f_.q, rs_.nroots()) {
    if (codec.order > kCeiling) throw std::invalid_argument("enumeration ceiling exceeded");
    // one generator per root subgroup and F_p-basis element of F_q
    for (int i = 1; i <= rs.nroots(); ++i)
      for (uint32_t b = 0, lambda = 1; b < f.k; ++b, lambda *= f.p) gens.push_back({i, lambda});
  }

  // g y g^-1 for the generator g = x_i(lambda)
  uint32_t conj_by_gen(const std::vector<uint32_t>& y, int i, uint32_t lambda,
                       std::vector<Letter<FqRing>>& word) {
    word.clear();
    word.push_back({i, lambda});
    for (int j = 1; j <= rs.nroots(); ++j)
      if (y[j - 1]) word.push_back({j, y[j - 1]});
    word.push_back({i, f.neg(lambda)});
    auto z = col.collect(word);
    return codec.encode(z.coeffs);
  }

  // expands the orbit of seed (given as flat index); marks visited
  uint64_t expand(uint32_t seed, std::vector<uint8_t>& visited, std::vector<uint32_t>* members) {
    std::vector<uint32_t> queue{seed};
    visited[seed >> 3] |= uint8_t(1u << (seed & 7));
    if (members) members->push_back(seed);
    uint64_t size = 1;
    std::vector<uint32_t> y(rs.nroots());
    std::vector<Letter<FqRing>> word;
    word.reserve(2 * rs.nroots() + 2);
    for (size_t head = 0; head < queue.size(); ++head) {
      codec.decode(queue[head], y);
      for (auto& [i, lambda] : gens) {
        uint32_t z = conj_by_gen(y, i, lambda, word);
        if (!(visited[z >> 3] & (1u << (z & 7)))) {
          visited[z >> 3] |= uint8_t(1u << (z & 7));
          queue.push_back(z);
          ++size;
          if (members) members->push_back(z);
        }
      }
    }
    return size;
  }
};

}  // namespace

ClassInventory count_classes(const RootSystem& rs, const FqField& f,
                             std::vector<uint32_t>* class_of) {
  Expander ex(rs, f);
  ClassInventory inv;
  inv.type_label = rs.type_label;
  inv.rank = rs.rank;
  inv.q = f.q;
  inv.group_order = ex.codec.order;
  if (class_of) class_of->assign(ex.codec.order, 0);

  std::vector<uint8_t> visited((ex.codec.order + 7) / 8, 0);
  std::vector<uint32_t> members;
  uint64_t covered = 0;
  for (uint32_t seed = 0; seed < ex.codec.order; ++seed) {
    if (visited[seed >> 3] & (1u << (seed & 7))) continue;
    members.clear();
    uint64_t size = ex.expand(seed, visited, class_of ? &members : nullptr);
    if (class_of)
      for (uint32_t m : members) (*class_of)[m] = uint32_t(inv.classes.size());
    ClassRecord rec{seed, size, ex.codec.order / size};
    if (rec.size * rec.centralizer != ex.codec.order)
      throw std::logic_error("count_classes: orbit size does not divide group order");
    inv.classes.push_back(rec);
    inv.centralizer_histogram[rec.centralizer]++;
    covered += size;
  }
  if (covered != ex.codec.order) throw std::logic_error("count_classes: classes do not cover U");
  return inv;
}

std::vector<uint32_t> expand_class(const RootSystem& rs, const FqField& f,
                                   const std::vector<uint32_t>& rep) {
  Expander ex(rs, f);
  std::vector<uint8_t> visited((ex.codec.order + 7) / 8, 0);
  std::vector<uint32_t> members;
  ex.expand(ex.codec.encode(rep), visited, &members);
  std::sort(members.begin(), members.end());
  return members;
}

uint64_t centralizer_order_direct(const RootSystem& rs, const FqField& f,
                                  const std::vector<uint32_t>& rep) {
  Expander ex(rs, f);
  if (ex.codec.order > (uint64_t(1) << 16))
    throw std::invalid_argument("centralizer_order_direct: group too large");
  auto tab = commutator_table(rs);
  Collector<FqRing> col(tab.get(), FqRing{&f});
  UElem<FqRing> x;
  x.coeffs = rep;
  uint64_t count = 0;
  std::vector<uint32_t> u(rs.nroots());
  for (uint32_t idx = 0; idx < ex.codec.order; ++idx) {
    ex.codec.decode(idx, u);
    UElem<FqRing> ue;
    ue.coeffs = u;
    if (col.multiply(ue, x) == col.multiply(x, ue)) ++count;
  }
  return count;
}

}  // namespace uconj
