#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "uconj/engine.hpp"
#include "uconj/fq.hpp"
#include "uconj/root_system.hpp"

namespace uconj {

struct ClassRecord {
  uint32_t rep;          // flat index of the least element of the class
  uint64_t size;         // orbit size
  uint64_t centralizer;  // q^N / size
};

struct ClassInventory {
  char type_label;
  int rank;
  uint32_t q;
  uint64_t group_order;
  std::vector<ClassRecord> classes;                 // ascending rep index
  std::map<uint64_t, uint64_t> centralizer_histogram;  // order -> #classes

  uint64_t total_classes() const { return classes.size(); }
};

// Flat base-q encoding of coefficient vectors.
struct ElementCodec {
  uint32_t q = 2;
  int n = 0;
  uint64_t order = 1;

  ElementCodec(uint32_t q_, int n_) : q(q_), n(n_) {
    for (int i = 0; i < n; ++i) order *= q;
  }
  uint32_t encode(const std::vector<uint32_t>& coeffs) const {
    uint64_t idx = 0;
    for (int j = n - 1; j >= 0; --j) idx = idx * q + coeffs[j];
    return uint32_t(idx);
  }
  void decode(uint32_t idx, std::vector<uint32_t>& coeffs) const {
    uint64_t x = idx;
    for (int j = 0; j < n; ++j) {
      coeffs[j] = uint32_t(x % q);
      x /= q;
    }
  }
};

// Exact conjugacy classes of U(q) by seeded breadth-first orbit expansion
// under conjugation by all root-subgroup generators.  When class_of is given
// it receives, per flat element index, the index of its class in the result.
ClassInventory count_classes(const RootSystem& rs, const FqField& f,
                             std::vector<uint32_t>* class_of = nullptr);

// Orbit of one element under conjugation, as flat indices (sorted).
std::vector<uint32_t> expand_class(const RootSystem& rs, const FqField& f,
                                   const std::vector<uint32_t>& rep);

// |C_U(x)| by direct enumeration of commuting elements (small groups only).
uint64_t centralizer_order_direct(const RootSystem& rs, const FqField& f,
                                  const std::vector<uint32_t>& rep);

}  // namespace uconj
