#include "doctest.h"
#include "uconj/brute.hpp"

using namespace uconj;

TEST_CASE("class counts at q = 2 match the published polynomials") {
  FqField f2(2, 1);
  CHECK(count_classes(build_root_system('B', 2), f2).total_classes() == 10);
  CHECK(count_classes(build_root_system('G', 2), f2).total_classes() == 16);
  CHECK(count_classes(build_root_system('B', 3), f2).total_classes() == 56);
  CHECK(count_classes(build_root_system('C', 3), f2).total_classes() == 56);
}

TEST_CASE("abelian rank-1 group has q classes") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    FqField f(p, k);
    auto inv = count_classes(build_root_system('A', 1), f);
    CHECK(inv.total_classes() == f.q);
    for (auto& c : inv.classes) CHECK(c.size == 1);
  }
}

TEST_CASE("orbit-stabilizer holds on every record and Burnside sum agrees") {
  auto rs = build_root_system('B', 2);
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 2}, {3, 1}}) {
    FqField f(p, k);
    auto inv = count_classes(rs, f);
    uint64_t burnside = 0;
    std::vector<uint32_t> rep(rs.nroots());
    ElementCodec codec(f.q, rs.nroots());
    for (auto& c : inv.classes) {
      CHECK(c.size * c.centralizer == inv.group_order);
      codec.decode(c.rep, rep);
      uint64_t direct = centralizer_order_direct(rs, f, rep);
      CHECK(direct == c.centralizer);
      burnside += c.size * direct;
    }
    CHECK(burnside / inv.group_order == inv.total_classes());
  }
}

TEST_CASE("classes partition the group and reps are canonical minima") {
  auto rs = build_root_system('G', 2);
  FqField f(2, 1);
  auto inv = count_classes(rs, f);
  uint64_t total = 0;
  std::vector<uint32_t> rep(rs.nroots());
  ElementCodec codec(f.q, rs.nroots());
  for (auto& c : inv.classes) {
    total += c.size;
    codec.decode(c.rep, rep);
    auto members = expand_class(rs, f, rep);
    CHECK(members.size() == c.size);
    CHECK(members.front() == c.rep);
  }
  CHECK(total == inv.group_order);
}
