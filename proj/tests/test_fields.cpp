#include "doctest.h"
#include "uconj/fq.hpp"

using namespace uconj;

TEST_CASE("F_2 and F_4 basics") {
  FqField f2(2, 1);
  CHECK(f2.add(1, 1) == 0);

  FqField f4(2, 2);
  CHECK(f4.q == 4);
  for (uint32_t x = 0; x < 4; ++x) CHECK(f4.add(x, x) == 0);  // characteristic 2
  // every nonzero element has an inverse
  for (uint32_t x = 1; x < 4; ++x) CHECK(f4.mul(x, f4.inv(x)) == 1);
}

TEST_CASE("F_9 multiplicative group is cyclic of order 8") {
  FqField f9(3, 2);
  uint32_t g = f9.generator();
  CHECK(f9.pow(g, 8) == 1);
  CHECK(f9.pow(g, 4) != 1);
}

TEST_CASE("field axioms on random triples") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    FqField f(p, k);
    uint64_t seed = 12345;
    auto rnd = [&]() {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      return uint32_t((seed >> 33) % f.q);
    };
    for (int it = 0; it < 500; ++it) {
      uint32_t a = rnd(), b = rnd(), c = rnd();
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("non-prime p is rejected") {
  CHECK_THROWS(FqField(4, 1));
  CHECK_THROWS(FqField(1, 2));
}

TEST_CASE("image size by enumeration") {
  FqField f4(2, 2);
  // t -> t^2 + t over F_4 has image of size 2
  auto phi = [&](uint32_t t) { return f4.add(f4.mul(t, t), t); };
  CHECK(image_size_enum(f4, phi) == 2);

  // nonzero scaling is a bijection
  FqField f8(2, 3);
  auto lin = [&](uint32_t t) { return f8.mul(5, t); };
  CHECK(image_size_enum(f8, lin) == 8);
}

TEST_CASE("additive maps: image size times kernel size = q") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 2}, {2, 3}, {2, 4},
                      {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 1}, {3, 2}, {3, 4}, {5, 1}}) {
    FqField f(p, k);
    if (f.q > 256) continue;
    // phi(t) = a t^p + b t for a few (a, b)
    for (uint32_t a = 1; a < std::min(f.q, 4u); ++a)
      for (uint32_t b = 0; b < std::min(f.q, 4u); ++b) {
        auto phi = [&](uint32_t t) { return f.add(f.mul(a, f.pow(t, p)), f.mul(b, t)); };
        int img = image_size_enum(f, phi);
        int ker = 0;
        for (uint32_t t = 0; t < f.q; ++t)
          if (phi(t) == 0) ++ker;
        CHECK(uint32_t(img) * uint32_t(ker) == f.q);
      }
  }
}
