#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace uconj {

// F_q, q = p^k, with elements encoded as indices in [0, q): the index's base-p
// digits are the coefficients of the residue polynomial (digit i multiplies x^i).
// Multiplication goes through discrete-log tables; addition is digitwise mod p
// (XOR when p = 2).  The modulus is the least irreducible monic polynomial of
// degree k in lexicographic coefficient order, so encodings are canonical.
class FqField {
 public:
  uint32_t p = 2, k = 1, q = 2;

  FqField(uint32_t p_, uint32_t k_);

  uint32_t add(uint32_t a, uint32_t b) const {
    if (p == 2) return a ^ b;
    uint32_t r = 0, mul = 1;
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t da = (a / pow_p_[i]) % p, db = (b / pow_p_[i]) % p;
      r += ((da + db) % p) * mul;
      mul *= p;
    }
    return r;
  }
  uint32_t neg(uint32_t a) const {
    if (p == 2) return a;
    uint32_t r = 0, mul = 1;
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t d = (a / pow_p_[i]) % p;
      r += (d ? p - d : 0) * mul;
      mul *= p;
    }
    return r;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q - 1)];
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    return exp_[(q - 1 - log_[a]) % (q - 1)];
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[uint32_t((uint64_t(log_[a]) * (e % (q - 1))) % (q - 1))];
  }
  // canonical copy of an integer (image of Z -> F_p -> F_q)
  uint32_t from_int(long long c) const {
    long long r = c % (long long)p;
    if (r < 0) r += p;
    return uint32_t(r);
  }
  uint32_t generator() const { return gen_; }
  uint32_t dlog(uint32_t a) const {
    if (a == 0) throw std::domain_error("FqField: log of zero");
    return log_[a];
  }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

 private:
  std::vector<uint32_t> modulus_;  // monic degree-k poly over F_p, ascending coeffs
  std::vector<uint32_t> exp_, log_, pow_p_;
  uint32_t gen_ = 0;

  uint32_t raw_mul(uint32_t a, uint32_t b) const;  // table-free, used during setup
};

// Exact image size of a map F_q -> F_q given by a callable on indices.
template <class F>
int image_size_enum(const FqField& f, F&& phi) {
  std::vector<char> seen(f.q, 0);
  int n = 0;
  for (uint32_t t = 0; t < f.q; ++t) {
    uint32_t y = phi(t);
    if (!seen[y]) {
      seen[y] = 1;
      ++n;
    }
  }
  return n;
}

bool is_prime_u32(uint32_t n);

}  // namespace uconj
