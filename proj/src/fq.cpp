#include "uconj/fq.hpp"

#include <algorithm>

namespace uconj {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// helpers on polynomials over F_p, ascending coefficients
using Poly = std::vector<uint32_t>;

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  while (a.size() >= m.size()) {
    uint32_t lead = a.back();
    if (lead == 0) {
      a.pop_back();
      continue;
    }
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = (uint64_t)m[i] * lead % p;
      a[i + shift] = uint32_t((a[i + shift] + p - sub) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = uint32_t((r[i + j] + (uint64_t)a[i] * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

bool divides(const Poly& d, Poly a, uint32_t p) {
  // monic d
  return poly_mod(std::move(a), d, p).empty();
}

bool is_irreducible(const Poly& m, uint32_t p) {
  // trial division by all monic polynomials of degree 1..deg/2
  uint32_t deg = uint32_t(m.size()) - 1;
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly f(d + 1, 0);
      uint64_t x = idx;
      for (uint32_t i = 0; i < d; ++i) {
        f[i] = uint32_t(x % p);
        x /= p;
      }
      f[d] = 1;
      if (divides(f, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

uint32_t FqField::raw_mul(uint32_t a, uint32_t b) const {
  Poly pa, pb;
  uint32_t x = a;
  for (uint32_t i = 0; i < k; ++i) {
    pa.push_back(x % p);
    x /= p;
  }
  x = b;
  for (uint32_t i = 0; i < k; ++i) {
    pb.push_back(x % p);
    x /= p;
  }
  while (!pa.empty() && pa.back() == 0) pa.pop_back();
  while (!pb.empty() && pb.back() == 0) pb.pop_back();
  Poly m(modulus_.begin(), modulus_.end());
  Poly r = poly_mulmod(pa, pb, m, p);
  uint32_t out = 0, mul = 1;
  for (uint32_t i = 0; i < k; ++i) {
    out += (i < r.size() ? r[i] : 0) * mul;
    mul *= p;
  }
  return out;
}

FqField::FqField(uint32_t p_, uint32_t k_) : p(p_), k(k_) {
  if (!is_prime_u32(p)) throw std::invalid_argument("FqField: p is not prime");
  if (k < 1) throw std::invalid_argument("FqField: k < 1");
  uint64_t qq = 1;
  for (uint32_t i = 0; i < k; ++i) qq *= p;
  if (qq > (1u << 20)) throw std::invalid_argument("FqField: q too large");
  q = uint32_t(qq);

  pow_p_.resize(k);
  pow_p_[0] = 1;
  for (uint32_t i = 1; i < k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  // least irreducible monic modulus in lexicographic coefficient order
  if (k == 1) {
    modulus_ = {0, 1};  // x (unused)
  } else {
    uint64_t count = qq;  // p^k choices of lower coefficients
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly m(k + 1, 0);
      uint64_t x = idx;
      for (uint32_t i = 0; i < k; ++i) {
        m[i] = uint32_t(x % p);
        x /= p;
      }
      m[k] = 1;
      if (m[0] == 0) continue;  // reducible: x divides
      if (is_irreducible(m, p)) {
        modulus_.assign(m.begin(), m.end());
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("FqField: no irreducible modulus found");
  }

  // discrete-log tables from the least primitive element
  log_.assign(q, 0);
  exp_.assign(q - 1, 0);
  for (uint32_t g = 1; g < q; ++g) {
    if (k == 1 && g == 1 && q > 2) continue;
    uint32_t x = 1;
    uint32_t order = 0;
    bool ok = true;
    std::vector<char> seen(q, 0);
    for (;;) {
      if (seen[x]) {
        ok = false;
        break;
      }
      seen[x] = 1;
      ++order;
      uint32_t nx = (k == 1) ? uint32_t((uint64_t)x * g % p) : raw_mul(x, g);
      if (nx == 1) break;
      x = nx;
    }
    if (ok && order == q - 1) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) {
    if (q == 2)
      gen_ = 1;
    else
      throw std::logic_error("FqField: no generator found");
  }
  uint32_t x = 1;
  for (uint32_t e = 0; e < q - 1; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = (k == 1) ? uint32_t((uint64_t)x * gen_ % p) : raw_mul(x, gen_);
  }
}

}  // namespace uconj
