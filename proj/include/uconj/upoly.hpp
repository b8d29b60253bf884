#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uconj/rational.hpp"

namespace uconj {

// Integer-coefficient polynomial in v = q - 1, ascending powers.
struct VPoly {
  std::vector<long long> c;  // c[i] is the coefficient of v^i

  VPoly() = default;
  VPoly(std::initializer_list<long long> init) : c(init) { trim(); }
  static VPoly constant(long long k) {
    VPoly p;
    if (k) p.c = {k};
    return p;
  }
  static VPoly v() { return VPoly{0, 1}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return c.empty() ? -1 : int(c.size()) - 1; }

  VPoly operator+(const VPoly& o) const {
    VPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }
  VPoly operator-(const VPoly& o) const {
    VPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
  }
  VPoly operator*(const VPoly& o) const {
    if (is_zero() || o.is_zero()) return VPoly();
    VPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) {
        long long prod;
        if (__builtin_mul_overflow(c[i], o.c[j], &prod)) throw std::overflow_error("VPoly overflow");
        r.c[i + j] += prod;
      }
    r.trim();
    return r;
  }
  bool operator==(const VPoly& o) const { return c == o.c; }
  bool operator!=(const VPoly& o) const { return !(*this == o); }

  long long eval(long long v) const {
    long long r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * v + c[i];
    return r;
  }
  long long eval_at_q(long long q) const { return eval(q - 1); }

  // q = v + 1 raised to the e-th power
  static VPoly q_power(int e) {
    VPoly r = constant(1);
    VPoly q{1, 1};
    for (int i = 0; i < e; ++i) r = r * q;
    return r;
  }

  // Readable form in descending powers, e.g. "2v^4+19v^3+25v^2+9v+1".
  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = int(c.size()) - 1; i >= 0; --i) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += c[i] > 0 ? "+" : "";
      long long k = c[i];
      if (i == 0) {
        s += std::to_string(k);
        continue;
      }
      if (k == -1)
        s += "-";
      else if (k != 1)
        s += std::to_string(k);
      s += "v";
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }
};

// Least-degree exact interpolation through (q_i, k_i), as a polynomial in
// v = q - 1.  Throws if the points do not lie on an integer polynomial.
inline VPoly fit_polynomial(const std::vector<std::pair<long long, long long>>& points) {
  if (points.empty()) throw std::invalid_argument("fit_polynomial: no data");
  size_t n = points.size();
  // Newton divided differences over v
  std::vector<Rat> x(n), coef(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = Rat(points[i].first - 1);
    coef[i] = Rat(points[i].second);
  }
  // standard triangular scheme
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (x[i] - x[i - level]);
      if (i == level) break;
    }
  // expand Newton form
  std::vector<Rat> poly{coef[0]};
  std::vector<Rat> basis{Rat(1)};
  for (size_t i = 1; i < n; ++i) {
    // basis *= (v - x[i-1])
    std::vector<Rat> nb(basis.size() + 1, Rat(0));
    for (size_t k = 0; k < basis.size(); ++k) {
      nb[k] = nb[k] - basis[k] * x[i - 1];
      nb[k + 1] = nb[k + 1] + basis[k];
    }
    basis = nb;
    if (poly.size() < basis.size()) poly.resize(basis.size(), Rat(0));
    for (size_t k = 0; k < basis.size(); ++k) poly[k] = poly[k] + basis[k] * coef[i];
  }
  VPoly r;
  for (auto& q : poly) {
    if (!q.is_integer()) throw std::domain_error("fit_polynomial: non-integer coefficients");
    r.c.push_back(q.num);
  }
  r.trim();
  for (auto& [q, k] : points)
    if (r.eval_at_q(q) != k) throw std::domain_error("fit_polynomial: inexact fit");
  return r;
}

}  // namespace uconj
