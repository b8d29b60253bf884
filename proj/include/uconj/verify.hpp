#pragma once

#include <string>
#include <vector>

#include "uconj/analyzer.hpp"
#include "uconj/brute.hpp"
#include "uconj/fq.hpp"

namespace uconj {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> errors;
  uint64_t classes_checked = 0;

  void fail(const std::string& msg) {
    ok = false;
    if (errors.size() < 40) errors.push_back(msg);
  }
  std::string summary() const;
};

// Per-root torus scaling factors realizing a_j = tau_j on the normalized set.
// Solvable because the normalized set's root matrix has all-unit Smith form.
std::vector<uint32_t> torus_scalings(const RootSystem& rs, const FqField& f,
                                     const std::vector<int>& normalized,
                                     const std::vector<uint32_t>& taus);

// Instantiates every analyzed branch at the given q, expands nothing twice:
// representatives must hit pairwise-distinct classes, branch counts must equal
// the size polynomials at v = q-1, centralizer orders must equal m q^e, and
// the classes must cover U(q) exactly.
VerifyReport verify_families(const RootSystem& rs, const TypeAnalysis& ta, const FqField& f);

// k(U) totals against the published polynomial at each q, plus the golden
// family-table comparison for the rank <= 3 types.
VerifyReport verify_tables(const RootSystem& rs, uint32_t p, const std::vector<uint32_t>& qs);

}  // namespace uconj
