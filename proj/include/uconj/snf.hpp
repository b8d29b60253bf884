#pragma once

#include <cstdint>
#include <vector>

namespace uconj {

using IMat = std::vector<std::vector<long long>>;

struct SnfResult {
  IMat D;  // diagonal, d_1 | d_2 | ..., nonnegative
  IMat U;  // unimodular row transform
  IMat V;  // unimodular column transform, U*M*V = D
};

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
bool imat_equal(const IMat& a, const IMat& b);
long long imat_det(IMat a);  // small matrices only

// Smith normal form over the integers with transformation certificate.
SnfResult smith_normal_form(const IMat& M);

// All diagonal entries equal to 1 on every row (rank = row count, all ones).
bool snf_all_unit_rows(const SnfResult& s, int rows);

}  // namespace uconj
