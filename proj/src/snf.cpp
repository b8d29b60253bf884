#include "uconj/snf.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace uconj {

IMat imat_identity(int n) {
  IMat I(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  int n = int(a.size()), m = int(b[0].size()), k = int(b.size());
  IMat r(n, std::vector<long long>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

bool imat_equal(const IMat& a, const IMat& b) { return a == b; }

long long imat_det(IMat a) {
  int n = int(a.size());
  // fraction-free Gaussian elimination (Bareiss)
  long long prev = 1;
  long long sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r)
      for (int c = col + 1; c < n; ++c)
        a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
    prev = a[col][col];
  }
  return sign * a[n - 1][n - 1];
}

SnfResult smith_normal_form(const IMat& M) {
  int rows = int(M.size());
  int cols = rows ? int(M[0].size()) : 0;
  SnfResult s;
  s.D = M;
  s.U = imat_identity(rows);
  s.V = imat_identity(cols);
  auto& D = s.D;
  auto& U = s.U;
  auto& V = s.V;

  auto row_op = [&](int dst, int src, long long f) {  // row dst -= f * row src
    for (int j = 0; j < cols; ++j) D[dst][j] -= f * D[src][j];
    for (int j = 0; j < rows; ++j) U[dst][j] -= f * U[src][j];
  };
  auto col_op = [&](int dst, int src, long long f) {  // col dst -= f * col src
    for (int i = 0; i < rows; ++i) D[i][dst] -= f * D[i][src];
    for (int i = 0; i < cols; ++i) V[i][dst] -= f * V[i][src];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(D[a], D[b]);
    std::swap(U[a], U[b]);
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(D[i][a], D[i][b]);
    for (int i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
  };
  auto row_negate = [&](int r) {
    for (int j = 0; j < cols; ++j) D[r][j] = -D[r][j];
    for (int j = 0; j < rows; ++j) U[r][j] = -U[r][j];
  };

  int t = 0;
  while (t < rows && t < cols) {
    // find nonzero pivot in the lower-right block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (D[i][j] != 0 && (pi < 0 || std::llabs(D[i][j]) < best)) {
          pi = i;
          pj = j;
          best = std::llabs(D[i][j]);
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (D[t][t] < 0) row_negate(t);

    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (D[i][t] == 0) continue;
      long long f = D[i][t] / D[t][t];
      row_op(i, t, f);
      if (D[i][t] != 0) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (D[t][j] == 0) continue;
      long long f = D[t][j] / D[t][t];
      col_op(j, t, f);
      if (D[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainder appeared; redo pivot choice

    // divisibility: D[t][t] must divide every later entry
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (D[i][j] % D[t][t] != 0) {
          // add row i to row t, restart this pivot
          row_op(t, i, -1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  return s;
}

bool snf_all_unit_rows(const SnfResult& s, int rows) {
  for (int i = 0; i < rows; ++i) {
    if (i >= int(s.D.size())) return false;
    if (i >= int(s.D[i].size())) return false;
    if (s.D[i][i] != 1) return false;
  }
  return true;
}

}  // namespace uconj
