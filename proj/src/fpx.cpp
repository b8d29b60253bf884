#include "uconj/fpx.hpp"

#include <stdexcept>

namespace uconj {

std::vector<FpxPoly> fpx_smith_diagonal(std::vector<std::vector<FpxPoly>> M, uint32_t p) {
  int rows = int(M.size());
  int cols = rows ? int(M[0].size()) : 0;
  std::vector<FpxPoly> diag;
  int t = 0;
  int guard = 0;
  while (t < rows && t < cols) {
    if (++guard > 10000) throw std::logic_error("fpx_smith_diagonal: no convergence");
    // pivot: nonzero entry of least degree in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (!M[i][j].is_zero() && (pi < 0 || M[i][j].deg() < M[pi][pj].deg())) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(M[pi], M[t]);
    for (int i = 0; i < rows; ++i) std::swap(M[i][pj], M[i][t]);

    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (M[i][t].is_zero()) continue;
      FpxPoly q, r;
      M[i][t].divmod(M[t][t], q, r);
      for (int j = t; j < cols; ++j) M[i][j] = M[i][j].sub(q.mul(M[t][j]));
      if (!M[i][t].is_zero()) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (M[t][j].is_zero()) continue;
      FpxPoly q, r;
      M[t][j].divmod(M[t][t], q, r);
      for (int i = t; i < rows; ++i) M[i][j] = M[i][j].sub(q.mul(M[i][t]));
      if (!M[t][j].is_zero()) dirty = true;
    }
    if (dirty) continue;
    // divisibility of the remaining block by the pivot
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j) {
        if (M[i][j].is_zero()) continue;
        if (!M[i][j].mod(M[t][t]).is_zero()) {
          for (int jj = t; jj < cols; ++jj) M[t][jj] = M[t][jj].add(M[i][jj]);
          fixed = false;
        }
      }
    if (!fixed) continue;
    diag.push_back(M[t][t]);
    ++t;
  }
  (void)p;
  return diag;
}

}  // namespace uconj
