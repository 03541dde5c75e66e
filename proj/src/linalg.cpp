#include "alcove/linalg.hpp"

#include <stdexcept>

namespace alcove {

int rank(RatMat m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return std::nullopt;
  int cols = static_cast<int>(a[0].size());
  RatMat m(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat inv = m[r][c];
    for (int j = c; j <= cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;  // underdetermined
  for (int i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;  // inconsistent
  RatVec x(cols);
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = m[k][cols];
  return x;
}

// Dense tableau simplex on the standard form obtained by splitting the free
// variables and adding one slack per row.  b >= 0 means the slack basis is
// feasible, so no phase 1 is required.
LpResult lp_max(const RatMat& a, const RatVec& b, const RatVec& c) {
  int m = static_cast<int>(a.size());
  int d = static_cast<int>(c.size());
  for (const Rat& bi : b)
    if (bi.sign() < 0) throw std::logic_error("lp_max: rhs must be nonnegative");
  int nv = 2 * d + m;  // u, v, slacks
  RatMat t(m, RatVec(nv + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      t[i][j] = a[i][j];
      t[i][d + j] = -a[i][j];
    }
    t[i][2 * d + i] = Rat(1);
    t[i][nv] = b[i];
  }
  RatVec obj(nv + 1);
  for (int j = 0; j < d; ++j) {
    obj[j] = c[j];
    obj[d + j] = -c[j];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * d + i;

  // Reduced cost row: obj minus contributions of basic variables (initially
  // slacks with zero cost, so obj is already reduced).
  for (;;) {
    int enter = -1;
    for (int j = 0; j < nv; ++j)
      if (obj[j].sign() > 0) {
        enter = j;  // Bland: smallest index
        break;
      }
    if (enter < 0) {
      return {LpStatus::Optimal, -obj[nv]};
    }
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rat ratio = t[i][nv] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return {LpStatus::Unbounded, Rat(0)};
    // Pivot.
    Rat piv = t[leave][enter];
    for (int j = 0; j <= nv; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= nv; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!obj[enter].is_zero()) {
      Rat f = obj[enter];
      for (int j = 0; j <= nv; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

}  // namespace alcove
