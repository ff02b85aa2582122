#pragma once

#include "bsg/algebra.hpp"

#include <algorithm>
#include <vector>

// Brute-force references shared by the unit tests and the acceptance run.

namespace bsg::oracle {

// Determinant by cofactor expansion, independent of any elimination.
inline Integer det_laplace(const IntegerMatrix& M) {
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Integer total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (M(0, j) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = M(r, c);
    const Integer term = M(0, j) * det_laplace(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// d_k = g_k / g_{k-1}, g_k the gcd of all k x k minors.
inline std::vector<Integer> minor_gcd_factors(const IntegerMatrix& M) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (int k = 1; k <= std::min(M.rows(), M.cols()); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(static_cast<int>(M.rows()), k, 0, cur, rs);
    subsets(static_cast<int>(M.cols()), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntegerMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = M(r[i], c[j]);
        g = gcd(g, abs(det_laplace(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace bsg::oracle
