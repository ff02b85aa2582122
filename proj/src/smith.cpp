#include "bsg/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bsg {

std::vector<Integer> smith_normal_form(const IntegerMatrix& M) { return smith_invariant_factors<Integer>(M); }

IntegerMatrix SparseIntegerMatrix::to_dense() const {
  IntegerMatrix D = IntegerMatrix::Zero(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) D(i, j) = v;
  return D;
}

namespace {

struct Overflow {};

long long checked_sub_mul(long long a, long long q, long long b) {
  long long prod, out;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
Integer checked_sub_mul(const Integer& a, const Integer& q, const Integer& b) { return a - q * b; }

template <typename Scalar>
IntegerReduction reduce_sparse(const SparseIntegerMatrix& M) {
  using Column = std::map<int, Scalar>;
  std::vector<Column> cols(M.cols);
  std::vector<std::set<int>> rows(M.rows);
  for (int j = 0; j < M.cols; ++j)
    for (auto [i, v] : M.columns[j])
      if (v != 0) {
        cols[j][i] = Scalar(v);
        rows[i].insert(j);
      }
  std::vector<bool> col_alive(M.cols, true), row_alive(M.rows, true);
  IntegerReduction out;

  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < M.cols; ++c) {
      if (!col_alive[c] || cols[c].empty()) continue;
      // Unit entry whose row is shortest.
      int r = -1;
      std::size_t best = 0;
      for (const auto& [i, v] : cols[c])
        if ((v == 1 || v == -1) && (r < 0 || rows[i].size() < best)) {
          r = i;
          best = rows[i].size();
        }
      if (r < 0) continue;
      const Scalar p = cols[c].at(r);
      const std::vector<int> others(rows[r].begin(), rows[r].end());
      for (int j : others) {
        if (j == c) continue;
        const Scalar q = cols[j].at(r) * p;  // p = +-1, so p^-1 = p
        for (const auto& [i, v] : cols[c]) {
          auto it = cols[j].find(i);
          const Scalar cur = it == cols[j].end() ? Scalar(0) : it->second;
          const Scalar next = checked_sub_mul(cur, q, v);
          if (next == 0) {
            if (it != cols[j].end()) cols[j].erase(it);
            rows[i].erase(j);
          } else {
            cols[j][i] = next;
            rows[i].insert(j);
          }
        }
      }
      for (const auto& [i, v] : cols[c]) rows[i].erase(c);
      cols[c].clear();
      col_alive[c] = false;
      row_alive[r] = false;
      ++out.rank;
      progress = true;
    }
  }

  // Dense residual.
  std::vector<int> live_rows, live_cols;
  for (int i = 0; i < M.rows; ++i)
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  for (int j = 0; j < M.cols; ++j)
    if (col_alive[j] && !cols[j].empty()) live_cols.push_back(j);
  if (live_rows.empty() || live_cols.empty()) return out;
  IntegerMatrix R = IntegerMatrix::Zero(live_rows.size(), live_cols.size());
  std::map<int, int> row_pos;
  for (std::size_t k = 0; k < live_rows.size(); ++k) row_pos[live_rows[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < live_cols.size(); ++k)
    for (const auto& [i, v] : cols[live_cols[k]]) R(row_pos.at(i), k) = Integer(v);
  for (const auto& d : smith_normal_form(R)) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace

IntegerReduction reduce_integer(const SparseIntegerMatrix& M) {
  try {
    return reduce_sparse<long long>(M);
  } catch (const Overflow&) {
    return reduce_sparse<Integer>(M);
  }
}

int rank_mod2(const SparseIntegerMatrix& M) {
  // Standard column reduction over GF(2), columns as sorted row lists.
  std::vector<int> pivot_of_row(M.rows, -1);
  std::vector<std::vector<int>> reduced(M.cols);
  int rank = 0;
  for (int j = 0; j < M.cols; ++j) {
    std::vector<int> col;
    for (auto [i, v] : M.columns[j])
      if (v % 2 != 0) col.push_back(i);
    std::sort(col.begin(), col.end());
    while (!col.empty() && pivot_of_row[col.back()] >= 0) {
      const auto& other = reduced[pivot_of_row[col.back()]];
      std::vector<int> sum;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(sum));
      col.swap(sum);
    }
    if (!col.empty()) {
      pivot_of_row[col.back()] = j;
      reduced[j] = std::move(col);
      ++rank;
    }
  }
  return rank;
}

}  // namespace bsg
