#pragma once

#include "bsg/complex.hpp"
#include "bsg/types.hpp"

#include <utility>
#include <vector>

namespace bsg {

/// Invariant factors d1 | d2 | ... | dr (all positive, r = rank) of a dense
/// matrix over a Euclidean scalar. Pivoting picks the entry of smallest
/// absolute value to limit coefficient growth.
template <typename Scalar>
std::vector<Scalar> smith_invariant_factors(MatrixX<Scalar> M) {
  using std::abs;
  std::vector<Scalar> factors;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block.
      Eigen::Index pi = -1, pj = -1;
      Scalar best = 0;
      for (Eigen::Index j = t; j < cols; ++j)
        for (Eigen::Index i = t; i < rows; ++i)
          if (M(i, j) != 0 && (pi < 0 || abs(M(i, j)) < best)) {
            best = abs(M(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) return factors;
      M.row(t).swap(M.row(pi));
      M.col(t).swap(M.col(pj));
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (M(i, t) == 0) continue;
        const Scalar q = M(i, t) / M(t, t);
        M.row(i) -= q * M.row(t);
        if (M(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (M(t, j) == 0) continue;
        const Scalar q = M(t, j) / M(t, t);
        M.col(j) -= q * M.col(t);
        if (M(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (M(i, j) % M(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      M.row(t) += M.row(bad);
    }
    factors.push_back(abs(M(t, t)));
  }
  return factors;
}

/// Invariant factors of an integer matrix.
std::vector<Integer> smith_normal_form(const IntegerMatrix& M);

/// Column-major sparse integer matrix; boundary operators are stored this way.
struct SparseIntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> columns;

  IntegerMatrix to_dense() const;
};

/// Rank over the rationals and invariant factors > 1.
struct IntegerReduction {
  int rank = 0;
  std::vector<Integer> torsion;
};

/// Unit-pivot sparse elimination followed by a dense Smith normal form of the
/// residual block. Entries are kept in 64 bits until an overflow is detected,
/// at which point the reduction restarts with arbitrary precision.
IntegerReduction reduce_integer(const SparseIntegerMatrix& M);
int rank_mod2(const SparseIntegerMatrix& M);

/// boundaries[k] maps C_k to C_{k-1}; boundaries[0] is the zero map.
struct ChainComplex {
  std::vector<int> cell_counts;
  std::vector<SparseIntegerMatrix> boundaries;

  int dimension() const { return static_cast<int>(cell_counts.size()) - 1; }
};

ChainComplex chain_complex(const FaceIndex& faces);
ChainComplex chain_complex(const SimplicialComplex& K);

struct BettiProfile {
  Ring ring = Ring::Z;
  Variant variant = Variant::Homology;
  std::vector<int> betti;
  std::vector<std::vector<Integer>> torsion;

  bool operator==(const BettiProfile&) const = default;
  /// Betti numbers and torsion padded with zeros up to `degrees` entries.
  BettiProfile padded(int degrees) const;
  long alternating_sum() const;
  bool acyclic() const;
};

BettiProfile homology(const ChainComplex& C, Ring ring, Variant variant = Variant::Homology);
BettiProfile homology(const SimplicialComplex& K, Ring ring, Variant variant = Variant::Homology);

/// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;

  bool operator==(const GroupPresentation&) const = default;
};

/// Edge-path group of the 2-skeleton: generators are edges outside a
/// breadth-first spanning tree rooted at `base` (neighbors visited in index
/// order), relators come from triangles.
GroupPresentation pi1_presentation(const FaceIndex& faces, Vertex base);
GroupPresentation pi1_presentation(const SimplicialComplex& K, Vertex base);
/// Free group on the non-tree edges of a connected multigraph (loops allowed).
GroupPresentation pi1_presentation(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                   int base);

Word free_reduce(const Word& w);
GroupPresentation tietze_simplify(GroupPresentation P, int budget = 10000);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup abelianization(const GroupPresentation& P);

}  // namespace bsg
