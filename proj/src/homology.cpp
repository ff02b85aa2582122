#include "bsg/algebra.hpp"

namespace bsg {

ChainComplex chain_complex(const FaceIndex& faces) {
  ChainComplex C;
  const int dim = faces.dimension();
  for (int k = 0; k <= dim; ++k) {
    C.cell_counts.push_back(faces.count(k));
    SparseIntegerMatrix B;
    B.rows = k == 0 ? 0 : faces.count(k - 1);
    B.cols = faces.count(k);
    B.columns.resize(B.cols);
    if (k > 0) {
      for (int j = 0; j < B.cols; ++j) {
        const auto sub = faces.facets_of(k, j);
        for (std::size_t i = 0; i < sub.size(); ++i)
          B.columns[j].emplace_back(sub[i], i % 2 == 0 ? 1 : -1);
      }
    }
    C.boundaries.push_back(std::move(B));
  }
  return C;
}

ChainComplex chain_complex(const SimplicialComplex& K) { return chain_complex(K.faces()); }

BettiProfile BettiProfile::padded(int degrees) const {
  BettiProfile out = *this;
  if (static_cast<int>(out.betti.size()) < degrees) {
    out.betti.resize(degrees, 0);
    out.torsion.resize(degrees);
  }
  return out;
}

long BettiProfile::alternating_sum() const {
  long s = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * betti[k];
  return s;
}

bool BettiProfile::acyclic() const {
  if (betti.empty() || betti[0] != 1) return false;
  for (std::size_t k = 1; k < betti.size(); ++k)
    if (betti[k] != 0) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

BettiProfile homology(const ChainComplex& C, Ring ring, Variant variant) {
  BettiProfile out;
  out.ring = ring;
  out.variant = variant;
  const int dim = C.dimension();
  if (dim < 0) return out;
  std::vector<int> rank(dim + 2, 0);
  std::vector<std::vector<Integer>> torsion(dim + 2);
  for (int k = 1; k <= dim; ++k) {
    if (ring == Ring::Z) {
      auto red = reduce_integer(C.boundaries[k]);
      rank[k] = red.rank;
      torsion[k] = std::move(red.torsion);
    } else {
      rank[k] = rank_mod2(C.boundaries[k]);
    }
  }
  out.betti.resize(dim + 1);
  out.torsion.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    out.betti[k] = C.cell_counts[k] - rank[k] - rank[k + 1];
    if (ring != Ring::Z) continue;
    // Torsion of H_k comes from the image of d_{k+1}; for cohomology the
    // universal coefficient theorem moves it up one degree.
    if (variant == Variant::Homology) out.torsion[k] = torsion[k + 1];
    else out.torsion[k] = torsion[k];
  }
  return out;
}

BettiProfile homology(const SimplicialComplex& K, Ring ring, Variant variant) {
  return homology(chain_complex(K), ring, variant);
}

}  // namespace bsg
