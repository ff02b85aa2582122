#pragma once

#include "bsg/geometry.hpp"
#include "bsg/plmap.hpp"

#include <array>
#include <numeric>
#include <vector>

namespace bsg::detail {

struct IPoint {
  long long x = 0, y = 0;
};

struct IBox {
  IPoint lo, hi;
  bool intersects(const IBox& o) const {
    return !(hi.x < o.lo.x || o.hi.x < lo.x || hi.y < o.lo.y || o.hi.y < lo.y);
  }
};

/// Exact intersection tests between simplex images and convex query sets.
/// Planar coordinates are scaled to a common integer grid when they fit in
/// 59 bits, so that all products fit in 128 bits; otherwise the rational
/// predicates are used.
class Slicer {
 public:
  struct Query {
    int dim = 0;  // affine dimension of the query set
    std::vector<IPoint> ipts;
    std::vector<Point2> rpts;
    IBox ibox;
    Rational lo, hi;  // scalar maps
  };

  /// `coords` lists every query coordinate that will be used, so the scale
  /// covers them.
  Slicer(const PLMap& F, const std::vector<Rational>& coords);

  int target_dim() const { return m_; }
  const FaceIndex& faces() const { return faces_; }
  bool integral() const { return integral_; }

  /// Rows of `rows` are points of the target.
  Query make_query(const ValueMatrix& rows) const;
  bool meets(int d, int id, const Query& q) const;
  /// Simplices whose image meets the query, per dimension (sorted ids).
  std::vector<std::vector<int>> meeting(const Query& q) const;
  /// Image bounding box of a face in scaled coordinates (integral mode).
  const IBox& box(int d, int id) const { return boxes_[d][id]; }
  IPoint scaled(const Point2& p) const;

 private:
  const PLMap& F_;
  const FaceIndex& faces_;
  int m_;
  bool integral_ = false;
  Integer scale_ = 1;
  std::vector<IPoint> ipts_;
  std::vector<std::vector<IBox>> boxes_;
  std::vector<std::vector<std::array<Rational, 2>>> ranges_;  // scalar maps: min, max
};

bool hulls_meet(const std::vector<IPoint>& P, const std::vector<IPoint>& Q);

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Connected components of an upward closed family of faces, joined along
/// the coface relation. Input and output cells are (dimension, id).
std::vector<std::vector<std::pair<int, int>>> upward_components(const FaceIndex& faces,
                                                                const std::vector<std::vector<int>>& members);

/// Homology of the order complex of a family of faces (ordered by
/// inclusion), which is homotopy equivalent to the preimage it indexes.
BettiProfile order_complex_homology(const FaceIndex& faces, const std::vector<std::pair<int, int>>& cells);

}  // namespace bsg::detail
