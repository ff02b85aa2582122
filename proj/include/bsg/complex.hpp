#pragma once

#include "bsg/types.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bsg {

/// Closure of a set of simplices, with faces enumerated per dimension in
/// lexicographic order and codimension-1 coface lists.
class FaceIndex {
 public:
  FaceIndex() = default;
  explicit FaceIndex(const std::vector<Simplex>& generators);

  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  int count(int d) const;
  const std::vector<Simplex>& faces(int d) const { return faces_.at(d); }
  int id(const Simplex& s) const;
  /// Ids of the (d+1)-faces containing face `id` of dimension d.
  const std::vector<int>& cofacets(int d, int id) const { return cofacets_.at(d).at(id); }
  /// Ids of the (d-1)-faces of face `id` of dimension d, in the order of the
  /// omitted vertex (index i omits vertex i).
  std::vector<int> facets_of(int d, int id) const;
  long euler_characteristic() const;

 private:
  std::vector<std::vector<Simplex>> faces_;
  std::vector<std::map<Simplex, int>> ids_;
  std::vector<std::vector<std::vector<int>>> cofacets_;
};

/// Pure finite simplicial complex given by its facets. Vertex indices are
/// bounded by vertex_count(); indices not referenced by any facet are not
/// part of the complex.
class SimplicialComplex {
 public:
  SimplicialComplex();

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return dimension_; }
  bool empty() const { return facets_.empty(); }
  const std::vector<Simplex>& facets() const { return facets_; }
  /// +1/-1 per canonical facet: parity of the sort that canonicalized the
  /// input tuple.
  const std::vector<int>& facet_orientations() const { return orientations_; }
  const std::map<int, std::string>& labels() const { return labels_; }
  const FaceIndex& faces() const { return *faces_; }

  std::vector<Vertex> vertices() const;
  long euler_characteristic() const { return faces_->euler_characteristic(); }
  /// Link of a face, keeping the ambient vertex numbering. Empty when `face`
  /// is a facet or not a face.
  SimplicialComplex link(const Simplex& face) const;
  /// Closed star of a vertex: facets containing it.
  std::vector<Simplex> star_facets(Vertex v) const;

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && facets_ == other.facets_;
  }

  friend SimplicialComplex build_from_facets(const std::vector<Simplex>& facets, int vertex_count,
                                             std::map<int, std::string> labels);
  friend SimplicialComplex make_complex_unchecked(std::vector<Simplex> facets, int vertex_count);

 private:
  int vertex_count_ = 0;
  int dimension_ = -1;
  std::vector<Simplex> facets_;
  std::vector<int> orientations_;
  std::map<int, std::string> labels_;
  std::shared_ptr<const FaceIndex> faces_;
};

/// Validates and canonicalizes a facet list. vertex_count < 0 means
/// "one more than the largest index used".
SimplicialComplex build_from_facets(const std::vector<Simplex>& facets, int vertex_count = -1,
                                    std::map<int, std::string> labels = {});
/// Facets already canonical and pure; used internally for links and
/// boundaries, which may be empty.
SimplicialComplex make_complex_unchecked(std::vector<Simplex> facets, int vertex_count);

struct BoundaryData {
  std::vector<Simplex> boundary_facets;
  bool is_closed = true;
};

BoundaryData boundary_data(const SimplicialComplex& K);
bool is_pseudo_manifold(const SimplicialComplex& K);
SimplicialComplex boundary_subcomplex(const SimplicialComplex& K);

struct ManifoldReport {
  bool is_pseudo_manifold = false;
  bool is_manifold_with_boundary = false;
  /// Link recognition is only complete up to dimension 3.
  bool partial = false;
  std::vector<Simplex> failing_faces;
  bool connected = false;
  std::optional<bool> orientable;
};

ManifoldReport validate_manifold(const SimplicialComplex& K);
bool is_connected(const SimplicialComplex& K);
/// Breadth-first coherent orientation; nullopt for non-pseudo-manifolds.
std::optional<bool> is_orientable(const SimplicialComplex& K);

// Generators ---------------------------------------------------------------

enum class GeneratorKind { Disk, Sphere, SolidTorus, TwistedSolidTorus, TorusSurface, Prism };

struct Generator {
  GeneratorKind kind = GeneratorKind::Disk;
  /// Disk / sphere dimension.
  int dim = 2;
  /// Circle segments (solid tori, torus surface) or prism layers.
  int res = 8;
};

/// A generated complex together with the coordinates its canonical maps
/// are built from. Column meaning depends on the kind:
///   disk/sphere: round embedding (x, y, z);
///   solid tori: (u, v, k) with (u, v) on the cross-section disk, k the
///     circle slice index;
///   torus surface: (i, j) grid indices; prism: (t, s) corner and layer.
struct Triangulation {
  SimplicialComplex complex;
  ValueMatrix coords;
};

Triangulation triangulate(const Generator& g);
SimplicialComplex generate(const Generator& g);

/// Number of vertices of the solid-torus cross-section disk (center plus a
/// hexagon symmetric under v -> -v).
inline constexpr int kSectionVertices = 7;
/// Disk vertex of the cross-section at polygon angle 60*j degrees, j in [0, 6).
inline constexpr int section_rim(int j) { return 1 + j; }
/// Global vertex id of cross-section vertex `j` on slice `k` (k < res).
inline constexpr int solid_torus_vertex(int j, int k) { return k * kSectionVertices + j; }

struct SumResult {
  SimplicialComplex complex;
  /// New index of each vertex of the second summand.
  std::vector<Vertex> second_vertex_map;
  /// Present when a barycentric subdivision had to be applied first.
  bool subdivided = false;
};

/// Glue along boundary facets `fa` of A and `fb` of B, identifying fa[i]
/// with fb[i] (order as given, not sorted).
SumResult boundary_connected_sum(const SimplicialComplex& A, const Simplex& fa,
                                 const SimplicialComplex& B, const Simplex& fb);
/// Glue along the lexicographically first boundary facet of each summand.
SimplicialComplex boundary_connected_sum(const SimplicialComplex& A, const SimplicialComplex& B);

struct Subdivision {
  SimplicialComplex complex;
  /// The face of the original complex each new vertex is the barycenter of.
  std::vector<Simplex> vertex_faces;
};

Subdivision barycentric_subdivision(const SimplicialComplex& K);

}  // namespace bsg
