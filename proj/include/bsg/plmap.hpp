#pragma once

#include "bsg/algebra.hpp"
#include "bsg/complex.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bsg {

/// A map to R or R^2 given by its vertex values and extended affinely over
/// every simplex. Row v of `values` is the image of vertex v.
struct PLMap {
  std::shared_ptr<const SimplicialComplex> domain;
  ValueMatrix values;

  int target_dim() const { return static_cast<int>(values.cols()); }
  const Rational& value(Vertex v) const { return values(v, 0); }
  Point2 point(Vertex v) const { return Point2(values(v, 0), values(v, 1)); }
  std::vector<Point2> image(const Simplex& s) const;
};

PLMap make_map(SimplicialComplex K, ValueMatrix values);

enum class MapKind {
  HeightDisk,
  ProductSolidTorus,
  TwistedMap,
  SumMap,
  // Negative controls.
  SaddleControl,
  TorusHeight,
  SolidTorusHeight,
  DiskProjection,  // ball projected to its first two coordinates
};

const char* to_string(MapKind kind);
std::optional<MapKind> map_kind_from_string(const std::string& name);

struct MapSpec {
  MapKind kind = MapKind::HeightDisk;
  /// Disk dimension for HeightDisk.
  int dim = 2;
  /// Circle resolution for the solid tori and the torus surface.
  int res = 8;
  /// Numbers of untwisted and twisted summands for SumMap.
  int r = 1;
  int rp = 0;
};

/// Domain the construction lives on.
SimplicialComplex canonical_domain(const MapSpec& spec);
/// The canonical map of `spec`, made generic with `seed`.
PLMap canonical_map(const MapSpec& spec, std::uint64_t seed = 1);
/// Same, on a given complex; KindMismatch if K is not the expected domain.
PLMap canonical_map(const MapSpec& spec, const SimplicialComplex& K, std::uint64_t seed = 1);
/// The boundary vertex made into a saddle by the SaddleControl map.
Vertex saddle_control_vertex();

// Genericity -----------------------------------------------------------------

/// Scalar maps: vertices sharing a value. Planar maps: edges with coincident
/// endpoint images and 2-faces with collinear images.
std::vector<Simplex> genericity_violations(const PLMap& F);
bool is_generic(const PLMap& F);
/// Seeded dyadic perturbation of the vertices involved in violations.
/// Returns F unchanged when it is already generic.
PLMap ensure_generic(const PLMap& F, std::uint64_t seed);

PLMap restrict_to_boundary(const PLMap& F);

// Fold classification --------------------------------------------------------

enum class FoldLabel { Regular, DefiniteFold, NonDefiniteSingular };
const char* to_string(FoldLabel label);

struct VertexLabel {
  Vertex vertex = 0;
  FoldLabel label = FoldLabel::Regular;
  /// Scalar maps: homology of the lower link in the boundary (empty when the
  /// lower link is empty).
  BettiProfile lower_link;
  /// Planar maps: winding number of the boundary link image around F(v),
  /// number of turning spokes, and whether the image of the star in N
  /// covers a neighbourhood of F(v).
  int winding = 0;
  int turning = 0;
  bool covers = false;
};

struct VertexClassification {
  std::vector<VertexLabel> labels;  // one per boundary vertex, sorted
  /// Interior vertices where F is not a PL submersion.
  std::vector<Vertex> interior_singular;

  std::vector<Vertex> with_label(FoldLabel label) const;
};

VertexClassification classify_boundary_vertices(const PLMap& F);

struct SpecialGenericResult {
  bool ok = false;
  /// Non-definite boundary vertices and interior singular vertices.
  std::vector<Vertex> witnesses;
  /// Sampled query points whose fibre had the wrong dimension.
  std::vector<Point2> bad_points;
};

SpecialGenericResult is_boundary_special_generic(const PLMap& F);

/// Boundary edges along which F restricted to the boundary surface folds:
/// the two boundary triangles at the edge map to the same side of it.
std::vector<Simplex> fold_edges(const PLMap& F);

// Fibres -----------------------------------------------------------------------

struct FiberComponent {
  int dimension = 0;
  BettiProfile homology;
  /// Domain simplices (dimension, face id) whose relative interior meets
  /// the preimage.
  std::vector<std::pair<int, int>> cells;
  /// Domain vertices mapped into the query set.
  std::vector<Vertex> vertices;

  bool contains_cell(int d, int id) const;
};

/// Components of F^-1(conv(query)), where the rows of `query` are points of
/// the target. Homology is computed when requested.
std::vector<FiberComponent> preimage(const PLMap& F, const ValueMatrix& query, bool with_homology = true);

/// Components of the fibre over a regular point; DegenerateQueryPoint if the
/// point lies in the image of the codimension-one skeleton.
std::vector<FiberComponent> fiber(const PLMap& F, const ValueMatrix& point);
std::vector<FiberComponent> fiber(const PLMap& F, const Point2& p);
std::vector<FiberComponent> fiber(const PLMap& F, const Rational& t);

bool is_regular_point(const PLMap& F, const Point2& p);
/// Deterministic dyadic nudge of p to a regular point.
Point2 regularize(const PLMap& F, const Point2& p);

struct FiberCount {
  int count = 0;
  ValueMatrix point;
};

/// Maximum number of fibre components over a grid of regular points
/// covering the image bounding box.
FiberCount max_fiber_count(const PLMap& F, int grid);

}  // namespace bsg
