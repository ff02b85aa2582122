#pragma once

#include "bsg/geometry.hpp"
#include "bsg/plmap.hpp"

#include <vector>

namespace bsg {

// Reeb graph (scalar maps) ----------------------------------------------------

enum class NodeKind { Min, Max, UpFork, DownFork, BoundaryEndpoint };
const char* to_string(NodeKind kind);

struct ReebNode {
  Vertex vertex = 0;  // the critical vertex
  Rational value;
  NodeKind kind = NodeKind::Min;
  int down = 0, up = 0;  // incident edges below / above
  int degree() const { return down + up; }
};

/// A stretch of an edge between consecutive vertex values, with a domain
/// face whose interior meets the level component at every value inside.
struct EdgeLevel {
  Rational lo, hi;
  int dim = 0, face = 0;
};

struct ReebEdge {
  int lo = 0, hi = 0;  // node ids, value(lo) < value(hi)
  std::vector<EdgeLevel> levels;  // increasing
};

/// Where a domain vertex lands in the graph: a node, or the interior of an
/// edge.
struct GraphPoint {
  bool on_node = true;
  int id = 0;
};

struct ReebGraph {
  std::vector<ReebNode> nodes;
  std::vector<ReebEdge> edges;
  std::vector<GraphPoint> vertex_points;  // indexed by domain vertex

  int component_count() const;
  std::vector<int> endpoints() const;  // nodes of degree 1
  bool is_path() const;
  /// Number of graph points over a regular value t.
  int points_over(const Rational& t) const;
};

/// Exact Reeb graph of a generic scalar map by a value-ordered sweep.
ReebGraph reeb_graph(const PLMap& F);

BettiProfile homology(const ReebGraph& G, Ring ring, Variant variant = Variant::Homology);
GroupPresentation pi1_presentation(const ReebGraph& G, int base_node = 0);

// Reeb space nerve (planar maps) ----------------------------------------------

struct NerveVertex {
  int cell_x = 0, cell_y = 0;  // grid rectangle
  int component = 0;           // preimage component within the rectangle
  /// Domain faces (dimension, id) of the component.
  std::vector<std::pair<int, int>> cells;
};

struct ReebNerve {
  int grid = 0;
  Rational overlap;
  Box<Rational> bounds;  // image bounding box
  std::vector<NerveVertex> vertices;
  /// Every simplex of the nerve (dimensions 0 to 3), sorted.
  std::vector<Simplex> simplices;

  /// Rectangle of cell (i, j), enlarged by the overlap fraction.
  Box<Rational> rectangle(int i, int j) const;
  FaceIndex face_index() const;
  BettiProfile homology(Ring ring, Variant variant = Variant::Homology) const;
};

ReebNerve reeb_nerve(const PLMap& F, int grid, const Rational& overlap);

struct BoundaryCell {
  int cell = 0;                // nerve vertex
  std::pair<int, int> face;    // a definite fold vertex or fold edge it contains
};

/// Nerve vertices meeting the image of the singular set of F on the
/// boundary, in increasing order.
std::vector<BoundaryCell> boundary_cells(const ReebNerve& N, const PLMap& F);

// Collar / core decomposition --------------------------------------------------

struct FiberSummary {
  int cell = 0;  // node/edge id (graphs) or nerve vertex id
  bool collar = false;
  ValueMatrix query;  // point, interval or segment that was sliced
  int dimension = 0;
  int expected_dimension = 0;
  BettiProfile homology;
  bool ok() const { return dimension == expected_dimension && homology.acyclic(); }
};

struct Decomposition {
  std::vector<int> collar_cells;
  std::vector<int> core_cells;
  int cell_count = 0;
  std::vector<FiberSummary> fibers;
};

/// Partition the Reeb cells into the collar (within `depth` hops of the
/// boundary; depth 1 = the boundary cells themselves) and the core, with
/// exact fibre summaries. Planar maps use a nerve of the given grid.
Decomposition decompose(const PLMap& F, int depth = 1, int grid = 8, int min_samples = 50);

}  // namespace bsg
