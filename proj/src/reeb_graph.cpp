#include "bsg/reeb.hpp"

#include "slicer.hpp"

#include <algorithm>
#include <map>

namespace bsg {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Min: return "min";
    case NodeKind::Max: return "max";
    case NodeKind::UpFork: return "up_fork";
    case NodeKind::DownFork: return "down_fork";
    case NodeKind::BoundaryEndpoint: return "boundary_endpoint";
  }
  return "unknown";
}

int ReebGraph::component_count() const {
  detail::UnionFind uf(static_cast<int>(nodes.size()));
  for (const auto& e : edges) uf.unite(e.lo, e.hi);
  int n = 0;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (uf.find(i) == i) ++n;
  return n;
}

std::vector<int> ReebGraph::endpoints() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i].degree() == 1) out.push_back(i);
  return out;
}

bool ReebGraph::is_path() const {
  if (component_count() != 1 || edges.size() + 1 != nodes.size()) return false;
  for (const auto& n : nodes)
    if (n.degree() > 2) return false;
  return nodes.size() == 1 || endpoints().size() == 2;
}

int ReebGraph::points_over(const Rational& t) const {
  int n = 0;
  for (const auto& node : nodes)
    if (node.value == t) ++n;
  for (const auto& e : edges)
    if (nodes[e.lo].value < t && t < nodes[e.hi].value) ++n;
  return n;
}

namespace {

struct RawNode {
  int level = 0;
  bool vertex_node = false;
  int down = 0, up = 0;
  std::vector<int> up_edges;
};

}  // namespace

ReebGraph reeb_graph(const PLMap& F) {
  if (F.target_dim() != 1) throw Error(ErrorCode::DimensionUnsupported, "Reeb graphs need a scalar map");
  if (!is_generic(F)) throw Error(ErrorCode::NotGeneric, "vertex values are not distinct");
  const auto& faces = F.domain->faces();
  const int D = faces.dimension();
  auto order = F.domain->vertices();
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return F.value(a) < F.value(b); });
  const int V = static_cast<int>(order.size());
  std::vector<int> rank(F.domain->vertex_count(), -1);
  for (int i = 0; i < V; ++i) rank[order[i]] = i;
  std::vector<std::vector<std::pair<int, int>>> span(D + 1);  // (min rank, max rank)
  for (int d = 0; d <= D; ++d)
    for (const auto& s : faces.faces(d)) {
      int lo = V, hi = -1;
      for (Vertex v : s) {
        lo = std::min(lo, rank[v]);
        hi = std::max(hi, rank[v]);
      }
      span[d].emplace_back(lo, hi);
    }
  auto members = [&](int i, bool slab) {
    std::vector<std::vector<int>> out(D + 1);
    for (int d = 0; d <= D; ++d)
      for (int id = 0; id < faces.count(d); ++id) {
        const auto [lo, hi] = span[d][id];
        if (lo <= i && (slab ? i <= hi : i < hi)) out[d].push_back(id);
      }
    return out;
  };

  // Slab components around each vertex value become raw nodes; level-set
  // components between consecutive values become raw edges.
  std::vector<RawNode> raw;
  std::vector<std::map<std::pair<int, int>, int>> node_of_face(V);
  std::vector<int> vertex_raw(V);
  for (int i = 0; i < V; ++i) {
    const auto comps = detail::upward_components(faces, members(i, true));
    const int vid = faces.id(Simplex{order[i]});
    for (const auto& comp : comps) {
      const int id = static_cast<int>(raw.size());
      raw.push_back(RawNode{i, false, 0, 0, {}});
      for (const auto& c : comp) {
        node_of_face[i][c] = id;
        if (c == std::pair{0, vid}) {
          raw[id].vertex_node = true;
          vertex_raw[i] = id;
        }
      }
    }
  }
  std::vector<std::pair<int, int>> raw_edges;
  std::vector<EdgeLevel> raw_levels;
  for (int i = 0; i + 1 < V; ++i)
    for (const auto& comp : detail::upward_components(faces, members(i, false))) {
      const int a = node_of_face[i].at(comp.front()), b = node_of_face[i + 1].at(comp.front());
      raw[a].up_edges.push_back(static_cast<int>(raw_edges.size()));
      ++raw[a].up;
      ++raw[b].down;
      raw_edges.emplace_back(a, b);
      raw_levels.push_back(EdgeLevel{F.value(order[i]), F.value(order[i + 1]), comp.front().first, comp.front().second});
    }

  const auto bverts = boundary_subcomplex(*F.domain).vertices();
  ReebGraph G;
  G.vertex_points.assign(F.domain->vertex_count(), GraphPoint{});
  std::vector<int> kept(raw.size(), -1);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    const auto& r = raw[n];
    if (!r.vertex_node) {
      if (r.down != 1 || r.up != 1) throw std::logic_error("level component changed away from a vertex");
      continue;
    }
    if (r.down == 1 && r.up == 1) continue;
    const Vertex v = order[r.level];
    ReebNode node{v, F.value(v), NodeKind::Min, r.down, r.up};
    if (node.degree() == 1 && std::binary_search(bverts.begin(), bverts.end(), v)) node.kind = NodeKind::BoundaryEndpoint;
    else if (r.down == 0) node.kind = NodeKind::Min;
    else if (r.up == 0) node.kind = NodeKind::Max;
    else if (r.up >= 2) node.kind = NodeKind::UpFork;
    else node.kind = NodeKind::DownFork;
    kept[n] = static_cast<int>(G.nodes.size());
    G.vertex_points[v] = GraphPoint{true, kept[n]};
    G.nodes.push_back(node);
  }
  // Contract chains of regular raw nodes into single edges.
  for (std::size_t n = 0; n < raw.size(); ++n) {
    if (kept[n] < 0) continue;
    for (int e : raw[n].up_edges) {
      const int edge_id = static_cast<int>(G.edges.size());
      std::vector<EdgeLevel> levels{raw_levels[e]};
      int t = raw_edges[e].second;
      while (kept[t] < 0) {
        if (raw[t].vertex_node) G.vertex_points[order[raw[t].level]] = GraphPoint{false, edge_id};
        const int up = raw[t].up_edges.front();
        levels.push_back(raw_levels[up]);
        t = raw_edges[up].second;
      }
      G.edges.push_back(ReebEdge{kept[n], kept[t], std::move(levels)});
    }
  }
  return G;
}

BettiProfile homology(const ReebGraph& G, Ring ring, Variant variant) {
  BettiProfile out;
  out.ring = ring;
  out.variant = variant;
  const int b0 = G.component_count();
  out.betti = {b0, static_cast<int>(G.edges.size()) - static_cast<int>(G.nodes.size()) + b0};
  out.torsion.resize(2);
  return out;
}

GroupPresentation pi1_presentation(const ReebGraph& G, int base_node) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : G.edges) edges.emplace_back(e.lo, e.hi);
  return pi1_presentation(static_cast<int>(G.nodes.size()), edges, base_node);
}

}  // namespace bsg
