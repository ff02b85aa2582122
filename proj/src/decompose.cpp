#include "bsg/reeb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace bsg {

namespace {

/// Hop distance from the seed cells, -1 where unreachable.
std::vector<int> hops(const std::vector<std::vector<int>>& adj, const std::vector<int>& seeds) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue;
  for (int s : seeds)
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int n : adj[c])
      if (dist[n] < 0) {
        dist[n] = dist[c] + 1;
        queue.push_back(n);
      }
  }
  return dist;
}

void split(Decomposition& D, const std::vector<int>& dist, int depth) {
  D.cell_count = static_cast<int>(dist.size());
  for (int c = 0; c < D.cell_count; ++c) (dist[c] >= 0 && dist[c] < depth ? D.collar_cells : D.core_cells).push_back(c);
}

const FiberComponent* containing(const std::vector<FiberComponent>& comps, int d, int id) {
  for (const auto& c : comps)
    if (c.contains_cell(d, id)) return &c;
  return nullptr;
}

const FiberComponent* containing_vertex(const std::vector<FiberComponent>& comps, Vertex v) {
  for (const auto& c : comps)
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), v)) return &c;
  return nullptr;
}

FiberSummary summarize(int cell, bool collar, ValueMatrix query, const FiberComponent* comp, int expected) {
  FiberSummary s;
  s.cell = cell;
  s.collar = collar;
  s.query = std::move(query);
  s.expected_dimension = expected;
  s.dimension = comp ? comp->dimension : -1;
  if (comp) s.homology = comp->homology;
  return s;
}

/// 1/2, 1/4, 3/4, 1/8, 3/8, ...
Rational dyadic_fraction(int k) {
  int level = 1;
  while (k >= (1 << (level - 1))) k -= 1 << (level - 1), ++level;
  return Rational(2 * k + 1, 1 << level);
}

Decomposition decompose_scalar(const PLMap& F, int depth, int min_samples) {
  const auto G = reeb_graph(F);
  const int n = F.domain->dimension();
  const int N = static_cast<int>(G.nodes.size()), E = static_cast<int>(G.edges.size());
  std::vector<std::vector<int>> adj(N + E);
  for (int e = 0; e < E; ++e)
    for (int node : {G.edges[e].lo, G.edges[e].hi}) {
      adj[node].push_back(N + e);
      adj[N + e].push_back(node);
    }
  std::vector<int> ends;
  for (int i = 0; i < N; ++i)
    if (G.nodes[i].kind == NodeKind::BoundaryEndpoint) ends.push_back(i);
  Decomposition D;
  split(D, hops(adj, ends), depth);

  // Aggregate fibre over the first half-level next to each boundary endpoint.
  for (int i : ends) {
    const auto& node = G.nodes[i];
    const int e = adj[i].front() - N;
    const bool lower = G.edges[e].lo == i;
    const auto& L = lower ? G.edges[e].levels.front() : G.edges[e].levels.back();
    const Rational mid = (L.lo + L.hi) / 2;
    ValueMatrix q(2, 1);
    q << (lower ? node.value : mid), (lower ? mid : node.value);
    const auto comps = preimage(F, q);
    D.fibers.push_back(summarize(i, true, q, containing_vertex(comps, node.vertex), n));
  }

  // Regular values along every edge, one level per edge per round.
  std::map<Rational, std::vector<FiberComponent>> cache;
  int samples = 0;
  for (int round = 0; E > 0 && (round == 0 || samples < min_samples); ++round) {
    for (int e = 0; e < E; ++e) {
      const auto& levels = G.edges[e].levels;
      const int k = round % static_cast<int>(levels.size());
      const auto& L = levels[k];
      const Rational t = L.lo + (L.hi - L.lo) * dyadic_fraction(round / static_cast<int>(levels.size()));
      auto it = cache.find(t);
      if (it == cache.end()) it = cache.emplace(t, fiber(F, t)).first;
      ValueMatrix q(1, 1);
      q << t;
      D.fibers.push_back(summarize(N + e, false, q, containing(it->second, L.dim, L.face), n - 1));
      ++samples;
    }
  }
  return D;
}

std::optional<Point2> sample_point(const PLMap& F, const Simplex& facet, const Box<Rational>& R) {
  std::vector<Point2> pts;
  for (Vertex v : facet) pts.push_back(F.point(v));
  const auto poly = clip(convex_hull(pts), R);
  if (poly.size() < 3) return std::nullopt;
  Rational area2 = 0;
  Point2 sum(0, 0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    area2 += cross<Rational>(poly[i], poly[(i + 1) % poly.size()]);
    sum += poly[i];
  }
  if (area2 == 0) return std::nullopt;
  return regularize(F, sum / Rational(static_cast<long>(poly.size())));
}

Decomposition decompose_planar(const PLMap& F, int depth, int grid, int min_samples) {
  const auto nerve = reeb_nerve(F, grid, Rational(1, 3));
  const auto& faces = F.domain->faces();
  const int n = F.domain->dimension(), top = faces.dimension();
  const int C = static_cast<int>(nerve.vertices.size());
  std::vector<std::vector<int>> adj(C);
  for (const auto& s : nerve.simplices)
    if (s.size() == 2) {
      adj[s[0]].push_back(s[1]);
      adj[s[1]].push_back(s[0]);
    }
  const auto bcells = boundary_cells(nerve, F);
  std::vector<int> seeds;
  for (const auto& b : bcells) seeds.push_back(b.cell);
  Decomposition D;
  split(D, hops(adj, seeds), depth);

  // Aggregate fibre over a segment from a fold value into the image of a
  // facet at the fold.
  std::map<std::pair<int, int>, FiberSummary> by_face;
  for (const auto& b : bcells) {
    auto it = by_face.find(b.face);
    if (it == by_face.end()) {
      const auto& phi = faces.faces(b.face.first)[b.face.second];
      Simplex sigma;
      for (const auto& s : F.domain->star_facets(phi.front()))
        if (std::includes(s.begin(), s.end(), phi.begin(), phi.end())) {
          sigma = s;
          break;
        }
      Point2 start(0, 0), centroid(0, 0);
      for (Vertex v : phi) start += F.point(v);
      start /= Rational(static_cast<long>(phi.size()));
      for (Vertex v : sigma) centroid += F.point(v);
      centroid /= Rational(static_cast<long>(sigma.size()));
      ValueMatrix q(2, 2);
      q << start.x(), start.y(), centroid.x(), centroid.y();
      const auto comps = preimage(F, q);
      it = by_face.emplace(b.face, summarize(b.cell, true, q, containing(comps, b.face.first, b.face.second), n - 1)).first;
    }
    auto s = it->second;
    s.cell = b.cell;
    D.fibers.push_back(std::move(s));
  }

  // Regular points inside each cell, one facet per cell per round.
  std::vector<std::vector<int>> facets(C);
  for (int c = 0; c < C; ++c)
    for (const auto& [d, id] : nerve.vertices[c].cells)
      if (d == top) facets[c].push_back(id);
  int samples = 0;
  bool more = true;
  for (std::size_t round = 0; more && (round == 0 || samples < min_samples); ++round) {
    more = false;
    for (int c = 0; c < C; ++c) {
      if (round >= facets[c].size()) continue;
      more = true;
      const int id = facets[c][round];
      const auto R = nerve.rectangle(nerve.vertices[c].cell_x, nerve.vertices[c].cell_y);
      const auto p = sample_point(F, faces.faces(top)[id], R);
      if (!p) continue;
      const auto comps = fiber(F, *p);
      ValueMatrix q(1, 2);
      q << p->x(), p->y();
      D.fibers.push_back(summarize(c, false, q, containing(comps, top, id), n - 2));
      ++samples;
    }
  }
  return D;
}

}  // namespace

Decomposition decompose(const PLMap& F, int depth, int grid, int min_samples) {
  if (depth < 1) throw Error(ErrorCode::InvalidInput, "collar depth must be at least 1");
  if (F.target_dim() == 1) return decompose_scalar(F, depth, min_samples);
  if (F.target_dim() == 2) return decompose_planar(F, depth, grid, min_samples);
  throw Error(ErrorCode::DimensionUnsupported, "targets of dimension 1 or 2 only");
}

}  // namespace bsg
