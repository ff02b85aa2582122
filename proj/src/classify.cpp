#include "bsg/geometry.hpp"
#include "bsg/plmap.hpp"

#include <algorithm>
#include <set>

namespace bsg {

const char* to_string(FoldLabel label) {
  switch (label) {
    case FoldLabel::Regular: return "regular";
    case FoldLabel::DefiniteFold: return "definite_fold";
    case FoldLabel::NonDefiniteSingular: return "non_definite_singular";
  }
  return "unknown";
}

std::vector<Vertex> VertexClassification::with_label(FoldLabel label) const {
  std::vector<Vertex> out;
  for (const auto& l : labels)
    if (l.label == label) out.push_back(l.vertex);
  return out;
}

namespace {

/// Homology of the subcomplex of `link` spanned by the vertices accepted by
/// `keep`; empty profile when no vertex is kept.
template <typename Pred>
BettiProfile spanned_homology(const SimplicialComplex& link, Pred keep) {
  std::vector<Simplex> kept;
  const auto& faces = link.faces();
  for (int d = 0; d <= faces.dimension(); ++d)
    for (const auto& s : faces.faces(d))
      if (std::all_of(s.begin(), s.end(), keep)) kept.push_back(s);
  if (kept.empty()) return BettiProfile{};
  return homology(chain_complex(FaceIndex(kept)), Ring::Z);
}

bool reduced_acyclic(const BettiProfile& h) { return !h.betti.empty() && h.acyclic(); }

std::vector<Vertex> neighbours(const SimplicialComplex& K, Vertex v) {
  std::set<Vertex> out;
  for (const auto& f : K.star_facets(v))
    for (Vertex w : f)
      if (w != v) out.insert(w);
  return {out.begin(), out.end()};
}

/// Cyclic vertex order of a link that is a single cycle.
std::vector<Vertex> cycle_order(const SimplicialComplex& link) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : link.faces().faces(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (const auto& [v, n] : adj)
    if (n.size() != 2) throw Error(ErrorCode::NotPseudoManifold, "boundary vertex link is not a cycle");
  std::vector<Vertex> out{adj.begin()->first};
  Vertex prev = -1;
  while (true) {
    const auto& n = adj[out.back()];
    const Vertex next = n[0] != prev ? n[0] : n[1];
    if (next == out.front()) break;
    prev = out.back();
    out.push_back(next);
    if (out.size() > adj.size()) throw Error(ErrorCode::NotPseudoManifold, "boundary vertex link is not a cycle");
  }
  if (out.size() != adj.size()) throw Error(ErrorCode::NotPseudoManifold, "boundary vertex link is disconnected");
  return out;
}

/// Whether the images of the facets around v cover a neighbourhood of F(v).
bool star_covers(const PLMap& F, Vertex v) {
  std::vector<std::vector<Point2>> cones;
  const Point2 o = F.point(v);
  for (const auto& f : F.domain->star_facets(v)) {
    std::vector<Point2> gens;
    for (Vertex w : f)
      if (w != v) gens.push_back(F.point(w) - o);
    cones.push_back(std::move(gens));
  }
  return cones_cover_plane<Rational>(cones);
}

VertexLabel classify_scalar(const PLMap& F, const SimplicialComplex& B, Vertex v) {
  VertexLabel out;
  out.vertex = v;
  const auto link = B.link({v});
  const auto lvs = link.vertices();
  const Rational& t = F.value(v);
  const int lower = static_cast<int>(std::count_if(lvs.begin(), lvs.end(), [&](Vertex w) { return F.value(w) < t; }));
  out.lower_link = spanned_homology(link, [&](Vertex w) { return F.value(w) < t; });
  const bool empty = lower == 0;
  const bool full = lower == static_cast<int>(lvs.size());
  if (!empty && !full && reduced_acyclic(out.lower_link)) return out;  // regular for F on the boundary
  // Definite folds are boundary extrema that are also extrema of F on the
  // star in N.
  const auto nb = neighbours(*F.domain, v);
  const bool n_min = std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return F.value(w) < t; });
  const bool n_max = std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return F.value(w) > t; });
  out.label = ((empty && n_min) || (full && n_max)) ? FoldLabel::DefiniteFold : FoldLabel::NonDefiniteSingular;
  return out;
}

VertexLabel classify_planar(const PLMap& F, const SimplicialComplex& B, Vertex v) {
  VertexLabel out;
  out.vertex = v;
  const auto cycle = cycle_order(B.link({v}));
  const Point2 o = F.point(v);
  std::vector<Point2> imgs;
  for (Vertex w : cycle) imgs.push_back(F.point(w));
  out.winding = winding_number<Rational>(o, imgs);
  const std::size_t n = imgs.size();
  std::vector<int> sides(n);
  for (std::size_t i = 0; i < n; ++i) sides[i] = orientation<Rational>(o, imgs[i], imgs[(i + 1) % n]);
  for (std::size_t i = 0; i < n; ++i)
    if (sides[i] != sides[(i + n - 1) % n]) ++out.turning;
  out.covers = star_covers(F, v);
  if (out.winding == 1 || out.winding == -1) return out;
  out.label = (out.winding == 0 && out.turning == 2 && !out.covers) ? FoldLabel::DefiniteFold
                                                                     : FoldLabel::NonDefiniteSingular;
  return out;
}

bool interior_regular(const PLMap& F, Vertex v) {
  if (F.target_dim() == 2) return star_covers(F, v);
  const auto link = F.domain->link({v});
  const Rational& t = F.value(v);
  return reduced_acyclic(spanned_homology(link, [&](Vertex w) { return F.value(w) < t; })) &&
         reduced_acyclic(spanned_homology(link, [&](Vertex w) { return F.value(w) > t; }));
}

}  // namespace

VertexClassification classify_boundary_vertices(const PLMap& F) {
  if (!is_generic(F)) throw Error(ErrorCode::NotGeneric, "map is not in general position");
  const auto B = boundary_subcomplex(*F.domain);
  if (B.empty()) throw Error(ErrorCode::ClosedDomain, "domain has no boundary");
  if (F.domain->dimension() <= F.target_dim())
    throw Error(ErrorCode::DimensionUnsupported, "domain dimension must exceed the target dimension");
  if (F.target_dim() == 2 && B.dimension() != 2)
    throw Error(ErrorCode::DimensionUnsupported, "planar classification needs a surface boundary");
  VertexClassification out;
  const auto bverts = B.vertices();
  for (Vertex v : bverts)
    out.labels.push_back(F.target_dim() == 1 ? classify_scalar(F, B, v) : classify_planar(F, B, v));
  for (Vertex v : F.domain->vertices())
    if (!std::binary_search(bverts.begin(), bverts.end(), v) && !interior_regular(F, v))
      out.interior_singular.push_back(v);
  return out;
}

SpecialGenericResult is_boundary_special_generic(const PLMap& F) {
  SpecialGenericResult out;
  const auto cls = classify_boundary_vertices(F);
  out.witnesses = cls.with_label(FoldLabel::NonDefiniteSingular);
  out.witnesses.insert(out.witnesses.end(), cls.interior_singular.begin(), cls.interior_singular.end());
  std::sort(out.witnesses.begin(), out.witnesses.end());
  // Sampled fibre dimension at a few facet images.
  const int expected = F.domain->dimension() - F.target_dim();
  const auto& facets = F.domain->facets();
  const std::size_t samples = std::min<std::size_t>(8, facets.size());
  std::vector<Rational> levels;
  if (F.target_dim() == 1) {
    for (Vertex v : F.domain->vertices()) levels.push_back(F.value(v));
    std::sort(levels.begin(), levels.end());
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& f = facets[i * facets.size() / samples];
    if (F.target_dim() == 1) {
      // Just above the lowest value of the facet: a regular value met by it.
      Rational lo = F.value(f[0]);
      for (Vertex v : f) lo = std::min(lo, F.value(v));
      const auto next = std::upper_bound(levels.begin(), levels.end(), lo);
      const Rational t = (lo + *next) / 2;
      for (const auto& c : fiber(F, t))
        if (c.dimension != expected) out.bad_points.emplace_back(t, 0);
    } else {
      Point2 c(0, 0);
      for (Vertex v : f) c += F.point(v);
      c /= Rational(static_cast<long>(f.size()));
      const Point2 p = regularize(F, c);
      for (const auto& comp : fiber(F, p))
        if (comp.dimension != expected) out.bad_points.push_back(p);
    }
  }
  out.ok = out.witnesses.empty() && out.bad_points.empty();
  return out;
}

std::vector<Simplex> fold_edges(const PLMap& F) {
  if (F.target_dim() != 2 || F.domain->dimension() != 3)
    throw Error(ErrorCode::DimensionUnsupported, "fold edges are defined for 3-manifolds over the plane");
  const auto B = boundary_subcomplex(*F.domain);
  if (B.empty()) throw Error(ErrorCode::ClosedDomain, "domain has no boundary");
  const auto& faces = B.faces();
  std::vector<Simplex> out;
  for (int e = 0; e < faces.count(1); ++e) {
    const auto& edge = faces.faces(1)[e];
    std::vector<int> sides;
    for (int t : faces.cofacets(1, e))
      for (Vertex c : faces.faces(2)[t])
        if (c != edge[0] && c != edge[1]) sides.push_back(orientation(F.point(edge[0]), F.point(edge[1]), F.point(c)));
    if (sides.size() == 2 && sides[0] == sides[1]) out.push_back(edge);
  }
  return out;
}

}  // namespace bsg
