#include "bsg/plmap.hpp"

#include "bsg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace bsg {

std::vector<Point2> PLMap::image(const Simplex& s) const {
  std::vector<Point2> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(point(v));
  return out;
}

PLMap make_map(SimplicialComplex K, ValueMatrix values) {
  if (values.rows() != K.vertex_count())
    throw Error(ErrorCode::InvalidInput, "one value row per vertex is required");
  if (values.cols() != 1 && values.cols() != 2) throw Error(ErrorCode::InvalidInput, "target dimension must be 1 or 2");
  return PLMap{std::make_shared<const SimplicialComplex>(std::move(K)), std::move(values)};
}

namespace {

const std::vector<std::pair<MapKind, const char*>> kKindNames = {
    {MapKind::HeightDisk, "height_disk"},
    {MapKind::ProductSolidTorus, "product_solid_torus"},
    {MapKind::TwistedMap, "twisted_map"},
    {MapKind::SumMap, "sum_map"},
    {MapKind::SaddleControl, "saddle_control"},
    {MapKind::TorusHeight, "torus_height"},
    {MapKind::SolidTorusHeight, "solid_torus_height"},
    {MapKind::DiskProjection, "disk_projection"},
};

// Planar annulus: core radius, cross-section shear and summand spacing.
const Rational kCoreRadius = 4;
const Rational kShear = Rational(1, 8);
const Rational kSummandSpacing = 13;

/// Dyadic approximation of the unit vector at angle 2*pi*k/res.
Point2 direction(int k, int res) {
  const double a = 2.0 * M_PI * k / res;
  return Point2(Rational(static_cast<long>(std::lround(1024 * std::cos(a))), 1024),
                Rational(static_cast<long>(std::lround(1024 * std::sin(a))), 1024));
}

Point2 perp(const Point2& d) { return Point2(-d.y(), d.x()); }

ValueMatrix column(const ValueMatrix& m, int c) { return m.col(c); }

/// (u, v, k) |-> (R + u) d_k + c v d_k^perp: the height u on the cross-section
/// times the circle, embedded as an annulus. The small shear in v keeps the
/// slice triangles non-degenerate.
ValueMatrix annulus_values(const Triangulation& t, int res) {
  ValueMatrix out(t.coords.rows(), 2);
  for (Eigen::Index v = 0; v < t.coords.rows(); ++v) {
    const int k = t.coords(v, 2).convert_to<int>();
    const Point2 d = direction(k, res);
    const Point2 p = d * (kCoreRadius + t.coords(v, 0)) + perp(d) * (kShear * t.coords(v, 1));
    out(v, 0) = p.x();
    out(v, 1) = p.y();
  }
  return out;
}

PLMap solid_torus_map(GeneratorKind kind, int res) {
  const auto t = triangulate(Generator{kind, 2, res});
  if (kind == GeneratorKind::TwistedSolidTorus) {
    // Seam agreement: the retained coordinate u is invariant under the
    // reflection v -> -v used by the gluing, so the unsheared image of every
    // slice-0 vertex equals the image of its reflected partner.
    for (int j = 0; j < kSectionVertices; ++j) {
      bool found = false;
      for (int i = 0; i < kSectionVertices; ++i)
        if (t.coords(i, 0) == t.coords(j, 0) && t.coords(i, 1) == -t.coords(j, 1)) found = true;
      if (!found) throw std::logic_error("cross-section is not reflection symmetric");
    }
  }
  return make_map(t.complex, annulus_values(t, res));
}

struct Piece {
  SimplicialComplex complex;
  ValueMatrix values;
};

/// Glue `B` onto `A` along the ordered triangles fa, fb and merge values.
Piece glue(const Piece& A, const Simplex& fa, const Piece& B, const Simplex& fb, std::vector<Vertex>& b_map) {
  auto sum = boundary_connected_sum(A.complex, fa, B.complex, fb);
  if (sum.subdivided) throw std::logic_error("sum construction expects a direct gluing");
  Piece out{sum.complex, ValueMatrix(sum.complex.vertex_count(), A.values.cols())};
  out.values.topRows(A.values.rows()) = A.values;
  for (Eigen::Index v = 0; v < B.values.rows(); ++v) out.values.row(sum.second_vertex_map[v]) = B.values.row(v);
  b_map = std::move(sum.second_vertex_map);
  return out;
}

PLMap sum_map_raw(int r, int rp, int res) {
  if (r < 0 || rp < 0 || r + rp < 1) throw Error(ErrorCode::InvalidInput, "sum_map needs at least one summand");
  if (res < 4) throw Error(ErrorCode::ResolutionTooSmall, "sum_map needs res >= 4");
  const int h = res / 2;
  // Right gluing triangle near angle 0, left one near angle pi.
  const Simplex right = {solid_torus_vertex(section_rim(0), 0), solid_torus_vertex(section_rim(0), 1),
                         solid_torus_vertex(section_rim(1), 1)};
  const Simplex left = {solid_torus_vertex(section_rim(0), h + 1), solid_torus_vertex(section_rim(0), h),
                        solid_torus_vertex(section_rim(1), h + 1)};
  const auto bridge_t = triangulate(Generator{GeneratorKind::Prism, 2, 2});

  Piece acc;
  Simplex acc_right;
  for (int i = 0; i < r + rp; ++i) {
    const auto kind = i < r ? GeneratorKind::SolidTorus : GeneratorKind::TwistedSolidTorus;
    const auto t = triangulate(Generator{kind, 2, res});
    Piece summand{t.complex, annulus_values(t, res)};
    summand.values.col(0).array() += kSummandSpacing * i;
    if (i == 0) {
      acc = summand;
      acc_right = right;
      continue;
    }
    // Bridge: triangle x [0, 2], values interpolated between the two gluing
    // triangles so the fold lines of both summands join along its sides.
    Piece bridge{bridge_t.complex, ValueMatrix(9, 2)};
    for (int c = 0; c < 3; ++c) {
      bridge.values.row(c) = acc.values.row(acc_right[c]);
      bridge.values.row(6 + c) = summand.values.row(left[c]);
      bridge.values.row(3 + c) = (bridge.values.row(c) + bridge.values.row(6 + c)) / 2;
    }
    std::vector<Vertex> bmap, smap;
    acc = glue(acc, acc_right, bridge, {0, 1, 2}, bmap);
    acc = glue(acc, {bmap[6], bmap[7], bmap[8]}, summand, left, smap);
    acc_right = {smap[right[0]], smap[right[1]], smap[right[2]]};
  }
  return make_map(acc.complex, acc.values);
}

struct Saddle {
  PLMap map;
  Vertex vertex;
};

/// Subdivided 3-disk with a boundary saddle: s gets 0, two non-adjacent
/// vertices of its boundary link get -1 and -2, and every other vertex gets
/// 10 plus a generic linear height that is lowest at s.
Saddle saddle_control() {
  const auto disk = triangulate(Generator{GeneratorKind::Disk, 3});
  const auto sd = barycentric_subdivision(disk.complex);
  const auto& K = sd.complex;
  Vertex s = -1;
  for (std::size_t v = 0; v < sd.vertex_faces.size(); ++v)
    if (sd.vertex_faces[v] == Simplex{0}) s = static_cast<Vertex>(v);
  const auto B = boundary_subcomplex(K);
  const auto link = B.link({s});
  // Walk the link cycle to find two non-adjacent vertices.
  const auto& edges = link.faces().faces(1);
  const Vertex a = link.vertices().front();
  std::vector<Vertex> nbrs;
  for (const auto& e : edges) {
    if (e[0] == a) nbrs.push_back(e[1]);
    if (e[1] == a) nbrs.push_back(e[0]);
  }
  Vertex b = -1;
  for (Vertex w : link.vertices())
    if (w != a && std::find(nbrs.begin(), nbrs.end(), w) == nbrs.end()) {
      b = w;
      break;
    }
  ValueMatrix values(K.vertex_count(), 1);
  for (Vertex v = 0; v < K.vertex_count(); ++v) {
    const auto& face = sd.vertex_faces[v];
    Eigen::Matrix<Rational, 1, 3> c = Eigen::Matrix<Rational, 1, 3>::Zero();
    for (Vertex w : face) c += disk.coords.row(w);
    c /= Rational(static_cast<long>(face.size()));
    values(v, 0) = 10 - c(2) + c(0) / 64 + c(1) / 4096;
  }
  values(s, 0) = 0;
  values(a, 0) = -1;
  values(b, 0) = -2;
  return {make_map(K, values), s};
}

/// Generic-position map on the torus surface: the coordinate x of the
/// standard torus of revolution, which has two saddles.
PLMap torus_height(int res) {
  const auto t = triangulate(Generator{GeneratorKind::TorusSurface, 2, res});
  ValueMatrix values(t.coords.rows(), 1);
  for (Eigen::Index v = 0; v < t.coords.rows(); ++v) {
    const Point2 di = direction(t.coords(v, 0).convert_to<int>(), res);
    const Point2 dj = direction(t.coords(v, 1).convert_to<int>(), res);
    values(v, 0) = (2 + dj.x()) * di.x();
  }
  return make_map(t.complex, values);
}

PLMap solid_torus_height(int res) {
  const auto t = triangulate(Generator{GeneratorKind::SolidTorus, 2, res});
  ValueMatrix values(t.coords.rows(), 1);
  for (Eigen::Index v = 0; v < t.coords.rows(); ++v)
    values(v, 0) = (kCoreRadius + t.coords(v, 0)) * direction(t.coords(v, 2).convert_to<int>(), res).x();
  return make_map(t.complex, values);
}

PLMap raw_map(const MapSpec& spec) {
  switch (spec.kind) {
    case MapKind::HeightDisk: {
      const auto t = triangulate(Generator{GeneratorKind::Disk, spec.dim});
      return make_map(t.complex, column(t.coords, spec.dim - 1));
    }
    case MapKind::ProductSolidTorus:
      return solid_torus_map(GeneratorKind::SolidTorus, spec.res);
    case MapKind::TwistedMap:
      return solid_torus_map(GeneratorKind::TwistedSolidTorus, spec.res);
    case MapKind::SumMap:
      return sum_map_raw(spec.r, spec.rp, spec.res);
    case MapKind::SaddleControl:
      return saddle_control().map;
    case MapKind::TorusHeight:
      return torus_height(spec.res);
    case MapKind::SolidTorusHeight:
      return solid_torus_height(spec.res);
    case MapKind::DiskProjection: {
      if (spec.dim < 3) throw Error(ErrorCode::UnsupportedDimension, "projection needs a disk of dimension at least 3");
      const auto t = triangulate(Generator{GeneratorKind::Disk, spec.dim});
      return make_map(t.complex, t.coords.leftCols(2));
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown map kind");
}

}  // namespace

const char* to_string(MapKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<MapKind> map_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  return std::nullopt;
}

SimplicialComplex canonical_domain(const MapSpec& spec) { return *raw_map(spec).domain; }

PLMap canonical_map(const MapSpec& spec, std::uint64_t seed) { return ensure_generic(raw_map(spec), seed); }

PLMap canonical_map(const MapSpec& spec, const SimplicialComplex& K, std::uint64_t seed) {
  auto F = raw_map(spec);
  if (!(*F.domain == K))
    throw Error(ErrorCode::KindMismatch, std::string("complex is not the domain of ") + to_string(spec.kind));
  return ensure_generic(F, seed);
}

Vertex saddle_control_vertex() { return saddle_control().vertex; }

// Genericity -----------------------------------------------------------------

std::vector<Simplex> genericity_violations(const PLMap& F) {
  std::vector<Simplex> out;
  const auto& faces = F.domain->faces();
  if (F.target_dim() == 1) {
    auto verts = F.domain->vertices();
    std::sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) {
      return F.value(a) != F.value(b) ? F.value(a) < F.value(b) : a < b;
    });
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
      if (F.value(verts[i]) == F.value(verts[i + 1])) out.push_back({verts[i], verts[i + 1]});
    return out;
  }
  if (faces.dimension() >= 1)
    for (const auto& e : faces.faces(1))
      if (F.point(e[0]) == F.point(e[1])) out.push_back(e);
  if (faces.dimension() >= 2)
    for (const auto& t : faces.faces(2))
      if (orientation<Rational>(F.point(t[0]), F.point(t[1]), F.point(t[2])) == 0) out.push_back(t);
  return out;
}

bool is_generic(const PLMap& F) { return genericity_violations(F).empty(); }

namespace {

Rational dyadic_below(const Rational& bound) {
  Rational d = 1;
  while (d > bound) d /= 2;
  while (d * 2 <= bound && d < 1) d *= 2;
  return d;
}

Rational sup_norm(const Point2& p) { return std::max(abs(p.x()), abs(p.y())); }

/// Perturbation size that keeps every strict order (scalar maps) or every
/// non-degenerate 2-face orientation (planar maps) through the movers.
Rational perturbation_bound(const PLMap& F, const std::set<Vertex>& movers) {
  const auto& faces = F.domain->faces();
  if (F.target_dim() == 1) {
    std::vector<Rational> vals;
    for (Vertex v : F.domain->vertices()) vals.push_back(F.value(v));
    std::sort(vals.begin(), vals.end());
    Rational gap = -1;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
      if (vals[i] != vals[i + 1] && (gap < 0 || vals[i + 1] - vals[i] < gap)) gap = vals[i + 1] - vals[i];
    return gap < 0 ? Rational(1) : std::min(Rational(1), gap / 4);
  }
  Rational bound = 1;
  auto touches = [&](const Simplex& s) {
    return std::any_of(s.begin(), s.end(), [&](Vertex v) { return movers.count(v) > 0; });
  };
  if (faces.dimension() >= 1)
    for (const auto& e : faces.faces(1)) {
      const Rational gap = sup_norm(F.point(e[1]) - F.point(e[0]));
      if (gap != 0 && touches(e)) bound = std::min(bound, gap / 4);
    }
  if (faces.dimension() >= 2)
    for (const auto& t : faces.faces(2)) {
      if (!touches(t)) continue;
      const Point2 u = F.point(t[1]) - F.point(t[0]), w = F.point(t[2]) - F.point(t[0]);
      const Rational area = abs(cross<Rational>(u, w));
      if (area == 0) continue;
      const Rational M = std::max({sup_norm(u), sup_norm(w), sup_norm(F.point(t[2]) - F.point(t[1]))});
      bound = std::min(bound, area / (16 * (M + 1)));
    }
  return bound;
}

bool preserves_structure(const PLMap& F, const PLMap& G) {
  const auto& faces = F.domain->faces();
  if (F.target_dim() == 1) {
    auto verts = F.domain->vertices();
    for (Vertex a : verts)
      for (Vertex b : verts)
        if (F.value(a) < F.value(b) && !(G.value(a) < G.value(b))) return false;
    return true;
  }
  if (faces.dimension() >= 2)
    for (const auto& t : faces.faces(2)) {
      const int before = orientation<Rational>(F.point(t[0]), F.point(t[1]), F.point(t[2]));
      if (before != 0 && orientation<Rational>(G.point(t[0]), G.point(t[1]), G.point(t[2])) != before)
        return false;
    }
  return true;
}

}  // namespace

PLMap ensure_generic(const PLMap& F, std::uint64_t seed) {
  constexpr int kRounds = 8, kAttempts = 8, kLevels = 255;
  PLMap G = F;
  std::mt19937_64 rng(seed);
  for (int round = 0; round < kRounds; ++round) {
    const auto violations = genericity_violations(G);
    if (violations.empty()) return G;
    std::set<Vertex> movers;
    for (const auto& s : violations) movers.insert(s.begin(), s.end());
    const Rational step = dyadic_below(perturbation_bound(G, movers)) / (kLevels + 1);
    bool moved = false;
    for (int attempt = 0; attempt < kAttempts && !moved; ++attempt) {
      PLMap H = G;
      for (Vertex v : movers)
        for (Eigen::Index c = 0; c < H.values.cols(); ++c) {
          // Uniform non-zero offset in [-kLevels, kLevels], independent of
          // the standard library's distributions.
          long k = static_cast<long>(rng() % (2 * kLevels)) - kLevels;
          if (k >= 0) ++k;
          H.values(v, c) += step * k;
        }
      if (preserves_structure(G, H)) {
        G = std::move(H);
        moved = true;
      }
    }
    if (!moved) break;
  }
  if (is_generic(G)) return G;
  throw Error(ErrorCode::PerturbationFailed, "could not reach general position");
}

PLMap restrict_to_boundary(const PLMap& F) {
  auto B = boundary_subcomplex(*F.domain);
  if (B.empty()) throw Error(ErrorCode::ClosedDomain, "domain has no boundary");
  return make_map(std::move(B), F.values);
}

}  // namespace bsg
