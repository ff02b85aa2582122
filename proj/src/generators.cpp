#include "bsg/complex.hpp"

#include <algorithm>
#include <array>

namespace bsg {

namespace {

// Cross-section disk: center plus a hexagon. (u, v) coordinates are chosen
// so that v -> -v permutes the vertices.
const std::array<std::array<int, 2>, kSectionVertices> kSectionUV2 = {{
    {0, 0}, {2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}};  // in halves
const std::array<int, kSectionVertices> kSectionReflection = {0, 1, 6, 5, 4, 3, 2};

std::vector<Simplex> section_triangles() {
  std::vector<Simplex> out;
  for (int j = 1; j <= 6; ++j) {
    Simplex t{0, j, j % 6 + 1};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

/// Three tetrahedra of the prism over a sorted triangle, with bottom/top
/// vertex lookups. The staircase split agrees on shared square faces as
/// long as the same vertex order is used for every prism.
template <typename Bottom, typename Top>
void add_prism(std::vector<Simplex>& out, const Simplex& tri, Bottom bottom, Top top) {
  const int a = tri[0], b = tri[1], c = tri[2];
  out.push_back({bottom(a), bottom(b), bottom(c), top(c)});
  out.push_back({bottom(a), bottom(b), top(b), top(c)});
  out.push_back({bottom(a), top(a), top(b), top(c)});
}

Triangulation disk_or_sphere(const Generator& g) {
  const int n = g.dim;
  Triangulation out;
  out.coords = ValueMatrix::Zero(n + 2, 3);
  std::vector<Simplex> facets;
  if (g.kind == GeneratorKind::Disk) {
    if (n < 1 || n > 3) throw Error(ErrorCode::UnsupportedDimension, "disk dimension must be 1..3");
    // Cone from apex n+1 over the boundary of the n-simplex on 0..n.
    for (int skip = 0; skip <= n; ++skip) {
      Simplex f;
      for (int v = 0; v <= n; ++v)
        if (v != skip) f.push_back(v);
      f.push_back(n + 1);
      facets.push_back(f);
    }
    // Round embedding, last coordinate is the height.
    if (n == 1) {
      out.coords(0, 0) = -1;
      out.coords(1, 0) = 1;
    } else if (n == 2) {
      out.coords.row(0) << 0, 1, 0;
      out.coords.row(1) << -1, Rational(-1, 2), 0;
      out.coords.row(2) << 1, Rational(-1, 2), 0;
    } else {
      out.coords.row(0) << 0, 0, 1;
      out.coords.row(1) << 1, 0, Rational(-1, 3);
      out.coords.row(2) << Rational(-1, 2), 1, Rational(-1, 3);
      out.coords.row(3) << Rational(-1, 2), -1, Rational(-1, 3);
    }
    out.coords.conservativeResize(n + 2, 3);
  } else {
    if (n < 0 || n > 3) throw Error(ErrorCode::UnsupportedDimension, "sphere dimension must be 0..3");
    // Boundary of the (n+1)-simplex.
    for (int skip = 0; skip <= n + 1; ++skip) {
      Simplex f;
      for (int v = 0; v <= n + 1; ++v)
        if (v != skip) f.push_back(v);
      facets.push_back(f);
    }
    for (int v = 0; v <= n + 1; ++v) out.coords.row(v) << v, v * v, v * v * v;
  }
  out.complex = build_from_facets(facets, n + 2);
  return out;
}

Triangulation solid_torus(int res, bool twisted) {
  if (res < 3) throw Error(ErrorCode::ResolutionTooSmall, "solid torus needs res >= 3");
  Triangulation out;
  out.coords.resize(kSectionVertices * res, 3);
  for (int k = 0; k < res; ++k)
    for (int j = 0; j < kSectionVertices; ++j) {
      const int v = solid_torus_vertex(j, k);
      out.coords(v, 0) = Rational(kSectionUV2[j][0], 2);
      out.coords(v, 1) = Rational(kSectionUV2[j][1], 2);
      out.coords(v, 2) = k;
    }
  std::vector<Simplex> facets;
  for (int k = 0; k < res; ++k) {
    const bool seam = twisted && k == res - 1;
    auto bottom = [k](int j) { return solid_torus_vertex(j, k); };
    auto top = [k, res, seam](int j) {
      return seam ? solid_torus_vertex(kSectionReflection[j], 0) : solid_torus_vertex(j, (k + 1) % res);
    };
    for (const auto& tri : section_triangles()) add_prism(facets, tri, bottom, top);
  }
  out.complex = build_from_facets(facets, kSectionVertices * res);
  return out;
}

Triangulation torus_surface(int res) {
  if (res < 3) throw Error(ErrorCode::ResolutionTooSmall, "torus surface needs res >= 3");
  Triangulation out;
  out.coords.resize(res * res, 3);
  auto id = [res](int i, int j) { return (i % res) * res + (j % res); };
  std::vector<Simplex> facets;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      out.coords.row(id(i, j)) << i, j, 0;
      facets.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      facets.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  out.complex = build_from_facets(facets, res * res);
  return out;
}

Triangulation prism(int layers) {
  if (layers < 1) throw Error(ErrorCode::ResolutionTooSmall, "prism needs at least one layer");
  Triangulation out;
  out.coords.resize(3 * (layers + 1), 3);
  for (int s = 0; s <= layers; ++s)
    for (int t = 0; t < 3; ++t) out.coords.row(3 * s + t) << t, s, 0;
  std::vector<Simplex> facets;
  for (int s = 0; s < layers; ++s)
    add_prism(facets, Simplex{0, 1, 2}, [s](int t) { return 3 * s + t; },
              [s](int t) { return 3 * (s + 1) + t; });
  out.complex = build_from_facets(facets, 3 * (layers + 1));
  return out;
}

}  // namespace

Triangulation triangulate(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Disk:
    case GeneratorKind::Sphere: return disk_or_sphere(g);
    case GeneratorKind::SolidTorus: return solid_torus(g.res, false);
    case GeneratorKind::TwistedSolidTorus: return solid_torus(g.res, true);
    case GeneratorKind::TorusSurface: return torus_surface(g.res);
    case GeneratorKind::Prism: return prism(g.res);
  }
  throw Error(ErrorCode::InvalidInput, "unknown generator kind");
}

SimplicialComplex generate(const Generator& g) { return triangulate(g).complex; }

}  // namespace bsg
