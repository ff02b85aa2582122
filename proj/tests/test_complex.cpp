#include "doctest.h"

#include "bsg/algebra.hpp"
#include "bsg/complex.hpp"

using namespace bsg;

namespace {

SimplicialComplex octahedron() {
  // Vertices 0/1 = +-x, 2/3 = +-y, 4/5 = +-z.
  std::vector<Simplex> f;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) f.push_back({x, y, z});
  return build_from_facets(f);
}

Generator gen(GeneratorKind k, int dim = 2, int res = 8) { return Generator{k, dim, res}; }

bool boundary_squares_vanish(const SimplicialComplex& K) {
  const auto C = chain_complex(K);
  for (int k = 2; k <= C.dimension(); ++k) {
    const IntegerMatrix prod = C.boundaries[k - 1].to_dense() * C.boundaries[k].to_dense();
    if (!prod.isZero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("single triangle") {
  const auto K = build_from_facets({{0, 1, 2}});
  CHECK(K.dimension() == 2);
  CHECK(K.faces().count(0) == 3);
  CHECK(K.faces().count(1) == 3);
  CHECK(K.faces().count(2) == 1);
  CHECK(boundary_data(K).boundary_facets.size() == 3);
  const auto report = validate_manifold(K);
  CHECK(report.is_manifold_with_boundary);
  CHECK(report.orientable == true);
}

TEST_CASE("facets are canonicalized with orientation parity") {
  const auto K = build_from_facets({{2, 0, 1}, {1, 3, 2}, {0, 1, 2}});
  REQUIRE(K.facets().size() == 2);
  CHECK(K.facets()[0] == Simplex{0, 1, 2});
  CHECK(K.facet_orientations()[0] == 1);  // (2,0,1) is an even permutation
  CHECK(K.facets()[1] == Simplex{1, 2, 3});
  CHECK(K.facet_orientations()[1] == -1);
}

TEST_CASE("octahedron is a closed sphere") {
  const auto K = octahedron();
  CHECK(K.euler_characteristic() == 2);
  CHECK(boundary_data(K).is_closed);
  CHECK(boundary_subcomplex(K).empty());
  CHECK(validate_manifold(K).is_manifold_with_boundary);
}

TEST_CASE("construction errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code_of([] { build_from_facets({{0, 1, 2}, {3, 4}}); }) == ErrorCode::NonPureComplex);
  CHECK(code_of([] { build_from_facets({}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { build_from_facets({{0, 1, 1}}); }) == ErrorCode::DuplicateVertexInFacet);
  CHECK(code_of([] { generate(gen(GeneratorKind::SolidTorus, 2, 2)); }) == ErrorCode::ResolutionTooSmall);
  CHECK(code_of([] { generate(gen(GeneratorKind::Disk, 4)); }) == ErrorCode::UnsupportedDimension);
  const auto three_fins = build_from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK(code_of([&] { boundary_subcomplex(three_fins); }) == ErrorCode::NotPseudoManifold);
}

TEST_CASE("boundary subcomplexes") {
  const auto tet = build_from_facets({{0, 1, 2, 3}});
  const auto b = boundary_subcomplex(tet);
  CHECK(b.facets().size() == 4);
  CHECK(b.euler_characteristic() == 2);

  // Boundary torus of the product triangulation: 6 rim vertices per slice,
  // rim, vertical and diagonal edges per slice, two triangles per square.
  const int res = 8;
  const auto torus = boundary_subcomplex(generate(gen(GeneratorKind::SolidTorus, 2, res)));
  CHECK(torus.faces().count(0) == 6 * res);
  CHECK(torus.faces().count(1) == 3 * 6 * res);
  CHECK(torus.faces().count(2) == 2 * 6 * res);
  CHECK(torus.euler_characteristic() == 6 * res - 18 * res + 12 * res);
}

TEST_CASE("pinched triangles fail at the shared vertex") {
  const auto K = build_from_facets({{0, 1, 2}, {0, 3, 4}});
  const auto report = validate_manifold(K);
  CHECK(report.is_pseudo_manifold);
  CHECK_FALSE(report.is_manifold_with_boundary);
  REQUIRE(report.failing_faces.size() == 1);
  CHECK(report.failing_faces[0] == Simplex{0});
}

TEST_CASE("twisted solid torus is a non-orientable manifold") {
  const auto N = generate(gen(GeneratorKind::TwistedSolidTorus, 2, 6));
  const auto report = validate_manifold(N);
  CHECK(report.is_manifold_with_boundary);
  CHECK(report.connected);
  CHECK(report.orientable == false);
  // Independent check: the boundary surface has H_2(;Z) = 0, so it is a
  // non-orientable closed surface, which forces N to be non-orientable.
  const auto hb = homology(boundary_subcomplex(N), Ring::Z);
  CHECK(hb.betti == std::vector<int>{1, 1, 0});
  CHECK(hb.torsion[1] == std::vector<Integer>{2});
  CHECK(is_orientable(generate(gen(GeneratorKind::SolidTorus, 2, 6))) == true);
}

TEST_CASE("generators") {
  const auto d2 = generate(gen(GeneratorKind::Disk, 2));
  CHECK(d2.euler_characteristic() == 1);
  const auto c = boundary_subcomplex(d2);
  CHECK(c.euler_characteristic() == 0);
  CHECK(is_connected(c));
  CHECK(generate(gen(GeneratorKind::Disk, 3)).euler_characteristic() == 1);
  CHECK(generate(gen(GeneratorKind::Sphere, 2)).euler_characteristic() == 2);
  CHECK(generate(gen(GeneratorKind::Sphere, 3)).euler_characteristic() == 0);
  CHECK(generate(gen(GeneratorKind::TorusSurface, 2, 5)).euler_characteristic() == 0);
  const auto p = generate(gen(GeneratorKind::Prism, 2, 3));
  CHECK(validate_manifold(p).is_manifold_with_boundary);
  CHECK(p.euler_characteristic() == 1);
}

TEST_CASE("generated complexes are manifolds for every resolution") {
  for (int res = 3; res <= 12; ++res) {
    for (auto kind : {GeneratorKind::SolidTorus, GeneratorKind::TwistedSolidTorus, GeneratorKind::TorusSurface}) {
      const auto K = generate(gen(kind, 2, res));
      CAPTURE(res);
      CHECK(validate_manifold(K).is_manifold_with_boundary);
      CHECK(generate(gen(kind, 2, res)) == K);  // deterministic
    }
  }
  for (int n = 1; n <= 3; ++n) CHECK(validate_manifold(generate(gen(GeneratorKind::Disk, n))).is_manifold_with_boundary);
}

TEST_CASE("boundary operator squares to zero and boundaries are closed") {
  std::vector<SimplicialComplex> all = {
      generate(gen(GeneratorKind::Disk, 3)), generate(gen(GeneratorKind::SolidTorus, 2, 5)),
      generate(gen(GeneratorKind::TwistedSolidTorus, 2, 4)), generate(gen(GeneratorKind::Prism, 2, 2)),
      barycentric_subdivision(generate(gen(GeneratorKind::Disk, 2))).complex};
  for (const auto& K : all) {
    CHECK(boundary_squares_vanish(K));
    CHECK(boundary_data(boundary_subcomplex(K)).is_closed);
  }
}

TEST_CASE("boundary connected sums") {
  const auto d2 = generate(gen(GeneratorKind::Disk, 2));
  // 2-dimensional summands glue along an edge (chi 1).
  const auto dd = boundary_connected_sum(d2, d2);
  CHECK(dd.euler_characteristic() == 1);
  CHECK(homology(dd, Ring::Z).betti == std::vector<int>{1, 0, 0});
  CHECK(validate_manifold(dd).is_manifold_with_boundary);

  const auto st = generate(gen(GeneratorKind::SolidTorus, 2, 6));
  const auto tw = generate(gen(GeneratorKind::TwistedSolidTorus, 2, 6));

  const auto ss = boundary_connected_sum(st, st);
  CHECK(validate_manifold(ss).is_manifold_with_boundary);
  CHECK(ss.euler_characteristic() == st.euler_characteristic() * 2 - 1);
  CHECK(homology(ss, Ring::Z).betti == std::vector<int>{1, 2, 0, 0});
  const auto bss = boundary_subcomplex(ss);
  CHECK(bss.euler_characteristic() == -2);
  CHECK(is_orientable(bss) == true);

  const auto stw = boundary_connected_sum(st, tw);
  CHECK(validate_manifold(stw).is_manifold_with_boundary);
  CHECK(stw.euler_characteristic() == st.euler_characteristic() + tw.euler_characteristic() - 1);
  CHECK(homology(stw, Ring::Z).betti == std::vector<int>{1, 2, 0, 0});
  const auto bstw = boundary_subcomplex(stw);
  CHECK(bstw.euler_characteristic() == -2);
  CHECK(is_orientable(bstw) == false);

  CHECK_THROWS_AS(boundary_connected_sum(st, d2), Error);
  CHECK_THROWS_AS(boundary_connected_sum(st, generate(gen(GeneratorKind::Sphere, 3))), Error);
}

TEST_CASE("barycentric subdivision preserves homology") {
  const auto tw = generate(gen(GeneratorKind::TwistedSolidTorus, 2, 3));
  const auto sd = barycentric_subdivision(tw);
  CHECK(sd.complex.facets().size() == tw.facets().size() * 24);
  CHECK(homology(sd.complex, Ring::Z) == homology(tw, Ring::Z));
  CHECK(validate_manifold(sd.complex).is_manifold_with_boundary);
}
