#include "doctest.h"

#include "bsg/algebra.hpp"

#include "oracles.hpp"

#include <numeric>
#include <random>

using namespace bsg;
using oracle::minor_gcd_factors;

namespace {

IntegerMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  IntegerMatrix M(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) M(i, j++) = v;
    ++i;
  }
  return M;
}

SimplicialComplex seven_vertex_torus() {
  std::vector<Simplex> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return build_from_facets(f);
}

Generator gen(GeneratorKind k, int dim = 2, int res = 8) { return Generator{k, dim, res}; }

std::vector<SimplicialComplex> test_complexes() {
  const auto st = generate(gen(GeneratorKind::SolidTorus, 2, 5));
  const auto tw = generate(gen(GeneratorKind::TwistedSolidTorus, 2, 5));
  return {generate(gen(GeneratorKind::Disk, 2)),
          generate(gen(GeneratorKind::Disk, 3)),
          generate(gen(GeneratorKind::Sphere, 2)),
          st,
          tw,
          boundary_subcomplex(st),
          boundary_subcomplex(tw),
          seven_vertex_torus(),
          generate(gen(GeneratorKind::TorusSurface, 2, 4)),
          boundary_connected_sum(st, tw)};
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix::Identity(3, 3)) == std::vector<Integer>{1, 1, 1});
  CHECK(smith_normal_form(IntegerMatrix::Zero(3, 2)).empty());
  CHECK(smith_normal_form(from_rows({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
}

TEST_CASE("smith normal form matches the minor-gcd oracle on random matrices") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9), sparse(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = dim(rng), c = dim(rng);
    IntegerMatrix M(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) M(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
    const auto got = smith_normal_form(M);
    CAPTURE(trial);
    CHECK(got == minor_gcd_factors(M));
    for (std::size_t k = 1; k < got.size(); ++k) CHECK(got[k] % got[k - 1] == 0);
    // The sparse route agrees with the dense one.
    SparseIntegerMatrix S;
    S.rows = r;
    S.cols = c;
    S.columns.resize(c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (M(i, j) != 0) S.columns[j].emplace_back(i, M(i, j).convert_to<long long>());
    const auto red = reduce_integer(S);
    CHECK(red.rank == static_cast<int>(got.size()));
    std::vector<Integer> torsion;
    for (const auto& d : got)
      if (d > 1) torsion.push_back(d);
    CHECK(red.torsion == torsion);
  }
}

TEST_CASE("homology examples") {
  const auto st = generate(gen(GeneratorKind::SolidTorus, 2, 6));
  const auto h = homology(st, Ring::Z);
  CHECK(h.betti == std::vector<int>{1, 1, 0, 0});
  for (const auto& t : h.torsion) CHECK(t.empty());

  const auto klein = boundary_subcomplex(generate(gen(GeneratorKind::TwistedSolidTorus, 2, 6)));
  const auto hk = homology(klein, Ring::Z);
  CHECK(hk.betti == std::vector<int>{1, 1, 0});
  CHECK(hk.torsion == std::vector<std::vector<Integer>>{{}, {2}, {}});
  const auto ck = homology(klein, Ring::Z, Variant::Cohomology);
  CHECK(ck.betti == std::vector<int>{1, 1, 0});
  CHECK(ck.torsion == std::vector<std::vector<Integer>>{{}, {}, {2}});
  CHECK(homology(klein, Ring::Z2).betti == std::vector<int>{1, 2, 1});
}

TEST_CASE("Euler-Poincare over both rings") {
  for (const auto& K : test_complexes()) {
    CHECK(homology(K, Ring::Z).alternating_sum() == K.euler_characteristic());
    CHECK(homology(K, Ring::Z2).alternating_sum() == K.euler_characteristic());
    CHECK(homology(K, Ring::Z2, Variant::Cohomology).alternating_sum() == K.euler_characteristic());
  }
}

TEST_CASE("edge-path presentations") {
  const auto disk = generate(gen(GeneratorKind::Disk, 2));
  CHECK(tietze_simplify(pi1_presentation(disk, 0)).generator_count == 0);

  const auto st = tietze_simplify(pi1_presentation(generate(gen(GeneratorKind::SolidTorus, 2, 6)), 0));
  CHECK(st.generator_count == 1);
  CHECK(st.relators.empty());

  CHECK(abelianization(pi1_presentation(generate(gen(GeneratorKind::TorusSurface, 2, 4)), 0)) ==
        AbelianGroup{2, {}});

  const auto t7 = seven_vertex_torus();
  REQUIRE(validate_manifold(t7).is_manifold_with_boundary);
  const auto p7 = pi1_presentation(t7, 0);
  CHECK(p7.generator_count == 21 - 6);
  CHECK(p7.relators.size() == 14);
  const auto s7 = tietze_simplify(p7);
  CHECK(s7.generator_count == 2);
  REQUIRE(s7.relators.size() == 1);
  CHECK(s7.relators[0].size() == 4);
  CHECK(abelianization(s7) == AbelianGroup{2, {}});

  CHECK_THROWS_AS(pi1_presentation(build_from_facets({{0, 1}, {2, 3}}), 0), Error);
}

TEST_CASE("tietze moves") {
  CHECK(tietze_simplify({1, {{1}}}) == GroupPresentation{0, {}});
  CHECK(tietze_simplify({2, {{2}}}) == GroupPresentation{1, {}});
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization({2, {{1, 2, -1, -2}}}) == AbelianGroup{2, {}});
  CHECK(abelianization({2, {{1, 2, 1, -2}}}) == AbelianGroup{1, {2}});
  CHECK(abelianization({0, {}}) == AbelianGroup{0, {}});
}

TEST_CASE("abelianized edge-path group equals H_1 (Hurewicz)") {
  for (const auto& K : test_complexes()) {
    const auto h = homology(K, Ring::Z);
    const auto ab = abelianization(pi1_presentation(K, K.vertices().front()));
    CHECK(ab.free_rank == h.betti[1]);
    CHECK(ab.torsion == h.torsion[1]);
  }
}

TEST_CASE("tietze simplification preserves the abelianization") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gens(1, 4), rels(0, 4), len(0, 6), coin(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    GroupPresentation P;
    P.generator_count = gens(rng);
    std::uniform_int_distribution<int> g(1, P.generator_count);
    const int nr = rels(rng);
    for (int r = 0; r < nr; ++r) {
      Word w;
      const int n = len(rng);
      for (int i = 0; i < n; ++i) w.push_back(coin(rng) ? g(rng) : -g(rng));
      P.relators.push_back(w);
    }
    CHECK(abelianization(tietze_simplify(P)) == abelianization(P));
  }
}
