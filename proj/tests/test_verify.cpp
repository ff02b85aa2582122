#include "doctest.h"

#include "bsg/verify.hpp"

using namespace bsg;

namespace {

MapSpec spec(MapKind k, int dim = 2, int res = 8, int r = 1, int rp = 0) { return MapSpec{k, dim, res, r, rp}; }

bool conjunction(const VerificationReport& r) {
  for (const auto& d : r.details)
    if (!d.pass) return false;
  return true;
}

const CheckRecord* find(const VerificationReport& r, const std::string& name) {
  for (const auto& d : r.details)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

TEST_CASE("report pass is the conjunction of its records") {
  VerificationReport r;
  CHECK(r.pass);
  r.check("a", "1", "1");
  CHECK(r.pass);
  r.check("b", "1", "2");
  CHECK_FALSE(r.pass);
  r.check("c", "x", "y", true);
  CHECK_FALSE(r.pass);
  CHECK(r.details.size() == 3);
  CHECK_FALSE(r.details[1].pass);
}

TEST_CASE("descriptions") {
  CHECK(describe(AbelianGroup{0, {}}) == "0");
  CHECK(describe(AbelianGroup{1, {}}) == "Z");
  CHECK(describe(AbelianGroup{2, {Integer(2), Integer(6)}}) == "Z^2 + Z/2 + Z/6");
  BettiProfile h;
  h.betti = {1, 0, 0};
  h.torsion = {{}, {Integer(2)}, {}};
  CHECK(describe(h) == "[1, 0, 0] torsion Z/2 in degree 1");
}

TEST_CASE("map verifiers pass on the standard constructions") {
  for (const auto& s : {spec(MapKind::HeightDisk, 2), spec(MapKind::HeightDisk, 3), spec(MapKind::ProductSolidTorus),
                        spec(MapKind::TwistedMap), spec(MapKind::SumMap, 2, 8, 1, 1)}) {
    const auto F = canonical_map(s);
    for (const auto& r : {verify_reeb_structure(F), verify_decomposition(F), verify_cohomology_iso(F), verify_pi1(F)}) {
      INFO(r.statement << " on " << r.inputs);
      CHECK(r.pass);
      CHECK(r.pass == conjunction(r));
      CHECK_FALSE(r.details.empty());
    }
  }
}

TEST_CASE("cohomology verifier compares both rings and the vanishing range") {
  const auto r = verify_cohomology_iso(canonical_map(spec(MapKind::SumMap, 2, 8, 1, 1)));
  const auto* z = find(r, "H^*(N; Z) against H^*(W_F; Z)");
  REQUIRE(z);
  CHECK(z->expected == "[1, 2, 0, 0]");
  CHECK(find(r, "H^*(N; Z/2) against H^*(W_F; Z/2)"));
  CHECK(find(r, "H^3(N; Z) vanishes"));
  const auto d = verify_cohomology_iso(canonical_map(spec(MapKind::HeightDisk, 3)));
  CHECK(find(d, "H^2(N; Z/2) vanishes"));
  CHECK(find(d, "H^3(N; Z) vanishes"));
}

TEST_CASE("pi1 verifier compares free ranks and notes its limits") {
  const auto r = verify_pi1(canonical_map(spec(MapKind::SumMap, 2, 8, 2, 0)));
  const auto* ab = find(r, "abelianized pi1 of N against W_F");
  REQUIRE(ab);
  CHECK(ab->expected == "Z^2");
  const auto* rank = find(r, "free rank of pi1 of N against W_F");
  REQUIRE(rank);
  CHECK(rank->actual == "2");
  CHECK_FALSE(r.unverified_notes.empty());
}

TEST_CASE("saddle control is rejected by every map verifier") {
  const auto S = canonical_map(spec(MapKind::SaddleControl));
  using V = VerificationReport (*)(const PLMap&, const VerifyOptions&);
  for (V v : {V(&verify_reeb_structure), V(&verify_decomposition), V(&verify_cohomology_iso), V(&verify_pi1)}) {
    try {
      v(S, {});
      FAIL("verifier accepted the saddle map");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotBoundarySpecialGeneric);
    }
  }
}

TEST_CASE("function theorem on disks and on the solid torus") {
  for (int dim : {2, 3}) {
    const auto r = verify_function_theorem(canonical_domain(spec(MapKind::HeightDisk, dim)));
    CHECK(r.pass);
    CHECK(r.statement == "disk-function");
  }
  const auto bad = verify_function_theorem(canonical_domain(spec(MapKind::SolidTorusHeight)));
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(find(bad, "height function is boundary special generic")->pass);
  CHECK_FALSE(find(bad, "Reeb graph is a path")->pass);
  CHECK_THROWS_AS(verify_function_theorem(generate(Generator{GeneratorKind::Sphere, 2})), Error);
}

TEST_CASE("three-manifold verifier") {
  const auto klein = verify_3manifold_theorem(0, 1);
  CHECK(klein.pass);
  CHECK(find(klein, "boundary is orientable")->actual == "no");
  CHECK(find(klein, "H_1 of the boundary")->actual == "Z + Z/2");
  const auto r21 = verify_3manifold_theorem(2, 1);
  CHECK(r21.pass);
  CHECK(find(r21, "H_1(N; Z)")->actual == "Z^3");
  CHECK(find(r21, "Euler characteristic of the boundary")->actual == "-4");
  CHECK(verify_3manifold_theorem(0, 0).pass);
  CHECK_THROWS_AS(verify_3manifold_theorem(1, 0, 3), Error);
  CHECK_THROWS_AS(verify_3manifold_theorem(-1, 0), Error);
}

TEST_CASE("verifiers are deterministic for a seed") {
  VerifyOptions a;
  a.seed = 42;
  const auto F = canonical_map(spec(MapKind::TwistedMap));
  const auto r1 = verify_decomposition(F, a), r2 = verify_decomposition(F, a);
  REQUIRE(r1.details.size() == r2.details.size());
  for (std::size_t i = 0; i < r1.details.size(); ++i) CHECK(r1.details[i].actual == r2.details[i].actual);
  CHECK(r1.seed == 42);
}

TEST_CASE("statement ids") {
  CHECK(statement_ids() == std::vector<std::string>{"reeb-structure", "decomposition", "cohomology", "pi1",
                                                    "disk-function", "three-manifold"});
}
