#include "doctest.h"

#include "bsg/cli.hpp"
#include "bsg/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace bsg;
namespace fs = std::filesystem;

namespace {

MapSpec spec(MapKind k, int dim = 2, int res = 8, int r = 1, int rp = 0) { return MapSpec{k, dim, res, r, rp}; }

struct Run {
  int code;
  std::string out, err;
};

Run bsg_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "bsg_io_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("rationals as strings") {
  for (const auto& q : {Rational(0), Rational(-7), Rational(3, 4), Rational(-22, 7)})
    CHECK(io::rational_from_string(io::to_string(q)) == q);
  CHECK(io::to_string(Rational(6, 8)) == "3/4");
  CHECK(io::rational_from_string("123456789012345678901234567890/7") ==
        Rational(Integer("123456789012345678901234567890"), Integer(7)));
  for (const char* bad : {"", "1.5", "1/0", "a/b", "1/-2", "1 / 2"}) CHECK_THROWS_AS(io::rational_from_string(bad), Error);
}

TEST_CASE("complex and map round trips") {
  for (const auto& s : {spec(MapKind::HeightDisk, 3), spec(MapKind::TwistedMap), spec(MapKind::SumMap, 2, 8, 1, 1)}) {
    const auto F = canonical_map(s);
    const auto j = io::to_json(F, to_string(s.kind));
    const auto text = j.dump();
    const auto G = io::map_from_json(io::Json::parse(text));
    CHECK(*G.domain == *F.domain);
    CHECK(G.values == F.values);
    CHECK(io::to_json(G, to_string(s.kind)).dump() == text);
    CHECK(io::complex_from_json(io::to_json(*F.domain)) == *F.domain);
  }
}

TEST_CASE("malformed documents are input errors") {
  auto j = io::to_json(canonical_map(spec(MapKind::HeightDisk)));
  auto missing = j;
  missing.erase("values");
  auto short_rows = j;
  short_rows["values"].erase(0);
  auto bad_facet = io::to_json(generate(Generator{GeneratorKind::Disk, 2}));
  bad_facet["facets"][0][0] = 9999;
  for (const auto& doc : {missing, short_rows}) {
    try {
      io::map_from_json(doc);
      FAIL("accepted a malformed map");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
  }
  CHECK_THROWS_AS(io::complex_from_json(bad_facet), Error);
  CHECK_THROWS_AS(io::read_json((scratch() / "does_not_exist.json").string()), Error);
  io::write_text((scratch() / "broken.json").string(), "{ not json");
  CHECK_THROWS_AS(io::read_json((scratch() / "broken.json").string()), Error);
}

TEST_CASE("Betti profiles and reports round trip") {
  BettiProfile h;
  h.ring = Ring::Z;
  h.betti = {1, 1, 0};
  h.torsion = {{}, {Integer(2)}, {}};
  CHECK(io::betti_from_json(io::to_json(h)) == h);
  h.ring = Ring::Z2;
  h.torsion = {{}, {}, {}};
  CHECK(io::betti_from_json(io::to_json(h)) == h);

  const auto r = verify_3manifold_theorem(0, 1);
  const auto j = io::to_json(r);
  const auto back = io::report_from_json(io::Json::parse(j.dump()));
  CHECK(io::to_json(back) == j);
  auto lie = j;
  lie["pass"] = !r.pass;
  CHECK_THROWS_AS(io::report_from_json(lie), Error);
}

TEST_CASE("Reeb outputs") {
  const auto G = reeb_graph(canonical_map(spec(MapKind::TorusHeight)));
  const auto dot = io::to_dot(G);
  CHECK(dot.rfind("graph reeb {", 0) == 0);
  std::size_t arcs = 0;
  for (auto at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++arcs;
  CHECK(arcs == G.edges.size());
  const auto j = io::to_json(G);
  CHECK(j.at("nodes").size() == G.nodes.size());
  CHECK(j.at("edges").size() == G.edges.size());
  const auto N = reeb_nerve(canonical_map(spec(MapKind::ProductSolidTorus)), 8, Rational(1, 3));
  const auto nj = io::to_json(N);
  CHECK(nj.at("vertices").size() == N.vertices.size());
  CHECK(io::betti_from_json(nj.at("homology")) == N.homology(Ring::Z));
}

TEST_CASE("CLI generate, map, reeb and classify") {
  const auto dir = scratch();
  const auto cx = (dir / "torus.json").string(), mp = (dir / "torus_map.json").string();
  CHECK(bsg_run({"generate", "torus_surface", "--res", "6", "--out", cx}).code == 0);
  CHECK(io::complex_from_json(io::read_json(cx)) == generate(Generator{GeneratorKind::TorusSurface, 2, 6}));
  CHECK(bsg_run({"map", "torus_height", "--complex", cx, "--out", mp}).code == 2);  // domain is not res 8
  CHECK(bsg_run({"map", "torus_height", "--complex", cx, "--res", "6", "--out", mp}).code == 0);
  const auto dot = bsg_run({"reeb", "--map", mp, "--out", (dir / "g.dot").string()});
  CHECK(dot.code == 0);
  CHECK(io::read_json(mp).at("kind") == "torus_height");

  const auto sd = (dir / "saddle.json").string();
  CHECK(bsg_run({"map", "saddle_control", "--out", sd}).code == 0);
  const auto c = bsg_run({"classify", "--map", sd});
  CHECK(c.code == 1);
  CHECK(c.out.find("non_definite") != std::string::npos);
  const auto pm = (dir / "product.json").string();
  CHECK(bsg_run({"map", "product_solid_torus", "--out", pm}).code == 0);
  CHECK(bsg_run({"classify", "--map", pm}).code == 0);
  CHECK(bsg_run({"reeb", "--map", pm, "--out", (dir / "n.dot").string()}).code == 2);
  CHECK(bsg_run({"reeb", "--map", pm, "--grid", "2"}).code == 2);
}

TEST_CASE("CLI verify exit codes and reports") {
  const auto dir = scratch();
  const auto rep = (dir / "report.json").string();
  const auto ok = bsg_run({"verify", "three-manifold", "--r", "1", "--rp", "1", "--seed", "7", "--out", rep});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("PASS", 0) == 0);
  const auto r = io::report_from_json(io::read_json(rep));
  CHECK(r.pass);
  CHECK(r.seed == 7);

  const auto sd = (dir / "saddle.json").string();
  CHECK(bsg_run({"map", "saddle_control", "--out", sd}).code == 0);
  const auto bad = bsg_run({"verify", "reeb-structure", "--map", sd});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("precondition") != std::string::npos);

  const auto missing = bsg_run({"verify", "cohomology", "--map", (dir / "nope.json").string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);
  CHECK(bsg_run({"verify", "no-such-statement"}).code == 2);
  CHECK(bsg_run({"verify", "pi1"}).code == 2);
  CHECK(bsg_run({"frobnicate"}).code == 2);
  CHECK(bsg_run({}).code == 2);
  CHECK(bsg_run({"--help"}).code == 0);
}

TEST_CASE("seed falls back to REEB_SEED") {
  const auto rep = (scratch() / "seeded.json").string();
  setenv("REEB_SEED", "31", 1);
  CHECK(bsg_run({"verify", "disk-function", "--out", rep}).code == 0);
  CHECK(io::report_from_json(io::read_json(rep)).seed == 31);
  CHECK(bsg_run({"verify", "disk-function", "--seed", "5", "--out", rep}).code == 0);
  CHECK(io::report_from_json(io::read_json(rep)).seed == 5);
  setenv("REEB_SEED", "seven", 1);
  CHECK(bsg_run({"verify", "disk-function"}).code == 2);
  unsetenv("REEB_SEED");
  CHECK(bsg_run({"verify", "disk-function", "--out", rep}).code == 0);
  CHECK(io::report_from_json(io::read_json(rep)).seed == 1);
}
