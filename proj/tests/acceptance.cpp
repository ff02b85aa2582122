// One line per acceptance criterion; exit status is the number of failures.

#include "bsg/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace bsg;

namespace {

MapSpec spec(MapKind k, int dim = 2, int res = 8, int r = 1, int rp = 0) { return MapSpec{k, dim, res, r, rp}; }

std::vector<std::pair<int, int>> sum_counts(int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int total = lo; total <= hi; ++total)
    for (int rp = 0; rp <= total; ++rp) out.emplace_back(total - rp, rp);
  return out;
}

/// disk(2), disk(3), the two solid tori and every sum with 1 <= r + r' <= 3.
std::vector<MapSpec> matrix() {
  std::vector<MapSpec> out{spec(MapKind::HeightDisk, 2), spec(MapKind::HeightDisk, 3), spec(MapKind::ProductSolidTorus),
                           spec(MapKind::TwistedMap)};
  for (auto [r, rp] : sum_counts(1, 3)) out.push_back(spec(MapKind::SumMap, 2, 8, r, rp));
  return out;
}

std::vector<MapSpec> planar() {
  std::vector<MapSpec> out{spec(MapKind::ProductSolidTorus), spec(MapKind::TwistedMap)};
  for (auto [r, rp] : sum_counts(1, 3)) out.push_back(spec(MapKind::SumMap, 2, 8, r, rp));
  out.push_back(spec(MapKind::DiskProjection, 3));
  return out;
}

/// Betti number of the domain's first homology that a construction should carry.
int expected_rank(const MapSpec& s) {
  switch (s.kind) {
    case MapKind::ProductSolidTorus:
    case MapKind::TwistedMap: return 1;
    case MapKind::SumMap: return s.r + s.rp;
    default: return 0;
  }
}

std::string label(const MapSpec& s) {
  std::ostringstream os;
  os << to_string(s.kind);
  if (s.kind == MapKind::HeightDisk || s.kind == MapKind::DiskProjection) os << "(" << s.dim << ")";
  if (s.kind == MapKind::SumMap) os << "(" << s.r << "," << s.rp << ")";
  return os.str();
}

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 for no time limit
  std::function<Outcome()> body;
};

bool report_ok(const VerificationReport& r, Outcome& o, const std::string& what) {
  o.require(r.pass, what + " failed");
  return r.pass;
}

template <class F>
void guarded(Outcome& o, const std::string& what, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    o.require(false, what + ": " + e.what());
  }
}

Outcome disk_functions() {
  Outcome o;
  for (int dim : {2, 3}) {
    const auto name = "disk(" + std::to_string(dim) + ")";
    const auto start = std::chrono::steady_clock::now();
    guarded(o, name, [&] {
      report_ok(verify_function_theorem(canonical_domain(spec(MapKind::HeightDisk, dim))), o, "disk-function on " + name);
    });
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(s < 5, name + " took " + std::to_string(s) + " s");
  }
  return o;
}

Outcome cohomology_matrix() {
  Outcome o;
  for (const auto& s : matrix())
    guarded(o, label(s), [&] { report_ok(verify_cohomology_iso(canonical_map(s)), o, "cohomology on " + label(s)); });
  return o;
}

Outcome pi1_matrix() {
  Outcome o;
  for (const auto& s : matrix())
    guarded(o, label(s), [&] {
      const auto F = canonical_map(s);
      report_ok(verify_pi1(F), o, "pi1 on " + label(s));
      const auto ab = abelianization(pi1_presentation(*F.domain, 0));
      o.require(ab == AbelianGroup{expected_rank(s), {}}, "abelianized pi1 of " + label(s) + " is " + describe(ab));
    });
  return o;
}

Outcome decomposition_matrix() {
  Outcome o;
  for (const auto& s : matrix())
    guarded(o, label(s), [&] {
      const auto F = canonical_map(s);
      report_ok(verify_decomposition(F), o, "decomposition on " + label(s));
      const auto D = decompose(F);
      int core = 0;
      for (const auto& f : D.fibers) core += !f.collar;
      o.require(core >= 50, label(s) + " has " + std::to_string(core) + " core samples");
    });
  return o;
}

Outcome three_manifolds() {
  Outcome o;
  for (auto [r, rp] : sum_counts(0, 3))
    guarded(o, "three-manifold", [&] {
      report_ok(verify_3manifold_theorem(r, rp), o,
                "three-manifold with r=" + std::to_string(r) + " r'=" + std::to_string(rp));
    });
  return o;
}

Outcome negative_controls() {
  Outcome o;
  guarded(o, "controls", [&] {
    const auto sg = is_boundary_special_generic(canonical_map(spec(MapKind::SaddleControl)));
    o.require(!sg.ok, "saddle map accepted");
    o.require(sg.witnesses == std::vector<Vertex>{saddle_control_vertex()}, "wrong saddle witness");
    const auto G = reeb_graph(canonical_map(spec(MapKind::TorusHeight)));
    o.require(homology(G, Ring::Z).padded(2).betti[1] == 1, "torus Reeb graph b1 is not 1");
    o.require(!G.is_path(), "torus Reeb graph is a path");
  });
  return o;
}

Outcome algebra_oracles() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int r = dim(rng), c = dim(rng);
    IntegerMatrix M(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) M(i, j) = entry(rng);
    mismatches += smith_normal_form(M) != oracle::minor_gcd_factors(M);
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " of 200 matrices disagree with the minor-gcd oracle");

  std::vector<std::pair<std::string, SimplicialComplex>> complexes;
  for (int d = 1; d <= 3; ++d) {
    complexes.emplace_back("disk(" + std::to_string(d) + ")", generate(Generator{GeneratorKind::Disk, d}));
    complexes.emplace_back("sphere(" + std::to_string(d) + ")", generate(Generator{GeneratorKind::Sphere, d}));
  }
  for (int res : {4, 8}) {
    const auto tag = "(" + std::to_string(res) + ")";
    complexes.emplace_back("solid_torus" + tag, generate(Generator{GeneratorKind::SolidTorus, 2, res}));
    complexes.emplace_back("twisted_solid_torus" + tag, generate(Generator{GeneratorKind::TwistedSolidTorus, 2, res}));
    complexes.emplace_back("torus_surface" + tag, generate(Generator{GeneratorKind::TorusSurface, 2, res}));
    complexes.emplace_back("prism" + tag, generate(Generator{GeneratorKind::Prism, 2, res}));
  }
  for (auto [r, rp] : sum_counts(1, 3))
    complexes.emplace_back(label(spec(MapKind::SumMap, 2, 8, r, rp)), canonical_domain(spec(MapKind::SumMap, 2, 8, r, rp)));
  for (const auto& [name, K] : complexes)
    guarded(o, name, [&] {
      const auto h = homology(K, Ring::Z).padded(2);
      const AbelianGroup h1{h.betti[1], h.torsion[1]};
      const auto ab = abelianization(pi1_presentation(K, K.vertices().front()));
      o.require(ab == h1, name + ": abelianized pi1 " + describe(ab) + " but H1 " + describe(h1));
    });
  return o;
}

Outcome nerve_stability() {
  Outcome o;
  for (const auto& s : planar())
    guarded(o, label(s), [&] {
      const auto F = canonical_map(s);
      const auto coarse = reeb_nerve(F, 8, Rational(1, 3)), fine = reeb_nerve(F, 16, Rational(1, 3));
      for (Ring ring : {Ring::Z, Ring::Z2}) {
        const auto a = coarse.homology(ring).padded(4), b = fine.homology(ring).padded(4);
        o.require(a == b, label(s) + ": " + describe(a) + " at g=8 but " + describe(b) + " at g=16");
      }
    });
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "disk-function on disk(2) and disk(3), under 5 s each", 0, disk_functions},
      {2, "cohomology of N and W_F over Z and Z/2, full matrix", 60, cohomology_matrix},
      {3, "abelianized pi1 of N and W_F, free rank r + r'", 30, pi1_matrix},
      {4, "collar and core fibres, at least 50 core samples each", 0, decomposition_matrix},
      {5, "H_1, boundary Euler characteristic and orientability, 0 <= r + r' <= 3", 0, three_manifolds},
      {6, "saddle rejected with its witness, torus Reeb graph has b1 = 1", 0, negative_controls},
      {7, "Smith form against minor gcds, abelianized pi1 against H_1", 0, algebra_oracles},
      {8, "nerve homology equal at grid 8 and 16", 0, nerve_stability},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.body();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      std::ostringstream os;
      os << "took " << s << " s, limit " << c.limit_s << " s";
      o.require(false, os.str());
    }
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title.c_str(), s,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed;
}
