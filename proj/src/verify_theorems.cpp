#include "bsg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace bsg {

namespace {

/// Height construction whose domain is N, if N is a generated complex.
std::optional<MapSpec> height_spec(const SimplicialComplex& N) {
  for (int dim : {2, 3})
    if (canonical_domain(MapSpec{MapKind::HeightDisk, dim}) == N) return MapSpec{MapKind::HeightDisk, dim};
  for (int res = 4; res <= 32; ++res)
    if (canonical_domain(MapSpec{MapKind::SolidTorusHeight, 2, res}) == N)
      return MapSpec{MapKind::SolidTorusHeight, 2, res};
  return std::nullopt;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

VerificationReport verify_function_theorem(const SimplicialComplex& N, const VerifyOptions& opts) {
  const auto spec = height_spec(N);
  if (!spec) throw Error(ErrorCode::InvalidInput, "no height construction is known for this complex");
  const auto F = canonical_map(*spec, N, opts.seed);
  VerificationReport r;
  r.statement = "disk-function";
  r.inputs = std::string("height function ") + to_string(spec->kind) + " on a " + std::to_string(N.dimension()) +
             "-dimensional complex with " + std::to_string(N.vertices().size()) + " vertices";
  r.seed = opts.seed;
  r.check("height function is boundary special generic", "yes", yes_no(is_boundary_special_generic(F).ok));
  const auto G = reeb_graph(F);
  r.check("Reeb graph is a path", "yes", yes_no(G.is_path()));
  r.check("degree-1 nodes", "2", std::to_string(G.endpoints().size()));
  const int n = N.dimension();
  for (Ring ring : {Ring::Z, Ring::Z2}) {
    const auto h = homology(N, ring).padded(n + 1);
    BettiProfile point;
    point.ring = ring;
    point.betti = {1};
    r.check(std::string("homology of N over ") + (ring == Ring::Z ? "Z" : "Z/2"), describe(point.padded(n + 1)),
            describe(h));
  }
  r.check("abelianized pi1 of N", "0", describe(abelianization(pi1_presentation(N, N.vertices().front()))));
  r.unverified_notes.push_back("only constructed domains are tested; N is recognized as a disk by the invariants of "
                               "a point, not by a homeomorphism");
  return r;
}

VerificationReport verify_3manifold_theorem(int r_, int rp, int res, const VerifyOptions& opts) {
  if (r_ < 0 || rp < 0) throw Error(ErrorCode::InvalidInput, "summand counts must be non-negative");
  if (res < 4) throw Error(ErrorCode::ResolutionTooSmall, "resolution must be at least 4");
  const int k = r_ + rp;
  const MapSpec spec = k == 0 ? MapSpec{MapKind::DiskProjection, 3} : MapSpec{MapKind::SumMap, 2, res, r_, rp};
  const auto F = canonical_map(spec, opts.seed);
  VerificationReport r;
  r.statement = "three-manifold";
  r.inputs = std::string(to_string(spec.kind)) + " with r = " + std::to_string(r_) + ", r' = " + std::to_string(rp) +
             ", res = " + std::to_string(res);
  r.seed = opts.seed;
  r.check("map is boundary special generic", "yes", yes_no(is_boundary_special_generic(F).ok));

  const auto h = homology(*F.domain, Ring::Z).padded(4);
  r.check("H_1(N; Z)", describe(AbelianGroup{k, {}}), describe(AbelianGroup{h.betti[1], h.torsion[1]}));
  const auto nerve = reeb_nerve(F, opts.grid, opts.overlap).homology(Ring::Z).padded(4);
  BettiProfile expected;
  expected.betti = {1, k, 0, 0};
  expected.torsion.resize(4);
  r.check("nerve homology", describe(expected), describe(nerve));

  const auto B = boundary_subcomplex(*F.domain);
  r.check("Euler characteristic of the boundary", std::to_string(2 - 2 * k), std::to_string(B.euler_characteristic()));
  const auto orientable = is_orientable(B);
  r.check("boundary is orientable", yes_no(rp == 0), orientable ? yes_no(*orientable) : "undetermined");
  const auto hb = homology(B, Ring::Z).padded(3);
  const AbelianGroup h1b = rp == 0 ? AbelianGroup{2 * k, {}} : AbelianGroup{2 * k - 1, {Integer(2)}};
  r.check("H_1 of the boundary", describe(h1b), describe(AbelianGroup{hb.betti[1], hb.torsion[1]}));
  r.unverified_notes.push_back("invariant-level: the homeomorphism type of N is not decided");
  r.unverified_notes.push_back("the isotopy classification of the gluing maps is reflected only by the "
                               "orientability of the boundary");
  return r;
}

std::vector<VerificationReport> run_suite(const VerifyOptions& opts) {
  struct Construction {
    std::string label;
    MapSpec spec;
  };
  std::vector<Construction> maps = {{"height_disk dim 2", {MapKind::HeightDisk, 2}},
                                    {"height_disk dim 3", {MapKind::HeightDisk, 3}},
                                    {"product_solid_torus", {MapKind::ProductSolidTorus, 2, 8}},
                                    {"twisted_map", {MapKind::TwistedMap, 2, 8}}};
  std::vector<std::pair<int, int>> sums;
  for (int k = 0; k <= 3; ++k)
    for (int r = k; r >= 0; --r) sums.emplace_back(r, k - r);
  for (auto [r, rp] : sums)
    if (r + rp >= 1)
      maps.push_back({"sum_map r=" + std::to_string(r) + " r'=" + std::to_string(rp), {MapKind::SumMap, 2, 8, r, rp}});

  using Job = std::function<VerificationReport()>;
  std::vector<Job> jobs;
  using MapVerifier = VerificationReport (*)(const PLMap&, const VerifyOptions&);
  for (MapVerifier v : {&verify_reeb_structure, &verify_decomposition, &verify_cohomology_iso, &verify_pi1})
    for (const auto& c : maps)
      jobs.push_back([v, c, opts] {
        auto rep = v(canonical_map(c.spec, opts.seed), opts);
        rep.inputs = c.label + ": " + rep.inputs;
        return rep;
      });
  for (int dim : {2, 3})
    jobs.push_back([dim, opts] { return verify_function_theorem(canonical_domain({MapKind::HeightDisk, dim}), opts); });
  for (auto [r, rp] : sums) jobs.push_back([r, rp, opts] { return verify_3manifold_theorem(r, rp, 8, opts); });

  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& e) {
        out[i].statement = i < 4 * maps.size() ? statement_ids()[i / maps.size()]
                                               : statement_ids()[i < 4 * maps.size() + 2 ? 4 : 5];
        out[i].seed = opts.seed;
        out[i].check("verifier completed", "yes", e.what());
      }
    }
  };
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace bsg
