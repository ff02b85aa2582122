#include "bsg/verify.hpp"

#include "slicer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bsg {

void VerificationReport::check(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  check(std::move(name), std::move(expected), std::move(actual), ok);
}

void VerificationReport::check(std::string name, std::string expected, std::string actual, bool ok) {
  details.push_back(CheckRecord{std::move(name), std::move(expected), std::move(actual), ok});
  pass = pass && ok;
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {"reeb-structure", "decomposition", "cohomology",
                                               "pi1",            "disk-function", "three-manifold"};
  return ids;
}

std::string describe(const BettiProfile& h) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < h.betti.size(); ++k) os << (k ? ", " : "") << h.betti[k];
  os << "]";
  bool first = true;
  for (std::size_t k = 0; k < h.torsion.size(); ++k)
    for (const auto& t : h.torsion[k]) {
      os << (first ? " torsion " : ", ") << "Z/" << t << " in degree " << k;
      first = false;
    }
  return os.str();
}

std::string describe(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  else if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

std::string describe_map(const PLMap& F) {
  std::ostringstream os;
  os << F.domain->dimension() << "-dimensional domain with " << F.domain->vertices().size() << " vertices and "
     << F.domain->facets().size() << " facets, target dimension " << F.target_dim();
  return os.str();
}

VerificationReport start(const std::string& id, const PLMap& F, const VerifyOptions& opts) {
  VerificationReport r;
  r.statement = id;
  r.inputs = describe_map(F);
  r.seed = opts.seed;
  return r;
}

/// Generic perturbation of F, which must be boundary special generic.
PLMap prepare(const PLMap& F, const VerifyOptions& opts) {
  auto G = ensure_generic(F, opts.seed);
  const auto sg = is_boundary_special_generic(G);
  if (!sg.ok) {
    std::string what = "map is not boundary special generic";
    if (!sg.witnesses.empty()) what += " (witness vertex " + std::to_string(sg.witnesses.front()) + ")";
    throw Error(ErrorCode::NotBoundarySpecialGeneric, what);
  }
  return G;
}

ReebNerve stable_nerve(const PLMap& F, const VerifyOptions& opts) {
  auto a = reeb_nerve(F, opts.grid, opts.overlap);
  const auto b = reeb_nerve(F, 2 * opts.grid, opts.overlap);
  for (Ring ring : {Ring::Z, Ring::Z2})
    if (!(a.homology(ring) == b.homology(ring)))
      throw Error(ErrorCode::NerveUnstable, "nerve homology differs between grid " + std::to_string(opts.grid) +
                                                " and " + std::to_string(2 * opts.grid) + "; use a finer grid");
  return a;
}

template <typename T>
std::string list(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void reeb_structure_scalar(const PLMap& F, VerificationReport& r) {
  const auto G = reeb_graph(F);
  r.check("Reeb graph components", "1", std::to_string(G.component_count()));
  int max_degree = 0;
  for (const auto& n : G.nodes) max_degree = std::max(max_degree, n.degree());
  r.check("largest node degree is at most 2", "yes", yes_no(max_degree <= 2));
  std::vector<Vertex> ends;
  int stray = 0;
  for (int i : G.endpoints()) {
    ends.push_back(G.nodes[i].vertex);
    if (G.nodes[i].kind != NodeKind::BoundaryEndpoint) ++stray;
  }
  std::sort(ends.begin(), ends.end());
  r.check("degree-1 nodes off the boundary", "0", std::to_string(stray));
  const auto folds = classify_boundary_vertices(F).with_label(FoldLabel::DefiniteFold);
  r.check("degree-1 nodes are the definite fold vertices", list(folds), list(ends));
}

void reeb_structure_planar(const PLMap& F, const VerifyOptions& opts, VerificationReport& r) {
  const auto folds = classify_boundary_vertices(F).with_label(FoldLabel::DefiniteFold);
  const auto edges = fold_edges(F);
  std::map<Vertex, int> degree;
  detail::UnionFind uf(F.domain->vertex_count());
  for (const auto& e : edges) {
    ++degree[e[0]];
    ++degree[e[1]];
    uf.unite(e[0], e[1]);
  }
  std::vector<Vertex> on_edges;
  bool circles = true;
  for (const auto& [v, d] : degree) {
    on_edges.push_back(v);
    circles = circles && d == 2;
  }
  r.check("vertices on fold edges are the definite fold vertices", list(folds), list(on_edges));
  r.check("fold edges form disjoint circles", "yes", yes_no(circles && !edges.empty()));
  std::set<int> roots;
  for (Vertex v : folds) roots.insert(uf.find(v));

  const auto N = stable_nerve(F, opts);
  const auto h = N.homology(Ring::Z).padded(4);
  r.check("nerve components", "1", std::to_string(h.betti[0]));
  r.check("nerve homology above degree 1", "[0, 0]", list(std::vector<int>{h.betti[2], h.betti[3]}));
  r.check("nerve cells over the fold image", "at least " + std::to_string(roots.size()),
          std::to_string(boundary_cells(N, F).size()), boundary_cells(N, F).size() >= roots.size());
  r.unverified_notes.push_back("singular circles found: " + std::to_string(roots.size()) +
                               "; their correspondence with the boundary of the Reeb space is not decided on the nerve");
  r.unverified_notes.push_back("manifold recognition of the nerve, orientability and the immersion into the plane "
                               "are not checked");
}

}  // namespace

VerificationReport verify_reeb_structure(const PLMap& F0, const VerifyOptions& opts) {
  const auto F = prepare(F0, opts);
  auto r = start("reeb-structure", F, opts);
  if (F.target_dim() == 1) reeb_structure_scalar(F, r);
  else reeb_structure_planar(F, opts, r);
  return r;
}

VerificationReport verify_decomposition(const PLMap& F0, const VerifyOptions& opts) {
  const auto F = prepare(F0, opts);
  auto r = start("decomposition", F, opts);
  const auto D = decompose(F, opts.depth, opts.grid, opts.min_samples);
  std::vector<int> all = D.collar_cells;
  all.insert(all.end(), D.core_cells.begin(), D.core_cells.end());
  std::sort(all.begin(), all.end());
  const bool partition = static_cast<int>(all.size()) == D.cell_count &&
                         std::adjacent_find(all.begin(), all.end()) == all.end();
  r.check("collar and core partition the cells", "yes", yes_no(partition));
  r.check("collar cells", "at least 1", std::to_string(D.collar_cells.size()), !D.collar_cells.empty());
  const int n = F.domain->dimension(), m = F.target_dim();
  int core = 0, core_ok = 0, collar = 0, collar_ok = 0;
  for (const auto& f : D.fibers) {
    (f.collar ? collar : core)++;
    if (f.ok()) (f.collar ? collar_ok : core_ok)++;
  }
  r.check("regular sample points", "at least " + std::to_string(opts.min_samples), std::to_string(core),
          core >= opts.min_samples);
  r.check("acyclic core fibres of dimension " + std::to_string(n - m), std::to_string(core),
          std::to_string(core_ok));
  r.check("acyclic collar fibres of dimension " + std::to_string(n - m + 1), std::to_string(collar),
          std::to_string(collar_ok));
  r.unverified_notes.push_back("fibre bundle structure is checked fibrewise at sample points only");
  return r;
}

VerificationReport verify_cohomology_iso(const PLMap& F0, const VerifyOptions& opts) {
  const auto F = prepare(F0, opts);
  auto r = start("cohomology", F, opts);
  const int n = F.domain->dimension(), m = F.target_dim();
  std::optional<ReebGraph> G;
  std::optional<ReebNerve> N;
  if (m == 1) G = reeb_graph(F);
  else N = stable_nerve(F, opts);
  for (Ring ring : {Ring::Z, Ring::Z2}) {
    const std::string R = ring == Ring::Z ? "Z" : "Z/2";
    const auto hN = homology(*F.domain, ring, Variant::Cohomology).padded(n + 1);
    const auto hW = (G ? homology(*G, ring, Variant::Cohomology) : N->homology(ring, Variant::Cohomology)).padded(n + 1);
    r.check("H^*(N; " + R + ") against H^*(W_F; " + R + ")", describe(hN), describe(hW));
    for (int k = m + 1; k <= n; ++k) {
      const bool zero = hN.betti[k] == 0 && hN.torsion[k].empty();
      r.check("H^" + std::to_string(k) + "(N; " + R + ") vanishes", "yes", yes_no(zero));
    }
  }
  if (N) r.unverified_notes.push_back("W_F is represented by a cover nerve, stable between grids " +
                                      std::to_string(opts.grid) + " and " + std::to_string(2 * opts.grid));
  return r;
}

VerificationReport verify_pi1(const PLMap& F0, const VerifyOptions& opts) {
  const auto F = prepare(F0, opts);
  auto r = start("pi1", F, opts);
  const auto PN = pi1_presentation(*F.domain, F.domain->vertices().front());
  GroupPresentation PW;
  if (F.target_dim() == 1) PW = pi1_presentation(reeb_graph(F));
  else PW = pi1_presentation(stable_nerve(F, opts).face_index(), 0);
  r.check("abelianized pi1 of N against W_F", describe(abelianization(PN)), describe(abelianization(PW)));
  const auto SN = tietze_simplify(PN), SW = tietze_simplify(PW);
  if (SN.relators.empty() && SW.relators.empty())
    r.check("free rank of pi1 of N against W_F", std::to_string(SN.generator_count), std::to_string(SW.generator_count));
  else
    r.unverified_notes.push_back("presentations did not both simplify to free ones; free ranks not compared");
  r.unverified_notes.push_back("abelianization-level only: isomorphism of the fundamental groups is not decided");
  return r;
}

}  // namespace bsg
