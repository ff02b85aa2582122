#include "bsg/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace bsg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPureComplex: return "NonPureComplex";
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotPseudoManifold: return "NotPseudoManifold";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ResolutionTooSmall: return "ResolutionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ClosedSummand: return "ClosedSummand";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::ClosedDomain: return "ClosedDomain";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::DegenerateQueryPoint: return "DegenerateQueryPoint";
    case ErrorCode::NotBoundarySpecialGeneric: return "NotBoundarySpecialGeneric";
    case ErrorCode::NerveUnstable: return "NerveUnstable";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

// FaceIndex ----------------------------------------------------------------

FaceIndex::FaceIndex(const std::vector<Simplex>& generators) {
  std::vector<std::set<Simplex>> by_dim;
  for (const auto& g : generators) {
    const int n = static_cast<int>(g.size());
    if (n == 0) continue;
    if (static_cast<int>(by_dim.size()) < n) by_dim.resize(n);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(g[i]);
      by_dim[face.size() - 1].insert(std::move(face));
    }
  }
  faces_.resize(by_dim.size());
  ids_.resize(by_dim.size());
  cofacets_.resize(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    faces_[d].assign(by_dim[d].begin(), by_dim[d].end());
    for (std::size_t i = 0; i < faces_[d].size(); ++i) ids_[d].emplace(faces_[d][i], static_cast<int>(i));
    cofacets_[d].resize(faces_[d].size());
  }
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    for (std::size_t i = 0; i < faces_[d].size(); ++i) {
      for (int f : facets_of(static_cast<int>(d), static_cast<int>(i)))
        cofacets_[d - 1][f].push_back(static_cast<int>(i));
    }
  }
}

int FaceIndex::count(int d) const {
  if (d < 0 || d >= static_cast<int>(faces_.size())) return 0;
  return static_cast<int>(faces_[d].size());
}

int FaceIndex::id(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d >= static_cast<int>(ids_.size())) return -1;
  auto it = ids_[d].find(s);
  return it == ids_[d].end() ? -1 : it->second;
}

std::vector<int> FaceIndex::facets_of(int d, int id) const {
  std::vector<int> out;
  if (d == 0) return out;
  const Simplex& s = faces_[d][id];
  out.reserve(s.size());
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != skip) f.push_back(s[i]);
    out.push_back(ids_[d - 1].at(f));
  }
  return out;
}

long FaceIndex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < faces_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(faces_[d].size());
  return chi;
}

// SimplicialComplex --------------------------------------------------------

SimplicialComplex::SimplicialComplex() : faces_(std::make_shared<FaceIndex>()) {}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  if (faces_->count(0) == 0) return out;
  for (const auto& s : faces_->faces(0)) out.push_back(s[0]);
  return out;
}

SimplicialComplex SimplicialComplex::link(const Simplex& face) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_) {
    if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(rest));
    if (!rest.empty()) out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return make_complex_unchecked(std::move(out), vertex_count_);
}

std::vector<Simplex> SimplicialComplex::star_facets(Vertex v) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_)
    if (std::binary_search(f.begin(), f.end(), v)) out.push_back(f);
  return out;
}

SimplicialComplex make_complex_unchecked(std::vector<Simplex> facets, int vertex_count) {
  SimplicialComplex K;
  K.vertex_count_ = vertex_count;
  K.dimension_ = facets.empty() ? -1 : static_cast<int>(facets.front().size()) - 1;
  K.orientations_.assign(facets.size(), 1);
  K.faces_ = std::make_shared<FaceIndex>(facets);
  K.facets_ = std::move(facets);
  return K;
}

namespace {

int sort_parity(Simplex& s) {
  // Insertion sort counting transpositions.
  int swaps = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      ++swaps;
    }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

SimplicialComplex build_from_facets(const std::vector<Simplex>& facets, int vertex_count,
                                    std::map<int, std::string> labels) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
  const std::size_t arity = facets.front().size();
  if (arity == 0) throw Error(ErrorCode::EmptyInput, "empty facet");
  std::map<Simplex, int> canonical;
  int max_index = -1;
  for (const auto& raw : facets) {
    if (raw.size() != arity)
      throw Error(ErrorCode::NonPureComplex, "facets of arity " + std::to_string(arity) +
                                                 " and " + std::to_string(raw.size()));
    Simplex s = raw;
    const int parity = sort_parity(s);
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::DuplicateVertexInFacet, "repeated vertex in a facet");
    if (s.front() < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex index");
    max_index = std::max(max_index, s.back());
    canonical.emplace(std::move(s), parity);
  }
  if (vertex_count < 0) vertex_count = max_index + 1;
  if (max_index >= vertex_count)
    throw Error(ErrorCode::VertexOutOfRange, "vertex index " + std::to_string(max_index) +
                                                 " >= vertex_count " + std::to_string(vertex_count));
  std::vector<Simplex> sorted;
  std::vector<int> orientations;
  for (auto& [s, o] : canonical) {
    sorted.push_back(s);
    orientations.push_back(o);
  }
  SimplicialComplex K = make_complex_unchecked(std::move(sorted), vertex_count);
  K.orientations_ = std::move(orientations);
  K.labels_ = std::move(labels);
  return K;
}

// Boundary -----------------------------------------------------------------

BoundaryData boundary_data(const SimplicialComplex& K) {
  BoundaryData out;
  const int d = K.dimension();
  if (d <= 0) return out;
  const FaceIndex& F = K.faces();
  for (int i = 0; i < F.count(d - 1); ++i)
    if (F.cofacets(d - 1, i).size() == 1) out.boundary_facets.push_back(F.faces(d - 1)[i]);
  out.is_closed = out.boundary_facets.empty();
  return out;
}

bool is_pseudo_manifold(const SimplicialComplex& K) {
  const int d = K.dimension();
  if (d <= 0) return true;
  const FaceIndex& F = K.faces();
  for (int i = 0; i < F.count(d - 1); ++i)
    if (F.cofacets(d - 1, i).size() > 2) return false;
  return true;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& K) {
  if (!is_pseudo_manifold(K))
    throw Error(ErrorCode::NotPseudoManifold, "a codimension-1 face lies in more than two facets");
  return make_complex_unchecked(boundary_data(K).boundary_facets, K.vertex_count());
}

// Manifold recognition -----------------------------------------------------

bool is_connected(const SimplicialComplex& K) {
  const auto verts = K.vertices();
  if (verts.empty()) return true;
  std::vector<int> parent(K.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : K.facets())
    for (std::size_t i = 1; i < f.size(); ++i) parent[find(f[i])] = find(f[0]);
  const int root = find(verts.front());
  return std::all_of(verts.begin(), verts.end(), [&](int v) { return find(v) == root; });
}

std::optional<bool> is_orientable(const SimplicialComplex& K) {
  if (!is_pseudo_manifold(K)) return std::nullopt;
  const int d = K.dimension();
  if (d <= 0) return true;
  const FaceIndex& F = K.faces();
  const auto& facets = K.facets();
  const int n = static_cast<int>(facets.size());
  // Induced sign of each codimension-1 face id inside facet i.
  std::vector<std::vector<std::pair<int, int>>> ridges(n);
  std::vector<std::vector<int>> ridge_facets(F.count(d - 1));
  for (int i = 0; i < n; ++i) {
    const int fid = F.id(facets[i]);
    const auto sub = F.facets_of(d, fid);
    for (std::size_t k = 0; k < sub.size(); ++k) {
      ridges[i].emplace_back(sub[k], k % 2 == 0 ? 1 : -1);
      ridge_facets[sub[k]].push_back(i);
    }
  }
  std::vector<int> eps(n, 0);
  for (int start = 0; start < n; ++start) {
    if (eps[start] != 0) continue;
    eps[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (auto [r, sign] : ridges[i]) {
        for (int j : ridge_facets[r]) {
          if (j == i) continue;
          int sign_j = 0;
          for (auto [rj, sj] : ridges[j])
            if (rj == r) sign_j = sj;
          const int want = -eps[i] * sign * sign_j;
          if (eps[j] == 0) {
            eps[j] = want;
            queue.push_back(j);
          } else if (eps[j] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

enum class LinkType { Fail, Ball, Sphere };

LinkType recognize(const SimplicialComplex& L, int d) {
  if (L.empty() || L.dimension() != d) return LinkType::Fail;
  const FaceIndex& F = L.faces();
  if (d == 0) {
    if (F.count(0) == 1) return LinkType::Ball;
    if (F.count(0) == 2) return LinkType::Sphere;
    return LinkType::Fail;
  }
  if (!is_connected(L)) return LinkType::Fail;
  if (d == 1) {
    int ends = 0;
    for (int v = 0; v < F.count(0); ++v) {
      const auto deg = F.cofacets(0, v).size();
      if (deg == 1) ++ends;
      else if (deg != 2) return LinkType::Fail;
    }
    if (ends == 0) return LinkType::Sphere;
    return ends == 2 ? LinkType::Ball : LinkType::Fail;
  }
  if (d == 2) {
    if (!is_pseudo_manifold(L)) return LinkType::Fail;
    for (const auto& v : F.faces(0))
      if (recognize(L.link(v), 1) == LinkType::Fail) return LinkType::Fail;
    const bool closed = boundary_data(L).is_closed;
    const long chi = L.euler_characteristic();
    if (closed && chi == 2) return LinkType::Sphere;
    if (!closed && chi == 1) return LinkType::Ball;
    return LinkType::Fail;
  }
  return LinkType::Fail;
}

}  // namespace

ManifoldReport validate_manifold(const SimplicialComplex& K) {
  ManifoldReport report;
  const int d = K.dimension();
  const FaceIndex& F = K.faces();
  report.connected = is_connected(K);
  report.is_pseudo_manifold = true;
  if (d >= 1) {
    for (int i = 0; i < F.count(d - 1); ++i) {
      if (F.cofacets(d - 1, i).size() > 2) {
        report.is_pseudo_manifold = false;
        report.failing_faces.push_back(F.faces(d - 1)[i]);
      }
    }
  }
  if (d > 3) {
    report.partial = true;
  } else if (d >= 1) {
    for (const auto& v : F.faces(0))
      if (recognize(K.link(v), d - 1) == LinkType::Fail) report.failing_faces.push_back(v);
  }
  report.is_manifold_with_boundary = report.is_pseudo_manifold && report.failing_faces.empty();
  report.orientable = is_orientable(K);
  return report;
}

// Boundary connected sum -----------------------------------------------------

namespace {

bool is_boundary_facet(const SimplicialComplex& K, const Simplex& f) {
  Simplex s = f;
  std::sort(s.begin(), s.end());
  const int id = K.faces().id(s);
  return id >= 0 && static_cast<int>(s.size()) == K.dimension() &&
         K.faces().cofacets(K.dimension() - 1, id).size() == 1;
}

}  // namespace

SumResult boundary_connected_sum(const SimplicialComplex& A, const Simplex& fa,
                                 const SimplicialComplex& B, const Simplex& fb) {
  if (A.dimension() != B.dimension())
    throw Error(ErrorCode::DimensionMismatch, "summands have different dimensions");
  if (boundary_data(A).is_closed || boundary_data(B).is_closed)
    throw Error(ErrorCode::ClosedSummand, "summand has empty boundary");
  if (fa.size() != fb.size() || !is_boundary_facet(A, fa) || !is_boundary_facet(B, fb))
    throw Error(ErrorCode::InvalidInput, "gluing faces must be boundary facets");

  SumResult out;
  out.second_vertex_map.assign(B.vertex_count(), -1);
  for (std::size_t i = 0; i < fb.size(); ++i) out.second_vertex_map[fb[i]] = fa[i];
  int next = A.vertex_count();
  for (int v = 0; v < B.vertex_count(); ++v)
    if (out.second_vertex_map[v] < 0) out.second_vertex_map[v] = next++;

  std::vector<Simplex> facets = A.facets();
  std::set<Simplex> seen(facets.begin(), facets.end());
  bool collision = false;
  for (const auto& f : B.facets()) {
    Simplex g;
    for (Vertex v : f) g.push_back(out.second_vertex_map[v]);
    std::sort(g.begin(), g.end());
    if (!seen.insert(g).second) collision = true;
    facets.push_back(std::move(g));
  }
  if (collision) {
    // Separate the stars by subdividing both summands once, then glue the
    // corresponding subdivided facets.
    const Subdivision sa = barycentric_subdivision(A);
    const Subdivision sb = barycentric_subdivision(B);
    auto pick = [](const Subdivision& s, const Simplex& glue) {
      Simplex sorted = glue;
      std::sort(sorted.begin(), sorted.end());
      // Chain vertex -> barycenter of the prefix glue[0..i].
      Simplex chain;
      for (std::size_t i = 0; i < glue.size(); ++i) {
        Simplex prefix(glue.begin(), glue.begin() + i + 1);
        std::sort(prefix.begin(), prefix.end());
        const auto it = std::find(s.vertex_faces.begin(), s.vertex_faces.end(), prefix);
        chain.push_back(static_cast<Vertex>(it - s.vertex_faces.begin()));
      }
      return chain;
    };
    SumResult sub = boundary_connected_sum(sa.complex, pick(sa, fa), sb.complex, pick(sb, fb));
    sub.subdivided = true;
    return sub;
  }
  out.complex = build_from_facets(facets, next);
  return out;
}

SimplicialComplex boundary_connected_sum(const SimplicialComplex& A, const SimplicialComplex& B) {
  if (A.dimension() != B.dimension())
    throw Error(ErrorCode::DimensionMismatch, "summands have different dimensions");
  const auto ba = boundary_data(A);
  const auto bb = boundary_data(B);
  if (ba.is_closed || bb.is_closed) throw Error(ErrorCode::ClosedSummand, "summand has empty boundary");
  return boundary_connected_sum(A, ba.boundary_facets.front(), B, bb.boundary_facets.front()).complex;
}

// Barycentric subdivision ---------------------------------------------------

Subdivision barycentric_subdivision(const SimplicialComplex& K) {
  Subdivision out;
  const FaceIndex& F = K.faces();
  std::map<Simplex, int> vertex_of;
  for (int d = 0; d <= F.dimension(); ++d)
    for (const auto& s : F.faces(d)) {
      vertex_of.emplace(s, static_cast<int>(out.vertex_faces.size()));
      out.vertex_faces.push_back(s);
    }
  std::vector<Simplex> facets;
  for (const auto& f : K.facets()) {
    // Every maximal chain is a permutation of the facet's vertices.
    Simplex perm = f;
    do {
      Simplex chain;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        Simplex prefix(perm.begin(), perm.begin() + i + 1);
        std::sort(prefix.begin(), prefix.end());
        chain.push_back(vertex_of.at(prefix));
      }
      facets.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.complex = build_from_facets(facets, static_cast<int>(out.vertex_faces.size()));
  return out;
}

}  // namespace bsg
