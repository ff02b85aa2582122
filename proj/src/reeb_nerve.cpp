#include "bsg/reeb.hpp"

#include "slicer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bsg {

Box<Rational> ReebNerve::rectangle(int i, int j) const {
  const Rational w = (bounds.hi.x() - bounds.lo.x()) / grid, h = (bounds.hi.y() - bounds.lo.y()) / grid;
  return Box<Rational>{Point2(bounds.lo.x() + w * i - overlap * w, bounds.lo.y() + h * j - overlap * h),
                       Point2(bounds.lo.x() + w * (i + 1) + overlap * w, bounds.lo.y() + h * (j + 1) + overlap * h)};
}

FaceIndex ReebNerve::face_index() const { return FaceIndex(simplices); }

BettiProfile ReebNerve::homology(Ring ring, Variant variant) const {
  return bsg::homology(chain_complex(face_index()), ring, variant);
}

namespace {

/// Rectangle covering cells [i0, i1] x [j0, j1] of the grid: the common
/// intersection of the enlarged rectangles of those cells.
ValueMatrix intersection_corners(const ReebNerve& N, int i0, int i1, int j0, int j1) {
  const auto a = N.rectangle(i1, j1), b = N.rectangle(i0, j0);
  const Point2 lo = a.lo, hi = b.hi;
  ValueMatrix m(4, 2);
  m << lo.x(), lo.y(), hi.x(), lo.y(), hi.x(), hi.y(), lo.x(), hi.y();
  return m;
}

}  // namespace

ReebNerve reeb_nerve(const PLMap& F, int grid, const Rational& overlap) {
  if (F.target_dim() != 2) throw Error(ErrorCode::DimensionUnsupported, "nerves are built for planar maps");
  if (grid < 4) throw Error(ErrorCode::ResolutionTooSmall, "grid must be at least 4");
  if (!(overlap > 0 && overlap < Rational(1, 2))) throw Error(ErrorCode::InvalidInput, "overlap must lie in (0, 1/2)");
  if (!is_generic(F)) throw Error(ErrorCode::NotGeneric, "map is not in general position");
  ReebNerve N;
  N.grid = grid;
  N.overlap = overlap;
  std::vector<Point2> imgs;
  for (Vertex v : F.domain->vertices()) imgs.push_back(F.point(v));
  N.bounds = bounding_box(imgs);

  std::vector<Rational> coords;
  for (int i = 0; i < grid; ++i) {
    const auto r = N.rectangle(i, i);
    for (const auto* c : {&r.lo, &r.hi}) {
      coords.push_back(c->x());
      coords.push_back(c->y());
    }
  }
  const detail::Slicer S(F, coords);
  const auto& faces = S.faces();
  const int D = faces.dimension();

  std::map<std::array<int, 4>, detail::Slicer::Query> queries;
  auto query = [&](int i0, int i1, int j0, int j1) -> const detail::Slicer::Query& {
    const std::array<int, 4> key{i0, i1, j0, j1};
    auto it = queries.find(key);
    if (it == queries.end()) it = queries.emplace(key, S.make_query(intersection_corners(N, i0, i1, j0, j1))).first;
    return it->second;
  };

  // Rectangles met by each face.
  const int cells = grid * grid;
  std::vector<std::vector<std::vector<int>>> met(D + 1);
  std::vector<std::vector<std::vector<int>>> members(cells, std::vector<std::vector<int>>(D + 1));
  for (int d = 0; d <= D; ++d) {
    met[d].resize(faces.count(d));
    for (int id = 0; id < faces.count(d); ++id)
      for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
          const auto& q = query(i, i, j, j);
          if (S.integral() && !S.box(d, id).intersects(q.ibox)) continue;
          if (!S.meets(d, id, q)) continue;
          met[d][id].push_back(i * grid + j);
          members[i * grid + j][d].push_back(id);
        }
  }

  // Components per rectangle are the nerve vertices.
  std::vector<std::vector<std::map<int, int>>> vertex_of(cells, std::vector<std::map<int, int>>(D + 1));
  std::set<Simplex> simplices;
  for (int c = 0; c < cells; ++c) {
    const auto comps = detail::upward_components(faces, members[c]);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const int id = static_cast<int>(N.vertices.size());
      N.vertices.push_back(NerveVertex{c / grid, c % grid, static_cast<int>(k), comps[k]});
      for (const auto& [d, f] : comps[k]) vertex_of[c][d][f] = id;
      simplices.insert({id});
    }
  }

  // Higher simplices: a face meeting the common part of several rectangles
  // of one 2x2 block links their components.
  for (int d = 0; d <= D; ++d)
    for (int id = 0; id < faces.count(d); ++id) {
      const auto& rects = met[d][id];
      if (rects.size() < 2) continue;
      std::set<std::vector<int>> tried;
      for (int bi : {0, 1})
        for (int c0 : rects) {
          const int i0 = c0 / grid - bi, j0 = c0 % grid;
          for (int bj : {0, 1}) {
            std::vector<int> block;
            for (int c : rects) {
              const int di = c / grid - i0, dj = c % grid - (j0 - bj);
              if (di >= 0 && di <= 1 && dj >= 0 && dj <= 1) block.push_back(c);
            }
            const int n = static_cast<int>(block.size());
            for (int mask = 1; mask < (1 << n); ++mask) {
              if (__builtin_popcount(mask) < 2) continue;
              std::vector<int> subset;
              int i_lo = grid, i_hi = -1, j_lo = grid, j_hi = -1;
              for (int k = 0; k < n; ++k)
                if (mask & (1 << k)) {
                  subset.push_back(block[k]);
                  i_lo = std::min(i_lo, block[k] / grid);
                  i_hi = std::max(i_hi, block[k] / grid);
                  j_lo = std::min(j_lo, block[k] % grid);
                  j_hi = std::max(j_hi, block[k] % grid);
                }
              if (!tried.insert(subset).second) continue;
              if (!S.meets(d, id, query(i_lo, i_hi, j_lo, j_hi))) continue;
              Simplex s;
              for (int c : subset) s.push_back(vertex_of[c][d].at(id));
              std::sort(s.begin(), s.end());
              simplices.insert(s);
            }
          }
        }
    }
  N.simplices.assign(simplices.begin(), simplices.end());
  return N;
}

std::vector<BoundaryCell> boundary_cells(const ReebNerve& N, const PLMap& F) {
  const auto& faces = F.domain->faces();
  std::vector<std::pair<int, int>> singular;
  for (Vertex w : classify_boundary_vertices(F).with_label(FoldLabel::DefiniteFold))
    singular.emplace_back(0, faces.id(Simplex{w}));
  for (const auto& e : fold_edges(F)) singular.emplace_back(1, faces.id(e));
  std::vector<BoundaryCell> out;
  for (int c = 0; c < static_cast<int>(N.vertices.size()); ++c) {
    const auto& cells = N.vertices[c].cells;
    for (const auto& f : singular)
      if (std::binary_search(cells.begin(), cells.end(), f)) {
        out.push_back(BoundaryCell{c, f});
        break;
      }
  }
  return out;
}

}  // namespace bsg
