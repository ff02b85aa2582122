#include "slicer.hpp"

#include <algorithm>
#include <map>

namespace bsg {

namespace detail {

namespace {

using Wide = __int128;

constexpr long long kCoordLimit = 1LL << 59;

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace

bool hulls_meet(const std::vector<IPoint>& P, const std::vector<IPoint>& Q) {
  auto box_of = [](const std::vector<IPoint>& S) {
    IBox b{S[0], S[0]};
    for (const auto& p : S) {
      b.lo.x = std::min(b.lo.x, p.x);
      b.lo.y = std::min(b.lo.y, p.y);
      b.hi.x = std::max(b.hi.x, p.x);
      b.hi.y = std::max(b.hi.y, p.y);
    }
    return b;
  };
  if (!box_of(P).intersects(box_of(Q))) return false;
  auto separates = [&](long long ax, long long ay) {
    auto range = [&](const std::vector<IPoint>& S) {
      Wide lo = Wide(ax) * S[0].x + Wide(ay) * S[0].y, hi = lo;
      for (const auto& p : S) {
        const Wide t = Wide(ax) * p.x + Wide(ay) * p.y;
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
      return std::pair{lo, hi};
    };
    const auto [plo, phi] = range(P);
    const auto [qlo, qhi] = range(Q);
    return phi < qlo || qhi < plo;
  };
  for (const auto* S : {&P, &Q})
    for (std::size_t i = 0; i < S->size(); ++i)
      for (std::size_t j = i + 1; j < S->size(); ++j) {
        const long long dx = (*S)[j].x - (*S)[i].x, dy = (*S)[j].y - (*S)[i].y;
        if (dx == 0 && dy == 0) continue;
        if (separates(-dy, dx) || separates(dx, dy)) return false;
      }
  return true;
}

Slicer::Slicer(const PLMap& F, const std::vector<Rational>& coords)
    : F_(F), faces_(F.domain->faces()), m_(F.target_dim()) {
  const int D = faces_.dimension();
  if (m_ == 1) {
    ranges_.resize(D + 1);
    for (int d = 0; d <= D; ++d) {
      ranges_[d].reserve(faces_.count(d));
      for (const auto& s : faces_.faces(d)) {
        Rational lo = F.value(s[0]), hi = lo;
        for (Vertex v : s) {
          lo = std::min(lo, F.value(v));
          hi = std::max(hi, F.value(v));
        }
        ranges_[d].push_back({lo, hi});
      }
    }
    return;
  }
  Integer scale = 1;
  Rational biggest = 0;
  auto absorb = [&](const Rational& q) {
    scale = boost::multiprecision::lcm(scale, denominator_of(q));
    biggest = std::max(biggest, abs(q));
  };
  for (Eigen::Index v = 0; v < F.values.rows(); ++v) {
    absorb(F.values(v, 0));
    absorb(F.values(v, 1));
  }
  for (const auto& c : coords) absorb(c);
  integral_ = biggest * Rational(scale) < Rational(kCoordLimit);
  if (!integral_) return;
  scale_ = scale;
  ipts_.resize(F.values.rows());
  for (Eigen::Index v = 0; v < F.values.rows(); ++v) ipts_[v] = scaled(F.point(static_cast<Vertex>(v)));
  boxes_.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    boxes_[d].reserve(faces_.count(d));
    for (const auto& s : faces_.faces(d)) {
      IBox b{ipts_[s[0]], ipts_[s[0]]};
      for (Vertex v : s) {
        b.lo.x = std::min(b.lo.x, ipts_[v].x);
        b.lo.y = std::min(b.lo.y, ipts_[v].y);
        b.hi.x = std::max(b.hi.x, ipts_[v].x);
        b.hi.y = std::max(b.hi.y, ipts_[v].y);
      }
      boxes_[d].push_back(b);
    }
  }
}

IPoint Slicer::scaled(const Point2& p) const {
  auto one = [&](const Rational& c) {
    const Rational t = c * Rational(scale_);
    if (denominator_of(t) != 1) throw std::logic_error("query coordinate not on the slicing grid");
    return boost::multiprecision::numerator(t).convert_to<long long>();
  };
  return IPoint{one(p.x()), one(p.y())};
}

Slicer::Query Slicer::make_query(const ValueMatrix& rows) const {
  Query q;
  if (m_ == 1) {
    q.lo = q.hi = rows(0, 0);
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      q.lo = std::min(q.lo, rows(i, 0));
      q.hi = std::max(q.hi, rows(i, 0));
    }
    q.dim = q.lo < q.hi ? 1 : 0;
    return q;
  }
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const Point2 p(rows(i, 0), rows(i, 1));
    if (std::find(q.rpts.begin(), q.rpts.end(), p) == q.rpts.end()) q.rpts.push_back(p);
  }
  q.dim = 0;
  for (std::size_t i = 1; i < q.rpts.size(); ++i) {
    q.dim = std::max(q.dim, 1);
    for (std::size_t j = i + 1; j < q.rpts.size(); ++j)
      if (orientation<Rational>(q.rpts[0], q.rpts[i], q.rpts[j]) != 0) q.dim = 2;
  }
  if (integral_) {
    for (const auto& p : q.rpts) q.ipts.push_back(scaled(p));
    q.ibox = IBox{q.ipts[0], q.ipts[0]};
    for (const auto& p : q.ipts) {
      q.ibox.lo.x = std::min(q.ibox.lo.x, p.x);
      q.ibox.lo.y = std::min(q.ibox.lo.y, p.y);
      q.ibox.hi.x = std::max(q.ibox.hi.x, p.x);
      q.ibox.hi.y = std::max(q.ibox.hi.y, p.y);
    }
  }
  return q;
}

bool Slicer::meets(int d, int id, const Query& q) const {
  if (m_ == 1) return ranges_[d][id][0] <= q.hi && q.lo <= ranges_[d][id][1];
  const Simplex& s = faces_.faces(d)[id];
  if (integral_) {
    if (!boxes_[d][id].intersects(q.ibox)) return false;
    std::vector<IPoint> P;
    P.reserve(s.size());
    for (Vertex v : s) P.push_back(ipts_[v]);
    return hulls_meet(P, q.ipts);
  }
  return hulls_intersect<Rational>(F_.image(s), q.rpts);
}

std::vector<std::vector<int>> Slicer::meeting(const Query& q) const {
  const int D = faces_.dimension();
  std::vector<std::vector<int>> out(D + 1);
  for (int id = 0; id < faces_.count(D); ++id)
    if (meets(D, id, q)) out[D].push_back(id);
  // Upward closure: every meeting face is a face of a meeting facet.
  for (int d = D; d > 0; --d) {
    std::vector<int> candidates;
    for (int id : out[d])
      for (int f : faces_.facets_of(d, id)) candidates.push_back(f);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int f : candidates)
      if (meets(d - 1, f, q)) out[d - 1].push_back(f);
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> upward_components(const FaceIndex& faces,
                                                                const std::vector<std::vector<int>>& members) {
  std::vector<int> offset(members.size() + 1, 0);
  for (std::size_t d = 0; d < members.size(); ++d) offset[d + 1] = offset[d] + static_cast<int>(members[d].size());
  UnionFind uf(offset.back());
  auto local = [&](int d, int id) {
    const auto& m = members[d];
    const auto it = std::lower_bound(m.begin(), m.end(), id);
    return (it != m.end() && *it == id) ? offset[d] + static_cast<int>(it - m.begin()) : -1;
  };
  for (std::size_t d = 0; d + 1 < members.size(); ++d)
    for (std::size_t k = 0; k < members[d].size(); ++k)
      for (int c : faces.cofacets(static_cast<int>(d), members[d][k])) {
        const int j = local(static_cast<int>(d) + 1, c);
        if (j >= 0) uf.unite(offset[d] + static_cast<int>(k), j);
      }
  std::map<int, int> comp_of_root;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::size_t d = 0; d < members.size(); ++d)
    for (std::size_t k = 0; k < members[d].size(); ++k) {
      const int root = uf.find(offset[d] + static_cast<int>(k));
      auto [it, fresh] = comp_of_root.emplace(root, static_cast<int>(out.size()));
      if (fresh) out.emplace_back();
      out[it->second].emplace_back(static_cast<int>(d), members[d][k]);
    }
  return out;
}

BettiProfile order_complex_homology(const FaceIndex& faces, const std::vector<std::pair<int, int>>& cells) {
  std::map<std::pair<int, int>, int> index;
  for (const auto& c : cells) index.emplace(c, static_cast<int>(index.size()));
  std::vector<Simplex> chains;
  Simplex chain;
  auto extend = [&](auto&& self, int d, int id) -> void {
    chain.push_back(index.at({d, id}));
    bool top = true;
    if (d < faces.dimension())
      for (int c : faces.cofacets(d, id))
        if (index.count({d + 1, c})) {
          top = false;
          self(self, d + 1, c);
        }
    if (top) {
      Simplex s = chain;
      std::sort(s.begin(), s.end());
      chains.push_back(std::move(s));
    }
    chain.pop_back();
  };
  for (const auto& [d, id] : cells) {
    bool minimal = true;
    if (d > 0)
      for (int f : faces.facets_of(d, id))
        if (index.count({d - 1, f})) {
          minimal = false;
          break;
        }
    if (minimal) extend(extend, d, id);
  }
  return homology(chain_complex(FaceIndex(chains)), Ring::Z);
}

}  // namespace detail

using detail::Slicer;

namespace {

std::vector<Rational> coords_of(const ValueMatrix& rows) {
  std::vector<Rational> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j < rows.cols(); ++j) out.push_back(rows(i, j));
  return out;
}

std::vector<FiberComponent> components_of(const Slicer& S, const Slicer::Query& q, bool with_homology) {
  const auto members = S.meeting(q);
  std::vector<FiberComponent> out;
  for (auto& cells : detail::upward_components(S.faces(), members)) {
    FiberComponent c;
    int top = 0;
    for (const auto& [d, id] : cells) {
      top = std::max(top, d);
      if (d == 0) c.vertices.push_back(S.faces().faces(0)[id][0]);
    }
    c.dimension = top - S.target_dim() + q.dim;
    if (with_homology) c.homology = detail::order_complex_homology(S.faces(), cells);
    std::sort(cells.begin(), cells.end());
    c.cells = std::move(cells);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.cells < b.cells; });
  return out;
}

/// Regular iff no face of dimension below the target dimension meets q.
bool regular_query(const Slicer& S, const Slicer::Query& q) {
  for (int d = 0; d < S.target_dim() && d <= S.faces().dimension(); ++d)
    for (int id = 0; id < S.faces().count(d); ++id)
      if (S.meets(d, id, q)) return false;
  return true;
}

ValueMatrix row_of(const Point2& p) {
  ValueMatrix m(1, 2);
  m << p.x(), p.y();
  return m;
}

/// Dyadic nudges tried in order by regularize.
std::vector<Point2> nudges(const Point2& p) {
  std::vector<Point2> out{p};
  const Rational step = Rational(1, 1 << 20);
  for (int i = 1; i <= 12; ++i) out.emplace_back(p.x() + step * i, p.y() + step * (i * i));
  return out;
}

}  // namespace

bool FiberComponent::contains_cell(int d, int id) const {
  return std::binary_search(cells.begin(), cells.end(), std::pair{d, id});
}

std::vector<FiberComponent> preimage(const PLMap& F, const ValueMatrix& query, bool with_homology) {
  if (query.cols() != F.target_dim() || query.rows() == 0)
    throw Error(ErrorCode::InvalidInput, "query points must live in the target");
  const Slicer S(F, coords_of(query));
  return components_of(S, S.make_query(query), with_homology);
}

std::vector<FiberComponent> fiber(const PLMap& F, const ValueMatrix& point) {
  if (point.rows() != 1 || point.cols() != F.target_dim())
    throw Error(ErrorCode::InvalidInput, "fibre query must be a single target point");
  const Slicer S(F, coords_of(point));
  const auto q = S.make_query(point);
  if (!regular_query(S, q)) throw Error(ErrorCode::DegenerateQueryPoint, "query point is not a regular position");
  return components_of(S, q, true);
}

std::vector<FiberComponent> fiber(const PLMap& F, const Point2& p) { return fiber(F, row_of(p)); }

std::vector<FiberComponent> fiber(const PLMap& F, const Rational& t) {
  ValueMatrix m(1, 1);
  m(0, 0) = t;
  return fiber(F, m);
}

bool is_regular_point(const PLMap& F, const Point2& p) {
  const auto row = row_of(p);
  const Slicer S(F, coords_of(row));
  return regular_query(S, S.make_query(row));
}

Point2 regularize(const PLMap& F, const Point2& p) {
  const auto candidates = nudges(p);
  std::vector<Rational> coords;
  for (const auto& c : candidates) {
    coords.push_back(c.x());
    coords.push_back(c.y());
  }
  const Slicer S(F, coords);
  for (const auto& c : candidates)
    if (regular_query(S, S.make_query(row_of(c)))) return c;
  throw Error(ErrorCode::DegenerateQueryPoint, "no regular point near the requested sample");
}

FiberCount max_fiber_count(const PLMap& F, int grid) {
  FiberCount best;
  if (F.target_dim() == 1) {
    std::vector<Rational> vals;
    for (Vertex v : F.domain->vertices()) vals.push_back(F.value(v));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    const Slicer S(F, {});
    best.point = ValueMatrix::Zero(1, 1);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      ValueMatrix t(1, 1);
      t(0, 0) = (vals[i] + vals[i + 1]) / 2;
      const int n = static_cast<int>(components_of(S, S.make_query(t), false).size());
      if (n > best.count) {
        best.count = n;
        best.point = t;
      }
    }
    return best;
  }
  std::vector<Point2> imgs;
  for (Vertex v : F.domain->vertices()) imgs.push_back(F.point(v));
  const auto box = bounding_box(imgs);
  const Point2 size = box.hi - box.lo;
  std::vector<std::vector<Point2>> candidates;
  std::vector<Rational> coords;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      const Point2 p(box.lo.x() + size.x() * Rational(2 * a + 1, 2 * grid),
                     box.lo.y() + size.y() * Rational(2 * b + 1, 2 * grid));
      candidates.push_back(nudges(p));
      for (const auto& c : candidates.back()) {
        coords.push_back(c.x());
        coords.push_back(c.y());
      }
    }
  const Slicer S(F, coords);
  best.point = row_of(box.lo);
  for (const auto& list : candidates)
    for (const auto& c : list) {
      const auto q = S.make_query(row_of(c));
      if (!regular_query(S, q)) continue;
      const int n = static_cast<int>(components_of(S, q, false).size());
      if (n > best.count) {
        best.count = n;
        best.point = row_of(c);
      }
      break;
    }
  return best;
}

}  // namespace bsg
