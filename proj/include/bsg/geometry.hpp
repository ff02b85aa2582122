#pragma once

#include "bsg/types.hpp"

#include <algorithm>
#include <vector>

// Exact planar predicates. Every function is templated on the scalar so it
// can be checked against plain integers in tests; callers use Rational.

namespace bsg {

template <typename Scalar>
Scalar cross(const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
Scalar dot(const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  return a.x() * b.x() + a.y() * b.y();
}

template <typename Scalar>
int sign(const Scalar& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

/// +1 for a counter-clockwise triple, -1 clockwise, 0 collinear.
template <typename Scalar>
int orientation(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& c) {
  return sign<Scalar>(cross<Scalar>(b - a, c - a));
}

template <typename Scalar>
struct Box {
  Vector2<Scalar> lo, hi;

  bool contains(const Vector2<Scalar>& p) const {
    return lo.x() <= p.x() && p.x() <= hi.x() && lo.y() <= p.y() && p.y() <= hi.y();
  }
  bool intersects(const Box& o) const {
    return !(hi.x() < o.lo.x() || o.hi.x() < lo.x() || hi.y() < o.lo.y() || o.hi.y() < lo.y());
  }
  std::vector<Vector2<Scalar>> corners() const {
    return {lo, Vector2<Scalar>(hi.x(), lo.y()), hi, Vector2<Scalar>(lo.x(), hi.y())};
  }
};

template <typename Scalar>
Box<Scalar> bounding_box(const std::vector<Vector2<Scalar>>& pts) {
  Box<Scalar> b{pts.front(), pts.front()};
  for (const auto& p : pts) {
    b.lo.x() = std::min(b.lo.x(), p.x());
    b.lo.y() = std::min(b.lo.y(), p.y());
    b.hi.x() = std::max(b.hi.x(), p.x());
    b.hi.y() = std::max(b.hi.y(), p.y());
  }
  return b;
}

/// Whether conv(P) and conv(Q) meet. Separating-axis test over the normals
/// and directions of all point pairs within each set, which covers the
/// degenerate (point, segment) cases as well as polygons.
template <typename Scalar>
bool hulls_intersect(const std::vector<Vector2<Scalar>>& P, const std::vector<Vector2<Scalar>>& Q) {
  if (!bounding_box(P).intersects(bounding_box(Q))) return false;
  auto separates = [&](const Vector2<Scalar>& axis) {
    Scalar pmin = dot<Scalar>(axis, P[0]), pmax = pmin;
    for (const auto& p : P) {
      const Scalar t = dot<Scalar>(axis, p);
      pmin = std::min(pmin, t);
      pmax = std::max(pmax, t);
    }
    Scalar qmin = dot<Scalar>(axis, Q[0]), qmax = qmin;
    for (const auto& q : Q) {
      const Scalar t = dot<Scalar>(axis, q);
      qmin = std::min(qmin, t);
      qmax = std::max(qmax, t);
    }
    return pmax < qmin || qmax < pmin;
  };
  for (const auto* S : {&P, &Q})
    for (std::size_t i = 0; i < S->size(); ++i)
      for (std::size_t j = i + 1; j < S->size(); ++j) {
        const Vector2<Scalar> d = (*S)[j] - (*S)[i];
        if (d.isZero()) continue;
        if (separates(Vector2<Scalar>(-d.y(), d.x())) || separates(d)) return false;
      }
  // Two single points: the bounding boxes already decided unless equal.
  if (P.size() == 1 && Q.size() == 1) return P[0] == Q[0];
  return true;
}

template <typename Scalar>
bool point_in_hull(const Vector2<Scalar>& p, const std::vector<Vector2<Scalar>>& P) {
  return hulls_intersect<Scalar>(P, {p});
}

/// Whether p lies on the closed segment ab.
template <typename Scalar>
bool on_segment(const Vector2<Scalar>& p, const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  if (orientation<Scalar>(a, b, p) != 0) return false;
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

/// Winding number of the closed polygon `cycle` around p. p must not lie on
/// the polygon.
template <typename Scalar>
int winding_number(const Vector2<Scalar>& p, const std::vector<Vector2<Scalar>>& cycle) {
  int wn = 0;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = cycle[i];
    const auto& b = cycle[(i + 1) % n];
    if (a.y() <= p.y()) {
      if (b.y() > p.y() && orientation<Scalar>(a, b, p) > 0) ++wn;
    } else if (b.y() <= p.y() && orientation<Scalar>(a, b, p) < 0) {
      --wn;
    }
  }
  return wn;
}

/// Whether d lies in the cone spanned by a and b.
template <typename Scalar>
bool in_cone2(const Vector2<Scalar>& d, const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  const Scalar det = cross<Scalar>(a, b);
  if (det == 0) {
    for (const auto* g : {&a, &b})
      if (cross<Scalar>(*g, d) == 0 && dot<Scalar>(*g, d) > 0) return true;
    return false;
  }
  const int s = sign<Scalar>(det);
  return sign<Scalar>(cross<Scalar>(d, b)) * s >= 0 && sign<Scalar>(cross<Scalar>(a, d)) * s >= 0;
}

/// Whether d lies in the cone spanned by `gens` (two generators suffice in
/// the plane).
template <typename Scalar>
bool in_cone(const Vector2<Scalar>& d, const std::vector<Vector2<Scalar>>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (in_cone2<Scalar>(d, gens[i], gens[j])) return true;
  return false;
}

/// Strict angular order starting at the positive x-axis.
template <typename Scalar>
bool angle_less(const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  auto half = [](const Vector2<Scalar>& v) { return (v.y() < 0 || (v.y() == 0 && v.x() < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross<Scalar>(a, b) > 0;
}

/// Whether the union of the given cones (each spanned by non-zero vectors)
/// is the whole plane.
template <typename Scalar>
bool cones_cover_plane(const std::vector<std::vector<Vector2<Scalar>>>& cones) {
  std::vector<Vector2<Scalar>> dirs;
  for (const auto& c : cones) dirs.insert(dirs.end(), c.begin(), c.end());
  std::sort(dirs.begin(), dirs.end(), angle_less<Scalar>);
  std::vector<Vector2<Scalar>> unique;
  for (const auto& d : dirs)
    if (unique.empty() || angle_less<Scalar>(unique.back(), d)) unique.push_back(d);
  if (unique.empty()) return false;
  auto covered = [&](const Vector2<Scalar>& d) {
    for (const auto& c : cones)
      if (in_cone<Scalar>(d, c)) return true;
    return false;
  };
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const auto& a = unique[i];
    const auto& b = unique[(i + 1) % unique.size()];
    Vector2<Scalar> mid;
    const Scalar c = cross<Scalar>(a, b);
    if (unique.size() == 1) mid = -a;
    else if (c > 0) mid = a + b;
    else if (c == 0) mid = Vector2<Scalar>(-a.y(), a.x());
    else mid = -(a + b);
    if (!covered(mid)) return false;
  }
  return true;
}

/// Counter-clockwise convex hull without collinear points (monotone chain).
template <typename Scalar>
std::vector<Vector2<Scalar>> convex_hull(std::vector<Vector2<Scalar>> pts) {
  auto less = [](const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vector2<Scalar>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orientation<Scalar>(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation<Scalar>(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// Convex polygon (counter-clockwise) clipped to a box.
template <typename Scalar>
std::vector<Vector2<Scalar>> clip(const std::vector<Vector2<Scalar>>& poly, const Box<Scalar>& box) {
  std::vector<Vector2<Scalar>> out = poly;
  for (int side = 0; side < 4; ++side) {
    const int axis = side % 2;
    const bool upper = side >= 2;
    const Scalar bound = upper ? box.hi[axis] : box.lo[axis];
    auto inside = [&](const Vector2<Scalar>& p) { return upper ? p[axis] <= bound : p[axis] >= bound; };
    std::vector<Vector2<Scalar>> next;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto& a = out[i];
      const auto& b = out[(i + 1) % out.size()];
      if (inside(a)) next.push_back(a);
      if (inside(a) != inside(b)) next.push_back(a + (b - a) * ((bound - a[axis]) / (b[axis] - a[axis])));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace bsg
