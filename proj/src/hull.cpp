#include "conesum/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "conesum/rational.hpp"

namespace conesum {

namespace {

double cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

HullFaceCounts hull2d(PointSet pts) {
  if (pts.size() < 3) throw DegenerateHullError("hull2d: fewer than 3 points");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) throw DegenerateHullError("hull2d: fewer than 3 distinct points");

  std::vector<const Point*> hull(2 * n + 1);
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) { // lower chain
    while (m >= 2 && cross2(*hull[m - 2], *hull[m - 1], pts[i]) <= 0.0) --m;
    hull[m++] = &pts[i];
  }
  const std::size_t lower = m + 1;
  for (std::size_t i = n - 1; i-- > 0;) { // upper chain
    while (m >= lower && cross2(*hull[m - 2], *hull[m - 1], pts[i]) <= 0.0) --m;
    hull[m++] = &pts[i];
  }
  const std::size_t vertices = m - 1; // endpoints repeat
  if (vertices < 3) throw DegenerateHullError("hull2d: collinear input");
  return {vertices, vertices, 0};
}

struct Vec3 {
  double x, y, z;
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 crossWith(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

struct Facet {
  std::array<std::size_t, 3> v;
  Vec3 normal;
  double offset; // plane: normal . p = offset, normal points outward
  bool alive = true;
};

HullFaceCounts hull3d(const PointSet& input) {
  if (input.size() < 4) throw DegenerateHullError("hull3d: fewer than 4 points");
  std::vector<Vec3> pts;
  pts.reserve(input.size());
  double scale = 0.0;
  for (const auto& p : input) {
    pts.push_back({p[0], p[1], p[2]});
    scale = std::max({scale, std::fabs(p[0]), std::fabs(p[1]), std::fabs(p[2])});
  }
  const std::size_t n = pts.size();
  const double eps = 1e-9 * std::max(scale, 1.0);

  // initial simplex: spread apart in one axis, then extreme from line/plane
  std::size_t i0 = 0, i1 = 0;
  double best = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = (pts[i] - pts[0]).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (best <= eps) throw DegenerateHullError("hull3d: all points coincide");
  std::size_t i2 = 0;
  best = -1.0;
  const Vec3 axis = pts[i1] - pts[i0];
  for (std::size_t i = 0; i < n; ++i) {
    const double d = axis.crossWith(pts[i] - pts[i0]).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (best <= eps * axis.norm()) throw DegenerateHullError("hull3d: collinear input");
  std::size_t i3 = 0;
  best = -1.0;
  const Vec3 nrm = (pts[i1] - pts[i0]).crossWith(pts[i2] - pts[i0]);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(nrm.dot(pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (best <= eps * nrm.norm()) throw DegenerateHullError("hull3d: coplanar input");

  std::vector<Facet> facets;
  Vec3 centroid{(pts[i0].x + pts[i1].x + pts[i2].x + pts[i3].x) / 4.0,
                (pts[i0].y + pts[i1].y + pts[i2].y + pts[i3].y) / 4.0,
                (pts[i0].z + pts[i1].z + pts[i2].z + pts[i3].z) / 4.0};
  auto addFacet = [&](std::size_t a, std::size_t b, std::size_t c) {
    Facet f;
    f.v = {a, b, c};
    f.normal = (pts[b] - pts[a]).crossWith(pts[c] - pts[a]);
    f.offset = f.normal.dot(pts[a]);
    if (f.normal.dot(centroid) > f.offset) { // orient outward
      std::swap(f.v[1], f.v[2]);
      f.normal = {-f.normal.x, -f.normal.y, -f.normal.z};
      f.offset = -f.offset;
    }
    facets.push_back(f);
  };
  addFacet(i0, i1, i2);
  addFacet(i0, i1, i3);
  addFacet(i0, i2, i3);
  addFacet(i1, i2, i3);

  for (std::size_t p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    // facets visible from pts[p]
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!facets[f].alive) continue;
      if (facets[f].normal.dot(pts[p]) - facets[f].offset >
          eps * std::max(1.0, facets[f].normal.norm()))
        visible.push_back(f);
    }
    if (visible.empty()) continue; // interior point
    // horizon = edges of visible facets shared with an invisible facet
    std::map<std::pair<std::size_t, std::size_t>, int> edgeUse;
    for (std::size_t f : visible)
      for (int e = 0; e < 3; ++e) {
        std::size_t a = facets[f].v[e], b = facets[f].v[(e + 1) % 3];
        if (a > b) std::swap(a, b);
        ++edgeUse[{a, b}];
      }
    for (std::size_t f : visible) facets[f].alive = false;
    for (const auto& [edge, uses] : edgeUse) {
      if (uses != 1) continue; // interior edge of the visible region
      addFacet(edge.first, edge.second, p);
    }
  }

  std::set<std::size_t> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::size_t f2 = 0;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    ++f2;
    for (int e = 0; e < 3; ++e) {
      vertices.insert(f.v[e]);
      std::size_t a = f.v[e], b = f.v[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
    }
  }
  return {vertices.size(), edges.size(), f2};
}

using ExactPoint = std::array<Rational, 3>;

ExactPoint exactSub(const ExactPoint& a, const ExactPoint& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

ExactPoint exactCross(const ExactPoint& a, const ExactPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rational exactDot(const ExactPoint& a, const ExactPoint& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Face counts of the hull of exactly-represented points, by supporting-plane
// enumeration: every plane through a point triple with all points on one
// side is a facet plane; the facet polygon is the exact 2d hull of the
// points lying on it. Quartic in the number of points; meant for the
// desk-scale Minkowski cross-sums whose structural coplanarity the float
// hull cannot count.
HullFaceCounts exactHull3d(const std::vector<ExactPoint>& input) {
  std::vector<ExactPoint> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 4) throw DegenerateHullError("exactHull3d: fewer than 4 distinct points");

  using PlaneKey = std::array<Rational, 4>; // normalized (n1,n2,n3,c)
  std::map<PlaneKey, std::vector<std::size_t>> facets;
  const Rational zero(0);

  auto planeKey = [&](const ExactPoint& normal, const Rational& offset) {
    PlaneKey key{normal[0], normal[1], normal[2], offset};
    for (unsigned c = 0; c < 3; ++c) {
      if (key[c].isZero()) continue;
      const Rational scale = key[c];
      for (auto& v : key) v /= scale;
      break;
    }
    return key;
  };

  bool sawNonCoplanar = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const ExactPoint normal =
            exactCross(exactSub(pts[j], pts[i]), exactSub(pts[k], pts[i]));
        if (normal[0].isZero() && normal[1].isZero() && normal[2].isZero())
          continue; // collinear triple
        const Rational offset = exactDot(normal, pts[i]);
        const PlaneKey key = planeKey(normal, offset);
        if (facets.count(key)) continue; // plane already classified
        bool anyPos = false, anyNeg = false;
        std::vector<std::size_t> onPlane;
        for (std::size_t t = 0; t < n; ++t) {
          const Rational side = exactDot(normal, pts[t]) - offset;
          const int s = side.sign();
          if (s > 0) anyPos = true;
          else if (s < 0) anyNeg = true;
          else onPlane.push_back(t);
          if (anyPos && anyNeg) break;
        }
        if (anyPos && anyNeg) {
          sawNonCoplanar = true;
          continue;
        }
        facets.emplace(key, std::move(onPlane));
      }
  if (facets.empty()) throw DegenerateHullError("exactHull3d: collinear input");
  if (!sawNonCoplanar && facets.size() == 1)
    throw DegenerateHullError("exactHull3d: coplanar input");

  // facet polygons: exact 2d hull of the on-plane points, projected onto the
  // coordinate plane where the facet normal has a nonzero component
  std::set<ExactPoint> vertices;
  std::size_t edgeEnds = 0;
  for (const auto& [key, onPlane] : facets) {
    unsigned drop = 0;
    for (unsigned c = 0; c < 3; ++c)
      if (!key[c].isZero()) drop = c;
    std::vector<std::pair<std::array<Rational, 2>, std::size_t>> flat;
    flat.reserve(onPlane.size());
    for (std::size_t idx : onPlane) {
      std::array<Rational, 2> p2;
      unsigned w = 0;
      for (unsigned c = 0; c < 3; ++c)
        if (c != drop) p2[w++] = pts[idx][c];
      flat.emplace_back(p2, idx);
    }
    std::sort(flat.begin(), flat.end());
    auto cross2x = [&](const std::array<Rational, 2>& o, const std::array<Rational, 2>& a,
                       const std::array<Rational, 2>& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    const std::size_t m = flat.size();
    std::vector<std::size_t> hull(2 * m + 1);
    std::size_t h = 0;
    for (std::size_t t = 0; t < m; ++t) {
      while (h >= 2 && cross2x(flat[hull[h - 2]].first, flat[hull[h - 1]].first,
                               flat[t].first) <= zero)
        --h;
      hull[h++] = t;
    }
    const std::size_t lower = h + 1;
    for (std::size_t t = m - 1; t-- > 0;) {
      while (h >= lower && cross2x(flat[hull[h - 2]].first, flat[hull[h - 1]].first,
                                   flat[t].first) <= zero)
        --h;
      hull[h++] = t;
    }
    const std::size_t polyVertices = h - 1;
    if (polyVertices < 3)
      throw DegenerateHullError("exactHull3d: degenerate facet polygon");
    edgeEnds += polyVertices; // polygon edge count equals its vertex count
    for (std::size_t t = 0; t < polyVertices; ++t)
      vertices.insert(pts[flat[hull[t]].second]);
  }
  // every polytope edge is shared by exactly two facets
  return {vertices.size(), edgeEnds / 2, facets.size()};
}

} // namespace

HullFaceCounts hullFaces(const PointSet& points, unsigned d) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("hullFaces: d must be 2 or 3");
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("hullFaces: point dimension mismatch");
  if (points.size() < d + 1)
    throw DegenerateHullError("hullFaces: need at least d+1 points");
  return d == 2 ? hull2d(points) : hull3d(points);
}

HullFaceCounts minkowskiHullFaces(const std::vector<PointSet>& pointSets,
                                  unsigned d) {
  if (pointSets.empty())
    throw std::invalid_argument("minkowskiHullFaces: no summands");
  std::size_t candidates = 1;
  for (const auto& s : pointSets) {
    if (s.empty()) throw std::invalid_argument("minkowskiHullFaces: empty summand");
    candidates *= s.size();
    if (candidates > 1000000)
      throw std::length_error("minkowskiHullFaces: more than 10^6 candidate points");
  }
  if (d == 3 && pointSets.size() >= 2) {
    // exact sums keep the structural coplanarity of edge+edge facets
    std::vector<ExactPoint> sums;
    sums.reserve(candidates);
    ExactPoint acc{Rational(0), Rational(0), Rational(0)};
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (idx == pointSets.size()) {
        sums.push_back(acc);
        return;
      }
      for (const auto& p : pointSets[idx]) {
        ExactPoint saved = acc;
        for (unsigned c = 0; c < 3; ++c) acc[c] += Rational::fromDouble(p[c]);
        self(self, idx + 1);
        acc = std::move(saved);
      }
    };
    rec(rec, 0);
    return exactHull3d(sums);
  }
  PointSet sums;
  sums.reserve(candidates);
  Point acc(d, 0.0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pointSets.size()) {
      sums.push_back(acc);
      return;
    }
    for (const auto& p : pointSets[idx]) {
      for (unsigned c = 0; c < d; ++c) acc[c] += p[c];
      self(self, idx + 1);
      for (unsigned c = 0; c < d; ++c) acc[c] -= p[c];
    }
  };
  rec(rec, 0);
  return hullFaces(sums, d);
}

} // namespace conesum
