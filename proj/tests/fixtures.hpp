#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab::testing {

inline PlaneGraph triangle() { return PlaneGraph::from_rotation({{1, 2}, {2, 0}, {0, 1}}); }

inline PlaneGraph path3() { return PlaneGraph::from_rotation({{1}, {0, 2}, {1}}); }

/// Outer triangle 0,1,2 with 3 in the middle.
inline PlaneGraph k4() {
  return PlaneGraph::from_coordinates({{0, 10}, {-9, -5}, {9, -5}, {0, 0}},
                                      {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

/// Hub 0 with rim 1,2,3,4 in cyclic order.
inline PlaneGraph w5() {
  return PlaneGraph::from_coordinates({{0, 0}, {0, 5}, {5, 0}, {0, -5}, {-5, 0}},
                                      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}},
                                      {"h", "r", "s", "u", "v"});
}

/// Outer square 0..3, inner square 4..7.
inline PlaneGraph cube() {
  return PlaneGraph::from_coordinates(
      {{-10, 10}, {10, 10}, {10, -10}, {-10, -10}, {-3, 3}, {3, 3}, {3, -3}, {-3, -3}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

namespace geo {

inline double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool segments_cross(Point a, Point b, Point c, Point d) {
  const double e = 1e-9;
  double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > e && d2 < -e) || (d1 < -e && d2 > e)) && ((d3 > e && d4 < -e) || (d3 < -e && d4 > e));
}

inline bool passes_through(Point a, Point b, Point p) {
  double len = std::hypot(b.x - a.x, b.y - a.y);
  if (std::abs(cross(a, b, p)) / len > 1e-7) return false;
  double t = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / (len * len);
  return t > 1e-9 && t < 1 - 1e-9;
}

inline bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
    if ((poly[i].y > p.y) != (poly[j].y > p.y) &&
        p.x < (poly[j].x - poly[i].x) * (p.y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x)
      in = !in;
  return in;
}

}  // namespace geo

/// Straight-line drawing completed greedily: shortest non-crossing segments are added between
/// vertices that are not locked, never through a protected polygon. Points 0,1,2 must span a
/// triangle containing everything else; it becomes the outer face.
inline PlaneGraph fill_drawing(const std::vector<Point>& pts, std::vector<std::pair<VertexId, VertexId>> edges,
                               const std::set<VertexId>& locked,
                               const std::vector<std::vector<VertexId>>& protect) {
  const int n = static_cast<int>(pts.size());
  for (auto [u, v] : std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 0}}) edges.emplace_back(u, v);
  std::set<std::pair<VertexId, VertexId>> have;
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (auto [u, v] : edges)
    if (have.insert({std::min(u, v), std::max(u, v)}).second) kept.emplace_back(u, v);
  std::vector<std::vector<Point>> polys;
  for (const auto& pr : protect) {
    std::vector<Point> poly;
    for (VertexId v : pr) poly.push_back(pts[v]);
    polys.push_back(poly);
  }
  std::vector<std::tuple<double, VertexId, VertexId>> cand;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!locked.count(u) && !locked.count(v) && !have.count({u, v}))
        cand.emplace_back(std::hypot(pts[u].x - pts[v].x, pts[u].y - pts[v].y), u, v);
  std::sort(cand.begin(), cand.end());
  for (auto [len, u, v] : cand) {
    bool ok = true;
    for (auto [a, b] : kept)
      if (a != u && a != v && b != u && b != v && geo::segments_cross(pts[u], pts[v], pts[a], pts[b])) ok = false;
    for (VertexId w = 0; w < n && ok; ++w)
      if (w != u && w != v && geo::passes_through(pts[u], pts[v], pts[w])) ok = false;
    for (double t : {0.25, 0.5, 0.75}) {
      Point m{pts[u].x + t * (pts[v].x - pts[u].x), pts[u].y + t * (pts[v].y - pts[u].y)};
      for (const auto& poly : polys)
        if (ok && geo::inside(poly, m)) ok = false;
    }
    if (!ok) continue;
    kept.emplace_back(u, v);
    have.insert({u, v});
  }
  return PlaneGraph::from_coordinates(pts, kept).designate_outer(0, 1, 2);
}

inline const std::vector<Point> kBigTriangle{{0, 40}, {-40, -30}, {40, -30}};

/// An inner (4,4,5+)-face abc whose 4-vertices a=3, b=4 are both flaw; c=5.
inline PlaneGraph flaw_triangle() {
  std::vector<Point> p = kBigTriangle;
  // a b c p1 p2 p3 q r u1 u2 w1 w2 k z1 z3 y1 y2
  for (Point x : std::vector<Point>{{-1, 0}, {1, 0}, {0, 2}, {1.6, -1.4}, {0, -2.4}, {-1.6, -1.4}, {-2.6, -0.2},
                                    {2.6, -0.2}, {-3, 2}, {-1.5, 3.5}, {3, 2}, {1.5, 3.5}, {0, 4.5}, {2.4, -2.6},
                                    {-2.4, -2.6}, {0.9, -3.8}, {-0.9, -3.8}})
    p.push_back(x);
  enum { a = 3, b, c, p1, p2, p3, q, r, u1, u2, w1, w2, k, z1, z3, y1, y2 };
  std::vector<std::pair<VertexId, VertexId>> e{
      {a, b}, {b, c}, {c, a}, {b, p1}, {p1, p2}, {p2, p3}, {p3, a}, {a, q}, {p3, q}, {b, r}, {p1, r},
      {q, u1}, {u1, u2}, {u2, c}, {r, w1}, {w1, w2}, {w2, c}, {c, k}, {p1, z1}, {p3, z3}, {p2, y1}, {p2, y2}};
  return fill_drawing(p, e, {a, b, p1, p2, p3}, {{a, b, p1, p2, p3}, {c, a, q, u1, u2}, {c, b, r, w1, w2}});
}

/// An inner 4-face 3,4,5,6 with 3,4,5 of degree 4 and 6 of degree at least 5.
inline PlaneGraph square_4445() {
  std::vector<Point> p = kBigTriangle;
  // s0 s1 s2 s3 A B C E F G H I J
  for (Point x : std::vector<Point>{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {-2.5, -1.2}, {-1.2, -2.5}, {1.2, -2.5},
                                    {2.5, -1.2}, {2.5, 1.2}, {1.2, 2.5}, {-2.5, 2.5}, {-1.2, 2.5}, {-2.5, 1.2}})
    p.push_back(x);
  enum { s0 = 3, s1, s2, s3, A, B, C, E, F, G, H, I, J };
  std::vector<std::pair<VertexId, VertexId>> e{{s0, s1}, {s1, s2}, {s2, s3}, {s3, s0}, {s0, A}, {s0, B}, {s1, C},
                                               {s1, E}, {s2, F}, {s2, G}, {s3, H}, {s3, I}, {s3, J}};
  return fill_drawing(p, e, {s0, s1, s2}, {{s0, s1, s2, s3}});
}

/// A poor inner 5-face on 3..7 whose five vertices are all flaw.
inline PlaneGraph flaw_pentagon() {
  std::vector<Point> p = kBigTriangle;
  auto polar = [](double r, double deg) {
    double t = deg * M_PI / 180.0;
    return Point{r * std::cos(t), r * std::sin(t)};
  };
  for (int i = 0; i < 5; ++i) p.push_back(polar(1.5, 90 + 72 * i));       // v_i = 3+i
  for (int i = 0; i < 5; ++i) p.push_back(polar(3, 90 + 72 * i + 36));    // x_i = 8+i
  for (int i = 0; i < 5; ++i) p.push_back(polar(4.5, 90 + 72 * i + 12));  // s_i = 13+i
  for (int i = 0; i < 5; ++i) p.push_back(polar(4.5, 90 + 72 * i - 12));  // t_i = 18+i
  auto v = [](int i) { return 3 + (i + 5) % 5; };
  auto x = [](int i) { return 8 + (i + 5) % 5; };
  auto s = [](int i) { return 13 + (i + 5) % 5; };
  auto t = [](int i) { return 18 + (i + 5) % 5; };
  std::vector<std::pair<VertexId, VertexId>> e;
  std::vector<std::vector<VertexId>> protect{{v(0), v(1), v(2), v(3), v(4)}};
  for (int i = 0; i < 5; ++i) {
    e.insert(e.end(), {{v(i), v(i + 1)}, {v(i), x(i)}, {v(i + 1), x(i)}, {x(i), s(i)}, {s(i), t(i)}, {t(i), x(i - 1)}});
    protect.push_back({v(i), x(i), s(i), t(i), x(i - 1)});
  }
  return fill_drawing(p, e, {3, 4, 5, 6, 7}, protect);
}

/// A triangulated disc with a handful of interior points.
inline PlaneGraph small_triangulation() {
  std::vector<Point> p = kBigTriangle;
  for (Point x : std::vector<Point>{{0, 5}, {-8, -6}, {9, -7}, {1, -2}, {-3, 14}, {4, 16}, {-14, -20}, {15, -22}})
    p.push_back(x);
  return fill_drawing(p, {}, {}, {});
}

}  // namespace dlab::testing
