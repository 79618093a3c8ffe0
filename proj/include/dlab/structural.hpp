#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "dlab/classify.hpp"
#include "dlab/cycles.hpp"

namespace dlab {

enum class ViolationKind {
  InteriorLowDegree,
  SeparatingTriangle,
  NonCycleFace,
  AdjacentFaceShape,
  VertexFacePattern,
  WheelNearShortFace,
  TwoFacesLowDegree,
  FanLowDegree,
  C5353LowDegree,
  WheelNeighbourDegrees,
  PoorInnerFourFace,
};

inline std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::InteriorLowDegree: return "interior-3minus-vertex";
    case ViolationKind::SeparatingTriangle: return "separating-3-cycle";
    case ViolationKind::NonCycleFace: return "non-cycle-face";
    case ViolationKind::AdjacentFaceShape: return "adjacent-face-shape";
    case ViolationKind::VertexFacePattern: return "vertex-face-pattern";
    case ViolationKind::WheelNearShortFace: return "w5-adjacent-6minus-face";
    case ViolationKind::TwoFacesLowDegree: return "two-faces-low-degree";
    case ViolationKind::FanLowDegree: return "fan-low-degree";
    case ViolationKind::C5353LowDegree: return "c5353-low-degree";
    case ViolationKind::WheelNeighbourDegrees: return "w5-neighbour-degrees";
    case ViolationKind::PoorInnerFourFace: return "poor-inner-4-face";
  }
  return "?";
}

/// Checks whose failure means a small configuration could be recoloured, rather than a shape fact.
inline bool reducibility_derived(ViolationKind k) {
  switch (k) {
    case ViolationKind::TwoFacesLowDegree:
    case ViolationKind::FanLowDegree:
    case ViolationKind::C5353LowDegree:
    case ViolationKind::WheelNeighbourDegrees:
    case ViolationKind::PoorInnerFourFace: return true;
    default: return false;
  }
}

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertices;  // sorted
  std::vector<FaceId> faces;       // sorted
  std::string detail;

  bool operator<(const Violation& o) const {
    return std::tie(kind, vertices, faces, detail) < std::tie(o.kind, o.vertices, o.faces, o.detail);
  }
  bool operator==(const Violation& o) const {
    return kind == o.kind && vertices == o.vertices && faces == o.faces && detail == o.detail;
  }
};

struct StructuralReport {
  std::vector<Violation> violations;
  bool clean() const { return violations.empty(); }
  std::vector<Violation> of_kind(ViolationKind k) const {
    std::vector<Violation> out;
    for (const auto& v : violations)
      if (v.kind == k) out.push_back(v);
    return out;
  }
};

namespace detail {

inline std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<VertexId> common_vertices(const FaceRecord& a, const FaceRecord& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.incident_vertices.begin(), a.incident_vertices.end(), b.incident_vertices.begin(),
                        b.incident_vertices.end(), std::back_inserter(out));
  return out;
}

/// Position of x in a cycle walk, or -1.
inline int index_in(const std::vector<VertexId>& walk, VertexId x) {
  auto it = std::find(walk.begin(), walk.end(), x);
  return it == walk.end() ? -1 : static_cast<int>(it - walk.begin());
}

/// The vertex of a 5-cycle walk at distance two from both ends of edge (u, v).
inline VertexId apex(const std::vector<VertexId>& walk, VertexId u, VertexId v) {
  const int n = static_cast<int>(walk.size());
  int iu = index_in(walk, u), iv = index_in(walk, v);
  int step = (iv - iu + n) % n == 1 ? -1 : 1;  // walk away from v starting at u
  return walk[((iu + 2 * step) % n + n) % n];
}

/// Neighbour of x along the walk other than `other`.
inline VertexId walk_neighbour(const std::vector<VertexId>& walk, VertexId x, VertexId other) {
  const int n = static_cast<int>(walk.size());
  int i = index_in(walk, x);
  VertexId a = walk[(i + 1) % n], b = walk[(i + n - 1) % n];
  return a == other ? b : a;
}

inline bool forbidden_triple(int a, int b, int c) {
  static const int bad[][3] = {{3, 3, 4}, {3, 3, 5}, {3, 4, 3}, {3, 4, 4}, {4, 3, 5}};
  for (const auto& t : bad)
    if ((a == t[0] && b == t[1] && c == t[2]) || (c == t[0] && b == t[1] && a == t[2])) return true;
  return false;
}

}  // namespace detail

/// Checklist of the properties a minimal counterexample has; every failure is reported.
inline StructuralReport structural_scan(const PlaneGraph& g, const Classification& cls) {
  if (!g.outer_face()) throw Error(ErrorKind::MissingOuterFace, "structural scan needs an outer face");
  StructuralReport rep;
  auto add = [&](ViolationKind k, std::vector<VertexId> vs, std::vector<FaceId> fs, std::string detail) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    rep.violations.push_back({k, detail::sorted_unique(std::move(vs)), std::move(fs), std::move(detail)});
  };
  const FaceId outer = *g.outer_face();
  const auto& C0 = g.face(outer).incident_vertices;
  auto on_c0 = [&](VertexId v) { return std::binary_search(C0.begin(), C0.end(), v); };
  auto inner = [&](FaceId f) { return cls.faces[f].position == FacePosition::Inner; };
  auto deg = [&](VertexId v) { return g.degree(v); };

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!on_c0(v) && deg(v) <= 3) add(ViolationKind::InteriorLowDegree, {v}, {}, "degree " + std::to_string(deg(v)));

  for (auto& s : find_separating_3cycles(g)) add(ViolationKind::SeparatingTriangle, s.cycle.vertices, {}, "");

  for (const auto& f : g.faces())
    if (f.id != outer && f.degree <= 6 && !f.boundary_is_cycle)
      add(ViolationKind::NonCycleFace, f.incident_vertices, {f.id}, "degree " + std::to_string(f.degree));

  // Adjacent bounded faces.
  std::set<std::pair<FaceId, FaceId>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
    if (a == b || a == outer || b == outer) continue;
    if (!pairs.insert({std::min(a, b), std::max(a, b)}).second) continue;
    const auto& fa = g.face(a);
    const auto& fb = g.face(b);
    if (!fa.boundary_is_cycle || !fb.boundary_is_cycle) continue;
    const FaceRecord& f = fa.degree <= fb.degree ? fa : fb;
    const FaceRecord& h = fa.degree <= fb.degree ? fb : fa;
    auto common = detail::common_vertices(f, h);
    if (common.size() == 2) continue;
    const int k1 = f.degree, k2 = h.degree;
    auto [u, v] = g.edges()[e];
    bool ok = false;
    if (k1 + k2 > 8 && !(k1 == 4 && k2 == 5) && !(k1 == 5 && k2 == 5)) ok = true;
    if (!ok && common.size() == 3 && k1 == 4 && k2 == 5) {
      VertexId x = detail::apex(h.vertex_walk, u, v);
      for (VertexId end : {u, v}) {
        VertexId other = end == u ? v : u;
        if (detail::walk_neighbour(f.vertex_walk, end, other) != x) continue;
        VertexId y = detail::walk_neighbour(h.vertex_walk, end, other);
        if (detail::sorted_unique({x, end, y}) == C0) ok = true;
      }
    }
    if (!ok && common.size() == 3 && k1 == 5 && k2 == 5)
      ok = detail::apex(f.vertex_walk, u, v) == detail::apex(h.vertex_walk, u, v);
    if (!ok)
      add(ViolationKind::AdjacentFaceShape, common, {a, b},
          std::to_string(k1) + "-face and " + std::to_string(k2) + "-face share " + std::to_string(common.size()) +
              " vertices");
  }

  // Patterns of three consecutive faces around interior vertices.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (on_c0(v) || deg(v) < 3) continue;
    const auto& d = cls.vertices[v].face_degrees;
    auto fs = g.incident_faces(v);
    const int k = deg(v);
    for (int i = 0; i < k; ++i) {
      int a = d[i], b = d[(i + 1) % k], c = d[(i + 2) % k];
      if (detail::forbidden_triple(a, b, c))
        add(ViolationKind::VertexFacePattern, {v}, {fs[i], fs[(i + 1) % k], fs[(i + 2) % k]},
            "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }

  // Wheels whose rim edges border a short face.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!cls.vertices[v].w5_hub) continue;
    auto nb = g.neighbors(v);
    auto wheel_faces = g.incident_faces(v);
    for (int i = 0; i < 4; ++i) {
      DartId dd = g.find_dart(nb[i], nb[(i + 1) % 4]);
      for (DartId x : {dd, g.dart(dd).twin}) {
        FaceId f = g.face_of(x);
        if (std::find(wheel_faces.begin(), wheel_faces.end(), f) != wheel_faces.end() || f == outer) continue;
        if (g.face(f).degree <= 6)
          add(ViolationKind::WheelNearShortFace, {v, nb[i], nb[(i + 1) % 4]}, {f},
              "rim edge borders a " + std::to_string(g.face(f).degree) + "-face");
      }
    }
  }

  // Two consecutive inner 5^- faces at an interior 5^- vertex need another 5^+ vertex.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (on_c0(v) || deg(v) > 5 || deg(v) < 2) continue;
    auto fs = g.incident_faces(v);
    const int k = deg(v);
    for (int i = 0; i < k; ++i) {
      FaceId f1 = fs[i], f2 = fs[(i + 1) % k];
      if (f1 == f2 || !inner(f1) || !inner(f2) || g.face(f1).degree > 5 || g.face(f2).degree > 5) continue;
      bool found = false;
      for (FaceId f : {f1, f2})
        for (VertexId w : g.face(f).incident_vertices)
          if (w != v && deg(w) >= 5) found = true;
      if (!found) {
        std::vector<VertexId> vs = g.face(f1).incident_vertices;
        vs.insert(vs.end(), g.face(f2).incident_vertices.begin(), g.face(f2).incident_vertices.end());
        add(ViolationKind::TwoFacesLowDegree, vs, {f1, f2}, "centre " + g.name(v));
      }
    }
  }

  // Fans of k+1 consecutive inner faces around x1 with d(x1) <= k+3.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (on_c0(v)) continue;
    const int d = deg(v);
    auto fs = g.incident_faces(v);
    auto nb = g.neighbors(v);
    for (int k = std::max(1, d - 3); k <= d - 2; ++k)
      for (int i = 0; i < d; ++i) {
        std::vector<FaceId> fan;
        bool ok = true;
        for (int j = 0; j <= k && ok; ++j) {
          FaceId f = fs[(i + j) % d];
          ok = inner(f) && g.face(f).boundary_is_cycle;
          fan.push_back(f);
        }
        if (!ok) continue;
        // cycle x1, then each face's boundary path from one spoke to the next
        std::vector<VertexId> cyc{v};
        for (int j = 0; j <= k && ok; ++j) {
          const auto& walk = g.face(fan[j]).vertex_walk;
          VertexId from = nb[(i + j - 1 + d) % d], to = nb[(i + j) % d];
          const int m = static_cast<int>(walk.size());
          int at = detail::index_in(walk, from), iv = detail::index_in(walk, v);
          int step = (iv - at + m) % m == 1 ? -1 : 1;
          if (j == 0) cyc.push_back(from);
          for (int pos = (at + step + m) % m; walk[pos] != to; pos = (pos + step + m) % m) cyc.push_back(walk[pos]);
          cyc.push_back(to);
        }
        auto uniq = detail::sorted_unique(cyc);
        if (uniq.size() != cyc.size()) continue;
        const int m = static_cast<int>(cyc.size());
        std::vector<int> idx(g.vertex_count(), -1);
        for (int a = 0; a < m; ++a) idx[cyc[a]] = a;
        std::vector<char> chord_end(m, 0);
        bool x1_extra = false;
        for (int a = 0; a < m; ++a)
          for (VertexId w : g.neighbors(cyc[a])) {
            int b = idx[w];
            if (b < 0 || b <= a || b == a + 1 || (a == 0 && b == m - 1)) continue;
            if (a == 0) {
              bool spoke = false;
              for (int j = 0; j < k; ++j)
                if (nb[(i + j) % d] == w) spoke = true;
              if (!spoke) x1_extra = true;
            }
            chord_end[a] = chord_end[b] = 1;
          }
        if (x1_extra) continue;
        auto touched = [&](int a) { return chord_end[a] != 0; };
        if (touched(1) && touched(m - 1)) continue;
        bool big = false;
        for (int a = 1; a < m; ++a)
          if (deg(cyc[a]) >= 5) big = true;
        if (!big)
          add(ViolationKind::FanLowDegree, cyc, fan,
              "centre " + g.name(v) + " with " + std::to_string(k) + " chords");
      }
  }

  // Interior 6-vertex with consecutive bounded faces (5,3,5,3).
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (on_c0(v) || deg(v) != 6) continue;
    const auto& d = cls.vertices[v].face_degrees;
    auto fs = g.incident_faces(v);
    for (int i = 0; i < 6; ++i) {
      std::array<int, 4> w{d[i], d[(i + 1) % 6], d[(i + 2) % 6], d[(i + 3) % 6]};
      if (w != std::array<int, 4>{5, 3, 5, 3} && w != std::array<int, 4>{3, 5, 3, 5}) continue;
      std::vector<VertexId> vs;
      std::vector<FaceId> quad;
      for (int j = 0; j < 4; ++j) {
        FaceId f = fs[(i + j) % 6];
        quad.push_back(f);
        vs.insert(vs.end(), g.face(f).incident_vertices.begin(), g.face(f).incident_vertices.end());
      }
      bool big = false;
      for (VertexId x : vs)
        if (x != v && deg(x) >= 5) big = true;
      if (!big) add(ViolationKind::C5353LowDegree, vs, quad, "centre " + g.name(v));
    }
  }

  // W5 hubs with all neighbours of degree at most five need three 5-neighbours.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!cls.vertices[v].w5_hub) continue;
    auto nb = g.neighbors(v);
    int fives = 0;
    bool small = true;
    for (VertexId w : nb) {
      if (deg(w) > 5) small = false;
      if (deg(w) == 5) ++fives;
    }
    if (small && fives < 3) {
      std::vector<VertexId> vs(nb.begin(), nb.end());
      vs.push_back(v);
      auto fs = g.incident_faces(v);
      add(ViolationKind::WheelNeighbourDegrees, vs, {fs.begin(), fs.end()},
          std::to_string(fives) + " neighbours of degree 5");
    }
  }

  for (const auto& f : g.faces()) {
    if (f.degree != 4 || !inner(f.id)) continue;
    if (std::none_of(f.incident_vertices.begin(), f.incident_vertices.end(), [&](VertexId x) { return deg(x) >= 5; }))
      add(ViolationKind::PoorInnerFourFace, f.incident_vertices, {f.id}, "");
  }

  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()), rep.violations.end());
  return rep;
}

inline StructuralReport structural_scan(const PlaneGraph& g) { return structural_scan(g, classify(g)); }

}  // namespace dlab
