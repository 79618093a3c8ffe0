#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dlab/catalog.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

enum class Richness { Poor, SemiRich, Rich };
enum class FacePosition { Inner, Extreme, Unbounded };
enum class TrioRole { Good, Bad, Worse, Worst };

inline std::string to_string(Richness r) {
  switch (r) {
    case Richness::Poor: return "poor";
    case Richness::SemiRich: return "semi-rich";
    case Richness::Rich: return "rich";
  }
  return "?";
}
inline std::string to_string(FacePosition p) {
  switch (p) {
    case FacePosition::Inner: return "inner";
    case FacePosition::Extreme: return "extreme";
    case FacePosition::Unbounded: return "unbounded";
  }
  return "?";
}
inline std::string to_string(TrioRole r) {
  switch (r) {
    case TrioRole::Good: return "good";
    case TrioRole::Bad: return "bad";
    case TrioRole::Worse: return "worse";
    case TrioRole::Worst: return "worst";
  }
  return "?";
}

struct FaceClass {
  FaceId face = -1;
  int degree = 0;
  int big_vertices = 0;  // distinct incident vertices of degree >= 5
  Richness richness = Richness::Poor;
  FacePosition position = FacePosition::Inner;
};

/// Three consecutive inner 3-faces around `center` spanning five vertices.
struct Trio {
  VertexId center = -1;
  std::array<FaceId, 3> faces{};
  ConfigMatch match;  // C(3,3,3) with x1 = center
};

/// A W5 cluster or a trio cluster of inner 3-faces that R8 equalizes.
struct Cluster {
  int id = 0;
  std::vector<FaceId> faces;   // sorted
  std::vector<VertexId> hubs;  // W5 hubs in the cluster
  std::vector<int> trios;      // indices into Classification::trios
  bool merged = false;
};

struct VertexProfile {
  VertexId vertex = -1;
  int degree = 0;
  std::vector<int> face_degrees;  // cyclic, in rotation order
  bool interior = true;
  bool flaw = false;
  bool w5_hub = false;
};

struct Classification {
  std::vector<FaceClass> faces;
  std::vector<VertexProfile> vertices;
  std::vector<Trio> trios;
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of_face;  // -1 when not clustered
  std::vector<std::string> anomalies;

  // (vertex, face) roles; faces outside every cluster are good for everyone.
  std::vector<std::vector<std::pair<FaceId, TrioRole>>> roles;

  TrioRole role(VertexId v, FaceId f) const {
    for (auto [face, r] : roles[v])
      if (face == f) return r;
    return TrioRole::Good;
  }
  bool in_trio(FaceId f) const { return cluster_of_face[f] >= 0; }
};

inline std::vector<FaceClass> classify_faces(const PlaneGraph& g) {
  if (!g.outer_face()) throw Error(ErrorKind::MissingOuterFace, "face classification needs an outer face");
  std::vector<FaceClass> out;
  for (const auto& f : g.faces()) {
    FaceClass c;
    c.face = f.id;
    c.degree = f.degree;
    for (VertexId v : f.incident_vertices)
      if (g.degree(v) >= 5) ++c.big_vertices;
    c.richness = c.big_vertices == 0 ? Richness::Poor : c.big_vertices == 1 ? Richness::SemiRich : Richness::Rich;
    if (f.id == *g.outer_face())
      c.position = FacePosition::Unbounded;
    else
      c.position = face_touches_outer(g, f.id) ? FacePosition::Extreme : FacePosition::Inner;
    out.push_back(c);
  }
  return out;
}

namespace detail {

inline bool matches_cyclic(const std::vector<int>& d, const std::vector<int>& pat, bool plus_last) {
  const int n = static_cast<int>(d.size());
  if (n != static_cast<int>(pat.size())) return false;
  for (int r = 0; r < n; ++r)
    for (int dir : {1, -1}) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int x = d[((r + dir * i) % n + n) % n];
        ok = (plus_last && i == n - 1) ? x >= pat[i] : x == pat[i];
      }
      if (ok) return true;
    }
  return false;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Vertex profiles, trios, clusters and roles. In strict mode overlapping clusters and
/// conflicting roles raise; otherwise they are merged or resolved and logged as anomalies.
inline Classification classify(const PlaneGraph& g, bool strict = false) {
  Classification c;
  c.faces = classify_faces(g);
  const int n = g.vertex_count();
  const auto& outer = g.face(*g.outer_face()).incident_vertices;
  auto inner3 = [&](FaceId f) { return c.faces[f].position == FacePosition::Inner && c.faces[f].degree == 3; };

  for (VertexId v = 0; v < n; ++v) {
    VertexProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    p.interior = !std::binary_search(outer.begin(), outer.end(), v);
    auto fs = g.incident_faces(v);
    bool all_inner = true, poor5 = false;
    for (FaceId f : fs) {
      p.face_degrees.push_back(g.face(f).degree);
      if (c.faces[f].position != FacePosition::Inner) all_inner = false;
      if (g.face(f).degree == 5 && c.faces[f].richness == Richness::Poor) poor5 = true;
    }
    if (p.degree == 4 && all_inner && poor5) p.flaw = detail::matches_cyclic(p.face_degrees, {3, 5, 3, 5}, true);
    if (p.degree == 4) p.w5_hub = std::all_of(fs.begin(), fs.end(), inner3);
    c.vertices.push_back(std::move(p));
  }

  // Trios: consecutive inner 3-faces at a vertex, three of them spanning five vertices.
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 4) continue;
    auto fs = g.incident_faces(v);
    auto nb = g.neighbors(v);
    for (int i = 0; i < d; ++i) {
      std::array<FaceId, 3> t{fs[i], fs[(i + 1) % d], fs[(i + 2) % d]};
      if (!inner3(t[0]) || !inner3(t[1]) || !inner3(t[2])) continue;
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
      std::vector<VertexId> xs{v, nb[(i - 1 + d) % d], nb[i], nb[(i + 1) % d], nb[(i + 2) % d]};
      std::vector<VertexId> sorted = xs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      Trio trio;
      trio.center = v;
      trio.faces = t;
      trio.match.pattern = ConfigPattern::fan({3, 3, 3});
      trio.match.vertex_map = xs;
      for (int a = 1; a <= 4; ++a) trio.match.image_edges.push_back(g.edge_id(xs[a], xs[a + 1 == 5 ? 0 : a + 1]));
      trio.match.image_edges.push_back(g.edge_id(xs[0], xs[1]));
      trio.match.image_edges.push_back(g.edge_id(xs[0], xs[2]));
      trio.match.image_edges.push_back(g.edge_id(xs[0], xs[3]));
      std::sort(trio.match.image_edges.begin(), trio.match.image_edges.end());
      trio.match.image_edges.erase(std::unique(trio.match.image_edges.begin(), trio.match.image_edges.end()),
                                   trio.match.image_edges.end());
      c.trios.push_back(std::move(trio));
    }
  }

  // Raw clusters: one per W5 hub, one per trio not inside a hub's wheel.
  std::vector<Cluster> raw;
  std::vector<int> hub_cluster_of_face(g.face_count(), -1);
  for (VertexId v = 0; v < n; ++v)
    if (c.vertices[v].w5_hub) {
      Cluster cl;
      auto fs = g.incident_faces(v);
      cl.faces.assign(fs.begin(), fs.end());
      std::sort(cl.faces.begin(), cl.faces.end());
      cl.hubs = {v};
      for (FaceId f : cl.faces) hub_cluster_of_face[f] = static_cast<int>(raw.size());
      raw.push_back(std::move(cl));
    }
  for (int ti = 0; ti < static_cast<int>(c.trios.size()); ++ti) {
    const auto& t = c.trios[ti];
    int h = hub_cluster_of_face[t.faces[0]];
    if (h >= 0 && hub_cluster_of_face[t.faces[1]] == h && hub_cluster_of_face[t.faces[2]] == h &&
        raw[h].hubs.front() == t.center) {
      raw[h].trios.push_back(ti);
      continue;
    }
    Cluster cl;
    cl.faces.assign(t.faces.begin(), t.faces.end());
    std::sort(cl.faces.begin(), cl.faces.end());
    cl.trios = {ti};
    raw.push_back(std::move(cl));
  }

  detail::UnionFind uf(static_cast<int>(raw.size()));
  std::vector<int> owner(g.face_count(), -1);
  for (int k = 0; k < static_cast<int>(raw.size()); ++k)
    for (FaceId f : raw[k].faces) {
      if (owner[f] >= 0 && uf.find(owner[f]) != uf.find(k)) {
        if (strict)
          throw Error(ErrorKind::OverlappingCluster, "face " + std::to_string(f) + " lies in two clusters");
        c.anomalies.push_back("face f" + std::to_string(f) + " lies in two clusters; they are merged");
        uf.unite(owner[f], k);
      }
      owner[f] = k;
    }
  std::map<int, Cluster> merged;
  for (int k = 0; k < static_cast<int>(raw.size()); ++k) {
    auto& m = merged[uf.find(k)];
    if (!m.faces.empty() || !m.trios.empty() || !m.hubs.empty()) m.merged = true;
    m.faces.insert(m.faces.end(), raw[k].faces.begin(), raw[k].faces.end());
    m.hubs.insert(m.hubs.end(), raw[k].hubs.begin(), raw[k].hubs.end());
    m.trios.insert(m.trios.end(), raw[k].trios.begin(), raw[k].trios.end());
  }
  for (auto& [root, m] : merged) {
    std::sort(m.faces.begin(), m.faces.end());
    m.faces.erase(std::unique(m.faces.begin(), m.faces.end()), m.faces.end());
    std::sort(m.hubs.begin(), m.hubs.end());
    std::sort(m.trios.begin(), m.trios.end());
    c.clusters.push_back(std::move(m));
  }
  std::sort(c.clusters.begin(), c.clusters.end(), [](const Cluster& a, const Cluster& b) { return a.faces < b.faces; });
  c.cluster_of_face.assign(g.face_count(), -1);
  for (int k = 0; k < static_cast<int>(c.clusters.size()); ++k) {
    c.clusters[k].id = k;
    for (FaceId f : c.clusters[k].faces) c.cluster_of_face[f] = k;
  }

  // Roles. Wheel faces: hub worst, rim worse. Other clustered faces: count of trio faces at v.
  c.roles.assign(n, {});
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (c.cluster_of_face[f] < 0) continue;
    int h = hub_cluster_of_face[f];
    for (VertexId v : g.face(f).incident_vertices) {
      TrioRole r = TrioRole::Good;
      if (h >= 0) {
        r = raw[h].hubs.front() == v ? TrioRole::Worst : TrioRole::Worse;
      } else {
        std::optional<TrioRole> chosen;
        for (int ti = 0; ti < static_cast<int>(c.trios.size()); ++ti) {
          const auto& t = c.trios[ti];
          if (std::find(t.faces.begin(), t.faces.end(), f) == t.faces.end()) continue;
          int cnt = 0;
          for (FaceId tf : t.faces) {
            const auto& iv = g.face(tf).incident_vertices;
            if (std::binary_search(iv.begin(), iv.end(), v)) ++cnt;
          }
          TrioRole here = cnt == 1 ? TrioRole::Bad : cnt == 2 ? TrioRole::Worse : TrioRole::Worst;
          if (!chosen) {
            chosen = here;
          } else if (*chosen != here) {
            if (strict)
              throw Error(ErrorKind::AmbiguousRule, "vertex " + g.name(v) + " has conflicting roles on face f" +
                                                        std::to_string(f));
            c.anomalies.push_back("vertex " + g.name(v) + " has conflicting roles on face f" + std::to_string(f) +
                                  "; the first trio's role is used");
          }
        }
        r = chosen.value_or(TrioRole::Good);
      }
      c.roles[v].emplace_back(f, r);
    }
  }
  return c;
}

inline std::vector<VertexProfile> classify_vertices(const PlaneGraph& g) { return classify(g).vertices; }

}  // namespace dlab
