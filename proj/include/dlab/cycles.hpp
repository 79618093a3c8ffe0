#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

/// A cycle of the host graph. vertices is canonical: it starts at the smallest
/// vertex and the second entry is smaller than the last.
struct EmbeddedCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_set;  // sorted host edge ids

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const EmbeddedCycle& o) const { return vertices == o.vertices; }
  bool operator<(const EmbeddedCycle& o) const {
    if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
    return vertices < o.vertices;
  }
};

inline std::vector<VertexId> canonical_cycle_order(std::vector<VertexId> seq) {
  auto it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), it, seq.end());
  if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

/// Validates that seq is a cycle of g and returns it in canonical form.
inline EmbeddedCycle make_cycle(const PlaneGraph& g, const std::vector<VertexId>& seq) {
  if (seq.size() < 3) throw Error(ErrorKind::BadParameters, "a cycle needs at least three vertices");
  std::vector<VertexId> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::BadParameters, "cycle repeats a vertex");
  EmbeddedCycle c;
  c.vertices = canonical_cycle_order(seq);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EdgeId e = g.edge_id(seq[i], seq[(i + 1) % seq.size()]);
    if (e < 0)
      throw Error(ErrorKind::BadParameters, "cycle uses non-edge " + g.name(seq[i]) + "-" + g.name(seq[(i + 1) % seq.size()]));
    c.edge_set.push_back(e);
  }
  std::sort(c.edge_set.begin(), c.edge_set.end());
  return c;
}

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Every cycle of length at most max_len (3..8), once each, sorted by (length, vertices).
inline std::vector<EmbeddedCycle> enumerate_cycles(const PlaneGraph& g, int max_len,
                                                   std::size_t cap = kDefaultCycleCap) {
  if (max_len < 3 || max_len > 8) throw Error(ErrorKind::BadParameters, "max_len must lie in [3, 8]");
  const int n = g.vertex_count();
  std::vector<EmbeddedCycle> out;
  std::vector<VertexId> path;
  std::vector<char> on_path(n, 0);
  auto record = [&]() {
    if (out.size() >= cap) throw Error(ErrorKind::LimitExceeded, "cycle cap of " + std::to_string(cap) + " reached");
    EmbeddedCycle c;
    c.vertices = path;
    for (std::size_t i = 0; i < path.size(); ++i)
      c.edge_set.push_back(g.edge_id(path[i], path[(i + 1) % path.size()]));
    std::sort(c.edge_set.begin(), c.edge_set.end());
    out.push_back(std::move(c));
  };
  auto extend = [&](auto&& self, VertexId s) -> void {
    VertexId u = path.back();
    for (VertexId w : g.neighbors(u)) {
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) record();
        continue;
      }
      if (w < s || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, s);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cycles are adjacent when they share at least one edge.
inline bool cycles_adjacent(const EmbeddedCycle& a, const EmbeddedCycle& b) {
  auto i = a.edge_set.begin();
  auto j = b.edge_set.begin();
  while (i != a.edge_set.end() && j != b.edge_set.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline std::vector<EdgeId> shared_edges(const EmbeddedCycle& a, const EmbeddedCycle& b) {
  std::vector<EdgeId> out;
  std::set_intersection(a.edge_set.begin(), a.edge_set.end(), b.edge_set.begin(), b.edge_set.end(),
                        std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Regions of an embedded cycle

struct CycleRegions {
  std::vector<int> face_side;  // 1 = interior, 0 = exterior, per face
  std::vector<VertexId> interior_vertices;
  std::vector<VertexId> exterior_vertices;
};

/// Face whose side is called "exterior" when no outer face is designated.
inline FaceId reference_outer_face(const PlaneGraph& g) {
  if (g.outer_face()) return *g.outer_face();
  FaceId best = 0;
  for (const auto& f : g.faces())
    if (f.degree > g.face(best).degree) best = f.id;
  return best;
}

/// Splits the faces into the two regions of c (dual search that never crosses a cycle edge).
inline CycleRegions cycle_regions(const PlaneGraph& g, const EmbeddedCycle& c) {
  const int nf = g.face_count();
  std::vector<char> on_cycle_edge(g.edge_count(), 0);
  for (EdgeId e : c.edge_set) on_cycle_edge[e] = 1;
  std::vector<int> comp(nf, -1);
  const FaceId outer = reference_outer_face(g);
  std::vector<FaceId> stack{outer};
  comp[outer] = 0;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (DartId d : g.face(f).boundary_walk) {
      if (on_cycle_edge[d / 2]) continue;
      FaceId h = g.face_of(g.dart(d).twin);
      if (comp[h] < 0) {
        comp[h] = 0;
        stack.push_back(h);
      }
    }
  }
  CycleRegions r;
  r.face_side.resize(nf);
  for (int f = 0; f < nf; ++f) r.face_side[f] = comp[f] < 0 ? 1 : 0;
  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (VertexId v : c.vertices) on_cycle[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    auto fs = g.incident_faces(v);
    bool inside = !fs.empty() && r.face_side[fs.front()] == 1;
    (inside ? r.interior_vertices : r.exterior_vertices).push_back(v);
  }
  return r;
}

enum class ChordSide { Internal, External };

struct ChordClassification {
  std::pair<VertexId, VertexId> chord;
  ChordSide side = ChordSide::Internal;
  bool triangular = false;
};

inline std::vector<ChordClassification> classify_chords(const PlaneGraph& g, const EmbeddedCycle& c) {
  std::vector<ChordClassification> out;
  const int len = c.length();
  std::optional<CycleRegions> regions;
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      VertexId x = c.vertices[i], y = c.vertices[j];
      DartId d = g.find_dart(x, y);
      if (d < 0) continue;
      if (!regions) regions = cycle_regions(g, c);
      ChordClassification ch;
      ch.chord = {std::min(x, y), std::max(x, y)};
      ch.side = regions->face_side[g.face_of(d)] == 1 ? ChordSide::Internal : ChordSide::External;
      ch.triangular = (j - i == 2) || (len - (j - i) == 2);
      out.push_back(ch);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.chord < b.chord; });
  return out;
}

// ---------------------------------------------------------------------------
// Class membership

struct FamilyAWitness {
  std::array<EmbeddedCycle, 4> cycles;               // lengths 3, 4, 5, 6
  std::array<std::vector<EdgeId>, 6> shared_edges;  // pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
};

inline bool witness_is_valid(const FamilyAWitness& w) {
  for (int i = 0; i < 4; ++i)
    if (w.cycles[i].length() != 3 + i) return false;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++k)
      if (w.shared_edges[k].empty() || w.shared_edges[k] != shared_edges(w.cycles[i], w.cycles[j])) return false;
  return true;
}

/// Four pairwise adjacent cycles of lengths 3,4,5,6, if any. nullopt means the graph lies in the class.
inline std::optional<FamilyAWitness> find_family_a_witness(const PlaneGraph& g,
                                                           std::size_t cap = kDefaultCycleCap) {
  auto cycles = enumerate_cycles(g, 6, cap);
  std::array<std::vector<int>, 7> by_len;
  std::vector<std::vector<int>> through(g.edge_count());
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    by_len[cycles[i].length()].push_back(i);
    for (EdgeId e : cycles[i].edge_set) through[e].push_back(i);
  }
  if (by_len[3].empty() || by_len[4].empty() || by_len[5].empty() || by_len[6].empty()) return std::nullopt;
  std::vector<int> mark(cycles.size(), -1);
  for (int c3 : by_len[3]) {
    std::array<std::vector<int>, 7> near;
    for (EdgeId e : cycles[c3].edge_set)
      for (int c : through[e])
        if (mark[c] != c3) {
          mark[c] = c3;
          near[cycles[c].length()].push_back(c);
        }
    for (auto& v : near) std::sort(v.begin(), v.end());
    for (int c4 : near[4])
      for (int c5 : near[5]) {
        if (!cycles_adjacent(cycles[c4], cycles[c5])) continue;
        for (int c6 : near[6]) {
          if (!cycles_adjacent(cycles[c4], cycles[c6]) || !cycles_adjacent(cycles[c5], cycles[c6])) continue;
          FamilyAWitness w;
          w.cycles = {cycles[c3], cycles[c4], cycles[c5], cycles[c6]};
          int k = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) w.shared_edges[k++] = shared_edges(w.cycles[i], w.cycles[j]);
          return w;
        }
      }
  }
  return std::nullopt;
}

inline bool in_family_A(const PlaneGraph& g, std::size_t cap = kDefaultCycleCap) {
  return !find_family_a_witness(g, cap).has_value();
}

struct SeparatingCycle {
  EmbeddedCycle cycle;
  std::vector<VertexId> interior;
  std::vector<VertexId> exterior;
};

inline std::vector<SeparatingCycle> find_separating_3cycles(const PlaneGraph& g) {
  if (!g.outer_face()) throw Error(ErrorKind::MissingOuterFace, "separating cycles need a designated outer face");
  std::vector<SeparatingCycle> out;
  for (auto& c : enumerate_cycles(g, 3)) {
    auto r = cycle_regions(g, c);
    if (!r.interior_vertices.empty() && !r.exterior_vertices.empty())
      out.push_back({c, std::move(r.interior_vertices), std::move(r.exterior_vertices)});
  }
  return out;
}

}  // namespace dlab
