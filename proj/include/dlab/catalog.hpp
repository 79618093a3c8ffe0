#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/cycles.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

enum class PatternKind { C2, C3, C4, W5, F_fig1, H_fig2 };

struct ConfigPattern {
  PatternKind kind = PatternKind::C2;
  std::vector<int> params;

  static ConfigPattern fan(std::vector<int> lengths) {
    ConfigPattern p;
    switch (lengths.size()) {
      case 2: p.kind = PatternKind::C2; break;
      case 3: p.kind = PatternKind::C3; break;
      case 4: p.kind = PatternKind::C4; break;
      default: throw Error(ErrorKind::BadParameters, "C(...) takes two to four lengths");
    }
    p.params = std::move(lengths);
    return p;
  }
  static ConfigPattern w5() { return {PatternKind::W5, {}}; }
  static ConfigPattern f_fig1() { return {PatternKind::F_fig1, {}}; }
  static ConfigPattern h_fig2() { return {PatternKind::H_fig2, {}}; }

  bool is_fan() const { return kind == PatternKind::C2 || kind == PatternKind::C3 || kind == PatternKind::C4; }

  std::string name() const {
    switch (kind) {
      case PatternKind::W5: return "W5";
      case PatternKind::F_fig1: return "F";
      case PatternKind::H_fig2: return "H";
      default: break;
    }
    std::string s = "C(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
  }

  bool operator==(const ConfigPattern& o) const { return kind == o.kind && params == o.params; }
};

/// Accepts "C(3,3,4)", "C3,3,4", "W5", "F", "H" (case-insensitive letters).
inline ConfigPattern parse_pattern(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s == "W5") return ConfigPattern::w5();
  if (s == "F" || s == "F_FIG1") return ConfigPattern::f_fig1();
  if (s == "H" || s == "H_FIG2") return ConfigPattern::h_fig2();
  if (s.size() < 2 || s[0] != 'C') throw Error(ErrorKind::BadParameters, "unknown configuration '" + text + "'");
  std::string body = s.substr(1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw Error(ErrorKind::BadParameters, "unbalanced parenthesis in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> lengths;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        tok.size() > 3)
      throw Error(ErrorKind::BadParameters, "bad length '" + tok + "' in '" + text + "'");
    lengths.push_back(std::stoi(tok));
  }
  for (int l : lengths)
    if (l < 3) throw Error(ErrorKind::BadParameters, "fan lengths must be at least 3");
  return ConfigPattern::fan(std::move(lengths));
}

/// Positions of the chord ends on the outer cycle x1..xN (1-based), and N.
inline std::pair<std::vector<int>, int> fan_layout(const std::vector<int>& lengths) {
  std::vector<int> ends;
  int j = lengths.front();
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    if (i > 0) j += lengths[i] - 2;
    ends.push_back(j);
  }
  int n = 2;
  for (int l : lengths) n += l - 2;
  return {ends, n};
}

inline PlaneGraph build_pattern(const ConfigPattern& p) {
  if (p.is_fan()) {
    for (int l : p.params)
      if (l < 3) throw Error(ErrorKind::BadParameters, "fan lengths must be at least 3");
    auto [ends, n] = fan_layout(p.params);
    std::vector<Point> pts;
    std::vector<std::string> names;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
      pts.push_back({std::cos(2 * pi * i / n), std::sin(2 * pi * i / n)});
      names.push_back("x" + std::to_string(i + 1));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int e : ends) edges.emplace_back(0, e - 1);
    return PlaneGraph::from_coordinates(pts, edges, names);
  }
  switch (p.kind) {
    case PatternKind::W5:
      return PlaneGraph::from_coordinates({{0, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}},
                                          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}},
                                          {"v", "w", "x", "y", "z"});
    case PatternKind::F_fig1:
      // s t u v w y, with t playing the role of x as well
      return PlaneGraph::from_coordinates(
          {{1.86, -0.57}, {3.06, -0.97}, {0.26, -0.97}, {1.26, 0.03}, {2.06, -0.17}, {1.66, 1.43}},
          {{3, 0}, {3, 4}, {3, 2}, {5, 1}, {5, 2}, {2, 1}, {0, 1}, {4, 1}}, {"s", "t", "u", "v", "w", "y"});
    case PatternKind::H_fig2:
      // r s t u v w y, with s playing the role of x as well
      return PlaneGraph::from_coordinates(
          {{0.42, 0.48}, {2.22, 1.48}, {1.62, 0.48}, {2.22, -0.12}, {2.22, -0.92}, {4.02, 0.48}, {2.82, 0.48}},
          {{3, 4}, {0, 1}, {1, 5}, {5, 4}, {4, 0}, {2, 1}, {1, 6}, {6, 3}, {2, 3}}, {"r", "s", "t", "u", "v", "w", "y"});
    default: break;
  }
  throw Error(ErrorKind::BadParameters, "unknown pattern");
}

/// Pattern cycles whose images must be traced faces of the host.
struct FaceAnchor {
  std::vector<VertexId> cycle;
  bool inner = false;  // must also avoid the outer face's vertices when an outer face is set
};

inline std::vector<FaceAnchor> face_anchors(const ConfigPattern& p) {
  switch (p.kind) {
    case PatternKind::W5:
      return {{{0, 1, 2}, true}, {{0, 2, 3}, true}, {{0, 3, 4}, true}, {{0, 4, 1}, true}};
    case PatternKind::F_fig1:
      return {{{0, 1, 2, 3}, false}, {{2, 3, 4, 1, 5}, false}};
    case PatternKind::H_fig2:
      return {{{0, 1, 2, 3, 4}, false}, {{3, 4, 5, 1, 6}, false}};
    default: return {};
  }
}

struct ConfigMatch {
  ConfigPattern pattern;
  std::vector<VertexId> vertex_map;  // pattern vertex -> host vertex
  std::vector<EdgeId> image_edges;   // sorted host edge ids
  bool face_constraints_met = true;
};

struct MatchSet {
  std::vector<ConfigMatch> matches;  // one per image edge set
  std::size_t raw_count = 0;         // injective maps before deduplication
};

inline constexpr std::size_t kDefaultMatchCap = 100'000;

namespace detail {

inline bool walk_equals_cycle(const std::vector<VertexId>& walk, const std::vector<VertexId>& cyc) {
  const std::size_t n = cyc.size();
  if (walk.size() != n) return false;
  for (std::size_t r = 0; r < n; ++r) {
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      if (walk[(r + i) % n] != cyc[i]) fwd = false;
      if (walk[(r + n - i) % n] != cyc[i]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace detail

/// Face traced in g whose boundary is exactly the cycle seq, if any.
inline std::optional<FaceId> face_with_boundary(const PlaneGraph& g, const std::vector<VertexId>& seq) {
  DartId d = g.find_dart(seq[0], seq[1]);
  if (d < 0) return std::nullopt;
  for (DartId x : {d, g.dart(d).twin}) {
    const auto& f = g.face(g.face_of(x));
    if (f.boundary_is_cycle && detail::walk_equals_cycle(f.vertex_walk, seq)) return f.id;
  }
  return std::nullopt;
}

inline bool face_touches_outer(const PlaneGraph& g, FaceId f) {
  if (!g.outer_face()) return false;
  const auto& outer = g.face(*g.outer_face()).incident_vertices;
  for (VertexId v : g.face(f).incident_vertices)
    if (std::binary_search(outer.begin(), outer.end(), v)) return true;
  return false;
}

inline bool anchors_hold(const PlaneGraph& g, const std::vector<FaceAnchor>& anchors,
                         const std::vector<VertexId>& map) {
  for (const auto& a : anchors) {
    std::vector<VertexId> img;
    for (VertexId x : a.cycle) img.push_back(map[x]);
    auto f = face_with_boundary(g, img);
    if (!f) return false;
    if (g.outer_face() && *f == *g.outer_face()) return false;
    if (a.inner && face_touches_outer(g, *f)) return false;
  }
  return true;
}

/// Injective edge-preserving maps of the pattern into g (not necessarily induced),
/// deduplicated by image edge set. Face anchors apply to W5, F and H unless disabled.
inline MatchSet find_matches(const PlaneGraph& g, const ConfigPattern& p, std::size_t cap = kDefaultMatchCap,
                             bool enforce_faces = true) {
  const PlaneGraph pg = build_pattern(p);
  const int k = pg.vertex_count();
  const auto anchors = enforce_faces ? face_anchors(p) : std::vector<FaceAnchor>{};

  // BFS order so that every vertex after the first has an earlier neighbour.
  std::vector<VertexId> order{0};
  std::vector<char> placed(k, 0);
  placed[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId u : pg.neighbors(order[i]))
      if (!placed[u]) {
        placed[u] = 1;
        order.push_back(u);
      }
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  std::vector<std::vector<VertexId>> back(k);  // earlier neighbours, by position
  for (int i = 0; i < k; ++i)
    for (VertexId u : pg.neighbors(order[i]))
      if (pos[u] < i) back[i].push_back(u);

  MatchSet out;
  std::map<std::vector<EdgeId>, std::vector<VertexId>> seen;
  std::vector<VertexId> map(k, -1);
  std::vector<char> used(g.vertex_count(), 0);

  auto complete = [&]() {
    if (!anchors.empty() && !anchors_hold(g, anchors, map)) return;
    if (++out.raw_count > cap) throw Error(ErrorKind::LimitExceeded, "match cap of " + std::to_string(cap) + " reached");
    std::vector<EdgeId> img;
    for (auto [a, b] : pg.edges()) img.push_back(g.edge_id(map[a], map[b]));
    std::sort(img.begin(), img.end());
    seen.emplace(std::move(img), map);
  };
  auto try_vertex = [&](auto&& self, int i, VertexId h) -> void {
    VertexId pv = order[i];
    if (used[h] || g.degree(h) < pg.degree(pv)) return;
    for (VertexId u : back[i])
      if (!g.adjacent(map[u], h)) return;
    map[pv] = h;
    used[h] = 1;
    if (i + 1 == k) {
      complete();
    } else {
      VertexId anchor = map[back[i + 1].front()];
      for (VertexId c : g.neighbors(anchor)) self(self, i + 1, c);
    }
    used[h] = 0;
    map[pv] = -1;
  };
  for (VertexId h = 0; h < g.vertex_count(); ++h) try_vertex(try_vertex, 0, h);

  for (auto& [edges, m] : seen) out.matches.push_back({p, m, edges, true});
  return out;
}

/// The five fan configurations that a graph of the class never contains.
inline std::vector<ConfigPattern> forbidden_fans() {
  return {ConfigPattern::fan({3, 3, 4}), ConfigPattern::fan({3, 3, 5}), ConfigPattern::fan({3, 4, 3}),
          ConfigPattern::fan({3, 4, 4}), ConfigPattern::fan({4, 3, 5})};
}

struct ForbiddenHit {
  std::string name;
  ConfigMatch match;
  std::optional<EmbeddedCycle> cycle;  // the short cycle glued to a wheel
};

/// A W5 (as a subgraph) and a cycle of length at most 6 that meet in exactly one rim edge,
/// all other vertices of the cycle lying off the wheel.
inline std::vector<ForbiddenHit> wheel_cycle_hits(const PlaneGraph& g, std::size_t cap = kDefaultCycleCap) {
  std::vector<ForbiddenHit> out;
  auto wheels = find_matches(g, ConfigPattern::w5(), kDefaultMatchCap, false);
  if (wheels.matches.empty()) return out;
  auto cycles = enumerate_cycles(g, 6, cap);
  std::vector<std::vector<int>> through(g.edge_count());
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    for (EdgeId e : cycles[i].edge_set) through[e].push_back(i);
  for (const auto& m : wheels.matches) {
    std::vector<VertexId> wheel_vs = m.vertex_map;
    std::sort(wheel_vs.begin(), wheel_vs.end());
    std::set<int> reported;
    for (int r = 1; r <= 4; ++r) {
      EdgeId rim = g.edge_id(m.vertex_map[r], m.vertex_map[r % 4 + 1]);
      for (int ci : through[rim]) {
        const auto& c = cycles[ci];
        if (shared_edges(c, {{}, m.image_edges}).size() != 1) continue;
        bool off = true;
        for (VertexId x : c.vertices)
          if (x != m.vertex_map[r] && x != m.vertex_map[r % 4 + 1] && std::binary_search(wheel_vs.begin(), wheel_vs.end(), x))
            off = false;
        if (!off || !reported.insert(ci).second) continue;
        out.push_back({"W5+C" + std::to_string(c.length()), m, c});
      }
    }
  }
  return out;
}

inline std::vector<ForbiddenHit> forbidden_scan(const PlaneGraph& g) {
  std::vector<ForbiddenHit> out;
  for (const auto& p : forbidden_fans())
    for (auto& m : find_matches(g, p).matches) out.push_back({p.name(), std::move(m), std::nullopt});
  for (auto& h : wheel_cycle_hits(g)) out.push_back(std::move(h));
  return out;
}

}  // namespace dlab
