#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/isomorphism.hpp>
#include "json.hpp"

#include "dlab/catalog.hpp"
#include "dlab/cycles.hpp"
#include "dlab/error.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

struct CorpusEntry {
  std::string label;  // how the generator produced it, e.g. "C(3,4)" or "random n=30 seed=7 #2"
  PlaneGraph graph;
};

// ---------------------------------------------------------------------------
// Pattern families

/// Every catalogued configuration with fan lengths in [lo, hi]: C(m,n), C(l,m,n), C(m,n,p,q)
/// (the last only while it stays within `max_vertices`), then W5, F and H.
inline std::vector<CorpusEntry> pattern_family(const std::vector<std::string>& kinds, int lo, int hi,
                                               int max_vertices = 12) {
  if (lo < 3 || hi < lo || hi > 8) throw Error(ErrorKind::BadSpec, "fan lengths must satisfy 3 <= lo <= hi <= 8");
  std::vector<CorpusEntry> out;
  auto add = [&](const ConfigPattern& p) { out.push_back({p.name(), build_pattern(p)}); };
  for (const auto& k : kinds) {
    int arity = k == "C2" ? 2 : k == "C3" ? 3 : k == "C4" ? 4 : 0;
    if (arity) {
      std::vector<int> cur;
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == arity) {
          if (fan_layout(cur).second <= max_vertices) add(ConfigPattern::fan(cur));
          return;
        }
        for (int l = lo; l <= hi; ++l) {
          cur.push_back(l);
          self(self);
          cur.pop_back();
        }
      };
      rec(rec);
    } else if (k == "W5") {
      add(ConfigPattern::w5());
    } else if (k == "F") {
      add(ConfigPattern::f_fig1());
    } else if (k == "H") {
      add(ConfigPattern::h_fig2());
    } else {
      throw Error(ErrorKind::BadSpec, "unknown pattern family '" + k + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random plane graphs

struct RandomPlanarParams {
  int n = 20;
  std::uint64_t seed = 1;
  int flips = -1;         // edge flips after stacking; -1 means 2n
  double keep = 1.0;      // fraction of deletable edges kept when thinning
};

namespace detail {

inline void insert_after(std::vector<VertexId>& rot, VertexId anchor, VertexId x) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, x);
}

inline bool rotation_is_sphere(const std::vector<std::vector<VertexId>>& rot) {
  try {
    auto g = PlaneGraph::from_rotation(rot);
    return g.vertex_count() - g.edge_count() + g.face_count() == 2;
  } catch (const Error&) {
    return false;
  }
}

inline bool still_connected(const std::vector<std::vector<VertexId>>& rot) {
  std::vector<bool> seen(rot.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : rot[v])
      if (!seen[w]) seen[w] = true, ++count, stack.push_back(w);
  }
  return count == rot.size();
}

}  // namespace detail

/// A random stacked triangulation on vertices 0..n-1 with outer face 0,1,2, mixed by random
/// edge flips, then thinned by deleting edges while staying connected. Outer edges are kept.
inline PlaneGraph random_planar(const RandomPlanarParams& p) {
  if (p.n < 3 || p.n > 500) throw Error(ErrorKind::BadSpec, "random_planar needs 3 <= n <= 500");
  if (p.keep < 0.0 || p.keep > 1.0) throw Error(ErrorKind::BadSpec, "keep must lie in [0, 1]");
  std::mt19937_64 rng(p.seed);
  std::vector<std::vector<VertexId>> rot{{1, 2}, {2, 0}, {0, 1}};
  // bounded triangles as oriented walks
  std::vector<std::array<VertexId, 3>> tris;
  {
    auto g = PlaneGraph::from_rotation(rot).designate_outer(0, 1, 2);
    for (const auto& f : g.faces())
      if (f.id != *g.outer_face()) tris.push_back({f.vertex_walk[0], f.vertex_walk[1], f.vertex_walk[2]});
  }
  bool orientation_known = false, forward = true;
  for (VertexId x = 3; x < p.n; ++x) {
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, tris.size() - 1)(rng);
    auto [a, b, c] = tris[pick];
    auto attempt = rot;
    attempt.push_back({});
    // at each corner x goes between the two face edges
    auto place = [&](std::vector<std::vector<VertexId>>& r, bool fwd) {
      if (fwd) {
        detail::insert_after(r[a], c, x);
        detail::insert_after(r[b], a, x);
        detail::insert_after(r[c], b, x);
        r[x] = {a, c, b};
      } else {
        detail::insert_after(r[a], b, x);
        detail::insert_after(r[b], c, x);
        detail::insert_after(r[c], a, x);
        r[x] = {a, b, c};
      }
    };
    if (!orientation_known) {
      auto t = attempt;
      place(t, true);
      forward = detail::rotation_is_sphere(t);
      orientation_known = true;
    }
    place(attempt, forward);
    rot = std::move(attempt);
    tris[pick] = {a, b, x};
    tris.push_back({b, c, x});
    tris.push_back({c, a, x});
  }
  auto is_outer = [](VertexId u, VertexId v) { return u < 3 && v < 3; };
  const int flips = p.flips < 0 ? 2 * p.n : p.flips;
  for (int i = 0; i < flips && p.n > 4; ++i) {
    auto g = PlaneGraph::from_rotation(rot);
    auto [u, v] = g.edges()[std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng)];
    if (is_outer(u, v) || g.degree(u) <= 3 || g.degree(v) <= 3) continue;
    DartId d = g.find_dart(u, v);
    const auto& f1 = g.face(g.face_of(d));
    const auto& f2 = g.face(g.face_of(g.dart(d).twin));
    if (f1.degree != 3 || f2.degree != 3) continue;
    VertexId w = -1, z = -1;
    for (VertexId x : f1.vertex_walk)
      if (x != u && x != v) w = x;
    for (VertexId x : f2.vertex_walk)
      if (x != u && x != v) z = x;
    if (w == z || g.adjacent(w, z)) continue;
    auto t = rot;
    t[u].erase(std::find(t[u].begin(), t[u].end(), v));
    t[v].erase(std::find(t[v].begin(), t[v].end(), u));
    // z goes between u and v around w, w between u and v around z
    auto between = [&](std::vector<VertexId>& r, VertexId p1, VertexId p2, VertexId x) {
      const int k = static_cast<int>(r.size());
      for (int j = 0; j < k; ++j)
        if ((r[j] == p1 && r[(j + 1) % k] == p2) || (r[j] == p2 && r[(j + 1) % k] == p1)) {
          r.insert(r.begin() + j + 1, x);
          return;
        }
    };
    between(t[w], u, v, z);
    between(t[z], u, v, w);
    if (detail::rotation_is_sphere(t)) rot = std::move(t);
  }
  if (p.keep < 1.0) {
    auto g = PlaneGraph::from_rotation(rot);
    std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    int deletable = 0;
    for (auto [u, v] : edges)
      if (!is_outer(u, v)) ++deletable;
    int to_delete = static_cast<int>(deletable * (1.0 - p.keep) + 0.5);
    for (auto [u, v] : edges) {
      if (to_delete == 0) break;
      if (is_outer(u, v)) continue;
      auto t = rot;
      t[u].erase(std::find(t[u].begin(), t[u].end(), v));
      t[v].erase(std::find(t[v].begin(), t[v].end(), u));
      if (!detail::still_connected(t)) continue;
      rot = std::move(t);
      --to_delete;
    }
  }
  return PlaneGraph::from_rotation(rot).designate_outer(0, 1, 2);
}

// ---------------------------------------------------------------------------
// Exhaustive small graphs

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property, boost::property<boost::edge_index_t, int>>;

struct Abstract {
  int n = 0;
  std::vector<std::uint32_t> adj;  // bit masks
};

inline BoostGraph to_boost(const Abstract& a) {
  BoostGraph g(a.n);
  int idx = 0;
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (a.adj[u] >> v & 1) boost::add_edge(u, v, idx++, g);
  return g;
}

inline bool planar(const Abstract& a) {
  auto g = to_boost(a);
  return boost::boyer_myrvold_planarity_test(g);
}

/// Degree sequence refined by neighbour degrees and triangle counts; equal for isomorphic graphs.
inline std::vector<std::uint64_t> invariant(const Abstract& a) {
  std::vector<std::uint64_t> per(a.n);
  for (int v = 0; v < a.n; ++v) {
    std::vector<int> nd;
    int tri = 0;
    for (int w = 0; w < a.n; ++w)
      if (a.adj[v] >> w & 1) {
        nd.push_back(std::popcount(a.adj[w]));
        tri += std::popcount(a.adj[v] & a.adj[w]);
      }
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = static_cast<std::uint64_t>(std::popcount(a.adj[v])) << 56 | static_cast<std::uint64_t>(tri) << 48;
    for (int d : nd) h = h * 31 + d;
    per[v] = h;
  }
  std::sort(per.begin(), per.end());
  per.push_back(static_cast<std::uint64_t>(a.n));
  return per;
}

inline bool isomorphic(const Abstract& a, const Abstract& b) {
  auto ga = to_boost(a), gb = to_boost(b);
  if (boost::num_edges(ga) != boost::num_edges(gb)) return false;
  return boost::isomorphism(ga, gb);
}

inline PlaneGraph embed(const Abstract& a) {
  if (a.n == 1) return PlaneGraph::from_rotation({{}});
  auto g = to_boost(a);
  using Embedding = std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
  Embedding emb(a.n);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = &emb[0]))
    throw Error(ErrorKind::NotSphereEmbedding, "graph is not planar");
  std::vector<std::vector<VertexId>> rot(a.n);
  for (int v = 0; v < a.n; ++v)
    for (auto e : emb[v]) {
      int s = static_cast<int>(boost::source(e, g)), t = static_cast<int>(boost::target(e, g));
      rot[v].push_back(s == v ? t : s);
    }
  return PlaneGraph::from_rotation(rot);
}

}  // namespace detail

/// Designates the lexicographically smallest facial triangle as outer face, if there is one.
inline PlaneGraph with_some_outer_triangle(const PlaneGraph& g) {
  std::optional<std::array<VertexId, 3>> best;
  for (const auto& f : g.faces()) {
    if (f.degree != 3) continue;
    std::array<VertexId, 3> t{f.vertex_walk[0], f.vertex_walk[1], f.vertex_walk[2]};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
    auto s = t;
    std::sort(s.begin(), s.end());
    if (!best || s < *best) best = s;
  }
  if (!best) return g;
  return g.designate_outer((*best)[0], (*best)[1], (*best)[2]);
}

/// All connected planar graphs on min_n..max_n vertices up to isomorphism, one plane embedding
/// each, with a facial triangle designated as outer face whenever one exists.
inline std::vector<CorpusEntry> exhaustive_small(int max_n, int min_n = 1) {
  if (max_n < 1 || max_n > 9 || min_n < 1 || min_n > max_n)
    throw Error(ErrorKind::BadSpec, "exhaustive_small supports 1 <= min_n <= max_n <= 9");
  std::vector<std::vector<detail::Abstract>> levels(max_n + 1);
  levels[1].push_back({1, {0}});
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::vector<std::uint64_t>, std::vector<int>> buckets;
    auto& cur = levels[n];
    for (const auto& parent : levels[n - 1])
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        detail::Abstract a{n, parent.adj};
        a.adj.push_back(mask);
        for (int v = 0; v < n - 1; ++v)
          if (mask >> v & 1) a.adj[v] |= 1u << (n - 1);
        if (!detail::planar(a)) continue;
        auto key = detail::invariant(a);
        auto& bucket = buckets[key];
        bool seen = false;
        for (int i : bucket)
          if (detail::isomorphic(cur[i], a)) {
            seen = true;
            break;
          }
        if (seen) continue;
        bucket.push_back(static_cast<int>(cur.size()));
        cur.push_back(std::move(a));
      }
  }
  std::vector<CorpusEntry> out;
  for (int n = min_n; n <= max_n; ++n)
    for (std::size_t i = 0; i < levels[n].size(); ++i)
      out.push_back({"exhaustive n=" + std::to_string(n) + " #" + std::to_string(i),
                     with_some_outer_triangle(detail::embed(levels[n][i]))});
  return out;
}

// ---------------------------------------------------------------------------
// Corpus specifications

struct CorpusSpec {
  std::string generator;  // pattern_family | random_planar | exhaustive_small
  bool filter_family_a = false;
  // pattern_family
  std::vector<std::string> families{"C2", "C3", "C4", "W5", "F", "H"};
  int lo = 3, hi = 5, max_vertices = 12;
  // random_planar
  std::vector<int> sizes{20};
  std::vector<std::uint64_t> seeds{1};
  int count = 1;
  double keep = 1.0;
  // exhaustive_small
  int min_n = 1, max_n = 6;
};

inline CorpusSpec parse_corpus_spec(const nlohmann::json& j) {
  CorpusSpec s;
  try {
    if (!j.is_object()) throw Error(ErrorKind::BadSpec, "corpus spec must be a JSON object");
    static const std::set<std::string> known{"generator", "filter", "families", "lo", "hi", "max_vertices", "sizes",
                                             "seeds", "count", "keep", "min_n", "max_n"};
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!known.count(it.key())) throw Error(ErrorKind::BadSpec, "unknown corpus spec key '" + it.key() + "'");
    s.generator = j.at("generator").get<std::string>();
    if (j.contains("filter")) {
      auto f = j["filter"].get<std::string>();
      if (f == "in_family_A") s.filter_family_a = true;
      else if (f != "none") throw Error(ErrorKind::BadSpec, "filter must be in_family_A or none");
    }
    if (j.contains("families")) s.families = j["families"].get<std::vector<std::string>>();
    if (j.contains("lo")) s.lo = j["lo"].get<int>();
    if (j.contains("hi")) s.hi = j["hi"].get<int>();
    if (j.contains("max_vertices")) s.max_vertices = j["max_vertices"].get<int>();
    if (j.contains("sizes")) s.sizes = j["sizes"].get<std::vector<int>>();
    if (j.contains("seeds")) s.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("count")) s.count = j["count"].get<int>();
    if (j.contains("keep")) s.keep = j["keep"].get<double>();
    if (j.contains("min_n")) s.min_n = j["min_n"].get<int>();
    if (j.contains("max_n")) s.max_n = j["max_n"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadSpec, std::string("corpus spec: ") + e.what());
  }
  if (s.generator != "pattern_family" && s.generator != "random_planar" && s.generator != "exhaustive_small")
    throw Error(ErrorKind::BadSpec, "unknown generator '" + s.generator + "'");
  if (s.count < 1 || s.count > 100000) throw Error(ErrorKind::BadSpec, "count must lie in 1..100000");
  return s;
}

inline nlohmann::json to_json(const CorpusSpec& s) {
  nlohmann::json j;
  j["generator"] = s.generator;
  j["filter"] = s.filter_family_a ? "in_family_A" : "none";
  if (s.generator == "pattern_family") {
    j["families"] = s.families;
    j["lo"] = s.lo;
    j["hi"] = s.hi;
    j["max_vertices"] = s.max_vertices;
  } else if (s.generator == "random_planar") {
    j["sizes"] = s.sizes;
    j["seeds"] = s.seeds;
    j["count"] = s.count;
    j["keep"] = s.keep;
  } else {
    j["min_n"] = s.min_n;
    j["max_n"] = s.max_n;
  }
  return j;
}

/// Random graphs for seed s and index i use the stream seeded by s * 1000003 + i.
inline std::vector<CorpusEntry> generate(const CorpusSpec& s) {
  std::vector<CorpusEntry> all;
  if (s.generator == "pattern_family") {
    all = pattern_family(s.families, s.lo, s.hi, s.max_vertices);
  } else if (s.generator == "random_planar") {
    for (int n : s.sizes)
      for (std::uint64_t seed : s.seeds)
        for (int i = 0; i < s.count; ++i) {
          RandomPlanarParams p;
          p.n = n;
          p.seed = seed * 1000003ULL + static_cast<std::uint64_t>(i);
          p.keep = s.keep;
          all.push_back({"random n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " #" + std::to_string(i),
                         random_planar(p)});
        }
  } else {
    all = exhaustive_small(s.max_n, s.min_n);
  }
  if (!s.filter_family_a) return all;
  std::vector<CorpusEntry> kept;
  for (auto& e : all)
    if (in_family_A(e.graph)) kept.push_back(std::move(e));
  return kept;
}

}  // namespace dlab
