#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlab/catalog.hpp"
#include "dlab/error.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

using Color = int;
using ListAssignment = std::vector<std::vector<Color>>;  // sorted, duplicate-free lists
using Coloring = std::vector<Color>;                    // -1 marks an uncoloured vertex
using Adjacency = std::vector<std::vector<int>>;

inline Adjacency adjacency(const PlaneGraph& g) {
  Adjacency a(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    a[v].assign(nb.begin(), nb.end());
    std::sort(a[v].begin(), a[v].end());
  }
  return a;
}

inline bool is_proper(const Adjacency& adj, const Coloring& c, const ListAssignment* lists = nullptr) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (c[v] < 0) return false;
    if (lists && !std::binary_search((*lists)[v].begin(), (*lists)[v].end(), c[v])) return false;
    for (int w : adj[v])
      if (c[w] == c[v]) return false;
  }
  return true;
}

struct SolveStats {
  long long nodes = 0;
};

/// Complete backtracking search: smallest remaining list first, ties by vertex id, colours
/// tried in increasing order, neighbour lists pruned forward. Pins fix colours in advance.
inline std::optional<Coloring> solve(const Adjacency& adj, const ListAssignment& lists,
                                     const std::map<int, Color>& pins = {}, SolveStats* stats = nullptr) {
  const int n = static_cast<int>(adj.size());
  if (static_cast<int>(lists.size()) != n) throw Error(ErrorKind::BadParameters, "one list per vertex is required");
  std::vector<Color> palette;
  for (const auto& l : lists) palette.insert(palette.end(), l.begin(), l.end());
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.size() > 64) throw Error(ErrorKind::BadParameters, "at most 64 distinct colours are supported");
  auto index = [&](Color c) { return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()); };

  std::vector<std::uint64_t> dom(n, 0);
  for (int v = 0; v < n; ++v)
    for (Color c : lists[v]) dom[v] |= std::uint64_t{1} << index(c);
  for (auto [v, c] : pins) {
    if (v < 0 || v >= n) throw Error(ErrorKind::PinConflict, "pinned vertex out of range");
    if (!std::binary_search(lists[v].begin(), lists[v].end(), c))
      throw Error(ErrorKind::PinConflict, "pin " + std::to_string(v) + "=" + std::to_string(c) + " is not in its list");
    for (int w : adj[v]) {
      auto it = pins.find(w);
      if (it != pins.end() && it->second == c)
        throw Error(ErrorKind::PinConflict, "pins on adjacent vertices " + std::to_string(v) + "," +
                                                 std::to_string(w) + " share colour " + std::to_string(c));
    }
  }

  std::vector<int> col(n, -1);
  std::vector<std::pair<int, std::uint64_t>> trail;
  auto assign = [&](int v, int ci) -> bool {
    col[v] = ci;
    const std::uint64_t bit = std::uint64_t{1} << ci;
    for (int w : adj[v])
      if (col[w] < 0 && (dom[w] & bit)) {
        trail.emplace_back(w, dom[w]);
        dom[w] &= ~bit;
        if (!dom[w]) return false;
      }
    return true;
  };
  auto undo = [&](std::size_t mark, int v) {
    while (trail.size() > mark) {
      dom[trail.back().first] = trail.back().second;
      trail.pop_back();
    }
    col[v] = -1;
  };

  for (auto [v, c] : pins)
    if (!assign(v, index(c))) return std::nullopt;

  long long nodes = 0;
  auto rec = [&](auto&& self) -> bool {
    ++nodes;
    int best = -1, best_size = 65;
    for (int v = 0; v < n; ++v)
      if (col[v] < 0) {
        int s = std::popcount(dom[v]);
        if (s < best_size) best = v, best_size = s;
      }
    if (best < 0) return true;
    for (std::uint64_t m = dom[best]; m; m &= m - 1) {
      int ci = std::countr_zero(m);
      std::size_t mark = trail.size();
      if (assign(best, ci) && self(self)) return true;
      undo(mark, best);
    }
    return false;
  };
  bool ok = rec(rec);
  if (stats) stats->nodes += nodes;
  if (!ok) return std::nullopt;
  Coloring out(n);
  for (int v = 0; v < n; ++v) out[v] = palette[col[v]];
  return out;
}

inline std::optional<Coloring> solve(const PlaneGraph& g, const ListAssignment& lists,
                                     const std::map<int, Color>& pins = {}) {
  return solve(adjacency(g), lists, pins);
}

/// Extends a precolouring of the outer triangle to the whole graph.
inline std::optional<Coloring> extend_precolored_triangle(const PlaneGraph& g, const ListAssignment& lists,
                                                          const std::array<Color, 3>& phi0) {
  if (!g.outer_triangle()) throw Error(ErrorKind::MissingOuterFace, "no outer triangle");
  const auto& t = g.outer_triangle()->vertices;
  std::map<int, Color> pins;
  for (int i = 0; i < 3; ++i) pins[t[i]] = phi0[i];
  if (phi0[0] == phi0[1] || phi0[1] == phi0[2] || phi0[0] == phi0[2])
    throw Error(ErrorKind::PinConflict, "outer triangle precolouring is not proper");
  return solve(adjacency(g), lists, pins);
}

/// L'(v) = L(v) minus the colours phi puts on neighbours of v outside H. Vertices outside H get empty lists.
inline ListAssignment residual(const Adjacency& adj, const std::vector<int>& H, const Coloring& phi,
                               const ListAssignment& lists) {
  std::vector<bool> inH(adj.size(), false);
  for (int v : H) inH[v] = true;
  ListAssignment out(adj.size());
  for (int v : H) {
    std::set<Color> used;
    for (int w : adj[v])
      if (!inH[w] && phi[w] >= 0) used.insert(phi[w]);
    for (Color c : lists[v])
      if (!used.count(c)) out[v].push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycle colouring oracle

struct CycleOracleResult {
  int n = 0;
  long long examined = 0;   // assignments visited, one or more per renaming class
  long long uncolorable = 0;
  bool verified = false;
  std::optional<ListAssignment> counterexample;
};

/// Every 2-assignment of C_n, generated with colours introduced in order of first use so each
/// renaming class appears, is tested against: colourable iff n is even or the lists are not all equal.
inline CycleOracleResult lemma21_oracle(int n) {
  if (n < 3 || n > 8) throw Error(ErrorKind::BadParameters, "cycle length must be in 3..8");
  CycleOracleResult r;
  r.n = n;
  r.verified = true;
  std::vector<std::pair<int, int>> lists(n);
  lists[0] = {0, 1};
  // reach[a]: colours vertex i can take in some proper colouring of the path 0..i with v0 = lists[0][a]
  auto rec = [&](auto&& self, int i, int k, std::uint32_t r0, std::uint32_t r1, bool all_same) -> void {
    if (i == n) {
      ++r.examined;
      auto ok = [&](std::uint32_t reach, int a) { return (reach & ~(std::uint32_t{1} << a)) != 0; };
      bool colorable = ok(r0, lists[0].first) || ok(r1, lists[0].second);
      if (!colorable) ++r.uncolorable;
      bool predicted = n % 2 == 0 || !all_same;
      if (colorable != predicted && r.verified) {
        r.verified = false;
        ListAssignment la;
        for (auto [a, b] : lists) la.push_back({a, b});
        r.counterexample = la;
      }
      return;
    }
    auto step = [&](std::uint32_t prev, std::uint32_t mine) -> std::uint32_t {
      if (std::popcount(prev) >= 2) return mine;
      return mine & ~prev;
    };
    auto visit = [&](int a, int b, int nk) {
      lists[i] = {a, b};
      std::uint32_t mine = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
      self(self, i + 1, nk, step(r0, mine), step(r1, mine), all_same && a == 0 && b == 1);
    };
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) visit(a, b, k);
    for (int a = 0; a < k; ++a) visit(a, k, k + 1);
    visit(k, k + 1, k + 2);
  };
  rec(rec, 1, 2, 1u << 0, 1u << 1, true);
  return r;
}

// ---------------------------------------------------------------------------
// Assignments with colours numbered by first use

namespace detail {

inline void combinations(int k, int r, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x < k; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Smallest relabelling among those that permute colours first used at the same vertex.
inline ListAssignment canonical_form(const ListAssignment& la) {
  // first-use relabelling with a tie order; try every tie order
  std::vector<std::vector<Color>> groups;
  std::set<Color> seen;
  for (const auto& l : la) {
    std::vector<Color> fresh;
    for (Color c : l)
      if (seen.insert(c).second) fresh.push_back(c);
    groups.push_back(fresh);
  }
  ListAssignment best;
  bool have = false;
  std::vector<std::vector<Color>> perm = groups;
  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == perm.size()) {
      std::map<Color, Color> relabel;
      int next = 0;
      for (const auto& gr : perm)
        for (Color c : gr) relabel[c] = next++;
      ListAssignment cand;
      for (const auto& l : la) {
        std::vector<Color> m;
        for (Color c : l) m.push_back(relabel[c]);
        std::sort(m.begin(), m.end());
        cand.push_back(m);
      }
      if (!have || cand < best) best = cand, have = true;
      return;
    }
    std::sort(perm[gi].begin(), perm[gi].end());
    do {
      self(self, gi + 1);
    } while (std::next_permutation(perm[gi].begin(), perm[gi].end()));
  };
  rec(rec, 0);
  return best;
}

}  // namespace detail

/// Every list assignment with |L(v)| = sizes[v], colours numbered by first use, in a fixed
/// order. With one_per_class only the least member of each renaming class is passed on.
/// Intended for small inputs; the callback returns false to stop early.
template <class F>
inline long long for_each_canonical_assignment(const std::vector<int>& sizes, F&& callback,
                                               long long cap = 50'000'000, bool one_per_class = true) {
  const int n = static_cast<int>(sizes.size());
  ListAssignment cur(n);
  long long count = 0, visited = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int i, int k) -> void {
    if (stop) return;
    if (++visited > cap) throw Error(ErrorKind::SearchBudgetExceeded, "assignment enumeration cap reached");
    if (i == n) {
      if (one_per_class && detail::canonical_form(cur) != cur) return;
      ++count;
      if (!callback(static_cast<const ListAssignment&>(cur))) stop = true;
      return;
    }
    const int b = sizes[i];
    for (int fresh = 0; fresh <= b && !stop; ++fresh) {
      std::vector<std::vector<int>> olds;
      detail::combinations(k, b - fresh, olds);
      for (const auto& o : olds) {
        cur[i] = o;
        for (int j = 0; j < fresh; ++j) cur[i].push_back(k + j);
        self(self, i + 1, k + fresh);
        if (stop) return;
      }
    }
  };
  rec(rec, 0, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Size profiles

struct SizeProfile {
  std::vector<int> bounds;
};

/// "s:4,u:3,rest:2" or "v:4,w,x:3,y,z:2". Names are vertex labels or ids; a name without a
/// number takes the next number given; "rest" or "*" sets every vertex not named.
inline SizeProfile parse_profile(const std::string& spec, const PlaneGraph& config) {
  SizeProfile p;
  p.bounds.assign(config.vertex_count(), 0);
  std::optional<int> rest;
  std::vector<std::string> pending;
  std::string s;
  for (char ch : spec)
    if (ch != ' ' && ch != '(' && ch != ')') s += ch;
  std::stringstream ss(s);
  std::string tok;
  auto set = [&](const std::string& name, int k) {
    if (name == "rest" || name == "*") {
      rest = k;
      return;
    }
    auto v = config.find_vertex(name);
    if (v < 0) throw Error(ErrorKind::BadParameters, "profile names unknown vertex '" + name + "'");
    p.bounds[v] = k;
  };
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos) {
      pending.push_back(tok);
      continue;
    }
    int k = 0;
    try {
      k = std::stoi(tok.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameters, "bad profile entry '" + tok + "'");
    }
    if (k < 1 || k > 4) throw Error(ErrorKind::BadParameters, "profile bounds must lie in 1..4");
    for (const auto& name : pending) set(name, k);
    pending.clear();
    set(tok.substr(0, colon), k);
  }
  if (!pending.empty()) throw Error(ErrorKind::BadParameters, "profile entry without a bound");
  for (int& b : p.bounds)
    if (b == 0) {
      if (!rest) throw Error(ErrorKind::BadParameters, "profile leaves a vertex without a bound");
      b = *rest;
    }
  return p;
}

/// x1 and the chord ends get 3, every other cycle vertex 2.
inline SizeProfile fan_profile(const std::vector<int>& lengths) {
  auto [ends, n] = fan_layout(lengths);
  SizeProfile p;
  p.bounds.assign(n, 2);
  p.bounds[0] = 3;
  for (int e : ends) p.bounds[e - 1] = 3;
  return p;
}

/// The profile used for each catalogued configuration when none is given.
inline SizeProfile stated_profile(const ConfigPattern& pat) {
  auto g = build_pattern(pat);
  switch (pat.kind) {
    case PatternKind::W5: return parse_profile("v:4,w,x:3,y,z:2", g);
    case PatternKind::H_fig2: return parse_profile("s:4,u:3,rest:2", g);
    case PatternKind::F_fig1: return parse_profile("rest:2", g);
    default: break;
  }
  if (pat.is_fan()) return fan_profile(pat.params);
  return parse_profile("rest:2", g);
}

// ---------------------------------------------------------------------------
// Exhaustive reducibility

struct ReducibilityResult {
  bool verified = false;
  std::optional<ListAssignment> counterexample;
  long long states = 0;  // distinct game positions
  long long nodes = 0;   // positions expanded
  std::vector<int> order;
};

struct ReducibilityOptions {
  long long node_cap = 20'000'000;
};

namespace detail {

/// Vertices the search processes in turn: always the one with most processed neighbours.
inline std::vector<int> frontier_order(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::tuple<int, int, int> key{};
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      int in = 0, out = 0;
      for (int w : adj[v]) (done[w] ? in : out)++;
      std::tuple<int, int, int> k{in, -out, -v};
      if (best < 0 || k > key) best = v, key = k;
    }
    done[best] = true;
    order.push_back(best);
  }
  return order;
}

/// Game between a list-choosing adversary and a colourer. A position after `step` vertices is
/// the set of colourings of the current frontier that extend to everything processed so far,
/// with colours renumbered by first appearance.
class ReducibilityGame {
 public:
  ReducibilityGame(const Adjacency& adj, const std::vector<int>& bounds, long long cap)
      : adj_(adj), bounds_(bounds), cap_(cap) {
    const int n = static_cast<int>(adj.size());
    order_ = frontier_order(adj);
    pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) pos_[order_[i]] = i;
    frontier_.assign(n + 1, {});
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < i; ++j) {
        int v = order_[j];
        bool open = std::any_of(adj[v].begin(), adj[v].end(), [&](int w) { return pos_[w] >= i; });
        if (open) frontier_[i].push_back(v);
      }
  }

  // sorted tuples, flattened; with an empty frontier {0} is the set holding the empty colouring
  using Position = std::vector<std::uint8_t>;

  struct Move {
    std::vector<int> list;  // local labels; labels >= k are fresh
    Position child;
    std::vector<int> relabel;  // local label at this step -> child label, -1 if dropped
  };

  /// True when every list assignment from this position still leaves a colouring.
  bool colourer_wins(int step, const Position& pos) {
    if (pos.empty()) return false;
    if (step == static_cast<int>(order_.size())) return true;
    auto key = std::make_pair(step, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > cap_) throw Error(ErrorKind::SearchBudgetExceeded, "reducibility search exceeded its node cap");
    bool win = true;
    for_each_move(step, pos, [&](const Move& m) {
      if (!colourer_wins(step + 1, m.child)) {
        win = false;
        return false;
      }
      return true;
    });
    memo_.emplace(std::move(key), win);
    return win;
  }

  /// Lists for a losing line of play from the root, in global colours.
  ListAssignment counterexample() {
    const int n = static_cast<int>(order_.size());
    ListAssignment lists(n);
    Position pos{0};  // root: the set holding the empty colouring
    std::vector<int> global;  // local label -> global colour
    int next_global = 0;
    for (int step = 0; step < n; ++step) {
      std::optional<Move> chosen;
      for_each_move(step, pos, [&](const Move& m) {
        if (!colourer_wins(step + 1, m.child)) {
          chosen = m;
          return false;
        }
        return true;
      });
      if (!chosen) throw Error(ErrorKind::SearchBudgetExceeded, "counterexample reconstruction lost its way");
      const int k = static_cast<int>(global.size());
      std::vector<int> extended = global;
      for (int lab : chosen->list)
        if (lab >= k) {
          while (static_cast<int>(extended.size()) <= lab) extended.push_back(-1);
          extended[lab] = next_global++;
        }
      for (int lab : chosen->list) lists[order_[step]].push_back(extended[lab]);
      std::sort(lists[order_[step]].begin(), lists[order_[step]].end());
      std::vector<int> child_global;
      for (int lab = 0; lab < static_cast<int>(chosen->relabel.size()); ++lab) {
        int c = chosen->relabel[lab];
        if (c < 0) continue;
        if (static_cast<int>(child_global.size()) <= c) child_global.resize(c + 1, -1);
        child_global[c] = extended[lab];
      }
      global = child_global;
      pos = chosen->child;
      if (pos.empty()) {
        // remaining vertices get private colours
        for (int s = step + 1; s < n; ++s)
          for (int j = 0; j < bounds_[order_[s]]; ++j) lists[order_[s]].push_back(next_global++);
        break;
      }
    }
    return lists;
  }

  const std::vector<int>& order() const { return order_; }
  long long nodes() const { return nodes_; }
  long long states() const { return static_cast<long long>(memo_.size()); }

 private:
  int width(int step) const { return static_cast<int>(frontier_[step].size()); }

  template <class F>
  void for_each_move(int step, const Position& pos, F&& f) {
    const int w = width(step);
    const int v = order_[step];
    const int b = bounds_[v];
    const std::size_t count = w == 0 ? (pos.empty() ? 0 : 1) : pos.size() / w;
    int k = 0;
    for (std::uint8_t c : pos) k = std::max(k, c + 1);
    if (w == 0) k = 0;
    std::vector<int> nbr_slots;
    for (int i = 0; i < w; ++i)
      if (std::binary_search(adj_[v].begin(), adj_[v].end(), frontier_[step][i])) nbr_slots.push_back(i);
    const auto& next = frontier_[step + 1];
    std::vector<int> keep;  // slot in current frontier for each next-frontier vertex, -1 for v itself
    for (int u : next) {
      if (u == v) {
        keep.push_back(-1);
        continue;
      }
      keep.push_back(static_cast<int>(std::find(frontier_[step].begin(), frontier_[step].end(), u) -
                                      frontier_[step].begin()));
    }
    for (int fresh = std::max(0, b - k); fresh <= b; ++fresh) {
      std::vector<std::vector<int>> olds;
      combinations(k, b - fresh, olds);
      for (auto& o : olds) {
        Move m;
        m.list = o;
        for (int j = 0; j < fresh; ++j) m.list.push_back(k + j);
        std::vector<std::vector<int>> tuples;
        for (std::size_t t = 0; t < count; ++t) {
          const std::uint8_t* row = w ? &pos[t * w] : nullptr;
          for (int c : m.list) {
            bool ok = true;
            for (int s : nbr_slots)
              if (row[s] == c) ok = false;
            if (!ok) continue;
            std::vector<int> nt;
            for (int s : keep) nt.push_back(s < 0 ? c : row[s]);
            tuples.push_back(std::move(nt));
          }
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
        // renumber colours by first appearance so equivalent positions coincide more often
        m.relabel.assign(k + fresh, -1);
        int nextc = 0;
        for (auto& t : tuples)
          for (int& c : t) {
            if (m.relabel[c] < 0) m.relabel[c] = nextc++;
            c = m.relabel[c];
          }
        std::sort(tuples.begin(), tuples.end());
        if (next.empty()) {
          if (!tuples.empty()) m.child.push_back(0);  // the set holding the empty colouring
        } else {
          for (const auto& t : tuples)
            for (int c : t) m.child.push_back(static_cast<std::uint8_t>(c));
        }
        if (!f(static_cast<const Move&>(m))) return;
      }
    }
  }

  const Adjacency& adj_;
  std::vector<int> bounds_;
  long long cap_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<int>> frontier_;
  std::map<std::pair<int, Position>, bool> memo_;
  long long nodes_ = 0;
};

}  // namespace detail

/// Decides whether every assignment with |L(v)| = bounds[v] admits a colouring, by solving the
/// game in which lists are revealed vertex by vertex. Colours are renamed freely, so this covers
/// all assignments up to renaming over any palette.
inline ReducibilityResult verify_reducible(const Adjacency& adj, const SizeProfile& profile,
                                           const ReducibilityOptions& opt = {}) {
  const int n = static_cast<int>(adj.size());
  if (n > 10) throw Error(ErrorKind::BadParameters, "configurations are limited to 10 vertices");
  if (static_cast<int>(profile.bounds.size()) != n) throw Error(ErrorKind::BadParameters, "profile size mismatch");
  for (int b : profile.bounds)
    if (b < 1 || b > 4) throw Error(ErrorKind::BadParameters, "profile bounds must lie in 1..4");
  detail::ReducibilityGame game(adj, profile.bounds, opt.node_cap);
  ReducibilityResult r;
  r.order = game.order();
  detail::ReducibilityGame::Position root;
  root.push_back(0);  // frontier of width 0 holding the empty colouring
  r.verified = game.colourer_wins(0, root);
  if (!r.verified) {
    r.counterexample = game.counterexample();
    if (solve(adj, *r.counterexample))
      throw Error(ErrorKind::SearchBudgetExceeded, "reconstructed counterexample is colourable");
  }
  r.states = game.states();
  r.nodes = game.nodes();
  return r;
}

inline ReducibilityResult verify_reducible(const PlaneGraph& config, const SizeProfile& profile,
                                           const ReducibilityOptions& opt = {}) {
  return verify_reducible(adjacency(config), profile, opt);
}

/// W5 with hub v and rim w,x,y,z under the given profile.
inline ReducibilityResult verify_w5_reduction(const SizeProfile& profile) {
  return verify_reducible(build_pattern(ConfigPattern::w5()), profile);
}

// ---------------------------------------------------------------------------
// Certificates

struct CertStep {
  int vertex = -1;                // coloured at this step
  std::vector<int> saves;         // neighbours whose lists the chosen colour must avoid
  std::vector<int> even_cycle;    // when non-empty: colour this induced even cycle at once
};

struct CertBranch {
  std::string condition;
  std::vector<CertStep> steps;
  // saves granted by the branch condition rather than by counting
  std::vector<std::pair<int, std::vector<int>>> assumed;
};

struct ReducibilityCertificate {
  std::vector<CertBranch> branches;
};

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> trace;
  std::string failure;
};

namespace detail {

inline bool induced_even_cycle(const Adjacency& adj, const std::vector<int>& cyc) {
  const int m = static_cast<int>(cyc.size());
  if (m < 4 || m % 2) return false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool adjacent = std::binary_search(adj[cyc[i]].begin(), adj[cyc[i]].end(), cyc[j]);
      bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
      if (adjacent != consecutive) return false;
    }
  return true;
}

/// Runs one branch on concrete lists; true when it colours everything.
inline bool run_branch(const Adjacency& adj, const ListAssignment& lists, const CertBranch& br) {
  const int n = static_cast<int>(adj.size());
  Coloring col(n, -1);
  auto avail = [&](int v) {
    std::vector<Color> out;
    for (Color c : lists[v]) {
      bool ok = true;
      for (int w : adj[v])
        if (col[w] == c) ok = false;
      if (ok) out.push_back(c);
    }
    return out;
  };
  for (const auto& st : br.steps) {
    if (!st.even_cycle.empty()) {
      Adjacency sub(st.even_cycle.size());
      ListAssignment sl;
      for (std::size_t i = 0; i < st.even_cycle.size(); ++i) {
        sl.push_back(avail(st.even_cycle[i]));
        for (std::size_t j = 0; j < st.even_cycle.size(); ++j)
          if (std::binary_search(adj[st.even_cycle[i]].begin(), adj[st.even_cycle[i]].end(), st.even_cycle[j]))
            sub[i].push_back(static_cast<int>(j));
      }
      auto c = solve(sub, sl);
      if (!c) return false;
      for (std::size_t i = 0; i < st.even_cycle.size(); ++i) col[st.even_cycle[i]] = (*c)[i];
      continue;
    }
    auto a = avail(st.vertex);
    std::optional<Color> pick;
    for (Color c : a) {
      bool ok = true;
      for (int y : st.saves) {
        auto ay = avail(y);
        if (std::binary_search(ay.begin(), ay.end(), c)) ok = false;
      }
      if (ok) {
        pick = c;
        break;
      }
    }
    if (!pick) return false;
    col[st.vertex] = *pick;
  }
  return is_proper(adj, col, &lists);
}

}  // namespace detail

/// Checks the counting argument of every branch: each vertex, when coloured, still has a colour
/// after discounting its coloured neighbours, except those that saved it. A save is justified by
/// counting when the saver's remaining lower bound exceeds the targets' list sizes combined, or
/// by the branch's assumptions; branches with assumptions are then checked to cover every
/// assignment by running them on all assignments up to renaming.
inline CertificateCheck check_certificate(const Adjacency& adj, const SizeProfile& profile,
                                          const ReducibilityCertificate& cert) {
  const int n = static_cast<int>(adj.size());
  CertificateCheck out;
  if (cert.branches.empty()) throw Error(ErrorKind::MalformedCertificate, "certificate has no branch");
  auto is_nbr = [&](int a, int b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
  bool any_assumed = false;
  for (std::size_t bi = 0; bi < cert.branches.size(); ++bi) {
    const auto& br = cert.branches[bi];
    any_assumed |= !br.assumed.empty();
    std::vector<bool> coloured(n, false);
    std::vector<std::set<int>> saved_by(n);
    const std::string tag = "branch " + std::to_string(bi) + ": ";
    auto lower = [&](int v) {
      int lost = 0;
      for (int w : adj[v])
        if (coloured[w] && !saved_by[v].count(w)) ++lost;
      return profile.bounds[v] - lost;
    };
    auto fail = [&](const std::string& why) {
      out.failure = tag + why;
      out.trace.push_back(out.failure);
      out.ok = false;
    };
    for (const auto& st : br.steps) {
      if (!st.even_cycle.empty()) {
        for (int v : st.even_cycle)
          if (v < 0 || v >= n || coloured[v]) throw Error(ErrorKind::MalformedCertificate, tag + "bad cycle vertex");
        if (!detail::induced_even_cycle(adj, st.even_cycle)) {
          fail("cycle is not an induced even cycle");
          return out;
        }
        for (int v : st.even_cycle) {
          out.trace.push_back(tag + "cycle vertex " + std::to_string(v) + " keeps " + std::to_string(lower(v)));
          if (lower(v) < 2) {
            fail("cycle vertex " + std::to_string(v) + " keeps fewer than 2 colours");
            return out;
          }
        }
        for (int v : st.even_cycle) coloured[v] = true;
        continue;
      }
      const int v = st.vertex;
      if (v < 0 || v >= n || coloured[v]) throw Error(ErrorKind::MalformedCertificate, tag + "vertex coloured twice");
      const int slack = lower(v);
      out.trace.push_back(tag + "colour " + std::to_string(v) + " with " + std::to_string(slack) + " left");
      if (slack < 1) {
        fail("vertex " + std::to_string(v) + " has no colour left");
        return out;
      }
      if (!st.saves.empty()) {
        int need = 0;
        for (int y : st.saves) {
          if (y < 0 || y >= n || !is_nbr(v, y) || coloured[y])
            throw Error(ErrorKind::MalformedCertificate, tag + "save target must be an uncoloured neighbour");
          need += profile.bounds[y];
        }
        bool granted = std::any_of(br.assumed.begin(), br.assumed.end(), [&](const auto& a) {
          return a.first == v && std::includes(a.second.begin(), a.second.end(), st.saves.begin(), st.saves.end());
        });
        if (!granted && slack <= need) {
          fail("vertex " + std::to_string(v) + " cannot avoid the lists it should save");
          return out;
        }
        for (int y : st.saves) saved_by[y].insert(v);
      }
      coloured[v] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!coloured[v]) throw Error(ErrorKind::MalformedCertificate, tag + "vertex " + std::to_string(v) + " never coloured");
  }
  if (any_assumed) {
    std::optional<ListAssignment> uncovered;
    for_each_canonical_assignment(profile.bounds, [&](const ListAssignment& la) {
      for (const auto& br : cert.branches)
        if (detail::run_branch(adj, la, br)) return true;
      uncovered = la;
      return false;
    }, 50'000'000, false);
    if (uncovered) {
      out.failure = "no branch applies to some assignment";
      out.trace.push_back(out.failure);
      out.ok = false;
      return out;
    }
    out.trace.push_back("branches cover every assignment");
  }
  out.ok = true;
  return out;
}

inline CertificateCheck check_certificate(const PlaneGraph& config, const SizeProfile& profile,
                                          const ReducibilityCertificate& cert) {
  return check_certificate(adjacency(config), profile, cert);
}

/// x1 picks a colour keeping two for x_m, then x2, ..., x_m in order.
inline ReducibilityCertificate fan_certificate(const std::vector<int>& lengths) {
  auto [ends, n] = fan_layout(lengths);
  CertBranch br;
  br.condition = "x_m is not a chord end";
  br.steps.push_back({0, {n - 1}, {}});
  for (int i = 1; i < n; ++i) br.steps.push_back({i, {}, {}});
  return {{br}};
}

/// u picks a colour keeping two for y, then v, r, w, t, s, y.
inline ReducibilityCertificate h_certificate() {
  enum { r, s, t, u, v, w, y };
  CertBranch br;
  br.condition = "always";
  br.steps = {{u, {y}, {}}, {v, {}, {}}, {r, {}, {}}, {w, {}, {}}, {t, {}, {}}, {s, {}, {}}, {y, {}, {}}};
  return {{br}};
}

/// The two cases for W5 with hub v and rim w,x,y,z.
inline ReducibilityCertificate w5_certificate() {
  enum { v, w, x, y, z };
  CertBranch one;
  one.condition = "some colour of v lies outside L(y) and L(z)";
  one.assumed = {{v, {y, z}}};
  one.steps = {{v, {y, z}, {}}, {-1, {}, {w, x, y, z}}};
  CertBranch two_a;
  two_a.condition = "L(y), L(z) split L(v); the colour of v avoiding L(w) lies in L(y)";
  two_a.assumed = {{v, {w, z}}};
  two_a.steps = {{v, {w, z}, {}}, {y, {}, {}}, {x, {}, {}}, {z, {}, {}}, {w, {}, {}}};
  CertBranch two_b;
  two_b.condition = "L(y), L(z) split L(v); the colour of v avoiding L(w) lies in L(z)";
  two_b.assumed = {{v, {w, y}}};
  two_b.steps = {{v, {w, y}, {}}, {z, {}, {}}, {y, {}, {}}, {x, {}, {}}, {w, {}, {}}};
  return {{one, two_a, two_b}};
}

// ---------------------------------------------------------------------------
// List files: "v: c1 c2 ..." per vertex, "P v c" for a precoloured vertex.

struct ListFile {
  ListAssignment lists;
  std::map<int, Color> pins;
};

inline ListFile parse_lists(std::istream& in, const PlaneGraph& g) {
  ListFile lf;
  lf.lists.assign(g.vertex_count(), {});
  std::vector<bool> seen(g.vertex_count(), false);
  std::string line;
  int lineno = 0;
  auto vertex = [&](const std::string& name) {
    auto v = g.find_vertex(name);
    if (v < 0) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unknown vertex '" + name + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "P") {
      std::string name;
      Color c;
      if (!(ls >> name >> c)) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'P v c'");
      lf.pins[vertex(name)] = c;
      continue;
    }
    if (head.back() != ':') throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'v: colours'");
    int v = vertex(head.substr(0, head.size() - 1));
    if (seen[v]) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": vertex listed twice");
    seen[v] = true;
    Color c;
    while (ls >> c) lf.lists[v].push_back(c);
    if (!ls.eof()) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": colours must be integers");
    std::sort(lf.lists[v].begin(), lf.lists[v].end());
    lf.lists[v].erase(std::unique(lf.lists[v].begin(), lf.lists[v].end()), lf.lists[v].end());
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) throw Error(ErrorKind::ParseError, "vertex " + g.name(v) + " has no list");
  return lf;
}

inline void write_lists(std::ostream& os, const PlaneGraph& g, const ListAssignment& lists,
                        const std::map<int, Color>& pins = {}) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << g.name(v) << ':';
    for (Color c : lists[v]) os << ' ' << c;
    os << '\n';
  }
  for (auto [v, c] : pins) os << "P " << g.name(v) << ' ' << c << '\n';
}

}  // namespace dlab
