#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "dlab/coloring.hpp"
#include "fixtures.hpp"

using namespace dlab;

namespace {

// Tries every colouring in the product of the lists.
bool brute_colourable(const Adjacency& adj, const ListAssignment& lists) {
  const int n = static_cast<int>(adj.size());
  Coloring c(n, -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (Color x : lists[v]) {
      bool ok = true;
      for (int w : adj[v])
        if (w < v && c[w] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      if (self(self, v + 1)) return true;
    }
    c[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

Adjacency from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency a(n);
  for (auto [u, v] : edges) a[u].push_back(v), a[v].push_back(u);
  for (auto& l : a) std::sort(l.begin(), l.end());
  return a;
}

Adjacency cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

Adjacency random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return from_edges(n, e);
}

ListAssignment random_lists(std::mt19937_64& rng, const std::vector<int>& sizes, int palette) {
  ListAssignment l;
  std::vector<int> all(palette);
  std::iota(all.begin(), all.end(), 0);
  for (int s : sizes) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> pick(all.begin(), all.begin() + s);
    std::sort(pick.begin(), pick.end());
    l.push_back(pick);
  }
  return l;
}

// Every assignment with the given sizes over a fixed palette, as a renaming class count.
long long brute_class_count(const std::vector<int>& sizes, int palette) {
  std::vector<std::vector<std::vector<int>>> choices;
  for (int s : sizes) {
    std::vector<std::vector<int>> c;
    detail::combinations(palette, s, c);
    choices.push_back(c);
  }
  std::set<ListAssignment> classes;
  std::vector<int> perm(palette);
  std::iota(perm.begin(), perm.end(), 0);
  ListAssignment cur(sizes.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == sizes.size()) {
      ListAssignment best;
      std::vector<int> p = perm;
      do {
        ListAssignment m;
        for (const auto& l : cur) {
          std::vector<int> x;
          for (int c : l) x.push_back(p[c]);
          std::sort(x.begin(), x.end());
          m.push_back(x);
        }
        if (best.empty() || m < best) best = m;
      } while (std::next_permutation(p.begin(), p.end()));
      classes.insert(best);
      return;
    }
    for (const auto& c : choices[i]) {
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return static_cast<long long>(classes.size());
}

// Reducibility by listing every assignment up to renaming and solving each.
bool brute_reducible(const Adjacency& adj, const std::vector<int>& bounds) {
  bool all = true;
  for_each_canonical_assignment(
      bounds,
      [&](const ListAssignment& la) {
        if (!brute_colourable(adj, la)) all = false;
        return all;
      },
      50'000'000, false);
  return all;
}

}  // namespace

TEST(Solve, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 3), nn(2, 8);
  int colourable = 0, not_colourable = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = nn(rng);
    auto adj = random_graph(rng, n, 0.5);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(size(rng));
    auto lists = random_lists(rng, sizes, 4);
    bool expect = brute_colourable(adj, lists);
    auto got = solve(adj, lists);
    ASSERT_EQ(expect, got.has_value()) << "trial " << trial;
    if (got) {
      EXPECT_TRUE(is_proper(adj, *got, &lists));
      ++colourable;
    } else {
      ++not_colourable;
    }
  }
  EXPECT_GT(colourable, 50);
  EXPECT_GT(not_colourable, 50);
}

TEST(Solve, Pins) {
  auto adj = cycle(4);
  ListAssignment l{{1, 2}, {1, 2}, {1, 2}, {1, 2}};
  auto c = solve(adj, l, {{0, 2}});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], 2);
  EXPECT_EQ((*c)[1], 1);
  EXPECT_FALSE(solve(adj, l, {{0, 2}, {2, 1}}));
  try {
    solve(adj, l, {{0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PinConflict);
  }
  try {
    solve(adj, l, {{0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PinConflict);
  }
}

TEST(Solve, PrecolouredOuterTriangle) {
  auto g = dlab::testing::k4().designate_outer(0, 1, 2);
  ListAssignment l{{0, 5}, {1, 5}, {2, 5}, {0, 1, 2, 3}};
  auto c = extend_precolored_triangle(g, l, {0, 1, 2});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[3], 3);
  l[3] = {0, 1, 2};
  EXPECT_FALSE(extend_precolored_triangle(g, l, {0, 1, 2}));
  EXPECT_THROW(extend_precolored_triangle(g, l, {0, 0, 2}), Error);
}

TEST(CycleOracle, FirstLengths) {
  for (int n = 3; n <= 7; ++n) {
    auto r = lemma21_oracle(n);
    EXPECT_TRUE(r.verified) << n;
    EXPECT_EQ(r.uncolorable, n % 2 ? 1 : 0) << n;
    EXPECT_GT(r.examined, 0);
  }
  EXPECT_THROW(lemma21_oracle(2), Error);
}

TEST(CycleOracle, SmallCasesMatchBruteForce) {
  // the three-cycle with all lists equal is the only failure up to renaming
  long long failing = 0, total = 0;
  auto adj = cycle(3);
  for_each_canonical_assignment({2, 2, 2}, [&](const ListAssignment& la) {
    ++total;
    if (!brute_colourable(adj, la)) {
      ++failing;
      EXPECT_EQ(la, (ListAssignment{{0, 1}, {0, 1}, {0, 1}}));
    }
    return true;
  });
  EXPECT_EQ(failing, 1);
  EXPECT_EQ(total, brute_class_count({2, 2, 2}, 6));
  for_each_canonical_assignment({2, 2, 2, 2}, [&](const ListAssignment& la) {
    EXPECT_TRUE(brute_colourable(cycle(4), la));
    return true;
  });
}

TEST(Canonical, ClassCounts) {
  EXPECT_EQ(for_each_canonical_assignment({2, 2, 1, 1}, [](const auto&) { return true; }),
            brute_class_count({2, 2, 1, 1}, 6));
  EXPECT_EQ(for_each_canonical_assignment({3, 2}, [](const auto&) { return true; }), brute_class_count({3, 2}, 5));
  EXPECT_EQ(for_each_canonical_assignment({1, 1, 1}, [](const auto&) { return true; }), 5);  // Bell number
}

TEST(Residual, RemovesOutsideColours) {
  auto adj = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  ListAssignment l{{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  Coloring phi{1, -1, -1, 3};
  auto r = residual(adj, {1, 2}, phi, l);
  EXPECT_EQ(r[1], (std::vector<int>{2, 3}));
  EXPECT_EQ(r[2], (std::vector<int>{1, 2}));
  EXPECT_TRUE(r[0].empty());
}

TEST(Reducible, AgreesWithEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nn(3, 6), b(1, 3);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = nn(rng);
    auto adj = random_graph(rng, n, 0.55);
    SizeProfile p;
    for (int i = 0; i < n; ++i) p.bounds.push_back(std::min(b(rng), 1 + static_cast<int>(adj[i].size())));
    auto r = verify_reducible(adj, p);
    ASSERT_EQ(r.verified, brute_reducible(adj, p.bounds)) << "trial " << trial;
    if (r.verified) {
      ++yes;
    } else {
      ++no;
      ASSERT_TRUE(r.counterexample);
      for (int v = 0; v < n; ++v) EXPECT_EQ(static_cast<int>((*r.counterexample)[v].size()), p.bounds[v]);
      EXPECT_FALSE(brute_colourable(adj, *r.counterexample));
    }
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 10);
}

TEST(Reducible, Monotone) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto adj = random_graph(rng, 5, 0.6);
    SizeProfile p{{1, 1, 1, 1, 1}};
    bool was = verify_reducible(adj, p).verified;
    for (int step = 0; step < 8; ++step) {
      int v = std::uniform_int_distribution<int>(0, 4)(rng);
      if (p.bounds[v] < 4) ++p.bounds[v];
      bool now = verify_reducible(adj, p).verified;
      EXPECT_TRUE(!was || now);
      was = now;
    }
  }
}

TEST(Reducible, Configurations) {
  auto c4 = cycle(4);
  EXPECT_TRUE(verify_reducible(c4, SizeProfile{{2, 2, 2, 2}}).verified);
  auto k3 = cycle(3);
  auto tri = verify_reducible(k3, SizeProfile{{2, 2, 2}});
  EXPECT_FALSE(tri.verified);
  EXPECT_EQ(*tri.counterexample, (ListAssignment{{0, 1}, {0, 1}, {0, 1}}));

  auto h = build_pattern(ConfigPattern::h_fig2());
  EXPECT_TRUE(verify_reducible(h, stated_profile(ConfigPattern::h_fig2())).verified);
  EXPECT_TRUE(verify_w5_reduction(stated_profile(ConfigPattern::w5())).verified);
  for (auto lengths : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {4, 3}, {5, 3}, {3, 3, 3}, {3, 4, 3}, {4, 3, 3, 3}}) {
    auto pat = ConfigPattern::fan(lengths);
    auto r = verify_reducible(build_pattern(pat), stated_profile(pat));
    EXPECT_TRUE(r.verified) << pat.name();
  }
}

TEST(Reducible, WeakerProfiles) {
  auto w5 = build_pattern(ConfigPattern::w5());
  auto a = adjacency(w5);
  for (const char* spec : {"v:3,w,x:3,y,z:2", "v:4,w:3,rest:2", "v:3,rest:2", "rest:2", "v:4,w,y:3,x,z:2"}) {
    auto p = parse_profile(spec, w5);
    auto r = verify_w5_reduction(p);
    EXPECT_EQ(r.verified, brute_reducible(a, p.bounds)) << spec;
    if (!r.verified) {
      ASSERT_TRUE(r.counterexample);
      EXPECT_FALSE(brute_colourable(a, *r.counterexample)) << spec;
    }
  }
  EXPECT_FALSE(verify_w5_reduction(parse_profile("rest:2", w5)).verified);
  auto h = build_pattern(ConfigPattern::h_fig2());
  for (const char* spec : {"s:3,u:3,rest:2", "s:4,rest:2", "u:3,rest:2"}) {
    auto p = parse_profile(spec, h);
    EXPECT_EQ(verify_reducible(h, p).verified, brute_reducible(adjacency(h), p.bounds)) << spec;
  }
}

TEST(Reducible, Budget) {
  auto h = build_pattern(ConfigPattern::h_fig2());
  ReducibilityOptions opt;
  opt.node_cap = 3;
  try {
    verify_reducible(h, stated_profile(ConfigPattern::h_fig2()), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchBudgetExceeded);
  }
  EXPECT_THROW(verify_reducible(cycle(3), SizeProfile{{2, 2}}), Error);
  EXPECT_THROW(verify_reducible(cycle(3), SizeProfile{{2, 2, 5}}), Error);
}

TEST(Profile, Parse) {
  auto w5 = build_pattern(ConfigPattern::w5());
  EXPECT_EQ(parse_profile("v:4,w,x:3,y,z:2", w5).bounds, (std::vector<int>{4, 3, 3, 2, 2}));
  EXPECT_EQ(parse_profile("(v:4, rest:2)", w5).bounds, (std::vector<int>{4, 2, 2, 2, 2}));
  EXPECT_THROW(parse_profile("q:3,rest:2", w5), Error);
  EXPECT_THROW(parse_profile("v:4", w5), Error);
  EXPECT_THROW(parse_profile("v:x,rest:2", w5), Error);
  EXPECT_THROW(parse_profile("v,rest:2,w", w5), Error);
  EXPECT_EQ(fan_profile({3, 4}).bounds, (std::vector<int>{3, 2, 3, 2, 2}));
}

TEST(Certificate, PresetsPass) {
  auto h = build_pattern(ConfigPattern::h_fig2());
  auto hc = check_certificate(h, stated_profile(ConfigPattern::h_fig2()), h_certificate());
  EXPECT_TRUE(hc.ok) << hc.failure;
  auto w5 = build_pattern(ConfigPattern::w5());
  auto wc = check_certificate(w5, stated_profile(ConfigPattern::w5()), w5_certificate());
  EXPECT_TRUE(wc.ok) << wc.failure;
  EXPECT_EQ(wc.trace.back(), "branches cover every assignment");
  for (auto lengths : std::vector<std::vector<int>>{{3, 3}, {3, 5}, {3, 3, 3}, {4, 4, 4, 3}}) {
    auto pat = ConfigPattern::fan(lengths);
    auto fc = check_certificate(build_pattern(pat), stated_profile(pat), fan_certificate(lengths));
    EXPECT_TRUE(fc.ok) << pat.name() << ": " << fc.failure;
  }
}

TEST(Certificate, WrongOrderFails) {
  enum { r, s, t, u, v, w, y };
  auto h = build_pattern(ConfigPattern::h_fig2());
  CertBranch br;
  br.steps = {{s, {}, {}}, {u, {}, {}}, {v, {}, {}}, {r, {}, {}}, {w, {}, {}}, {t, {}, {}}, {y, {}, {}}};
  auto c = check_certificate(h, stated_profile(ConfigPattern::h_fig2()), {{br}});
  EXPECT_FALSE(c.ok);
  EXPECT_NE(c.failure.find("vertex 0 has no colour left"), std::string::npos) << c.failure;
}

TEST(Certificate, UncoveredBranchesFail) {
  auto w5 = build_pattern(ConfigPattern::w5());
  auto cert = w5_certificate();
  cert.branches.pop_back();
  auto c = check_certificate(w5, stated_profile(ConfigPattern::w5()), cert);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.failure, "no branch applies to some assignment");
}

TEST(Certificate, Malformed) {
  auto w5 = build_pattern(ConfigPattern::w5());
  auto p = stated_profile(ConfigPattern::w5());
  CertBranch missing;
  missing.steps = {{0, {}, {}}, {1, {}, {}}};
  EXPECT_THROW(check_certificate(w5, p, {{missing}}), Error);
  CertBranch twice;
  twice.steps = {{0, {}, {}}, {0, {}, {}}};
  EXPECT_THROW(check_certificate(w5, p, {{twice}}), Error);
  CertBranch far;
  far.steps = {{1, {3}, {}}, {0, {}, {}}, {2, {}, {}}, {3, {}, {}}, {4, {}, {}}};
  EXPECT_THROW(check_certificate(w5, p, {{far}}), Error);
  EXPECT_THROW(check_certificate(w5, p, {}), Error);
  CertBranch odd;
  odd.steps = {{1, {}, {}}, {-1, {}, {0, 2, 3}}, {4, {}, {}}};
  EXPECT_FALSE(check_certificate(w5, p, {{odd}}).ok);
}

TEST(ListFile, RoundTrip) {
  auto g = dlab::testing::w5();
  ListAssignment l{{1, 2, 3, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}};
  std::ostringstream os;
  write_lists(os, g, l, {{0, 2}});
  std::istringstream is(os.str());
  auto lf = parse_lists(is, g);
  EXPECT_EQ(lf.lists, l);
  EXPECT_EQ(lf.pins, (std::map<int, Color>{{0, 2}}));
  std::istringstream bad("h: 1 2\nr: 1 x\n");
  EXPECT_THROW(parse_lists(bad, g), Error);
  std::istringstream short_file("h: 1 2\n");
  EXPECT_THROW(parse_lists(short_file, g), Error);
}

TEST(Solve, SmallExamples) {
  EXPECT_FALSE(solve(cycle(3), {{1, 2}, {1, 2}, {1, 2}}));
  auto c4 = solve(cycle(4), {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
  ASSERT_TRUE(c4);
  EXPECT_EQ(*c4, (Coloring{1, 2, 1, 2}));
  auto k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(solve(k4, ListAssignment(4, {1, 2, 3, 4})));
  EXPECT_TRUE(solve(cycle(5), {{1, 2}, {1, 2}, {1, 3}, {1, 2}, {1, 2}}));
  auto adj = cycle(4);
  ListAssignment l(4, {1, 2, 3, 4});
  EXPECT_EQ(residual(adj, {0, 2}, Coloring{-1, 1, -1, 2}, l)[0], (std::vector<int>{3, 4}));
  EXPECT_EQ(residual(adj, {0, 1, 2, 3}, Coloring(4, -1), l), l);
}

TEST(Reducible, AllFoursOnTheWheel) {
  auto w5 = build_pattern(ConfigPattern::w5());
  EXPECT_TRUE(verify_w5_reduction(parse_profile("rest:4", w5)).verified);
}

TEST(Reducible, LongFan) {
  auto pat = ConfigPattern::fan({5, 3, 5, 3});
  auto g = build_pattern(pat);
  ASSERT_EQ(g.vertex_count(), 10);
  EXPECT_TRUE(verify_reducible(g, stated_profile(pat)).verified);
  auto c = check_certificate(g, stated_profile(pat), fan_certificate({5, 3, 5, 3}));
  EXPECT_TRUE(c.ok) << c.failure;
}

TEST(Certificate, SoundOnRandomGreedyOrders) {
  // a passing plain certificate must imply exhaustive reducibility
  std::mt19937_64 rng(3);
  int passing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto adj = random_graph(rng, 6, 0.4);
    SizeProfile p;
    for (int v = 0; v < 6; ++v) p.bounds.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
    std::vector<int> order(6);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CertBranch br;
    for (std::size_t i = 0; i < order.size(); ++i) {
      CertStep st{order[i], {}, {}};
      if (i + 1 < order.size() && std::binary_search(adj[order[i]].begin(), adj[order[i]].end(), order.back()) &&
          std::bernoulli_distribution(0.3)(rng))
        st.saves = {order.back()};
      br.steps.push_back(st);
    }
    if (!check_certificate(adj, p, {{br}}).ok) continue;
    ++passing;
    EXPECT_TRUE(verify_reducible(adj, p).verified) << "trial " << trial;
  }
  EXPECT_GT(passing, 20);
}
