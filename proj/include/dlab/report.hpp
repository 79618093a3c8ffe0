#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "dlab/catalog.hpp"
#include "dlab/classify.hpp"
#include "dlab/coloring.hpp"
#include "dlab/corpus.hpp"
#include "dlab/cycles.hpp"
#include "dlab/discharging.hpp"
#include "dlab/error.hpp"
#include "dlab/plane_graph.hpp"
#include "dlab/structural.hpp"

namespace dlab {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "dlab 1.0.0";

// ---------------------------------------------------------------------------
// JSON building blocks. Objects serialize with sorted keys; arrays are built in a canonical order.

inline Json error_json(const Error& e) { return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}; }

inline Json faces_json(const PlaneGraph& g) {
  Json out = Json::array();
  for (const auto& f : g.faces())
    out.push_back({{"id", f.id},
                   {"degree", f.degree},
                   {"walk", f.vertex_walk},
                   {"cycle", f.boundary_is_cycle},
                   {"outer", g.outer_face() && *g.outer_face() == f.id}});
  return out;
}

inline Json cycle_json(const EmbeddedCycle& c) { return c.vertices; }

inline Json membership_json(const PlaneGraph& g) {
  auto w = find_family_a_witness(g);
  Json out{{"in_family_A", !w.has_value()}};
  if (w) {
    Json cycles = Json::array();
    for (const auto& c : w->cycles) cycles.push_back(cycle_json(c));
    Json shared = Json::array();
    for (const auto& s : w->shared_edges) {
      Json pairs = Json::array();
      for (EdgeId e : s) pairs.push_back({g.edges()[e].first, g.edges()[e].second});
      shared.push_back(pairs);
    }
    out["witness"] = {{"cycles", cycles}, {"shared_edges", shared}};
  }
  return out;
}

inline Json forbidden_json(const std::vector<ForbiddenHit>& hits) {
  std::vector<Json> rows;
  for (const auto& h : hits) {
    Json r{{"name", h.name}, {"vertices", h.match.vertex_map}};
    if (h.cycle) r["cycle"] = cycle_json(*h.cycle);
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(), [](const Json& a, const Json& b) { return a.dump() < b.dump(); });
  return rows;
}

inline Json violation_json(const Violation& v) {
  return {{"kind", to_string(v.kind)}, {"vertices", v.vertices}, {"faces", v.faces}, {"detail", v.detail}};
}

inline Json structural_json(const StructuralReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) out.push_back(violation_json(v));
  return out;
}

inline Json ledger_json(const ChargeLedger& l) {
  Json transfers = Json::array();
  for (const auto& t : l.transfers)
    transfers.push_back({{"rule", to_string(t.rule)},
                         {"source", t.source.name()},
                         {"sink", t.sink.name()},
                         {"amount", to_string(t.amount)},
                         {"why", t.justification}});
  Json initial, final_charges;
  for (std::size_t v = 0; v < l.vertex_initial.size(); ++v) {
    initial[Element::vertex(static_cast<int>(v)).name()] = to_string(l.vertex_initial[v]);
    final_charges[Element::vertex(static_cast<int>(v)).name()] = to_string(l.vertex_final[v]);
  }
  for (std::size_t f = 0; f < l.face_initial.size(); ++f) {
    initial[Element::face(static_cast<int>(f)).name()] = to_string(l.face_initial[f]);
    final_charges[Element::face(static_cast<int>(f)).name()] = to_string(l.face_final[f]);
  }
  return {{"initial", initial},
          {"final", final_charges},
          {"transfers", transfers},
          {"total_initial", to_string(l.total_initial())},
          {"total_final", to_string(l.total_final())},
          {"consistent", ledger_consistent(l)},
          {"anomalies", l.anomalies}};
}

inline Json verdicts_json(const VerdictSummary& s) {
  Json rows = Json::array();
  for (const auto& v : s.verdicts) {
    Json r{{"element", v.element.name()},
           {"case", v.case_id},
           {"final", to_string(v.final_charge)},
           {"nonnegative", v.nonnegative},
           {"depends_on", v.lemma_dependency}};
    if (!v.note.empty()) r["note"] = v.note;
    if (!v.nonnegative) {
      if (v.global_annotation) {
        std::map<std::string, int> kinds;
        for (const auto& a : v.annotations) ++kinds[to_string(a.kind)];
        r["explained_by_graph"] = kinds;
      } else {
        Json ann = Json::array();
        for (const auto& a : v.annotations) ann.push_back(violation_json(a));
        r["explained_by"] = ann;
      }
    }
    rows.push_back(r);
  }
  auto names = [](const std::vector<Element>& es) {
    Json a = Json::array();
    for (auto e : es) a.push_back(e.name());
    return a;
  };
  return {{"elements", rows},
          {"negative", names(s.negative)},
          {"unexplained", names(s.unexplained)},
          {"unclassified", names(s.unclassified)},
          {"structural_clean", s.structural_clean},
          {"in_family_A", s.in_family_a},
          {"contract_holds", s.contract_holds()}};
}

inline Json outer_json(const OuterFaceAccounting& a) {
  return {{"f3_edge", a.f3_edge},
          {"f_other", a.f_other},
          {"boundary_edges", a.boundary_edges},
          {"slack", a.slack()},
          {"slack_nonnegative", a.slack_nonnegative},
          {"f3_at_most_3", a.f3_bounded},
          {"final_charge", to_string(a.mu_star_d)},
          {"recomputed", to_string(a.recomputed)},
          {"recomputed_matches", a.recomputed == a.mu_star_d},
          {"closed_form", to_string(a.printed)},
          {"positive", a.positive}};
}

// ---------------------------------------------------------------------------
// Discharge stage

struct DischargeResult {
  ChargeLedger ledger;
  VerdictSummary summary;
  std::optional<OuterFaceAccounting> outer;
  bool conserved = false;

  /// Negative charges that nothing explains, unclassifiable elements, or broken conservation.
  bool finding() const { return !conserved || !summary.unexplained.empty() || !summary.unclassified.empty(); }
};

inline DischargeResult discharge(const PlaneGraph& g, bool strict = false) {
  DischargeResult r;
  auto cls = classify(g, strict);
  r.ledger = apply_rules(g, initial_charges(g), cls, strict);
  auto scan = structural_scan(g, cls);
  r.summary = verdicts(g, r.ledger, cls, scan, in_family_A(g), strict);
  r.conserved = r.ledger.total_initial() == -12 && r.ledger.total_final() == -12 && ledger_consistent(r.ledger);
  if (g.has_outer_triangle()) r.outer = outer_face_accounting(g, r.ledger);
  return r;
}

inline Json discharge_json(const DischargeResult& r) {
  Json out{{"ledger", ledger_json(r.ledger)}, {"verdicts", verdicts_json(r.summary)}, {"conserved", r.conserved}};
  if (r.outer) out["outer_face"] = outer_json(*r.outer);
  return out;
}

// ---------------------------------------------------------------------------
// Colouring trials

inline std::uint64_t seed_from(const std::string& text, std::uint64_t salt) {
  std::uint64_t h = 1469598103934665603ULL ^ salt;
  for (unsigned char ch : text) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

/// A 4-assignment over colours 0..palette-1 and a proper precolouring of C0 from it.
inline std::pair<ListAssignment, std::array<Color, 3>> random_trial(const PlaneGraph& g, std::mt19937_64& rng,
                                                                    int palette = 8) {
  ListAssignment l(g.vertex_count());
  std::vector<Color> all(palette);
  for (int c = 0; c < palette; ++c) all[c] = c;
  for (auto& list : l) {
    std::shuffle(all.begin(), all.end(), rng);
    list.assign(all.begin(), all.begin() + 4);
    std::sort(list.begin(), list.end());
  }
  const auto& t = g.outer_triangle()->vertices;
  std::array<Color, 3> phi{};
  for (;;) {
    for (int i = 0; i < 3; ++i) phi[i] = l[t[i]][std::uniform_int_distribution<int>(0, 3)(rng)];
    if (phi[0] != phi[1] && phi[1] != phi[2] && phi[0] != phi[2]) break;
  }
  return {l, phi};
}

struct ColorTrials {
  int trials = 0;
  int extended = 0;
  std::vector<std::pair<ListAssignment, std::array<Color, 3>>> failures;
};

inline ColorTrials color_trials(const PlaneGraph& g, int trials, std::uint64_t seed) {
  if (!g.has_outer_triangle()) throw Error(ErrorKind::MissingOuterFace, "colouring trials need an outer triangle");
  ColorTrials out;
  std::mt19937_64 rng(seed_from(graph_id(g), seed));
  for (int i = 0; i < trials; ++i) {
    auto [l, phi] = random_trial(g, rng);
    ++out.trials;
    if (extend_precolored_triangle(g, l, phi)) ++out.extended;
    else out.failures.emplace_back(l, phi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

struct PipelineOptions {
  std::set<std::string> stages{"membership", "forbidden", "structural", "discharge", "color"};
  int color_trials = 5;
  std::uint64_t seed = 1;
  bool strict = false;
};

struct Report {
  Json json;
  bool finding = false;
  bool internal_error = false;
};

/// Runs each requested stage; a failing stage records its error and the others still run.
inline Report run_pipeline(const PlaneGraph& g, const PipelineOptions& opt = {}) {
  Report rep;
  Json stages;
  static const std::set<std::string> known{"faces", "membership", "forbidden", "structural", "discharge", "color"};
  for (const auto& s : opt.stages)
    if (!known.count(s)) throw Error(ErrorKind::BadParameters, "unknown stage '" + s + "'");
  std::optional<bool> in_a;
  auto guarded = [&](const std::string& name, const std::function<Json()>& body) {
    if (!opt.stages.count(name)) return;
    try {
      stages[name] = body();
    } catch (const Error& e) {
      stages[name] = {{"error", error_json(e)}};
      if (e.kind() == ErrorKind::ChargeSumMismatch) rep.internal_error = true;
    }
  };
  guarded("faces", [&] { return faces_json(g); });
  guarded("membership", [&] {
    Json m = membership_json(g);
    in_a = m["in_family_A"].get<bool>();
    return m;
  });
  guarded("forbidden", [&] {
    auto hits = forbidden_scan(g);
    if (!hits.empty()) rep.finding = true;
    return Json{{"hits", forbidden_json(hits)}, {"count", hits.size()}};
  });
  auto needs_outer = [&] {
    if (!g.has_outer_triangle()) throw Error(ErrorKind::MissingOuterFace, "stage needs a designated outer triangle");
  };
  guarded("structural", [&] {
    needs_outer();
    auto r = structural_scan(g);
    if (!r.clean()) rep.finding = true;
    return Json{{"violations", structural_json(r)}, {"clean", r.clean()}};
  });
  guarded("discharge", [&] {
    needs_outer();
    auto d = discharge(g, opt.strict);
    if (d.finding()) rep.finding = true;
    if (!d.conserved) rep.internal_error = true;
    return discharge_json(d);
  });
  guarded("color", [&] {
    needs_outer();
    auto t = color_trials(g, opt.color_trials, opt.seed);
    if (!in_a) in_a = in_family_A(g);
    bool contract = *in_a && !t.failures.empty();
    if (contract) rep.finding = true;
    Json fails = Json::array();
    for (const auto& [l, phi] : t.failures) fails.push_back({{"lists", l}, {"precolouring", phi}});
    return Json{{"trials", t.trials},
                {"extended", t.extended},
                {"failures", fails},
                {"seed", opt.seed},
                {"falsifies_extension_claim", contract}};
  });
  rep.json = {{"graph_id", graph_id(g)},
              {"tool_version", kToolVersion},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"stages", stages}};
  return rep;
}

// ---------------------------------------------------------------------------
// Campaigns over a corpus

struct CampaignHit {
  std::size_t index = 0;  // position in the corpus
  std::string graph_id;
  std::string label;
  std::string plg;
  Json witness;
};

struct CampaignResult {
  std::string lemma;
  Json json;
  std::vector<CampaignHit> hits;  // counterexamples to the statement
};

inline const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids{"L2.2", "L2.3", "C3.6", "C3.9", "C3.10", "C3.12", "C3.13"};
  return ids;
}

/// Accepts the bare id or the id followed by a descriptive suffix, e.g. "C3.13(W5)".
inline std::string normalize_lemma_id(const std::string& raw) {
  std::string id;
  for (char ch : raw) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '.')) break;
    id += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  for (const auto& k : campaign_ids())
    if (k == id) return k;
  throw Error(ErrorKind::UnknownLemma, "unknown lemma '" + raw + "'; expected one of L2.2 L2.3 C3.6 C3.9 C3.10 C3.12 C3.13");
}

namespace detail {

struct GraphOutcome {
  bool in_a = false;
  bool checked = false;
  std::map<std::string, long long> counters;
  std::vector<Json> hits;   // counterexamples
  std::vector<Json> notes;  // events that are not counterexamples
};

inline Adjacency induced(const PlaneGraph& g, const std::vector<VertexId>& vs) {
  Adjacency a(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && g.adjacent(vs[i], vs[j])) a[i].push_back(static_cast<int>(j));
  return a;
}

/// Occurrences of a reducibility-derived violation: the residual profile forced by degrees is
/// decided exhaustively, and when it is reducible, random colourings of G - H are extended.
inline void reducibility_trials(const PlaneGraph& g, ViolationKind kind, const StructuralReport& scan,
                                GraphOutcome& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed_from(graph_id(g), seed));
  for (const auto& viol : scan.of_kind(kind)) {
    ++out.counters["occurrences"];
    std::vector<VertexId> H = viol.vertices;
    std::vector<bool> inH(g.vertex_count(), false);
    for (VertexId v : H) inH[v] = true;
    SizeProfile p;
    bool applicable = H.size() <= 10;
    for (VertexId v : H) {
      int outside = 0;
      for (VertexId w : g.neighbors(v)) outside += !inH[w];
      if (4 - outside < 1) applicable = false;
      p.bounds.push_back(4 - outside);
    }
    Json where{{"vertices", H}, {"detail", viol.detail}, {"profile", p.bounds}};
    if (!applicable) {
      ++out.counters["occurrences_without_profile"];
      out.notes.push_back({{"event", "no residual profile"}, {"at", where}});
      continue;
    }
    auto adjH = induced(g, H);
    auto r = verify_reducible(adjH, p);
    if (!r.verified) {
      ++out.counters["occurrences_not_reducible"];
      out.notes.push_back({{"event", "profile not reducible"}, {"at", where}, {"lists", *r.counterexample}});
      continue;
    }
    ++out.counters["occurrences_reducible"];
    // colour G - H, then extend through the residual lists
    std::vector<VertexId> rest;
    std::vector<int> pos(g.vertex_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!inH[v]) pos[v] = static_cast<int>(rest.size()), rest.push_back(v);
    Adjacency adjRest(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (VertexId w : g.neighbors(rest[i]))
        if (pos[w] >= 0) adjRest[i].push_back(pos[w]);
    for (auto& l : adjRest) std::sort(l.begin(), l.end());
    for (int trial = 0; trial < 3; ++trial) {
      ListAssignment L(g.vertex_count());
      std::vector<Color> all{0, 1, 2, 3, 4, 5, 6, 7};
      for (auto& l : L) {
        std::shuffle(all.begin(), all.end(), rng);
        l.assign(all.begin(), all.begin() + 4);
        std::sort(l.begin(), l.end());
      }
      ListAssignment Lrest;
      for (VertexId v : rest) Lrest.push_back(L[v]);
      auto phiRest = solve(adjRest, Lrest);
      if (!phiRest) {
        ++out.counters["trials_outside_uncolourable"];
        continue;
      }
      Coloring phi(g.vertex_count(), -1);
      for (std::size_t i = 0; i < rest.size(); ++i) phi[rest[i]] = (*phiRest)[i];
      auto full = residual(adjacency(g), H, phi, L);
      ListAssignment LH;
      for (VertexId v : H) LH.push_back(full[v]);
      ++out.counters["trials"];
      if (!solve(adjH, LH)) out.hits.push_back({{"event", "extension failed"}, {"at", where}, {"residual", LH}});
    }
  }
}

inline bool dependency_clean_at(const PlaneGraph& g, const StructuralReport& scan, VertexId v) {
  for (const auto& viol : scan.violations) {
    if (viol.kind == ViolationKind::TwoFacesLowDegree && viol.detail == "centre " + g.name(v)) return false;
    if (viol.kind == ViolationKind::NonCycleFace || viol.kind == ViolationKind::SeparatingTriangle)
      if (std::binary_search(viol.vertices.begin(), viol.vertices.end(), v)) return false;
  }
  for (FaceId f : g.incident_faces(v))
    if (!g.face(f).boundary_is_cycle) return false;
  return true;
}

inline GraphOutcome run_lemma_on(const std::string& id, const PlaneGraph& g, std::uint64_t seed) {
  GraphOutcome out;
  out.in_a = in_family_A(g);
  if (id == "L2.2") {
    auto hits = forbidden_scan(g);
    if (!hits.empty()) {
      ++out.counters["graphs_with_patterns"];
      Json w{{"patterns", forbidden_json(hits)}};
      (out.in_a ? out.hits : out.notes).push_back(w);
    }
    out.checked = out.in_a;
    return out;
  }
  if (!out.in_a) return out;
  if (id == "L2.3") {
    out.checked = true;
    for (const auto& c : enumerate_cycles(g, 6)) {
      if (c.length() != 6) continue;
      auto chords = classify_chords(g, c);
      bool triangular = std::any_of(chords.begin(), chords.end(), [](const auto& ch) { return ch.triangular; });
      if (!triangular) continue;
      ++out.counters["six_cycles_with_triangular_chord"];
      if (chords.size() != 1) out.hits.push_back({{"cycle", c.vertices}, {"chords", chords.size()}});
    }
    return out;
  }
  if (!g.has_outer_triangle()) {
    ++out.counters["skipped_without_outer_triangle"];
    return out;
  }
  out.checked = true;
  auto cls = classify(g);
  auto scan = structural_scan(g, cls);
  if (id == "C3.6") {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!cls.vertices[v].flaw) continue;
      ++out.counters["flaw_vertices"];
      std::set<FaceId> fs;
      for (FaceId f : g.incident_faces(v)) fs.insert(f);
      int poor5 = 0;
      bool semi = true;
      for (FaceId f : fs) {
        if (g.face(f).degree == 5 && cls.faces[f].richness == Richness::Poor) ++poor5;
        if (g.face(f).degree == 3 && cls.faces[f].richness != Richness::SemiRich) semi = false;
      }
      if (poor5 == 1 && semi) continue;
      ++out.counters["statement_fails"];
      Json w{{"vertex", v}, {"poor_5_faces", poor5}, {"three_faces_semi_rich", semi}};
      (dependency_clean_at(g, scan, v) ? out.hits : out.notes).push_back(w);
    }
  } else if (id == "C3.10") {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 5 || !cls.vertices[v].interior) continue;
      auto fs = g.incident_faces(v);
      bool all_small_inner = std::all_of(fs.begin(), fs.end(), [&](FaceId f) {
        return g.face(f).degree <= 5 && cls.faces[f].position == FacePosition::Inner;
      });
      if (!all_small_inner) continue;
      ++out.counters["five_vertices_in_scope"];
      std::set<FaceId> rich;
      for (FaceId f : fs)
        if (cls.faces[f].richness == Richness::Rich) rich.insert(f);
      if (rich.size() >= 3) continue;
      ++out.counters["statement_fails"];
      Json w{{"vertex", v}, {"rich_faces", rich.size()}};
      (dependency_clean_at(g, scan, v) ? out.hits : out.notes).push_back(w);
    }
  } else if (id == "C3.9") {
    reducibility_trials(g, ViolationKind::TwoFacesLowDegree, scan, out, seed);
  } else if (id == "C3.12") {
    reducibility_trials(g, ViolationKind::C5353LowDegree, scan, out, seed);
  } else if (id == "C3.13") {
    reducibility_trials(g, ViolationKind::WheelNeighbourDegrees, scan, out, seed);
  }
  return out;
}

inline std::string lemma_statement(const std::string& id) {
  static const std::map<std::string, std::string> s{
      {"L2.2", "graphs of the class contain none of the forbidden fans and no W5 glued to a short cycle"},
      {"L2.3", "in a graph of the class a 6-cycle with a triangular chord has no other chord"},
      {"C3.6", "a flaw vertex lies on exactly one poor 5-face and its 3-faces are semi-rich, "
               "wherever the two-face check around it is clean"},
      {"C3.9", "two consecutive inner 5-minus faces at a small vertex with no other 5-plus vertex are reducible"},
      {"C3.10", "an interior 5-vertex with only inner 5-minus faces has three rich faces, "
                "wherever the two-face check around it is clean"},
      {"C3.12", "a (5,3,5,3) face sequence at a 6-vertex with no other 5-plus vertex is reducible"},
      {"C3.13", "a W5 hub whose small neighbours include fewer than three 5-vertices is reducible"}};
  return s.at(id);
}

}  // namespace detail

/// Runs the lemma over the corpus, one worker per hardware thread; output order follows the corpus.
inline CampaignResult lemma_campaign(const std::string& raw_id, const std::vector<CorpusEntry>& corpus,
                                     const Json& corpus_spec = Json::object(), std::uint64_t seed = 1,
                                     unsigned threads = 0) {
  const std::string id = normalize_lemma_id(raw_id);
  std::vector<detail::GraphOutcome> outcomes(corpus.size());
  std::vector<std::string> errors(corpus.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, corpus.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < corpus.size(); i += threads) {
        try {
          outcomes[i] = detail::run_lemma_on(id, corpus[i].graph, seed);
        } catch (const Error& e) {
          errors[i] = std::string(to_string(e.kind())) + ": " + e.what();
        }
      }
    });
  for (auto& th : pool) th.join();

  CampaignResult res;
  res.lemma = id;
  std::map<std::string, long long> totals;
  long long in_a = 0, checked = 0;
  Json notes = Json::array(), hits = Json::array(), errs = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& o = outcomes[i];
    const std::string gid = graph_id(corpus[i].graph);
    if (!errors[i].empty()) {
      errs.push_back({{"graph_id", gid}, {"label", corpus[i].label}, {"error", errors[i]}});
      continue;
    }
    in_a += o.in_a;
    checked += o.checked;
    for (const auto& [k, v] : o.counters) totals[k] += v;
    for (const auto& n : o.notes) notes.push_back({{"graph_id", gid}, {"label", corpus[i].label}, {"note", n}});
    for (const auto& h : o.hits) {
      res.hits.push_back({i, gid, corpus[i].label, to_plg(corpus[i].graph), h});
      hits.push_back({{"graph_id", gid}, {"label", corpus[i].label}, {"witness", h}});
    }
  }
  res.json = {{"lemma", id},
              {"statement", detail::lemma_statement(id)},
              {"corpus", corpus_spec},
              {"graphs", corpus.size()},
              {"graphs_in_family_A", in_a},
              {"graphs_checked", checked},
              {"counters", totals},
              {"counterexamples", hits.size()},
              {"hits", hits},
              {"notes", notes},
              {"errors", errs},
              {"seed", seed},
              {"tool_version", kToolVersion}};
  return res;
}

}  // namespace dlab
