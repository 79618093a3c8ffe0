#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dlab/classify.hpp"
#include "dlab/error.hpp"
#include "dlab/plane_graph.hpp"
#include "dlab/rational.hpp"
#include "dlab/structural.hpp"

namespace dlab {

struct Element {
  bool is_face = false;
  int id = -1;

  static Element vertex(VertexId v) { return {false, v}; }
  static Element face(FaceId f) { return {true, f}; }
  std::string name() const { return (is_face ? "f" : "v") + std::to_string(id); }
  auto operator<=>(const Element&) const = default;
};

enum class Rule { R1_1, R1_2, R2_1, R2_2, R2_3, R3_1, R3_2, R4_1, R4_2, R5, R6, R7, R8 };

inline std::string to_string(Rule r) {
  static const char* names[] = {"R1.1", "R1.2", "R2.1", "R2.2", "R2.3", "R3.1", "R3.2",
                                "R4.1", "R4.2", "R5",   "R6",   "R7",   "R8"};
  return names[static_cast<int>(r)];
}

struct Transfer {
  Element source;
  Element sink;
  Charge amount;
  Rule rule = Rule::R1_1;
  std::string justification;
};

struct ChargeLedger {
  std::vector<Charge> vertex_initial, face_initial;
  std::vector<Transfer> transfers;
  std::vector<Charge> vertex_final, face_final;
  std::vector<std::string> anomalies;

  const Charge& initial(Element e) const { return e.is_face ? face_initial[e.id] : vertex_initial[e.id]; }
  const Charge& final_charge(Element e) const { return e.is_face ? face_final[e.id] : vertex_final[e.id]; }

  static Charge sum(const std::vector<Charge>& a, const std::vector<Charge>& b) {
    Charge s = 0;
    for (const auto& x : a) s += x;
    for (const auto& x : b) s += x;
    return s;
  }
  Charge total_initial() const { return sum(vertex_initial, face_initial); }
  Charge total_final() const { return sum(vertex_final, face_final); }
};

/// Recomputes every final charge from the initial charges and the transfer list, and
/// checks that the running total never leaves the initial total.
inline bool ledger_consistent(const ChargeLedger& l) {
  auto v = l.vertex_initial;
  auto f = l.face_initial;
  const Charge total = l.total_initial();
  auto slot = [&](Element e) -> Charge& { return e.is_face ? f[e.id] : v[e.id]; };
  for (const auto& t : l.transfers) {
    slot(t.source) -= t.amount;
    slot(t.sink) += t.amount;
    if (ChargeLedger::sum(v, f) != total) return false;
  }
  return v == l.vertex_final && f == l.face_final;
}

inline ChargeLedger initial_charges(const PlaneGraph& g) {
  if (!g.outer_face()) throw Error(ErrorKind::MissingOuterFace, "charges need a designated outer face");
  ChargeLedger l;
  for (VertexId v = 0; v < g.vertex_count(); ++v) l.vertex_initial.push_back(Charge(2 * g.degree(v) - 6));
  for (const auto& f : g.faces()) l.face_initial.push_back(Charge(f.degree - 6));
  if (l.total_initial() != -12)
    throw Error(ErrorKind::ChargeSumMismatch, "initial charges sum to " + to_string(l.total_initial()));
  l.vertex_final = l.vertex_initial;
  l.face_final = l.face_initial;
  return l;
}

namespace detail {

inline bool on_outer(const PlaneGraph& g, VertexId v) {
  const auto& ov = g.face(*g.outer_face()).incident_vertices;
  return std::binary_search(ov.begin(), ov.end(), v);
}

inline std::vector<FaceId> across_faces(const PlaneGraph& g, FaceId f) {
  std::vector<FaceId> out;
  for (DartId d : g.face(f).boundary_walk) out.push_back(g.face_of(g.dart(d).twin));
  return out;
}

inline bool bounded(const PlaneGraph& g, FaceId f) { return f != *g.outer_face(); }

inline bool three_face_next_to_three_face(const PlaneGraph& g, FaceId f) {
  if (!bounded(g, f) || g.face(f).degree != 3) return false;
  for (FaceId h : across_faces(g, f))
    if (h != f && bounded(g, h) && g.face(h).degree == 3) return true;
  return false;
}

/// True when the face has exactly `fours` vertices of degree 4 and `bigs` of degree at least 5.
inline bool degree_profile(const PlaneGraph& g, FaceId f, int fours, int bigs) {
  int n4 = 0, n5 = 0;
  for (VertexId v : g.face(f).incident_vertices) {
    if (g.degree(v) == 4) ++n4;
    else if (g.degree(v) >= 5) ++n5;
  }
  return g.face(f).degree == fours + bigs && n4 == fours && n5 == bigs;
}

inline bool shares_outer_edge(const PlaneGraph& g, FaceId f) {
  for (FaceId h : across_faces(g, f))
    if (h == *g.outer_face()) return true;
  return false;
}

inline int outer_vertices_on(const PlaneGraph& g, FaceId f) {
  int k = 0;
  for (VertexId v : g.face(f).incident_vertices) k += on_outer(g, v);
  return k;
}

struct Candidate {
  Charge amount;
  std::string why;
};

}  // namespace detail

/// Runs R1 to R8 on the ledger from initial_charges. Every rule reads the classification
/// computed before any charge moves; only R8 looks at the charges left by R1 to R7.
inline ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger, const Classification& cls,
                                bool strict = false) {
  using detail::Candidate;
  const FaceId D = *g.outer_face();
  std::vector<Transfer> out;
  auto emit = [&](Rule r, Element src, Element dst, const Charge& amt, std::string why) {
    if (amt != 0) out.push_back({src, dst, amt, r, std::move(why)});
  };
  auto pick = [&](Rule r, VertexId v, FaceId f, const std::vector<Candidate>& cs) {
    if (cs.empty()) return;
    if (cs.size() > 1) {
      std::string msg = to_string(r) + " has " + std::to_string(cs.size()) + " clauses for v" + std::to_string(v) +
                        " -> f" + std::to_string(f);
      if (strict) throw Error(ErrorKind::AmbiguousRule, msg);
      ledger.anomalies.push_back(msg + "; the first is used");
    }
    emit(r, Element::vertex(v), Element::face(f), cs.front().amount, cs.front().why);
  };
  auto role_text = [&](VertexId v, FaceId f) {
    TrioRole role = cls.role(v, f);
    std::string s = to_string(role) + " face of v" + std::to_string(v);
    if (cls.cluster_of_face[f] >= 0) s += " in cluster K" + std::to_string(cls.cluster_of_face[f]);
    return s;
  };
  auto three_faces_at = [&](VertexId v) {
    int k = 0;
    for (FaceId h : g.incident_faces(v)) k += g.face(h).degree == 3;
    return k;
  };

  for (FaceId f = 0; f < g.face_count(); ++f) {
    const auto& fc = cls.faces[f];
    if (fc.position != FacePosition::Inner) continue;
    const bool paired = detail::three_face_next_to_three_face(g, f);
    for (VertexId v : g.face(f).incident_vertices) {
      if (!cls.vertices[v].interior) continue;
      const int d = g.degree(v);
      std::vector<Candidate> cs;
      if (fc.degree == 3 && !paired) {
        if (d == 4) {
          cs.push_back(cls.vertices[v].flaw ? Candidate{frac(9, 10), "flaw 4-vertex"} : Candidate{1, "4-vertex"});
          pick(Rule::R1_1, v, f, cs);
        } else if (d >= 5) {
          if (detail::degree_profile(g, f, 2, 1)) cs.push_back({frac(6, 5), "(4,4,5+)-face"});
          else cs.push_back({1, "5+-vertex"});
          pick(Rule::R1_2, v, f, cs);
        }
      } else if (fc.degree == 3) {
        TrioRole role = cls.role(v, f);
        if (d == 4) {
          if (cls.vertices[v].w5_hub) {
            cs.push_back({frac(1, 2), "hub of W5"});
          } else {
            if (role != TrioRole::Worst) cs.push_back({1, role_text(v, f)});
            if (role == TrioRole::Worst) cs.push_back({frac(2, 3), role_text(v, f)});
          }
          pick(Rule::R2_1, v, f, cs);
        } else if (d == 5) {
          if (role == TrioRole::Good || role == TrioRole::Worst) cs.push_back({1, role_text(v, f)});
          if (role == TrioRole::Worse) cs.push_back({frac(5, 4), role_text(v, f)});
          if (role == TrioRole::Bad) cs.push_back({frac(3, 2), role_text(v, f)});
          pick(Rule::R2_2, v, f, cs);
        } else if (d >= 6) {
          if (role == TrioRole::Good || role == TrioRole::Worst) cs.push_back({1, role_text(v, f)});
          else cs.push_back({frac(3, 2), role_text(v, f)});
          pick(Rule::R2_3, v, f, cs);
        }
      } else if (fc.degree == 4) {
        if (d == 4) {
          cs.push_back({frac(1, 3), "4-vertex on inner 4-face"});
          pick(Rule::R3_1, v, f, cs);
        } else if (d >= 5) {
          if (detail::degree_profile(g, f, 3, 1)) cs.push_back({1, "(4,4,4,5+)-face"});
          if (fc.richness == Richness::Rich) cs.push_back({frac(2, 3), "rich 4-face"});
          pick(Rule::R3_2, v, f, cs);
        }
      } else if (fc.degree == 5) {
        if (d == 4) {
          if (cls.vertices[v].flaw && fc.richness == Richness::Poor)
            cs.push_back({frac(1, 5), "flaw 4-vertex on poor 5-face"});
          else if (three_faces_at(v) <= 1)
            cs.push_back({frac(1, 3), "4-vertex with at most one 3-face"});
          pick(Rule::R4_1, v, f, cs);
        } else if (d >= 5) {
          if (detail::degree_profile(g, f, 4, 1)) {
            bool all3 = true, big = false;
            for (FaceId h : detail::across_faces(g, f)) {
              if (g.face(h).degree != 3) all3 = false;
              if (h != f && g.face(h).degree >= 4) big = true;
            }
            if (all3) cs.push_back({1, "(4,4,4,4,5+)-face next to five 3-faces"});
            if (big) cs.push_back({frac(2, 3), "(4,4,4,4,5+)-face next to a 4+-face"});
          }
          if (fc.richness == Richness::Rich)
            cs.push_back({frac(1, fc.big_vertices), "rich 5-face, t=" + std::to_string(fc.big_vertices)});
          pick(Rule::R4_2, v, f, cs);
        }
      }
    }
  }

  // R5: 7+-faces feed the wedge faces of W5 hubs, once per shared edge.
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (cls.faces[f].position != FacePosition::Inner || cls.faces[f].degree != 3) continue;
    std::optional<VertexId> hub;
    for (VertexId v : g.face(f).incident_vertices)
      if (cls.vertices[v].w5_hub && !hub) hub = v;
    if (!hub) continue;
    for (FaceId h : detail::across_faces(g, f))
      if (h != D && h != f && g.face(h).degree >= 7)
        emit(Rule::R5, Element::face(h), Element::face(f), frac(1, 8),
             "7+-face next to W5 face of hub v" + std::to_string(*hub));
  }

  // R6: the outer face absorbs the charge of its vertices.
  for (VertexId v : g.face(D).incident_vertices)
    emit(Rule::R6, Element::vertex(v), Element::face(D), ledger.vertex_initial[v],
         "outer vertex of degree " + std::to_string(g.degree(v)));

  // R7: extreme faces.
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (cls.faces[f].position != FacePosition::Extreme) continue;
    const int k = cls.faces[f].degree;
    if (k == 3) {
      if (detail::shares_outer_edge(g, f))
        emit(Rule::R7, Element::face(D), Element::face(f), frac(5, 2), "3-face sharing an edge with C0");
      else if (detail::outer_vertices_on(g, f) == 1)
        emit(Rule::R7, Element::face(D), Element::face(f), 2, "3-face sharing one vertex with C0");
      for (VertexId v : g.face(f).incident_vertices)
        if (cls.vertices[v].interior)
          emit(Rule::R7, Element::vertex(v), Element::face(f), frac(1, 2), "interior vertex of extreme 3-face");
    } else if (k == 4 || k == 5) {
      emit(Rule::R7, Element::face(D), Element::face(f), 2, "extreme " + std::to_string(k) + "-face");
    }
  }

  auto settle = [&](std::vector<Charge>& vf, std::vector<Charge>& ff, const Transfer& t) {
    (t.source.is_face ? ff[t.source.id] : vf[t.source.id]) -= t.amount;
    (t.sink.is_face ? ff[t.sink.id] : vf[t.sink.id]) += t.amount;
  };
  std::stable_sort(out.begin(), out.end(), [](const Transfer& a, const Transfer& b) {
    return std::tie(a.rule, a.sink, a.source) < std::tie(b.rule, b.sink, b.source);
  });
  auto vf = ledger.vertex_initial;
  auto ff = ledger.face_initial;
  for (const auto& t : out) settle(vf, ff, t);

  // R8: equalize each cluster; surplus faces pay deficit faces in id order.
  for (const auto& cl : cls.clusters) {
    Charge total = 0;
    for (FaceId f : cl.faces) total += ff[f];
    const Charge target = total / Charge(static_cast<long long>(cl.faces.size()));
    std::vector<std::pair<FaceId, Charge>> give, take;
    for (FaceId f : cl.faces) {
      if (ff[f] > target) give.emplace_back(f, ff[f] - target);
      if (ff[f] < target) take.emplace_back(f, target - ff[f]);
    }
    std::size_t i = 0, j = 0;
    while (i < give.size() && j < take.size()) {
      Charge amt = std::min(give[i].second, take[j].second);
      Transfer t{Element::face(give[i].first), Element::face(take[j].first), amt, Rule::R8,
                 "cluster K" + std::to_string(cl.id) + " equalized to " + to_string(target)};
      settle(vf, ff, t);
      out.push_back(std::move(t));
      give[i].second -= amt;
      take[j].second -= amt;
      if (give[i].second == 0) ++i;
      if (take[j].second == 0) ++j;
    }
  }

  ledger.transfers = std::move(out);
  ledger.vertex_final = std::move(vf);
  ledger.face_final = std::move(ff);
  for (const auto& a : cls.anomalies) ledger.anomalies.push_back(a);
  if (ledger.total_final() != ledger.total_initial())
    throw Error(ErrorKind::ChargeSumMismatch, "final charges sum to " + to_string(ledger.total_final()));
  return ledger;
}

inline ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger, bool strict = false) {
  return apply_rules(g, std::move(ledger), classify(g, strict), strict);
}

/// One transfer per line, e.g. "R2.2 v7 -> f12 : 5/4 [worse face of v7 in cluster K3]".
inline std::string ledger_text(const ChargeLedger& l) {
  std::ostringstream os;
  for (const auto& t : l.transfers)
    os << to_string(t.rule) << ' ' << t.source.name() << " -> " << t.sink.name() << " : " << to_string(t.amount)
       << " [" << t.justification << "]\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Case verdicts

struct CaseVerdict {
  Element element;
  std::string case_id;  // "1.1.1" ... "14", "boundary" for outer vertices, "unclassified"
  Charge final_charge;
  bool nonnegative = true;
  std::vector<std::string> lemma_dependency;  // violation kinds (and "family-A") the case argument needs absent
  std::vector<Violation> annotations;         // filled for negative elements
  bool global_annotation = false;             // no local violation; the graph-wide list was used
  std::string note;
};

struct VerdictSummary {
  std::vector<CaseVerdict> verdicts;
  std::vector<Element> negative;
  std::vector<Element> unexplained;   // negative with no annotation at all
  std::vector<Element> unclassified;
  bool structural_clean = false;
  bool in_family_a = false;

  /// Clean members of the class carry no negative charge, and every negative charge is explained.
  bool contract_holds() const {
    if (structural_clean && in_family_a && !negative.empty()) return false;
    return unexplained.empty();
  }
};

namespace detail {

inline std::vector<std::string> deps(std::initializer_list<ViolationKind> ks, bool family = false) {
  std::vector<std::string> out;
  if (family) out.push_back("family-A");
  for (auto k : ks) out.push_back(to_string(k));
  return out;
}

struct CaseResult {
  std::string id;
  std::vector<std::string> dependency;
  std::string note;
};

inline CaseResult vertex_case(const PlaneGraph& g, const Classification& cls, VertexId v) {
  using VK = ViolationKind;
  if (!cls.vertices[v].interior) return {"boundary", {}, "charge moved to D"};
  const int d = g.degree(v);
  if (d <= 3) return {"unclassified", deps({VK::InteriorLowDegree}), "interior vertex of degree " + std::to_string(d)};
  auto fs = g.incident_faces(v);
  const int k = static_cast<int>(fs.size());
  bool paired = false, consecutive = false;
  int n3 = 0, n4 = 0, n6 = 0;
  for (int i = 0; i < k; ++i) {
    int fd = g.face(fs[i]).degree;
    n3 += fd == 3;
    n4 += fd == 4;
    n6 += fd >= 6;
    paired |= three_face_next_to_three_face(g, fs[i]);
    if (fd == 3 && g.face(fs[(i + 1) % k]).degree == 3 && fs[i] != fs[(i + 1) % k]) consecutive = true;
  }
  const auto pattern = deps({VK::VertexFacePattern});
  if (d == 4) {
    if (paired) return {consecutive ? "1.1.1" : "1.1.2", pattern, ""};
    if (n3 <= 1) return {"1.2", {}, ""};
    return {"1.3", deps({VK::VertexFacePattern, VK::TwoFacesLowDegree}), ""};
  }
  if (d == 5) {
    if (paired) return {consecutive ? "2.1" : "2.2", deps({VK::VertexFacePattern}, consecutive), ""};
    const auto rich = deps({VK::VertexFacePattern, VK::TwoFacesLowDegree});
    if (n6 >= 2) return {"3.1", {}, ""};
    if (n6 == 1 && n3 <= 1) return {"3.2", pattern, ""};
    if (n6 == 1 && n3 == 2) return {"3.3", rich, ""};
    if (n6 == 0 && n3 == 0) return {"4.1", rich, ""};
    if (n6 == 0 && n3 == 1 && n4 <= 2) return {"4.2." + std::to_string(n4 + 1), rich, ""};
    if (n6 == 0 && n3 == 2) return {"4.3", rich, ""};
    return {"unclassified", pattern, "5-vertex with " + std::to_string(n3) + " 3-faces"};
  }
  if (d == 6) {
    if (paired) return {consecutive ? "5.1" : "5.2", deps({VK::VertexFacePattern}, true), ""};
    if (n6 >= 1) return {"6.1", {}, ""};
    if (n3 <= 3)
      return {"6.2." + std::to_string(n3 + 1),
              n3 == 3 ? deps({VK::VertexFacePattern, VK::C5353LowDegree}) : pattern, ""};
    return {"unclassified", pattern, "6-vertex with " + std::to_string(n3) + " 3-faces"};
  }
  return {paired ? "7.1" : "7.2", pattern, ""};
}

inline CaseResult face_case(const PlaneGraph& g, const Classification& cls, FaceId f) {
  using VK = ViolationKind;
  const auto& fc = cls.faces[f];
  if (fc.position == FacePosition::Unbounded) return {"14", deps({VK::NonCycleFace}), ""};
  if (fc.position == FacePosition::Extreme) {
    if (fc.degree == 3) return {shares_outer_edge(g, f) ? "13.2" : "13.1", {}, ""};
    if (fc.degree <= 5) return {"13.3", {}, ""};
    return {"12", {}, "extreme face of degree " + std::to_string(fc.degree)};
  }
  if (fc.degree == 3) {
    if (!three_face_next_to_three_face(g, f)) return {"8", deps({VK::TwoFacesLowDegree}), ""};
    const int k = cls.cluster_of_face[f];
    if (k < 0) return {"9.1", {}, ""};
    const auto& cl = cls.clusters[k];
    std::string note = cl.merged ? "merged cluster" : "";
    if (!cl.hubs.empty()) {
      std::set<VertexId> wheel;
      for (FaceId h : cl.faces)
        for (VertexId v : g.face(h).incident_vertices) wheel.insert(v);
      int big = 0;
      for (VertexId v : wheel) big += g.degree(v) >= 6;
      return {"9.3." + std::to_string(std::min(big, 2) + 1),
              deps({VK::WheelNearShortFace, VK::WheelNeighbourDegrees, VK::TwoFacesLowDegree}), note};
    }
    const auto& t = cls.trios[cl.trios.front()];
    const int worst = g.degree(t.center);
    const int w1 = g.degree(t.match.vertex_map[2]), w2 = g.degree(t.match.vertex_map[3]);
    const auto dep = deps({VK::TwoFacesLowDegree});
    if (worst >= 5) return {"9.2.1", dep, note};
    if (worst == 4 && w1 == 4 && w2 == 4) return {"9.2.2", dep, note};
    if (worst == 4 && (w1 == 5 || w2 == 5) && std::min(w1, w2) >= 4) return {"9.2.3", dep, note};
    if (worst == 4 && std::max(w1, w2) >= 6 && std::min(w1, w2) >= 4) return {"9.2.4", dep, note};
    return {"unclassified", deps({VK::InteriorLowDegree}), "trio with a 3-vertex"};
  }
  if (fc.degree == 4) return {"10", deps({VK::PoorInnerFourFace}), ""};
  if (fc.degree == 5) {
    if (fc.richness == Richness::Poor) return {"11.1", deps({VK::VertexFacePattern}), ""};
    if (fc.richness == Richness::Rich) return {"11.3", {}, ""};
    bool all3 = true, big = false;
    for (FaceId h : across_faces(g, f)) {
      if (g.face(h).degree != 3) all3 = false;
      if (h != f && g.face(h).degree >= 4) big = true;
    }
    if (big) return {"11.2.1", deps({VK::VertexFacePattern}), ""};
    if (all3) return {"11.2.2", {}, ""};
    return {"unclassified", {}, "semi-rich 5-face next to itself"};
  }
  return {"12", {}, ""};
}

}  // namespace detail

/// Assigns every vertex and face its case and annotates each negative element with the
/// structural violations near it. Strict mode raises UnclassifiableElement instead of reporting it.
inline VerdictSummary verdicts(const PlaneGraph& g, const ChargeLedger& l, const Classification& cls,
                               const StructuralReport& scan, bool in_family_a, bool strict = false) {
  VerdictSummary s;
  s.structural_clean = scan.clean();
  s.in_family_a = in_family_a;

  auto local_vertices = [&](Element e) {
    std::set<VertexId> base;
    if (!e.is_face) {
      base.insert(e.id);
    } else if (cls.cluster_of_face[e.id] >= 0) {
      for (FaceId h : cls.clusters[cls.cluster_of_face[e.id]].faces)
        for (VertexId v : g.face(h).incident_vertices) base.insert(v);
    } else {
      for (VertexId v : g.face(e.id).incident_vertices) base.insert(v);
    }
    std::set<VertexId> out = base;
    for (VertexId v : base)
      for (VertexId w : g.neighbors(v)) out.insert(w);
    return out;
  };

  auto judge = [&](Element e, detail::CaseResult r) {
    CaseVerdict cv;
    cv.element = e;
    cv.case_id = std::move(r.id);
    cv.lemma_dependency = std::move(r.dependency);
    cv.note = std::move(r.note);
    cv.final_charge = l.final_charge(e);
    cv.nonnegative = cv.final_charge >= 0;
    if (cv.case_id == "unclassified") {
      if (strict) throw Error(ErrorKind::UnclassifiableElement, e.name() + ": " + cv.note);
      s.unclassified.push_back(e);
    }
    if (!cv.nonnegative) {
      s.negative.push_back(e);
      const bool is_outer = e.is_face && e.id == *g.outer_face();
      if (!is_outer) {
        auto near = local_vertices(e);
        std::vector<Violation> preferred, other;
        for (const auto& viol : scan.violations) {
          bool hit = std::any_of(viol.vertices.begin(), viol.vertices.end(), [&](VertexId v) { return near.count(v); });
          if (e.is_face) hit |= std::binary_search(viol.faces.begin(), viol.faces.end(), e.id);
          if (!hit) continue;
          bool dep = std::find(cv.lemma_dependency.begin(), cv.lemma_dependency.end(), to_string(viol.kind)) !=
                     cv.lemma_dependency.end();
          (dep ? preferred : other).push_back(viol);
        }
        cv.annotations = preferred.empty() ? other : preferred;
      }
      if (cv.annotations.empty() && !scan.violations.empty()) {
        cv.annotations = scan.violations;
        cv.global_annotation = true;
      }
      if (!in_family_a && cv.annotations.empty()) cv.note += cv.note.empty() ? "graph is outside family A" : "; graph is outside family A";
      if (cv.annotations.empty() && in_family_a) s.unexplained.push_back(e);
    }
    s.verdicts.push_back(std::move(cv));
  };

  for (VertexId v = 0; v < g.vertex_count(); ++v) judge(Element::vertex(v), detail::vertex_case(g, cls, v));
  for (FaceId f = 0; f < g.face_count(); ++f) judge(Element::face(f), detail::face_case(g, cls, f));
  return s;
}

// ---------------------------------------------------------------------------
// Outer face bookkeeping

struct OuterFaceAccounting {
  int f3_edge = 0;         // 3-faces sharing exactly one edge with D
  int f_other = 0;         // 3-faces sharing exactly one vertex with D, plus 4- and 5-faces touching D
  int boundary_edges = 0;  // edges between C0 and the rest
  Charge mu_star_d;        // final charge of D from the ledger
  Charge recomputed;       // mu(D) + sum over C0 of mu(v) minus what R7 pays, from the counts
  Charge printed;          // 3 - (2/5) f3' + 2 (e - f3' - f')
  bool slack_nonnegative = false;
  bool f3_bounded = false;  // f3' <= 3
  bool positive = false;    // mu_star_d > 0

  int slack() const { return boundary_edges - f3_edge - f_other; }
};

inline OuterFaceAccounting outer_face_accounting(const PlaneGraph& g, const ChargeLedger& l) {
  if (!g.outer_face()) throw Error(ErrorKind::MissingOuterFace, "no outer face");
  const FaceId D = *g.outer_face();
  OuterFaceAccounting a;
  Charge r7 = 0;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (f == D) continue;
    const int k = g.face(f).degree;
    const int touch = detail::outer_vertices_on(g, f);
    if (touch == 0) continue;
    int shared = 0;
    for (FaceId h : detail::across_faces(g, f)) shared += h == D;
    if (k == 3 && shared == 1) ++a.f3_edge;
    if (k == 3 && shared == 0 && touch == 1) ++a.f_other;
    if (k == 4 || k == 5) ++a.f_other;
    if (k == 3 && shared >= 1) r7 += frac(5, 2);
    else if (k == 3 && touch == 1) r7 += 2;
    else if (k == 4 || k == 5) r7 += 2;
  }
  Charge mu_c0 = 0;
  for (VertexId v : g.face(D).incident_vertices) {
    mu_c0 += l.vertex_initial[v];
    for (VertexId w : g.neighbors(v)) a.boundary_edges += !detail::on_outer(g, w);
  }
  a.mu_star_d = l.face_final[D];
  a.recomputed = l.face_initial[D] + mu_c0 - r7;
  a.printed = Charge(3) - frac(2, 5) * a.f3_edge + Charge(2 * a.slack());
  a.slack_nonnegative = a.slack() >= 0;
  a.f3_bounded = a.f3_edge <= 3;
  a.positive = a.mu_star_d > 0;
  return a;
}

}  // namespace dlab
