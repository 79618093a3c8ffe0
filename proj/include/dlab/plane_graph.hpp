#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dlab/error.hpp"

namespace dlab {

using VertexId = int;
using DartId = int;
using FaceId = int;
using EdgeId = int;

/// Half-edge of the rotation system. Darts 2e and 2e+1 are the two orientations of edge e.
struct Dart {
  DartId id = -1;
  VertexId origin = -1;
  VertexId target = -1;
  DartId twin = -1;
  DartId next_at_origin = -1;  // clockwise successor around origin
};

struct FaceRecord {
  FaceId id = -1;
  std::vector<DartId> boundary_walk;
  std::vector<VertexId> vertex_walk;  // origins of boundary_walk, with multiplicity
  int degree = 0;
  bool boundary_is_cycle = false;
  std::vector<VertexId> incident_vertices;  // sorted, unique
};

struct OuterTriangle {
  std::array<VertexId, 3> vertices{};
};

struct Point {
  double x = 0;
  double y = 0;
};

/// A finite simple connected plane graph given by a rotation system. Immutable once built.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// rotation[v] lists the neighbours of v in clockwise order.
  static PlaneGraph from_rotation(std::vector<std::vector<VertexId>> rotation,
                                  std::vector<std::string> labels = {});

  /// Straight-line drawing; the rotation at each vertex is read off the neighbour angles.
  static PlaneGraph from_coordinates(const std::vector<Point>& points,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges,
                                     std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<Dart>& darts() const { return darts_; }
  const Dart& dart(DartId d) const { return darts_[d]; }
  const std::vector<FaceRecord>& faces() const { return faces_; }
  const FaceRecord& face(FaceId f) const { return faces_[f]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  int degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(rotation_[v].size());
  }
  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return rotation_[v];
  }
  const std::vector<std::vector<VertexId>>& rotation() const { return rotation_; }

  /// Faces around v in rotation order; entry i lies between neighbours i-1 and i.
  std::vector<FaceId> incident_faces(VertexId v) const {
    check_vertex(v);
    std::vector<FaceId> out;
    out.reserve(out_darts_[v].size());
    for (DartId d : out_darts_[v]) out.push_back(face_of_[d]);
    return out;
  }
  /// Darts leaving v in rotation order.
  const std::vector<DartId>& out_darts(VertexId v) const {
    check_vertex(v);
    return out_darts_[v];
  }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  DartId next_in_face(DartId d) const { return darts_[darts_[d].twin].next_at_origin; }

  /// Dart u->v, or -1 when uv is not an edge.
  DartId find_dart(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_dart(u, v) >= 0; }
  EdgeId edge_id(VertexId u, VertexId v) const {
    DartId d = find_dart(u, v);
    return d < 0 ? -1 : d / 2;
  }

  std::optional<FaceId> outer_face() const { return outer_face_; }
  const std::optional<OuterTriangle>& outer_triangle() const { return outer_triangle_; }
  bool has_outer_triangle() const { return outer_triangle_.has_value(); }
  bool on_outer_triangle(VertexId v) const {
    if (!outer_triangle_) return false;
    const auto& t = outer_triangle_->vertices;
    return t[0] == v || t[1] == v || t[2] == v;
  }

  /// Designates the face bounded by the triangle (a,b,c) as the unbounded face.
  PlaneGraph designate_outer(VertexId a, VertexId b, VertexId c) const;
  /// Marks an arbitrary face as unbounded without requiring it to be a triangle.
  PlaneGraph with_outer_face(FaceId f) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string name(VertexId v) const {
    if (v >= 0 && v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
  }
  /// Vertex with the given label (or decimal id), -1 if none.
  VertexId find_vertex(const std::string& name) const;

  /// Σ_v (2d(v)-6) + Σ_f (d(f)-6); -12 for every valid plane graph.
  long long euler_charge_sum() const;

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count())
      throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the graph");
  }

 private:
  void build();

  std::vector<std::vector<VertexId>> rotation_;
  std::vector<std::vector<DartId>> out_darts_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Dart> darts_;
  std::vector<FaceRecord> faces_;
  std::vector<FaceId> face_of_;
  std::vector<std::string> labels_;
  std::optional<FaceId> outer_face_;
  std::optional<OuterTriangle> outer_triangle_;
};

inline PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<VertexId>> rotation,
                                            std::vector<std::string> labels) {
  PlaneGraph g;
  g.rotation_ = std::move(rotation);
  g.labels_ = std::move(labels);
  g.build();
  return g;
}

inline PlaneGraph PlaneGraph::from_coordinates(const std::vector<Point>& points,
                                               const std::vector<std::pair<VertexId, VertexId>>& edges,
                                               std::vector<std::string> labels) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<VertexId>> rot(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto angle = [&](VertexId u) {
      return std::atan2(points[u].y - points[v].y, points[u].x - points[v].x);
    };
    // clockwise = decreasing angle
    std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
  }
  return from_rotation(std::move(rot), std::move(labels));
}

inline void PlaneGraph::build() {
  const int n = vertex_count();
  if (n == 0) throw Error(ErrorKind::Disconnected, "graph has no vertices");
  // simplicity and symmetry
  for (int v = 0; v < n; ++v) {
    std::set<VertexId> seen;
    for (VertexId u : rotation_[v]) {
      if (u < 0 || u >= n)
        throw Error(ErrorKind::UnknownVertex, "rotation of " + std::to_string(v) + " names vertex " + std::to_string(u));
      if (u == v) throw Error(ErrorKind::NonSimple, "loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw Error(ErrorKind::NonSimple, "parallel edge " + std::to_string(v) + "-" + std::to_string(u));
    }
  }
  for (int v = 0; v < n; ++v)
    for (VertexId u : rotation_[v])
      if (std::find(rotation_[u].begin(), rotation_[u].end(), v) == rotation_[u].end())
        throw Error(ErrorKind::InconsistentRotation,
                    "edge " + std::to_string(v) + "-" + std::to_string(u) + " missing from rotation of " + std::to_string(u));
  // connectivity
  {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : rotation_[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n) throw Error(ErrorKind::Disconnected, std::to_string(n - count) + " vertices unreachable from 0");
  }
  // edges and darts
  edges_.clear();
  for (int v = 0; v < n; ++v)
    for (VertexId u : rotation_[v])
      if (v < u) edges_.emplace_back(v, u);
  std::sort(edges_.begin(), edges_.end());
  darts_.assign(2 * edges_.size(), Dart{});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    darts_[2 * e] = Dart{static_cast<DartId>(2 * e), u, v, static_cast<DartId>(2 * e + 1), -1};
    darts_[2 * e + 1] = Dart{static_cast<DartId>(2 * e + 1), v, u, static_cast<DartId>(2 * e), -1};
  }
  out_darts_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    for (VertexId u : rotation_[v]) {
      auto a = std::min(u, v), b = std::max(u, v);
      auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
      DartId e = static_cast<DartId>(it - edges_.begin());
      out_darts_[v].push_back(v == a ? 2 * e : 2 * e + 1);
    }
    const auto& od = out_darts_[v];
    for (std::size_t i = 0; i < od.size(); ++i) darts_[od[i]].next_at_origin = od[(i + 1) % od.size()];
  }
  // faces
  faces_.clear();
  face_of_.assign(darts_.size(), -1);
  for (DartId start = 0; start < static_cast<DartId>(darts_.size()); ++start) {
    if (face_of_[start] >= 0) continue;
    FaceRecord f;
    f.id = static_cast<FaceId>(faces_.size());
    DartId d = start;
    do {
      face_of_[d] = f.id;
      f.boundary_walk.push_back(d);
      f.vertex_walk.push_back(darts_[d].origin);
      d = next_in_face(d);
    } while (d != start);
    f.degree = static_cast<int>(f.boundary_walk.size());
    f.incident_vertices = f.vertex_walk;
    std::sort(f.incident_vertices.begin(), f.incident_vertices.end());
    f.incident_vertices.erase(std::unique(f.incident_vertices.begin(), f.incident_vertices.end()),
                              f.incident_vertices.end());
    f.boundary_is_cycle = f.incident_vertices.size() == f.vertex_walk.size() && f.degree >= 3;
    faces_.push_back(std::move(f));
  }
  if (darts_.empty()) {
    // K1: a single face with an empty boundary
    FaceRecord f;
    f.id = 0;
    f.incident_vertices = {0};
    faces_.push_back(f);
  }
  const long long euler = static_cast<long long>(n) - edge_count() + face_count();
  if (euler != 2)
    throw Error(ErrorKind::NotSphereEmbedding,
                "V - E + F = " + std::to_string(euler) + " (expected 2); rotation is not a sphere embedding");
}

inline DartId PlaneGraph::find_dart(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return -1;
  auto key = std::make_pair(std::min(u, v), std::max(u, v));
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  DartId e = static_cast<DartId>(it - edges_.begin());
  return u < v ? 2 * e : 2 * e + 1;
}

inline PlaneGraph PlaneGraph::designate_outer(VertexId a, VertexId b, VertexId c) const {
  check_vertex(a);
  check_vertex(b);
  check_vertex(c);
  if (a == b || b == c || a == c) throw Error(ErrorKind::NotATriangle, "outer triple repeats a vertex");
  std::vector<VertexId> want{a, b, c};
  std::sort(want.begin(), want.end());
  std::optional<FaceId> any, oriented;
  for (const auto& f : faces_) {
    if (f.degree != 3 || f.incident_vertices != want) continue;
    if (!any) any = f.id;
    const auto& w = f.vertex_walk;
    for (int r = 0; r < 3; ++r)
      if (w[r] == a && w[(r + 1) % 3] == b && w[(r + 2) % 3] == c && !oriented) oriented = f.id;
  }
  if (!any)
    throw Error(ErrorKind::NoSuchFace, "(" + name(a) + "," + name(b) + "," + name(c) + ") does not bound a face");
  PlaneGraph g = *this;
  g.outer_face_ = oriented ? *oriented : *any;
  g.outer_triangle_ = OuterTriangle{{a, b, c}};
  return g;
}

inline PlaneGraph PlaneGraph::with_outer_face(FaceId f) const {
  if (f < 0 || f >= face_count()) throw Error(ErrorKind::NoSuchFace, "face " + std::to_string(f));
  PlaneGraph g = *this;
  g.outer_face_ = f;
  g.outer_triangle_.reset();
  const auto& rec = faces_[f];
  if (rec.degree == 3 && rec.boundary_is_cycle)
    g.outer_triangle_ = OuterTriangle{{rec.vertex_walk[0], rec.vertex_walk[1], rec.vertex_walk[2]}};
  return g;
}

inline VertexId PlaneGraph::find_vertex(const std::string& s) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == s) return v;
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    long long v = std::stoll(s);
    if (v < vertex_count()) return static_cast<VertexId>(v);
  }
  return -1;
}

inline long long PlaneGraph::euler_charge_sum() const {
  long long sum = 0;
  for (int v = 0; v < vertex_count(); ++v) sum += 2LL * degree(v) - 6;
  for (const auto& f : faces_) sum += f.degree - 6;
  return sum;
}

// ---------------------------------------------------------------------------
// PLG text format

/// "V n", "R v: u1 ... uk" (clockwise), optional "O a b c", '#' comments.
inline PlaneGraph parse_plg(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<std::optional<std::vector<VertexId>>> rot;
  std::optional<std::array<VertexId, 3>> outer;
  auto fail = [&](const std::string& msg) { throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg); };
  auto parse_int = [&](const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      fail("expected a non-negative integer, got '" + tok + "'");
    long long value = std::stoll(tok);
    if (value > 100000000) fail("integer out of range");
    return static_cast<int>(value);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string tag;
    ls >> tag;
    if (tag == "V") {
      if (n) fail("duplicate V line");
      std::string tok, extra;
      ls >> tok;
      n = parse_int(tok);
      if (ls >> extra) fail("trailing tokens after V");
      if (*n == 0) fail("V must be positive");
      rot.assign(*n, std::nullopt);
    } else if (tag == "R") {
      if (!n) fail("R line before V line");
      std::string head;
      ls >> head;
      if (head.empty()) fail("missing vertex in R line");
      std::string vtok = head;
      bool colon = false;
      if (vtok.back() == ':') {
        vtok.pop_back();
        colon = true;
      }
      if (!colon) {
        std::string c;
        ls >> c;
        if (c != ":") fail("expected ':' after vertex");
      }
      int v = parse_int(vtok);
      if (v >= *n) fail("vertex " + std::to_string(v) + " out of range");
      if (rot[v]) fail("duplicate R line for vertex " + std::to_string(v));
      std::vector<VertexId> nbrs;
      std::string tok;
      while (ls >> tok) {
        int u = parse_int(tok);
        if (u >= *n) fail("neighbour " + std::to_string(u) + " out of range");
        nbrs.push_back(u);
      }
      rot[v] = std::move(nbrs);
    } else if (tag == "O") {
      if (outer) fail("duplicate O line");
      std::array<VertexId, 3> t{};
      std::string tok;
      for (auto& x : t) {
        if (!(ls >> tok)) fail("O needs three vertices");
        x = parse_int(tok);
      }
      if (ls >> tok) fail("trailing tokens after O");
      outer = t;
    } else {
      fail("unknown directive '" + tag + "'");
    }
  }
  if (!n) throw Error(ErrorKind::ParseError, "missing V line");
  std::vector<std::vector<VertexId>> rotation(*n);
  for (int v = 0; v < *n; ++v) {
    if (!rot[v]) throw Error(ErrorKind::ParseError, "no R line for vertex " + std::to_string(v));
    rotation[v] = *rot[v];
  }
  PlaneGraph g = PlaneGraph::from_rotation(std::move(rotation));
  if (outer) g = g.designate_outer((*outer)[0], (*outer)[1], (*outer)[2]);
  return g;
}

inline PlaneGraph parse_plg(const std::string& text) {
  std::istringstream in(text);
  return parse_plg(in);
}

inline std::string to_plg(const PlaneGraph& g) {
  std::ostringstream out;
  out << "V " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "R " << v << ":";
    for (VertexId u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
  if (g.outer_triangle()) {
    const auto& t = g.outer_triangle()->vertices;
    out << "O " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  return out.str();
}

/// FNV-1a of the PLG form, as 16 hex digits.
inline std::string graph_id(const PlaneGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : to_plg(g)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace dlab
