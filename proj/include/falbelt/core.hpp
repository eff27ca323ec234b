#pragma once

// Combinatorial maps for painted crushtaceans: validation, duality with the
// nerve triangulation, and canonical isomorphism codes.
//
// A crushtacean is a connected trivalent map on the sphere whose painted
// edges form a perfect matching; its planar dual is the nerve, a sphere
// triangulation with exactly one painted edge per triangle.  Embeddings are
// stored as rotation systems (per-vertex counterclockwise edge order) and
// sphericity is checked through the Euler characteristic, which keeps
// "planar" machine-checkable.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace falbelt {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-edge incidence record. Edge e owns darts 2e (at edges[e].first) and
// 2e+1 (at edges[e].second); the edge involution is id ^ 1.
struct Dart {
  int id = -1;
  int vertex = -1;
  int edge = -1;
};

// Rotation-system map with arbitrary vertex degrees.  Used for crushtaceans,
// nerves and census triangulations alike.  Loops are never allowed, so an
// edge occurs at most once in each endpoint's rotation.
struct RotationMap {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;   // unordered endpoint pairs
  std::vector<std::vector<int>> rotation;   // rotation[v]: incident edges, ccw

  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct PaintedCrushtacean {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;
  std::set<int> painted;
  std::set<int> twisted;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int crossing_circles() const { return static_cast<int>(painted.size()); }
  bool is_painted(int e) const { return painted.count(e) > 0; }
  bool is_twisted(int e) const { return twisted.count(e) > 0; }

  RotationMap skeleton() const { return RotationMap{vertex_count, edges, rotation}; }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
};

namespace detail {

// sigma maps each dart to the next dart counterclockwise around its vertex;
// alpha is d ^ 1.  Faces are the orbits of sigma∘alpha.
struct DartStructure {
  int dart_count = 0;
  std::vector<int> vertex_of;
  std::vector<int> sigma;
  std::vector<int> sigma_inv;

  static int alpha(int d) { return d ^ 1; }
  int edge_of(int d) const { return d >> 1; }
};

inline std::optional<DartStructure> build_darts(const RotationMap& m, std::string* why = nullptr) {
  auto reject = [&](const std::string& msg) -> std::optional<DartStructure> {
    if (why) *why = msg;
    return std::nullopt;
  };
  const int ec = m.edge_count();
  DartStructure ds;
  ds.dart_count = 2 * ec;
  ds.vertex_of.assign(ds.dart_count, -1);
  ds.sigma.assign(ds.dart_count, -1);
  ds.sigma_inv.assign(ds.dart_count, -1);
  for (int e = 0; e < ec; ++e) {
    auto [u, v] = m.edges[e];
    if (u < 0 || v < 0 || u >= m.vertex_count || v >= m.vertex_count)
      return reject("edge endpoints out of range");
    if (u == v) return reject("loops forbidden");
    ds.vertex_of[2 * e] = u;
    ds.vertex_of[2 * e + 1] = v;
  }
  if (static_cast<int>(m.rotation.size()) != m.vertex_count)
    return reject("rotation table must have one entry per vertex");
  // Incident-edge multiset per vertex, from the edge list.
  std::vector<std::vector<int>> incident(m.vertex_count);
  for (int e = 0; e < ec; ++e) {
    incident[m.edges[e].first].push_back(e);
    incident[m.edges[e].second].push_back(e);
  }
  for (int v = 0; v < m.vertex_count; ++v) {
    std::vector<int> want = incident[v];
    std::vector<int> got = m.rotation[v];
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got)
      return reject("rotation[" + std::to_string(v) + "] must list that vertex's incident edges exactly once");
    const auto& rot = m.rotation[v];
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      const int e = rot[i];
      const int en = rot[(i + 1) % deg];
      const int d = (m.edges[e].first == v) ? 2 * e : 2 * e + 1;
      const int dn = (m.edges[en].first == v) ? 2 * en : 2 * en + 1;
      ds.sigma[d] = dn;
      ds.sigma_inv[dn] = d;
    }
  }
  return ds;
}

// Face orbits of sigma∘alpha, each listed from its smallest dart.
inline std::vector<std::vector<int>> trace_faces(const DartStructure& ds) {
  std::vector<std::vector<int>> faces;
  std::vector<char> seen(ds.dart_count, 0);
  for (int d0 = 0; d0 < ds.dart_count; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = ds.sigma[DartStructure::alpha(d)];
    } while (d != d0);
    faces.push_back(std::move(orbit));
  }
  return faces;
}

inline bool connected(const RotationMap& m) {
  if (m.vertex_count <= 0) return false;
  std::vector<char> seen(m.vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : m.edges) {
      int w = -1;
      if (a == v) w = b;
      else if (b == v) w = a;
      else continue;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == m.vertex_count;
}

// Euler characteristic V - E + F of the rotation system (2 on the sphere).
inline std::optional<int> euler_characteristic(const RotationMap& m) {
  auto ds = build_darts(m);
  if (!ds) return std::nullopt;
  const int f = static_cast<int>(trace_faces(*ds).size());
  return m.vertex_count - m.edge_count() + f;
}

}  // namespace detail

inline ValidationReport validate(const PaintedCrushtacean& g) {
  ValidationReport report;
  if (g.vertex_count < 2 || g.vertex_count % 2 != 0) {
    report.fail("vertex_count must be an even integer >= 2");
    return report;
  }
  const int ec = g.edge_count();
  for (int e = 0; e < ec; ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) {
      report.fail("edge " + std::to_string(e) + " has endpoints out of range");
      return report;
    }
    if (u == v) {
      report.fail("edge " + std::to_string(e) + " is a loop; loops forbidden");
      return report;
    }
  }
  std::vector<int> degree(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (degree[v] != 3) {
      report.fail("graph must be 3-regular (vertex " + std::to_string(v) + " has degree " +
                  std::to_string(degree[v]) + ")");
      return report;
    }

  std::string why;
  auto ds = detail::build_darts(g.skeleton(), &why);
  if (!ds) {
    report.fail(why);
    return report;
  }
  if (!detail::connected(g.skeleton())) report.fail("graph must be connected");

  const auto faces = detail::trace_faces(*ds);
  const int euler = g.vertex_count - ec + static_cast<int>(faces.size());
  if (euler != 2)
    report.fail("rotation system must have genus 0 (V-E+F = " + std::to_string(euler) + ", expected 2)");

  // Painted must be a perfect matching; twist flags only on painted edges.
  std::vector<int> painted_degree(g.vertex_count, 0);
  for (int e : g.painted) {
    if (e < 0 || e >= ec) {
      report.fail("painted edge id " + std::to_string(e) + " out of range");
      return report;
    }
    ++painted_degree[g.edges[e].first];
    ++painted_degree[g.edges[e].second];
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (painted_degree[v] != 1) {
      report.fail("painted must be a perfect matching (vertex " + std::to_string(v) + " meets " +
                  std::to_string(painted_degree[v]) + " painted edges)");
      break;
    }
  for (int e : g.twisted)
    if (!g.is_painted(e)) {
      report.fail("twisted must be a subset of painted");
      break;
    }

  // Parallel edges occur only for the theta graph (c = 1).
  std::set<std::pair<int, int>> pairs;
  bool parallel = false;
  for (const auto& [u, v] : g.edges) {
    auto key = std::minmax(u, v);
    if (!pairs.insert(key).second) parallel = true;
  }
  if (parallel && g.vertex_count != 2)
    report.fail("parallel edges only allowed for the theta graph (vertex_count 2)");

  // With >= 4 nerve vertices the nerve must be simple: no crushtacean edge
  // with the same face on both sides, and no two faces sharing two edges.
  if (report.ok && faces.size() >= 4) {
    std::vector<int> face_of(ds->dart_count, -1);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      for (int d : faces[f]) face_of[d] = f;
    std::set<std::pair<int, int>> nerve_pairs;
    for (int e = 0; e < ec; ++e) {
      int fa = face_of[2 * e], fb = face_of[2 * e + 1];
      if (fa == fb) {
        report.fail("nerve must be simple: edge " + std::to_string(e) + " borders one face twice");
        break;
      }
      if (!nerve_pairs.insert(std::minmax(fa, fb)).second) {
        report.fail("nerve must be simple: two faces share more than one edge");
        break;
      }
    }
  }
  return report;
}

inline void require_valid(const PaintedCrushtacean& g, const char* op) {
  auto report = validate(g);
  if (!report.ok) {
    std::string msg = std::string(op) + ": invalid crushtacean";
    for (const auto& v : report.violations) msg += "; " + v;
    throw DomainError(msg);
  }
}

// ---------------------------------------------------------------------------
// Nerve: the dual triangulation of the sphere.  Edge ids are shared with the
// crushtacean, so the dual_edge bijection is the identity; face i of the
// nerve is dual to crushtacean vertex i.

struct Nerve {
  int vertex_count = 0;                       // circles
  std::vector<std::pair<int, int>> edges;     // edge e dual to crushtacean edge e
  std::vector<bool> painted;                  // per edge
  std::vector<std::vector<int>> rotation;     // circle embedding, ccw edge order
  std::vector<std::array<int, 3>> faces;      // vertex triples
  std::vector<std::array<int, 3>> face_edges; // edge ids per face

  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  int dual_edge(int nerve_edge) const { return nerve_edge; }

  RotationMap skeleton() const { return RotationMap{vertex_count, edges, rotation}; }

  std::optional<int> edge_between(int u, int v) const {
    for (int e = 0; e < edge_count(); ++e) {
      auto [a, b] = edges[e];
      if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return std::nullopt;
  }

  bool adjacent_faces(int e, int& fa, int& fb) const {
    fa = fb = -1;
    for (int f = 0; f < face_count(); ++f)
      for (int k = 0; k < 3; ++k)
        if (face_edges[f][k] == e) {
          if (fa < 0) fa = f;
          else fb = f;
        }
    return fa >= 0 && fb >= 0;
  }
};

inline ValidationReport validate_nerve(const Nerve& n) {
  ValidationReport report;
  if (n.vertex_count < 3) report.fail("nerve must have at least 3 circles");
  if (static_cast<int>(n.painted.size()) != n.edge_count())
    report.fail("painted flags must cover every nerve edge");
  std::string why;
  auto ds = detail::build_darts(n.skeleton(), &why);
  if (!ds) {
    report.fail(why);
    return report;
  }
  auto faces = detail::trace_faces(*ds);
  const int euler = n.vertex_count - n.edge_count() + static_cast<int>(faces.size());
  if (euler != 2) report.fail("nerve rotation system must have genus 0");
  for (const auto& f : faces)
    if (f.size() != 3) {
      report.fail("every nerve face must be a triangle");
      return report;
    }
  if (static_cast<int>(faces.size()) != n.face_count())
    report.fail("stored face list disagrees with face tracing");
  // One painted edge per face.
  if (report.ok) {
    for (int f = 0; f < n.face_count(); ++f) {
      int painted_here = 0;
      for (int k = 0; k < 3; ++k)
        if (n.painted[n.face_edges[f][k]]) ++painted_here;
      if (painted_here != 1) {
        report.fail("every nerve face must contain exactly one painted edge");
        break;
      }
    }
  }
  return report;
}

// Dualizes an arbitrary rotation map: faces become vertices, edge ids are
// kept, and the dual rotation at a face is the face's traversal order.
inline RotationMap dual_map(const RotationMap& m, std::vector<int>* face_of_dart = nullptr) {
  auto ds = detail::build_darts(m);
  if (!ds) throw DomainError("dual_map: inconsistent rotation system");
  const auto faces = detail::trace_faces(*ds);
  std::vector<int> face_of(ds->dart_count, -1);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int d : faces[f]) face_of[d] = f;
  RotationMap dual;
  dual.vertex_count = static_cast<int>(faces.size());
  dual.edges.resize(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e)
    dual.edges[e] = {face_of[2 * e], face_of[2 * e + 1]};
  dual.rotation.resize(dual.vertex_count);
  for (int f = 0; f < dual.vertex_count; ++f) {
    dual.rotation[f].reserve(faces[f].size());
    for (int d : faces[f]) dual.rotation[f].push_back(d >> 1);
  }
  if (face_of_dart) *face_of_dart = std::move(face_of);
  return dual;
}

inline Nerve nerve_of(const PaintedCrushtacean& g) {
  require_valid(g, "nerve_of");
  std::vector<int> face_of;
  RotationMap dual = dual_map(g.skeleton(), &face_of);
  Nerve n;
  n.vertex_count = dual.vertex_count;
  n.edges = dual.edges;
  n.rotation = dual.rotation;
  n.painted.assign(n.edge_count(), false);
  for (int e : g.painted) n.painted[e] = true;
  // Face i of the nerve is the triple of circles around crushtacean vertex i.
  n.faces.resize(g.vertex_count);
  n.face_edges.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    for (int k = 0; k < 3; ++k) {
      const int e = g.rotation[v][k];
      const int d = (g.edges[e].first == v) ? 2 * e : 2 * e + 1;
      n.faces[v][k] = face_of[d];
      n.face_edges[v][k] = e;
    }
  }
  return n;
}

inline PaintedCrushtacean crushtacean_of(const Nerve& n) {
  auto report = validate_nerve(n);
  if (!report.ok) {
    std::string msg = "crushtacean_of: input is not a valid nerve";
    for (const auto& v : report.violations) msg += "; " + v;
    throw DomainError(msg);
  }
  RotationMap dual = dual_map(n.skeleton());
  PaintedCrushtacean g;
  g.vertex_count = dual.vertex_count;
  g.edges = dual.edges;
  g.rotation = dual.rotation;
  for (int e = 0; e < n.edge_count(); ++e)
    if (n.painted[e]) g.painted.insert(e);
  // Twist flags default to flat.
  require_valid(g, "crushtacean_of");
  return g;
}

// Mirror image: reverse every rotation.  The mirror of a valid crushtacean is
// valid and represents the reflected sphere embedding.
inline PaintedCrushtacean mirror(const PaintedCrushtacean& g) {
  PaintedCrushtacean m = g;
  for (auto& rot : m.rotation) std::reverse(rot.begin(), rot.end());
  return m;
}

// ---------------------------------------------------------------------------
// Canonical codes.  A rooted, oriented map has a canonical dart relabeling by
// breadth-first traversal over the generators (sigma, alpha); emitting the
// relabeled tables gives a complete isomorphism invariant.  Minimizing over
// all roots and, unless restricted, both orientations yields a code that is
// equal for two crushtaceans exactly when their painted (and optionally
// twisted) maps are isomorphic, allowing sphere reflection by default.

namespace detail {

inline std::vector<int> rooted_code(const DartStructure& ds, int root, bool reversed,
                                    const std::vector<int>& edge_flags) {
  const auto& step = reversed ? ds.sigma_inv : ds.sigma;
  std::vector<int> new_id(ds.dart_count, -1);
  std::vector<int> order;
  order.reserve(ds.dart_count);
  new_id[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int d = order[head];
    for (int next : {step[d], DartStructure::alpha(d)}) {
      if (new_id[next] < 0) {
        new_id[next] = static_cast<int>(order.size());
        order.push_back(next);
      }
    }
  }
  std::vector<int> code;
  code.reserve(order.size() * 3);
  for (int d : order) {
    code.push_back(new_id[step[d]]);
    code.push_back(new_id[DartStructure::alpha(d)]);
    code.push_back(edge_flags.empty() ? 0 : edge_flags[ds.edge_of(d)]);
  }
  return code;
}

inline std::string minimize_code(const DartStructure& ds, const std::vector<int>& edge_flags,
                                 bool orientation_preserving_only) {
  std::vector<int> best;
  for (int root = 0; root < ds.dart_count; ++root) {
    for (int rev = 0; rev < (orientation_preserving_only ? 1 : 2); ++rev) {
      auto code = rooted_code(ds, root, rev != 0, edge_flags);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out << ',';
    out << best[i];
  }
  return out.str();
}

}  // namespace detail

inline std::string canonical_code(const PaintedCrushtacean& g, bool include_twists = false,
                                  bool orientation_preserving_only = false) {
  require_valid(g, "canonical_code");
  auto ds = detail::build_darts(g.skeleton());
  std::vector<int> flags(g.edge_count(), 0);
  for (int e : g.painted) flags[e] = 1;
  if (include_twists)
    for (int e : g.twisted) flags[e] = 3;
  return detail::minimize_code(*ds, flags, orientation_preserving_only);
}

inline std::string canonical_map_code(const RotationMap& m, bool orientation_preserving_only = false) {
  auto ds = detail::build_darts(m);
  if (!ds) throw DomainError("canonical_map_code: inconsistent rotation system");
  return detail::minimize_code(*ds, {}, orientation_preserving_only);
}

inline bool isomorphic(const PaintedCrushtacean& a, const PaintedCrushtacean& b,
                       bool include_twists = false) {
  return canonical_code(a, include_twists) == canonical_code(b, include_twists);
}

}  // namespace falbelt
