#pragma once

// Census of painted crushtaceans by crossing-circle count.
//
// Simple sphere triangulations are generated by closing the tetrahedron
// under vertex splitting (the inverse of edge contraction) with canonical-code
// deduplication; an exhaustive rotation-system oracle certifies the counts
// for up to 6 vertices.  Painted crushtaceans on c circles come from the
// perfect matchings of the duals of the triangulations on c+2 vertices,
// identified up to isomorphism with reflections and twist flags ignored.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "falbelt/beltsum.hpp"
#include "falbelt/core.hpp"
#include "falbelt/cuts.hpp"
#include "falbelt/volume.hpp"

namespace falbelt {

namespace detail {

inline bool is_simple_triangulation(const RotationMap& m) {
  if (m.vertex_count < 4) return false;
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : m.edges) {
    if (u == v) return false;
    if (!seen.insert(std::minmax(u, v)).second) return false;
  }
  auto ds = build_darts(m);
  if (!ds) return false;
  if (!connected(m)) return false;
  const auto faces = trace_faces(*ds);
  if (m.vertex_count - m.edge_count() + static_cast<int>(faces.size()) != 2) return false;
  for (const auto& f : faces)
    if (f.size() != 3) return false;
  return true;
}

// All vertex splits of a triangulation at vertex v with pivot positions
// i < j.  The local cyclic orders at the new vertex and both pivots are not
// derived; every combination is emitted and invalid ones are filtered by the
// triangulation check.
inline std::vector<RotationMap> vertex_splits(const RotationMap& m, int v, int i, int j) {
  const auto& rot = m.rotation[v];
  const int d = static_cast<int>(rot.size());
  auto far_end = [&](int e) {
    auto [a, b] = m.edges[e];
    return a == v ? b : a;
  };
  const int ei = rot[i], ej = rot[j];
  const int pivot_a = far_end(ei), pivot_b = far_end(ej);
  // Arc kept at v: positions i..j; arc moved to the new vertex: j..i.
  std::vector<int> arc_keep, arc_move;
  for (int k = i; k != j; k = (k + 1) % d) arc_keep.push_back(rot[k]);
  arc_keep.push_back(ej);
  for (int k = j; k != i; k = (k + 1) % d) arc_move.push_back(rot[k]);
  arc_move.push_back(ei);
  arc_move.erase(arc_move.begin());  // ej stays at v
  arc_move.pop_back();               // ei stays at v

  std::vector<RotationMap> out;
  const int w = m.vertex_count;
  RotationMap base;
  base.vertex_count = m.vertex_count + 1;
  base.edges = m.edges;
  for (int e : arc_move) {
    auto& ends = base.edges[e];
    (ends.first == v ? ends.first : ends.second) = w;
  }
  const int e_vw = base.edge_count();
  base.edges.emplace_back(v, w);
  const int e_wa = base.edge_count();
  base.edges.emplace_back(w, pivot_a);
  const int e_wb = base.edge_count();
  base.edges.emplace_back(w, pivot_b);

  std::vector<int> rot_v = arc_keep;
  rot_v.push_back(e_vw);
  std::vector<int> rot_w = {e_wb};
  for (int e : arc_move) rot_w.push_back(e);
  rot_w.push_back(e_wa);
  rot_w.push_back(e_vw);

  for (int flip_w = 0; flip_w < 2; ++flip_w)
    for (int pa = 0; pa < 2; ++pa)
      for (int pb = 0; pb < 2; ++pb) {
        RotationMap cand = base;
        cand.rotation.resize(cand.vertex_count);
        cand.rotation[v] = rot_v;
        cand.rotation[w] = rot_w;
        if (flip_w) std::reverse(cand.rotation[w].begin(), cand.rotation[w].end());
        auto insert_pair = [&](int pivot, int old_edge, int new_edge, bool order) {
          std::vector<int> r;
          for (int e : m.rotation[pivot]) {
            if (e == old_edge) {
              if (order) {
                r.push_back(old_edge);
                r.push_back(new_edge);
              } else {
                r.push_back(new_edge);
                r.push_back(old_edge);
              }
            } else {
              r.push_back(e);
            }
          }
          cand.rotation[pivot] = std::move(r);
        };
        insert_pair(pivot_a, ei, e_wa, pa != 0);
        insert_pair(pivot_b, ej, e_wb, pb != 0);
        for (int u = 0; u < m.vertex_count; ++u)
          if (u != v && u != pivot_a && u != pivot_b) cand.rotation[u] = m.rotation[u];
        if (is_simple_triangulation(cand)) out.push_back(std::move(cand));
      }
  return out;
}

inline RotationMap tetrahedron_map() {
  RotationMap m;
  m.vertex_count = 4;
  m.edges = {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  m.rotation = {{0, 3, 2}, {4, 5, 0}, {2, 1, 4}, {3, 5, 1}};
  return m;
}

}  // namespace detail

// All simple planar triangulations on nv vertices up to isomorphism
// (reflections identified).
inline std::vector<RotationMap> enumerate_triangulations(int nv) {
  if (nv < 4) throw DomainError("enumerate_triangulations: at least 4 vertices required");
  if (nv > 10) throw DomainError("enumerate_triangulations: cap is 10 vertices");
  std::vector<RotationMap> current{detail::tetrahedron_map()};
  for (int size = 4; size < nv; ++size) {
    std::map<std::string, RotationMap> next;
    for (const auto& tri : current) {
      for (int v = 0; v < tri.vertex_count; ++v) {
        const int d = static_cast<int>(tri.rotation[v].size());
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j)
            for (auto& cand : detail::vertex_splits(tri, v, i, j))
              next.emplace(canonical_map_code(cand), std::move(cand));
      }
    }
    current.clear();
    for (auto& [code, tri] : next) current.push_back(std::move(tri));
  }
  return current;
}

// Independent brute-force oracle: exhausts genus-0 rotation systems of
// maximal planar graphs on nv labeled vertices and reduces by isomorphism.
inline std::vector<RotationMap> rotation_oracle(int nv) {
  if (nv < 4) throw DomainError("rotation_oracle: at least 4 vertices required");
  if (nv > 6) throw DomainError("rotation_oracle: brute force capped at 6 vertices");
  const int want_edges = 3 * nv - 6;
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) all_pairs.emplace_back(u, v);
  const int np = static_cast<int>(all_pairs.size());

  std::map<std::string, RotationMap> found;
  auto try_graph = [&](const std::vector<int>& subset) {
    RotationMap m;
    m.vertex_count = nv;
    for (int idx : subset) m.edges.push_back(all_pairs[idx]);
    std::vector<std::vector<int>> incident(nv);
    for (int e = 0; e < m.edge_count(); ++e) {
      incident[m.edges[e].first].push_back(e);
      incident[m.edges[e].second].push_back(e);
    }
    for (int v = 0; v < nv; ++v)
      if (incident[v].size() < 3) return;
    if (!detail::connected(RotationMap{nv, m.edges, {}})) return;
    // Every edge of a triangulation lies in two triangles of the graph.
    std::vector<std::vector<char>> adj(nv, std::vector<char>(nv, 0));
    for (const auto& [u, v] : m.edges) adj[u][v] = adj[v][u] = 1;
    for (const auto& [u, v] : m.edges) {
      int triangles = 0;
      for (int w = 0; w < nv; ++w)
        if (adj[u][w] && adj[v][w]) ++triangles;
      if (triangles < 2) return;
    }
    // Odometer over rotation systems, first incident edge pinned per vertex.
    // With E = 3 nv - 6 fixed, the map is a sphere triangulation exactly when
    // every face orbit of sigma∘alpha has length 3, which needs no allocation.
    const int dart_count = 2 * m.edge_count();
    std::vector<int> sigma(dart_count);
    auto dart_at = [&](int e, int v) { return m.edges[e].first == v ? 2 * e : 2 * e + 1; };
    std::vector<std::vector<int>> perm(nv);
    for (int v = 0; v < nv; ++v) perm[v] = incident[v];
    auto advance = [&](int v) {
      return std::next_permutation(perm[v].begin() + 1, perm[v].end());
    };
    while (true) {
      for (int v = 0; v < nv; ++v) {
        const auto& rot = perm[v];
        const int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i)
          sigma[dart_at(rot[i], v)] = dart_at(rot[(i + 1) % deg], v);
      }
      bool triangulated = true;
      for (int d = 0; d < dart_count && triangulated; ++d) {
        const int d1 = sigma[d ^ 1];
        const int d2 = sigma[d1 ^ 1];
        triangulated = d1 != d && d2 != d && sigma[d2 ^ 1] == d;
      }
      if (triangulated) {
        m.rotation = perm;
        found.emplace(canonical_map_code(m), m);
      }
      int v = 0;
      while (v < nv && !advance(v)) {
        perm[v] = incident[v];
        ++v;
      }
      if (v == nv) break;
    }
  };
  std::vector<int> subset;
  auto rec = [&](auto&& self, int start, int need) -> void {
    if (need == 0) {
      try_graph(subset);
      return;
    }
    for (int idx = start; idx + need <= np; ++idx) {
      subset.push_back(idx);
      self(self, idx + 1, need - 1);
      subset.pop_back();
    }
  };
  rec(rec, 0, want_edges);

  std::vector<RotationMap> out;
  for (auto& [code, m] : found) out.push_back(std::move(m));
  return out;
}

namespace detail {

inline void matchings_rec(const RotationMap& m, std::vector<char>& used_vertex,
                          std::vector<int>& picked, std::vector<std::set<int>>& out) {
  int v = -1;
  for (int i = 0; i < m.vertex_count; ++i)
    if (!used_vertex[i]) {
      v = i;
      break;
    }
  if (v < 0) {
    out.emplace_back(picked.begin(), picked.end());
    return;
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [a, b] = m.edges[e];
    int w;
    if (a == v) w = b;
    else if (b == v) w = a;
    else continue;
    if (used_vertex[w]) continue;
    used_vertex[v] = used_vertex[w] = 1;
    picked.push_back(e);
    matchings_rec(m, used_vertex, picked, out);
    picked.pop_back();
    used_vertex[v] = used_vertex[w] = 0;
  }
}

}  // namespace detail

inline std::vector<std::set<int>> perfect_matchings(const RotationMap& m) {
  std::vector<char> used(m.vertex_count, 0);
  std::vector<int> picked;
  std::vector<std::set<int>> out;
  detail::matchings_rec(m, used, picked, out);
  return out;
}

// All painted crushtaceans with c crossing circles, all-flat twists, up to
// twist-agnostic isomorphism; sorted by canonical code.
inline std::vector<PaintedCrushtacean> enumerate_painted_crushtaceans(int c) {
  if (c < 2) throw DomainError("enumerate_painted_crushtaceans: c must be at least 2");
  std::map<std::string, PaintedCrushtacean> found;
  for (const auto& tri : enumerate_triangulations(c + 2)) {
    const RotationMap dual = dual_map(tri);
    for (const auto& matching : perfect_matchings(dual)) {
      PaintedCrushtacean g;
      g.vertex_count = dual.vertex_count;
      g.edges = dual.edges;
      g.rotation = dual.rotation;
      g.painted = matching;
      if (!validate(g).ok) throw DomainError("enumerate_painted_crushtaceans: bad dual (internal)");
      found.emplace(canonical_code(g), std::move(g));
    }
  }
  std::vector<PaintedCrushtacean> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

struct CensusRow {
  int c = 0;
  int n_triangulations = 0;
  int n_fals = 0;
  int n_bprime = 0;  // no once-painted non-trivial cut
  double vol_min = 0;
  double vol_max = 0;
  std::string annotation;
};

struct CensusOptions {
  bool twist_sensitive = false;  // count twist assignments up to isomorphism
};

inline int twist_assignment_count(const PaintedCrushtacean& g) {
  std::set<std::string> codes;
  std::vector<int> circles(g.painted.begin(), g.painted.end());
  const int c = static_cast<int>(circles.size());
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    PaintedCrushtacean t = g;
    t.twisted.clear();
    for (int k = 0; k < c; ++k)
      if (mask & (1u << k)) t.twisted.insert(circles[k]);
    codes.insert(canonical_code(t, /*include_twists=*/true));
  }
  return static_cast<int>(codes.size());
}

inline std::vector<CensusRow> tabulate_census(int c_max, const CensusOptions& options = {}) {
  if (c_max < 2) throw DomainError("tabulate_census: c_max must be at least 2");
  if (c_max > 8) throw DomainError("tabulate_census: cap is c_max = 8");
  std::vector<CensusRow> rows;
  for (int c = 2; c <= c_max; ++c) {
    CensusRow row;
    row.c = c;
    row.n_triangulations = static_cast<int>(enumerate_triangulations(c + 2).size());
    const auto instances = enumerate_painted_crushtaceans(c);
    row.n_fals = 0;
    for (const auto& g : instances)
      row.n_fals += options.twist_sensitive ? twist_assignment_count(g) : 1;
    row.n_bprime = 0;
    bool first = true;
    for (const auto& g : instances) {
      if (!b_composite_witness(g)) ++row.n_bprime;
      const double vol = fal_volume(g);
      row.vol_min = first ? vol : std::min(row.vol_min, vol);
      row.vol_max = first ? vol : std::max(row.vol_max, vol);
      first = false;
    }
    if (c == 2) row.annotation = "b-prime iff fully twisted";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "c,n_triangulations,n_fals,n_bprime,vol_min,vol_max\n";
  char line[160];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%.9f,%.9f\n", row.c, row.n_triangulations,
                  row.n_fals, row.n_bprime, row.vol_min, row.vol_max);
    out += line;
  }
  return out;
}

}  // namespace falbelt
