#pragma once

// 3-edge cuts of the crushtacean and separating triangles of the nerve.
//
// Enumeration is brute force over edge triples with a connectivity check;
// instances stay at desk scale (E <= ~30) so a cactus/minimum-cut method is
// deliberately deferred.  Cuts are reported in lexicographic order of their
// sorted edge ids so CLI output and tests are reproducible.

#include <algorithm>
#include <array>
#include <vector>

#include "falbelt/core.hpp"

namespace falbelt {

struct ThreeEdgeCut {
  std::array<int, 3> edges{};        // sorted ascending
  std::vector<int> side_a, side_b;   // sorted vertex ids; side_a holds vertex 0
  int painted_count = 0;
  bool trivial = false;              // one side is a single vertex

  bool contains_edge(int e) const {
    return edges[0] == e || edges[1] == e || edges[2] == e;
  }
  bool operator==(const ThreeEdgeCut& o) const { return edges == o.edges; }
};

namespace detail {

// Components of the graph with three edges removed; empty result means the
// triple does not disconnect into exactly two parts.
inline bool split_components(const RotationMap& m, const std::array<int, 3>& cut,
                             std::vector<int>& side_a, std::vector<int>& side_b) {
  std::vector<std::vector<int>> adj(m.vertex_count);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (e == cut[0] || e == cut[1] || e == cut[2]) continue;
    adj[m.edges[e].first].push_back(m.edges[e].second);
    adj[m.edges[e].second].push_back(m.edges[e].first);
  }
  std::vector<int> component(m.vertex_count, -1);
  int count = 0;
  for (int start = 0; start < m.vertex_count; ++start) {
    if (component[start] >= 0) continue;
    if (count == 2) return false;  // more than two components
    component[start] = count;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (component[w] < 0) {
          component[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  if (count != 2) return false;
  side_a.clear();
  side_b.clear();
  for (int v = 0; v < m.vertex_count; ++v)
    (component[v] == component[0] ? side_a : side_b).push_back(v);
  return true;
}

}  // namespace detail

inline std::vector<ThreeEdgeCut> all_three_edge_cuts(const PaintedCrushtacean& g) {
  require_valid(g, "all_three_edge_cuts");
  const RotationMap m = g.skeleton();
  const int ec = g.edge_count();
  std::vector<ThreeEdgeCut> cuts;
  for (int a = 0; a < ec; ++a)
    for (int b = a + 1; b < ec; ++b)
      for (int c = b + 1; c < ec; ++c) {
        std::array<int, 3> triple{a, b, c};
        ThreeEdgeCut cut;
        if (!detail::split_components(m, triple, cut.side_a, cut.side_b)) continue;
        // Every removed edge must actually cross the partition, otherwise the
        // triple contains a superfluous edge and is not a genuine 3-edge cut.
        std::vector<char> in_a(g.vertex_count, 0);
        for (int v : cut.side_a) in_a[v] = 1;
        bool all_cross = true;
        for (int e : triple)
          if (in_a[g.edges[e].first] == in_a[g.edges[e].second]) all_cross = false;
        if (!all_cross) continue;
        cut.edges = triple;
        cut.trivial = cut.side_a.size() == 1 || cut.side_b.size() == 1;
        cut.painted_count = 0;
        for (int e : triple)
          if (g.is_painted(e)) ++cut.painted_count;
        cuts.push_back(std::move(cut));
      }
  std::sort(cuts.begin(), cuts.end(),
            [](const ThreeEdgeCut& x, const ThreeEdgeCut& y) { return x.edges < y.edges; });
  return cuts;
}

inline std::vector<ThreeEdgeCut> nontrivial_cuts(const PaintedCrushtacean& g) {
  auto cuts = all_three_edge_cuts(g);
  std::vector<ThreeEdgeCut> out;
  for (auto& cut : cuts)
    if (!cut.trivial) out.push_back(std::move(cut));
  return out;
}

// All 3-cliques of the nerve that are not faces of the triangulation.  Their
// edge triples map through dual_edge onto exactly the non-trivial cuts of the
// dual crushtacean.
inline std::vector<std::array<int, 3>> separating_triangles(const Nerve& n) {
  auto report = validate_nerve(n);
  if (!report.ok) throw DomainError("separating_triangles: invalid nerve");
  std::vector<std::vector<char>> adj(n.vertex_count, std::vector<char>(n.vertex_count, 0));
  for (const auto& [u, v] : n.edges) adj[u][v] = adj[v][u] = 1;
  std::vector<std::array<int, 3>> face_sets;
  face_sets.reserve(n.face_count());
  for (const auto& f : n.faces) {
    std::array<int, 3> s = f;
    std::sort(s.begin(), s.end());
    face_sets.push_back(s);
  }
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n.vertex_count; ++a)
    for (int b = a + 1; b < n.vertex_count; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c < n.vertex_count; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        std::array<int, 3> clique{a, b, c};
        if (std::find(face_sets.begin(), face_sets.end(), clique) == face_sets.end())
          out.push_back(clique);
      }
    }
  return out;
}

}  // namespace falbelt
