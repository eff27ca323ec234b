#pragma once

// b-primality, split/belted-sum surgery on crushtaceans, and the canonical
// decomposition.
//
// split(g, cut) slices along a once-painted non-trivial cut: each side keeps
// its vertices and gains a cap vertex carrying a flat painted edge to the
// local endpoint of the painted cut edge plus the two strand edges.  The cap
// rotation is fixed by the Euler check (the two candidate cyclic orders are
// mirror images; exactly one closes the sphere).
//
// belted_sum is the inverse surgery: delete one endpoint of a painted edge on
// each summand, join the painted halves into a new flat edge and reconnect
// the strand halves.  Exactly one of the two strand pairings is planar;
// `Reverse` mirrors the second summand first.
//
// canonical_decompose repeatedly splits along the lexicographically least
// once-painted non-trivial cut; the terminal multiset of summands is
// independent of the split order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "falbelt/core.hpp"
#include "falbelt/cuts.hpp"

namespace falbelt {

inline bool is_b_prime(const PaintedCrushtacean& g) {
  require_valid(g, "is_b_prime");
  const int c = g.crossing_circles();
  if (c == 1) return true;
  if (c == 2) return g.twisted.size() == 2;  // Borromean rings: both circles twisted
  for (const auto& cut : nontrivial_cuts(g))
    if (cut.painted_count == 1) return false;
  return true;
}

// First once-painted non-trivial cut in lexicographic order, when one exists.
inline std::optional<ThreeEdgeCut> b_composite_witness(const PaintedCrushtacean& g) {
  for (const auto& cut : nontrivial_cuts(g))
    if (cut.painted_count == 1) return cut;
  return std::nullopt;
}

struct SplitChild {
  PaintedCrushtacean graph;
  int cap_vertex = -1;
  int cap_painted_edge = -1;             // the new flat painted edge (T, cap)
  std::array<int, 2> cap_strand_edges{}; // halves of the two unpainted cut edges
  std::vector<int> vertex_to_parent;     // cap vertex -> -1
  std::vector<int> edge_to_parent;       // cap edges -> the parent cut edges they halve
};

struct SplitResult {
  SplitChild a, b;  // a holds side_a of the cut
  int painted_cut_edge = -1;
  std::array<int, 2> strand_cut_edges{};
};

namespace detail {

inline bool genus_zero(const RotationMap& m) {
  auto euler = euler_characteristic(m);
  return euler && *euler == 2 && connected(m);
}

inline SplitChild make_split_child(const PaintedCrushtacean& g, const std::vector<int>& side,
                                   int painted_edge, const std::array<int, 2>& strands) {
  SplitChild child;
  const int k = static_cast<int>(side.size());
  std::vector<int> new_vertex(g.vertex_count, -1);
  for (int i = 0; i < k; ++i) new_vertex[side[i]] = i;
  child.cap_vertex = k;
  child.vertex_to_parent = side;
  child.vertex_to_parent.push_back(-1);

  auto on_side = [&](int v) { return new_vertex[v] >= 0; };
  std::vector<int> new_edge(g.edge_count(), -1);
  PaintedCrushtacean& out = child.graph;
  out.vertex_count = k + 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (on_side(u) && on_side(v)) {
      new_edge[e] = out.edge_count();
      out.edges.emplace_back(new_vertex[u], new_vertex[v]);
      child.edge_to_parent.push_back(e);
    }
  }
  auto attach_of = [&](int e) {
    auto [u, v] = g.edges[e];
    return on_side(u) ? u : v;
  };
  const int t = attach_of(painted_edge);
  child.cap_painted_edge = out.edge_count();
  out.edges.emplace_back(new_vertex[t], child.cap_vertex);
  child.edge_to_parent.push_back(painted_edge);
  for (int s = 0; s < 2; ++s) {
    child.cap_strand_edges[s] = out.edge_count();
    out.edges.emplace_back(new_vertex[attach_of(strands[s])], child.cap_vertex);
    child.edge_to_parent.push_back(strands[s]);
  }

  // Side rotations keep their cyclic order with cut edges replaced in place.
  out.rotation.assign(out.vertex_count, {});
  for (int v : side) {
    std::vector<int> rot;
    for (int e : g.rotation[v]) {
      if (new_edge[e] >= 0) rot.push_back(new_edge[e]);
      else if (e == painted_edge) rot.push_back(child.cap_painted_edge);
      else if (e == strands[0]) rot.push_back(child.cap_strand_edges[0]);
      else if (e == strands[1]) rot.push_back(child.cap_strand_edges[1]);
      else throw DomainError("split: cut does not separate the chosen side");
    }
    out.rotation[new_vertex[v]] = std::move(rot);
  }
  for (int e : g.painted)
    if (new_edge[e] >= 0) out.painted.insert(new_edge[e]);
  out.painted.insert(child.cap_painted_edge);
  for (int e : g.twisted)
    if (new_edge[e] >= 0) out.twisted.insert(new_edge[e]);

  // Cap rotation: one of the two cyclic orders closes the sphere.
  out.rotation[child.cap_vertex] = {child.cap_painted_edge, child.cap_strand_edges[0],
                                    child.cap_strand_edges[1]};
  if (!genus_zero(out.skeleton())) {
    out.rotation[child.cap_vertex] = {child.cap_painted_edge, child.cap_strand_edges[1],
                                      child.cap_strand_edges[0]};
    if (!genus_zero(out.skeleton()))
      throw DomainError("split: no cap rotation closes the sphere (internal error)");
  }
  require_valid(out, "split child");
  return child;
}

}  // namespace detail

inline SplitResult split(const PaintedCrushtacean& g, const ThreeEdgeCut& cut) {
  require_valid(g, "split");
  if (cut.trivial) throw DomainError("split: cut must be non-trivial");
  if (cut.painted_count != 1) throw DomainError("split: cut must contain exactly one painted edge");
  SplitResult result;
  std::array<int, 2> strands{};
  int si = 0;
  for (int e : cut.edges) {
    if (g.is_painted(e)) result.painted_cut_edge = e;
    else strands[si++] = e;
  }
  if (result.painted_cut_edge < 0 || si != 2)
    throw DomainError("split: cut edges disagree with painted set");
  result.strand_cut_edges = strands;
  result.a = detail::make_split_child(g, cut.side_a, result.painted_cut_edge, strands);
  result.b = detail::make_split_child(g, cut.side_b, result.painted_cut_edge, strands);
  return result;
}

enum class SumOrientation { Preserve, Reverse };

struct SumResult {
  PaintedCrushtacean graph;
  int merged_edge = -1;                 // the new flat painted edge
  std::vector<int> vertex_from_first;   // deleted vertex -> -1
  std::vector<int> vertex_from_second;
  std::vector<int> edge_from_first;     // eps -> merged edge, strand halves -> junction edges
  std::vector<int> edge_from_second;
};

// eps_i must be painted.  keep_i selects the surviving endpoint of eps_i (by
// default the smaller id survives and the larger is deleted, which matches
// split caps since the cap vertex is always the last one).
inline SumResult belted_sum_with_maps(const PaintedCrushtacean& g1_in, int eps1,
                                      const PaintedCrushtacean& g2_in, int eps2,
                                      SumOrientation orient, int keep1 = -1, int keep2 = -1) {
  require_valid(g1_in, "belted_sum");
  require_valid(g2_in, "belted_sum");
  const PaintedCrushtacean& g1 = g1_in;
  const PaintedCrushtacean g2 = orient == SumOrientation::Reverse ? mirror(g2_in) : g2_in;
  auto check_eps = [](const PaintedCrushtacean& g, int eps, const char* which) {
    if (eps < 0 || eps >= g.edge_count() || !g.is_painted(eps))
      throw DomainError(std::string("belted_sum: ") + which + " must be a painted edge");
  };
  check_eps(g1, eps1, "eps1");
  check_eps(g2, eps2, "eps2");

  auto endpoints = [](const PaintedCrushtacean& g, int eps, int keep) {
    auto [u, v] = g.edges[eps];
    int kept = keep < 0 ? std::min(u, v) : keep;
    int dropped = kept == u ? v : u;
    if (kept != u && kept != v) throw DomainError("belted_sum: keep vertex not on the painted edge");
    return std::pair<int, int>(kept, dropped);
  };
  auto [t1, u1] = endpoints(g1, eps1, keep1);
  auto [t2, u2] = endpoints(g2, eps2, keep2);

  // Rotation at the deleted vertex, normalized to start with eps: the two
  // remaining entries are the strand halves in cyclic order.
  auto strand_halves = [](const PaintedCrushtacean& g, int u, int eps) {
    std::vector<int> rot = g.rotation[u];
    auto it = std::find(rot.begin(), rot.end(), eps);
    std::rotate(rot.begin(), it, rot.end());
    return std::array<int, 2>{rot[1], rot[2]};
  };
  const auto s1 = strand_halves(g1, u1, eps1);
  const auto s2 = strand_halves(g2, u2, eps2);
  auto far_end = [](const PaintedCrushtacean& g, int e, int u) {
    auto [a, b] = g.edges[e];
    return a == u ? b : a;
  };

  auto assemble = [&](bool crossed) {
    SumResult res;
    PaintedCrushtacean& out = res.graph;
    res.vertex_from_first.assign(g1.vertex_count, -1);
    res.vertex_from_second.assign(g2.vertex_count, -1);
    for (int v = 0; v < g1.vertex_count; ++v)
      if (v != u1) res.vertex_from_first[v] = out.vertex_count++;
    for (int v = 0; v < g2.vertex_count; ++v)
      if (v != u2) res.vertex_from_second[v] = out.vertex_count++;

    res.edge_from_first.assign(g1.edge_count(), -1);
    res.edge_from_second.assign(g2.edge_count(), -1);
    auto add_interior = [&](const PaintedCrushtacean& g, std::vector<int>& emap,
                            const std::vector<int>& vmap, int u) {
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == u || b == u) continue;
        emap[e] = out.edge_count();
        out.edges.emplace_back(vmap[a], vmap[b]);
      }
    };
    add_interior(g1, res.edge_from_first, res.vertex_from_first, u1);
    add_interior(g2, res.edge_from_second, res.vertex_from_second, u2);

    res.merged_edge = out.edge_count();
    out.edges.emplace_back(res.vertex_from_first[t1], res.vertex_from_second[t2]);
    res.edge_from_first[eps1] = res.merged_edge;
    res.edge_from_second[eps2] = res.merged_edge;
    // Strand pairing: s1[0] joins s2[1] and s1[1] joins s2[0] when crossed.
    const std::array<int, 2> mate = crossed ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
    for (int k = 0; k < 2; ++k) {
      const int e1 = s1[k], e2 = s2[mate[k]];
      const int junction = out.edge_count();
      out.edges.emplace_back(res.vertex_from_first[far_end(g1, e1, u1)],
                             res.vertex_from_second[far_end(g2, e2, u2)]);
      res.edge_from_first[e1] = junction;
      res.edge_from_second[e2] = junction;
    }

    out.rotation.assign(out.vertex_count, {});
    auto copy_rotations = [&](const PaintedCrushtacean& g, const std::vector<int>& emap,
                              const std::vector<int>& vmap, int u) {
      for (int v = 0; v < g.vertex_count; ++v) {
        if (v == u) continue;
        std::vector<int> rot;
        rot.reserve(3);
        for (int e : g.rotation[v]) rot.push_back(emap[e]);
        out.rotation[vmap[v]] = std::move(rot);
      }
    };
    copy_rotations(g1, res.edge_from_first, res.vertex_from_first, u1);
    copy_rotations(g2, res.edge_from_second, res.vertex_from_second, u2);

    for (int e : g1.painted)
      if (e != eps1) out.painted.insert(res.edge_from_first[e]);
    for (int e : g2.painted)
      if (e != eps2) out.painted.insert(res.edge_from_second[e]);
    out.painted.insert(res.merged_edge);  // flat: the merged circle's twist is discarded
    for (int e : g1.twisted)
      if (e != eps1) out.twisted.insert(res.edge_from_first[e]);
    for (int e : g2.twisted)
      if (e != eps2) out.twisted.insert(res.edge_from_second[e]);
    return res;
  };

  for (bool crossed : {true, false}) {
    SumResult res = assemble(crossed);
    if (detail::genus_zero(res.graph.skeleton()) && validate(res.graph).ok) return res;
  }
  throw DomainError("belted_sum: neither strand pairing closes the sphere (internal error)");
}

inline PaintedCrushtacean belted_sum(const PaintedCrushtacean& g1, int eps1,
                                     const PaintedCrushtacean& g2, int eps2,
                                     SumOrientation orient, int keep1 = -1, int keep2 = -1) {
  return belted_sum_with_maps(g1, eps1, g2, eps2, orient, keep1, keep2).graph;
}

// ---------------------------------------------------------------------------
// Canonical decomposition.

struct ProvenanceNode {
  bool leaf = true;
  int summand = -1;              // leaf: index into Decomposition::summands
  std::array<int, 3> cut_edges{};  // split: cut in this node's own labeling
  int child_a = -1, child_b = -1;  // split: node indices
  SplitChild side_a, side_b;       // split: exact children with maps
};

struct Decomposition {
  std::vector<PaintedCrushtacean> summands;  // depth-first order
  std::vector<ProvenanceNode> tree;          // node 0 is the root
  std::vector<std::pair<int, int>> new_circles;  // (summand index, cap edge id)
  int split_count = 0;
  bool whitehead_refined = false;

  std::vector<std::string> summand_codes(bool include_twists = false) const {
    std::vector<std::string> codes;
    codes.reserve(summands.size());
    for (const auto& s : summands) codes.push_back(canonical_code(s, include_twists));
    std::sort(codes.begin(), codes.end());
    return codes;
  }
};

using CutChooser = std::function<std::size_t(const std::vector<ThreeEdgeCut>&)>;

namespace detail {

inline int decompose_rec(const PaintedCrushtacean& g, const std::set<int>& cap_origin,
                         const CutChooser& choose, Decomposition& out) {
  std::vector<ThreeEdgeCut> candidates;
  for (const auto& cut : nontrivial_cuts(g))
    if (cut.painted_count == 1) candidates.push_back(cut);
  const int node_index = static_cast<int>(out.tree.size());
  out.tree.emplace_back();
  if (candidates.empty()) {
    const int idx = static_cast<int>(out.summands.size());
    out.summands.push_back(g);
    for (int e : cap_origin) out.new_circles.emplace_back(idx, e);
    out.tree[node_index].leaf = true;
    out.tree[node_index].summand = idx;
    return node_index;
  }
  const std::size_t pick = choose(candidates);
  const ThreeEdgeCut cut = candidates.at(pick);
  SplitResult sr = split(g, cut);
  ++out.split_count;
  auto child_caps = [&](const SplitChild& child) {
    std::set<int> caps;
    for (int ce = 0; ce < child.graph.edge_count(); ++ce) {
      const int pe = child.edge_to_parent[ce];
      if (ce == child.cap_painted_edge || (pe >= 0 && cap_origin.count(pe) &&
                                           ce != child.cap_strand_edges[0] &&
                                           ce != child.cap_strand_edges[1]))
        caps.insert(ce);
    }
    return caps;
  };
  const auto caps_a = child_caps(sr.a);
  const auto caps_b = child_caps(sr.b);
  out.tree[node_index].leaf = false;
  out.tree[node_index].cut_edges = cut.edges;
  out.tree[node_index].side_a = sr.a;
  out.tree[node_index].side_b = sr.b;
  const int ca = decompose_rec(sr.a.graph, caps_a, choose, out);
  const int cb = decompose_rec(sr.b.graph, caps_b, choose, out);
  out.tree[node_index].child_a = ca;
  out.tree[node_index].child_b = cb;
  return node_index;
}

}  // namespace detail

inline Decomposition decompose_with_chooser(const PaintedCrushtacean& g, const CutChooser& choose) {
  require_valid(g, "canonical_decompose");
  Decomposition out;
  detail::decompose_rec(g, {}, choose, out);
  return out;
}

inline Decomposition canonical_decompose(const PaintedCrushtacean& g) {
  return decompose_with_chooser(g, [](const std::vector<ThreeEdgeCut>&) { return std::size_t{0}; });
}

inline Decomposition decompose_randomized(const PaintedCrushtacean& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return decompose_with_chooser(g, [&rng](const std::vector<ThreeEdgeCut>& cuts) {
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    return pick(rng);
  });
}

// Lemma 5.1 refinement: a Borromean summand with at least one flat crossing
// circle is the belted sum of two Whitehead link complements.
inline bool is_borromean_with_flat(const PaintedCrushtacean& g) {
  return g.crossing_circles() == 2 && g.twisted.size() < 2;
}

inline PaintedCrushtacean whitehead_theta() {
  PaintedCrushtacean g;
  g.vertex_count = 2;
  g.edges = {{0, 1}, {0, 1}, {0, 1}};
  g.rotation = {{0, 1, 2}, {0, 2, 1}};
  g.painted = {0};
  return g;
}

inline Decomposition refine_to_whitehead(const Decomposition& d) {
  Decomposition out;
  out.tree = d.tree;
  out.split_count = d.split_count;
  out.whitehead_refined = true;
  std::vector<int> remap(d.summands.size(), -1);
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (is_borromean_with_flat(d.summands[i])) {
      out.summands.push_back(whitehead_theta());
      out.summands.push_back(whitehead_theta());
    } else {
      remap[i] = static_cast<int>(out.summands.size());
      out.summands.push_back(d.summands[i]);
    }
  }
  for (const auto& [idx, edge] : d.new_circles)
    if (remap[idx] >= 0) out.new_circles.emplace_back(remap[idx], edge);
  return out;
}

// Rebuilds the decomposed crushtacean by belted sums over the provenance
// tree; the result is isomorphic to the original with merged circles flat.
namespace detail {

struct Reassembled {
  PaintedCrushtacean graph;
  std::vector<int> edge_map;    // node-labeling edge -> current edge
  std::vector<int> vertex_map;  // node-labeling vertex -> current vertex
};

inline Reassembled reassemble_rec(const Decomposition& d, int node_index) {
  const ProvenanceNode& node = d.tree.at(node_index);
  if (node.leaf) {
    const PaintedCrushtacean& g = d.summands.at(node.summand);
    Reassembled r{g, {}, {}};
    r.edge_map.resize(g.edge_count());
    r.vertex_map.resize(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) r.edge_map[e] = e;
    for (int v = 0; v < g.vertex_count; ++v) r.vertex_map[v] = v;
    return r;
  }
  Reassembled ra = reassemble_rec(d, node.child_a);
  Reassembled rb = reassemble_rec(d, node.child_b);
  const int eps1 = ra.edge_map.at(node.side_a.cap_painted_edge);
  const int eps2 = rb.edge_map.at(node.side_b.cap_painted_edge);
  const int cap1 = ra.vertex_map.at(node.side_a.cap_vertex);
  const int cap2 = rb.vertex_map.at(node.side_b.cap_vertex);
  auto other_end = [](const PaintedCrushtacean& g, int e, int v) {
    auto [a, b] = g.edges[e];
    return a == v ? b : a;
  };
  SumResult sum = belted_sum_with_maps(ra.graph, eps1, rb.graph, eps2, SumOrientation::Preserve,
                                       other_end(ra.graph, eps1, cap1),
                                       other_end(rb.graph, eps2, cap2));
  // Parent-labeling maps: compose the split's child maps with the sum maps.
  Reassembled r;
  r.graph = std::move(sum.graph);
  const auto& pa = node.side_a;
  const auto& pb = node.side_b;
  int parent_edges = 0, parent_vertices = 0;
  for (int pe : pa.edge_to_parent) parent_edges = std::max(parent_edges, pe + 1);
  for (int pe : pb.edge_to_parent) parent_edges = std::max(parent_edges, pe + 1);
  for (int pv : pa.vertex_to_parent) parent_vertices = std::max(parent_vertices, pv + 1);
  for (int pv : pb.vertex_to_parent) parent_vertices = std::max(parent_vertices, pv + 1);
  r.edge_map.assign(parent_edges, -1);
  r.vertex_map.assign(parent_vertices, -1);
  auto fold = [&](const SplitChild& child, const Reassembled& rc, const std::vector<int>& sum_edge,
                  const std::vector<int>& sum_vertex) {
    for (int ce = 0; ce < child.graph.edge_count(); ++ce) {
      const int pe = child.edge_to_parent[ce];
      if (pe >= 0) r.edge_map[pe] = sum_edge.at(rc.edge_map[ce]);
    }
    for (int cv = 0; cv < child.graph.vertex_count; ++cv) {
      const int pv = child.vertex_to_parent[cv];
      if (pv >= 0) r.vertex_map[pv] = sum_vertex.at(rc.vertex_map[cv]);
    }
  };
  fold(pa, ra, sum.edge_from_first, sum.vertex_from_first);
  fold(pb, rb, sum.edge_from_second, sum.vertex_from_second);
  return r;
}

}  // namespace detail

inline PaintedCrushtacean reassemble(const Decomposition& d) {
  if (d.whitehead_refined)
    throw DomainError("reassemble: refined decompositions have no split provenance");
  if (d.tree.empty()) throw DomainError("reassemble: empty decomposition");
  return detail::reassemble_rec(d, 0).graph;
}

}  // namespace falbelt
