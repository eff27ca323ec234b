#pragma once

// Classification of the non-reflection thrice-punctured spheres of an FAL
// complement, read off the crushtacean:
//
//   * crossing disks      one standard disk per crossing circle (the two
//                         endpoint vertex stars witness the same disk and are
//                         merged), plus one non-standard disk per once-painted
//                         non-trivial cut;
//   * longitudinal disks  one per fully painted non-trivial cut;
//   * singly-separated    one per painted nerve edge whose crossing circle is
//     (s-) disks          flat, whose two flanking triangles close into a K4
//                         pattern through a second painted nerve edge.
//
// Separating pairs are the pairs of crossing/s-disks sharing a longitudinal
// circle; longitudinal disks never participate.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "falbelt/core.hpp"
#include "falbelt/cuts.hpp"

namespace falbelt {

enum class DiskKind { StandardCrossing, NonStandardCrossing, Longitudinal, SinglySeparated };
enum class SlopeKind { MeridianKnot, MeridianCrossing, LongitudeCrossing };

inline const char* to_string(DiskKind k) {
  switch (k) {
    case DiskKind::StandardCrossing: return "standard-crossing";
    case DiskKind::NonStandardCrossing: return "non-standard-crossing";
    case DiskKind::Longitudinal: return "longitudinal";
    case DiskKind::SinglySeparated: return "singly-separated";
  }
  return "?";
}

inline const char* to_string(SlopeKind k) {
  switch (k) {
    case SlopeKind::MeridianKnot: return "meridian-knot";
    case SlopeKind::MeridianCrossing: return "meridian-crossing";
    case SlopeKind::LongitudeCrossing: return "longitude-crossing";
  }
  return "?";
}

struct PunctureSlope {
  SlopeKind kind = SlopeKind::MeridianKnot;
  int circle = -1;  // painted edge id; -1 tags a knot circle

  bool operator==(const PunctureSlope& o) const { return kind == o.kind && circle == o.circle; }
};

// Witness of an s-disk: the K4 subgraph of the nerve around a flat painted
// edge whose two flanking triangles share their third vertices' painted edge.
struct K4NervePattern {
  int meridian_nerve_edge = -1;    // painted nerve edge (C1,C2), flat circle
  int longitude_nerve_edge = -1;   // painted nerve edge (C3,C4)
  std::array<int, 2> flank{};      // C1, C2
  std::array<int, 2> apex{};       // C3, C4

  bool operator==(const K4NervePattern& o) const {
    return meridian_nerve_edge == o.meridian_nerve_edge &&
           longitude_nerve_edge == o.longitude_nerve_edge;
  }
};

struct Disk {
  DiskKind kind = DiskKind::StandardCrossing;
  int longitudinal_circle = -1;  // painted edge id carrying the longitude
  std::optional<ThreeEdgeCut> witness_cut;
  std::optional<K4NervePattern> witness_pattern;
  std::array<PunctureSlope, 3> punctures{};

  bool operator==(const Disk& o) const {
    if (kind != o.kind || longitudinal_circle != o.longitudinal_circle) return false;
    if (witness_cut.has_value() != o.witness_cut.has_value()) return false;
    if (witness_cut && !(witness_cut->edges == o.witness_cut->edges)) return false;
    if (witness_pattern.has_value() != o.witness_pattern.has_value()) return false;
    if (witness_pattern && !(*witness_pattern == *o.witness_pattern)) return false;
    return true;
  }
};

namespace detail {

inline ThreeEdgeCut vertex_star_cut(const PaintedCrushtacean& g, int v) {
  // For the theta graph the star is the full edge set either way.
  std::array<int, 3> triple{g.rotation[v][0], g.rotation[v][1], g.rotation[v][2]};
  std::sort(triple.begin(), triple.end());
  ThreeEdgeCut cut;
  cut.edges = triple;
  detail::split_components(g.skeleton(), triple, cut.side_a, cut.side_b);
  cut.trivial = true;
  cut.painted_count = 0;
  for (int e : triple)
    if (g.is_painted(e)) ++cut.painted_count;
  return cut;
}

}  // namespace detail

// One StandardCrossing disk per crossing circle (merged endpoint stars,
// witnessed at the smaller endpoint) plus one NonStandardCrossing disk per
// once-painted non-trivial cut through that circle.
inline std::map<int, std::vector<Disk>> crossing_disks(const PaintedCrushtacean& g) {
  require_valid(g, "crossing_disks");
  const auto nontrivial = nontrivial_cuts(g);
  std::map<int, std::vector<Disk>> out;
  for (int e : g.painted) {
    std::vector<Disk> disks;
    Disk standard;
    standard.kind = DiskKind::StandardCrossing;
    standard.longitudinal_circle = e;
    standard.witness_cut = detail::vertex_star_cut(g, std::min(g.edges[e].first, g.edges[e].second));
    standard.punctures = {PunctureSlope{SlopeKind::LongitudeCrossing, e},
                          PunctureSlope{SlopeKind::MeridianKnot, -1},
                          PunctureSlope{SlopeKind::MeridianKnot, -1}};
    disks.push_back(std::move(standard));
    for (const auto& cut : nontrivial) {
      // e is painted, so a once-painted cut containing e has e as its painted edge.
      if (cut.painted_count != 1 || !cut.contains_edge(e)) continue;
      Disk disk;
      disk.kind = DiskKind::NonStandardCrossing;
      disk.longitudinal_circle = e;
      disk.witness_cut = cut;
      disk.punctures = {PunctureSlope{SlopeKind::LongitudeCrossing, e},
                        PunctureSlope{SlopeKind::MeridianKnot, -1},
                        PunctureSlope{SlopeKind::MeridianKnot, -1}};
      disks.push_back(std::move(disk));
    }
    out.emplace(e, std::move(disks));
  }
  return out;
}

inline std::vector<Disk> longitudinal_disks(const PaintedCrushtacean& g) {
  require_valid(g, "longitudinal_disks");
  std::vector<Disk> out;
  for (const auto& cut : nontrivial_cuts(g)) {
    if (cut.painted_count != 3) continue;
    Disk disk;
    disk.kind = DiskKind::Longitudinal;
    disk.longitudinal_circle = cut.edges[0];
    disk.witness_cut = cut;
    disk.punctures = {PunctureSlope{SlopeKind::LongitudeCrossing, cut.edges[0]},
                      PunctureSlope{SlopeKind::LongitudeCrossing, cut.edges[1]},
                      PunctureSlope{SlopeKind::LongitudeCrossing, cut.edges[2]}};
    out.push_back(std::move(disk));
  }
  return out;
}

// Singly-separated disks.  The meridian circle must be flat; the two faces
// flanking its nerve edge (C1,C2) must be (C1,C2,C3) and (C1,C2,C4) with
// (C3,C4) a painted nerve edge, which carries the longitude.
inline std::vector<Disk> s_disks(const PaintedCrushtacean& g) {
  require_valid(g, "s_disks");
  const Nerve n = nerve_of(g);
  std::vector<Disk> out;
  for (int e = 0; e < n.edge_count(); ++e) {
    if (!n.painted[e]) continue;
    if (g.is_twisted(e)) continue;  // (a) the crossing circle must be flat
    int fa = -1, fb = -1;
    if (!n.adjacent_faces(e, fa, fb)) continue;
    auto [c1, c2] = n.edges[e];
    auto third = [&](int f) {
      for (int v : n.faces[f])
        if (v != c1 && v != c2) return v;
      return -1;
    };
    const int c3 = third(fa), c4 = third(fb);
    if (c3 < 0 || c4 < 0 || c3 == c4) continue;  // (b) two distinct apex circles
    auto opposite = n.edge_between(c3, c4);
    if (!opposite || !n.painted[*opposite]) continue;  // (c) apex edge painted
    Disk disk;
    disk.kind = DiskKind::SinglySeparated;
    disk.longitudinal_circle = *opposite;  // dual edge ids coincide
    K4NervePattern pattern;
    pattern.meridian_nerve_edge = e;
    pattern.longitude_nerve_edge = *opposite;
    pattern.flank = {c1, c2};
    pattern.apex = {std::min(c3, c4), std::max(c3, c4)};
    disk.witness_pattern = pattern;
    disk.punctures = {PunctureSlope{SlopeKind::LongitudeCrossing, *opposite},
                      PunctureSlope{SlopeKind::MeridianCrossing, e},
                      PunctureSlope{SlopeKind::MeridianCrossing, e}};
    out.push_back(std::move(disk));
  }
  return out;
}

struct DiskCensus {
  std::vector<Disk> disks;
  // The fully twisted Borromean rings fall outside the three-type census: they
  // carry one extra non-reflection sphere with a single area-2pi geodesic
  // disk, which never joins a separating pair.
  bool fully_twisted_borromean_exception = false;
  std::string annotation;
};

inline bool is_fully_twisted_borromean(const PaintedCrushtacean& g) {
  return g.crossing_circles() == 2 && g.twisted.size() == 2;
}

inline DiskCensus disk_census(const PaintedCrushtacean& g) {
  require_valid(g, "disk_census");
  DiskCensus census;
  for (auto& [circle, disks] : crossing_disks(g))
    for (auto& d : disks) census.disks.push_back(std::move(d));
  for (auto& d : longitudinal_disks(g)) census.disks.push_back(std::move(d));
  for (auto& d : s_disks(g)) census.disks.push_back(std::move(d));
  if (is_fully_twisted_borromean(g)) {
    census.fully_twisted_borromean_exception = true;
    census.annotation =
        "fully twisted Borromean rings: the three-type classification excludes this manifold; "
        "it carries one additional sphere that joins no separating pair";
  }
  return census;
}

// All unordered pairs of distinct crossing/s-disks sharing their longitudinal
// circle.  Longitudinal disks never appear.
inline std::vector<std::pair<Disk, Disk>> separating_pairs(const PaintedCrushtacean& g) {
  auto census = disk_census(g);
  std::vector<Disk> eligible;
  for (auto& d : census.disks)
    if (d.kind != DiskKind::Longitudinal) eligible.push_back(std::move(d));
  std::vector<std::pair<Disk, Disk>> pairs;
  for (std::size_t i = 0; i < eligible.size(); ++i)
    for (std::size_t j = i + 1; j < eligible.size(); ++j)
      if (eligible[i].longitudinal_circle == eligible[j].longitudinal_circle)
        pairs.emplace_back(eligible[i], eligible[j]);
  return pairs;
}

}  // namespace falbelt
