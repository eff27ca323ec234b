#pragma once

// Hyperbolic volume of FAL complements from the circle packing.
//
// The top polyhedron is the ideal hull of the packing's tangency points; its
// shaded faces are the nerve-face triples and its unshaded faces are each
// circle's tangency points in circular order.  The volume is a signed sum of
// ideal tetrahedra coning every face from one fixed tangency point, and the
// FAL complement is two copies of that polyhedron.
//
// The Lobachevsky function is evaluated by an even-zeta power series after
// reduction to |theta| <= pi/2; tests validate it against adaptive quadrature
// of the defining integral to 1e-12.

#include <cmath>
#include <complex>
#include <vector>

#include <json.hpp>

#include "falbelt/beltsum.hpp"
#include "falbelt/core.hpp"
#include "falbelt/packing.hpp"

namespace falbelt {

namespace detail {

// zeta(s) by direct summation with an Euler-Maclaurin tail.
inline double zeta_even(int s) {
  constexpr int kCut = 1000;
  double sum = 0;
  for (int k = kCut - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const double K = kCut;
  double tail = std::pow(K, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(K, -static_cast<double>(s));
  tail += s * std::pow(K, -s - 1.0) / 12.0;
  tail -= s * (s + 1.0) * (s + 2.0) * std::pow(K, -s - 3.0) / 720.0;
  return sum + tail;
}

inline const std::vector<double>& zeta_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(64, 0.0);
    for (int m = 1; m < 64; ++m) t[m] = zeta_even(2 * m);
    return t;
  }();
  return table;
}

}  // namespace detail

// Lobachevsky function L(theta) = -Int_0^theta log|2 sin t| dt; odd and
// pi-periodic.
inline double lobachevsky(double theta) {
  if (!std::isfinite(theta)) throw DomainError("lobachevsky: non-finite argument");
  // Reduce to (-pi/2, pi/2] using the period and oddness.
  double t = std::fmod(theta, M_PI);
  if (t > M_PI / 2) t -= M_PI;
  if (t < -M_PI / 2) t += M_PI;
  if (t == 0.0) return 0.0;
  const double sign = t < 0 ? -1.0 : 1.0;
  const double x = std::fabs(t);
  // L(x) = x - x log(2x) + sum_m zeta(2m)/(m(2m+1)) x (x/pi)^(2m)
  double series = 0;
  const double q = (x / M_PI) * (x / M_PI);
  double power = q;
  const auto& zeta = detail::zeta_table();
  for (int m = 1; m < 64; ++m) {
    const double term = zeta[m] / (m * (2.0 * m + 1.0)) * power;
    series += term;
    if (term < 1e-18 * (1.0 + series)) break;
    power *= q;
  }
  return sign * (x - x * std::log(2.0 * x) + x * series);
}

inline double octahedron_volume() { return 8.0 * lobachevsky(M_PI / 4.0); }

// Ideal boundary point: a point of the plane or the point at infinity.
struct IdealPoint {
  bool infinite = false;
  std::complex<double> z{0.0, 0.0};

  static IdealPoint at(double x, double y) { return IdealPoint{false, {x, y}}; }
  static IdealPoint at(std::complex<double> z) { return IdealPoint{false, z}; }
  static IdealPoint infinity() { return IdealPoint{true, {}}; }
};

namespace detail {

inline bool same_point(const IdealPoint& a, const IdealPoint& b) {
  if (a.infinite || b.infinite) return a.infinite && b.infinite;
  return a.z == b.z;
}

// Cross-ratio ((z1-z3)(z2-z4)) / ((z1-z4)(z2-z3)) with the usual cancellation
// when one point is at infinity.
inline std::complex<double> cross_ratio(const IdealPoint& p1, const IdealPoint& p2,
                                        const IdealPoint& p3, const IdealPoint& p4) {
  const auto z1 = p1.z, z2 = p2.z, z3 = p3.z, z4 = p4.z;
  if (p1.infinite) return (z2 - z4) / (z2 - z3);
  if (p2.infinite) return (z1 - z3) / (z1 - z4);
  if (p3.infinite) return (z2 - z4) / (z1 - z4);
  if (p4.infinite) return (z1 - z3) / (z2 - z3);
  return ((z1 - z3) * (z2 - z4)) / ((z1 - z4) * (z2 - z3));
}

}  // namespace detail

// Signed volume of the ideal tetrahedron spanned by four distinct boundary
// points; zero exactly when they are concyclic or collinear, negated by odd
// permutations.
inline double ideal_tetra_volume(const IdealPoint& a, const IdealPoint& b, const IdealPoint& c,
                                 const IdealPoint& d) {
  const IdealPoint pts[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (detail::same_point(pts[i], pts[j]))
        throw DomainError("ideal_tetra_volume: coincident ideal points");
  const std::complex<double> w = detail::cross_ratio(a, b, c, d);
  if (w.imag() == 0.0) return 0.0;
  const std::complex<double> one{1.0, 0.0};
  const double alpha = std::arg(w);
  const double beta = std::arg(one - one / w);
  const double gamma = std::arg(one / (one - w));
  return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

namespace detail {

struct OrientedFace {
  std::vector<int> edge_cycle;  // nerve edge ids; vertices are tangency points
};

inline double polygon_signed_area(const std::vector<int>& cycle,
                                  const std::vector<PackPoint>& pts) {
  double area = 0;
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    const PackPoint& p = pts[cycle[i]];
    const PackPoint& q = pts[cycle[(i + 1) % k]];
    area += p.x * q.y - q.x * p.y;
  }
  return 0.5 * area;
}

}  // namespace detail

// Volume of the top polyhedron P+ of the packing.  A nerve on 3 circles
// (c = 1) has a flat tangency hull: the complement is the Whitehead link,
// whose single regular ideal octahedron is split in half by the reflection
// surface, so that case is returned in closed form.
inline double polyhedron_volume(const CirclePacking& p, int apex_edge = 0) {
  const Nerve& n = p.nerve;
  if (p.residual > 10.0 * p.tolerance)
    throw DomainError("polyhedron_volume: packing residual above tolerance");
  if (n.vertex_count == 3) return 4.0 * lobachevsky(M_PI / 4.0);
  if (apex_edge < 0 || apex_edge >= n.edge_count())
    throw DomainError("polyhedron_volume: apex edge out of range");

  std::vector<PackPoint> tangency(n.edge_count());
  for (int e = 0; e < n.edge_count(); ++e)
    tangency[e] = p.tangency_point(n.edges[e].first, n.edges[e].second);

  std::vector<detail::OrientedFace> faces;
  // Shaded faces: one triangle per nerve face.
  for (int f = 0; f < n.face_count(); ++f) {
    detail::OrientedFace face;
    face.edge_cycle = {n.face_edges[f][0], n.face_edges[f][1], n.face_edges[f][2]};
    const double area = detail::polygon_signed_area(face.edge_cycle, tangency);
    const bool want_ccw = f != p.outer_face;  // the outer region closes the hull from outside
    if ((area > 0) != want_ccw) std::reverse(face.edge_cycle.begin(), face.edge_cycle.end());
    faces.push_back(std::move(face));
  }
  // Unshaded faces: each circle's tangency points in circular order.
  for (int v = 0; v < n.vertex_count; ++v) {
    detail::OrientedFace face;
    face.edge_cycle = n.rotation[v];
    if (detail::polygon_signed_area(face.edge_cycle, tangency) < 0)
      std::reverse(face.edge_cycle.begin(), face.edge_cycle.end());
    faces.push_back(std::move(face));
  }

  const IdealPoint apex = IdealPoint::at(tangency[apex_edge].x, tangency[apex_edge].y);
  double total = 0;
  for (const auto& face : faces) {
    const auto& cyc = face.edge_cycle;
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
      if (cyc[0] == apex_edge || cyc[i] == apex_edge || cyc[i + 1] == apex_edge) continue;
      total += ideal_tetra_volume(apex, IdealPoint::at(tangency[cyc[0]].x, tangency[cyc[0]].y),
                                  IdealPoint::at(tangency[cyc[i]].x, tangency[cyc[i]].y),
                                  IdealPoint::at(tangency[cyc[i + 1]].x, tangency[cyc[i + 1]].y));
    }
  }
  return std::fabs(total);
}

// Volume of the FAL complement: two copies of P+, independent of twist flags.
inline double fal_volume(const PaintedCrushtacean& g, int outer_face = 0, double tol = 1e-12) {
  require_valid(g, "fal_volume");
  const Nerve n = nerve_of(g);
  const CirclePacking p = solve_packing(n, outer_face, tol);
  return 2.0 * polyhedron_volume(p);
}

struct VolumeReport {
  double volume = 0;
  int c = 0;
  double lower_bound = 0;  // 2 (c - 1) v8
  std::vector<double> summand_volumes;
  double additivity_defect = 0;
  double bound_slack = 0;
};

inline VolumeReport verify_decomposition_volume(const PaintedCrushtacean& g) {
  VolumeReport report;
  report.volume = fal_volume(g);
  report.c = g.crossing_circles();
  report.lower_bound = 2.0 * (report.c - 1) * octahedron_volume();
  const Decomposition d = canonical_decompose(g);
  double sum = 0;
  for (const auto& s : d.summands) {
    report.summand_volumes.push_back(fal_volume(s));
    sum += report.summand_volumes.back();
  }
  report.additivity_defect = std::fabs(report.volume - sum);
  report.bound_slack = report.volume - report.lower_bound;
  return report;
}

inline nlohmann::ordered_json volume_report_to_json(const VolumeReport& r) {
  nlohmann::ordered_json doc;
  doc["volume"] = r.volume;
  doc["c"] = r.c;
  doc["lower_bound"] = r.lower_bound;
  doc["summand_volumes"] = r.summand_volumes;
  doc["additivity_defect"] = r.additivity_defect;
  doc["bound_slack"] = r.bound_slack;
  return doc;
}

}  // namespace falbelt
