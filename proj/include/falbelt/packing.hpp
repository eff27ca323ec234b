#pragma once

// Euclidean circle packing of the nerve (Andreev realization, one Möbius
// representative).  Normalization: the chosen outer face becomes a mutually
// tangent unit triple and every other circle lands inside their interstice,
// so all circles stay bounded.
//
// Radii are solved by per-vertex relaxation in the uniform-neighbor style:
// each sweep replaces a circle's radius by the one that would make its angle
// sum exactly 2*pi if all petals were equal.  Layout then places circles
// breadth-first over faces with the orientation fixed by a counterclockwise
// outer face.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "falbelt/core.hpp"

namespace falbelt {

struct PackingError : DomainError {
  std::vector<double> defect_history;
  PackingError(const std::string& what, std::vector<double> history)
      : DomainError(what), defect_history(std::move(history)) {}
};

struct PackPoint {
  double x = 0, y = 0;
};

struct Circle {
  double x = 0, y = 0;
  double r = 0;
};

struct CirclePacking {
  Nerve nerve;
  int outer_face = 0;
  std::vector<Circle> circles;  // per nerve vertex
  double residual = 0;
  double tolerance = 0;

  PackPoint tangency_point(int i, int j) const {
    const Circle& a = circles[i];
    const Circle& b = circles[j];
    const double t = a.r / (a.r + b.r);
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  }
};

namespace detail {

inline double face_angle(double rv, double ru, double rw) {
  const double a = rv + ru, b = rv + rw, c = ru + rw;
  double arg = (a * a + b * b - c * c) / (2.0 * a * b);
  arg = std::max(-1.0, std::min(1.0, arg));
  return std::acos(arg);
}

inline double angle_sum(const Nerve& n, const std::vector<std::vector<int>>& faces_at,
                        const std::vector<double>& radii, int v) {
  double sum = 0;
  for (int f : faces_at[v]) {
    int u = -1, w = -1;
    for (int x : n.faces[f]) {
      if (x == v) continue;
      (u < 0 ? u : w) = x;
    }
    sum += face_angle(radii[v], radii[u], radii[w]);
  }
  return sum;
}

}  // namespace detail

// Boundary circles (the outer face triple) are pinned at radius 1; every
// interior angle sum converges to 2*pi within tol.
inline std::vector<double> solve_radii(const Nerve& n, int outer_face, double tol,
                                       long max_sweeps = 1000000) {
  auto report = validate_nerve(n);
  if (!report.ok) throw DomainError("solve_radii: invalid nerve");
  if (outer_face < 0 || outer_face >= n.face_count())
    throw DomainError("solve_radii: outer_face out of range");
  if (!(tol > 0)) throw DomainError("solve_radii: tolerance must be positive");

  std::vector<char> boundary(n.vertex_count, 0);
  for (int v : n.faces[outer_face]) boundary[v] = 1;
  std::vector<std::vector<int>> faces_at(n.vertex_count);
  for (int f = 0; f < n.face_count(); ++f)
    for (int v : n.faces[f]) faces_at[v].push_back(f);

  std::vector<double> radii(n.vertex_count, 0.2);
  for (int v = 0; v < n.vertex_count; ++v)
    if (boundary[v]) radii[v] = 1.0;

  std::vector<int> interior;
  for (int v = 0; v < n.vertex_count; ++v)
    if (!boundary[v]) interior.push_back(v);
  if (interior.empty()) return radii;

  std::vector<double> history;
  for (long sweep = 0; sweep < max_sweeps; ++sweep) {
    double defect = 0;
    for (int v : interior) {
      const double theta = detail::angle_sum(n, faces_at, radii, v);
      const int k = static_cast<int>(faces_at[v].size());
      const double beta = std::sin(theta / (2.0 * k));
      const double hat = radii[v] * beta / (1.0 - beta);
      const double delta = std::sin(M_PI / k);
      radii[v] = hat * (1.0 - delta) / delta;
      defect = std::max(defect, std::fabs(theta - 2.0 * M_PI));
    }
    if (history.size() >= 64) history.erase(history.begin());
    history.push_back(defect);
    if (defect < tol) {
      // One more pass of defects with the final radii.
      double final_defect = 0;
      for (int v : interior)
        final_defect =
            std::max(final_defect, std::fabs(detail::angle_sum(n, faces_at, radii, v) - 2.0 * M_PI));
      if (final_defect < tol) return radii;
    }
  }
  throw PackingError("solve_radii: no convergence within the sweep cap", history);
}

// Places the outer triple with the first two centers on the horizontal axis
// and the outer face counterclockwise; the remaining faces then carry the
// opposite planar orientation and fix every other center.
inline CirclePacking layout_packing(const Nerve& n, const std::vector<double>& radii,
                                    int outer_face, double tol = 1e-12) {
  if (static_cast<int>(radii.size()) != n.vertex_count)
    throw DomainError("layout_packing: one radius per nerve vertex required");
  CirclePacking p;
  p.nerve = n;
  p.outer_face = outer_face;
  p.tolerance = tol;
  p.circles.assign(n.vertex_count, Circle{});
  for (int v = 0; v < n.vertex_count; ++v) p.circles[v].r = radii[v];

  std::vector<char> placed(n.vertex_count, 0);
  const auto outer = n.faces[outer_face];
  const int v0 = outer[0], v1 = outer[1], v2 = outer[2];
  p.circles[v0].x = 0;
  p.circles[v0].y = 0;
  p.circles[v1].x = radii[v0] + radii[v1];
  p.circles[v1].y = 0;
  placed[v0] = placed[v1] = 1;

  auto place_third = [&](int u, int v, int w, double orient) {
    const Circle& cu = p.circles[u];
    const Circle& cv = p.circles[v];
    const double dx = cv.x - cu.x, dy = cv.y - cu.y;
    const double d = std::hypot(dx, dy);
    const double a = cu.r + p.circles[w].r;
    const double b = cv.r + p.circles[w].r;
    const double along = (a * a - b * b + d * d) / (2.0 * d);
    const double h2 = a * a - along * along;
    const double h = std::sqrt(std::max(0.0, h2));
    const double ex = dx / d, ey = dy / d;
    p.circles[w].x = cu.x + along * ex - orient * h * ey;
    p.circles[w].y = cu.y + along * ey + orient * h * ex;
    placed[w] = 1;
  };
  place_third(v0, v1, v2, +1.0);  // counterclockwise outer face

  bool progress = true;
  while (progress) {
    progress = false;
    for (int f = 0; f < n.face_count(); ++f) {
      if (f == outer_face) continue;
      const auto& tri = n.faces[f];
      int missing = -1, missing_pos = -1;
      int placed_count = 0;
      for (int k = 0; k < 3; ++k) {
        if (placed[tri[k]]) ++placed_count;
        else {
          missing = tri[k];
          missing_pos = k;
        }
      }
      if (placed_count != 2) continue;
      const int u = tri[(missing_pos + 1) % 3];
      const int v = tri[(missing_pos + 2) % 3];
      place_third(u, v, missing, -1.0);  // inner faces run clockwise in the plane
      progress = true;
    }
  }
  for (int v = 0; v < n.vertex_count; ++v)
    if (!placed[v]) throw DomainError("layout_packing: face propagation left a circle unplaced");

  // Residual over tangencies and non-adjacent overlaps.
  std::vector<std::vector<char>> adj(n.vertex_count, std::vector<char>(n.vertex_count, 0));
  for (const auto& [a, b] : n.edges) adj[a][b] = adj[b][a] = 1;
  double residual = 0;
  for (int i = 0; i < n.vertex_count; ++i)
    for (int j = i + 1; j < n.vertex_count; ++j) {
      const double d = std::hypot(p.circles[i].x - p.circles[j].x, p.circles[i].y - p.circles[j].y);
      const double s = p.circles[i].r + p.circles[j].r;
      if (adj[i][j]) residual = std::max(residual, std::fabs(d - s));
      else residual = std::max(residual, std::max(0.0, s - d));
    }
  p.residual = residual;
  if (residual > 10.0 * tol)
    throw PackingError("layout_packing: tangency residual above tolerance (bad radii or orientation)",
                       {residual});
  return p;
}

inline CirclePacking solve_packing(const Nerve& n, int outer_face = 0, double tol = 1e-12) {
  return layout_packing(n, solve_radii(n, outer_face, tol), outer_face, tol);
}

// Circle through the triple's three tangency points, compared for
// orthogonality against each member: |dist^2 - r*^2 - r_i^2| vanishes exactly
// when the circles cross at right angles.
inline double orthocircle_defect(const CirclePacking& p, const std::array<int, 3>& triple) {
  const auto [a, b, c] = triple;
  const PackPoint t1 = p.tangency_point(a, b);
  const PackPoint t2 = p.tangency_point(b, c);
  const PackPoint t3 = p.tangency_point(a, c);
  // Circumcenter from perpendicular bisectors.
  const double ax = t2.x - t1.x, ay = t2.y - t1.y;
  const double bx = t3.x - t1.x, by = t3.y - t1.y;
  const double det = 2.0 * (ax * by - ay * bx);
  const double scale = std::max({std::fabs(ax), std::fabs(ay), std::fabs(bx), std::fabs(by), 1e-300});
  if (std::fabs(det) < 1e-14 * scale * scale)
    throw DomainError("orthocircle_defect: tangency points are collinear");
  const double a2 = ax * ax + ay * ay;
  const double b2 = bx * bx + by * by;
  const double cx = t1.x + (by * a2 - ay * b2) / det;
  const double cy = t1.y + (ax * b2 - bx * a2) / det;
  const double r2 = (t1.x - cx) * (t1.x - cx) + (t1.y - cy) * (t1.y - cy);
  double defect = 0;
  for (int v : triple) {
    const Circle& ci = p.circles[v];
    const double d2 = (ci.x - cx) * (ci.x - cx) + (ci.y - cy) * (ci.y - cy);
    defect = std::max(defect, std::fabs(d2 - r2 - ci.r * ci.r));
  }
  return defect;
}

inline nlohmann::ordered_json packing_to_json(const CirclePacking& p) {
  nlohmann::ordered_json doc;
  doc["outer_face"] = p.outer_face;
  auto circles = nlohmann::ordered_json::array();
  for (int v = 0; v < p.nerve.vertex_count; ++v) {
    nlohmann::ordered_json c;
    c["v"] = v;
    c["x"] = p.circles[v].x;
    c["y"] = p.circles[v].y;
    c["r"] = p.circles[v].r;
    circles.push_back(std::move(c));
  }
  doc["circles"] = std::move(circles);
  doc["residual"] = p.residual;
  return doc;
}

}  // namespace falbelt
