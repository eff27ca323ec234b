#pragma once

// Named reference instances, mirrored by the .crush files under fixtures/.
//
//   THETA   two vertices joined by three parallel edges, one painted; the
//           smallest legal crushtacean (c = 1, the Whitehead link).
//   BORR    K4 with an opposite pair of painted edges (c = 2, the Borromean
//           rings); twist variants BORR-tt / -tf / -ff.
//   PRISM3  triangular prism with the three verticals painted (c = 3).
//   PRISM1  triangular prism with one vertical and the two opposite triangle
//           edges painted (c = 3).

#include "falbelt/core.hpp"

namespace falbelt::fixtures {

inline PaintedCrushtacean theta() {
  PaintedCrushtacean g;
  g.vertex_count = 2;
  g.edges = {{0, 1}, {0, 1}, {0, 1}};
  g.rotation = {{0, 1, 2}, {0, 2, 1}};
  g.painted = {0};
  return g;
}

// K4 on vertices {0,1,2,3}: e0=(0,1), e1=(2,3) painted; e2=(0,2), e3=(0,3),
// e4=(1,2), e5=(1,3).  The rotations realize the sphere embedding with the
// four triangle faces 012, 031, 023, 123.
inline PaintedCrushtacean borromean(bool twist_e0 = false, bool twist_e1 = false) {
  PaintedCrushtacean g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  g.rotation = {{0, 3, 2}, {4, 5, 0}, {2, 1, 4}, {3, 5, 1}};
  g.painted = {0, 1};
  if (twist_e0) g.twisted.insert(0);
  if (twist_e1) g.twisted.insert(1);
  return g;
}

inline PaintedCrushtacean borromean_tt() { return borromean(true, true); }
inline PaintedCrushtacean borromean_tf() { return borromean(false, true); }
inline PaintedCrushtacean borromean_ff() { return borromean(false, false); }

// Triangular prism: top triangle 0,1,2 (edges e0=(0,1), e1=(1,2), e2=(2,0)),
// bottom triangle 3,4,5 (e3=(3,4), e4=(4,5), e5=(5,3)), verticals e6=(0,3),
// e7=(1,4), e8=(2,5).
inline PaintedCrushtacean prism(std::set<int> painted) {
  PaintedCrushtacean g;
  g.vertex_count = 6;
  g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  g.rotation = {{0, 6, 2}, {1, 7, 0}, {2, 8, 1}, {6, 3, 5}, {4, 3, 7}, {5, 4, 8}};
  g.painted = std::move(painted);
  return g;
}

inline PaintedCrushtacean prism3() { return prism({6, 7, 8}); }
inline PaintedCrushtacean prism1() { return prism({6, 1, 4}); }

}  // namespace falbelt::fixtures
