#pragma once

#include <mutex>
#include <unordered_map>

#include "lgf/exact.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

// Half-plane coordinates: x + y even, y >= 0.  G_H is the slit-plane Green's
// function rotated so the slit is the negative x axis, G_H(0,0) = 1.
using HalfPlanePoint = Pt;

// C(z) = sqrt(1 - 1/z^2) as a power series in t = 1/z, known through t^N.
Series c_series(int N);
// V(z) = 1/sqrt(1 - z^2) through z^N.
Series v_series(int N);

class GHTable {
 public:
  RingElem at(HalfPlanePoint p);

 private:
  RingElem get(int x, int y);
  RingElem compute(int x, int y);

  std::recursive_mutex mu_;
  std::unordered_map<Pt, RingElem, PtHash> memo_;
};

GHTable& default_gh();
RingElem gh(HalfPlanePoint p);

// Coefficient of z^x w^y in G_N (x >= 0) or of t^-x w^y in G_W (x < 0),
// expanded in a box of side `order`; order 0 picks max(|x|, y) + 4.
RingElem quadrant_gf_value(HalfPlanePoint p, int order = 0);

}  // namespace lgf
