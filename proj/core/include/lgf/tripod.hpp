#pragma once

#include <string>
#include <vector>

#include "lgf/kasteleyn.hpp"

namespace lgf {

// Tripod vertex at the doubled origin; w1..w4 = (1,0),(0,1),(-1,0),(0,-1) and
// b1..b4 = (2,0),(0,2),(-2,0),(0,-2).  For the tr graph w1..w4 and the origin
// are contracted to one white vertex w0.
enum class TripodVariant { NE, NW, SW, SE, tr };

Pt tripod_white(int i);  // i = 1..4
Pt tripod_black(int i);

// Full-plane kernel: weights -1, 1, -i, i to the E, W, N, S blacks.
ComplexElem k_plane_weight(Pt w, Pt b);
ComplexElem k_inverse_plane(Pt b, Pt w);

ComplexElem k_inverse_ne(Pt b, Pt w);
ComplexElem k_inverse_directional(TripodVariant v, Pt b, Pt w);

// White argument of the tr kernel: an ordinary white vertex or w0.
struct TripodWhite {
  bool is_w0 = false;
  Pt p{};
  static TripodWhite w0() { return {true, {}}; }
  static TripodWhite at(Pt q) { return {false, q}; }
  std::string str() const { return is_w0 ? "w0" : p.str(); }
};

ComplexElem k_tr_weight(TripodWhite w, Pt b);
ComplexElem k_inverse_tr(Pt b, TripodWhite w);
std::vector<Pt> tr_neighbors(TripodWhite w);

// sum_{b ~ w} K_tr(w,b) K_tr^-1(b,w')
ComplexElem tr_identity_entry(TripodWhite w, TripodWhite w2);

// K_tr(w,b) K_tr^-1(b,w) for a single edge
RingElem tripod_dimer_probability(TripodWhite w, Pt b);

struct TripodStats {
  RingElem edge_probability;
  RingElem degree3_probability;
  RingElem degree4_probability;
  RingElem expected_degree;
};

TripodStats tripod_statistics();

struct TripodEdge {
  Pt vertex;  // tree coordinates, tree vertex (a,b) is black (2a,2b)
  char dir;   // E N W S
  RingElem probability;
};

// directed edge probabilities of tree vertices (other than the tripod) in
// [x0,x1] x [y0,y1]
std::vector<TripodEdge> tripod_table(int x0, int x1, int y0, int y1);

}  // namespace lgf
