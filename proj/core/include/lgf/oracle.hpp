#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgf/exact.hpp"
#include "lgf/lattice.hpp"
#include "lgf/trunk.hpp"

namespace lgf {

enum class Lattice { square, triangular };
// dirichlet_box: the outer frame is held at 0.  free_box: no outer frame, true
// degrees.  wired_strip: x in [-R, R], |y| <= R/2, columns x = -R and x = R
// each wired to its own root, top and bottom free.
enum class Boundary { dirichlet_box, wired_strip, free_box };

struct FiniteProblem {
  Lattice lattice = Lattice::square;
  int radius = 1;
  Boundary boundary = Boundary::dirichlet_box;
  std::vector<Pt> slit;     // held at 0
  std::vector<Edge> zipper; // conductance -1
  std::vector<Pt> removed;  // deleted from the graph
  // overrides the box [-R, R]^2 (frame included): {x0, x1, y0, y1}
  std::optional<std::array<int, 4>> box;

  std::array<int, 4> bounds() const;
  bool in_graph(Pt p) const;
  bool is_unknown(Pt p) const;
  std::vector<Pt> neighbours(Pt p) const;  // graph neighbours, removed ones skipped
  int conductance(Pt a, Pt b) const;       // +1 or -1 across the zipper
};

// slit {(k,k): k <= -1}
FiniteProblem slit_square_problem(int radius);
// zipper edges {(k,k),(k+1,k)} and {(k,k),(k,k-1)}, k <= -1
FiniteProblem zipper_square_problem(int radius);
// slit {(x,0): x <= -1}
FiniteProblem slit_triangular_problem(int radius);
// triangular edges crossing the 210 degree ray carry conductance -1
FiniteProblem zipper_triangular_problem(int radius);

// Entries G(u, v) of the inverse operator.  Small systems go through dense
// fraction-free elimination, larger ones through p-adic lifting; both exact.
std::vector<Rational> exact_green_column(const FiniteProblem& p, Pt u, const std::vector<Pt>& targets);
Rational exact_green_solve(const FiniteProblem& p, Pt u, Pt v);
int unknown_count(const FiniteProblem& p);

// Bipartite region of the doubled lattice: the box minus removed sites.
struct DimerRegion {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  std::vector<Pt> removed;
  bool zipper = false;  // canonical zipper signs below the negative diagonal

  bool contains(Pt p) const;
  ComplexElem weight(Pt w, Pt b) const;  // K(w, b); 0 off the graph
  std::vector<Pt> whites() const;
  std::vector<Pt> blacks() const;

  // [-2R, 2R]^2 minus the black (0,0), zipper signs
  static DimerRegion monomer(int radius);
  // Temperleyan image of the tree grid [a0, a1] x [b0, b1] with the left and
  // right sides wired; the hole is the edge (-1,0)-(0,0)
  static DimerRegion trunk_strip(int a0, int a1, int b0, int b1);
  // superposition of the (2R+1)^2 grid centred at 0, corner vertex removed
  static DimerRegion temperleyan(int radius);
};

ComplexElem exact_kasteleyn_solve(const DimerRegion& r, Pt b, Pt w);
// K^-1(b, w) for all listed blacks
std::vector<ComplexElem> exact_kasteleyn_column(const DimerRegion& r, Pt w, const std::vector<Pt>& blacks);
ComplexElem kasteleyn_det(const DimerRegion& r);
// K(w,b) K^-1(b,w) for each tree edge, exact on the finite region
std::vector<RingElem> finite_trunk_probabilities(const DimerRegion& r, const std::vector<TreeEdge>& edges);
// perfect matchings by a row-profile transfer count (box width <= 20)
mpz_class count_matchings(const DimerRegion& r);

// Green-difference formula for K^-1 on a Temperleyan region, assembled from
// exact_green_solve on the primal (free, rooted) and dual (wired) graphs.
ComplexElem temperleyan_green_formula(const DimerRegion& r, Pt b, Pt w);

// Finite tripod check on the n x n grid: v1, v2, v3 at the SW, SE, NE
// corners, e1 and e2 leaving vt to the E and N.
struct TripodFiniteEntry {
  Pt b, w;
  ComplexElem direct;   // K_NE^-1(b, w) from the reduced matrix
  ComplexElem minors;   // 3x3 / 2x2 ratio of K^-1 entries
};
struct TripodFiniteReport {
  int n = 0;
  Pt vt;
  ComplexElem det_ratio;    // det K_NE / det K
  ComplexElem denominator;  // 2x2 minor of K^-1
  mpz_class trees;          // matchings of G+ minus f0, v1
  mpz_class trees_ne;       // matchings of H_NE
  std::vector<TripodFiniteEntry> entries;
};
TripodFiniteReport tripod_finite_check(int n, Pt vt, const std::vector<std::pair<Pt, Pt>>& pairs, bool count = true);
// number of spanning trees of the n x n grid with a tripod at vt whose legs to
// v1, v2, v3 include the E and N edges, and the total; brute force, n <= 4
std::pair<long, long> enumerate_tripod_trees(int n, Pt vt);

// Wilson's algorithm.  Queried edges are parent pointers (tail -> head).
struct WilsonConditioning {
  bool trunk = false;  // the L-R tree path uses the edge tail-head, either way round
  Pt tail, head;
};
// all listed edges present; undirected ignores the parent-pointer direction
struct WilsonEvent {
  std::vector<TreeEdge> edges;
  bool undirected = false;
};
struct WilsonResult {
  long accepted = 0;
  long attempts = 0;
  std::vector<long> counts;
  std::vector<double> frequency;
  std::vector<double> std_error;
};
WilsonResult wilson_sample(const FiniteProblem& g, const WilsonConditioning& cond, uint64_t seed, long samples,
                           const std::vector<WilsonEvent>& events, int streams = 4);
WilsonResult wilson_sample(const FiniteProblem& g, const WilsonConditioning& cond, uint64_t seed, long samples,
                           const std::vector<TreeEdge>& queries, int streams = 4);

// Green's function from the double integral, inner integral in closed form,
// outer adaptive Gauss-Kronrod.
double quadrature_green(Lattice lattice, Pt p, double tol = 1e-10);
// G((x,0)) - G((x+1,0)) on the triangular lattice from the single contour integral
double quadrature_tri_axis_difference(int x, double tol = 1e-12);

// Calibration: observed max error of finite solves against closed forms.
struct CalibrationPoint {
  std::string config;  // slit | zipper | monomer | tri-slit | tri-face
  int radius = 0;
  double max_error = 0;
  std::string worst;
};
CalibrationPoint calibrate_slit(int radius);
CalibrationPoint calibrate_zipper(int radius);
CalibrationPoint calibrate_monomer(int radius);
CalibrationPoint calibrate_tri_slit(int radius);
CalibrationPoint calibrate_tri_face(int radius);

}  // namespace lgf
