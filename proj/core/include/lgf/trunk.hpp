#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgf/kasteleyn.hpp"

namespace lgf {

enum class Dir { E, N, W, S };

Pt dir_step(Dir d);
std::string dir_name(Dir d);
Dir parse_dir(const std::string& s);

// Directed edge of the tree, tree coordinates; the conditioned trunk edge runs
// from (-1,0) to (0,0).
struct TreeEdge {
  Pt tail;
  Dir dir;
  // tree vertex (a,b) is white (2a+1, 2b); the edge is the adjacent black
  Dimer dimer() const;
};

RingElem trunk_directed_edge_probability(const TreeEdge& e);
RingElem trunk_cylinder_probability(const std::vector<TreeEdge>& edges);
RingElem trunk_cylinder_probability(const EventSpec& ev);

// degree of the trunk vertex (0,0) -> probability, for degrees 2, 3, 4
std::map<int, RingElem> trunk_degree_distribution();

constexpr int kMaxStraightRun = 12;
// (sqrt2 - 1)^k, checked against the k x k kernel determinant
RingElem straight_run_probability(int k, int max_k = kMaxStraightRun);
RingElem straight_run_determinant(int k);

// K(w,b) K^-1(b,w) for the plane with a monomer at the origin
RingElem monomer_dimer_probability(Pt a, Pt b);

struct Window {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

std::vector<std::pair<TreeEdge, RingElem>> trunk_table(const Window& w);

}  // namespace lgf
