#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "lgf/exact.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

// (x, y) sits at x + y e^{2 pi i / 3}; neighbours +-(1,0), +-(0,1), +-(1,1).
using TriPoint = Pt;

// G(0) - G((x,0)) differences along the axis: coefficient of u^{2x+1}... as a
// series in u, known through u^N
Series tri_delta_plus(int N);
// alpha / sqrt((1-u^2)(1-alpha^2 u^2)), alpha = 2 - sqrt3, through u^N
Series tri_slit_voltage(int N);

// Slit-plane Green's function G_D(0, v), Dirichlet on {(x,0): x < 0}.
RingElem tri_slit_green(TriPoint v);
// Green's function branched around the triangle below (-1,0)(0,0), zipper
// along the 210 degree ray.
RingElem tri_face_branched(TriPoint v);
// ray values G~(k,0)
RingElem tri_ray_value(int k);

bool tri_zipper_crossed(TriPoint a, TriPoint b);
// 6 G~(v) - sum of neighbours, with zipper-crossed edges counted with sign -1
RingElem tri_face_residual(TriPoint v);

constexpr int kMaxRunsK = 32;
RingElem tri_runs_constant(int k);

class TriTable {
 public:
  RingElem slit(TriPoint v);

 private:
  using Affine = std::map<int, RingElem>;  // key 0 is the constant term
  void build(int radius);
  bool eval(const Affine& a, RingElem& out) const;

  std::mutex mu_;
  int radius_ = -1;
  std::vector<std::map<int, Affine>> rows_;
  std::map<int, Affine> pivots_;
};

TriTable& default_tri();

}  // namespace lgf
