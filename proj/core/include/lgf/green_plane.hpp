#pragma once

#include <mutex>
#include <vector>

#include "lgf/exact.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

// Potential kernel A = -G on Z^2, A(0,0) = 0, A(1,0) = 1/4.
class PotentialTable {
 public:
  RingElem at(Pt p);

 private:
  void fill_through(int n);
  const RingElem& oct(int x, int y) const { return cols_[x][y]; }  // x >= y >= 0

  std::mutex mu_;
  std::vector<std::vector<RingElem>> cols_;  // cols_[x][y], 0 <= y <= x
};

PotentialTable& default_potential();

// exact values are filled out to |p|_inf <= kMaxExactPotential
constexpr int kMaxExactPotential = 400;
RingElem potential(Pt p);
// exact value inside the fill range, asymptotic expansion beyond it
double potential_numeric(Pt p);
RingElem diagonal_potential(int k);  // (1/pi) * sum_{j<=k} 1/(2j-1)

RingElem transfer_impedance(const Edge& e1, const Edge& e2);
double transfer_impedance_numeric(const Edge& e1, const Edge& e2);
// Exact when the determinant stays within pi-degree 1; otherwise PiOverflow.
RingElem ust_cylinder_probability(const std::vector<Edge>& edges);
// Same determinant in long double, for edge sets whose exact value needs 1/pi^2.
double ust_cylinder_probability_numeric(const std::vector<Edge>& edges);

// exact determinant over any field-like element type with division
template <class T>
T det_exact(std::vector<std::vector<T>> m);

}  // namespace lgf

#include "lgf/detail/det.hpp"
