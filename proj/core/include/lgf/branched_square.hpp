#pragma once

#include <mutex>
#include <unordered_map>

#include "lgf/exact.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

// Sheet of a double cover; principal has its cut just below the negative diagonal.
enum class Branch { principal, other };

// A point of (Z + 1/2)^2 stored doubled: (x2, y2) both odd.
struct HalfPt {
  int x2 = 1;
  int y2 = 1;
  static HalfPt from_doubled(int x2, int y2);
  static HalfPt of(const Rational& x, const Rational& y);
  Pt lower() const { return {(x2 - 1) / 2, (y2 - 1) / 2}; }  // shift by -(1/2,1/2)
  std::string str() const;
};

// Zipper Green's function G_Z for the canonical zipper (edges {(k,k),(k+1,k)}
// and {(k,k),(k,k-1)}, k <= -1, carry conductance -1).
class ZipperTable {
 public:
  RingElem at(Pt u, Pt v);

 private:
  RingElem get(Pt u, Pt v, int depth);
  RingElem move(Pt u, Pt v, int depth);

  std::recursive_mutex mu_;
  std::unordered_map<std::pair<Pt, Pt>, RingElem, PtPairHash> memo_;
  int budget_ = 0;
};

ZipperTable& default_zipper();

// Recursion budget per call; LATTICE_ZIPPER_MAX_RECURSION overrides the default
// of 2(|u|+|v|)+16.
int zipper_budget(Pt u, Pt v);

RingElem gz_origin(Pt v);
RingElem gz(Pt u, Pt v);
RingElem g_sigma_a(Pt v, Pt w, Branch bv = Branch::principal, Branch bw = Branch::principal);
RingElem g_xi_a(HalfPt v, HalfPt w, Branch bv = Branch::principal, Branch bw = Branch::principal);
// Dirichlet Green's function off D0 = {(k,k): k <= 0}.  Points on D0 give 0
// unless strict, in which case OnSlit is raised.
RingElem g_slit(Pt v, Pt w, bool strict = false);

bool in_canonical_zipper(Pt a, Pt b);

}  // namespace lgf
