#pragma once

#include <vector>

#include "lgf/exact.hpp"
#include "lgf/lattice.hpp"

namespace lgf {

// Doubled lattice: black iff x + y even.  Even-even blacks are vertices of Z^2,
// odd-odd blacks are faces, whites are edges.
using DoubledPoint = Pt;

inline bool is_black(Pt p) { return ((p.x + p.y) & 1) == 0; }
inline bool is_white(Pt p) { return !is_black(p); }

struct Dimer {
  Pt black;
  Pt white;
};

struct EventSpec {
  std::vector<Dimer> dimers;
};

// A weighted bipartite operator and (a right inverse of) it.
class Kernel {
 public:
  virtual ~Kernel() = default;
  virtual ComplexElem weight(Pt w, Pt b) const = 0;
  virtual ComplexElem inverse(Pt b, Pt w) const = 0;
  virtual bool removed(Pt p) const = 0;
};

// Plane with the black vertex (0,0) removed and a zipper below the negative
// diagonal: the trunk kernel, also the dimer model with a monomer at the origin.
class TrunkKernel : public Kernel {
 public:
  ComplexElem weight(Pt w, Pt b) const override;
  ComplexElem inverse(Pt b, Pt w) const override;
  bool removed(Pt p) const override { return p == Pt{}; }
};

const TrunkKernel& trunk_kernel();

ComplexElem k_weight(Pt w, Pt b);
ComplexElem k_inverse_trunk(Pt b, Pt w);

// det[K^-1(b_i, w_j)] * prod K(w_i, b_i); must come out real and in [0,1].
RingElem event_probability(const Kernel& k, const EventSpec& ev);

// sum_{b ~ w} K(w,b) K^-1(b,w'), skipping removed vertices
ComplexElem kernel_identity_entry(const Kernel& k, Pt w, Pt w2);

}  // namespace lgf
