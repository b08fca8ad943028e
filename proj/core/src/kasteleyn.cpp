#include "lgf/kasteleyn.hpp"

#include <array>
#include <set>

#include "lgf/branched_square.hpp"
#include "lgf/green_plane.hpp"

namespace lgf {

namespace {

constexpr std::array<Pt, 4> kDirs{Pt{1, 0}, Pt{-1, 0}, Pt{0, 1}, Pt{0, -1}};

ComplexElem base_weight(Pt d) {
  if (d == Pt{1, 0}) return 1L;
  if (d == Pt{-1, 0}) return -1L;
  if (d == Pt{0, 1}) return ComplexElem::i();
  return -ComplexElem::i();
}

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

ComplexElem k_weight(Pt w, Pt b) {
  if (!is_white(w) || !is_black(b) || l1(b - w) != 1)
    throw Error(ErrorKind::NotAnEdge, w.str() + "-" + b.str());
  ComplexElem k = base_weight(b - w);
  const int c = b.x;
  // edges crossing the zipper flip sign
  if (b.y == c && c <= -1 && (w == Pt{c + 1, c} || w == Pt{c, c - 1})) k = -k;
  return k;
}

ComplexElem k_inverse_trunk(Pt b, Pt w) {
  if (!is_black(b) || !is_white(w)) throw Error(ErrorKind::InvalidArgument, "need black b and white w");
  if (b == Pt{}) throw Error(ErrorKind::RemovedVertex, "black (0,0) is the hole");
  const bool even = (b.x & 1) == 0;
  ComplexElem tot;
  for (Pt d : kDirs) {
    const Pt bp = w + d;
    if (((bp.x ^ b.x) & 1) != 0 || bp == Pt{}) continue;
    RingElem g;
    if (even) g = g_sigma_a({bp.x / 2, bp.y / 2}, {b.x / 2, b.y / 2});
    else g = gz({floor_half(bp.x), floor_half(bp.y)}, {floor_half(b.x), floor_half(b.y)});
    tot += k_weight(w, bp).conj() * ComplexElem(g);
  }
  return tot;
}

ComplexElem TrunkKernel::weight(Pt w, Pt b) const { return k_weight(w, b); }
ComplexElem TrunkKernel::inverse(Pt b, Pt w) const { return k_inverse_trunk(b, w); }

const TrunkKernel& trunk_kernel() {
  static const TrunkKernel k;
  return k;
}

RingElem event_probability(const Kernel& k, const EventSpec& ev) {
  const size_t n = ev.dimers.size();
  std::set<Pt> seen;
  for (const auto& d : ev.dimers) {
    if (!is_black(d.black) || !is_white(d.white))
      throw Error(ErrorKind::InvalidArgument, "dimer colors " + d.black.str() + "," + d.white.str());
    if (l1(d.black - d.white) != 1) throw Error(ErrorKind::NotAnEdge, d.black.str() + "-" + d.white.str());
    if (k.removed(d.black) || k.removed(d.white))
      throw Error(ErrorKind::RemovedVertex, d.black.str() + "-" + d.white.str());
    if (!seen.insert(d.black).second || !seen.insert(d.white).second)
      throw Error(ErrorKind::InvalidArgument, "dimers share a vertex");
  }
  std::vector<std::vector<ComplexElem>> m(n, std::vector<ComplexElem>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = k.inverse(ev.dimers[i].black, ev.dimers[j].white);
  ComplexElem p = det_exact(std::move(m));
  for (const auto& d : ev.dimers) p *= k.weight(d.white, d.black);
  if (!p.is_real()) throw Error(ErrorKind::NonRealProbability, p.str());
  const double v = p.re().to_double();
  if (v < -1e-12 || v > 1 + 1e-12)
    throw Error(ErrorKind::NonRealProbability, "probability out of range: " + p.re().str());
  return p.re();
}

ComplexElem kernel_identity_entry(const Kernel& k, Pt w, Pt w2) {
  ComplexElem s;
  for (Pt d : kDirs) {
    const Pt b = w + d;
    if (k.removed(b)) continue;
    s += k.weight(w, b) * k.inverse(b, w2);
  }
  return s;
}

}  // namespace lgf
