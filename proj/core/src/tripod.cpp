#include "lgf/tripod.hpp"

#include <array>

#include "lgf/green_plane.hpp"

namespace lgf {

namespace {

constexpr std::array<Pt, 4> kDirs{Pt{1, 0}, Pt{0, 1}, Pt{-1, 0}, Pt{0, -1}};

ComplexElem base_weight(Pt d) {
  if (d == Pt{1, 0}) return 1L;
  if (d == Pt{-1, 0}) return -1L;
  if (d == Pt{0, 1}) return ComplexElem::i();
  return -ComplexElem::i();
}

bool horizontal(Pt w) { return (w.x & 1) != 0; }  // white at (odd, even)

int white_index(Pt w) {
  for (int i = 1; i <= 4; ++i)
    if (w == kDirs[i - 1]) return i;
  return 0;
}

const RingElem& half() {
  static const RingElem h(Rational(1, 2));
  return h;
}

}  // namespace

Pt tripod_white(int i) { return kDirs.at(static_cast<size_t>(i - 1)); }
Pt tripod_black(int i) {
  Pt d = kDirs.at(static_cast<size_t>(i - 1));
  return {2 * d.x, 2 * d.y};
}

ComplexElem k_plane_weight(Pt w, Pt b) {
  if (!is_white(w) || !is_black(b) || l1(b - w) != 1)
    throw Error(ErrorKind::NotAnEdge, w.str() + "-" + b.str());
  return -base_weight(b - w);
}

ComplexElem k_inverse_plane(Pt b, Pt w) {
  if (!is_black(b) || !is_white(w)) throw Error(ErrorKind::InvalidArgument, "need black b and white w");
  ComplexElem tot;
  for (Pt d : kDirs) {
    const Pt bp = w + d;
    if (((bp.x ^ b.x) & 1) != 0) continue;
    const Pt diff = bp - b;
    tot += base_weight(d).conj() * ComplexElem(potential({diff.x / 2, diff.y / 2}));
  }
  return tot;
}

ComplexElem k_inverse_directional(TripodVariant v, Pt b, Pt w) {
  if (v == TripodVariant::tr) return k_inverse_tr(b, TripodWhite::at(w));
  const bool east = v == TripodVariant::NE || v == TripodVariant::SE;
  const bool north = v == TripodVariant::NE || v == TripodVariant::NW;
  const Pt wh = tripod_white(east ? 1 : 3), wv = tripod_white(north ? 2 : 4);
  if (w == wh || w == wv) throw Error(ErrorKind::RemovedVertex, w.str() + " is conditioned");
  return k_inverse_plane(b, w) - k_inverse_plane(b, horizontal(w) ? wh : wv);
}

ComplexElem k_inverse_ne(Pt b, Pt w) { return k_inverse_directional(TripodVariant::NE, b, w); }

std::vector<Pt> tr_neighbors(TripodWhite w) {
  if (w.is_w0)
    return {{2, 0}, {0, 2}, {-2, 0}, {0, -2}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  std::vector<Pt> out;
  for (Pt d : kDirs) out.push_back(w.p + d);
  return out;
}

ComplexElem k_tr_weight(TripodWhite w, Pt b) {
  if (!w.is_w0) {
    if (white_index(w.p)) throw Error(ErrorKind::RemovedVertex, w.p.str() + " is contracted into w0");
    return k_plane_weight(w.p, b);
  }
  // twelve edges: four stubs and two arcs to each diagonal black
  const ComplexElem i = ComplexElem::i();
  if (b == Pt{2, 0} || b == Pt{-2, 0}) return -1L;
  if (b == Pt{0, 2} || b == Pt{0, -2}) return 1L;
  if (b == Pt{1, 1} || b == Pt{-1, -1}) return -(ComplexElem(2L) * i);
  if (b == Pt{-1, 1} || b == Pt{1, -1}) return ComplexElem(2L) * i;
  throw Error(ErrorKind::NotAnEdge, "w0-" + b.str());
}

ComplexElem k_inverse_tr(Pt b, TripodWhite w) {
  if (!is_black(b)) throw Error(ErrorKind::InvalidArgument, "need black b");
  if (b == Pt{}) throw Error(ErrorKind::RemovedVertex, "origin is contracted into w0");
  if (w.is_w0) return half() * (k_inverse_plane(b, tripod_white(1)) - k_inverse_plane(b, tripod_white(3)));
  if (white_index(w.p)) throw Error(ErrorKind::RemovedVertex, w.p.str() + " is contracted into w0");
  const Pt a = tripod_white(horizontal(w.p) ? 1 : 2), c = tripod_white(horizontal(w.p) ? 3 : 4);
  return k_inverse_plane(b, w.p) - half() * (k_inverse_plane(b, a) + k_inverse_plane(b, c));
}

ComplexElem tr_identity_entry(TripodWhite w, TripodWhite w2) {
  ComplexElem s;
  for (Pt b : tr_neighbors(w)) s += k_tr_weight(w, b) * k_inverse_tr(b, w2);
  return s;
}

RingElem tripod_dimer_probability(TripodWhite w, Pt b) {
  ComplexElem p = k_tr_weight(w, b) * k_inverse_tr(b, w);
  if (!p.is_real()) throw Error(ErrorKind::NonRealProbability, p.str());
  return p.re();
}

TripodStats tripod_statistics() {
  TripodStats s;
  s.edge_probability = tripod_dimer_probability(TripodWhite::w0(), tripod_black(3));
  for (int i = 1; i <= 4; ++i)
    if (tripod_dimer_probability(TripodWhite::w0(), tripod_black(i)) != s.edge_probability)
      throw Error(ErrorKind::FillFailure, "tripod legs not symmetric");
  // three legs always; a fourth with the probability of any one stub, times 4
  s.degree4_probability = RingElem(4L) * s.edge_probability;
  s.degree3_probability = RingElem(1L) - s.degree4_probability;
  s.expected_degree = RingElem(3L) * s.degree3_probability + RingElem(4L) * s.degree4_probability;
  return s;
}

std::vector<TripodEdge> tripod_table(int x0, int x1, int y0, int y1) {
  static const char names[] = {'E', 'N', 'W', 'S'};
  std::vector<TripodEdge> out;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      if (x == 0 && y == 0) continue;
      const Pt b{2 * x, 2 * y};
      for (int k = 0; k < 4; ++k) {
        const Pt w = b + kDirs[k];
        const TripodWhite tw = white_index(w) ? TripodWhite::w0() : TripodWhite::at(w);
        out.push_back({{x, y}, names[k], tripod_dimer_probability(tw, b)});
      }
    }
  return out;
}

}  // namespace lgf
