#include "lgf/branched_square.hpp"

#include <array>
#include <cstdlib>

#include "lgf/green_plane.hpp"
#include "lgf/slit_square.hpp"

namespace lgf {

HalfPt HalfPt::from_doubled(int x2, int y2) {
  if ((x2 & 1) == 0 || (y2 & 1) == 0)
    throw Error(ErrorKind::InvalidArgument, "half-integer point needs odd doubled coordinates");
  return {x2, y2};
}

HalfPt HalfPt::of(const Rational& x, const Rational& y) {
  Rational dx = x * 2, dy = y * 2;
  dx.canonicalize();
  dy.canonicalize();
  if (dx.get_den() != 1 || dy.get_den() != 1)
    throw Error(ErrorKind::InvalidArgument, "not a half-integer point");
  return from_doubled(static_cast<int>(dx.get_num().get_si()), static_cast<int>(dy.get_num().get_si()));
}

std::string HalfPt::str() const {
  auto h = [](int v) { return std::to_string(v) + "/2"; };
  return "(" + h(x2) + "," + h(y2) + ")";
}

bool in_canonical_zipper(Pt a, Pt b) {
  for (int o = 0; o < 2; ++o) {
    const int k = a.x;
    if (a.y == k && k <= -1 && (b == Pt{k + 1, k} || b == Pt{k, k - 1})) return true;
    std::swap(a, b);
  }
  return false;
}

namespace {

const RingElem& half() {
  static const RingElem h(Rational(1, 2));
  return h;
}

// quarter turn about the face centre (-1/2,-1/2)
Pt rot(Pt v, int n) {
  n = ((n % 4) + 4) % 4;
  for (int i = 0; i < n; ++i) v = {-1 - v.y, v.x};
  return v;
}

bool in_translated(Pt a, Pt b, Pt t) { return in_canonical_zipper(a - t, b - t); }

// Sign picked up walking a staircase from v out past every zipper edge in the
// way, alternating between the two given steps.
template <class Member>
int parity_walk(Pt v, const Member& member, Pt d0, Pt d1, int steps) {
  int cnt = 0;
  Pt cur = v;
  for (int i = 0; i < steps; ++i) {
    Pt nxt = cur + (i % 2 ? d1 : d0);
    if (member(cur, nxt)) ++cnt;
    cur = nxt;
  }
  return cnt % 2 ? -1 : 1;
}

RingElem gz_corner(Pt c, Pt w) {
  int n = 0;
  if (c == Pt{-1, 0}) n = 1;
  else if (c == Pt{-1, -1}) n = 2;
  else if (c == Pt{0, -1}) n = 3;
  if (n == 0) return gz_origin(w);
  // the rotated zipper differs from the canonical one by a gauge change
  auto member = [n](Pt a, Pt b) {
    return in_canonical_zipper(a, b) != in_canonical_zipper(rot(a, -n), rot(b, -n));
  };
  Pt tail{-1, -1};
  for (int i = 0; i < n; ++i) tail = {-tail.y, tail.x};
  Pt free{};
  for (Pt d : std::array<Pt, 4>{Pt{1, 1}, Pt{1, -1}, Pt{-1, 1}, Pt{-1, -1}})
    if (d != Pt{-1, -1} && d != tail) {
      free = d;
      break;
    }
  const int steps = 2 * (l1(w) + 6);
  const Pt d0{free.x, 0}, d1{0, free.y};
  const int eps = parity_walk(c, member, d0, d1, steps) * parity_walk(w, member, d0, d1, steps);
  RingElem g = gz_origin(rot(w, -n));
  return eps < 0 ? -g : g;
}

bool is_corner(Pt p) { return p == Pt{-1, 0} || p == Pt{-1, -1} || p == Pt{0, -1}; }

int env_budget() {
  static const int b = [] {
    const char* s = std::getenv("LATTICE_ZIPPER_MAX_RECURSION");
    return s ? std::atoi(s) : 0;
  }();
  return b;
}

}  // namespace

int zipper_budget(Pt u, Pt v) {
  if (env_budget() > 0) return env_budget();
  return 2 * (l1(u) + l1(v)) + 16;
}

RingElem gz_origin(Pt v) { return half() * gh({v.x + v.y, std::abs(v.y - v.x)}); }

RingElem ZipperTable::at(Pt u, Pt v) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  budget_ = zipper_budget(u, v);
  return get(u, v, 0);
}

RingElem ZipperTable::get(Pt u, Pt v, int depth) {
  if (u == Pt{}) return gz_origin(v);
  if (v == Pt{}) return gz_origin(u);
  if (is_corner(u)) return gz_corner(u, v);
  if (is_corner(v)) return gz_corner(v, u);
  // symmetric operator: key on the ordered pair, recurse on the nearer argument
  if (l1(v) < l1(u) || (l1(v) == l1(u) && v < u)) std::swap(u, v);
  auto it = memo_.find({u, v});
  if (it != memo_.end()) return it->second;
  if (depth > budget_)
    throw Error(ErrorKind::RecursionBudgetExceeded,
                "zipper recursion deeper than " + std::to_string(budget_) + " at " + u.str() + "," + v.str());
  RingElem r = move(u, v, depth);
  memo_.emplace(std::make_pair(u, v), r);
  return r;
}

// Move the zipper endpoint one face so that u lands closer to the origin; the
// extra zipper edge pq is a rank-2 perturbation.
RingElem ZipperTable::move(Pt u, Pt v, int depth) {
  const Pt tp = -u;
  Pt d;
  if (tp.x != 0 && std::abs(tp.x) >= std::abs(tp.y)) d = {tp.x > 0 ? 1 : -1, 0};
  else d = {0, tp.y > 0 ? 1 : -1};
  const Pt t = tp - d;
  Pt p, q;
  if (d.x == 1) p = t, q = {t.x, t.y - 1};
  else if (d.x == -1) p = {t.x - 1, t.y}, q = {t.x - 1, t.y - 1};
  else if (d.y == 1) p = t, q = {t.x - 1, t.y};
  else p = {t.x, t.y - 1}, q = {t.x - 1, t.y - 1};
  const long s = in_translated(p, q, t) ? -1 : 1;

  auto G = [&](Pt x, Pt y) { return get(x - t, y - t, depth + 1); };
  const Pt o{};
  const Pt w = v - u;
  const RingElem Guq = G(o, q), Gup = G(o, p), Gpq = G(p, q), Gqq = G(q, q), Gpp = G(p, p);
  const RingElem two_s(2 * s);
  const RingElem m11 = RingElem(1L) + two_s * Gpq, m12 = two_s * Gqq;
  const RingElem m21 = two_s * Gpp, m22 = m11;
  const RingElem r1 = -(two_s * Guq), r2 = -(two_s * Gup);
  const RingElem det = m11 * m22 - m12 * m21;
  const RingElem a = (r1 * m22 - m12 * r2) / det;
  const RingElem b = (m11 * r2 - m21 * r1) / det;
  RingElem h = G(o, w) + a * G(p, w) + b * G(q, w);

  // gauge between (Z_t with pq toggled) and Z_{t'}
  auto member = [&](Pt x, Pt y) {
    const bool pq = (x == p && y == q) || (x == q && y == p);
    return (in_translated(x, y, t) != pq) != in_translated(x, y, tp);
  };
  const int steps = 2 * (l1(w) + l1(t) + 6);
  const int eps = parity_walk(o, member, Pt{1, 0}, Pt{0, 1}, steps) *
                  parity_walk(w, member, Pt{1, 0}, Pt{0, 1}, steps);
  return eps < 0 ? -h : h;
}

ZipperTable& default_zipper() {
  static ZipperTable t;
  return t;
}

RingElem gz(Pt u, Pt v) { return default_zipper().at(u, v); }

RingElem g_sigma_a(Pt v, Pt w, Branch bv, Branch bw) {
  if (v == Pt{} || w == Pt{}) return RingElem();
  RingElem g = gz(v, w) - gz(v, {}) * gz({}, w) / gz({}, {});
  return bv == bw ? g : -g;
}

RingElem g_xi_a(HalfPt v, HalfPt w, Branch bv, Branch bw) {
  RingElem g = gz(v.lower(), w.lower());
  return bv == bw ? g : -g;
}

namespace {
bool on_d0(Pt p) { return p.x == p.y && p.x <= 0; }
}  // namespace

RingElem g_slit(Pt v, Pt w, bool strict) {
  if (on_d0(v) || on_d0(w)) {
    if (strict) throw Error(ErrorKind::OnSlit, (on_d0(v) ? v : w).str() + " lies on D0");
    return RingElem();
  }
  // the reflection of v in the preimage of D0 always lands on the other sheet
  const Pt vt{v.y, v.x};
  RingElem r = half() * (g_sigma_a(v, w) + g_sigma_a(vt, w));
  // G(v,w) - G(vt,w) on Z^2 = A(w - vt) - A(w - v)
  r += half() * (potential(w - vt) - potential(w - v));
  return r;
}

}  // namespace lgf
