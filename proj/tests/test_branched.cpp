#include "doctest.h"
#include "lgf/branched_square.hpp"
#include "lgf/slit_square.hpp"

using namespace lgf;

namespace {

RingElem r2(Rational a, Rational b) { return RingElem::make(2, a, b); }
const Branch P = Branch::principal, O = Branch::other;

std::vector<Pt> window(int r) {
  std::vector<Pt> out;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y) out.push_back({x, y});
  return out;
}

std::vector<HalfPt> half_window(int r) {
  std::vector<HalfPt> out;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y) out.push_back(HalfPt::from_doubled(2 * x + 1, 2 * y + 1));
  return out;
}

}  // namespace

TEST_CASE("zipper Green's function") {
  CHECK(gz_origin({0, 0}) == RingElem(Rational(1, 2)));
  CHECK(gz_origin({-1, 0}) == r2(Rational(-1, 2), Rational(1, 2)));
  CHECK(gz_origin({-3, -3}).is_zero());
  CHECK(gz({0, 0}, {0, 0}) == RingElem(Rational(1, 2)));
  CHECK(gz({2, 1}, {-1, 3}) == gz({-1, 3}, {2, 1}));
  const RingElem x = gz({1, 0}, {1, 0});
  const RingElem c = gz({1, 0}, {0, 0});
  CHECK(x - c * c / gz({0, 0}, {0, 0}) == r2(-1, 1));
  CHECK(in_canonical_zipper({-1, -1}, {0, -1}));
  CHECK(!in_canonical_zipper({0, 0}, {1, 0}));
}

TEST_CASE("vertex-branched examples") {
  CHECK(g_sigma_a({1, 0}, {1, 0}) == r2(-1, 1));
  CHECK(g_sigma_a({1, 0}, {0, -1}) == r2(Rational(3, 2), -1));
  CHECK(g_sigma_a({1, 0}, {1, 0}, P, O) == r2(1, -1));
}

TEST_CASE("vertex-branched antisymmetry, symmetry and Dirichlet") {
  const auto pts = window(2);
  for (Pt v : pts)
    for (Pt w : pts) {
      const RingElem same = g_sigma_a(v, w, P, P);
      CHECK_MESSAGE(g_sigma_a(v, w, P, O) == -same, (v.str() + " " + w.str()));
      CHECK_MESSAGE(g_sigma_a(v, w, O, O) == same, (v.str() + " " + w.str()));
      CHECK_MESSAGE(g_sigma_a(w, v, P, P) == same, (v.str() + " " + w.str()));
    }
  for (Pt w : pts) CHECK(g_sigma_a({0, 0}, w).is_zero());
}

TEST_CASE("face-branched examples") {
  const HalfPt a = HalfPt::from_doubled(1, 1), b = HalfPt::from_doubled(1, -1), c = HalfPt::from_doubled(-1, -1);
  CHECK(g_xi_a(a, a) == RingElem(Rational(1, 2)));
  CHECK(g_xi_a(a, b) == r2(Rational(-1, 2), Rational(1, 2)));
  CHECK(g_xi_a(a, c, P, P) == -g_xi_a(a, c, P, O));
}

TEST_CASE("face-branched antisymmetry and symmetry") {
  const auto pts = half_window(2);
  for (HalfPt v : pts)
    for (HalfPt w : pts) {
      const RingElem same = g_xi_a(v, w, P, P);
      CHECK_MESSAGE(g_xi_a(v, w, P, O) == -same, (v.str() + " " + w.str()));
      CHECK_MESSAGE(g_xi_a(w, v, P, P) == same, (v.str() + " " + w.str()));
    }
}

TEST_CASE("diagonal slit") {
  CHECK(g_slit({1, 1}, {1, 1}) == RingElem(Rational(1, 2)));
  for (int k = -4; k <= 0; ++k) {
    CHECK(g_slit({2, 1}, {k, k}).is_zero());
    CHECK_THROWS_AS(g_slit({2, 1}, {k, k}, true), Error);
  }
  for (Pt v : window(3))
    for (Pt w : window(3)) {
      const RingElem g = g_slit(v, w);
      CHECK(sgn(g.sqipi()) == 0);
      CHECK(g == g_slit(w, v));
    }
  // shift of the slit Green's function onto the half-plane values
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      if (a == b && a <= 0) continue;
      CHECK(g_slit({1, 1}, {a + 1, b + 1}) == gh({a + b, b > a ? b - a : a - b}) * RingElem(Rational(1, 2)));
    }
}
