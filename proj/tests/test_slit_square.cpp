#include <cmath>

#include "doctest.h"
#include "lgf/slit_square.hpp"

using namespace lgf;

namespace {

RingElem r2(Rational a, Rational b) { return RingElem::make(2, a, b); }

// reflected across the real axis
RingElem G(int x, int y) { return gh({x, y < 0 ? -y : y}); }

bool dyadic(const Rational& q) {
  mpz_class d = q.get_den();
  return (d & (d - 1)) == 0;
}

}  // namespace

TEST_CASE("half-plane examples") {
  CHECK(gh({0, 0}) == RingElem(1L));
  CHECK(gh({1, 1}) == r2(2, -1));
  CHECK(gh({-1, 1}) == r2(-1, 1));
  CHECK(gh({3, 1}) == r2(-1, 1));
  CHECK(quadrant_gf_value({0, 0}) == RingElem(1L));
  CHECK(quadrant_gf_value({-2, 2}) == r2(-4, 3));
  CHECK(quadrant_gf_value({2, 2}) == gh({2, 2}));
  CHECK_THROWS_AS(gh({1, 0}), Error);
}

TEST_CASE("exit series") {
  Series c = c_series(5);
  CHECK(c.coeff(0) == RingElem(1L));
  CHECK(c.coeff(2) == RingElem(Rational(-1, 2)));
  CHECK(c.coeff(4) == RingElem(Rational(-1, 8)));
  CHECK(c.coeff(1).is_zero());
  CHECK(c.coeff(3).is_zero());
  // C(1) = 0: partial sums shrink toward zero
  double prev = 1;
  for (int n : {10, 40, 160}) {
    Series s = c_series(n);
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += s.coeff(k).q();
    const double v = std::abs(sum.get_d());
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 0.07);
  Series v = v_series(6);
  CHECK(v.coeff(4) == RingElem(Rational(3, 8)));
}

TEST_CASE("fill and generating functions agree on a 15x15 window") {
  int n = 0;
  for (int x = -7; x <= 7; ++x)
    for (int y = 0; y <= 14; ++y) {
      if ((x + y) % 2 != 0) continue;
      if (y == 0 && x < 0) continue;
      CHECK_MESSAGE(gh({x, y}) == quadrant_gf_value({x, y}), Pt{x, y}.str());
      ++n;
    }
  CHECK(n > 100);
}

TEST_CASE("half-plane harmonicity and boundary") {
  CHECK(RingElem(4L) * G(0, 0) - RingElem(2L) * G(1, 1) - RingElem(2L) * G(-1, 1) == RingElem(2L));
  for (int x = -12; x <= 12; ++x)
    for (int y = 0; y <= 12; ++y) {
      if ((x + y) % 2 != 0 || (y == 0 && x <= 0)) continue;
      RingElem res = RingElem(4L) * G(x, y) - G(x + 1, y + 1) - G(x - 1, y + 1) - G(x + 1, y - 1) - G(x - 1, y - 1);
      CHECK_MESSAGE(res.is_zero(), Pt{x, y}.str());
    }
  for (int x = -20; x <= -2; x += 2) CHECK(gh({x, 0}).is_zero());
}

TEST_CASE("self-duality and dyadic denominators") {
  for (int x = -7; x <= 7; ++x)
    for (int y = 1; y <= 10; ++y) {
      if ((x + y) % 2 == 0) continue;
      CHECK_MESSAGE(G(x, y - 1) - G(x - 1, y) == G(-x, y - 1) - G(-x - 1, y), Pt{x, y}.str());
    }
  for (int x = -10; x <= 10; ++x)
    for (int y = 0; y <= 10; ++y) {
      if ((x + y) % 2 != 0) continue;
      const RingElem v = G(x, y);
      CHECK(v.pi_free());
      CHECK_MESSAGE(dyadic(v.q()), Pt{x, y}.str());
      CHECK_MESSAGE(dyadic(v.sq()), Pt{x, y}.str());
    }
}
