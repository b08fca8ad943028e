#include <cmath>
#include <random>

#include "doctest.h"
#include "lgf/exact.hpp"

using namespace lgf;

namespace {

RingElem r2(Rational a, Rational b, Rational c = 0, Rational e = 0) { return RingElem::make(2, a, b, c, e); }

Rational small_q(std::mt19937& g) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 8);
  Rational q(num(g), den(g));
  q.canonicalize();
  return q;
}

RingElem random_elem(std::mt19937& g, bool with_pi) {
  auto q = [&] { return small_q(g); };
  return with_pi ? r2(q(), q(), q(), q()) : r2(q(), q());
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK(r2(-1, 1) * r2(1, 1) == RingElem(1L));
  CHECK(r2(Rational(3, 2), -1) + r2(-1, 1) == RingElem(Rational(1, 2)));
  CHECK_THROWS_AS(RingElem::inv_pi() * RingElem::inv_pi(), Error);
  try {
    (void)(RingElem::inv_pi() * RingElem::inv_pi());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PiOverflow);
  }
  CHECK(r2(1, 1).inverse() == r2(-1, 1));
  CHECK((RingElem::sqrt(3) * RingElem::sqrt(3)).is_rational());
}

TEST_CASE("decimal rendering") {
  CHECK(r2(-1, 1).to_decimal(6) == "0.414214");
  CHECK(r2(-1, 0, 4).to_decimal(6) == "0.273240");
  CHECK(RingElem().to_decimal(6) == "0.000000");
  CHECK(r2(-1, 1).compact() == "sqrt(2)-1");
}

TEST_CASE("parse and json round trip") {
  std::mt19937 g(11);
  for (int k = 0; k < 200; ++k) {
    RingElem x = random_elem(g, k % 2);
    CHECK(RingElem::parse(x.str()) == x);
    CHECK(RingElem::parse(x.compact()) == x);
    CHECK(RingElem::from_json(x.to_json()) == x);
  }
}

TEST_CASE("products agree with floats") {
  std::mt19937 g(2024);
  for (int k = 0; k < 1000; ++k) {
    const bool px = k % 3 == 0, py = k % 5 == 0;
    RingElem x = random_elem(g, px), y = random_elem(g, py);
    if (x.pi_degree() + y.pi_degree() > 1) {
      CHECK_THROWS_AS(x * y, Error);
      continue;
    }
    const RingElem p = x * y;
    if (!x.is_zero() && !y.is_zero()) CHECK(p.pi_degree() == x.pi_degree() + y.pi_degree());
    const double want = x.to_double() * y.to_double();
    CHECK(std::abs(p.to_double() - want) <= 1e-12 * (1 + std::abs(want)));
  }
}

TEST_CASE("canonical forms and congruence") {
  std::mt19937 g(7);
  for (int k = 0; k < 300; ++k) {
    RingElem x = random_elem(g, true), y = random_elem(g, true), z = random_elem(g, false);
    CHECK((x - x).is_zero());
    CHECK((x + y) - y == x);
    CHECK(x + y == y + x);
    CHECK(x * z == z * x);
    CHECK((x + y) * z == x * z + y * z);
    if (!z.is_zero()) CHECK((x * z) / z == x);
  }
}

TEST_CASE("series arithmetic") {
  auto poly = [](std::vector<RingElem> c, int n) { return Series::poly(std::move(c), n); };
  Series p = poly({1, 1}, 6) * poly({1, -1}, 6);
  CHECK(p.coeff(0) == RingElem(1L));
  CHECK(p.coeff(1).is_zero());
  CHECK(p.coeff(2) == RingElem(-1L));
  CHECK(p.coeff(3).is_zero());

  Series geo = Series::constant(1L, 10).div(poly({1, 0, -1}, 10));
  Series ig = geo.integrate();
  CHECK(ig.coeff(1) == RingElem(1L));
  CHECK(ig.coeff(3) == RingElem(Rational(1, 3)));
  CHECK(ig.coeff(5) == RingElem(Rational(1, 5)));
  CHECK(ig.coeff(4).is_zero());

  CHECK(series_sqrt_inv(poly({1, 0, -1}, 8), 8).coeff(4) == RingElem(Rational(3, 8)));
  CHECK_THROWS_AS(p.coeff(6), Error);
}

TEST_CASE("inverse square roots") {
  Series s = series_sqrt_inv(Series::poly({1, 0, -1}, 7), 6);
  CHECK(s.coeff(0) == RingElem(1L));
  CHECK(s.coeff(2) == RingElem(Rational(1, 2)));
  CHECK(s.coeff(4) == RingElem(Rational(3, 8)));
  CHECK(s.coeff(1).is_zero());

  Series one = series_sqrt_inv(Series::constant(1L, 9), 9);
  for (int k = 0; k < 9; ++k) CHECK(one.coeff(k) == RingElem(k == 0 ? 1L : 0L));

  const RingElem alpha = RingElem::make(3, 2, -1), a2 = alpha * alpha;
  Series b = Series::poly({1, -1}, 4) * Series::poly({1, -a2}, 4);
  Series t = series_sqrt_inv(b, 3);
  CHECK(t.coeff(0) == RingElem(1L));
  CHECK(t.coeff(1) == (RingElem(1L) + a2) * RingElem(Rational(1, 2)));
  CHECK(t.coeff(2) == RingElem(Rational(3, 8)) + a2 * RingElem(Rational(1, 4)) + a2 * a2 * RingElem(Rational(3, 8)));
}

TEST_CASE("inverse square root property") {
  std::mt19937 g(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 10;
    std::vector<RingElem> c{RingElem(trial % 2 ? 4L : 1L)};
    for (int k = 1; k < n; ++k) c.push_back(trial % 3 ? RingElem(small_q(g)) : r2(small_q(g), small_q(g)));
    Series base = Series::poly(c, n);
    Series s = series_sqrt_inv(base, n);
    Series prod = (s * s * base).truncate(n);
    for (int k = 0; k < n; ++k) CHECK(prod.coeff(k) == RingElem(k == 0 ? 1L : 0L));
    Series r = series_sqrt(base, n);
    Series sq = (r * r - base).truncate(n);
    for (int k = 0; k < n; ++k) CHECK(sq.coeff(k).is_zero());
  }
}
