#include <cmath>
#include <map>

#include "doctest.h"
#include "lgf/kasteleyn.hpp"
#include "lgf/trunk.hpp"

using namespace lgf;

namespace {

RingElem r2(Rational a, Rational b) { return RingElem::make(2, a, b); }
ComplexElem im(const RingElem& x) { return {RingElem(), x}; }

}  // namespace

TEST_CASE("Kasteleyn weights") {
  CHECK(k_weight({1, 0}, {2, 0}) == ComplexElem(1L));
  CHECK(k_weight({1, 0}, {1, 1}) == ComplexElem::i());
  CHECK(k_weight({1, 0}, {0, 0}) == ComplexElem(-1L));
  // west edges from the diagonal into the zipper, flipped from -1
  for (int k = -1; k >= -4; --k) CHECK(k_weight({k + 1, k}, {k, k}) == ComplexElem(1L));
  CHECK_THROWS_AS(k_weight({1, 0}, {3, 0}), Error);
}

TEST_CASE("Kasteleyn flatness") {
  int faces = 0;
  for (int x = -8; x <= 7; ++x)
    for (int y = -8; y <= 7; ++y) {
      const Pt c[4] = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
      bool hole = false;
      for (Pt p : c) hole |= p == Pt{};
      if (hole) continue;
      // corners alternate colours around the square
      const Pt b1 = is_black(c[0]) ? c[0] : c[1], w1 = is_black(c[0]) ? c[1] : c[0];
      const Pt b2 = is_black(c[0]) ? c[2] : c[3], w2 = is_black(c[0]) ? c[3] : c[2];
      const ComplexElem lhs = k_weight(w1, b1) * k_weight(w2, b2);
      const ComplexElem rhs = k_weight(w1, b2) * k_weight(w2, b1);
      CHECK_MESSAGE(lhs == -rhs, c[0].str());
      ++faces;
    }
  CHECK(faces == 252);
}

TEST_CASE("worked kernel entries") {
  CHECK(k_inverse_trunk({1, 1}, {1, 0}) == im(r2(-1, Rational(1, 2))));
  CHECK(k_inverse_trunk({2, 0}, {1, -2}) == ComplexElem(r2(-2, Rational(3, 2))));
  // rows (1,1), (2,0), (1,-1); columns (1,0), (3,0), (1,-2)
  const Pt rows[3] = {{1, 1}, {2, 0}, {1, -1}}, cols[3] = {{1, 0}, {3, 0}, {1, -2}};
  const ComplexElem want[3][3] = {
      {im(r2(-1, Rational(1, 2))), im(r2(Rational(-3, 2), 1)), im(r2(Rational(-3, 2), 1))},
      {ComplexElem(r2(-1, 1)), ComplexElem(r2(-3, 2)), ComplexElem(r2(-2, Rational(3, 2)))},
      {im(r2(1, Rational(-1, 2))), im(r2(Rational(3, 2), -1)), im(r2(Rational(1, 2), Rational(-1, 2)))},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK_MESSAGE(k_inverse_trunk(rows[i], cols[j]) == want[i][j], (rows[i].str() + cols[j].str()));
}

TEST_CASE("local inverse identity") {
  int n = 0;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      const Pt w{x, y};
      if (!is_white(w)) continue;
      for (int dx = -6; dx <= 6; ++dx)
        for (int dy = -6; dy <= 6; ++dy) {
          const Pt w2 = w + Pt{dx, dy};
          if (!is_white(w2)) continue;
          const ComplexElem e = kernel_identity_entry(trunk_kernel(), w, w2);
          CHECK_MESSAGE(e == ComplexElem(w == w2 ? 1L : 0L), (w.str() + " " + w2.str()));
          ++n;
        }
    }
  CHECK(n > 2000);
}

TEST_CASE("trunk events") {
  EventSpec left{{{{1, 1}, {1, 0}}, {{2, 0}, {3, 0}}, {{1, -1}, {1, -2}}}};
  EventSpec straight{{{{2, 0}, {1, 0}}, {{1, 1}, {1, 2}}, {{1, -1}, {1, -2}}}};
  CHECK(trunk_cylinder_probability(left) == r2(Rational(5, 2), Rational(-7, 4)));
  CHECK(trunk_cylinder_probability(straight) == r2(Rational(-7, 2), Rational(5, 2)));
  CHECK(trunk_cylinder_probability(EventSpec{}) == RingElem(1L));
  CHECK(trunk_cylinder_probability(std::vector<TreeEdge>{{{0, 0}, Dir::E}}) == r2(-1, 1));

  CHECK(trunk_directed_edge_probability({{0, 0}, Dir::E}) == r2(-1, 1));
  CHECK(trunk_directed_edge_probability({{0, 0}, Dir::N}) == r2(1, Rational(-1, 2)));
  CHECK(trunk_directed_edge_probability({{1, 0}, Dir::W}) == r2(3, -2));

  auto deg = trunk_degree_distribution();
  CHECK(deg.at(2) == RingElem(Rational(1, 2)));
  CHECK(deg.at(3) == r2(-1, 1));
  CHECK(deg.at(4) == r2(Rational(3, 2), -1));
  CHECK(deg.at(2) + deg.at(3) + deg.at(4) == RingElem(1L));
  // degree 4 splits into the two worked three-dimer events
  CHECK(trunk_cylinder_probability(left) * RingElem(2L) + trunk_cylinder_probability(straight) == deg.at(4));
}

TEST_CASE("straight runs") {
  for (int k = 0; k <= kMaxStraightRun; ++k) {
    CHECK(straight_run_determinant(k) == r2(-1, 1).pow(static_cast<unsigned>(k)));
    CHECK(straight_run_probability(k) == straight_run_determinant(k));
  }
  CHECK(straight_run_probability(2) == r2(3, -2));
  CHECK_THROWS_AS(straight_run_probability(kMaxStraightRun + 1), Error);
}

TEST_CASE("trunk table and conservation") {
  const auto table = trunk_table({-3, 3, -3, 3});
  std::map<Pt, RingElem> out;
  for (const auto& [e, p] : table) {
    CHECK(p.to_double() >= 0);
    CHECK(p.to_double() <= 1);
    out[e.tail] += p;
  }
  for (const auto& [v, s] : out)
    if (v != Pt{0, 0} && v != Pt{-1, 0}) CHECK_MESSAGE(s == RingElem(1L), v.str());
  CHECK(trunk_directed_edge_probability({{1, 1}, Dir::S}) == r2(2, Rational(-5, 4)));
  CHECK(trunk_directed_edge_probability({{2, 2}, Dir::E}) == r2(Rational(-169, 128), Rational(9, 8)));
  CHECK(trunk_directed_edge_probability({{1, 1}, Dir::E}) == r2(Rational(-9, 8), 1));
}

TEST_CASE("monomer dimer probabilities") {
  // the dimers covering a vertex next to the monomer partition the cover
  for (Pt v : {Pt{1, 0}, Pt{0, 1}, Pt{2, 0}, Pt{1, 1}}) {
    RingElem s;
    for (Pt d : {Pt{1, 0}, Pt{-1, 0}, Pt{0, 1}, Pt{0, -1}})
      if (v + d != Pt{}) s += monomer_dimer_probability(v, v + d);
    CHECK_MESSAGE(s == RingElem(1L), v.str());
  }
  // the monomer is felt at order 1/(2 pi r) along the axes, so 1e-3 needs r >= 160
  for (int r : {40, 80, 160}) {
    const double p = monomer_dimer_probability({r, 0}, {r + 1, 0}).to_double();
    CHECK(std::abs((p - 0.25) * r + 1 / (2 * M_PI)) < 0.4 / r);
  }
  for (Pt v : {Pt{161, 0}, Pt{0, -162}, Pt{160, 160}}) {
    const double p = monomer_dimer_probability(v, v + Pt{1, 0}).to_double();
    CHECK(std::abs(p - 0.25) < 1e-3);
  }
  CHECK_THROWS_AS(monomer_dimer_probability({1, 0}, {3, 0}), Error);
}
