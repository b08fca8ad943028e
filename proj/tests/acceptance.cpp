// One PASS/FAIL line per acceptance criterion.  A criterion also fails when it
// runs past its time budget.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "lgf/branched_square.hpp"
#include "lgf/green_plane.hpp"
#include "lgf/oracle.hpp"
#include "lgf/slit_square.hpp"
#include "lgf/triangular.hpp"
#include "lgf/tripod.hpp"
#include "lgf/trunk.hpp"

using namespace lgf;
using nlohmann::json;

namespace {

struct Check {
  std::vector<std::string> failures;
  long count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
  void none_of(const std::vector<cli::Mismatch>& ms, long n) {
    count += n;
    for (const auto& m : ms) expect(false, m.key + ": expected " + m.expected + ", got " + m.got);
  }
};

RingElem r2(Rational a, Rational b) { return RingElem::make(2, a, b); }
RingElem pi2(Rational a, Rational c) { return RingElem::make(2, a, 0, c); }
RingElem q3(Rational a, Rational b, Rational e = 0) { return RingElem::make(3, a, b, 0, e); }
ComplexElem im(const RingElem& x) { return {RingElem(), x}; }

json entries(const std::string& file) {
  std::ifstream in(cli::default_fixture_dir() + "/" + file);
  if (!in) throw std::runtime_error("missing fixture " + file);
  return json::parse(in)["entries"];
}

Pt pt_of(const json& a) { return {a[0].get<int>(), a[1].get<int>()}; }

void crit1(Check& c) {
  const json e = entries("fig_potential.json");
  c.expect(e.size() == 49, "49 entries");
  c.none_of(cli::compare_fixture("potential", e), static_cast<long>(e.size()));
}

void crit2(Check& c) {
  const json e = entries("fig_gh.json");
  c.expect(e.size() >= 80, "about 80 entries");
  c.none_of(cli::compare_fixture("slit", e), static_cast<long>(e.size()));
  c.none_of(cli::compare_fixture("slit-gf", e), static_cast<long>(e.size()));
  for (int x = -7; x <= 7; ++x)
    for (int y = 0; y <= 14; ++y) {
      if ((x + y) % 2 != 0 || (y == 0 && x < 0)) continue;
      c.expect(gh({x, y}) == quadrant_gf_value({x, y}), "fill = gf at " + Pt{x, y}.str());
    }
}

void crit3(Check& c) {
  const json v = entries("fig_gsa10.json"), f = entries("fig_g11face.json");
  c.none_of(cli::compare_fixture("branched-vertex", v), static_cast<long>(v.size()));
  c.none_of(cli::compare_fixture("branched-face", f), static_cast<long>(f.size()));
  const Branch P = Branch::principal, O = Branch::other;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int s = -2; s <= 2; ++s)
        for (int t = -2; t <= 2; ++t) {
          const Pt a{x, y}, b{s, t};
          const RingElem g = g_sigma_a(a, b, P, P);
          c.expect(g_sigma_a(a, b, P, O) == -g && g_sigma_a(a, b, O, O) == g && g_sigma_a(b, a) == g,
                   "vertex cover symmetry " + a.str() + b.str());
          const HalfPt h = HalfPt::from_doubled(2 * x + 1, 2 * y + 1), k = HalfPt::from_doubled(2 * s + 1, 2 * t + 1);
          const RingElem gf = g_xi_a(h, k, P, P);
          c.expect(g_xi_a(h, k, P, O) == -gf && g_xi_a(k, h) == gf, "face cover symmetry " + h.str() + k.str());
        }
}

void crit4(Check& c) {
  c.expect(k_inverse_trunk({1, 1}, {1, 0}) == im(r2(-1, Rational(1, 2))), "-i + i/sqrt2");
  c.expect(k_inverse_trunk({2, 0}, {1, -2}) == ComplexElem(r2(-2, Rational(3, 2))), "-2 + 3/sqrt2");
  const Pt rows[3] = {{1, 1}, {2, 0}, {1, -1}}, cols[3] = {{1, 0}, {3, 0}, {1, -2}};
  const ComplexElem want[3][3] = {
      {im(r2(-1, Rational(1, 2))), im(r2(Rational(-3, 2), 1)), im(r2(Rational(-3, 2), 1))},
      {ComplexElem(r2(-1, 1)), ComplexElem(r2(-3, 2)), ComplexElem(r2(-2, Rational(3, 2)))},
      {im(r2(1, Rational(-1, 2))), im(r2(Rational(3, 2), -1)), im(r2(Rational(1, 2), Rational(-1, 2)))},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c.expect(k_inverse_trunk(rows[i], cols[j]) == want[i][j], "bordermatrix " + rows[i].str() + cols[j].str());
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      const Pt w{x, y};
      if (!is_white(w)) continue;
      for (int dx = -6; dx <= 6; ++dx)
        for (int dy = -6; dy <= 6; ++dy) {
          const Pt w2 = w + Pt{dx, dy};
          if (!is_white(w2)) continue;
          c.expect(kernel_identity_entry(trunk_kernel(), w, w2) == ComplexElem(w == w2 ? 1L : 0L),
                   "K K^-1 at " + w.str() + w2.str());
        }
    }
}

void crit5(Check& c) {
  c.expect(trunk_cylinder_probability(EventSpec{{{{1, 1}, {1, 0}}, {{2, 0}, {3, 0}}, {{1, -1}, {1, -2}}}}) ==
               r2(Rational(5, 2), Rational(-7, 4)),
           "5/2 - 7/(2 sqrt2)");
  c.expect(trunk_cylinder_probability(EventSpec{{{{2, 0}, {1, 0}}, {{1, 1}, {1, 2}}, {{1, -1}, {1, -2}}}}) ==
               r2(Rational(-7, 2), Rational(5, 2)),
           "5/sqrt2 - 7/2");
  const auto deg = trunk_degree_distribution();
  c.expect(deg.at(2) == RingElem(Rational(1, 2)), "degree 2");
  c.expect(deg.at(3) == r2(-1, 1), "degree 3");
  c.expect(deg.at(4) == r2(Rational(3, 2), -1), "degree 4");
  c.expect(trunk_directed_edge_probability({{0, 0}, Dir::E}) == r2(-1, 1), "straight");
}

void crit6(Check& c) {
  for (int k = 0; k <= 12; ++k)
    c.expect(straight_run_determinant(k) == r2(-1, 1).pow(static_cast<unsigned>(k)), "run " + std::to_string(k));
}

void crit7(Check& c) {
  const json e = entries("fig1_trunk.json");
  c.none_of(cli::compare_fixture("trunk", e), static_cast<long>(e.size()));
  Window w{1 << 20, -(1 << 20), 1 << 20, -(1 << 20)};
  for (const auto& x : e) {
    const Pt t = pt_of(x["tail"]);
    w = {std::min(w.x0, t.x), std::max(w.x1, t.x), std::min(w.y0, t.y), std::max(w.y1, t.y)};
  }
  std::map<Pt, RingElem> out;
  for (const auto& [te, p] : trunk_table(w)) out[te.tail] += p;
  for (const auto& [v, s] : out) {
    if (v == Pt{0, 0} || v == Pt{-1, 0}) continue;
    c.expect(s == RingElem(1L), "out-probability at " + v.str());
  }
}

void crit8(Check& c) {
  c.expect(k_inverse_ne({-2, 0}, {-1, 0}) == ComplexElem(pi2(Rational(-1, 2), 2)), "2/pi - 1/2");
  const auto s = tripod_statistics();
  c.expect(s.edge_probability == pi2(Rational(-1, 4), 1), "1/pi - 1/4");
  c.expect(s.degree4_probability == pi2(-1, 4), "4/pi - 1");
  c.expect(s.expected_degree == pi2(2, 4), "2 + 4/pi");
  std::vector<TripodWhite> ws{TripodWhite::w0()};
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      const Pt p{x, y};
      bool cond = false;
      for (int i = 1; i <= 4; ++i) cond |= p == tripod_white(i);
      if (is_white(p) && !cond) ws.push_back(TripodWhite::at(p));
    }
  for (const auto& a : ws)
    for (const auto& b : ws)
      c.expect(tr_identity_entry(a, b) == ComplexElem(a.is_w0 == b.is_w0 && a.p == b.p ? 1L : 0L),
               "K_tr identity " + a.str() + " " + b.str());
}

void crit9(Check& c) {
  const Series d = tri_delta_plus(7), v = tri_slit_voltage(4);
  c.expect(d.coeff(1) == RingElem::make(3, Rational(1, 6), 0), "1/6");
  c.expect(d.coeff(3) == q3(Rational(7, 6), 0, -2), "7/6 - 2 sqrt3/pi");
  c.expect(d.coeff(5) == q3(Rational(73, 6), 0, -22), "73/6 - 22 sqrt3/pi");
  c.expect(v.coeff(0) == q3(2, -1), "2 - sqrt3");
  c.expect(v.coeff(2) == q3(14, -8), "14 - 8 sqrt3");
  c.expect(v.coeff(4) == q3(143, Rational(-165, 2)), "143 - 165 sqrt3/2");
  json near = json::array();
  for (const auto& e : entries("fig_tri_face.json"))
    if (linf(pt_of(e["p"])) <= 3) near.push_back(e);
  c.expect(near.size() >= 30, "face figure entries within radius 3");
  c.none_of(cli::compare_fixture("triangular-face", near), static_cast<long>(near.size()));
  for (int k = 1; k <= 6; ++k) c.expect(tri_face_branched({-k, k}) == tri_face_branched({-k, k - 1}), "G~(-k,k)");
  c.expect(tri_runs_constant(1) == q3(2, -1), "runs constant");
}

void crit10(Check& c) {
  std::ifstream in(cli::default_fixture_dir() + "/oracle_calibration.json");
  const json doc = json::parse(in);
  int seen = 0;
  for (const auto& e : doc["calibration"]) {
    if (e["radius"] != 64) continue;
    const std::string cfg = e["config"];
    CalibrationPoint p;
    if (cfg == "slit") p = calibrate_slit(64);
    else if (cfg == "zipper") p = calibrate_zipper(64);
    else if (cfg == "monomer") p = calibrate_monomer(64);
    else continue;
    ++seen;
    const double tol = e["tolerance"];
    std::ostringstream s;
    s << cfg << " error " << p.max_error << " tolerance " << tol;
    c.expect(p.max_error <= tol && tol <= 0.02, s.str());
    std::cout << "  " << s.str() << "\n";
  }
  c.expect(seen == 3, "three configurations at radius 64");
}

void crit11(Check& c) {
  const int R = 64;
  FiniteProblem strip;
  strip.boundary = Boundary::wired_strip;
  strip.box = std::array<int, 4>{-R - 1, R, -R, R};
  // straight, then three edges of the trunk table
  const std::vector<TreeEdge> q{{{0, 0}, Dir::E}, {{0, 0}, Dir::N}, {{1, 0}, Dir::W}, {{1, 1}, Dir::S}};
  const auto r = wilson_sample(strip, {true, {-1, 0}, {0, 0}}, 1, 10000, q);
  c.expect(r.accepted >= 10000, "10^4 accepted samples");
  for (size_t k = 0; k < q.size(); ++k) {
    const double ex = trunk_directed_edge_probability(q[k]).to_double();
    const double z = (r.frequency[k] - ex) / r.std_error[k];
    std::ostringstream s;
    s << q[k].tail.str() << dir_name(q[k].dir) << " " << std::fixed << std::setprecision(4) << r.frequency[k] << " +- "
      << r.std_error[k] << " vs " << ex << " z " << std::setprecision(2) << z;
    std::cout << "  " << s.str() << "\n";
    c.expect(std::abs(z) <= 3, s.str());
  }
  const auto again = wilson_sample(strip, {true, {-1, 0}, {0, 0}}, 1, 200, q);
  const auto twice = wilson_sample(strip, {true, {-1, 0}, {0, 0}}, 1, 200, q);
  c.expect(again.counts == twice.counts && again.attempts == twice.attempts, "seeded runs repeat");
}

void crit12(Check& c) {
  std::mt19937 g(12);
  std::uniform_int_distribution<int> small(-6, 6), pos(1, 5);
  auto rq = [&] { return Rational(small(g), pos(g)); };

  // series square roots
  for (int t = 0; t < 40; ++t) {
    std::vector<RingElem> co{RingElem(1L)};
    for (int k = 1; k < 8; ++k) co.push_back(t % 2 ? RingElem::make(2, rq(), rq()) : RingElem(rq()));
    const Series base = Series::poly(co, 12);
    const Series s = series_sqrt(base, 12), si = series_sqrt_inv(base, 12);
    const Series sq = s * s, one = si * si * base;
    for (int k = 0; k < 12; ++k) {
      c.expect(sq.coeff(k) == base.coeff(k), "sqrt squared, coefficient " + std::to_string(k));
      c.expect(one.coeff(k) == RingElem(k == 0 ? 1L : 0L), "sqrt_inv, coefficient " + std::to_string(k));
    }
  }
  // ring grading: at most one power of 1/pi survives
  for (int t = 0; t < 400; ++t) {
    const RingElem x = RingElem::make(2, rq(), rq(), t % 3 ? Rational(0) : rq(), t % 5 ? Rational(0) : rq());
    const RingElem y = RingElem::make(2, rq(), rq(), t % 2 ? Rational(0) : rq(), 0);
    if (x.pi_degree() + y.pi_degree() >= 2 && !x.is_zero() && !y.is_zero()) {
      bool threw = false;
      try {
        (void)(x * y);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::PiOverflow;
      }
      c.expect(threw, "pi overflow " + x.str() + " * " + y.str());
    } else {
      const RingElem p = x * y;
      c.expect(p.pi_degree() <= x.pi_degree() + y.pi_degree(), "grading " + x.str() + " * " + y.str());
      c.expect(std::abs(p.to_double() - x.to_double() * y.to_double()) < 1e-9, "product value");
    }
  }
  // harmonicity residuals
  for (int x = -20; x <= 20; ++x)
    for (int y = -20; y <= 20; ++y) {
      const RingElem lap = RingElem(4L) * potential({x, y}) - potential({x + 1, y}) - potential({x - 1, y}) -
                           potential({x, y + 1}) - potential({x, y - 1});
      c.expect(lap == RingElem(x == 0 && y == 0 ? -1L : 0L), "potential Laplacian at " + Pt{x, y}.str());
    }
  auto G = [](int x, int y) { return gh({x, y < 0 ? -y : y}); };
  for (int x = -10; x <= 10; ++x)
    for (int y = 0; y <= 10; ++y) {
      if ((x + y) % 2 != 0 || (y == 0 && x <= 0)) continue;
      c.expect((RingElem(4L) * G(x, y) - G(x + 1, y + 1) - G(x - 1, y + 1) - G(x + 1, y - 1) - G(x - 1, y - 1)).is_zero(),
               "half-plane Laplacian at " + Pt{x, y}.str());
    }
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      c.expect(tri_face_residual({x, y}) == RingElem(x == 0 && y == 0 ? 1L : 0L), "triangular residual");
  // Dirichlet rows
  for (int k = -6; k <= -1; ++k) {
    c.expect(gh({2 * k, 0}).is_zero(), "G_H on the slit");
    c.expect(tri_slit_green({k, 0}).is_zero(), "G_D on the slit");
    c.expect(g_slit({2, 1}, {k, k}).is_zero(), "diagonal slit");
    c.expect(g_sigma_a({0, 0}, {k, -k}).is_zero(), "branch point");
  }
  {
    const FiniteProblem p = slit_square_problem(6);
    std::vector<Pt> unk;
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y)
        if (p.is_unknown({x, y})) unk.push_back({x, y});
    const auto col = exact_green_column(p, {1, 0}, unk);
    std::map<Pt, Rational> gv;
    for (size_t i = 0; i < unk.size(); ++i) gv[unk[i]] = col[i];
    for (Pt v : unk) {
      const auto nb = p.neighbours(v);
      Rational r = gv[v] * static_cast<long>(nb.size());
      for (Pt w : nb)
        if (gv.count(w)) r -= gv[w];
      c.expect(r == Rational(v == Pt{1, 0} ? 1 : 0), "finite Dirichlet row " + v.str());
    }
  }
  // probabilities in [0, 1], and the monomer partition of unity
  auto in01 = [&](const RingElem& p, const std::string& what) {
    const double v = p.to_double();
    c.expect(v >= 0 && v <= 1, what + " = " + p.str());
  };
  for (const auto& [e, p] : trunk_table({-4, 4, -4, 4})) in01(p, "trunk " + e.tail.str() + dir_name(e.dir));
  for (const auto& e : tripod_table(-3, 3, -3, 3)) in01(e.probability, "tripod " + e.vertex.str() + e.dir);
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y) {
      const Pt a{x, y};
      if (a == Pt{}) continue;
      RingElem sum;
      for (Pt d : {Pt{1, 0}, Pt{-1, 0}, Pt{0, 1}, Pt{0, -1}}) {
        if (a + d == Pt{}) continue;
        const RingElem p = monomer_dimer_probability(a, a + d);
        in01(p, "monomer " + a.str() + (a + d).str());
        sum += p;
      }
      c.expect(sum == RingElem(1L), "monomer partition of unity at " + a.str());
    }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> all{
      {1, "potential kernel window", 1, crit1},
      {2, "slit plane by fill and by generating function", 5, crit2},
      {3, "branched covers", 10, crit3},
      {4, "kernel entries and local identity", 10, crit4},
      {5, "trunk events", 5, crit5},
      {6, "geometric runs", 10, crit6},
      {7, "trunk table and conservation", 30, crit7},
      {8, "tripod values and K_tr identity", 10, crit8},
      {9, "triangular lattice values", 30, crit9},
      {10, "finite solves at radius 64", 300, crit10},
      {11, "Wilson sampler against trunk probabilities", 300, crit11},
      {12, "property suites", 60, crit12},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget) c.expect(false, "over the time budget");
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << c.count << " checks, "
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
