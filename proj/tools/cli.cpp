#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lgf/branched_square.hpp"
#include "lgf/green_plane.hpp"
#include "lgf/oracle.hpp"
#include "lgf/slit_square.hpp"
#include "lgf/triangular.hpp"
#include "lgf/tripod.hpp"
#include "lgf/trunk.hpp"
#include "report.hpp"

namespace lgf::cli {

std::string default_fixture_dir() {
  if (const char* e = std::getenv("LATTICE_FIXTURE_DIR")) return e;
  return LGF_FIXTURE_DIR;
}

namespace {

using nlohmann::json;

RingElem value_of(const json& e) { return RingElem::from_json(e.at("value").dump()); }
Pt pt_of(const json& a) { return {a.at(0).get<int>(), a.at(1).get<int>()}; }
Branch branch_of(const json& e) { return e.at("branch") == "principal" ? Branch::principal : Branch::other; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

// key text and recomputed value for one fixture entry
std::pair<std::string, RingElem> evaluate_entry(const std::string& kind, const json& e) {
  if (kind == "potential") return {pt_of(e["p"]).str(), potential(pt_of(e["p"]))};
  if (kind == "slit") return {pt_of(e["p"]).str(), gh(pt_of(e["p"]))};
  if (kind == "slit-gf") return {pt_of(e["p"]).str() + " gf", quadrant_gf_value(pt_of(e["p"]), 24)};
  if (kind == "branched-vertex") {
    const Pt w = pt_of(e["w"]);
    return {w.str() + " " + e["branch"].get<std::string>(), g_sigma_a({1, 0}, w, Branch::principal, branch_of(e))};
  }
  if (kind == "branched-face") {
    const HalfPt w = HalfPt::from_doubled(e["w2"][0], e["w2"][1]);
    return {w.str() + " " + e["branch"].get<std::string>(),
            g_xi_a(HalfPt::from_doubled(1, 1), w, Branch::principal, branch_of(e))};
  }
  if (kind == "trunk") {
    const TreeEdge te{pt_of(e["tail"]), parse_dir(e["dir"])};
    return {te.tail.str() + "," + dir_name(te.dir), trunk_directed_edge_probability(te)};
  }
  if (kind == "triangular-slit") return {pt_of(e["p"]).str(), tri_slit_green(pt_of(e["p"]))};
  if (kind == "triangular-face") return {pt_of(e["p"]).str(), tri_face_branched(pt_of(e["p"]))};
  throw UsageError("no fixture comparison for '" + kind + "'");
}

}  // namespace

std::vector<Mismatch> compare_fixture(const std::string& kind, const json& entries) {
  std::vector<Mismatch> out;
  for (const auto& e : entries) {
    const RingElem want = value_of(e);
    auto [key, got] = evaluate_entry(kind, e);
    if (got != want) out.push_back({key, want.str(), got.str()});
  }
  return out;
}

std::vector<Mismatch> check_closed_forms(int& checked) {
  auto r2 = [](Rational a, Rational b) { return RingElem::make(2, a, b); };
  auto q3 = [](Rational a, Rational b, Rational e = 0) { return RingElem::make(3, a, b, 0, e); };
  auto pi2 = [](Rational a, Rational c) { return RingElem::make(2, a, 0, c); };
  const ComplexElem I = ComplexElem::i();

  std::vector<std::pair<std::string, std::function<ComplexElem()>>> got;
  std::vector<ComplexElem> want;
  auto add = [&](std::string name, std::function<ComplexElem()> f, ComplexElem w) {
    got.emplace_back(std::move(name), std::move(f));
    want.push_back(std::move(w));
  };
  auto real = [](std::function<RingElem()> f) { return [f] { return ComplexElem(f()); }; };

  add("potential(2,1)", real([] { return potential({2, 1}); }), pi2(Rational(-1, 4), 2));
  add("potential(3,0)", real([] { return potential({3, 0}); }), pi2(Rational(17, 4), -12));
  add("gh(1,1)", real([] { return gh({1, 1}); }), r2(2, -1));
  add("g_sigma_a((1,0),(1,0))", real([] { return g_sigma_a({1, 0}, {1, 0}); }), r2(-1, 1));
  add("g_sigma_a((1,0),(0,-1))", real([] { return g_sigma_a({1, 0}, {0, -1}); }), r2(Rational(3, 2), -1));
  add("g_xi_a(a,a)", real([] { return g_xi_a(HalfPt::from_doubled(1, 1), HalfPt::from_doubled(1, 1)); }),
      RingElem(Rational(1, 2)));
  add("K^-1((1,1),(1,0))", [] { return k_inverse_trunk({1, 1}, {1, 0}); }, I * ComplexElem(r2(-1, Rational(1, 2))));
  add("K^-1((2,0),(1,-2))", [] { return k_inverse_trunk({2, 0}, {1, -2}); }, ComplexElem(r2(-2, Rational(3, 2))));
  add("left turn event", real([] {
        return trunk_cylinder_probability(EventSpec{{{{1, 1}, {1, 0}}, {{2, 0}, {3, 0}}, {{1, -1}, {1, -2}}}});
      }),
      r2(Rational(5, 2), Rational(-7, 4)));
  add("straight event", real([] {
        return trunk_cylinder_probability(EventSpec{{{{2, 0}, {1, 0}}, {{1, 1}, {1, 2}}, {{1, -1}, {1, -2}}}});
      }),
      r2(Rational(-7, 2), Rational(5, 2)));
  add("degree 2", real([] { return trunk_degree_distribution().at(2); }), RingElem(Rational(1, 2)));
  add("degree 3", real([] { return trunk_degree_distribution().at(3); }), r2(-1, 1));
  add("degree 4", real([] { return trunk_degree_distribution().at(4); }), r2(Rational(3, 2), -1));
  add("P(straight)", real([] { return trunk_directed_edge_probability({{0, 0}, Dir::E}); }), r2(-1, 1));
  for (int k = 0; k <= kMaxStraightRun; ++k)
    add("straight run " + std::to_string(k), real([k] { return straight_run_determinant(k); }),
        r2(-1, 1).pow(static_cast<unsigned>(k)));
  add("K_plane^-1((-2,0),(-1,0))", [] { return k_inverse_plane({-2, 0}, {-1, 0}); }, RingElem(Rational(1, 4)));
  add("K_NE^-1((-2,0),(-1,0))", [] { return k_inverse_ne({-2, 0}, {-1, 0}); }, pi2(Rational(-1, 2), 2));
  add("tripod edge", real([] { return tripod_statistics().edge_probability; }), pi2(Rational(-1, 4), 1));
  add("tripod degree 4", real([] { return tripod_statistics().degree4_probability; }), pi2(-1, 4));
  add("tripod expected degree", real([] { return tripod_statistics().expected_degree; }), pi2(2, 4));
  add("delta+ u^1", real([] { return tri_delta_plus(7).coeff(1); }), RingElem::make(3, Rational(1, 6), 0));
  add("delta+ u^3", real([] { return tri_delta_plus(7).coeff(3); }), q3(Rational(7, 6), 0, -2));
  add("delta+ u^5", real([] { return tri_delta_plus(7).coeff(5); }), q3(Rational(73, 6), 0, -22));
  add("V u^0", real([] { return tri_slit_voltage(4).coeff(0); }), q3(2, -1));
  add("V u^2", real([] { return tri_slit_voltage(4).coeff(2); }), q3(14, -8));
  add("V u^4", real([] { return tri_slit_voltage(4).coeff(4); }), q3(143, Rational(-165, 2)));
  add("triangular runs", real([] { return tri_runs_constant(1); }), q3(2, -1));
  for (int k = 1; k <= 3; ++k)
    add("G~(-k,k) - G~(-k,k-1), k=" + std::to_string(k),
        real([k] { return tri_face_branched({-k, k}) - tri_face_branched({-k, k - 1}); }), RingElem());

  std::vector<Mismatch> out;
  for (size_t i = 0; i < got.size(); ++i) {
    ++checked;
    const ComplexElem g = got[i].second();
    if (g != want[i]) out.push_back({got[i].first, want[i].str(), g.str()});
  }
  return out;
}

namespace {

struct Common {
  std::string window, format = "pretty", digits = "6", fixture;
  int radius = -1;
};

void add_common(CLI::App* sub, Common& c, bool with_fixture = true) {
  auto* w = sub->add_option("--window", c.window, "X0:X1,Y0:Y1");
  sub->add_option("--radius", c.radius, "square window [-R,R]^2")->excludes(w)->check(CLI::NonNegativeNumber);
  sub->add_option("--format", c.format, "pretty | csv | json")->check(CLI::IsMember({"pretty", "csv", "json"}));
  sub->add_option("--digits", c.digits, "decimal digits, or exact-only");
  if (with_fixture) sub->add_option("--fixture", c.fixture, "figure fixture to compare against");
}

Window window_of(const Common& c, Window dflt) {
  if (!c.window.empty()) return parse_window(c.window);
  if (c.radius >= 0) return {-c.radius, c.radius, -c.radius, c.radius};
  return dflt;
}

OutputSpec spec_of(const Common& c) { return {parse_format(c.format), parse_digits(c.digits)}; }

int report_mismatches(const std::string& what, size_t checked, const std::vector<Mismatch>& bad, std::ostream& out) {
  for (const auto& m : bad) out << "- " << m.key << " expected " << m.expected << "\n+ " << m.key << " got " << m.got << "\n";
  out << what << ": " << checked << " checked, " << bad.size() << " mismatched\n";
  return bad.empty() ? kOk : kMismatch;
}

int run_fixture(const std::string& kind, const std::string& path, std::ostream& out) {
  const json doc = read_json(path);
  if (!doc.contains("entries")) throw UsageError(path + ": no entries");
  return report_mismatches(path, doc["entries"].size(), compare_fixture(kind, doc["entries"]), out);
}

std::vector<Pt> points(const Window& w) {
  std::vector<Pt> out;
  for (int y = w.y1; y >= w.y0; --y)
    for (int x = w.x0; x <= w.x1; ++x) out.push_back({x, y});
  return out;
}

constexpr Dir kDirs[4] = {Dir::E, Dir::N, Dir::W, Dir::S};

Table trunk_degree_table() {
  Table t{"trunk vertex degree distribution", {"degree"}, {}};
  for (const auto& [d, p] : trunk_degree_distribution()) t.rows.push_back({{int_key("degree", d)}, p});
  return t;
}

Table straight_runs_table(int kmax) {
  Table t{"probability of k straight steps", {"k"}, {}};
  for (int k = 0; k <= kmax; ++k) t.rows.push_back({{int_key("k", k)}, straight_run_probability(k)});
  return t;
}

// Golden calibration entries: tolerance is the observed error with 10% headroom.
double headroom(double observed) { return std::ceil(observed * 1.1 * 1e4) / 1e4; }

CalibrationPoint calibrate(const std::string& config, int radius) {
  if (config == "slit") return calibrate_slit(radius);
  if (config == "zipper") return calibrate_zipper(radius);
  if (config == "monomer") return calibrate_monomer(radius);
  if (config == "tri-slit") return calibrate_tri_slit(radius);
  if (config == "tri-face") return calibrate_tri_face(radius);
  throw UsageError("unknown calibration config '" + config + "'");
}

const std::vector<std::string> kConfigs = {"slit", "zipper", "monomer", "tri-slit", "tri-face"};

struct OracleOpts {
  std::string format = "pretty", fixture, config = "all";
  std::vector<int> radii;
  int radius = 16, n = 9;
  uint64_t seed = 1;
  long samples = 10000;
  double max_z = 0;
};

int oracle_calibrate(const OracleOpts& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  if (!o.fixture.empty()) {
    const json doc = read_json(o.fixture);
    std::vector<Mismatch> bad;
    size_t n = 0;
    for (const auto& e : doc.at("calibration")) {
      const std::string cfg = e.at("config");
      const int r = e.at("radius");
      if (o.config != "all" && cfg != o.config) continue;
      if (!o.radii.empty() && std::find(o.radii.begin(), o.radii.end(), r) == o.radii.end()) continue;
      const CalibrationPoint p = calibrate(cfg, r);
      ++n;
      const double tol = e.at("tolerance");
      out << cfg << " R=" << r << " error " << p.max_error << " tolerance " << tol << "\n";
      if (!(p.max_error <= tol))
        bad.push_back({cfg + " R=" + std::to_string(r), "error <= " + std::to_string(tol), std::to_string(p.max_error)});
    }
    return report_mismatches(o.fixture, n, bad, out);
  }
  std::vector<std::string> cfgs = o.config == "all" ? kConfigs : std::vector<std::string>{o.config};
  std::vector<int> radii = o.radii.empty() ? std::vector<int>{8, 16, 32} : o.radii;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& cfg : cfgs)
    for (int r : radii) {
      const CalibrationPoint p = calibrate(cfg, r);
      nlohmann::ordered_json e;
      e["config"] = cfg;
      e["radius"] = r;
      e["observed"] = p.max_error;
      e["tolerance"] = headroom(p.max_error);
      e["worst"] = p.worst;
      arr.push_back(e);
      if (fmt == Format::pretty)
        out << std::left << std::setw(9) << cfg << " R=" << std::setw(4) << r << " max error " << std::setprecision(6)
            << p.max_error << "  at " << p.worst << "\n";
      else if (fmt == Format::csv)
        out << cfg << "," << r << "," << std::setprecision(9) << p.max_error << "," << p.worst << "\n";
    }
  if (fmt == Format::json) {
    nlohmann::ordered_json doc;
    doc["calibration"] = arr;
    out << doc.dump(1) << "\n";
  }
  return kOk;
}

// Wilson estimates on the wired strip around the trunk edge, against the
// infinite-volume closed forms.
int oracle_wilson(const OracleOpts& o, std::ostream& out) {
  const Format fmt = parse_format(o.format);
  const int R = o.radius;
  if (R < 2) throw UsageError("--radius must be at least 2");
  FiniteProblem strip;
  strip.boundary = Boundary::wired_strip;
  strip.box = std::array<int, 4>{-R - 1, R, -R, R};
  const std::vector<TreeEdge> q{{{0, 0}, Dir::E}, {{0, 0}, Dir::N}, {{1, 0}, Dir::W}, {{1, 1}, Dir::S}, {{-1, 0}, Dir::N}};
  const WilsonResult res = wilson_sample(strip, {true, {-1, 0}, {0, 0}}, o.seed, o.samples, q);
  double worst = 0;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (fmt == Format::pretty)
    out << "# wilson, strip [" << -R - 1 << "," << R << "]x[" << -R << "," << R << "], seed " << o.seed << ", "
        << res.accepted << " accepted of " << res.attempts << "\n";
  if (fmt == Format::csv) out << "edge,exact,decimal,estimate,std_error,z\n";
  for (size_t k = 0; k < q.size(); ++k) {
    const RingElem ex = trunk_directed_edge_probability(q[k]);
    const double z = (res.frequency[k] - ex.to_double()) / res.std_error[k];
    worst = std::max(worst, std::abs(z));
    const std::string key = q[k].tail.str() + "," + dir_name(q[k].dir);
    std::ostringstream est, se, zs;
    est << std::fixed << std::setprecision(6) << res.frequency[k];
    se << std::fixed << std::setprecision(6) << res.std_error[k];
    zs << std::fixed << std::setprecision(3) << z;
    if (fmt == Format::pretty)
      out << key << " = " << ex.str() << "  ~ " << ex.to_decimal(6) << "  estimate " << est.str() << " +- " << se.str()
          << "  z " << zs.str() << "\n";
    else if (fmt == Format::csv)
      out << key << "," << ex.compact() << "," << ex.to_decimal(6) << "," << est.str() << "," << se.str() << ","
          << zs.str() << "\n";
    else {
      nlohmann::ordered_json e;
      e["tail"] = {q[k].tail.x, q[k].tail.y};
      e["dir"] = dir_name(q[k].dir);
      e["value"] = nlohmann::ordered_json::parse(ex.to_json());
      e["estimate"] = est.str();
      e["std_error"] = se.str();
      e["z"] = zs.str();
      arr.push_back(e);
    }
  }
  if (fmt == Format::json) {
    nlohmann::ordered_json doc;
    doc["seed"] = o.seed;
    doc["accepted"] = res.accepted;
    doc["attempts"] = res.attempts;
    doc["entries"] = arr;
    out << doc.dump(1) << "\n";
  }
  if (o.max_z > 0 && worst > o.max_z) {
    out << "worst |z| " << worst << " exceeds " << o.max_z << "\n";
    return kMismatch;
  }
  return kOk;
}

int oracle_tripod(const OracleOpts& o, std::ostream& out) {
  const int n = o.n;
  if (n < 4 || n > 11) throw UsageError("--n must be in 4..11");
  TripodFiniteReport rep =
      n == 4 ? tripod_finite_check(4, {1, 1}, {{{4, 2}, {3, 4}}, {{1, 1}, {2, 1}}})
             : tripod_finite_check(n, {n / 2, n / 2 - 1}, {{{6, 2}, {6, 3}}, {{3, 3}, {3, 4}}, {{2, 2}, {5, 4}}}, n <= 9);
  std::vector<Mismatch> bad;
  out << "# tripod check on the " << n << "x" << n << " grid, vt " << rep.vt.str() << "\n";
  out << "det ratio   = " << rep.det_ratio.str() << "\n";
  out << "denominator = " << rep.denominator.str() << "\n";
  if (rep.denominator != rep.det_ratio) bad.push_back({"denominator", rep.det_ratio.str(), rep.denominator.str()});
  if (sgn(rep.trees) != 0) {
    out << "trees " << rep.trees.get_str() << ", with tripod " << rep.trees_ne.get_str() << "\n";
    // the ratio is a probability; the minor carries a unit factor
    const RingElem ratio(Rational(rep.trees_ne, rep.trees));
    const ComplexElem d = rep.denominator;
    const RingElem mod2 = d.re() * d.re() + d.im() * d.im();
    if (mod2 != ratio * ratio) bad.push_back({"|denominator|", ratio.str(), d.str()});
  }
  for (const auto& e : rep.entries) {
    out << "K_NE^-1" << e.b.str() << e.w.str() << " = " << e.direct.str() << "\n";
    if (e.direct != e.minors) bad.push_back({"K_NE^-1" + e.b.str() + e.w.str(), e.direct.str(), e.minors.str()});
  }
  return report_mismatches("tripod check", 1 + rep.entries.size(), bad, out);
}

int selftest(const std::string& dir, std::ostream& out) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> figs{
      {"fig_potential.json", {"potential"}},          {"fig_gh.json", {"slit", "slit-gf"}},
      {"fig_gsa10.json", {"branched-vertex"}},         {"fig_g11face.json", {"branched-face"}},
      {"fig1_trunk.json", {"trunk"}},                  {"fig_tri_edge.json", {"triangular-slit"}},
      {"fig_tri_face.json", {"triangular-face"}},
  };
  std::vector<Mismatch> bad;
  int checked = 0;
  for (const auto& [file, kinds] : figs) {
    const json doc = read_json(dir + "/" + file);
    for (const auto& k : kinds) {
      auto m = compare_fixture(k, doc.at("entries"));
      checked += static_cast<int>(doc["entries"].size());
      out << file << " (" << k << "): " << doc["entries"].size() << " entries, " << m.size() << " mismatched\n";
      bad.insert(bad.end(), m.begin(), m.end());
    }
  }
  int scalars = 0;
  auto m = check_closed_forms(scalars);
  out << "closed forms: " << scalars << " values, " << m.size() << " mismatched\n";
  bad.insert(bad.end(), m.begin(), m.end());
  return report_mismatches("selftest", checked + scalars, bad, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice Green's functions and spanning-tree statistics", "lattice_cli"};
  app.require_subcommand(1);

  Common pot, slit, br, tr, mono, trip, tri;
  auto* s_pot = app.add_subcommand("potential", "potential kernel A(x,y)");
  add_common(s_pot, pot);

  auto* s_slit = app.add_subcommand("slit", "half-plane Green's function G_H, slit along the negative axis");
  add_common(s_slit, slit);
  std::string slit_method = "fill";
  s_slit->add_option("--method", slit_method, "fill | gf")->check(CLI::IsMember({"fill", "gf"}));

  auto* s_br = app.add_subcommand("branched", "Green's functions on the branched double covers");
  add_common(s_br, br);
  std::string br_kind = "vertex";
  s_br->add_option("--kind", br_kind, "vertex | face | slit")->check(CLI::IsMember({"vertex", "face", "slit"}));

  auto* s_tr = app.add_subcommand("trunk", "directed edge probabilities around the UST trunk");
  add_common(s_tr, tr);
  bool tr_degree = false;
  int tr_runs = -1;
  s_tr->add_flag("--degree", tr_degree, "degree distribution of the trunk vertex");
  s_tr->add_option("--runs", tr_runs, "probabilities of 0..K straight steps")->check(CLI::Range(0, kMaxStraightRun));

  auto* s_mono = app.add_subcommand("monomer", "dimer probabilities with a monomer at the origin (doubled coordinates)");
  add_common(s_mono, mono, false);

  auto* s_trip = app.add_subcommand("tripod", "UST conditioned on a tripod at the origin");
  add_common(s_trip, trip, false);
  bool trip_stats = false;
  s_trip->add_flag("--stats", trip_stats, "edge, degree and expected degree at the tripod");

  auto* s_tri = app.add_subcommand("triangular", "triangular lattice Green's functions");
  add_common(s_tri, tri);
  std::string tri_kind = "slit";
  int tri_series = -1, tri_runs = -1;
  s_tri->add_option("--kind", tri_kind, "slit | face")->check(CLI::IsMember({"slit", "face"}));
  s_tri->add_option("--series", tri_series, "axis differences and slit voltages through u^N")->check(CLI::Range(0, 200));
  s_tri->add_option("--runs", tri_runs, "runs constants for 0..K")->check(CLI::Range(0, kMaxRunsK));

  OracleOpts oo;
  auto* s_or = app.add_subcommand("oracle", "finite-volume exact solves and Monte Carlo");
  s_or->require_subcommand(1);
  auto* s_cal = s_or->add_subcommand("calibrate", "finite solves against closed forms");
  s_cal->add_option("--config", oo.config, "slit | zipper | monomer | tri-slit | tri-face | all")
      ->check(CLI::IsMember({"all", "slit", "zipper", "monomer", "tri-slit", "tri-face"}));
  s_cal->add_option("--radius", oo.radii, "radii, comma separated")->delimiter(',')->check(CLI::Range(1, 256));
  s_cal->add_option("--format", oo.format)->check(CLI::IsMember({"pretty", "csv", "json"}));
  s_cal->add_option("--fixture", oo.fixture, "calibration file; fail when an error exceeds its tolerance");
  auto* s_wil = s_or->add_subcommand("wilson", "trunk-conditioned Wilson sampler on a wired strip");
  s_wil->add_option("--radius", oo.radius, "strip half-size")->check(CLI::Range(2, 512));
  s_wil->add_option("--seed", oo.seed);
  s_wil->add_option("--samples", oo.samples)->check(CLI::Range(1L, 100000000L));
  s_wil->add_option("--format", oo.format)->check(CLI::IsMember({"pretty", "csv", "json"}));
  s_wil->add_option("--max-z", oo.max_z, "fail when some |z| exceeds this");
  auto* s_tl = s_or->add_subcommand("tripod", "finite-grid tripod determinant check");
  s_tl->add_option("--n", oo.n, "grid size 4..11");

  auto* s_self = app.add_subcommand("selftest", "recompute every figure fixture and closed form");
  std::string self_dir = default_fixture_dir();
  s_self->add_option("--fixture", self_dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*s_pot) {
      if (!pot.fixture.empty()) return run_fixture("potential", pot.fixture, out);
      Table t{"potential kernel A(x,y)", {"p"}, {}};
      for (Pt p : points(window_of(pot, {-3, 3, -3, 3}))) t.rows.push_back({{point_key("p", p)}, potential(p)});
      render(t, spec_of(pot), out);
    } else if (*s_slit) {
      const bool gf = slit_method == "gf";
      if (!slit.fixture.empty()) return run_fixture(gf ? "slit-gf" : "slit", slit.fixture, out);
      Table t{"half-plane Green's function G_H(x,y), x+y even", {"p"}, {}};
      for (Pt p : points(window_of(slit, {-4, 4, 0, 4}))) {
        if (p.y < 0 || ((p.x + p.y) & 1)) continue;
        t.rows.push_back({{point_key("p", p)}, gf ? quadrant_gf_value(p) : gh(p)});
      }
      render(t, spec_of(slit), out);
    } else if (*s_br) {
      if (!br.fixture.empty()) {
        if (br_kind == "slit") throw UsageError("no figure fixture for the diagonal slit");
        return run_fixture("branched-" + br_kind, br.fixture, out);
      }
      const Window w = window_of(br, {-2, 2, -2, 2});
      Table t;
      if (br_kind == "slit") {
        t = {"diagonal slit Green's function G((1,1), w)", {"w"}, {}};
        for (Pt p : points(w)) t.rows.push_back({{point_key("w", p)}, g_slit({1, 1}, p)});
      } else if (br_kind == "vertex") {
        t = {"vertex-branched G_Sigma^A((1,0), w)", {"w", "branch"}, {}};
        for (Pt p : points(w))
          for (Branch b : {Branch::principal, Branch::other})
            t.rows.push_back({{point_key("w", p), text_key("branch", b == Branch::principal ? "principal" : "other")},
                              g_sigma_a({1, 0}, p, Branch::principal, b)});
      } else {
        // the window indexes faces by their lower-left corner
        t = {"face-branched G_Xi^A((1/2,1/2), w), doubled coordinates", {"w2", "branch"}, {}};
        for (Pt p : points(w))
          for (Branch b : {Branch::principal, Branch::other}) {
            const HalfPt h = HalfPt::from_doubled(2 * p.x + 1, 2 * p.y + 1);
            t.rows.push_back({{point_key("w2", {h.x2, h.y2}), text_key("branch", b == Branch::principal ? "principal" : "other")},
                              g_xi_a(HalfPt::from_doubled(1, 1), h, Branch::principal, b)});
          }
      }
      render(t, spec_of(br), out);
    } else if (*s_tr) {
      if (!tr.fixture.empty()) return run_fixture("trunk", tr.fixture, out);
      const OutputSpec spec = spec_of(tr);
      if (tr_degree || tr_runs >= 0) {
        if (tr_degree) render(trunk_degree_table(), spec, out);
        if (tr_runs >= 0) render(straight_runs_table(tr_runs), spec, out);
        return kOk;
      }
      Table t{"trunk through (-1,0)-(0,0): directed edge probabilities", {"tail", "dir"}, {}};
      for (const auto& [e, p] : trunk_table(window_of(tr, {-1, 3, 0, 3})))
        t.rows.push_back({{point_key("tail", e.tail), text_key("dir", dir_name(e.dir))}, p});
      render(t, spec, out);
    } else if (*s_mono) {
      Table t{"dimer probabilities, monomer at (0,0)", {"a", "dir"}, {}};
      for (Pt a : points(window_of(mono, {-2, 2, -2, 2})))
        for (Dir d : {Dir::E, Dir::N}) {
          const Pt b = a + dir_step(d);
          if (a == Pt{} || b == Pt{}) continue;
          t.rows.push_back({{point_key("a", a), text_key("dir", dir_name(d))}, monomer_dimer_probability(a, b)});
        }
      render(t, spec_of(mono), out);
    } else if (*s_trip) {
      const OutputSpec spec = spec_of(trip);
      if (trip_stats) {
        const TripodStats s = tripod_statistics();
        Table t{"tripod statistics", {"quantity"}, {}};
        t.rows.push_back({{text_key("quantity", "edge_probability")}, s.edge_probability});
        t.rows.push_back({{text_key("quantity", "degree3_probability")}, s.degree3_probability});
        t.rows.push_back({{text_key("quantity", "degree4_probability")}, s.degree4_probability});
        t.rows.push_back({{text_key("quantity", "expected_degree")}, s.expected_degree});
        render(t, spec, out);
        return kOk;
      }
      const Window w = window_of(trip, {-2, 2, -2, 2});
      Table t{"directed edge probabilities given a tripod at (0,0)", {"vertex", "dir"}, {}};
      for (const auto& e : tripod_table(w.x0, w.x1, w.y0, w.y1))
        t.rows.push_back({{point_key("vertex", e.vertex), text_key("dir", std::string(1, e.dir))}, e.probability});
      render(t, spec, out);
    } else if (*s_tri) {
      const OutputSpec spec = spec_of(tri);
      if (!tri.fixture.empty()) return run_fixture("triangular-" + tri_kind, tri.fixture, out);
      if (tri_series >= 0 || tri_runs >= 0) {
        if (tri_series >= 0) {
          const Series d = tri_delta_plus(tri_series + 1), v = tri_slit_voltage(tri_series);
          Table t{"axis differences and slit voltages by power of u", {"series", "k"}, {}};
          for (int k = 0; k <= tri_series; ++k)
            if (!d.coeff(k).is_zero()) t.rows.push_back({{text_key("series", "delta+"), int_key("k", k)}, d.coeff(k)});
          for (int k = 0; k <= tri_series; ++k)
            if (!v.coeff(k).is_zero()) t.rows.push_back({{text_key("series", "V"), int_key("k", k)}, v.coeff(k)});
          render(t, spec, out);
        }
        if (tri_runs >= 0) {
          Table t{"triangular straight runs", {"k"}, {}};
          for (int k = 0; k <= tri_runs; ++k) t.rows.push_back({{int_key("k", k)}, tri_runs_constant(k)});
          render(t, spec, out);
        }
        return kOk;
      }
      const bool face = tri_kind == "face";
      Table t{face ? "triangular face-branched G~(x,y)" : "triangular slit-plane G_D(x,y)", {"p"}, {}};
      for (Pt p : points(window_of(tri, {-3, 3, -3, 3})))
        t.rows.push_back({{point_key("p", p)}, face ? tri_face_branched(p) : tri_slit_green(p)});
      render(t, spec, out);
    } else if (*s_or) {
      if (*s_cal) return oracle_calibrate(oo, out);
      if (*s_wil) return oracle_wilson(oo, out);
      if (*s_tl) return oracle_tripod(oo, out);
    } else if (*s_self) {
      return selftest(self_dir, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << "\n";
    return kComputation;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lattice_cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lgf::cli
