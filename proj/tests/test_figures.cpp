#include "doctest.h"
#include "fixtures.hpp"
#include "lgf/branched_square.hpp"
#include "lgf/green_plane.hpp"
#include "lgf/slit_square.hpp"
#include "lgf/trunk.hpp"

using namespace lgf;

namespace {
RingElem value_of(const nlohmann::json& e) { return RingElem::from_json(e["value"].dump()); }
Branch branch_of(const nlohmann::json& e) {
  return e["branch"] == "principal" ? Branch::principal : Branch::other;
}
}  // namespace

TEST_CASE("potential kernel window") {
  auto ents = load_fixture("fig_potential.json");
  CHECK(ents.size() == 49);
  for (const auto& e : ents) {
    Pt p{e["p"][0], e["p"][1]};
    CHECK_MESSAGE(potential(p) == value_of(e), p.str());
  }
}

TEST_CASE("half-plane values by fill and by generating function") {
  auto ents = load_fixture("fig_gh.json");
  CHECK(ents.size() >= 80);
  for (const auto& e : ents) {
    Pt p{e["p"][0], e["p"][1]};
    CHECK_MESSAGE(gh(p) == value_of(e), p.str());
    CHECK_MESSAGE(quadrant_gf_value(p, 24) == value_of(e), p.str());
  }
}

TEST_CASE("vertex-branched figure") {
  for (const auto& e : load_fixture("fig_gsa10.json")) {
    Pt w{e["w"][0], e["w"][1]};
    CHECK_MESSAGE(g_sigma_a({1, 0}, w, Branch::principal, branch_of(e)) == value_of(e),
                  (w.str() + " " + e["branch"].get<std::string>()));
  }
}

TEST_CASE("face-branched figure") {
  const HalfPt src = HalfPt::from_doubled(1, 1);
  for (const auto& e : load_fixture("fig_g11face.json")) {
    HalfPt w = HalfPt::from_doubled(e["w2"][0], e["w2"][1]);
    CHECK_MESSAGE(g_xi_a(src, w, Branch::principal, branch_of(e)) == value_of(e),
                  (w.str() + " " + e["branch"].get<std::string>()));
  }
}

TEST_CASE("trunk directed edge table") {
  auto ents = load_fixture("fig1_trunk.json");
  CHECK(ents.size() == 60);
  for (const auto& e : ents) {
    TreeEdge te{{e["tail"][0], e["tail"][1]}, parse_dir(e["dir"])};
    CHECK_MESSAGE(trunk_directed_edge_probability(te) == value_of(e), (te.tail.str() + dir_name(te.dir)));
  }
}
