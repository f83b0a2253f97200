#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <variant>

#include "helpers.hpp"
#include "stabsel/generators.hpp"
#include "stabsel/json_io.hpp"
#include "stabsel/lottery_solver.hpp"
#include "stabsel/rounding.hpp"
#include "stabsel/stability.hpp"

using namespace stabsel;
using testutil::C;

TEST_CASE("instances round-trip through JSON for every model") {
  auto roundtrip = [](const Instance& inst) {
    const json j = instance_to_json(inst);
    const Instance back = instance_from_json(j);
    CHECK(instance_to_json(back).dump() == j.dump());
    CHECK(back.m() == inst.m());
    CHECK(back.n() == inst.n());
    CHECK(back.limit() == inst.limit());
  };
  roundtrip(testutil::approval_instance(3, 1.5, {{0, 2}, {}, {1}}));
  roundtrip(testutil::ranking_instance(3, 2.0, {{2, 0, 1}, {0, 1, 2}}));
  roundtrip(testutil::budget_instance(2, 1.0, {{0.25, 0.75}}));
  roundtrip(testutil::facility_instance(2, 1.0, {{0.5, 1.25}, {2.0, 0.0}}));
  roundtrip(Instance(2, 1, 1.0, AdditiveWeights{{1.0, 1.0}},
                     OracleModel{{Committee{}, C({0}), C({1})},
                                 {{0.0, 1.0, 0.5}}}));
  roundtrip(Instance(2, 1, 2.0,
                     MultiConstraintWeights{{{1.0, 2.0}, {0.5, 0.25}},
                                            {3.0, 1.0}},
                     ApprovalModel{{{0}}}));
  roundtrip(gen_random(ModelKind::Facility, 6, 5, 2.0, RandomParams{}, 3));
}

TEST_CASE("instance JSON uses the documented field layout") {
  const json j = instance_to_json(
      testutil::approval_instance(2, 1.0, {{0}, {1}}, {1.0, 0.5}));
  CHECK(j.size() == 5);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["K"] == 1.0);
  CHECK(j["weights"]["mode"] == "additive");
  CHECK(j["weights"]["s"] == json::array({1.0, 0.5}));
  CHECK(j["preference"]["type"] == "approval");
  CHECK(j["preference"]["sets"] == json::array({{0}, {1}}));

  const json jm = instance_to_json(
      Instance(2, 1, 2.0, MultiConstraintWeights{{{1.0, 2.0}}, {3.0}},
               RankingModel{{{1, 0}}}));
  CHECK(jm["weights"]["mode"] == "multi");
  CHECK(jm["weights"]["w"] == json::array({{1.0, 2.0}}));
  CHECK(jm["weights"]["limits"] == json::array({3.0}));
  CHECK(jm["preference"]["type"] == "ranking");
  CHECK(jm["preference"]["orders"] == json::array({{1, 0}}));
}

TEST_CASE("instance parsing rejects malformed documents") {
  const json good = instance_to_json(testutil::approval_instance(2, 1.0, {{0}}));

  json j = good;
  j.erase("K");
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);

  j = good;
  j["weights"]["mode"] = "quadratic";
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);

  j = good;
  j["preference"]["type"] = "mystery";
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);

  j = good;
  j["m"] = "two";
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);

  CHECK_THROWS_AS(instance_from_json(json::parse("[1,2,3]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(json::parse("\"instance\"")),
                  std::invalid_argument);

  // Structurally valid JSON with inconsistent content also fails: the
  // ranking row is not a permutation.
  json bad = instance_to_json(testutil::ranking_instance(2, 1.0, {{0, 1}}));
  bad["preference"]["orders"] = json::array({{0, 0}});
  CHECK_THROWS_AS(instance_from_json(bad), std::invalid_argument);
}

TEST_CASE("lotteries round-trip and validate through JSON") {
  Lottery lot = Lottery::make(2.0, {{C({0, 1}), 0.75}, {C({2}), 0.25}});
  const json j = lottery_to_json(lot);
  CHECK(j.size() == 2);
  CHECK(j["K"] == 2.0);
  REQUIRE(j["support"].size() == 2);
  CHECK(j["support"][0]["committee"] == json::array({0, 1}));
  CHECK(j["support"][0]["prob"] == 0.75);

  Lottery back = lottery_from_json(j);
  CHECK(lottery_to_json(back).dump() == j.dump());

  // Duplicate support entries merge on load; bad mass fails.
  json dup = j;
  dup["support"] = json::array();
  dup["support"].push_back({{"committee", {0}}, {"prob", 0.5}});
  dup["support"].push_back({{"committee", {0}}, {"prob", 0.5}});
  CHECK(lottery_from_json(dup).support.size() == 1);

  json bad = j;
  bad["support"][0]["prob"] = 0.5;  // mass now 0.75
  CHECK_THROWS_AS(lottery_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(lottery_from_json(json::parse("{}")),
                  std::invalid_argument);
}

TEST_CASE("stability reports serialize their verdict and witness") {
  Instance inst = gen_cyclic(10, 0.2);
  const json blocked =
      report_to_json(verify_committee(inst, C({0}), 1.5, AllCommittees{}));
  CHECK(blocked["target_c"] == 1.5);
  CHECK(blocked["stable"] == false);
  CHECK(blocked["worst_ratio"].get<double>() ==
        doctest::Approx(1.71).epsilon(1e-12));
  CHECK(blocked["worst_blocker"] == json::array({9}));
  CHECK(blocked["bound"] == "all");

  const json sized =
      report_to_json(verify_committee(inst, C({0}), 1.8, UpToSize{2}));
  CHECK(sized["stable"] == true);
  CHECK(sized["bound"]["L"] == 2);

  // No blocker at all serializes as an explicit null.
  Instance calm = testutil::approval_instance(2, 2.0, {{0, 1}});
  const json quiet =
      report_to_json(verify_committee(calm, C({0, 1}), 1.0, AllCommittees{}));
  CHECK(quiet["worst_blocker"].is_null());
  CHECK(quiet["worst_ratio"] == 0.0);
}

TEST_CASE("game solutions serialize value, mixes and certificate") {
  Instance inst = testutil::cyclic3(1.5);
  const json j = game_solution_to_json(exact_game(inst, 1.0, AllCommittees{}));
  CHECK(j["value"].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(j["certified"] == true);
  CHECK(j["iterations"].get<int>() >= 1);
  REQUIRE(j["defender_lottery"]["support"].size() == 3);
  CHECK(j["defender_lottery"]["K"] == 1.5);
  for (const auto& entry : j["attacker_mix"]) {
    CHECK(entry.contains("committee"));
    CHECK(entry["prob"].get<double>() > 0.0);
  }
}

TEST_CASE("round records serialize every trace field") {
  RoundRecord rec;
  rec.t = 2;
  rec.voters_before = 7;
  rec.K = 0.75;
  rec.chosen = C({1, 3});
  rec.removed = 6;
  rec.support_size = 4;
  rec.provider_measured_c = 1.25;
  const json j = round_record_to_json(rec);
  CHECK(j == json({{"t", 2},
                   {"voters_before", 7},
                   {"K", 0.75},
                   {"chosen", {1, 3}},
                   {"removed", 6},
                   {"support_size", 4},
                   {"provider_measured_c", 1.25}}));
}
