#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "stabsel/generators.hpp"
#include "stabsel/lottery_solver.hpp"
#include "stabsel/stability.hpp"

using namespace stabsel;
using testutil::C;

TEST_CASE("fractional vectors validate their invariants") {
  CHECK_NOTHROW(FractionalVector{{0.5, 1.0, 0.0}, {1.0, 1.0, 1.0}, 1.5}
                    .validate());
  CHECK_THROWS_AS(FractionalVector({0.5}, {1.0, 1.0}, 1.0).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FractionalVector({-0.1}, {1.0}, 1.0).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FractionalVector({1.1}, {1.0}, 2.0).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FractionalVector({0.5}, {-1.0}, 1.0).validate(),
                  std::invalid_argument);
  // Weighted sum above the cap.
  CHECK_THROWS_AS(FractionalVector({1.0, 1.0}, {1.0, 1.0}, 1.5).validate(),
                  std::invalid_argument);
  // ... but only beyond the tolerance.
  CHECK_NOTHROW(FractionalVector({1.0}, {1.0}, 1.0 - 1e-12).validate());
}

TEST_CASE("integral vectors pass through rounding unchanged") {
  FractionalVector p{{0.0, 1.0, 0.0, 1.0}, {1.0, 2.0, 0.5, 1.0}, 3.0};
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(dependent_round(p, seed) ==
          std::vector<double>{0.0, 1.0, 0.0, 1.0});
}

TEST_CASE("rounding is deterministic per seed") {
  FractionalVector p{{0.3, 0.6, 0.1}, {1.0, 1.0, 1.0}, 1.0};
  CHECK(dependent_round(p, 7) == dependent_round(p, 7));
  Rng rng(7);
  CHECK(dependent_round(p, 7) == dependent_round(p, rng));
}

TEST_CASE("unit-weight rounding with mass one picks a single coordinate") {
  // The weighted sum 0.3 + 0.6 + 0.1 = 1 is preserved exactly, so exactly
  // one coordinate ends at 1: the marginals make that a categorical draw
  // with probabilities (0.3, 0.6, 0.1), and E[(1-X1)(1-X2)] = P(third) =
  // 0.1, well under the independent-product bound 0.7 * 0.4 = 0.28.
  FractionalVector p{{0.3, 0.6, 0.1}, {1.0, 1.0, 1.0}, 1.0};
  const int trials = 20000;
  std::vector<int> hits(3, 0);
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> x = dependent_round(p, 1000 + t);
    double sum = 0.0;
    int ones = 0;
    for (int i = 0; i < 3; ++i) {
      CHECK((x[i] == 0.0 || x[i] == 1.0));
      sum += x[i];
      if (x[i] == 1.0) {
        ++ones;
        ++hits[i];
      }
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
    CHECK(ones == 1);
  }
  CHECK(std::abs(hits[0] / double(trials) - 0.3) < 0.02);
  CHECK(std::abs(hits[1] / double(trials) - 0.6) < 0.02);
  CHECK(std::abs(hits[2] / double(trials) - 0.1) < 0.02);
}

TEST_CASE("weighted rounding preserves the weighted sum exactly") {
  // Weights (1, 3): the pipage step moves along (3, -1), either to
  // (1, 1/3) or to (0, 2/3), each with probability 1/2. One fractional
  // coordinate may survive; the weighted sum stays exactly 2.
  FractionalVector p{{0.5, 0.5}, {1.0, 3.0}, 2.0};
  int up = 0;
  const int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> x = dependent_round(p, 50000 + t);
    CHECK(std::abs(x[0] * 1.0 + x[1] * 3.0 - 2.0) <= 1e-9);
    int fractional = 0;
    for (double v : x)
      if (v != 0.0 && v != 1.0) ++fractional;
    CHECK(fractional <= 1);
    if (x[0] == 1.0) {
      CHECK(x[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
      ++up;
    } else {
      CHECK(x[0] == 0.0);
      CHECK(x[1] == doctest::Approx(2.0 / 3).epsilon(1e-12));
    }
  }
  CHECK(std::abs(up / double(trials) - 0.5) < 0.03);
}

TEST_CASE("zero-weight coordinates round as independent Bernoullis") {
  FractionalVector p{{0.5, 0.5, 0.5}, {0.0, 1.0, 1.0}, 1.0};
  std::map<std::vector<double>, int> counts;
  const int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> x = dependent_round(p, 90000 + t);
    // The two unit-weight coordinates still sum to 1 exactly.
    CHECK(x[1] + x[2] == 1.0);
    CHECK((x[0] == 0.0 || x[0] == 1.0));
    ++counts[x];
  }
  // All four combinations occur: the zero-weight coordinate is independent.
  CHECK(counts.size() == 4);
  int first_on = 0;
  for (const auto& [x, c] : counts)
    if (x[0] == 1.0) first_on += c;
  CHECK(std::abs(first_on / double(trials) - 0.5) < 0.03);
}

TEST_CASE("defender_response follows the attack mix marginals") {
  Instance inst = testutil::approval_instance(3, 2.0, {{0}, {1}, {2}});
  Rng rng(5);

  // Point mass on {1}: beta = 1/2, marginal min(1, 1/(2 beta)) = 1.
  CHECK(defender_response(inst, {{C({1}), 1.0}}, 2.0, rng) == C({1}));

  // Uniform over {0} and {1} at K = 4: beta = 1/4, both marginals hit 1.
  CHECK(defender_response(inst, {{C({0}), 0.5}, {C({1}), 0.5}}, 4.0, rng) ==
        C({0, 1}));

  // Attacks heavier than K/2 are dropped; with nothing left the defender
  // returns the empty committee.
  CHECK(defender_response(inst, {{C({0, 1, 2}), 1.0}}, 4.0, rng) ==
        Committee{});
}

TEST_CASE("defender_response rejects weightless attack mixes") {
  Instance inst = testutil::approval_instance(2, 2.0, {{0}}, {0.0, 1.0});
  Rng rng(1);
  CHECK_THROWS_AS(defender_response(inst, {{C({0}), 1.0}}, 2.0, rng),
                  std::domain_error);
}

TEST_CASE("defender_response always returns a feasible committee") {
  Instance inst = gen_random(ModelKind::Budget, 6, 5, 3.0, RandomParams{}, 21);
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    // Random mix over a handful of random nonempty committees.
    WeightedCommittees mix;
    double total = 0.0;
    const int parts = rng.uniform_int(1, 4);
    for (int i = 0; i < parts; ++i) {
      std::vector<int> ids;
      for (int c = 0; c < 6; ++c)
        if (rng.bernoulli(0.3)) ids.push_back(c);
      if (ids.empty()) ids.push_back(rng.uniform_int(0, 5));
      const double w = rng.uniform(0.1, 1.0);
      mix.emplace_back(Committee{ids}, w);
      total += w;
    }
    for (auto& [c, p] : mix) p /= total;
    Committee out;
    try {
      out = defender_response(inst, mix, 3.0, rng);
    } catch (const std::domain_error&) {
      continue;  // every surviving attack weightless: nothing to test
    }
    CHECK(approx_le(inst.weight(out), 3.0));
  }
}

TEST_CASE("extend_feasible greedily fills the remaining budget") {
  Instance inst = testutil::approval_instance(3, 2.0, {{0}});
  CHECK(extend_feasible(inst, Committee{}, 2.0) == C({0, 1}));
  CHECK(extend_feasible(inst, C({2}), 2.0) == C({0, 2}));
  CHECK(extend_feasible(inst, C({0, 1}), 2.0) == C({0, 1}));

  Instance heavy = testutil::approval_instance(3, 2.0, {{0}}, {3.0, 1.0, 1.0});
  CHECK(extend_feasible(heavy, Committee{}, 2.0) == C({1, 2}));
  // A budget below every candidate weight extends to nothing.
  CHECK(extend_feasible(heavy, Committee{}, 0.5) == Committee{});
}

TEST_CASE("mwu_lottery degenerates gracefully when no attack fits") {
  // Unit weights with K = 1.5: every committee outweighs K/2, so the attack
  // space is empty and the solver returns a maximal committee immediately.
  Instance inst = testutil::cyclic3(1.5);
  MwuResult res = mwu_lottery(inst, all_voters(inst), 1.5, MwuOptions{});
  CHECK(res.rounds == 0);
  REQUIRE(res.lottery.support.size() == 1);
  CHECK(res.lottery.support[0].first == C({0}));
  // The worst singleton against {0} is {2}: voter 1 scores it 2 > 1 and
  // voter 2 scores it 3 > 2, so V = 2 and the ratio is 2 * 1.5 / (1 * 3) = 1.
  CHECK(res.measured_c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mwu_lottery meets its stability target on random instances") {
  for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
    Instance inst = gen_random(seed % 2 == 0 ? ModelKind::Approval
                                             : ModelKind::Budget,
                               6, 6, 3.0, RandomParams{}, seed);
    MwuOptions opt;
    opt.eps = 0.1;
    opt.L = 2;
    opt.seed = seed;
    MwuResult res = mwu_lottery(inst, all_voters(inst), 3.0, opt);
    CHECK(res.measured_c < 2.1 - kTol);
    CHECK(validate_lottery(inst, res.lottery).ok);
    StabilityReport rep = verify_lottery(inst, res.lottery, 2.1, UpToSize{2});
    CHECK(rep.stable);
    // Identical options reproduce the lottery bit for bit.
    MwuResult again = mwu_lottery(inst, all_voters(inst), 3.0, opt);
    REQUIRE(again.lottery.support.size() == res.lottery.support.size());
    for (std::size_t i = 0; i < res.lottery.support.size(); ++i) {
      CHECK(again.lottery.support[i].first == res.lottery.support[i].first);
      CHECK(again.lottery.support[i].second == res.lottery.support[i].second);
    }
  }
}

TEST_CASE("mwu_lottery guards oversized attack spaces") {
  // m = 25 with L = 6 enumerates 245,505 attacks, past the solver's cap.
  std::vector<std::vector<int>> sets(1, std::vector<int>{0});
  Instance inst = testutil::approval_instance(25, 25.0, sets);
  MwuOptions opt;
  opt.L = 6;
  CHECK_THROWS_AS(mwu_lottery(inst, all_voters(inst), 25.0, opt),
                  std::invalid_argument);
}

TEST_CASE("exact_game solves the cyclic three-candidate stability game") {
  // K = 1.5 keeps the defender to singletons (and the empty committee).
  // The unique optimum is uniform over the singletons: every singleton
  // attack then wins 1 voter in expectation and pays 2, value -1.
  Instance inst = testutil::cyclic3(1.5);
  GameSolution sol = exact_game(inst, 1.0, AllCommittees{});
  CHECK(sol.value == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(sol.certified);
  REQUIRE(sol.defender_lottery.support.size() == 3);
  for (const auto& [committee, prob] : sol.defender_lottery.support) {
    CHECK(committee.size() == 1);
    CHECK(prob == doctest::Approx(1.0 / 3).epsilon(1e-6));
  }
  CHECK(!sol.attacker_mix.empty());

  // A negative value certifies the defender lottery at c = 1.
  StabilityReport rep =
      verify_lottery(inst, sol.defender_lottery, 1.0, AllCommittees{});
  CHECK(rep.stable);
}

TEST_CASE("exact_game values scale with the approximation target") {
  // Same cyclic instance at K = 1: uniform singletons remain optimal but
  // the binding attack changes with c — pairs at c = 1/2 (8/3 - 3 = -1/3),
  // singletons at c = 1 (1 - 3 = -2).
  Instance inst = testutil::cyclic3(1.0);
  CHECK(exact_game(inst, 0.5, AllCommittees{}).value ==
        doctest::Approx(-1.0 / 3).epsilon(1e-6));
  CHECK(exact_game(inst, 1.0, AllCommittees{}).value ==
        doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("exact_game value is monotone in the strategy spaces") {
  Instance inst = gen_random(ModelKind::Budget, 5, 4, 2.0, RandomParams{}, 9);
  const VoterSet voters = all_voters(inst);
  const double K = inst.limit();

  // Enlarging the attacker space never decreases the value.
  const double a1 =
      exact_game(inst, voters, K, 1.0, AllCommittees{}, UpToSize{1}).value;
  const double a2 =
      exact_game(inst, voters, K, 1.0, AllCommittees{}, UpToSize{2}).value;
  const double aall =
      exact_game(inst, voters, K, 1.0, AllCommittees{}, AllCommittees{}).value;
  CHECK(a1 <= a2 + 1e-6);
  CHECK(a2 <= aall + 1e-6);

  // Enlarging the defender space never increases it.
  const double d1 =
      exact_game(inst, voters, K, 1.0, UpToSize{1}, AllCommittees{}).value;
  CHECK(aall <= d1 + 1e-6);

  // Raising c only helps the defender.
  const double tight =
      exact_game(inst, voters, K, 0.5, AllCommittees{}, AllCommittees{}).value;
  CHECK(aall <= tight + 1e-6);
}

TEST_CASE("exact_game rejects degenerate inputs") {
  Instance inst = testutil::cyclic3(1.5);
  CHECK_THROWS_AS(
      exact_game(inst, VoterSet{}, 1.5, 1.0, AllCommittees{}, AllCommittees{}),
      std::invalid_argument);
  // All-zero weights leave no positive-weight attacker.
  Instance zero = testutil::approval_instance(2, 1.0, {{0}}, {0.0, 0.0});
  CHECK_THROWS_AS(exact_game(zero, 1.0, AllCommittees{}),
                  std::invalid_argument);
}
