#include "stabsel/small_k.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "stabsel/enumerate.hpp"

namespace stabsel {

namespace {

const Committee& sample(const WeightedCommittees& dist, Rng& rng) {
  double total = 0.0;
  for (const auto& [c, p] : dist) total += p;
  if (total <= 0.0)
    throw std::invalid_argument("cannot sample from a massless distribution");
  double u = rng.uniform01() * total;
  for (const auto& [c, p] : dist) {
    u -= p;
    if (u < 0.0) return c;
  }
  return dist.back().first;  // float tail
}

void check_members(const Instance& inst, const Committee& c) {
  if (!c.empty() && c.members().back() >= inst.m())
    throw std::invalid_argument("committee member " +
                                std::to_string(c.members().back()) +
                                " is out of range");
}

}  // namespace

Committee same_size_defender(const Instance& inst,
                             const WeightedCommittees& attacker_mix, double K,
                             Rng& rng) {
  if (attacker_mix.empty())
    throw std::invalid_argument("attacker distribution is empty");
  const double common = inst.weight(attacker_mix.front().first);
  if (!(common > 0.0))
    throw std::invalid_argument("attacker committees must have positive weight");
  if (!approx_le(common, K))
    throw std::invalid_argument("attacker weight exceeds the budget");
  for (const auto& [c, p] : attacker_mix) {
    if (p <= 0.0)
      throw std::invalid_argument("attacker probabilities must be positive");
    if (!approx_eq(inst.weight(c), common))
      throw std::invalid_argument(
          "attacker support mixes different weights; the same-size "
          "construction requires one common weight");
  }

  const int t = static_cast<int>(std::floor(K / common + kTol));
  Committee out;
  for (int draw = 0; draw < t; ++draw)
    out = out.united(sample(attacker_mix, rng));
  return out;
}

void SplitAttack::validate() const {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument(
        "split attack needs p strictly inside (0,1); the endpoints reduce to "
        "the same-size construction");
  if (delta1.empty() || delta2.empty())
    throw std::invalid_argument("both split parts must be nonempty");
  for (const auto* part : {&delta1, &delta2}) {
    const int want = part == &delta1 ? 1 : 2;
    double mass = 0.0;
    for (const auto& [c, prob] : *part) {
      if (c.size() != want)
        throw std::invalid_argument(
            "split part holds a committee of size " +
            std::to_string(c.size()) + "; expected " + std::to_string(want));
      if (prob <= 0.0)
        throw std::invalid_argument("split probabilities must be positive");
      mass += prob;
    }
    if (!approx_eq(mass, 1.0))
      throw std::invalid_argument("split part mass " + std::to_string(mass) +
                                  " is not normalized");
  }
}

Committee draw_from_split(const SplitAttack& attack, Rng& rng) {
  attack.validate();
  return rng.bernoulli(attack.p) ? sample(attack.delta1, rng)
                                 : sample(attack.delta2, rng);
}

Committee k3_defender(const Instance& inst, const SplitAttack& attack,
                      Rng& rng) {
  attack.validate();
  for (const auto& [c, p] : attack.delta1) check_members(inst, c);
  for (const auto& [c, p] : attack.delta2) check_members(inst, c);

  Committee out;
  if (rng.bernoulli(attack.p * attack.p)) {
    out = sample(attack.delta1, rng).united(sample(attack.delta1, rng));
  } else {
    out = sample(attack.delta1, rng).united(sample(attack.delta2, rng));
  }
  return out;
}

GameSolution verify_exact_small_k(const Instance& inst, int K) {
  if (K < 1 || K > 3)
    throw std::invalid_argument("exact small-budget verification covers only "
                                "K in {1,2,3}");
  const auto* additive = std::get_if<AdditiveWeights>(&inst.weights());
  if (!additive)
    throw std::invalid_argument("unit candidate weights required");
  for (double s : additive->s)
    if (s != 1.0)
      throw std::invalid_argument("unit candidate weights required");
  if (inst.m() > 12)
    throw std::invalid_argument(
        "instance too large for exhaustive small-budget verification");

  GameSolution sol =
      exact_game(inst, all_voters(inst), static_cast<double>(K), 1.0,
                 AllCommittees{}, AllCommittees{});
  if (!(sol.value < -1e-7))
    throw std::logic_error(
        "game value " + std::to_string(sol.value) +
        " is not negative: no exactly stable lottery was found at K = " +
        std::to_string(K) + ", contradicting the small-budget theorem");
  return sol;
}

}  // namespace stabsel
