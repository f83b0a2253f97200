#include "stabsel/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "stabsel/enumerate.hpp"
#include "stabsel/lottery_solver.hpp"
#include "stabsel/preferences.hpp"
#include "stabsel/rng.hpp"

namespace stabsel {

bool good_set_member(const Lottery& lot, const PreferenceModel& model, int v,
                     const Committee& s, double beta) {
  double mass = 0.0;
  for (const auto& [c, prob] : lot.support)
    if (compare(model, v, c, s) != Ordering::SecondStrict) mass += prob;
  return approx_le(mass, 1.0 - beta);
}

bool bad_set_member(const Lottery& lot, const PreferenceModel& model, int v,
                    const Committee& s, double beta) {
  double mass = 0.0;
  for (const auto& [c, prob] : lot.support)
    if (compare(model, v, c, s) != Ordering::FirstStrict) mass += prob;
  return approx_le(mass, beta);
}

Committee select_representative(const Lottery& lot,
                                const PreferenceModel& model,
                                const VoterSet& voters, double beta) {
  if (lot.support.empty())
    throw std::invalid_argument("lottery support is empty");

  const Committee* best = nullptr;
  int best_cov = -1;
  for (const auto& [c, prob] : lot.support) {
    (void)prob;
    int cov = 0;
    for (int v : voters)
      if (!bad_set_member(lot, model, v, c, beta)) ++cov;
    if (cov > best_cov || (cov == best_cov && c < *best)) {
      best = &c;
      best_cov = cov;
    }
  }

  // Every voter keeps at most beta of the support mass below them, so in
  // expectation over the lottery a committee misses at most beta*|voters|
  // bad sets; some support committee must reach the ceiling.
  const int need = static_cast<int>(
      std::ceil((1.0 - beta) * static_cast<double>(voters.size()) - 1e-9));
  if (best_cov < need)
    throw std::logic_error(
        "no support committee covers " + std::to_string(need) + " of " +
        std::to_string(voters.size()) +
        " voters; the per-round lottery violates the coverage lemma");
  return *best;
}

double RoundingTrace::theoretical_c() const {
  const double denom = beta * (1.0 - alpha) * (alpha - beta);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return (provider_target_c / 2.0) * (2.0 * alpha) / denom;
}

namespace {

/// Debug-only exhaustive check of the coverage claim on a finished round:
/// a removed voter v (representative outside their bad set) must see every
/// committee they strictly prefer to the representative inside their good
/// set. Only feasible for small m.
void check_round_claim(const Instance& inst, const Lottery& lot,
                       const Committee& rep, const VoterSet& removed,
                       double beta) {
  if (inst.m() > 12) return;
  const auto& model = inst.preference();
  for_each_nonempty_subset(inst.m(), [&](const std::vector<int>& ids) {
    const Committee s_a(ids);
    for (int v : removed) {
      if (!strictly_prefers(model, v, s_a, rep)) continue;
      if (!good_set_member(lot, model, v, s_a, beta))
        throw std::logic_error(
            "coverage claim violated: voter " + std::to_string(v) +
            " strictly prefers " + s_a.to_string() + " to the representative " +
            rep.to_string() + " yet it is not in their good set");
    }
  });
}

}  // namespace

std::pair<Committee, RoundingTrace> iterated_rounding(
    const Instance& inst, const RoundingParams& params,
    const LotteryProvider& provider) {
  if (!(params.beta > 0.0 && params.beta <= params.alpha &&
        params.alpha < 1.0))
    throw std::invalid_argument("rounding requires 0 < beta <= alpha < 1");

  const auto& model = inst.preference();
  RoundingTrace trace;
  trace.alpha = params.alpha;
  trace.beta = params.beta;
  trace.provider_target_c = 0.0;  // max over rounds, recorded below

  Committee result;
  VoterSet active = all_voters(inst);
  double budget = (1.0 - params.alpha) * inst.limit();
  int t = 0;
  while (!active.empty()) {
    const ProvidedLottery pl = provider(active, budget);
    for (const auto& [c, prob] : pl.lottery.support) {
      (void)prob;
      if (!approx_le(inst.weight(c), budget))
        throw std::logic_error("provider returned support committee " +
                               c.to_string() + " above the round budget " +
                               std::to_string(budget));
    }

    const Committee rep =
        select_representative(pl.lottery, model, active, params.beta);

    VoterSet kept;
    VoterSet removed;
    for (int v : active) {
      if (bad_set_member(pl.lottery, model, v, rep, params.beta))
        kept.push_back(v);
      else
        removed.push_back(v);
    }
    if (removed.empty())
      throw std::logic_error(
          "rounding made no progress; coverage lemma violated");

    if (params.debug_checks)
      check_round_claim(inst, pl.lottery, rep, removed, params.beta);

    RoundRecord rec;
    rec.t = t;
    rec.voters_before = static_cast<int>(active.size());
    rec.K = budget;
    rec.chosen = rep;
    rec.removed = static_cast<int>(removed.size());
    rec.support_size = static_cast<int>(pl.lottery.support.size());
    rec.provider_measured_c = pl.measured_c;
    trace.rounds.push_back(std::move(rec));
    trace.provider_target_c = std::max(trace.provider_target_c, pl.target_c);

    result = result.united(rep);
    active = std::move(kept);
    budget *= params.alpha;
    ++t;
  }

  // Geometric budgets sum below K, so the union must stay feasible.
  if (!inst.feasible(result))
    throw std::logic_error("rounded committee " + result.to_string() +
                           " exceeds the instance budget");
  return {std::move(result), std::move(trace)};
}

LotteryProvider exact_game_provider(const Instance& inst) {
  return [&inst](const VoterSet& voters, double K) -> ProvidedLottery {
    const GameSolution sol =
        exact_game(inst, voters, K, 2.0, AllCommittees{}, AllCommittees{});
    ProvidedLottery out;
    out.lottery = sol.defender_lottery;
    out.target_c = 2.0;
    out.measured_c =
        worst_lottery_blocker(inst, voters, K, out.lottery, AllCommittees{})
            .second;
    return out;
  };
}

LotteryProvider mwu_provider(const Instance& inst, double eps, int L,
                             std::uint64_t seed) {
  // Each round gets an independent child seed so retries inside one round
  // cannot shift later rounds' randomness.
  auto seeder = std::make_shared<Rng>(seed);
  return [&inst, eps, L, seeder](const VoterSet& voters,
                                 double K) -> ProvidedLottery {
    MwuOptions opt;
    opt.eps = eps;
    opt.L = L;
    opt.seed = seeder->next_u64();
    const MwuResult res = mwu_lottery(inst, voters, K, opt);
    ProvidedLottery out;
    out.lottery = res.lottery;
    out.target_c = 2.0 + eps;
    out.measured_c = res.measured_c;
    return out;
  };
}

}  // namespace stabsel
