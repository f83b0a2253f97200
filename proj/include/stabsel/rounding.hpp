#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "stabsel/core.hpp"
#include "stabsel/stability.hpp"

namespace stabsel {

/// Geometric budget split: round t runs with budget alpha^t (1-alpha) K.
/// Requires 0 < beta <= alpha < 1 (beta = alpha makes theoretical_c
/// infinite but the construction itself still runs).
struct RoundingParams {
  double alpha = 0.5;
  double beta = 0.25;
  bool debug_checks = false;  // exhaustive per-round consistency check (small m)
};

/// S is "good" for v when the mass of support committees v weakly prefers
/// to S is at most 1 - beta: S sits above the beta-quantile of the lottery.
bool good_set_member(const Lottery& lot, const PreferenceModel& model, int v,
                     const Committee& s, double beta);

/// S is "bad" for v when the mass of support committees v weakly disprefers
/// to S is at most beta: S sits below the beta-quantile.
bool bad_set_member(const Lottery& lot, const PreferenceModel& model, int v,
                    const Committee& s, double beta);

/// Picks the support committee outside the most voters' bad sets; ties
/// break to the larger coverage then lexicographically smaller committee.
/// At least ceil((1-beta)|voters|) voters are always coverable (the bad-set
/// support mass is at most beta for every voter); violating that indicates
/// a bug and throws std::logic_error.
Committee select_representative(const Lottery& lot,
                                const PreferenceModel& model,
                                const VoterSet& voters, double beta);

/// One per-round lottery from a provider, with the stability constant it
/// targets and (if it self-verified) the constant it measured.
struct ProvidedLottery {
  Lottery lottery;
  double target_c = 2.0;
  double measured_c = 0.0;
};

using LotteryProvider =
    std::function<ProvidedLottery(const VoterSet& voters, double K)>;

struct RoundRecord {
  int t = 0;
  int voters_before = 0;
  double K = 0.0;
  Committee chosen;
  int removed = 0;
  int support_size = 0;
  double provider_measured_c = 0.0;
};

struct RoundingTrace {
  std::vector<RoundRecord> rounds;
  double alpha = 0.5;
  double beta = 0.25;
  double provider_target_c = 2.0;  // max over rounds

  /// Stability constant the construction proves for the final committee:
  /// (target_c / 2) * 2 alpha / (beta (1-alpha) (alpha-beta)); equals 32 at
  /// the defaults with an exactly 2-stable provider.
  double theoretical_c() const;
};

/// Iterated rounding of per-round stable lotteries into one committee:
/// repeatedly asks the provider for a lottery over weight <= K^t committees
/// for the still-uncovered voters, takes a representative committee, drops
/// the voters it covers, and shrinks the budget by alpha. The union of the
/// chosen committees has weight <= K (the budgets form a geometric series)
/// and is (theoretical_c)-approximately stable whenever each per-round
/// lottery meets its target. Terminates: each round covers at least
/// ceil((1-beta)|voters|) >= 1 voters.
std::pair<Committee, RoundingTrace> iterated_rounding(
    const Instance& inst, const RoundingParams& params,
    const LotteryProvider& provider);

/// Provider backed by the exact stability game at c = 2: the optimal
/// defender mix is exactly 2-approximately stable against every committee
/// (attacker side enumerated exhaustively). Deterministic.
LotteryProvider exact_game_provider(const Instance& inst);

/// Provider backed by mwu_lottery (target 2 + eps at UpToSize(L)).
LotteryProvider mwu_provider(const Instance& inst, double eps, int L,
                             std::uint64_t seed);

}  // namespace stabsel
