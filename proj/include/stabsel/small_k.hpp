#pragma once

#include "stabsel/core.hpp"
#include "stabsel/lottery_solver.hpp"
#include "stabsel/rng.hpp"

namespace stabsel {

/// Defender sample against an attacker mix whose support committees all
/// share one weight K' <= K: the union of t = floor(K / K') independent
/// draws from the mix. For any monotone preferences and any voter, the
/// probability that a fresh draw from the same mix beats the union is at
/// most 1/(t+1) (the fresh draw must strictly beat t+1 exchangeable draws).
/// Throws std::invalid_argument when support weights differ or exceed K.
Committee same_size_defender(const Instance& inst,
                             const WeightedCommittees& attacker_mix, double K,
                             Rng& rng);

/// Attack split by committee size for the K = 3 construction: mass p on the
/// singleton part delta1 and 1-p on the pair part delta2 (each part
/// normalized to 1).
struct SplitAttack {
  double p = 0.5;
  WeightedCommittees delta1;  // singletons
  WeightedCommittees delta2;  // pairs

  void validate() const;  // sizes, normalization, p in (0,1)
};

/// One draw from the p-mixture (singleton with probability p).
Committee draw_from_split(const SplitAttack& attack, Rng& rng);

/// K = 3, unit weights: with probability p^2 the union of two independent
/// singleton draws, otherwise the union of one singleton and one pair draw.
/// Expected defender weight <= p^2 * 2 + (1 - p^2) * 3 <= 3 and per-voter
/// attack success probability at most 1/2 - p/6. Requires p in (0,1)
/// strictly; the endpoints are degenerate splits with their own bounds.
Committee k3_defender(const Instance& inst, const SplitAttack& attack,
                      Rng& rng);

/// Exhaustively solves the stability game at c = 1 for unit-weight
/// instances with K in {1,2,3} (guards: m <= 12 by enumeration cost) and
/// returns the solution; a nonnegative value would contradict the
/// exact-stability theorem for these sizes and raises std::logic_error.
GameSolution verify_exact_small_k(const Instance& inst, int K);

}  // namespace stabsel
