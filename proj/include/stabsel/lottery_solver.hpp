#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stabsel/core.hpp"
#include "stabsel/enumerate.hpp"
#include "stabsel/rng.hpp"
#include "stabsel/stability.hpp"

namespace stabsel {

using WeightedCommittees = std::vector<std::pair<Committee, double>>;

/// Fractional point to be rounded: values[i] in [0,1] with item weights and
/// a cap on the weighted sum.
struct FractionalVector {
  std::vector<double> values;
  std::vector<double> weights;  // nonnegative
  double cap = 0.0;

  /// Throws unless sizes match, values lie in [0,1], weights are >= 0 and
  /// the weighted sum respects the cap (within tolerance).
  void validate() const;
};

/// Pairwise weighted pipage rounding. Repeatedly pairs the two
/// lowest-indexed fractional entries i < j and moves them along the
/// direction preserving w_i*X_i + w_j*X_j, fixing at least one entry to
/// {0,1} per step; at most one fractional entry survives. Guarantees:
/// exact marginals E[X_i] = values[i], exact weighted-sum preservation, and
/// negative upper orthant correlation (E[prod(1-X_i)] <= prod(1-p_i)).
/// Zero-weight entries are rounded as independent Bernoullis (they carry no
/// weight, and independence keeps the product bound).
std::vector<double> dependent_round(const FractionalVector& p, Rng& rng);
std::vector<double> dependent_round(const FractionalVector& p,
                                    std::uint64_t seed);

/// Samples one defender committee of weight <= K against an attacker mix:
/// drops attacks heavier than K/2 (dominated at approximation 2 and above),
/// renormalizes, computes beta = E[w]/K, includes committee i with marginal
/// min(1, alpha_i / (2 beta)) via dependent rounding, and returns the union
/// of the included committees. Preference-oblivious by construction. If
/// every attack is heavier than K/2 the empty committee is returned (any
/// defender already wins). Throws std::domain_error when the surviving mix
/// has zero total weight.
Committee defender_response(const Instance& inst,
                            const WeightedCommittees& attacker_mix, double K,
                            Rng& rng);

struct MwuOptions {
  double eps = 0.1;
  int L = 1;
  std::uint64_t seed = 0;
  int max_rounds = 0;  // 0 = ceil(64 ln(#attacks) / eps^2)
  int retries = 3;     // verification failures double the round budget
};

struct MwuResult {
  Lottery lottery;
  double measured_c = 0.0;  // worst ratio at UpToSize(L) over the voters
  int rounds = 0;
};

/// Raised when the multiplicative-weights loop exhausts its retry budget
/// without producing a (2+eps)-stable lottery; carries the best attempt.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string msg, Lottery best, double measured_c)
      : std::runtime_error(std::move(msg)),
        best_lottery(std::move(best)),
        measured_c(measured_c) {}
  Lottery best_lottery;
  double measured_c;
};

/// Multiplicative-weights solver for a (2+eps)-approximately stable lottery
/// over the given voters with budget K. The attacker runs multiplicative
/// weights (eta = eps/8) over committees of size <= L and weight <= K/2;
/// each round the defender samples one committee via defender_response and
/// the returned lottery is uniform over the samples, with every support
/// committee greedily extended to a maximal feasible superset (monotone
/// preferences only improve). The result is re-verified at c = 2 + eps
/// against UpToSize(L) before returning; failures retry with doubled round
/// budgets and finally raise ConvergenceError.
MwuResult mwu_lottery(const Instance& inst, const VoterSet& voters, double K,
                      const MwuOptions& opt);

struct GameSolution {
  double value = 0.0;       // < 0 certifies a c-stable lottery exists
  WeightedCommittees attacker_mix;
  Lottery defender_lottery;
  int iterations = 0;
  bool certified = false;   // both best-response regrets < 1e-7
};

/// Solves the exact zero-sum stability game to additive tolerance 1e-7:
/// payoff M[d][a] = V_voters(S_d, S_a) - c * w(S_a)/K * |voters| over
/// feasible defender committees (weight <= K within defender_bound,
/// including the empty committee) and positive-weight attacker committees
/// within attacker_bound. Guard: at most 5000 strategies per side.
GameSolution exact_game(const Instance& inst, const VoterSet& voters, double K,
                        double c, const EnumerationBound& defender_bound,
                        const EnumerationBound& attacker_bound);

/// Full-population game at the instance budget.
GameSolution exact_game(const Instance& inst, double c,
                        const EnumerationBound& attacker_bound);

/// Greedily add candidates (ascending id) while the budget allows. Monotone
/// preferences guarantee the extension never worsens any blocking ratio.
Committee extend_feasible(const Instance& inst, const Committee& c,
                          double budget);

}  // namespace stabsel
