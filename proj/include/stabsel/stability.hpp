#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stabsel/core.hpp"
#include "stabsel/enumerate.hpp"

namespace stabsel {

using VoterSet = std::vector<int>;  // ascending voter indices

VoterSet all_voters(const Instance& inst);

/// V(S, S_a): number of listed voters strictly preferring S_a to S.
int pairwise_score(const Instance& inst, const VoterSet& voters,
                   const Committee& s, const Committee& s_a);
int pairwise_score(const Instance& inst, const Committee& s,
                   const Committee& s_a);

/// V(S,S_a) * K / (w(S_a) * n): how close S_a comes to blocking S; S_a
/// blocks at approximation c exactly when this reaches c. Returns 0 when no
/// voter strictly prefers S_a. Throws std::domain_error when w(S_a) = 0 but
/// some voter strictly prefers it (a zero-cost improvement has unbounded
/// ratio; callers must screen such candidates out up front).
double blocking_ratio(const Instance& inst, const Committee& s,
                      const Committee& s_a);

struct StabilityReport {
  double target_c = 1.0;
  bool stable = true;
  double worst_ratio = 0.0;
  std::optional<Committee> worst_blocker;
  EnumerationBound bound;
};

/// Maximizes blocking_ratio over enumerated committees with at least one
/// strictly-preferring voter and positive weight; (nullopt, 0) when none
/// exists. Ratio ties break to the lexicographically smaller member list.
std::pair<std::optional<Committee>, double> find_worst_blocker(
    const Instance& inst, const Committee& s, const EnumerationBound& bound);

/// Stable iff worst_ratio < c - 1e-9 (a ratio within tolerance of c counts
/// as blocking). Pre: S feasible, else std::invalid_argument.
StabilityReport verify_committee(const Instance& inst, const Committee& s,
                                 double c, const EnumerationBound& bound);

/// E over the lottery of V(S, S_a) restricted to the given voters.
double lottery_score(const Instance& inst, const VoterSet& voters,
                     const Lottery& lot, const Committee& s_a);

/// Lottery analog of verify_committee: stable iff for every enumerated
/// positive-weight S_a, E[V] * K / (w * n) stays below c - 1e-9.
/// Pre: every support committee is feasible.
StabilityReport verify_lottery(const Instance& inst, const Lottery& lot,
                               double c, const EnumerationBound& bound);

/// Subset-aware core used by the solvers: voters, budget K and population
/// |voters| replace the instance-wide ones.
std::pair<std::optional<Committee>, double> worst_lottery_blocker(
    const Instance& inst, const VoterSet& voters, double K, const Lottery& lot,
    const EnumerationBound& bound);

/// Brute-force minimum of worst_ratio over all feasible committees
/// (including the empty one); the attacker side is enumerated per `bound`.
/// Ties resolve to the first committee in lexicographic DFS order.
std::pair<double, Committee> min_deterministic_c(const Instance& inst,
                                                 const EnumerationBound& bound);

}  // namespace stabsel
