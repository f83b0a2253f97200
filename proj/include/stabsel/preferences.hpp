#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabsel/committee.hpp"

namespace stabsel {

class Instance;

enum class Ordering { FirstStrict, Tie, SecondStrict };

/// Approval: voter v strictly prefers the committee with the larger
/// |S intersect sets[v]|.
struct ApprovalModel {
  std::vector<std::vector<int>> sets;  // per voter, sorted candidate ids
};

/// Ranking: orders[v] lists candidates best-first (a permutation of [m]);
/// committees compare by the rank of their best member, the empty committee
/// ranking strictly below everything.
struct RankingModel {
  std::vector<std::vector<int>> orders;
};

/// Budget: additive nonnegative utilities, compared by sum.
struct BudgetModel {
  std::vector<std::vector<double>> utilities;  // [voter][candidate]
};

/// Facility: distances[v][c] >= 0; committees compare by min distance
/// (smaller is better); the empty committee sits at +infinity.
struct FacilityModel {
  std::vector<std::vector<double>> distances;
};

/// Explicit score table over a bounded universe of committees. Comparing a
/// committee outside the universe is an error. The only model that may be
/// non-monotone (useful for exercising the monotonicity checker).
struct OracleModel {
  std::vector<Committee> universe;
  std::vector<std::vector<double>> scores;  // [voter][universe index]
};

using PreferenceModel = std::variant<ApprovalModel, RankingModel, BudgetModel,
                                     FacilityModel, OracleModel>;

/// Scalar appeal of S to voter v; larger is strictly better, ties are exact
/// equality. Every model reduces to this (ranking and facility negate).
/// Throws std::invalid_argument for oracle lookups outside the universe.
double committee_score(const PreferenceModel& model, int v, const Committee& s);

Ordering compare(const PreferenceModel& model, int v, const Committee& s1,
                 const Committee& s2);

inline bool strictly_prefers(const PreferenceModel& model, int v,
                             const Committee& s_new, const Committee& s_old) {
  return compare(model, v, s_new, s_old) == Ordering::FirstStrict;
}

struct MonotonicityWitness {
  int voter;
  Committee subset;
  Committee superset;
};

struct PropertyReport {
  bool passed = true;
  int trials = 0;
  std::optional<MonotonicityWitness> witness;
  std::string message() const;
};

/// Samples random nested pairs S subset-of S' and checks that no voter
/// strictly prefers the subset. Oracle models are checked exhaustively over
/// nested universe pairs instead (the trial budget is a cap there).
PropertyReport check_monotonicity(const PreferenceModel& model,
                                  const Instance& inst, int trials,
                                  std::uint64_t seed);

int model_voter_count(const PreferenceModel& model);

}  // namespace stabsel
