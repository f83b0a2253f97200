#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stabsel/committee.hpp"
#include "stabsel/preferences.hpp"

namespace stabsel {

struct AdditiveWeights {
  std::vector<double> s;  // per-candidate nonnegative cost
};

/// Q resource constraints: candidate i consumes w[j][i] of resource j with
/// budget limits[j]. Reduced at load to one subadditive weight: every row is
/// rescaled to the common budget K and committees are charged the max of the
/// rescaled additive sums, so weight(S) <= K iff all per-resource limits hold.
struct MultiConstraintWeights {
  std::vector<std::vector<double>> w;  // [resource][candidate]
  std::vector<double> limits;          // per-resource budget, > 0
};

using WeightSpec = std::variant<AdditiveWeights, MultiConstraintWeights>;

struct ValidationReport {
  bool ok = true;
  std::string message;
};

/// A selection instance: m candidates, n voters, weight budget K, a weight
/// function and a preference model. Immutable after construction; all
/// query methods are const and thread-safe.
class Instance {
 public:
  Instance(int m, int n, double K, WeightSpec weights, PreferenceModel pref);

  int m() const { return m_; }
  int n() const { return n_; }
  double limit() const { return K_; }
  const WeightSpec& weights() const { return weights_; }
  const PreferenceModel& preference() const { return pref_; }

  /// Total weight of a committee (max of rescaled per-resource sums in
  /// multi-constraint mode). Throws std::out_of_range on bad member ids.
  double weight(const Committee& s) const;

  /// weight(S) <= K up to tolerance.
  bool feasible(const Committee& s) const { return approx_le(weight(s), K_); }

  /// Structural validation: dimensions, nonnegativity, permutation checks,
  /// oracle universe sanity. Reports the first violation found.
  ValidationReport validate() const;

 private:
  int m_;
  int n_;
  double K_;
  WeightSpec weights_;
  PreferenceModel pref_;
  // Multi-constraint rows rescaled by K/limits[j]; empty in additive mode.
  std::vector<std::vector<double>> norm_rows_;
};

inline double committee_weight(const Instance& inst, const Committee& s) {
  return inst.weight(s);
}

inline ValidationReport validate_instance(const Instance& inst) {
  return inst.validate();
}

/// Probability distribution over committees. Canonical form: support sorted
/// lexicographically, committees distinct, probabilities positive and
/// summing to 1 within 1e-9. `limit` is the declared weight cap of the
/// support (checked against an instance by validate_lottery).
struct Lottery {
  double limit = 0.0;
  std::vector<std::pair<Committee, double>> support;

  /// Canonicalizes (merges duplicates, drops zero-probability entries,
  /// sorts) and validates the probability mass. Throws on bad input.
  static Lottery make(double limit,
                      std::vector<std::pair<Committee, double>> entries);

  static Lottery point_mass(double limit, Committee c);
};

/// Checks support weights against the lottery's declared limit and the
/// instance budget, plus mass normalization.
ValidationReport validate_lottery(const Instance& inst, const Lottery& lot);

}  // namespace stabsel
