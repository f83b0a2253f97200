#include "stabsel/stability.hpp"

#include <cmath>
#include <numeric>

namespace stabsel {

namespace {

/// Shared maximizer state with the deterministic tie-break: strictly larger
/// ratio wins; exact ties go to the lexicographically smaller committee.
struct WorstTracker {
  std::optional<Committee> blocker;
  double ratio = 0.0;

  void offer(const Committee& c, double r) {
    if (!blocker || r > ratio || (r == ratio && c < *blocker)) {
      blocker = c;
      ratio = r;
    }
  }
};

double ratio_of(double score, double K, double w, int population) {
  return score * K / (w * population);
}

}  // namespace

VoterSet all_voters(const Instance& inst) {
  VoterSet v(inst.n());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int pairwise_score(const Instance& inst, const VoterSet& voters,
                   const Committee& s, const Committee& s_a) {
  const auto& model = inst.preference();
  int count = 0;
  for (int v : voters) {
    if (committee_score(model, v, s_a) > committee_score(model, v, s)) ++count;
  }
  return count;
}

int pairwise_score(const Instance& inst, const Committee& s,
                   const Committee& s_a) {
  return pairwise_score(inst, all_voters(inst), s, s_a);
}

double blocking_ratio(const Instance& inst, const Committee& s,
                      const Committee& s_a) {
  const int v = pairwise_score(inst, s, s_a);
  if (v == 0) return 0.0;
  const double w = inst.weight(s_a);
  if (w <= 0.0)
    throw std::domain_error(
        "zero-weight committee " + s_a.to_string() +
        " has strictly-preferring voters; its blocking ratio is unbounded");
  return ratio_of(v, inst.limit(), w, inst.n());
}

namespace {

std::pair<std::optional<Committee>, double> worst_committee_blocker(
    const Instance& inst, const VoterSet& voters, double K, const Committee& s,
    const EnumerationBound& bound) {
  const auto& model = inst.preference();
  std::vector<double> def_score(voters.size());
  for (std::size_t i = 0; i < voters.size(); ++i)
    def_score[i] = committee_score(model, voters[i], s);

  WorstTracker best;
  for (const Committee& s_a : enumerate_attackers(inst, bound)) {
    int v = 0;
    for (std::size_t i = 0; i < voters.size(); ++i)
      if (committee_score(model, voters[i], s_a) > def_score[i]) ++v;
    if (v == 0) continue;
    best.offer(s_a, ratio_of(v, K, inst.weight(s_a),
                             static_cast<int>(voters.size())));
  }
  return {best.blocker, best.ratio};
}

}  // namespace

std::pair<std::optional<Committee>, double> find_worst_blocker(
    const Instance& inst, const Committee& s, const EnumerationBound& bound) {
  return worst_committee_blocker(inst, all_voters(inst), inst.limit(), s,
                                 bound);
}

StabilityReport verify_committee(const Instance& inst, const Committee& s,
                                 double c, const EnumerationBound& bound) {
  if (!inst.feasible(s))
    throw std::invalid_argument("committee " + s.to_string() +
                                " exceeds the weight budget");
  auto [blocker, ratio] = find_worst_blocker(inst, s, bound);
  StabilityReport rep;
  rep.target_c = c;
  rep.worst_ratio = ratio;
  rep.worst_blocker = blocker;
  rep.stable = !blocker || ratio < c - kTol;
  rep.bound = bound;
  return rep;
}

double lottery_score(const Instance& inst, const VoterSet& voters,
                     const Lottery& lot, const Committee& s_a) {
  double total = 0.0;
  for (const auto& [committee, prob] : lot.support)
    total += prob * pairwise_score(inst, voters, committee, s_a);
  return total;
}

std::pair<std::optional<Committee>, double> worst_lottery_blocker(
    const Instance& inst, const VoterSet& voters, double K, const Lottery& lot,
    const EnumerationBound& bound) {
  const auto& model = inst.preference();
  // Cache per-voter support scores once; each attack then costs one pass.
  std::vector<std::vector<double>> support_score(lot.support.size());
  for (std::size_t k = 0; k < lot.support.size(); ++k) {
    support_score[k].resize(voters.size());
    for (std::size_t i = 0; i < voters.size(); ++i)
      support_score[k][i] =
          committee_score(model, voters[i], lot.support[k].first);
  }

  WorstTracker best;
  for (const Committee& s_a : enumerate_attackers(inst, bound)) {
    double expected = 0.0;
    std::vector<double> att_score(voters.size());
    for (std::size_t i = 0; i < voters.size(); ++i)
      att_score[i] = committee_score(model, voters[i], s_a);
    for (std::size_t k = 0; k < lot.support.size(); ++k) {
      int v = 0;
      for (std::size_t i = 0; i < voters.size(); ++i)
        if (att_score[i] > support_score[k][i]) ++v;
      expected += lot.support[k].second * v;
    }
    if (expected <= 0.0) continue;
    best.offer(s_a, ratio_of(expected, K, inst.weight(s_a),
                             static_cast<int>(voters.size())));
  }
  return {best.blocker, best.ratio};
}

StabilityReport verify_lottery(const Instance& inst, const Lottery& lot,
                               double c, const EnumerationBound& bound) {
  if (auto rep = validate_lottery(inst, lot); !rep.ok)
    throw std::invalid_argument("invalid lottery: " + rep.message);
  auto [blocker, ratio] =
      worst_lottery_blocker(inst, all_voters(inst), inst.limit(), lot, bound);
  StabilityReport rep;
  rep.target_c = c;
  rep.worst_ratio = ratio;
  rep.worst_blocker = blocker;
  rep.stable = !blocker || ratio < c - kTol;
  rep.bound = bound;
  return rep;
}

std::pair<double, Committee> min_deterministic_c(
    const Instance& inst, const EnumerationBound& bound) {
  const auto& model = inst.preference();
  const int n = inst.n();
  const auto attackers = enumerate_attackers(inst, bound);

  // Attacker scores do not depend on the defender; cache them when small.
  const bool cache =
      static_cast<long long>(attackers.size()) * n <= 4'000'000;
  std::vector<std::vector<double>> att_score;
  std::vector<double> att_weight(attackers.size());
  for (std::size_t a = 0; a < attackers.size(); ++a)
    att_weight[a] = inst.weight(attackers[a]);
  if (cache) {
    att_score.resize(attackers.size(), std::vector<double>(n));
    for (std::size_t a = 0; a < attackers.size(); ++a)
      for (int v = 0; v < n; ++v)
        att_score[a][v] = committee_score(model, v, attackers[a]);
  }

  bool have = false;
  double best_ratio = 0.0;
  Committee best;
  std::vector<double> def_score(n);
  for (const Committee& s : enumerate_feasible(inst, inst.limit(),
                                               AllCommittees{})) {
    for (int v = 0; v < n; ++v) def_score[v] = committee_score(model, v, s);
    double worst = 0.0;
    for (std::size_t a = 0; a < attackers.size(); ++a) {
      int count = 0;
      for (int v = 0; v < n; ++v) {
        const double sc = cache ? att_score[a][v]
                                : committee_score(model, v, attackers[a]);
        if (sc > def_score[v]) ++count;
      }
      if (count == 0) continue;
      worst = std::max(worst, ratio_of(count, inst.limit(), att_weight[a], n));
    }
    if (!have || worst < best_ratio) {
      have = true;
      best_ratio = worst;
      best = s;
    }
  }
  return {best_ratio, best};
}

}  // namespace stabsel
