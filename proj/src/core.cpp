#include "stabsel/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace stabsel {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

ValidationReport fail(std::string msg) { return {false, std::move(msg)}; }

}  // namespace

Instance::Instance(int m, int n, double K, WeightSpec weights,
                   PreferenceModel pref)
    : m_(m), n_(n), K_(K), weights_(std::move(weights)),
      pref_(std::move(pref)) {
  if (const auto* multi = std::get_if<MultiConstraintWeights>(&weights_)) {
    norm_rows_.reserve(multi->w.size());
    for (std::size_t j = 0; j < multi->w.size(); ++j) {
      const double scale =
          multi->limits.at(j) > 0.0 ? K_ / multi->limits[j] : 0.0;
      std::vector<double> row(multi->w[j].size());
      for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = multi->w[j][i] * scale;
      norm_rows_.push_back(std::move(row));
    }
  }
}

double Instance::weight(const Committee& s) const {
  for (int c : s.members()) {
    if (c < 0 || c >= m_)
      throw std::out_of_range("candidate index " + std::to_string(c) +
                              " outside [0," + std::to_string(m_) + ")");
  }
  if (const auto* add = std::get_if<AdditiveWeights>(&weights_)) {
    double total = 0.0;
    for (int c : s.members()) total += add->s[c];
    return total;
  }
  double worst = 0.0;
  for (const auto& row : norm_rows_) {
    double total = 0.0;
    for (int c : s.members()) total += row[c];
    worst = std::max(worst, total);
  }
  return worst;
}

ValidationReport Instance::validate() const {
  if (m_ < 1) return fail("m must be at least 1");
  if (n_ < 1) return fail("n must be at least 1");
  if (!(std::isfinite(K_) && K_ > 0.0)) return fail("K must be positive");

  if (const auto* add = std::get_if<AdditiveWeights>(&weights_)) {
    if (static_cast<int>(add->s.size()) != m_)
      return fail("additive weights must list exactly m entries");
    for (double w : add->s)
      if (!finite_nonneg(w)) return fail("candidate weights must be >= 0");
  } else {
    const auto& multi = std::get<MultiConstraintWeights>(weights_);
    if (multi.w.empty()) return fail("multi-constraint mode needs a resource");
    if (multi.w.size() != multi.limits.size())
      return fail("each resource row needs a matching limit");
    for (const auto& row : multi.w) {
      if (static_cast<int>(row.size()) != m_)
        return fail("every resource row must list exactly m entries");
      for (double w : row)
        if (!finite_nonneg(w)) return fail("resource weights must be >= 0");
    }
    for (double lim : multi.limits)
      if (!(std::isfinite(lim) && lim > 0.0))
        return fail("resource limits must be positive");
  }

  if (model_voter_count(pref_) != n_)
    return fail("preference model must cover exactly n voters");

  if (const auto* ap = std::get_if<ApprovalModel>(&pref_)) {
    for (const auto& set : ap->sets) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 0 || set[i] >= m_)
          return fail("approval set mentions an unknown candidate");
        if (i > 0 && set[i] <= set[i - 1])
          return fail("approval sets must be sorted and duplicate-free");
      }
    }
  } else if (const auto* rk = std::get_if<RankingModel>(&pref_)) {
    for (const auto& order : rk->orders) {
      if (static_cast<int>(order.size()) != m_)
        return fail("each ranking must order all m candidates");
      std::vector<bool> seen(m_, false);
      for (int c : order) {
        if (c < 0 || c >= m_ || seen[c])
          return fail("rankings must be permutations of the candidates");
        seen[c] = true;
      }
    }
  } else if (const auto* bu = std::get_if<BudgetModel>(&pref_)) {
    for (const auto& u : bu->utilities) {
      if (static_cast<int>(u.size()) != m_)
        return fail("each utility row must cover all m candidates");
      for (double x : u)
        if (!finite_nonneg(x)) return fail("utilities must be >= 0");
    }
  } else if (const auto* fa = std::get_if<FacilityModel>(&pref_)) {
    for (const auto& d : fa->distances) {
      if (static_cast<int>(d.size()) != m_)
        return fail("each distance row must cover all m candidates");
      for (double x : d)
        if (!finite_nonneg(x)) return fail("distances must be >= 0");
    }
  } else {
    const auto& oracle = std::get<OracleModel>(pref_);
    for (const auto& u : oracle.universe) {
      for (int c : u.members())
        if (c >= m_) return fail("oracle universe mentions unknown candidate");
    }
    for (std::size_t a = 0; a < oracle.universe.size(); ++a)
      for (std::size_t b = a + 1; b < oracle.universe.size(); ++b)
        if (oracle.universe[a] == oracle.universe[b])
          return fail("oracle universe has duplicate committees");
    for (const auto& row : oracle.scores) {
      if (row.size() != oracle.universe.size())
        return fail("each oracle score row must cover the whole universe");
      for (double x : row)
        if (!std::isfinite(x)) return fail("oracle scores must be finite");
    }
  }
  return {true, ""};
}

Lottery Lottery::make(double limit,
                      std::vector<std::pair<Committee, double>> entries) {
  std::map<Committee, double> merged;
  for (auto& [committee, prob] : entries) {
    if (!std::isfinite(prob) || prob < 0.0)
      throw std::invalid_argument("lottery probabilities must be >= 0");
    if (prob > 0.0) merged[committee] += prob;
  }
  double total = 0.0;
  Lottery lot;
  lot.limit = limit;
  lot.support.assign(merged.begin(), merged.end());
  for (const auto& [committee, prob] : lot.support) total += prob;
  if (std::abs(total - 1.0) > kTol)
    throw std::invalid_argument("lottery probabilities must sum to 1");
  return lot;
}

Lottery Lottery::point_mass(double limit, Committee c) {
  return make(limit, {{std::move(c), 1.0}});
}

ValidationReport validate_lottery(const Instance& inst, const Lottery& lot) {
  if (lot.support.empty()) return fail("lottery support is empty");
  double total = 0.0;
  for (const auto& [committee, prob] : lot.support) {
    if (!(prob > 0.0)) return fail("support probabilities must be positive");
    total += prob;
    for (int c : committee.members())
      if (c < 0 || c >= inst.m())
        return fail("support committee " + committee.to_string() +
                    " names a candidate outside the instance");
    double w = inst.weight(committee);
    if (!approx_le(w, lot.limit))
      return fail("support committee " + committee.to_string() +
                  " exceeds the declared weight limit");
    if (!approx_le(w, inst.limit()))
      return fail("support committee " + committee.to_string() +
                  " exceeds the instance budget");
  }
  if (std::abs(total - 1.0) > kTol)
    return fail("lottery probabilities must sum to 1");
  for (std::size_t i = 1; i < lot.support.size(); ++i)
    if (!(lot.support[i - 1].first < lot.support[i].first))
      return fail("lottery support must be sorted and duplicate-free");
  return {true, ""};
}

}  // namespace stabsel
