#pragma once

// Shared fixture builders for the unit tests.

#include <vector>

#include "stabsel/core.hpp"
#include "stabsel/preferences.hpp"

namespace testutil {

inline stabsel::Committee C(std::initializer_list<int> ids) {
  return stabsel::Committee::of(ids);
}

inline stabsel::Instance approval_instance(
    int m, double K, std::vector<std::vector<int>> sets,
    std::vector<double> weights = {}) {
  if (weights.empty()) weights.assign(m, 1.0);
  const int n = static_cast<int>(sets.size());
  return stabsel::Instance(m, n, K,
                           stabsel::AdditiveWeights{std::move(weights)},
                           stabsel::ApprovalModel{std::move(sets)});
}

inline stabsel::Instance budget_instance(
    int m, double K, std::vector<std::vector<double>> utilities,
    std::vector<double> weights = {}) {
  if (weights.empty()) weights.assign(m, 1.0);
  const int n = static_cast<int>(utilities.size());
  return stabsel::Instance(m, n, K,
                           stabsel::AdditiveWeights{std::move(weights)},
                           stabsel::BudgetModel{std::move(utilities)});
}

inline stabsel::Instance ranking_instance(
    int m, double K, std::vector<std::vector<int>> orders,
    std::vector<double> weights = {}) {
  if (weights.empty()) weights.assign(m, 1.0);
  const int n = static_cast<int>(orders.size());
  return stabsel::Instance(m, n, K,
                           stabsel::AdditiveWeights{std::move(weights)},
                           stabsel::RankingModel{std::move(orders)});
}

inline stabsel::Instance facility_instance(
    int m, double K, std::vector<std::vector<double>> distances,
    std::vector<double> weights = {}) {
  if (weights.empty()) weights.assign(m, 1.0);
  const int n = static_cast<int>(distances.size());
  return stabsel::Instance(m, n, K,
                           stabsel::AdditiveWeights{std::move(weights)},
                           stabsel::FacilityModel{std::move(distances)});
}

/// The 3-candidate cyclic budget instance with unit weights and a custom
/// budget: voter v values candidate c at 3 - ((c - v) mod 3), so voter v's
/// order is v > v+1 > v+2 (cyclically).
inline stabsel::Instance cyclic3(double K) {
  std::vector<std::vector<double>> u(3, std::vector<double>(3));
  for (int v = 0; v < 3; ++v)
    for (int c = 0; c < 3; ++c) u[v][c] = 3 - ((c - v + 3) % 3);
  return budget_instance(3, K, u);
}

}  // namespace testutil
