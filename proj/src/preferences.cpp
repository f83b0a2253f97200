#include "stabsel/preferences.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "stabsel/core.hpp"
#include "stabsel/rng.hpp"

namespace stabsel {

namespace {

int approval_overlap(const std::vector<int>& approved,
                     const std::vector<int>& members) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < approved.size() && j < members.size()) {
    if (approved[i] < members[j]) {
      ++i;
    } else if (approved[i] > members[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

double committee_score(const PreferenceModel& model, int v,
                       const Committee& s) {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ApprovalModel>) {
          return approval_overlap(m.sets.at(v), s.members());
        } else if constexpr (std::is_same_v<T, RankingModel>) {
          const auto& order = m.orders.at(v);
          // Position of the best member; the empty committee ranks below
          // the worst candidate.
          int best = static_cast<int>(order.size());
          if (!s.empty()) {
            for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
              if (s.contains(order[pos])) {
                best = pos;
                break;
              }
            }
          }
          return -static_cast<double>(best);
        } else if constexpr (std::is_same_v<T, BudgetModel>) {
          const auto& u = m.utilities.at(v);
          double total = 0.0;
          for (int c : s.members()) total += u.at(c);
          return total;
        } else if constexpr (std::is_same_v<T, FacilityModel>) {
          const auto& d = m.distances.at(v);
          double best = std::numeric_limits<double>::infinity();
          for (int c : s.members()) best = std::min(best, d.at(c));
          return -best;
        } else {  // OracleModel
          for (std::size_t k = 0; k < m.universe.size(); ++k) {
            if (m.universe[k] == s) return m.scores.at(v).at(k);
          }
          throw std::invalid_argument("committee " + s.to_string() +
                                      " is outside the oracle universe");
        }
      },
      model);
}

Ordering compare(const PreferenceModel& model, int v, const Committee& s1,
                 const Committee& s2) {
  const double a = committee_score(model, v, s1);
  const double b = committee_score(model, v, s2);
  if (a > b) return Ordering::FirstStrict;
  if (a < b) return Ordering::SecondStrict;
  return Ordering::Tie;
}

int model_voter_count(const PreferenceModel& model) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ApprovalModel>) {
          return static_cast<int>(m.sets.size());
        } else if constexpr (std::is_same_v<T, RankingModel>) {
          return static_cast<int>(m.orders.size());
        } else if constexpr (std::is_same_v<T, BudgetModel>) {
          return static_cast<int>(m.utilities.size());
        } else if constexpr (std::is_same_v<T, FacilityModel>) {
          return static_cast<int>(m.distances.size());
        } else {
          return static_cast<int>(m.scores.size());
        }
      },
      model);
}

std::string PropertyReport::message() const {
  if (passed) {
    return "monotone over " + std::to_string(trials) + " trials";
  }
  std::ostringstream os;
  os << "voter " << witness->voter << " strictly prefers "
     << witness->subset.to_string() << " to its superset "
     << witness->superset.to_string();
  return os.str();
}

PropertyReport check_monotonicity(const PreferenceModel& model,
                                  const Instance& inst, int trials,
                                  std::uint64_t seed) {
  PropertyReport rep;
  auto record = [&](int v, const Committee& sub, const Committee& sup) {
    rep.passed = false;
    rep.witness = MonotonicityWitness{v, sub, sup};
  };

  if (const auto* oracle = std::get_if<OracleModel>(&model)) {
    // Bounded universe: check every nested pair exhaustively.
    for (std::size_t a = 0; a < oracle->universe.size() && rep.passed; ++a) {
      for (std::size_t b = 0; b < oracle->universe.size() && rep.passed; ++b) {
        if (!oracle->universe[a].subset_of(oracle->universe[b])) continue;
        for (int v = 0; v < inst.n(); ++v) {
          ++rep.trials;
          if (compare(model, v, oracle->universe[b], oracle->universe[a]) ==
              Ordering::SecondStrict) {
            record(v, oracle->universe[a], oracle->universe[b]);
            break;
          }
        }
      }
    }
    return rep;
  }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> sup, sub;
    for (int c = 0; c < inst.m(); ++c) {
      if (rng.bernoulli(0.5)) {
        sup.push_back(c);
        if (rng.bernoulli(0.5)) sub.push_back(c);
      }
    }
    Committee superset(std::move(sup)), subset(std::move(sub));
    int v = rng.uniform_int(0, inst.n() - 1);
    ++rep.trials;
    if (compare(model, v, superset, subset) == Ordering::SecondStrict) {
      record(v, subset, superset);
      break;
    }
  }
  return rep;
}

}  // namespace stabsel
