#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "stabsel/core.hpp"

namespace stabsel {

/// Exhaustive enumeration of every nonempty committee; guarded to m <= 25.
struct AllCommittees {};

/// Committees of size 1..L, enumerated lexicographically within each size.
struct UpToSize {
  int L = 1;
};

using EnumerationBound = std::variant<AllCommittees, UpToSize>;

inline constexpr int kMaxExhaustiveM = 25;
inline constexpr long long kMaxEnumerated = 2'000'000;
inline constexpr int kMaxGameStrategies = 5000;

/// All nonempty subsets of [m] in lexicographic DFS order:
/// {0}, {0,1}, {0,1,2}, ..., {1}, {1,2}, ...
template <class F>
void for_each_nonempty_subset(int m, F&& f) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    for (int c = next; c < m; ++c) {
      cur.push_back(c);
      f(cur);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Size-major enumeration: sizes 1..L, lexicographic combinations within
/// each size.
template <class F>
void for_each_committee_up_to_size(int m, int L, F&& f) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      f(cur);
      return;
    }
    for (int c = next; c + remaining <= m; ++c) {
      cur.push_back(c);
      self(self, c + 1, remaining - 1);
      cur.pop_back();
    }
  };
  for (int size = 1; size <= L && size <= m; ++size) rec(rec, 0, size);
}

/// Attacker-side enumeration: nonempty committees with positive weight
/// within the bound (zero-weight committees cannot meaningfully block; see
/// blocking_ratio). Throws std::invalid_argument when the bound's guards
/// (m <= 25 exhaustive, 2e6 enumerated) are exceeded.
std::vector<Committee> enumerate_attackers(const Instance& inst,
                                           const EnumerationBound& bound);

/// Defender-side enumeration: all committees with weight <= K (optionally
/// intersected with a size bound), including the empty committee, in
/// lexicographic DFS order. Relies on weight monotonicity to prune.
std::vector<Committee> enumerate_feasible(const Instance& inst, double K,
                                          const EnumerationBound& bound);

bool is_all_committees(const EnumerationBound& bound);

}  // namespace stabsel
