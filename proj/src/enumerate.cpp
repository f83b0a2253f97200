#include "stabsel/enumerate.hpp"

namespace stabsel {

namespace {

void check_count(long long count) {
  if (count > kMaxEnumerated)
    throw std::invalid_argument(
        "enumeration exceeds the 2e6 committee guard; tighten the bound");
}

}  // namespace

bool is_all_committees(const EnumerationBound& bound) {
  return std::holds_alternative<AllCommittees>(bound);
}

std::vector<Committee> enumerate_attackers(const Instance& inst,
                                           const EnumerationBound& bound) {
  std::vector<Committee> out;
  long long count = 0;
  auto keep = [&](const std::vector<int>& members) {
    Committee c{std::vector<int>(members)};
    if (inst.weight(c) > 0.0) {
      check_count(++count);
      out.push_back(std::move(c));
    }
  };
  if (is_all_committees(bound)) {
    if (inst.m() > kMaxExhaustiveM)
      throw std::invalid_argument(
          "instance too large for exhaustive committee enumeration (m > 25)");
    for_each_nonempty_subset(inst.m(), keep);
  } else {
    const int L = std::get<UpToSize>(bound).L;
    if (L < 1) throw std::invalid_argument("size bound must be at least 1");
    for_each_committee_up_to_size(inst.m(), L, keep);
  }
  return out;
}

std::vector<Committee> enumerate_feasible(const Instance& inst, double K,
                                          const EnumerationBound& bound) {
  const int size_cap = is_all_committees(bound)
                           ? inst.m()
                           : std::min(inst.m(), std::get<UpToSize>(bound).L);
  if (is_all_committees(bound) && inst.m() > kMaxExhaustiveM)
    throw std::invalid_argument(
        "instance too large for exhaustive committee enumeration (m > 25)");

  std::vector<Committee> out;
  long long count = 1;
  out.emplace_back();  // the empty committee is always feasible
  std::vector<int> cur;
  // Weight grows monotonically with membership, so DFS can prune the whole
  // subtree at the first violation.
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size_cap) return;
    for (int c = next; c < inst.m(); ++c) {
      cur.push_back(c);
      Committee cand{std::vector<int>(cur)};
      if (approx_le(inst.weight(cand), K)) {
        check_count(++count);
        out.push_back(std::move(cand));
        self(self, c + 1);
      }
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace stabsel
