#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabsel {

/// Absolute slack used in all stability comparisons.
inline constexpr double kTol = 1e-9;

/// a <= b up to a relative 1e-9 slack (absolute near zero).
inline bool approx_le(double a, double b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a <= b + kTol * scale;
}

inline bool approx_eq(double a, double b) {
  return approx_le(a, b) && approx_le(b, a);
}

using CandidateId = int;

/// A set of candidate indices, kept sorted and duplicate-free.
class Committee {
 public:
  Committee() = default;

  /// Canonicalizes the member list. Throws on duplicates or negative ids.
  explicit Committee(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] < 0)
        throw std::invalid_argument("committee member index is negative");
      if (i > 0 && members_[i] == members_[i - 1])
        throw std::invalid_argument("committee has duplicate members");
    }
  }

  static Committee of(std::initializer_list<int> ids) {
    return Committee(std::vector<int>(ids));
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(int c) const {
    return std::binary_search(members_.begin(), members_.end(), c);
  }

  bool subset_of(const Committee& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  Committee united(const Committee& other) const {
    std::vector<int> out;
    out.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    Committee c;
    c.members_ = std::move(out);
    return c;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(members_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const Committee& a, const Committee& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const Committee& a, const Committee& b) {
    return !(a == b);
  }
  /// Lexicographic on the sorted member list.
  friend bool operator<(const Committee& a, const Committee& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
};

}  // namespace stabsel
