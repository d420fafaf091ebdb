#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "detsr/error.hpp"

namespace detsr {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
constexpr std::size_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  }
  return result;
}

/// A strictly increasing list of 1-based particle indices.
class SortedTuple {
 public:
  SortedTuple() = default;

  explicit SortedTuple(std::vector<int> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1) throw DomainError("SortedTuple: indices are 1-based");
      if (i > 0 && elems_[i - 1] >= elems_[i]) {
        throw DomainError("SortedTuple: elements must be strictly increasing");
      }
    }
  }

  SortedTuple(std::initializer_list<int> elems) : SortedTuple(std::vector<int>(elems)) {}

  /// Sorts an arbitrary list of distinct indices.
  static SortedTuple from_unsorted(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    return SortedTuple(std::move(elems));
  }

  int arity() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  int operator[](std::size_t i) const { return elems_[i]; }
  int max() const { return elems_.empty() ? 0 : elems_.back(); }
  const std::vector<int>& elems() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  int sum() const {
    int s = 0;
    for (int e : elems_) s += e;
    return s;
  }

  /// sorted(this ∪ {x}); x must not already be present.
  SortedTuple with(int x) const;

  /// this \ {x}; x must be present.
  SortedTuple without(int x) const {
    if (!contains(x)) throw DomainError("SortedTuple::without: element not present");
    std::vector<int> out;
    out.reserve(elems_.size() - 1);
    for (int e : elems_)
      if (e != x) out.push_back(e);
    SortedTuple t;
    t.elems_ = std::move(out);
    return t;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const SortedTuple&, const SortedTuple&) = default;

 private:
  std::vector<int> elems_;
};

/// 1-based slot x would occupy in sorted(t ∪ {x}).
inline int insert_position(const SortedTuple& t, int x) {
  auto it = std::lower_bound(t.begin(), t.end(), x);
  if (it != t.end() && *it == x) throw DomainError("insert_position: element already in tuple");
  return static_cast<int>(it - t.begin()) + 1;
}

inline SortedTuple SortedTuple::with(int x) const {
  if (x < 1) throw DomainError("SortedTuple: indices are 1-based");
  const int p = insert_position(*this, x);
  std::vector<int> out(elems_);
  out.insert(out.begin() + (p - 1), x);
  SortedTuple t;
  t.elems_ = std::move(out);
  return t;
}

/// 0-based colexicographic rank of t among the |t|-subsets of {1..n}.
inline std::size_t subset_rank(const SortedTuple& t, int n) {
  if (t.max() > n) throw DomainError("subset_rank: element " + std::to_string(t.max()) +
                                     " exceeds n = " + std::to_string(n));
  std::size_t rank = 0;
  for (int j = 0; j < t.arity(); ++j) rank += binomial(t[j] - 1, j + 1);
  return rank;
}

/// Inverse of subset_rank.
inline SortedTuple subset_unrank(std::size_t rank, int k, int n) {
  if (k < 0 || rank >= binomial(n, k)) {
    throw DomainError("subset_unrank: rank " + std::to_string(rank) + " out of range for C(" +
                      std::to_string(n) + "," + std::to_string(k) + ")");
  }
  std::vector<int> elems(static_cast<std::size_t>(k));
  int hi = n;
  for (int j = k; j >= 1; --j) {
    // largest c with C(c-1, j) <= rank
    int c = hi;
    while (binomial(c - 1, j) > rank) --c;
    elems[static_cast<std::size_t>(j - 1)] = c;
    rank -= binomial(c - 1, j);
    hi = c - 1;
  }
  return SortedTuple(std::move(elems));
}

/// All k-subsets of {1..n} in colex order.
inline std::vector<SortedTuple> all_subsets(int k, int n) {
  std::vector<SortedTuple> out;
  const std::size_t count = binomial(n, k);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(subset_unrank(i, k, n));
  return out;
}

/// (-1)^(number of inversions); entries must be distinct.
inline int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] == perm[j]) throw DomainError("permutation_sign: repeated entry");
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline int permutation_sign(std::initializer_list<int> perm) {
  return permutation_sign(std::span<const int>(perm.begin(), perm.size()));
}

/// (-1)^n for a possibly negative integer.
constexpr int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace detsr
