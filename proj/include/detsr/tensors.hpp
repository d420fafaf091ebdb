#pragma once

// Families of values indexed by r-subsets of {1..q}: vector configurations
// v, antisymmetric force systems F and symmetric coefficient systems λ.
// Only sorted tuples are stored; (anti)symmetry lives in the accessors.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "detsr/combinat.hpp"
#include "detsr/exact.hpp"

namespace detsr {

/// Dense table over the arity-r subsets of {1..q}, addressed by colex rank.
template <typename Value>
class TupleTable {
 public:
  TupleTable() = default;
  TupleTable(int r, int q, const Value& fill) : r_(r), q_(q) {
    if (r < 0 || q < 0) throw DomainError("TupleTable: negative shape");
    values_.assign(binomial(q, r), fill);
  }

  int r() const { return r_; }
  int q() const { return q_; }
  std::size_t size() const { return values_.size(); }

  std::size_t index_of(const SortedTuple& t) const {
    if (t.arity() != r_) {
      throw DomainError("tuple " + t.str() + " has arity " + std::to_string(t.arity()) +
                        ", expected " + std::to_string(r_));
    }
    return subset_rank(t, q_);
  }

  const Value& at(const SortedTuple& t) const { return values_[index_of(t)]; }
  Value& at(const SortedTuple& t) { return values_[index_of(t)]; }

  const Value& at_rank(std::size_t rank) const { return values_[rank]; }
  Value& at_rank(std::size_t rank) { return values_[rank]; }

  const std::vector<Value>& values() const { return values_; }

  friend bool operator==(const TupleTable&, const TupleTable&) = default;

 private:
  int r_ = 0;
  int q_ = 0;
  std::vector<Value> values_;
};

namespace detail {

inline int checked_arity(int r, int d, int q, int min_q) {
  if (r < 1) throw DomainError("arity r must be >= 1");
  if (d < 1) throw DomainError("dimension d must be >= 1");
  if (q < min_q) throw DomainError("particle count q = " + std::to_string(q) + " is too small");
  return r;
}

/// Sorts idx, returning the sign of the sorting permutation; 0 on a repeat.
inline int sort_with_sign(std::vector<int>& idx, int q) {
  for (int i : idx)
    if (i < 1 || i > q) throw DomainError("index " + std::to_string(i) + " outside {1.." + std::to_string(q) + "}");
  int sign = 1;
  // insertion sort counts transpositions
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace detail

/// The vectors v_{i_1..i_r} ∈ k^d for 1 <= i_1 < ... < i_r <= q. Unset
/// tuples read as the zero vector.
class VectorConfiguration {
 public:
  VectorConfiguration(int r, int d, int q) : d_(d), table_(detail::checked_arity(r, d, q, r), q, Vector(d)) {}

  int r() const { return table_.r(); }
  int d() const { return d_; }
  int q() const { return table_.q(); }
  std::size_t size() const { return table_.size(); }

  const Vector& get(const SortedTuple& t) const { return table_.at(t); }
  void set(const SortedTuple& t, Vector v) {
    if (static_cast<int>(v.size()) != d_) throw DomainError("vector has wrong dimension");
    table_.at(t) = std::move(v);
  }

  const Vector& at_rank(std::size_t rank) const { return table_.at_rank(rank); }
  void set_rank(std::size_t rank, Vector v) {
    if (static_cast<int>(v.size()) != d_) throw DomainError("vector has wrong dimension");
    table_.at_rank(rank) = std::move(v);
  }

  friend bool operator==(const VectorConfiguration&, const VectorConfiguration&) = default;

 private:
  int d_;
  TupleTable<Vector> table_;
};

/// Antisymmetric forces F_{i_1..i_r}: canonical values on sorted tuples,
/// F at any index sequence is sign(σ)·F at the sorted one, zero on repeats.
class ForceSystem {
 public:
  // q < r is legal and leaves no unknowns at all.
  ForceSystem(int r, int d, int q) : d_(d), table_(detail::checked_arity(r, d, q, 0), q, Vector(d)) {}

  int r() const { return table_.r(); }
  int d() const { return d_; }
  int q() const { return table_.q(); }
  std::size_t size() const { return table_.size(); }

  const Vector& canonical(const SortedTuple& t) const { return table_.at(t); }
  const Vector& at_rank(std::size_t rank) const { return table_.at_rank(rank); }

  void set(const SortedTuple& t, Vector v) {
    if (static_cast<int>(v.size()) != d_) throw DomainError("force has wrong dimension");
    table_.at(t) = std::move(v);
  }
  void set_rank(std::size_t rank, Vector v) {
    if (static_cast<int>(v.size()) != d_) throw DomainError("force has wrong dimension");
    table_.at_rank(rank) = std::move(v);
  }

  /// Sign relating F at idx to its canonical entry (0 on a repeated index),
  /// plus the canonical rank.
  std::pair<int, std::size_t> locate(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != r()) throw DomainError("force index has wrong arity");
    std::vector<int> sorted(idx.begin(), idx.end());
    const int sign = detail::sort_with_sign(sorted, q());
    if (sign == 0) return {0, 0};
    return {sign, subset_rank(SortedTuple(std::move(sorted)), q())};
  }

  friend bool operator==(const ForceSystem&, const ForceSystem&) = default;

 private:
  int d_;
  TupleTable<Vector> table_;
};

/// F at an arbitrary index sequence.
inline Vector force_get(const ForceSystem& f, std::span<const int> idx) {
  const auto [sign, rank] = f.locate(idx);
  Vector out(static_cast<std::size_t>(f.d()));
  if (sign == 0) return out;
  const Vector& v = f.at_rank(rank);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = sign > 0 ? v[c] : Rational(-v[c]);
  return out;
}

inline Vector force_get(const ForceSystem& f, std::initializer_list<int> idx) {
  return force_get(f, std::span<const int>(idx.begin(), idx.size()));
}

/// Symmetric coefficients λ_{i_1..i_r}; the unknowns of every equilibrium
/// system.
class CoefficientSystem {
 public:
  CoefficientSystem(int r, int q) : table_(r, q, Rational(0)) {
    if (r < 1) throw DomainError("arity r must be >= 1");
  }

  /// Coefficients in colex column order.
  static CoefficientSystem from_values(int r, int q, const Vector& values) {
    CoefficientSystem c(r, q);
    if (values.size() != c.size()) throw DomainError("coefficient count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) c.table_.at_rank(i) = values[i];
    return c;
  }

  int r() const { return table_.r(); }
  int q() const { return table_.q(); }
  std::size_t size() const { return table_.size(); }

  void set(const SortedTuple& t, Rational value) { table_.at(t) = std::move(value); }
  const Rational& canonical(const SortedTuple& t) const { return table_.at(t); }
  const Rational& at_rank(std::size_t rank) const { return table_.at_rank(rank); }
  const Vector& values() const { return table_.values(); }

  bool is_trivial() const { return is_zero(table_.values()); }

  friend bool operator==(const CoefficientSystem&, const CoefficientSystem&) = default;

 private:
  TupleTable<Rational> table_;
};

/// λ at an arbitrary sequence of distinct indices.
inline const Rational& coeff_get(const CoefficientSystem& c, std::span<const int> idx) {
  if (static_cast<int>(idx.size()) != c.r()) throw DomainError("coefficient index has wrong arity");
  std::vector<int> sorted(idx.begin(), idx.end());
  if (detail::sort_with_sign(sorted, c.q()) == 0) throw DomainError("coefficient index has a repeat");
  return c.at_rank(subset_rank(SortedTuple(std::move(sorted)), c.q()));
}

inline const Rational& coeff_get(const CoefficientSystem& c, std::initializer_list<int> idx) {
  return coeff_get(c, std::span<const int>(idx.begin(), idx.size()));
}

/// v_{i_1<...<i_r} = (-1)^(i_1+...+i_r+r-1) F_{i_1..i_r}. For r = 2 this is
/// (-1)^(i+j-1), for r = 3 it is (-1)^(i+j+k).
inline VectorConfiguration to_configuration(const ForceSystem& f) {
  VectorConfiguration v(f.r(), f.d(), f.q());
  for (std::size_t rank = 0; rank < f.size(); ++rank) {
    const auto t = subset_unrank(rank, f.r(), f.q());
    Vector x = f.at_rank(rank);
    if (parity_sign(t.sum() + f.r() - 1) < 0)
      for (auto& e : x) e = -e;
    v.set_rank(rank, std::move(x));
  }
  return v;
}

/// Inverse of to_configuration.
inline ForceSystem to_forces(const VectorConfiguration& v) {
  ForceSystem f(v.r(), v.d(), v.q());
  for (std::size_t rank = 0; rank < v.size(); ++rank) {
    const auto t = subset_unrank(rank, v.r(), v.q());
    Vector x = v.at_rank(rank);
    if (parity_sign(t.sum() + v.r() - 1) < 0)
      for (auto& e : x) e = -e;
    f.set_rank(rank, std::move(x));
  }
  return f;
}

}  // namespace detsr
