#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "holembed/rational.hpp"
#include "holembed/rng.hpp"

namespace holembed {

/// Finite-support coefficient sequence over ComplexRational. Stored entries
/// are always nonzero; mutation goes through set()/arithmetic which drop
/// zeros, so equality of maps is equality of sequences.
template <class Tag>
class SparseSeq {
 public:
  using Map = std::map<std::size_t, ComplexRational>;

  SparseSeq() = default;

  static SparseSeq delta(std::size_t n, ComplexRational coefficient = ComplexRational(1)) {
    SparseSeq s;
    s.set(n, std::move(coefficient));
    return s;
  }

  const Map& entries() const { return entries_; }

  void set(std::size_t n, ComplexRational coefficient) {
    if (coefficient.is_zero()) {
      entries_.erase(n);
    } else {
      entries_[n] = std::move(coefficient);
    }
  }

  /// Coefficient at n; zero when absent.
  ComplexRational at(std::size_t n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? ComplexRational() : it->second;
  }

  bool is_zero() const { return entries_.empty(); }

  std::size_t support_size() const { return entries_.size(); }

  /// Largest support index; sequence must be nonzero.
  std::size_t max_index() const { return entries_.rbegin()->first; }

  SparseSeq& operator+=(const SparseSeq& other) {
    for (const auto& [n, c] : other.entries_) set(n, at(n) + c);
    return *this;
  }
  SparseSeq& operator-=(const SparseSeq& other) {
    for (const auto& [n, c] : other.entries_) set(n, at(n) - c);
    return *this;
  }

  friend SparseSeq operator+(SparseSeq a, const SparseSeq& b) { return a += b; }
  friend SparseSeq operator-(SparseSeq a, const SparseSeq& b) { return a -= b; }

  SparseSeq scaled(const ComplexRational& s) const {
    SparseSeq out;
    if (s.is_zero()) return out;
    for (const auto& [n, c] : entries_) out.entries_.emplace(n, c * s);
    return out;
  }
  SparseSeq scaled(const Rational& s) const { return scaled(ComplexRational(s)); }

  friend bool operator==(const SparseSeq& a, const SparseSeq& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

struct VectorTag {};
struct FunctionalTag {};

using SparseVector = SparseSeq<VectorTag>;
using SparseFunctional = SparseSeq<FunctionalTag>;

/// Duality bracket <x, u> = sum_n x_n u_n. Bilinear, no conjugation.
inline ComplexRational pair(const SparseVector& x, const SparseFunctional& u) {
  ComplexRational sum;
  const auto& xs = x.entries();
  const auto& us = u.entries();
  if (xs.size() <= us.size()) {
    for (const auto& [n, c] : xs) {
      auto it = us.find(n);
      if (it != us.end()) sum += c * it->second;
    }
  } else {
    for (const auto& [n, c] : us) {
      auto it = xs.find(n);
      if (it != xs.end()) sum += c * it->second;
    }
  }
  return sum;
}

/// Seeded random sparse sequence: up to max_support draws of an index in
/// [0, window) with complex-rational coefficients of the given size bound.
/// Colliding indices overwrite and zero coefficients drop, so the result
/// may be sparser than max_support, occasionally zero.
template <class Tag>
SparseSeq<Tag> random_sparse(Xoshiro256StarStar& rng, std::size_t window,
                             std::size_t max_support, std::uint64_t bound) {
  SparseSeq<Tag> s;
  const std::size_t draws = 1 + static_cast<std::size_t>(rng.bounded(max_support));
  for (std::size_t d = 0; d < draws; ++d) {
    const auto n = static_cast<std::size_t>(rng.bounded(window));
    s.set(n, random_complex(rng, bound));
  }
  return s;
}

inline SparseVector random_sparse_vector(Xoshiro256StarStar& rng, std::size_t window,
                                         std::size_t max_support, std::uint64_t bound) {
  return random_sparse<VectorTag>(rng, window, max_support, bound);
}

inline SparseFunctional random_sparse_functional(Xoshiro256StarStar& rng, std::size_t window,
                                                 std::size_t max_support, std::uint64_t bound) {
  return random_sparse<FunctionalTag>(rng, window, max_support, bound);
}

}  // namespace holembed
