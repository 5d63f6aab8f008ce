#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "holembed/errors.hpp"
#include "holembed/rational.hpp"
#include "holembed/sparse.hpp"

namespace holembed {

using DenseRow = std::vector<ComplexRational>;

template <class Tag>
DenseRow to_dense_row(const SparseSeq<Tag>& s, std::size_t width) {
  DenseRow row(width);
  for (const auto& [n, c] : s.entries()) {
    if (n >= width)
      throw WindowExceeded("coordinate " + std::to_string(n) + " outside row width " +
                           std::to_string(width));
    row[n] = c;
  }
  return row;
}

namespace detail {

// Scale a row to Gaussian-integer entries (common denominator cleared),
// then divide out the integer content. Both rescalings preserve the span.
inline void normalize_row(DenseRow& row) {
  mpz_class lcm(1);
  for (const auto& c : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.get_den().get_mpz_t());
  }
  if (lcm != 1) {
    Rational scale{std::move(lcm)};
    for (auto& c : row) c = c * scale;
  }
  mpz_class content(0);
  for (const auto& c : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.re.get_num().get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.im.get_num().get_mpz_t());
  }
  if (content > 1) {
    Rational inv(mpz_class(1), content);
    inv.canonicalize();
    for (auto& c : row) c = c * inv;
  }
}

inline std::size_t leading_column(const DenseRow& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) return j;
  return row.size();
}

}  // namespace detail

/// Incremental exact rank via integer-preserving (fraction-free) row
/// elimination over the Gaussian rationals: a new row is cross-multiplied
/// against the echelon basis, r <- b_l * r - r_l * b, so all intermediate
/// entries stay Gaussian integers.
class RankTracker {
 public:
  /// Returns true when the row enlarged the span.
  bool insert(DenseRow row) {
    detail::normalize_row(row);
    std::size_t lead = detail::leading_column(row);
    while (lead < row.size()) {
      const DenseRow* basis_row = nullptr;
      for (const auto& [col, b] : basis_)
        if (col == lead) {
          basis_row = &b;
          break;
        }
      if (basis_row == nullptr) {
        basis_.emplace_back(lead, std::move(row));
        return true;
      }
      const ComplexRational pivot = (*basis_row)[lead];
      const ComplexRational coefficient = row[lead];
      for (std::size_t j = lead; j < row.size(); ++j)
        row[j] = pivot * row[j] - coefficient * (*basis_row)[j];
      detail::normalize_row(row);
      lead = detail::leading_column(row);
    }
    return false;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<std::pair<std::size_t, DenseRow>> basis_;
};

inline std::size_t exact_rank(const std::vector<DenseRow>& rows) {
  RankTracker tracker;
  for (const auto& row : rows) tracker.insert(row);
  return tracker.rank();
}

/// span(a) == span(b), certified by rank(a) == rank(b) == rank(a stacked b).
inline bool span_equal(const std::vector<DenseRow>& a, const std::vector<DenseRow>& b) {
  RankTracker ta, tb, stacked;
  for (const auto& row : a) {
    ta.insert(row);
    stacked.insert(row);
  }
  for (const auto& row : b) {
    tb.insert(row);
    stacked.insert(row);
  }
  return ta.rank() == tb.rank() && tb.rank() == stacked.rank();
}

}  // namespace holembed
