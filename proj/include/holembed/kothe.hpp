#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holembed/errors.hpp"
#include "holembed/rational.hpp"
#include "holembed/sparse.hpp"

namespace holembed {

enum class KotheFamily { rapid_decrease, disc_type, custom };

inline const char* to_string(KotheFamily f) {
  switch (f) {
    case KotheFamily::rapid_decrease: return "rapid_decrease";
    case KotheFamily::disc_type: return "disc_type";
    case KotheFamily::custom: return "custom";
  }
  return "?";
}

/// Köthe echelon matrix of order 1 on a finite window: J rows of strictly
/// positive weights a(j,n), nondecreasing in j, each of width N. Row j
/// induces the seminorm p_j(x) = sum_n a(j,n) |x_n|_1; row 0 is the norm.
///
/// The struct itself is a plain value; the checked factories below enforce
/// the positivity and ladder invariants. from_rows_unchecked exists so that
/// diagnostic checks (check_continuous_norm) have broken inputs to report on.
struct KotheMatrix {
  KotheFamily family = KotheFamily::custom;
  std::size_t grades = 0;  // J
  std::size_t window = 0;  // N
  std::vector<std::vector<Rational>> rows;

  const Rational& weight(std::size_t j, std::size_t n) const { return rows[j][n]; }

  static KotheMatrix from_rows_unchecked(std::vector<std::vector<Rational>> rows_in) {
    KotheMatrix m;
    m.family = KotheFamily::custom;
    m.grades = rows_in.size();
    m.window = rows_in.empty() ? 0 : rows_in.front().size();
    m.rows = std::move(rows_in);
    return m;
  }
};

inline void validate_kothe(const KotheMatrix& m) {
  if (m.grades < 1 || m.window < 1)
    throw InvalidParameter("Köthe matrix needs at least one grade and one column");
  if (m.rows.size() != m.grades)
    throw InvalidParameter("Köthe matrix row count does not match grades");
  for (std::size_t j = 0; j < m.grades; ++j) {
    if (m.rows[j].size() != m.window)
      throw InvalidParameter("Köthe matrix rows have unequal widths");
    for (std::size_t n = 0; n < m.window; ++n) {
      if (m.rows[j][n] <= 0)
        throw NonPositiveWeight("weight a(" + std::to_string(j) + "," + std::to_string(n) +
                                ") = " + format_rational(m.rows[j][n]) + " is not positive");
    }
  }
  for (std::size_t j = 0; j + 1 < m.grades; ++j) {
    for (std::size_t n = 0; n < m.window; ++n) {
      if (m.rows[j][n] > m.rows[j + 1][n])
        throw LadderViolation("a(" + std::to_string(j) + "," + std::to_string(n) + ") = " +
                              format_rational(m.rows[j][n]) + " exceeds a(" +
                              std::to_string(j + 1) + "," + std::to_string(n) + ") = " +
                              format_rational(m.rows[j + 1][n]));
    }
  }
}

/// Built-in families, materialized as exact rationals:
///   rapid_decrease  a(j,n) = (n+1)^(j+1)
///   disc_type       a(j,n) = ((j+1)/(j+2))^n
inline KotheMatrix make_kothe(KotheFamily family, std::size_t grades, std::size_t window) {
  if (family == KotheFamily::custom)
    throw InvalidParameter("custom Köthe matrices take explicit rows; use make_kothe_custom");
  if (grades < 1 || window < 1)
    throw InvalidParameter("Köthe matrix needs at least one grade and one column");
  KotheMatrix m;
  m.family = family;
  m.grades = grades;
  m.window = window;
  m.rows.resize(grades);
  for (std::size_t j = 0; j < grades; ++j) {
    auto& row = m.rows[j];
    row.reserve(window);
    if (family == KotheFamily::rapid_decrease) {
      for (std::size_t n = 0; n < window; ++n) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n + 1),
                      static_cast<unsigned long>(j + 1));
        row.emplace_back(std::move(p));
      }
    } else {
      Rational ratio(static_cast<unsigned long>(j + 1), static_cast<unsigned long>(j + 2));
      Rational value(1);
      for (std::size_t n = 0; n < window; ++n) {
        row.push_back(value);
        value *= ratio;
      }
    }
  }
  validate_kothe(m);
  return m;
}

inline KotheMatrix make_kothe_custom(std::vector<std::vector<Rational>> rows) {
  KotheMatrix m = KotheMatrix::from_rows_unchecked(std::move(rows));
  validate_kothe(m);
  return m;
}

/// p_j(x) = sum_n a(j,n) |x_n|_1, exact. Grade 0 is the norm p.
inline Rational seminorm(const KotheMatrix& m, std::size_t grade, const SparseVector& x) {
  if (grade >= m.grades)
    throw std::out_of_range("seminorm grade " + std::to_string(grade) + " not below " +
                            std::to_string(m.grades));
  Rational sum(0);
  for (const auto& [n, c] : x.entries()) {
    if (n >= m.window)
      throw WindowExceeded("coordinate " + std::to_string(n) + " outside window of size " +
                           std::to_string(m.window));
    sum += m.weight(grade, n) * c.majorant_modulus();
  }
  return sum;
}

struct NormCheck {
  bool ok = false;
  std::optional<std::size_t> witness;  // offending index when !ok
};

/// Row 0 strictly positive across the window <=> p_0 is a norm there.
inline NormCheck check_continuous_norm(const KotheMatrix& m) {
  for (std::size_t n = 0; n < m.window; ++n) {
    if (!(m.rows.empty()) && m.rows[0][n] <= 0) return {false, n};
  }
  return {true, std::nullopt};
}

/// The least constant in the |.|_1 calculus dominating u against the norm:
/// m_1(u) = max_n |u_n|_1 / a(0,n) over the support. It satisfies
/// |<x,u>|_1 <= m_1(u) p_0(x) for every x, by submultiplicativity of |.|_1.
inline Rational dual_bound(const KotheMatrix& m, const SparseFunctional& u) {
  if (u.is_zero()) throw ZeroFunctional("dual bound of the zero functional");
  Rational best(0);
  for (const auto& [n, c] : u.entries()) {
    if (n >= m.window)
      throw WindowExceeded("coordinate " + std::to_string(n) + " outside window of size " +
                           std::to_string(m.window));
    Rational candidate(c.majorant_modulus() / m.weight(0, n));
    if (candidate > best) best = candidate;
  }
  return best;
}

}  // namespace holembed
