#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "holembed/errors.hpp"
#include "holembed/rational.hpp"

namespace holembed {

enum class WeightFamily { inverse_factorial, gaussian, custom };

inline const char* to_string(WeightFamily f) {
  switch (f) {
    case WeightFamily::inverse_factorial: return "inverse_factorial";
    case WeightFamily::gaussian: return "gaussian";
    case WeightFamily::custom: return "custom";
  }
  return "?";
}

/// Positive coefficient sequence (alpha_n) with a closed-form certified
/// majorant for the tail sum_{n>N} alpha_n k^n. Built-in families:
///
///   inverse_factorial  alpha_n = 1/n!
///     tail <= alpha_{N+1} k^{N+1} / (1 - k/(N+2))      valid when k < N+2
///   gaussian           alpha_n = q^(n^2), 0 < q < 1
///     tail <= q^((N+1)^2) k^{N+1} / (1 - q^(2N+3) k)   valid when q^(2N+3) k < 1
///
/// Both come from bounding the tail by a geometric series with the first
/// omitted term's ratio. Custom sequences must bring their own majorant;
/// without one they are rejected, never silently approximated.
class WeightSequence {
 public:
  using ValidityFn = std::function<bool(std::size_t, const Rational&)>;
  using MajorantFn = std::function<Rational(std::size_t, const Rational&)>;

  static WeightSequence inverse_factorial(std::size_t window) {
    require_window(window);
    WeightSequence w;
    w.family_ = WeightFamily::inverse_factorial;
    Rational value(1);
    for (std::size_t n = 0; n < window; ++n) {
      w.values_.push_back(value);
      value /= Rational(static_cast<unsigned long>(n + 1));
    }
    return w;
  }

  static WeightSequence gaussian(const Rational& q, std::size_t window) {
    require_window(window);
    if (!(q > 0 && q < 1))
      throw InvalidParameter("gaussian weight base q = " + format_rational(q) +
                             " must satisfy 0 < q < 1");
    WeightSequence w;
    w.family_ = WeightFamily::gaussian;
    w.q_ = q;
    for (std::size_t n = 0; n < window; ++n)
      w.values_.push_back(rational_pow(q, static_cast<unsigned long>(n) *
                                              static_cast<unsigned long>(n)));
    return w;
  }

  static WeightSequence custom(std::vector<Rational> values, ValidityFn tail_valid,
                               MajorantFn tail_majorant) {
    require_window(values.size());
    if (!tail_valid || !tail_majorant)
      throw CertificationUnavailable("custom weights require a certified tail majorant");
    for (std::size_t n = 0; n < values.size(); ++n)
      if (values[n] <= 0)
        throw InvalidParameter("weight alpha_" + std::to_string(n) + " must be positive");
    WeightSequence w;
    w.family_ = WeightFamily::custom;
    w.values_ = std::move(values);
    w.tail_valid_ = std::move(tail_valid);
    w.tail_majorant_ = std::move(tail_majorant);
    return w;
  }

  WeightFamily family() const { return family_; }
  const Rational& gaussian_base() const { return q_; }
  std::size_t window() const { return values_.size(); }
  const Rational& value(std::size_t n) const { return values_[n]; }
  const std::vector<Rational>& values() const { return values_; }

  /// Whether the closed-form majorant applies to sum_{n>last_kept} alpha_n k^n.
  bool tail_valid(std::size_t last_kept, const Rational& k) const {
    if (k < 0) throw InvalidParameter("radius k must be non-negative");
    switch (family_) {
      case WeightFamily::inverse_factorial:
        return k < Rational(static_cast<unsigned long>(last_kept + 2));
      case WeightFamily::gaussian:
        return rational_pow(q_, 2 * static_cast<unsigned long>(last_kept) + 3) * k < 1;
      case WeightFamily::custom:
        return tail_valid_(last_kept, k);
    }
    return false;
  }

  /// Exact rational upper bound for sum_{n>last_kept} alpha_n k^n.
  Rational tail_majorant(std::size_t last_kept, const Rational& k) const {
    if (!tail_valid(last_kept, k))
      throw CertificationUnavailable("tail majorant not valid at stage " +
                                     std::to_string(last_kept + 1) + " for k = " +
                                     format_rational(k) + "; raise the stage");
    const auto next = static_cast<unsigned long>(last_kept + 1);
    switch (family_) {
      case WeightFamily::inverse_factorial: {
        Rational first(rational_pow(k, next) / factorial(next));
        Rational ratio(k / Rational(static_cast<unsigned long>(last_kept + 2)));
        return Rational(first / (1 - ratio));
      }
      case WeightFamily::gaussian: {
        Rational first(rational_pow(q_, next * next) * rational_pow(k, next));
        Rational ratio(rational_pow(q_, 2 * static_cast<unsigned long>(last_kept) + 3) * k);
        return Rational(first / (1 - ratio));
      }
      case WeightFamily::custom:
        return tail_majorant_(last_kept, k);
    }
    throw Error("unreachable weight family");
  }

 private:
  static void require_window(std::size_t window) {
    if (window < 1) throw InvalidParameter("weight window must be at least 1");
  }

  WeightFamily family_ = WeightFamily::custom;
  Rational q_{0};
  std::vector<Rational> values_;
  ValidityFn tail_valid_;
  MajorantFn tail_majorant_;
};

inline WeightSequence make_weights(WeightFamily family, std::size_t window) {
  switch (family) {
    case WeightFamily::inverse_factorial: return WeightSequence::inverse_factorial(window);
    case WeightFamily::gaussian:
      throw InvalidParameter("gaussian weights take a base q; use WeightSequence::gaussian");
    case WeightFamily::custom:
      throw CertificationUnavailable("custom weights require a certified tail majorant");
  }
  throw InvalidParameter("unknown weight family");
}

}  // namespace holembed
