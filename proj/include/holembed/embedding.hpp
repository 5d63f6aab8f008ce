#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holembed/biortho.hpp"
#include "holembed/errors.hpp"
#include "holembed/rational.hpp"
#include "holembed/rng.hpp"
#include "holembed/sparse.hpp"
#include "holembed/weights.hpp"

namespace holembed {

/// Target domain of the embedded function: the plane, or an origin-centered
/// open disc of rational radius.
struct Domain {
  bool is_plane = true;
  Rational radius{0};

  static Domain plane() { return {}; }
  static Domain disc(Rational r) {
    if (r <= 0) throw InvalidParameter("disc radius must be positive");
    return {false, std::move(r)};
  }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.is_plane == b.is_plane && (a.is_plane || a.radius == b.radius);
  }
};

/// Truncated power-series image of a vector: c_n = alpha_n <x, e'_n> for
/// n < stage, together with everything needed to certify evaluations:
/// p_norm = p_0(x) and the weight sequence. The omitted remainder on
/// |z| <= k has modulus at most p_norm * tail_majorant(stage-1, k), and
/// each coefficient obeys |c_n|_1 <= alpha_n * p_norm.
struct EmbeddedImage {
  std::vector<ComplexRational> coefficients;
  std::size_t stage = 0;
  Rational p_norm{0};
  WeightSequence weights = WeightSequence::inverse_factorial(1);
  Domain domain;
};

inline EmbeddedImage embed(const SparseVector& x, const BiorthogonalSystem& sys,
                           const WeightSequence& weights, Domain domain = Domain::plane()) {
  if (sys.stage != weights.window())
    throw StageMismatch("system stage " + std::to_string(sys.stage) +
                        " differs from weight window " + std::to_string(weights.window()));
  EmbeddedImage image;
  image.stage = sys.stage;
  image.p_norm = seminorm(sys.space, 0, x);
  image.weights = weights;
  image.domain = std::move(domain);
  image.coefficients.reserve(sys.stage);
  for (std::size_t n = 0; n < sys.stage; ++n)
    image.coefficients.push_back(pair(x, sys.e_functionals[n]) * weights.value(n));
  return image;
}

struct Evaluation {
  ComplexRational value;  // Horner value of the truncated series
  Rational tail;          // certified bound on the omitted remainder's modulus
};

/// Evaluates the truncated series at z, |z|_1 <= k, and returns the exact
/// partial value together with the certified tail bound at radius k.
inline Evaluation eval_at(const EmbeddedImage& image, const ComplexRational& z,
                          const Rational& k) {
  if (k < 0) throw InvalidParameter("radius k must be non-negative");
  if (z.majorant_modulus() > k)
    throw OutsideDomain("|z|_1 = " + format_rational(z.majorant_modulus()) +
                        " exceeds the compact radius k = " + format_rational(k));
  if (!image.domain.is_plane && !(k < image.domain.radius))
    throw OutsideDomain("compact radius k = " + format_rational(k) +
                        " does not fit inside the disc of radius " +
                        format_rational(image.domain.radius));
  if (image.stage == 0) throw StageMismatch("cannot evaluate an empty image");
  Evaluation out;
  for (std::size_t n = image.stage; n-- > 0;)
    out.value = out.value * z + image.coefficients[n];
  out.tail = image.p_norm * image.weights.tail_majorant(image.stage - 1, k);
  return out;
}

/// C_k at stage N: the exact partial sum of alpha_n k^n below N plus the
/// certified tail majorant. An upper bound for the full series, monotone
/// non-increasing in N and non-decreasing in k.
inline Rational continuity_constant(const WeightSequence& weights, const Rational& k,
                                    std::size_t stage) {
  if (stage < 1 || stage > weights.window())
    throw StageMismatch("stage " + std::to_string(stage) + " outside weight window " +
                        std::to_string(weights.window()));
  Rational partial(0), power(1);
  for (std::size_t n = 0; n < stage; ++n) {
    partial += weights.value(n) * power;
    power *= k;
  }
  return Rational(partial + weights.tail_majorant(stage - 1, k));
}

struct ContinuityCheck {
  bool holds = true;
  Rational max_ratio{0};  // largest observed (|value|_1 + tail) / (C_k p_0(x))
  std::string witness;
};

/// Samples seeded (x, z) pairs with |z|_1 <= k and checks the continuity
/// estimate |value|_1 + tail <= C_k p_0(x) exactly.
inline ContinuityCheck verify_continuity(const BiorthogonalSystem& sys,
                                         const WeightSequence& weights, const Rational& k,
                                         std::size_t samples, std::uint64_t seed) {
  const Rational c_k = continuity_constant(weights, k, sys.stage);
  ContinuityCheck check;
  Xoshiro256StarStar rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    SparseVector x = random_sparse_vector(rng, sys.space.window, detail::kSampleMaxSupport,
                                          detail::kSampleCoefficientBound);
    const ComplexRational z = random_point_majorant_disc(rng, k);
    const EmbeddedImage image = embed(x, sys, weights);
    const Evaluation ev = eval_at(image, z, k);
    const Rational lhs = ev.value.majorant_modulus() + ev.tail;
    const Rational rhs = c_k * image.p_norm;
    if (lhs > rhs) {
      check.holds = false;
      if (check.witness.empty())
        check.witness = "sample " + std::to_string(s) + ": " + format_rational(lhs) + " > " +
                        format_rational(rhs);
    }
    const Rational ratio = rhs == 0 ? Rational(0) : Rational(lhs / rhs);
    if (ratio > check.max_ratio) check.max_ratio = ratio;
  }
  return check;
}

/// Preimage of the polynomial with coefficient list a_0..a_s:
/// x_P = sum_{n<=s} a_n alpha_n^{-1} e_n, so its image has exactly that
/// coefficient list again.
inline SparseVector polynomial_preimage(const std::vector<ComplexRational>& coefficients,
                                        const BiorthogonalSystem& sys,
                                        const WeightSequence& weights) {
  if (sys.stage != weights.window())
    throw StageMismatch("system stage differs from weight window");
  if (coefficients.size() > sys.stage)
    throw StageMismatch("polynomial degree " + std::to_string(coefficients.size() - 1) +
                        " not below stage " + std::to_string(sys.stage));
  SparseVector x;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (coefficients[n].is_zero()) continue;
    x += sys.e_vectors[n].scaled(coefficients[n] * Rational(1 / weights.value(n)));
  }
  return x;
}

/// Biorthogonal expansion of the truncated image: x_N = sum_{n<N} c_n
/// alpha_n^{-1} e_n. Recovers x exactly whenever x lies in the span of the
/// first N system vectors.
inline SparseVector reconstruct(const EmbeddedImage& image, const BiorthogonalSystem& sys,
                                const WeightSequence& weights, std::size_t upto) {
  if (sys.stage != weights.window() || image.stage != sys.stage)
    throw StageMismatch("image, system and weights must share the stage");
  if (upto > image.stage)
    throw StageMismatch("reconstruction depth " + std::to_string(upto) + " exceeds stage " +
                        std::to_string(image.stage));
  SparseVector x;
  for (std::size_t n = 0; n < upto; ++n) {
    if (image.coefficients[n].is_zero()) continue;
    x += sys.e_vectors[n].scaled(image.coefficients[n] * Rational(1 / weights.value(n)));
  }
  return x;
}

struct ContinuityRow {
  Rational k;
  std::size_t stage = 0;
  Rational partial_sum;
  Rational tail_bound;
  Rational c_k;
};

inline std::vector<ContinuityRow> continuity_table(const WeightSequence& weights,
                                                   const std::vector<Rational>& k_list,
                                                   const std::vector<std::size_t>& stages) {
  std::vector<ContinuityRow> rows;
  for (const Rational& k : k_list) {
    for (std::size_t stage : stages) {
      if (stage < 1 || stage > weights.window())
        throw StageMismatch("table stage " + std::to_string(stage) + " outside weight window " +
                            std::to_string(weights.window()));
      ContinuityRow row;
      row.k = k;
      row.stage = stage;
      Rational power(1);
      for (std::size_t n = 0; n < stage; ++n) {
        row.partial_sum += weights.value(n) * power;
        power *= k;
      }
      row.tail_bound = weights.tail_majorant(stage - 1, k);
      row.c_k = row.partial_sum + row.tail_bound;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace holembed
