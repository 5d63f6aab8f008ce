#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holembed/errors.hpp"
#include "holembed/kothe.hpp"
#include "holembed/linalg.hpp"
#include "holembed/rational.hpp"
#include "holembed/rng.hpp"
#include "holembed/sparse.hpp"

namespace holembed {

enum class FamilyKind { canonical, triangular };

inline const char* to_string(FamilyKind k) {
  return k == FamilyKind::canonical ? "canonical" : "triangular";
}

/// Paired generating families (y_n) and (v_n), the finite-stage stand-ins
/// for a dense vector family and a weak*-dense functional family.
///
///   canonical   y_n = v_n = delta_n
///   triangular  y_n = delta_n + sum_{k<n} c_k delta_k (v_n likewise), with
///               seeded random rational c_k, so every prefix spans the same
///               space as the canonical prefix by a unitriangular change of
///               basis.
struct DenseFamilyPair {
  FamilyKind kind = FamilyKind::canonical;
  std::uint64_t seed = 0;
  std::uint64_t coefficient_bound = 1;
  std::vector<SparseVector> vectors;
  std::vector<SparseFunctional> functionals;
};

inline DenseFamilyPair generate_dense_family(FamilyKind kind, std::uint64_t seed,
                                             std::size_t stage, std::uint64_t bound) {
  if (stage < 1) throw InvalidParameter("family stage must be at least 1");
  if (bound < 1) throw InvalidParameter("coefficient bound must be at least 1");
  DenseFamilyPair fam;
  fam.kind = kind;
  fam.seed = seed;
  fam.coefficient_bound = bound;
  fam.vectors.reserve(stage);
  fam.functionals.reserve(stage);
  if (kind == FamilyKind::canonical) {
    for (std::size_t n = 0; n < stage; ++n) {
      fam.vectors.push_back(SparseVector::delta(n));
      fam.functionals.push_back(SparseFunctional::delta(n));
    }
    return fam;
  }
  Xoshiro256StarStar rng(seed);
  for (std::size_t n = 0; n < stage; ++n) {
    SparseVector y = SparseVector::delta(n);
    for (std::size_t k = 0; k < n; ++k) y.set(k, ComplexRational(random_rational(rng, bound)));
    fam.vectors.push_back(std::move(y));
  }
  for (std::size_t n = 0; n < stage; ++n) {
    SparseFunctional v = SparseFunctional::delta(n);
    for (std::size_t k = 0; k < n; ++k) v.set(k, ComplexRational(random_rational(rng, bound)));
    fam.functionals.push_back(std::move(v));
  }
  return fam;
}

/// Output of the two-sided elimination: <x_n, x'_m> = delta_{n,m} exactly,
/// with span(x_0..x_{n-1}) equal to the span of the consumed y's at every
/// prefix (likewise on the functional side).
struct RawBiorthogonal {
  std::vector<SparseVector> x_vectors;
  std::vector<SparseFunctional> x_functionals;
  std::vector<std::size_t> consumed_y;
  std::vector<std::size_t> consumed_v;
};

/// Two-sided elimination with lexicographic pivot search. Residuals of the
/// not-yet-consumed rows are kept up to date in place; because each accepted
/// pair is biorthogonal to everything built before it, the in-place residual
/// equals the textbook one y_i - sum_{k<n} <y_i, x'_k> x_k exactly.
inline RawBiorthogonal biorthogonalize(const DenseFamilyPair& fam, std::size_t stage) {
  if (stage > fam.vectors.size() || stage > fam.functionals.size())
    throw StageMismatch("stage " + std::to_string(stage) + " exceeds family length");
  std::vector<SparseVector> residual_y(fam.vectors.begin(), fam.vectors.begin() + stage);
  std::vector<SparseFunctional> residual_v(fam.functionals.begin(),
                                           fam.functionals.begin() + stage);
  std::vector<bool> y_used(stage, false), v_used(stage, false);
  RawBiorthogonal out;
  for (std::size_t n = 0; n < stage; ++n) {
    std::size_t pick_i = stage, pick_j = stage;
    ComplexRational pivot;
    for (std::size_t i = 0; i < stage && pick_i == stage; ++i) {
      if (y_used[i]) continue;
      for (std::size_t j = 0; j < stage; ++j) {
        if (v_used[j]) continue;
        ComplexRational candidate = pair(residual_y[i], residual_v[j]);
        if (!candidate.is_zero()) {
          pick_i = i;
          pick_j = j;
          pivot = std::move(candidate);
          break;
        }
      }
    }
    if (pick_i == stage)
      throw ExhaustedWithoutPivot("no candidate pair has nonzero residual pairing at step " +
                                  std::to_string(n));
    SparseVector x = residual_y[pick_i];
    SparseFunctional x_dual;
    for (const auto& [idx, c] : residual_v[pick_j].entries()) x_dual.set(idx, c / pivot);
    y_used[pick_i] = true;
    v_used[pick_j] = true;
    for (std::size_t i = 0; i < stage; ++i) {
      if (y_used[i]) continue;
      residual_y[i] -= x.scaled(pair(residual_y[i], x_dual));
    }
    for (std::size_t j = 0; j < stage; ++j) {
      if (v_used[j]) continue;
      residual_v[j] -= x_dual.scaled(pair(x, residual_v[j]));
    }
    out.x_vectors.push_back(std::move(x));
    out.x_functionals.push_back(std::move(x_dual));
    out.consumed_y.push_back(pick_i);
    out.consumed_v.push_back(pick_j);
  }
  return out;
}

/// Normalized biorthogonal system over a fixed space: e_n = m(n) x_n and
/// e'_n = x'_n / m(n) with m(n) the exact dual bound of x'_n, so that
/// <e_n, e'_m> stays delta_{n,m} and |<x, e'_n>|_1 <= p_0(x) for every x.
struct BiorthogonalSystem {
  KotheMatrix space;
  std::vector<SparseVector> e_vectors;
  std::vector<SparseFunctional> e_functionals;
  std::vector<Rational> m_constants;
  std::size_t stage = 0;
};

inline BiorthogonalSystem normalize(const RawBiorthogonal& raw, const KotheMatrix& space) {
  BiorthogonalSystem sys;
  sys.space = space;
  sys.stage = raw.x_vectors.size();
  sys.e_vectors.reserve(sys.stage);
  sys.e_functionals.reserve(sys.stage);
  sys.m_constants.reserve(sys.stage);
  for (std::size_t n = 0; n < sys.stage; ++n) {
    Rational m = dual_bound(space, raw.x_functionals[n]);
    sys.e_vectors.push_back(raw.x_vectors[n].scaled(m));
    sys.e_functionals.push_back(raw.x_functionals[n].scaled(Rational(1 / m)));
    sys.m_constants.push_back(std::move(m));
  }
  return sys;
}

struct ConditionWitness {
  std::string condition;  // "i" | "ii" | "iii" | "iv"
  std::string detail;
};

/// The four finite-stage certificates of a biorthogonal system:
///   (i)   the e-family spans the same space as the generating y-family
///   (ii)  equicontinuity |<x, e'_n>|_1 <= p_0(x), sampled
///   (iii) the e'-family spans the same space as the generating v-family
///   (iv)  the full pairing table equals the identity
/// (i) and (iii) are exact rank-equality certificates, the finite-stage
/// surrogate for density of the spans; this substitution is what the report
/// means by a span certificate.
struct ConditionReport {
  std::size_t stage = 0;
  bool spans_vectors = false;      // (i)
  bool equicontinuous = false;     // (ii)
  bool spans_functionals = false;  // (iii)
  bool biorthogonal = false;       // (iv)
  std::vector<ConditionWitness> witnesses;
  std::vector<Rational> m_constants;

  bool all() const {
    return spans_vectors && equicontinuous && spans_functionals && biorthogonal;
  }
};

namespace detail {
constexpr std::size_t kMaxWitnesses = 8;
constexpr std::uint64_t kSampleCoefficientBound = 8;
constexpr std::size_t kSampleMaxSupport = 8;
}  // namespace detail

inline ConditionReport verify_conditions(const BiorthogonalSystem& sys,
                                         const DenseFamilyPair& fam, std::size_t samples,
                                         std::uint64_t seed) {
  if (fam.vectors.size() < sys.stage || fam.functionals.size() < sys.stage)
    throw StageMismatch("generating family shorter than the system stage");
  ConditionReport report;
  report.stage = sys.stage;
  report.m_constants = sys.m_constants;
  const std::size_t width = sys.space.window;

  std::vector<DenseRow> e_rows, y_rows, ed_rows, v_rows;
  for (std::size_t n = 0; n < sys.stage; ++n) {
    e_rows.push_back(to_dense_row(sys.e_vectors[n], width));
    y_rows.push_back(to_dense_row(fam.vectors[n], width));
    ed_rows.push_back(to_dense_row(sys.e_functionals[n], width));
    v_rows.push_back(to_dense_row(fam.functionals[n], width));
  }
  report.spans_vectors = span_equal(e_rows, y_rows);
  if (!report.spans_vectors)
    report.witnesses.push_back(
        {"i", "rank mismatch between the e-family and the generating vectors"});
  report.spans_functionals = span_equal(ed_rows, v_rows);
  if (!report.spans_functionals)
    report.witnesses.push_back(
        {"iii", "rank mismatch between the e'-family and the generating functionals"});

  report.equicontinuous = true;
  Xoshiro256StarStar rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    SparseVector x = random_sparse_vector(rng, width, detail::kSampleMaxSupport,
                                          detail::kSampleCoefficientBound);
    const Rational p = seminorm(sys.space, 0, x);
    for (std::size_t n = 0; n < sys.stage; ++n) {
      const Rational lhs = pair(x, sys.e_functionals[n]).majorant_modulus();
      if (lhs > p) {
        report.equicontinuous = false;
        if (report.witnesses.size() < detail::kMaxWitnesses)
          report.witnesses.push_back({"ii", "sample " + std::to_string(s) + ": |<x, e'_" +
                                                std::to_string(n) + ">|_1 = " +
                                                format_rational(lhs) + " exceeds p_0(x) = " +
                                                format_rational(p)});
      }
    }
  }

  report.biorthogonal = true;
  for (std::size_t n = 0; n < sys.stage; ++n) {
    for (std::size_t m = 0; m < sys.stage; ++m) {
      const ComplexRational value = pair(sys.e_vectors[n], sys.e_functionals[m]);
      const ComplexRational expected(n == m ? 1 : 0);
      if (!(value == expected)) {
        report.biorthogonal = false;
        if (report.witnesses.size() < detail::kMaxWitnesses)
          report.witnesses.push_back({"iv", "<e_" + std::to_string(n) + ", e'_" +
                                                std::to_string(m) + "> = " +
                                                format_complex(value)});
      }
    }
  }
  return report;
}

/// Finite-stage form of "the functional family separates points": for seeded
/// random nonzero x in span{e_0..e_{stage-1}}, some e'_n pairs nonzero.
inline bool check_norm_from_functionals(const BiorthogonalSystem& sys, std::size_t trials,
                                        std::uint64_t seed) {
  Xoshiro256StarStar rng(seed);
  const std::size_t max_support = sys.stage < 6 ? sys.stage : std::size_t{6};
  for (std::size_t t = 0; t < trials; ++t) {
    SparseVector coefficients;
    do {
      coefficients = random_sparse_vector(rng, sys.stage, max_support,
                                          detail::kSampleCoefficientBound);
    } while (coefficients.is_zero());
    SparseVector x;
    for (const auto& [n, beta] : coefficients.entries()) x += sys.e_vectors[n].scaled(beta);
    bool separated = false;
    for (std::size_t n = 0; n < sys.stage && !separated; ++n)
      separated = !pair(x, sys.e_functionals[n]).is_zero();
    if (!separated) return false;
  }
  return true;
}

}  // namespace holembed
