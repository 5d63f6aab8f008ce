#include <cstdint>
#include <vector>

#include <catch_amalgamated.hpp>

#include <holembed/biortho.hpp>
#include <holembed/linalg.hpp>

using namespace holembed;

namespace {

KotheMatrix rapid(std::size_t window) {
  return make_kothe(KotheFamily::rapid_decrease, 2, window);
}

bool pairing_table_is_identity(const std::vector<SparseVector>& xs,
                               const std::vector<SparseFunctional>& us) {
  for (std::size_t n = 0; n < xs.size(); ++n)
    for (std::size_t m = 0; m < us.size(); ++m)
      if (!(pair(xs[n], us[m]) == ComplexRational(n == m ? 1 : 0))) return false;
  return true;
}

}  // namespace

TEST_CASE("canonical family is the delta family") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 123, 3, 8);
  REQUIRE(fam.vectors.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(fam.vectors[n] == SparseVector::delta(n));
    CHECK(fam.functionals[n] == SparseFunctional::delta(n));
  }
}

TEST_CASE("triangular family replays its seeded coefficients") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, 1, 2, 8);
  // generation order: all vectors first, then all functionals, one stream
  Xoshiro256StarStar replay(1);
  const Rational c_vec = random_rational(replay, 8);
  const Rational c_fun = random_rational(replay, 8);

  CHECK(fam.vectors[0] == SparseVector::delta(0));
  SparseVector y1 = SparseVector::delta(1);
  y1.set(0, ComplexRational(c_vec));
  CHECK(fam.vectors[1] == y1);

  SparseFunctional v1 = SparseFunctional::delta(1);
  v1.set(0, ComplexRational(c_fun));
  CHECK(fam.functionals[1] == v1);
}

TEST_CASE("family generation validates its arguments") {
  CHECK_THROWS_AS(generate_dense_family(FamilyKind::triangular, 1, 0, 8), InvalidParameter);
  CHECK_THROWS_AS(generate_dense_family(FamilyKind::triangular, 1, 4, 0), InvalidParameter);
}

TEST_CASE("canonical family is already biorthogonal") {
  const RawBiorthogonal raw =
      biorthogonalize(generate_dense_family(FamilyKind::canonical, 0, 3, 1), 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(raw.x_vectors[n] == SparseVector::delta(n));
    CHECK(raw.x_functionals[n] == SparseFunctional::delta(n));
  }
  CHECK(raw.consumed_y == std::vector<std::size_t>{0, 1, 2});
  CHECK(raw.consumed_v == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("hand-worked two-step elimination") {
  // y = [d0, d0+d1], v = [d0, d1]: pairing matrix [[1,0],[1,1]]
  DenseFamilyPair fam;
  fam.vectors = {SparseVector::delta(0), SparseVector::delta(0) + SparseVector::delta(1)};
  fam.functionals = {SparseFunctional::delta(0), SparseFunctional::delta(1)};
  const RawBiorthogonal raw = biorthogonalize(fam, 2);
  CHECK(raw.x_vectors[0] == SparseVector::delta(0));
  CHECK(raw.x_vectors[1] == SparseVector::delta(1));
  CHECK(raw.x_functionals[0] == SparseFunctional::delta(0));
  CHECK(raw.x_functionals[1] == SparseFunctional::delta(1));
}

TEST_CASE("pairing table is the identity for a random triangular family") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, 7, 32, 8);
  const RawBiorthogonal raw = biorthogonalize(fam, 32);
  CHECK(pairing_table_is_identity(raw.x_vectors, raw.x_functionals));
}

TEST_CASE("elimination reports exhaustion when no pivot exists") {
  DenseFamilyPair fam;
  fam.vectors = {SparseVector::delta(0), SparseVector::delta(1)};
  fam.functionals = {SparseFunctional::delta(0), SparseFunctional::delta(0)};
  CHECK_THROWS_AS(biorthogonalize(fam, 2), ExhaustedWithoutPivot);
}

TEST_CASE("stage beyond the family length is rejected") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 0, 3, 1);
  CHECK_THROWS_AS(biorthogonalize(fam, 4), StageMismatch);
}

TEST_CASE("pivots walk the natural order across seeds") {
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
    const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, seed, 16, 8);
    const RawBiorthogonal raw = biorthogonalize(fam, 16);
    for (std::size_t n = 0; n < 16; ++n) {
      CHECK(raw.consumed_y[n] == n);
      CHECK(raw.consumed_v[n] == n);
    }
  }
}

TEST_CASE("every prefix of the elimination preserves the consumed span") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, 3, 12, 8);
  const RawBiorthogonal raw = biorthogonalize(fam, 12);
  RankTracker x_rank, y_rank, stacked;
  for (std::size_t n = 0; n < 12; ++n) {
    const DenseRow x_row = to_dense_row(raw.x_vectors[n], 12);
    const DenseRow y_row = to_dense_row(fam.vectors[raw.consumed_y[n]], 12);
    x_rank.insert(x_row);
    y_rank.insert(y_row);
    stacked.insert(x_row);
    stacked.insert(y_row);
    CHECK(x_rank.rank() == y_rank.rank());
    CHECK(stacked.rank() == x_rank.rank());
  }
}

TEST_CASE("normalization constants match the closed forms") {
  const RawBiorthogonal raw =
      biorthogonalize(generate_dense_family(FamilyKind::canonical, 0, 4, 1), 4);

  const BiorthogonalSystem on_rapid = normalize(raw, rapid(4));
  for (std::size_t n = 0; n < 4; ++n) {
    const Rational np1(static_cast<unsigned long>(n + 1));
    CHECK(on_rapid.m_constants[n] == Rational(1 / np1));
    CHECK(on_rapid.e_functionals[n] == SparseFunctional::delta(n, ComplexRational(np1)));
    CHECK(on_rapid.e_vectors[n] == SparseVector::delta(n, ComplexRational(Rational(1 / np1))));
    CHECK(pair(on_rapid.e_vectors[n], on_rapid.e_functionals[n]) == ComplexRational(1));
  }

  const BiorthogonalSystem on_disc = normalize(raw, make_kothe(KotheFamily::disc_type, 1, 4));
  for (std::size_t n = 0; n < 4; ++n)
    CHECK(on_disc.m_constants[n] == rational_pow(Rational(2), static_cast<unsigned long>(n)));
}

TEST_CASE("normalized triangular systems stay biorthogonal") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, 9, 10, 8);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 10), rapid(10));
  CHECK(pairing_table_is_identity(sys.e_vectors, sys.e_functionals));
}

TEST_CASE("all four conditions certify for the canonical system") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 0, 8, 1);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 8), rapid(8));
  const ConditionReport report = verify_conditions(sys, fam, 100, 5);
  CHECK(report.spans_vectors);
  CHECK(report.equicontinuous);
  CHECK(report.spans_functionals);
  CHECK(report.biorthogonal);
  CHECK(report.all());
  CHECK(report.witnesses.empty());
  CHECK(report.stage == 8);
  CHECK(report.m_constants == sys.m_constants);
}

TEST_CASE("all four conditions certify for a triangular system with many samples") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, 7, 32, 8);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 32), rapid(32));
  const ConditionReport report = verify_conditions(sys, fam, 500, 5);
  CHECK(report.all());
}

TEST_CASE("a doubled functional breaks the pairing table with a witness") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 0, 4, 1);
  BiorthogonalSystem sys = normalize(biorthogonalize(fam, 4), rapid(4));
  sys.e_functionals[0] = sys.e_functionals[0].scaled(Rational(2));

  const ConditionReport report = verify_conditions(sys, fam, 50, 5);
  CHECK_FALSE(report.biorthogonal);
  CHECK_FALSE(report.all());
  bool found = false;
  for (const auto& w : report.witnesses)
    if (w.condition == "iv" && w.detail.find("<e_0, e'_0> = (2, 0)") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("condition outcomes are invariant under the coefficient bound") {
  for (std::uint64_t bound : {2ULL, 8ULL, 64ULL}) {
    const DenseFamilyPair fam = generate_dense_family(FamilyKind::triangular, 5, 8, bound);
    const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 8), rapid(8));
    const ConditionReport report = verify_conditions(sys, fam, 100, 5);
    CHECK(report.all());
  }
}

TEST_CASE("equicontinuity is attained at every canonical index") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 0, 6, 1);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 6), rapid(6));
  for (std::size_t n = 0; n < 6; ++n) {
    const SparseVector x = SparseVector::delta(n);
    CHECK(pair(x, sys.e_functionals[n]).majorant_modulus() == seminorm(sys.space, 0, x));
  }
}

TEST_CASE("functionals separate random vectors of the span") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 0, 6, 1);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 6), rapid(6));
  CHECK(check_norm_from_functionals(sys, 50, 17));
  // x = delta_2 lies in the span; some functional must see it
  CHECK(!pair(SparseVector::delta(2), sys.e_functionals[2]).is_zero());

  const DenseFamilyPair tri = generate_dense_family(FamilyKind::triangular, 7, 12, 8);
  const BiorthogonalSystem tri_sys = normalize(biorthogonalize(tri, 12), rapid(12));
  CHECK(check_norm_from_functionals(tri_sys, 200, 17));
}

TEST_CASE("verification rejects a family shorter than the system") {
  const DenseFamilyPair fam = generate_dense_family(FamilyKind::canonical, 0, 4, 1);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, 4), rapid(4));
  const DenseFamilyPair shorter = generate_dense_family(FamilyKind::canonical, 0, 2, 1);
  CHECK_THROWS_AS(verify_conditions(sys, shorter, 10, 1), StageMismatch);
}
