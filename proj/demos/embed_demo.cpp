// Walkthrough of the core pipeline on a small triangular family: build a
// biorthogonal system over a rapidly decreasing space, embed a vector as a
// truncated power series, and evaluate it with a certified tail bound.

#include <cstddef>
#include <iostream>

#include <holembed/holembed.hpp>

int main() {
  using namespace holembed;

  constexpr std::size_t stage = 12;
  const KotheMatrix space = make_kothe(KotheFamily::rapid_decrease, 3, stage);
  const DenseFamilyPair fam =
      generate_dense_family(FamilyKind::triangular, /*seed=*/7, stage, /*bound=*/8);
  const BiorthogonalSystem sys = normalize(biorthogonalize(fam, stage), space);

  std::cout << "system of " << sys.stage << " biorthogonal pairs; m-constants:";
  for (const auto& m : sys.m_constants) std::cout << ' ' << format_rational(m);
  std::cout << "\n\n";

  // x = e_0 + (1/2) e_3: its image has coefficients alpha_n at exactly n=0,3.
  SparseVector x = sys.e_vectors[0];
  x += sys.e_vectors[3].scaled(ComplexRational(Rational(1, 2)));

  const WeightSequence weights = WeightSequence::inverse_factorial(stage);
  const EmbeddedImage image = embed(x, sys, weights);
  std::cout << "p_0(x) = " << format_rational(image.p_norm) << "\ncoefficients:";
  for (const auto& c : image.coefficients) std::cout << ' ' << format_complex(c);
  std::cout << "\n\n";

  const ComplexRational z{Rational(1, 2), Rational(1, 4)};
  const Rational k(1);
  const Evaluation ev = eval_at(image, z, k);
  std::cout << "value at " << format_complex(z) << " = " << format_complex(ev.value)
            << "\n|omitted remainder| <= " << format_rational(ev.tail) << " (at |z|_1 <= "
            << format_rational(k) << ", C_k = "
            << format_rational(continuity_constant(weights, k, stage)) << ")\n";
  return 0;
}
