#pragma once

// Lifting semisimple and cosemisimple Hopf algebras, their morphisms and
// R-matrices from F_q to GR(p^n, m), one p-adic digit at a time.

#include <cstdint>
#include <string>
#include <vector>

#include "hopfkit/cohomology.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct LiftStrategy {
  enum class Kind { Canonical, Perturbed };
  Kind kind = Kind::Canonical;
  std::uint64_t seed = 0;

  static LiftStrategy canonical() { return {}; }
  static LiftStrategy perturbed(std::uint64_t seed) { return {Kind::Perturbed, seed}; }
  /// "canonical" or "perturbed:SEED".
  static LiftStrategy parse(const std::string& text);
  std::string to_string() const;
};

/// One record per precision step.
struct LiftStep {
  unsigned precision = 0;              // precision reached by this step
  std::size_t obstruction_support = 0;  // nonzero coefficients of the obstruction cochain
  std::size_t correction_support = 0;   // nonzero coefficients of the chosen (μ, δ)
  std::size_t solver_rank = 0;          // rank of d: C^1 -> C^2 (0 when no solve was needed)
  double seconds = 0;
};

struct LiftState {
  HopfPresentation base;
  unsigned precision = 1;
  HopfPresentation current;
  std::vector<LiftStep> transcript;
};

/// Product and coproduct of a lift candidate.
struct RawPair {
  MultiMap mult;
  MultiMap comult;
};

struct ObstructionReport {
  TotalCochain c;  // degree 2, over the base field
  bool cocycle_ok = false;
};

/// Throws NotSemisimpleOrCosemisimple (or InvalidArgument for a non-Hopf base).
void require_liftable(const HopfPresentation& base);

/// (m, Δ) of `current` (precision k) read at precision k + 1, plus p^k times
/// seeded pseudorandom tensors for the perturbed strategy.
RawPair extend_pair(const HopfPresentation& current, const LiftStrategy& strategy);
/// extend_pair from the base to precision 2, after require_liftable.
RawPair initial_lift(const HopfPresentation& base, const LiftStrategy& strategy);

/// The three associativity / compatibility / coassociativity defects of a pair
/// (no division).
TotalCochain associator_defect(const RawPair& pair);
/// Defect divided by p^k, where pair lives at precision k + 1. Throws NotDivisible.
ObstructionReport obstruction(const RawPair& pair, const BialgebraComplex& base_complex);

struct Correction {
  HopfPresentation bialgebra;  // antipode left zero
  std::size_t correction_support = 0;
  std::size_t solver_rank = 0;
};
/// Removes the obstruction and recovers unit and counit.
Correction correct(const RawPair& pair, const ObstructionReport& report, const BialgebraComplex& base_complex);

/// Unique S with m(S ⊗ I)Δ = unit ∘ counit, by Hensel lifting.
MultiMap solve_antipode(const HopfPresentation& bialgebra);

LiftState lift(const HopfPresentation& base, unsigned precision, const LiftStrategy& strategy);
/// Same, reusing the factorizations cached in the complex of (A, A, id).
LiftState lift(const BialgebraComplex& base_complex, unsigned precision, const LiftStrategy& strategy);

/// η with η ≡ id mod p that carries s1.current onto s2.current.
MultiMap reconcile(const LiftState& s1, const LiftState& s2);

/// Unique lift of a morphism between the bases of two lifts.
HopfMorphism lift_morphism(const HopfMorphism& phi, const LiftState& lift_a, const LiftState& lift_b);

/// The lift of `lift_a` seen through dual_cop at every precision.
LiftState dual_cop_lift(const LiftState& lift_a);

/// Unique quasitriangular lift of R, through θ_R.
MultiMap lift_rmatrix(const HopfPresentation& h, const MultiMap& r, const LiftState& lift_a);

}  // namespace hopfkit
