#pragma once

// Finite-dimensional Hopf algebras given by structure constants.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/coeffring.hpp"
#include "hopfkit/tensor.hpp"

namespace hopfkit {

/// A Hopf algebra (or bialgebra candidate) on the basis e_0, ..., e_{dim-1}.
struct HopfPresentation {
  Ring ring;
  std::size_t dim = 0;
  MultiMap mult;      // 2 -> 1
  MultiMap unit;      // 0 -> 1
  MultiMap comult;    // 1 -> 2
  MultiMap counit;    // 1 -> 0
  MultiMap antipode;  // 1 -> 1

  friend bool operator==(const HopfPresentation&, const HopfPresentation&) = default;
};

/// Throws ArityMismatch / DescriptorMismatch when the five tensors do not
/// share ring and dimension or have the wrong arities.
void check_shapes(const HopfPresentation& h);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t nonzero_residuals = 0;
  std::string first_failure;  // basis inputs and output coordinate of the first nonzero residual
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool verified() const;
  /// Everything except the two antipode identities.
  bool bialgebra_verified() const;
  const AxiomCheck& get(const std::string& name) const;
};

/// Names of the ten checked identities, in report order.
inline constexpr const char* kAxiomNames[] = {
    "associativity", "unit",           "coassociativity", "counit",       "comult_multiplicative",
    "counit_multiplicative", "comult_unit", "counit_unit", "left_antipode", "right_antipode"};

AxiomReport verify_hopf(const HopfPresentation& h);

bool is_commutative(const HopfPresentation& h);
bool is_cocommutative(const HopfPresentation& h);

/// Group algebra on a multiplication table (table[i][j] = index of g_i g_j).
HopfPresentation group_algebra(const Ring& ring, const std::vector<std::vector<std::size_t>>& table);

/// Names accepted by builtin_group_table: C2..C8, C2xC2, S3, D4, Q8.
std::vector<std::string> builtin_group_names();
/// Multiplication table of a built-in group; the identity has index 0.
std::vector<std::vector<std::size_t>> builtin_group_table(std::string_view name);

/// Transposes every structure tensor: the dual Hopf algebra in the dual basis.
HopfPresentation dual(const HopfPresentation& h);
/// dual(h) with the opposite comultiplication; its antipode is the transpose of S^{-1}.
HopfPresentation dual_cop(const HopfPresentation& h);
/// Coefficientwise change of ring (digit lift or reduction) of every tensor.
HopfPresentation change_ring(const HopfPresentation& h, const Ring& target);

struct DoubleResult {
  HopfPresentation double_algebra;
  MultiMap r_matrix;  // 0 -> 2 on the double
};

/// Drinfeld double on the basis f_i ⊗ e_a (flat index i * dim + a).
DoubleResult drinfeld_double(const HopfPresentation& h);

/// Built-in presentation by name: "G" for the group algebra of a built-in
/// group, "dual:G" for its dual, "double:G" for its Drinfeld double.
HopfPresentation builtin_presentation(std::string_view name, const Ring& ring);

enum class IterateDirection { Product, Coproduct };
/// Left-nested iterated product m_q (q -> 1) or coproduct Δ_q (1 -> q).
MultiMap iterate(const HopfPresentation& h, unsigned q, IterateDirection direction);

struct AntipodeOrders {
  std::size_t order = 0;     // of S
  std::size_t sq_order = 0;  // of S^2
};
AntipodeOrders antipode_orders(const HopfPresentation& h);
RingElement trace_antipode_squared(const HopfPresentation& h);

enum class Side { Left, Right };
/// Basis of {Λ : aΛ = ε(a)Λ} (left) or {Λ : Λa = ε(a)Λ} (right).
std::vector<std::vector<RingElement>> integral(const HopfPresentation& h, Side side);
bool is_semisimple(const HopfPresentation& h);
bool is_cosemisimple(const HopfPresentation& h);

/// Upper bound on q = p^m for exhaustive root search; HOPFKIT_ROOT_SEARCH_BOUND overrides.
std::uint64_t root_search_bound();

/// Multiplicative functionals χ with χ(1) = 1 on the algebra (mult, unit).
std::vector<std::vector<RingElement>> algebra_characters(const Ring& field, std::size_t dim, const MultiMap& mult,
                                                         std::span<const RingElement> unit);
/// Grouplike elements, unit first, the rest in lexicographic coefficient order.
std::vector<std::vector<RingElement>> grouplikes(const HopfPresentation& h, bool central_only);

struct QtReport {
  bool quasitriangular = false;
  bool triangular = false;
  std::vector<std::string> failures;
};
QtReport verify_qt(const HopfPresentation& h, const MultiMap& r);

struct DrinfeldElement {
  std::vector<RingElement> u;
  bool equals_antipode = false;  // S(u) = u
  bool squares_to_one = false;   // u^2 = 1
};
DrinfeldElement drinfeld_u(const HopfPresentation& h, const MultiMap& r);

struct HopfMorphism {
  HopfPresentation source;
  HopfPresentation target;
  MultiMap map;  // 1 -> 1, source.dim -> target.dim
};

struct MorphismReport {
  bool multiplicative = false;
  bool comultiplicative = false;
  bool unital = false;
  bool counital = false;
  bool verified() const { return multiplicative && comultiplicative && unital && counital; }
};
MorphismReport verify_morphism(const HopfMorphism& phi);

/// θ_R(f) = (f ⊗ I)(R) as a morphism dual_cop(h) -> h.
HopfMorphism theta(const HopfPresentation& h, const MultiMap& r);
/// R = Σ_i e_i ⊗ θ(f_i).
MultiMap r_from_theta(const MultiMap& theta_map);

/// Block sizes n_i of a split semisimple algebra, ascending.
std::vector<std::size_t> irreducible_dimensions(const HopfPresentation& h);

struct AnalysisReport {
  bool semisimple = false;
  bool cosemisimple = false;
  bool commutative = false;
  bool cocommutative = false;
  std::size_t antipode_order = 0;
  std::size_t antipode_sq_order = 0;
  RingElement trace_s2;
  RingElement dim_in_k;
  bool grouplikes_computed = false;
  std::vector<std::vector<RingElement>> grouplikes;
  std::vector<std::vector<RingElement>> central_grouplikes;
};
AnalysisReport analyze(const HopfPresentation& h);

}  // namespace hopfkit
