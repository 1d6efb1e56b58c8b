#pragma once

// The bialgebra bicomplex C^{p,q}(A, B, φ) = Hom(A^{⊗(p+1)}, B^{⊗(q+1)}) with
// its algebra and coalgebra differentials, the total complex, coboundary
// solving and low-degree cohomology dimensions.

#include <memory>
#include <optional>
#include <vector>

#include "hopfkit/hopf.hpp"
#include "hopfkit/tensor.hpp"

namespace hopfkit {

/// Element of C^n = ⊕_{p+q=n} C^{p,q}; components[p] is the (p, n-p) part.
struct TotalCochain {
  unsigned degree = 0;
  std::vector<MultiMap> components;

  friend bool operator==(const TotalCochain&, const TotalCochain&) = default;
};

/// Dimension budgets: HOPFKIT_COHOMOLOGY_MAX_DIM (default 6) bounds
/// cohomology_dim in degree 2, HOPFKIT_SOLVE_MAX_DIM (default 12) bounds
/// coboundary solves and lower-degree ranks.
std::size_t cohomology_budget();
std::size_t solve_budget();

class BialgebraComplex {
 public:
  /// The complex of (A, B, φ); φ must be a verified Hopf morphism A -> B.
  BialgebraComplex(HopfPresentation a, HopfPresentation b, MultiMap phi);
  /// The complex of (A, A, identity).
  explicit BialgebraComplex(HopfPresentation a);
  ~BialgebraComplex();
  BialgebraComplex(const BialgebraComplex&);
  BialgebraComplex& operator=(const BialgebraComplex&);

  const HopfPresentation& source() const;
  const HopfPresentation& target() const;
  const MultiMap& morphism() const;
  const Ring& ring() const;

  /// d_a: C^{p,q} -> C^{p+1,q}.
  MultiMap d_alg(const MultiMap& f) const;
  /// d_c: C^{p,q} -> C^{p,q+1}. Also accepts p = -1 (arity_in 0), the
  /// coalgebra complex of B.
  MultiMap d_coalg(const MultiMap& f) const;

  TotalCochain zero(unsigned degree) const;
  /// d on C^n: d_a + (-1)^p d_c on each (p, q) part.
  TotalCochain d_total(const TotalCochain& x) const;
  bool is_cocycle(const TotalCochain& z) const;

  std::size_t cochain_size(unsigned degree) const;
  std::vector<RingElement> flatten(const TotalCochain& x) const;
  TotalCochain unflatten(unsigned degree, std::span<const RingElement> v) const;

  /// x with d(x) = z, or nullopt when no solution exists. Throws NotACocycle.
  /// Deterministic: the zero cochain maps to zero.
  std::optional<TotalCochain> solve_coboundary(const TotalCochain& z) const;

  /// Rank of d: C^{n-1} -> C^n (0 for n = 0).
  std::size_t differential_rank(unsigned n) const;
  /// dim ker(d_n) - rank(d_{n-1}), for n <= 2.
  std::size_t cohomology_dim(unsigned n) const;
  /// Cohomology of the A-invariant tensors of the coalgebra complex of B.
  std::size_t invariants_complex_dim(unsigned n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace hopfkit
