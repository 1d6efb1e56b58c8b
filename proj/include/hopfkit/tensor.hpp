#pragma once

// Dense multilinear maps V^{⊗i} -> W^{⊗j} with exact coefficients.
//
// Layout: coeffs[out * in_size + in], where `out` and `in` are flattened
// multi-indices, leftmost tensor leg most significant. Arity 0 stands for the
// ground ring, so a 0 -> j map is an element of W^{⊗j} and an i -> 0 map is a
// functional on V^{⊗i}.

#include <cstdint>
#include <span>
#include <vector>

#include "hopfkit/coeffring.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

class MultiMap {
 public:
  MultiMap() = default;
  /// Zero map with the given shape.
  MultiMap(Ring ring, std::size_t dim_in, std::size_t dim_out, unsigned arity_in, unsigned arity_out);

  static MultiMap zero(const Ring& ring, std::size_t dim, unsigned arity_in, unsigned arity_out) {
    return MultiMap(ring, dim, dim, arity_in, arity_out);
  }
  static MultiMap identity(const Ring& ring, std::size_t dim, unsigned arity = 1);
  /// The 0 -> 0 map holding a single scalar.
  static MultiMap scalar(const Ring& ring, const RingElement& value);
  /// Element of W (0 -> 1 map) from a coefficient vector.
  static MultiMap vector(const Ring& ring, std::span<const RingElement> v);
  /// Functional on V (1 -> 0 map) from a coefficient vector.
  static MultiMap covector(const Ring& ring, std::span<const RingElement> v);

  const Ring& ring() const { return ring_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  unsigned arity_in() const { return arity_in_; }
  unsigned arity_out() const { return arity_out_; }
  std::size_t in_size() const { return in_size_; }
  std::size_t out_size() const { return out_size_; }

  RingElement& at(std::size_t out, std::size_t in) { return coeffs_[out * in_size_ + in]; }
  const RingElement& at(std::size_t out, std::size_t in) const { return coeffs_[out * in_size_ + in]; }
  std::span<RingElement> coeffs() { return coeffs_; }
  std::span<const RingElement> coeffs() const { return coeffs_; }

  /// Image of the basis tensor with flat index `in`, as a dense vector.
  std::vector<RingElement> column(std::size_t in) const;
  /// Image of the basis tensor with flat index `in`, nonzeros only.
  SparseVector sparse_column(std::size_t in) const;
  /// Applies the map to a vector in V^{⊗i}.
  std::vector<RingElement> apply(std::span<const RingElement> x) const;

  bool is_zero() const;
  /// Number of nonzero coefficients.
  std::size_t support_size() const;

  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.ring_ == b.ring_ && a.same_shape(b) && a.coeffs_ == b.coeffs_;
  }

  /// Same shape; the dimension of a leg-free side is irrelevant.
  bool same_shape(const MultiMap& other) const;

  /// Matrix view (out_size x in_size).
  Matrix to_matrix() const;
  static MultiMap from_matrix(const Ring& ring, const Matrix& m, std::size_t dim_in, std::size_t dim_out,
                              unsigned arity_in, unsigned arity_out);

 private:
  Ring ring_;
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  unsigned arity_in_ = 0;
  unsigned arity_out_ = 0;
  std::size_t in_size_ = 1;
  std::size_t out_size_ = 1;
  std::vector<RingElement> coeffs_;
};

std::size_t ipow(std::size_t base, unsigned exp);

/// f ∘ g.
MultiMap compose(const MultiMap& f, const MultiMap& g);
/// f ⊗ g (Kronecker product in the flat index convention).
MultiMap tensor(const MultiMap& f, const MultiMap& g);
MultiMap add(const MultiMap& f, const MultiMap& g);
MultiMap sub(const MultiMap& f, const MultiMap& g);
MultiMap scale(const MultiMap& f, const RingElement& s);

/// Leg permutation on V^{⊗n}: sends leg k of the input to position sigma[k]
/// (0-based), so permute(σ) ∘ permute(τ) = permute(σ ∘ τ).
MultiMap permute(const Ring& ring, std::size_t dim, std::span<const unsigned> sigma);
/// permute(σ) ∘ f, computed by index relabelling.
MultiMap permute_outputs(const MultiMap& f, std::span<const unsigned> sigma);
/// f ∘ permute(σ), computed by index relabelling.
MultiMap permute_inputs(const MultiMap& f, std::span<const unsigned> sigma);

/// Coefficientwise change of ring: digit lift upwards, reduction downwards.
MultiMap change_ring(const MultiMap& f, const Ring& target);
/// Multiplies every coefficient by p^k.
MultiMap times_p_power(const MultiMap& f, unsigned k);
/// Divides every coefficient by p^k and reads the result in the residue field.
MultiMap divide_p_power_to_residue(const MultiMap& f, unsigned k);

}  // namespace hopfkit
