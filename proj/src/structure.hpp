#pragma once

// Sparse structure tables of a presentation, for basis-wise evaluation of
// products and coproducts in tensor powers without building dense maps.

#include <vector>

#include "hopfkit/hopf.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit::detail {

using Vec = std::vector<RingElement>;

class Structure {
 public:
  explicit Structure(const HopfPresentation& h);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return n_; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }
  const SparseVector& coproduct(std::size_t i) const { return coprod_[i]; }
  const SparseVector& antipode(std::size_t i) const { return anti_[i]; }
  const Vec& unit() const { return unit_; }
  const Vec& counit() const { return counit_; }

  /// Calls fn(index, value) for every term of coef * (e_I · e_J) in A^{⊗legs}.
  template <class Fn>
  void for_each_product(std::size_t I, std::size_t J, unsigned legs, const RingElement& coef, Fn&& fn) const {
    std::size_t di[16], dj[16];
    for (unsigned t = legs; t-- > 0;) {
      di[t] = I % n_;
      dj[t] = J % n_;
      I /= n_;
      J /= n_;
    }
    auto rec = [&](auto&& self, unsigned t, std::size_t idx, const RingElement& c) -> void {
      if (t == legs) {
        fn(idx, c);
        return;
      }
      for (const auto& [k, v] : product(di[t], dj[t])) self(self, t + 1, idx * n_ + k, ring_.mul(c, v));
    };
    rec(rec, 0, 0, coef);
  }
  /// Adds coef * (e_I · e_J) in A^{⊗legs} to out.
  void accumulate_product(std::size_t I, std::size_t J, unsigned legs, const RingElement& coef, Vec& out) const;
  /// x · y in A^{⊗legs}.
  Vec mul(const Vec& x, const Vec& y, unsigned legs = 1) const;
  /// Δ(x) for x in A.
  Vec comul(const Vec& x) const;
  Vec apply_antipode(const Vec& x) const;
  RingElement counit_of(const Vec& x) const;
  /// 1 ⊗ ... ⊗ 1 in A^{⊗legs}.
  Vec unit_power(unsigned legs) const;
  /// Left-nested iterated coproduct of e_a in A^{⊗k}, k >= 1.
  SparseVector iterated_coproduct(std::size_t a, unsigned k) const;

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<SparseVector> prod_;
  std::vector<SparseVector> coprod_;
  std::vector<SparseVector> anti_;
  Vec unit_;
  Vec counit_;
};

Vec basis_vector(const Ring& ring, std::size_t n, std::size_t i);
bool is_zero_vec(const Ring& ring, const Vec& v);
Vec sub_vec(const Ring& ring, const Vec& a, const Vec& b);
Vec scale_vec(const Ring& ring, const Vec& a, const RingElement& s);

}  // namespace hopfkit::detail
