#pragma once

// Exact arithmetic in the Galois field F_{p^m} and the Galois ring GR(p^n, m).
//
// GR(p^n, m) is realized as (Z/p^n)[x] / (f) for a monic f of degree m whose
// reduction mod p is irreducible; n = 1 gives the field F_{p^m}. Elements are
// stored as m integer coefficients ("digit vectors") in [0, p^n).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hopfkit {

using Coeff = std::uint32_t;

/// Largest supported extension degree m.
inline constexpr unsigned kMaxDegree = 4;
/// p^n must stay below this so that products of two residues fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

struct RingElement {
  std::array<Coeff, kMaxDegree> c{};

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

class Ring {
 public:
  /// Builds F_{p^m} (n = 1) or GR(p^n, m). When m > 1 and no modulus is
  /// given, the lexicographically smallest monic irreducible polynomial mod p
  /// is chosen, comparing coefficient lists [c_0, ..., c_{m-1}] from c_0.
  static Ring make(std::uint64_t p, unsigned n = 1, unsigned m = 1,
                   std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  Ring() = default;

  std::uint32_t p() const { return p_; }
  unsigned precision() const { return n_; }
  unsigned degree() const { return m_; }
  /// p^n.
  std::uint32_t characteristic() const { return pn_; }
  /// Size p^m of the residue field.
  std::uint64_t residue_field_size() const;
  bool is_field() const { return n_ == 1; }
  bool is_prime_field() const { return n_ == 1 && m_ == 1; }
  /// Monic modulus [c_0, ..., c_m] with c_m = 1; [0, 1] when m = 1.
  const std::vector<Coeff>& modulus() const { return modulus_; }

  /// Same p, m and modulus representatives, at a different precision.
  Ring with_precision(unsigned n) const;
  Ring residue_field() const { return with_precision(1); }
  /// Same p and m, moduli agreeing mod p^{min(n, n')}.
  bool compatible(const Ring& other) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

  RingElement zero() const { return {}; }
  RingElement one() const;
  RingElement from_int(std::int64_t v) const;
  /// Coefficients are reduced mod p^n; at most m entries.
  RingElement from_coeffs(std::span<const std::int64_t> coeffs) const;
  /// i-th element of the residue field in base-p digit order; 0 <= i < p^m.
  RingElement residue_element(std::uint64_t index) const;
  std::vector<std::int64_t> to_coeffs(const RingElement& a) const;

  RingElement add(const RingElement& a, const RingElement& b) const {
    RingElement r;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t s = a.c[i] + b.c[i];
      r.c[i] = s >= pn_ ? s - pn_ : s;
    }
    return r;
  }
  RingElement sub(const RingElement& a, const RingElement& b) const {
    RingElement r;
    for (unsigned i = 0; i < m_; ++i) r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + pn_ - b.c[i];
    return r;
  }
  RingElement neg(const RingElement& a) const { return sub(zero(), a); }
  RingElement mul(const RingElement& a, const RingElement& b) const {
    if (m_ == 1) {
      RingElement r;
      r.c[0] = static_cast<Coeff>(std::uint64_t{a.c[0]} * b.c[0] % pn_);
      return r;
    }
    return mul_ext(a, b);
  }
  /// a + b * c
  RingElement fma(const RingElement& a, const RingElement& b, const RingElement& c) const {
    return add(a, mul(b, c));
  }
  RingElement pow(RingElement a, std::uint64_t e) const;
  /// Multiplies by the integer k.
  RingElement scale(const RingElement& a, std::int64_t k) const { return mul(a, from_int(k)); }

  bool is_zero(const RingElement& a) const { return a == RingElement{}; }
  bool is_one(const RingElement& a) const { return a == one(); }
  /// Units are exactly the elements that are nonzero mod p.
  bool is_unit(const RingElement& a) const;
  /// Inverse mod p followed by Newton/Hensel refinement, one p-digit at a time.
  RingElement invert(const RingElement& a) const;

  /// Largest k <= n with every coefficient divisible by p^k (n for zero).
  unsigned valuation(const RingElement& a) const;

  std::string describe() const;

 private:
  RingElement mul_ext(const RingElement& a, const RingElement& b) const;
  RingElement invert_residue(const RingElement& a) const;

  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  unsigned m_ = 0;
  std::uint32_t pn_ = 0;
  std::vector<Coeff> modulus_;
};

/// Canonical lift: same integer representatives, read at the target precision.
RingElement digit_lift(const Ring& from, const RingElement& a, const Ring& target);
/// Reduction to a lower (or equal) precision.
RingElement reduce(const Ring& from, const RingElement& a, const Ring& target);
/// Divides every coefficient by p^k and reinterprets at precision n - k.
RingElement exact_div_p(const Ring& from, const RingElement& a, unsigned k);

/// True iff the integer polynomial (coefficients low-to-high) is irreducible mod p.
bool irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint32_t p);
bool is_prime(std::uint64_t n);

}  // namespace hopfkit
