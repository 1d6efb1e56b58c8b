#pragma once

// Exact integer polynomial arithmetic: cyclotomic polynomials, the
// conjugate product of P over primitive r-th roots of unity, the
// nonvanishing criterion for P(ζ) modulo primes, and the characteristic
// threshold d^{φ(d)/2}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with integer coefficients, lowest degree first. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial from_ints(std::span<const std::int64_t> coeffs);
  /// c * x^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  /// Sum of absolute values of the coefficients.
  BigInt abs_sum() const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Remainder of a modulo the monic polynomial b.
IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& b);
/// a / b for monic b; throws InvalidArgument when the division is not exact.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// P(x^l).
IntPolynomial substitute_power(const IntPolynomial& p, unsigned l);
/// P mod (x^r - 1).
IntPolynomial reduce_cyclic(const IntPolynomial& p, unsigned r);

unsigned euler_phi(unsigned n);
/// Φ_r, memoized; thread-safe.
IntPolynomial cyclotomic(unsigned r);

/// True iff P mod (x^r - 1) has a_l = a_{r-l} for 1 <= l < r.
bool symmetric_mod_cyclic(const IntPolynomial& p, unsigned r);

/// ∏_{(l,r)=1, l<r/2} P(ζ^l) as an exact integer, computed in Z[x]/(Φ_r).
/// Requires r > 2 (InvalidArgument) and symmetric coefficients
/// (NotRealAtRoot); NonConstantProduct if the product is not an integer.
BigInt conjugate_product(const IntPolynomial& p, unsigned r);

/// gcd(P mod p, Φ_r mod p) over F_p has positive degree.
bool shares_root_with_cyclotomic_mod_p(const IntPolynomial& p, unsigned r, std::uint64_t prime);

struct LemmaReport {
  unsigned r = 0;
  std::uint64_t p = 0;
  BigInt D;       // Σ|a_m| of P mod (x^r - 1)
  unsigned phi_r = 0;
  BigInt bound;   // D^{φ(r)/2}
  BigInt N;
  bool p_exceeds_bound = false;
  bool p_coprime_to_r = false;
  bool p_divides_N = false;
  bool gcd_with_cyclotomic_trivial = false;
  /// p > bound and p ∤ r: the criterion applies.
  bool applicable = false;
  /// Nonvanishing of P(ζ) mod every prime over p is guaranteed.
  bool conclusion = false;
};

/// Full verdict for one prime. The N-route and the gcd-route are compared
/// whenever p ∤ r and any disagreement throws InternalAxiomFailure, as does a
/// violation of |N| <= bound. Requires p prime (NotPrime).
LemmaReport nonvanishing_verdict(const IntPolynomial& p, unsigned r, std::uint64_t prime);

struct Threshold {
  unsigned d = 0;
  unsigned phi = 0;
  BigInt value;  // d^{φ(d)/2}
};

/// Throws DimensionTooSmall for d <= 2.
Threshold kaplansky_threshold(unsigned d);

}  // namespace hopfkit
