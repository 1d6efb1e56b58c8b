#include "hopfkit/coeffring.hpp"

#include <algorithm>
#include <sstream>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

using Poly = std::vector<std::uint64_t>;  // low-to-high, coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorCode::NotAUnit, "residue is not invertible");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t coef = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - coef) * f[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= deg/2.
  Poly xpow = {0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    Poly acc = {1};
    Poly base = xpow;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xpow = acc;
    Poly diff = xpow;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Ring Ring::make(std::uint64_t p, unsigned n, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "precision and degree must be >= 1");
  if (m > kMaxDegree)
    throw Error(ErrorCode::Unsupported, "extension degree " + std::to_string(m) + " exceeds " +
                                            std::to_string(kMaxDegree));
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) {
    pn *= p;
    if (pn >= kMaxModulus) throw Error(ErrorCode::Unsupported, "p^n must stay below 2^31");
  }

  Ring r;
  r.p_ = static_cast<std::uint32_t>(p);
  r.n_ = n;
  r.m_ = m;
  r.pn_ = static_cast<std::uint32_t>(pn);

  if (m == 1) {
    if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1))
      throw Error(ErrorCode::InvalidArgument, "degree-1 modulus must be monic linear");
    r.modulus_ = {0, 1};
    return r;
  }

  if (modulus) {
    if (modulus->size() != m + 1 || (*modulus)[m] != 1)
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree m");
    for (auto c : *modulus)
      if (c >= pn) throw Error(ErrorCode::InvalidArgument, "modulus coefficient outside [0, p^n)");
    if (!irreducible_mod_p(*modulus, r.p_))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible mod " + std::to_string(p));
    r.modulus_.assign(modulus->begin(), modulus->end());
    return r;
  }

  // Smallest [c_0, ..., c_{m-1}] in lexicographic order, c_0 most significant.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  std::vector<std::uint64_t> cand(m + 1, 0);
  cand[m] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = m; i-- > 0;) {
      cand[i] = v % p;
      v /= p;
    }
    if (irreducible_mod_p(cand, r.p_)) {
      r.modulus_.assign(cand.begin(), cand.end());
      return r;
    }
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

std::uint64_t Ring::residue_field_size() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m_; ++i) q *= p_;
  return q;
}

Ring Ring::with_precision(unsigned n) const {
  if (n == n_) return *this;
  std::vector<std::uint64_t> mod(modulus_.begin(), modulus_.end());
  if (n < n_) {
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < n; ++i) pn *= p_;
    for (auto& c : mod) c %= pn;
  }
  if (m_ == 1) return make(p_, n, 1);
  return make(p_, n, m_, mod);
}

bool Ring::compatible(const Ring& other) const {
  if (p_ != other.p_ || m_ != other.m_) return false;
  const std::uint32_t pmin = std::min(pn_, other.pn_);
  for (unsigned i = 0; i <= m_; ++i)
    if (modulus_[i] % pmin != other.modulus_[i] % pmin) return false;
  return true;
}

RingElement Ring::one() const {
  RingElement r;
  r.c[0] = pn_ == 1 ? 0 : 1;
  return r;
}

RingElement Ring::from_int(std::int64_t v) const {
  RingElement r;
  std::int64_t x = v % static_cast<std::int64_t>(pn_);
  if (x < 0) x += pn_;
  r.c[0] = static_cast<Coeff>(x);
  return r;
}

RingElement Ring::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > m_) throw Error(ErrorCode::InvalidArgument, "too many coefficients for ring element");
  RingElement r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.c[i] = from_int(coeffs[i]).c[0];
  return r;
}

RingElement Ring::residue_element(std::uint64_t index) const {
  RingElement r;
  for (unsigned i = 0; i < m_; ++i) {
    r.c[i] = static_cast<Coeff>(index % p_);
    index /= p_;
  }
  return r;
}

std::vector<std::int64_t> Ring::to_coeffs(const RingElement& a) const {
  return std::vector<std::int64_t>(a.c.begin(), a.c.begin() + m_);
}

RingElement Ring::mul_ext(const RingElement& a, const RingElement& b) const {
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < m_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % pn_;
  }
  // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
  for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
    const std::uint64_t top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint64_t sub = top * modulus_[i] % pn_;
      prod[k - m_ + i] = (prod[k - m_ + i] + pn_ - sub) % pn_;
    }
  }
  RingElement r;
  for (unsigned i = 0; i < m_; ++i) r.c[i] = static_cast<Coeff>(prod[i]);
  return r;
}

RingElement Ring::pow(RingElement a, std::uint64_t e) const {
  RingElement acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool Ring::is_unit(const RingElement& a) const {
  for (unsigned i = 0; i < m_; ++i)
    if (a.c[i] % p_ != 0) return true;
  return false;
}

RingElement Ring::invert_residue(const RingElement& a) const {
  if (m_ == 1) {
    RingElement r;
    r.c[0] = static_cast<Coeff>(inv_mod(a.c[0] % p_, p_));
    return r;
  }
  const Ring field = residue_field();
  RingElement ar;
  for (unsigned i = 0; i < m_; ++i) ar.c[i] = a.c[i] % p_;
  return field.pow(ar, field.residue_field_size() - 2);
}

RingElement Ring::invert(const RingElement& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, "element is divisible by p");
  RingElement x = invert_residue(a);  // correct mod p; same representatives here
  const RingElement two = from_int(2);
  // Each Newton step x <- x (2 - a x) at least doubles the number of correct digits.
  for (unsigned correct = 1; correct < n_; correct *= 2) x = mul(x, sub(two, mul(a, x)));
  return x;
}

unsigned Ring::valuation(const RingElement& a) const {
  unsigned v = n_;
  for (unsigned i = 0; i < m_; ++i) {
    Coeff c = a.c[i];
    if (c == 0) continue;
    unsigned k = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++k;
    }
    v = std::min(v, k);
  }
  return v;
}

std::string Ring::describe() const {
  std::ostringstream os;
  if (m_ == 1) {
    if (n_ == 1)
      os << "F_" << p_;
    else
      os << "Z/" << pn_;
    return os.str();
  }
  os << (n_ == 1 ? "F_" : "GR(") << p_;
  if (n_ == 1)
    os << "^" << m_;
  else
    os << "^" << n_ << "," << m_ << ")";
  os << "[";
  for (unsigned i = 0; i <= m_; ++i) os << (i ? "," : "") << modulus_[i];
  os << "]";
  return os.str();
}

RingElement digit_lift(const Ring& from, const RingElement& a, const Ring& target) {
  if (target.precision() < from.precision() || !from.compatible(target))
    throw Error(ErrorCode::DescriptorMismatch, "digit_lift needs a compatible ring of higher precision");
  return a;
}

RingElement reduce(const Ring& from, const RingElement& a, const Ring& target) {
  if (target.precision() > from.precision() || !from.compatible(target))
    throw Error(ErrorCode::DescriptorMismatch, "reduce needs a compatible ring of lower precision");
  RingElement r;
  for (unsigned i = 0; i < from.degree(); ++i) r.c[i] = a.c[i] % target.characteristic();
  return r;
}

RingElement exact_div_p(const Ring& from, const RingElement& a, unsigned k) {
  if (k >= from.precision()) throw Error(ErrorCode::InvalidArgument, "division exponent must be below precision");
  std::uint32_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= from.p();
  RingElement r;
  for (unsigned i = 0; i < from.degree(); ++i) {
    if (a.c[i] % pk != 0) throw Error(ErrorCode::NotDivisible, "coefficient not divisible by p^" + std::to_string(k));
    r.c[i] = a.c[i] / pk;
  }
  return r;
}

}  // namespace hopfkit
