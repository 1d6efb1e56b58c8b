#include "hopfkit/arithcheck.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfkit/coeffring.hpp"
#include "hopfkit/error.hpp"

namespace hopfkit {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_ints(std::span<const std::int64_t> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::abs_sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

namespace {

void require_monic(const IntPolynomial& b) {
  if (b.is_zero() || b.coeffs().back() != 1) throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
}

// Quotient and remainder by a monic divisor.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
  require_monic(b);
  std::vector<BigInt> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (r.size() <= db) return {IntPolynomial{}, a};
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    const BigInt lead = r[k];
    if (lead == 0) continue;
    q[k - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= lead * b.coeffs()[j];
  }
  r.resize(db);
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

}  // namespace

IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& b) { return divmod_monic(a, b).second; }

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod_monic(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "division is not exact");
  return q;
}

IntPolynomial substitute_power(const IntPolynomial& p, unsigned l) {
  if (l == 0) {
    BigInt s = 0;
    for (const auto& c : p.coeffs()) s += c;
    return IntPolynomial({s});
  }
  std::vector<BigInt> c(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) * l + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k * l] = p.coeffs()[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial reduce_cyclic(const IntPolynomial& p, unsigned r) {
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  std::vector<BigInt> c(r);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k % r] += p.coeffs()[k];
  return IntPolynomial(std::move(c));
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex cyclotomic_mutex;
std::map<unsigned, IntPolynomial> cyclotomic_table;

// Caller holds cyclotomic_mutex.
const IntPolynomial& cyclotomic_locked(unsigned r) {
  if (auto it = cyclotomic_table.find(r); it != cyclotomic_table.end()) return it->second;
  IntPolynomial acc = IntPolynomial::monomial(1, r) - IntPolynomial::monomial(1, 0);
  for (unsigned d = 1; d < r; ++d)
    if (r % d == 0) acc = divide_exact(acc, cyclotomic_locked(d));
  return cyclotomic_table.emplace(r, std::move(acc)).first->second;
}

}  // namespace

IntPolynomial cyclotomic(unsigned r) {
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  std::lock_guard lock(cyclotomic_mutex);
  return cyclotomic_locked(r);
}

bool symmetric_mod_cyclic(const IntPolynomial& p, unsigned r) {
  const IntPolynomial q = reduce_cyclic(p, r);
  for (unsigned l = 1; l < r; ++l)
    if (q.coeff(l) != q.coeff(r - l)) return false;
  return true;
}

BigInt conjugate_product(const IntPolynomial& p, unsigned r) {
  if (r <= 2) throw Error(ErrorCode::InvalidArgument, "conjugate product needs r > 2");
  if (!symmetric_mod_cyclic(p, r))
    throw Error(ErrorCode::NotRealAtRoot, "coefficients of P mod x^r - 1 are not symmetric");
  const IntPolynomial phi = cyclotomic(r);
  const IntPolynomial base = reduce_cyclic(p, r);
  IntPolynomial acc = IntPolynomial::monomial(1, 0);
  for (unsigned l = 1; 2 * l < r; ++l) {
    if (std::gcd(l, r) != 1) continue;
    acc = remainder_monic(acc * remainder_monic(substitute_power(base, l), phi), phi);
  }
  if (!acc.is_constant()) throw Error(ErrorCode::NonConstantProduct, "product is " + acc.to_string());
  return acc.coeff(0);
}

namespace {

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

ModPoly to_mod(const IntPolynomial& f, std::uint64_t p) {
  ModPoly out(f.coeffs().size());
  const BigInt bp = p;
  for (std::size_t k = 0; k < out.size(); ++k) {
    BigInt c = f.coeffs()[k] % bp;
    if (c < 0) c += bp;
    out[k] = static_cast<std::uint64_t>(c);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// a mod b over F_p, b nonzero.
ModPoly poly_mod(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

bool shares_root_with_cyclotomic_mod_p(const IntPolynomial& p, unsigned r, std::uint64_t prime) {
  if (!is_prime(prime)) throw Error(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
  ModPoly a = to_mod(cyclotomic(r), prime);
  ModPoly b = to_mod(p, prime);
  // P ≡ 0 mod p: every root is shared.
  if (b.empty()) return true;
  while (!b.empty()) {
    ModPoly t = poly_mod(a, b, prime);
    a = std::move(b);
    b = std::move(t);
  }
  return a.size() > 1;
}

LemmaReport nonvanishing_verdict(const IntPolynomial& p, unsigned r, std::uint64_t prime) {
  if (!is_prime(prime)) throw Error(ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
  LemmaReport rep;
  rep.r = r;
  rep.p = prime;
  rep.N = conjugate_product(p, r);
  rep.D = reduce_cyclic(p, r).abs_sum();
  rep.phi_r = euler_phi(r);
  // φ(r) is even for r > 2
  rep.bound = boost::multiprecision::pow(rep.D, rep.phi_r / 2);
  if (abs(rep.N) > rep.bound)
    throw Error(ErrorCode::InternalAxiomFailure, "|N| = " + BigInt(abs(rep.N)).str() + " exceeds " + rep.bound.str());
  rep.p_exceeds_bound = BigInt(prime) > rep.bound;
  rep.p_coprime_to_r = r % prime != 0;
  rep.p_divides_N = rep.N % prime == 0;
  rep.gcd_with_cyclotomic_trivial = !shares_root_with_cyclotomic_mod_p(p, r, prime);
  // For p ∤ r, Φ_r is separable mod p and N^2 = ±Res(Φ_r, P), so the
  // routes agree for every such p.
  if (rep.p_coprime_to_r && rep.p_divides_N == rep.gcd_with_cyclotomic_trivial)
    throw Error(ErrorCode::InternalAxiomFailure,
                "N-route and gcd-route disagree at p = " + std::to_string(prime));
  rep.applicable = rep.p_exceeds_bound && rep.p_coprime_to_r;
  rep.conclusion = rep.applicable && !rep.p_divides_N;
  return rep;
}

Threshold kaplansky_threshold(unsigned d) {
  if (d <= 2) throw Error(ErrorCode::DimensionTooSmall, "dimension must exceed 2");
  Threshold t;
  t.d = d;
  t.phi = euler_phi(d);
  t.value = boost::multiprecision::pow(BigInt(d), t.phi / 2);
  return t;
}

}  // namespace hopfkit
