#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"
#include "structure.hpp"

namespace hopfkit {

using detail::basis_vector;
using detail::is_zero_vec;
using detail::Structure;
using detail::Vec;

namespace {

void require_shape(const MultiMap& f, const char* name, const Ring& ring, std::size_t n, unsigned ai, unsigned ao) {
  if (!(f.ring() == ring)) throw Error(ErrorCode::DescriptorMismatch, std::string(name) + " uses a different ring");
  if (f.arity_in() != ai || f.arity_out() != ao)
    throw Error(ErrorCode::ArityMismatch, std::string(name) + " has the wrong arity");
  if ((ai > 0 && f.dim_in() != n) || (ao > 0 && f.dim_out() != n))
    throw Error(ErrorCode::ArityMismatch, std::string(name) + " has the wrong dimension");
}

void require_field(const Ring& ring, const char* what) {
  if (!ring.is_field()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a field");
}

std::string index_string(std::size_t flat, std::size_t n, unsigned legs) {
  std::vector<std::size_t> d(legs);
  for (unsigned t = legs; t-- > 0;) {
    d[t] = flat % n;
    flat /= n;
  }
  std::string s = "(";
  for (unsigned t = 0; t < legs; ++t) s += (t ? "," : "") + std::to_string(d[t]);
  return s + ")";
}

class Recorder {
 public:
  Recorder(AxiomCheck& check, std::size_t n) : check_(check), n_(n) {}

  void compare(const Vec& lhs, const Vec& rhs, unsigned legs, const std::string& where) {
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (lhs[k] == rhs[k]) continue;
      check_.passed = false;
      if (check_.nonzero_residuals++ == 0)
        check_.first_failure = where + " at output " + index_string(k, n_, legs);
    }
  }

 private:
  AxiomCheck& check_;
  std::size_t n_;
};

Vec column_of(const SparseVector& s, std::size_t size) {
  Vec v(size);
  for (const auto& [k, c] : s) v[k] = c;
  return v;
}

// (f ⊗ I^{⊗rest}) applied to a vector, where f maps one leg to `out_legs` legs
Vec apply_first_leg(const Ring& ring, std::size_t n, const Vec& x, unsigned rest_legs,
                    const std::vector<SparseVector>& f, unsigned out_legs) {
  const std::size_t tail = ipow(n, rest_legs);
  Vec out(ipow(n, out_legs) * tail);
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (ring.is_zero(x[idx])) continue;
    const std::size_t first = idx / tail, rest = idx % tail;
    for (const auto& [k, v] : f[first]) out[k * tail + rest] = ring.fma(out[k * tail + rest], v, x[idx]);
  }
  return out;
}

// (I^{⊗lead} ⊗ f) applied to a vector, f maps the last leg to `out_legs` legs
Vec apply_last_leg(const Ring& ring, std::size_t n, const Vec& x, const std::vector<SparseVector>& f,
                   unsigned out_legs) {
  const std::size_t width = ipow(n, out_legs);
  Vec out((x.size() / n) * width);
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (ring.is_zero(x[idx])) continue;
    const std::size_t lead = idx / n, last = idx % n;
    for (const auto& [k, v] : f[last]) out[lead * width + k] = ring.fma(out[lead * width + k], v, x[idx]);
  }
  return out;
}

std::vector<SparseVector> coproduct_table(const Structure& st) {
  std::vector<SparseVector> t(st.dim());
  for (std::size_t i = 0; i < st.dim(); ++i) t[i] = st.coproduct(i);
  return t;
}

std::vector<SparseVector> antipode_table(const Structure& st) {
  std::vector<SparseVector> t(st.dim());
  for (std::size_t i = 0; i < st.dim(); ++i) t[i] = st.antipode(i);
  return t;
}

Vec swap_legs(const Vec& x, std::size_t n) {
  Vec out(x.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = x[i * n + j];
  return out;
}

Matrix square_matrix(const MultiMap& f) { return f.to_matrix(); }

Matrix inverse_antipode(const HopfPresentation& h) {
  try {
    return invert_matrix(h.ring, square_matrix(h.antipode));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularModP) throw Error(ErrorCode::SingularAntipode, "antipode is not invertible");
    throw;
  }
}

}  // namespace

void check_shapes(const HopfPresentation& h) {
  if (h.dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  require_shape(h.mult, "m", h.ring, h.dim, 2, 1);
  require_shape(h.unit, "unit", h.ring, h.dim, 0, 1);
  require_shape(h.comult, "delta", h.ring, h.dim, 1, 2);
  require_shape(h.counit, "counit", h.ring, h.dim, 1, 0);
  require_shape(h.antipode, "S", h.ring, h.dim, 1, 1);
}

bool AxiomReport::verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

bool AxiomReport::bialgebra_verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) {
    return c.passed || c.name == "left_antipode" || c.name == "right_antipode";
  });
}

const AxiomCheck& AxiomReport::get(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidArgument, "no axiom named " + name);
}

AxiomReport verify_hopf(const HopfPresentation& h) {
  check_shapes(h);
  const Structure st(h);
  const Ring& ring = h.ring;
  const std::size_t n = h.dim;
  AxiomReport report;
  for (const char* name : kAxiomNames) report.checks.push_back(AxiomCheck{name, true, 0, {}});
  auto check = [&](std::size_t i) -> AxiomCheck& { return report.checks[i]; };

  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(basis_vector(ring, n, i));
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = column_of(st.product(i, j), n);
  const auto cop = coproduct_table(st);
  const auto anti = antipode_table(st);

  {  // associativity
    Recorder rec(check(0), n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vec lhs = st.mul(prod[a * n + b], basis[c]);
          const Vec rhs = st.mul(basis[a], prod[b * n + c]);
          rec.compare(lhs, rhs, 1, "inputs " + index_string((a * n + b) * n + c, n, 3));
        }
  }
  {  // unit
    Recorder rec(check(1), n);
    for (std::size_t a = 0; a < n; ++a) {
      rec.compare(st.mul(st.unit(), basis[a]), basis[a], 1, "1*e_" + std::to_string(a));
      rec.compare(st.mul(basis[a], st.unit()), basis[a], 1, "e_" + std::to_string(a) + "*1");
    }
  }
  {  // coassociativity
    Recorder rec(check(2), n);
    for (std::size_t a = 0; a < n; ++a) {
      const Vec d = column_of(st.coproduct(a), n * n);
      rec.compare(apply_first_leg(ring, n, d, 1, cop, 2), apply_last_leg(ring, n, d, cop, 2), 3,
                  "input " + std::to_string(a));
    }
  }
  {  // counit
    Recorder rec(check(3), n);
    for (std::size_t a = 0; a < n; ++a) {
      Vec left(n), right(n);
      for (const auto& [k, v] : st.coproduct(a)) {
        const std::size_t x = k / n, y = k % n;
        left[y] = ring.fma(left[y], st.counit()[x], v);
        right[x] = ring.fma(right[x], st.counit()[y], v);
      }
      rec.compare(left, basis[a], 1, "(counit x I) input " + std::to_string(a));
      rec.compare(right, basis[a], 1, "(I x counit) input " + std::to_string(a));
    }
  }
  {  // comultiplication is multiplicative
    Recorder rec(check(4), n);
    std::vector<Vec> dcols(n);
    for (std::size_t a = 0; a < n; ++a) dcols[a] = column_of(st.coproduct(a), n * n);
    // (m ⊗ m)(Δa ⊗ Δb) with the middle legs swapped, contracted one leg at a time
    Vec u1(n * n * n), u(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::fill(u1.begin(), u1.end(), RingElement{});
        std::fill(u.begin(), u.end(), RingElement{});
        for (std::size_t x1 = 0; x1 < n; ++x1)
          for (std::size_t y1 = 0; y1 < n; ++y1) {
            const RingElement& da = dcols[a][x1 * n + y1];
            if (ring.is_zero(da)) continue;
            for (std::size_t x2 = 0; x2 < n; ++x2)
              for (std::size_t k = 0; k < n; ++k) {
                RingElement& slot = u1[(x2 * n + k) * n + y1];
                slot = ring.fma(slot, da, prod[x1 * n + x2][k]);
              }
          }
        for (std::size_t x2 = 0; x2 < n; ++x2)
          for (std::size_t y2 = 0; y2 < n; ++y2) {
            const RingElement& db = dcols[b][x2 * n + y2];
            if (ring.is_zero(db)) continue;
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t y1 = 0; y1 < n; ++y1) {
                RingElement& slot = u[(k * n + y1) * n + y2];
                slot = ring.fma(slot, db, u1[(x2 * n + k) * n + y1]);
              }
          }
        Vec rhs(n * n);
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t y = 0; y < n * n; ++y) {
            const RingElement& c = u[k * n * n + y];
            if (ring.is_zero(c)) continue;
            for (std::size_t l = 0; l < n; ++l) rhs[k * n + l] = ring.fma(rhs[k * n + l], c, prod[y][l]);
          }
        rec.compare(st.comul(prod[a * n + b]), rhs, 2, "inputs " + index_string(a * n + b, n, 2));
      }
  }
  {  // counit is multiplicative
    Recorder rec(check(5), n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vec lhs{st.counit_of(prod[a * n + b])};
        const Vec rhs{ring.mul(st.counit()[a], st.counit()[b])};
        rec.compare(lhs, rhs, 0, "inputs " + index_string(a * n + b, n, 2));
      }
  }
  {  // Δ(1) = 1 ⊗ 1
    Recorder rec(check(6), n);
    rec.compare(st.comul(st.unit()), st.unit_power(2), 2, "unit");
  }
  {  // ε(1) = 1
    Recorder rec(check(7), n);
    rec.compare(Vec{st.counit_of(st.unit())}, Vec{ring.one()}, 0, "unit");
  }
  {  // antipodes
    Recorder left(check(8), n), right(check(9), n);
    for (std::size_t a = 0; a < n; ++a) {
      Vec l(n), r(n);
      for (const auto& [k, v] : st.coproduct(a)) {
        const std::size_t x = k / n, y = k % n;
        for (const auto& [sx, sv] : anti[x])
          st.accumulate_product(sx, y, 1, ring.mul(v, sv), l);
        for (const auto& [sy, sv] : anti[y])
          st.accumulate_product(x, sy, 1, ring.mul(v, sv), r);
      }
      const Vec expect = detail::scale_vec(ring, st.unit(), st.counit()[a]);
      left.compare(l, expect, 1, "input " + std::to_string(a));
      right.compare(r, expect, 1, "input " + std::to_string(a));
    }
  }
  return report;
}

bool is_commutative(const HopfPresentation& h) {
  check_shapes(h);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < h.dim; ++k)
        if (h.mult.at(k, i * h.dim + j) != h.mult.at(k, j * h.dim + i)) return false;
  return true;
}

bool is_cocommutative(const HopfPresentation& h) {
  check_shapes(h);
  for (std::size_t a = 0; a < h.dim; ++a)
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (h.comult.at(i * h.dim + j, a) != h.comult.at(j * h.dim + i, a)) return false;
  return true;
}

std::vector<std::string> builtin_group_names() {
  return {"C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "S3", "D4", "Q8"};
}

std::vector<std::vector<std::size_t>> builtin_group_table(std::string_view name) {
  std::vector<std::vector<std::size_t>> t;
  auto sized = [&](std::size_t n) { t.assign(n, std::vector<std::size_t>(n)); };
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '2' && name[1] <= '8') {
    const std::size_t n = static_cast<std::size_t>(name[1] - '0');
    sized(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  } else if (name == "C2xC2") {
    sized(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  } else if (name == "S3") {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    sized(6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
        t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
  } else if (name == "D4") {
    // r^i s^j has index 4j + i
    sized(8);
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t y = 0; y < 8; ++y) {
        const std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
        const std::size_t rot = (a + (b ? 4 - c : c)) % 4;
        t[x][y] = 4 * ((b + d) % 2) + rot;
      }
  } else if (name == "Q8") {
    // ±u for u in {1, i, j, k}; index 2u + (negative)
    static const int unit_prod[4][4] = {{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}};
    sized(8);
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t y = 0; y < 8; ++y) {
        const int r = unit_prod[x / 2][y / 2];
        const bool neg = ((x % 2) ^ (y % 2)) ^ (r < 0);
        t[x][y] = 2 * static_cast<std::size_t>(std::abs(r) - 1) + (neg ? 1 : 0);
      }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown built-in group " + std::string(name));
  }
  return t;
}

HopfPresentation group_algebra(const Ring& ring, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "table is not square");
    for (std::size_t v : row)
      if (v >= n) throw Error(ErrorCode::NotAGroup, "table entry out of range");
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e == n) throw Error(ErrorCode::NotAGroup, "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::NotAGroup, "table is not associative");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] == n) throw Error(ErrorCode::NotAGroup, "element without inverse");
  }

  HopfPresentation h{ring,
                     n,
                     MultiMap::zero(ring, n, 2, 1),
                     MultiMap::zero(ring, n, 0, 1),
                     MultiMap::zero(ring, n, 1, 2),
                     MultiMap::zero(ring, n, 1, 0),
                     MultiMap::zero(ring, n, 1, 1)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.mult.at(table[a][b], a * n + b) = ring.one();
    h.comult.at(a * n + a, a) = ring.one();
    h.counit.at(0, a) = ring.one();
    h.antipode.at(inv[a], a) = ring.one();
  }
  h.unit.at(e, 0) = ring.one();
  return h;
}

HopfPresentation dual(const HopfPresentation& h) {
  check_shapes(h);
  const std::size_t n = h.dim;
  HopfPresentation d = h;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t ij = 0; ij < n * n; ++ij) {
      d.mult.at(k, ij) = h.comult.at(ij, k);
      d.comult.at(ij, k) = h.mult.at(k, ij);
    }
  for (std::size_t i = 0; i < n; ++i) {
    d.unit.at(i, 0) = h.counit.at(0, i);
    d.counit.at(0, i) = h.unit.at(i, 0);
    for (std::size_t j = 0; j < n; ++j) d.antipode.at(j, i) = h.antipode.at(i, j);
  }
  return d;
}

HopfPresentation dual_cop(const HopfPresentation& h) {
  HopfPresentation d = dual(h);
  const unsigned swap[2] = {1, 0};
  d.comult = permute_outputs(d.comult, swap);
  const Matrix sinv = inverse_antipode(h);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) d.antipode.at(j, i) = sinv(i, j);
  return d;
}

HopfPresentation change_ring(const HopfPresentation& h, const Ring& target) {
  return HopfPresentation{target,
                          h.dim,
                          change_ring(h.mult, target),
                          change_ring(h.unit, target),
                          change_ring(h.comult, target),
                          change_ring(h.counit, target),
                          change_ring(h.antipode, target)};
}

DoubleResult drinfeld_double(const HopfPresentation& h) {
  check_shapes(h);
  const Ring& ring = h.ring;
  const std::size_t n = h.dim, nd = n * n;
  const Structure st(h);
  const Matrix sinv = inverse_antipode(h);

  // conj[(z * n + w) * n + x] = S^{-1}(e_z) e_w e_x
  std::vector<Vec> conj(n * n * n);
  for (std::size_t z = 0; z < n; ++z) {
    Vec sz(n);
    for (std::size_t i = 0; i < n; ++i) sz[i] = sinv(i, z);
    for (std::size_t w = 0; w < n; ++w) {
      const Vec szw = st.mul(sz, basis_vector(ring, n, w));
      for (std::size_t x = 0; x < n; ++x) conj[(z * n + w) * n + x] = st.mul(szw, basis_vector(ring, n, x));
    }
  }
  // product in the dual: f_i f_w = Σ_k Δ(e_k)_{(i,w)} f_k
  std::vector<SparseVector> dual_prod(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [iw, v] : st.coproduct(k)) dual_prod[iw].emplace_back(static_cast<std::uint32_t>(k), v);
  std::vector<SparseVector> cop3(n);
  for (std::size_t a = 0; a < n; ++a) cop3[a] = st.iterated_coproduct(a, 3);

  HopfPresentation d{ring,
                     nd,
                     MultiMap::zero(ring, nd, 2, 1),
                     MultiMap::zero(ring, nd, 0, 1),
                     MultiMap::zero(ring, nd, 1, 2),
                     MultiMap::zero(ring, nd, 1, 0),
                     MultiMap::zero(ring, nd, 1, 1)};

  // (f_i ⋈ e_a)(f_j ⋈ e_b) = Σ f_i (x ↦ f_j(S^{-1}(a_3) x a_1)) ⋈ a_2 e_b
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [xyz, c] : cop3[a]) {
        const std::size_t x = xyz / (n * n), y = (xyz / n) % n, z = xyz % n;
        for (std::size_t w = 0; w < n; ++w) {
          const Vec& cv = conj[(z * n + w) * n + x];
          for (const auto& [k, fv] : dual_prod[i * n + w])
            for (std::size_t j = 0; j < n; ++j) {
              if (ring.is_zero(cv[j])) continue;
              const RingElement left = ring.mul(ring.mul(c, cv[j]), fv);
              for (std::size_t b = 0; b < n; ++b)
                for (const auto& [l, pv] : st.product(y, b)) {
                  auto& slot = d.mult.at(k * n + l, (i * n + a) * nd + (j * n + b));
                  slot = ring.fma(slot, left, pv);
                }
            }
        }
      }
  // Δ(f_i ⋈ e_a) = Σ (f_i2 ⋈ a_1) ⊗ (f_i1 ⋈ a_2)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      const RingElement& mv = h.mult.at(i, jk);
      if (ring.is_zero(mv)) continue;
      const std::size_t j = jk / n, k = jk % n;
      for (std::size_t a = 0; a < n; ++a)
        for (const auto& [xy, cv] : st.coproduct(a)) {
          const std::size_t x = xy / n, y = xy % n;
          auto& slot = d.comult.at((k * n + x) * nd + (j * n + y), i * n + a);
          slot = ring.fma(slot, mv, cv);
        }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      d.unit.at(i * n + a, 0) = ring.mul(st.counit()[i], st.unit()[a]);
      d.counit.at(0, i * n + a) = ring.mul(st.unit()[i], st.counit()[a]);
    }
  // S(f_i ⋈ e_a) = (ε ⋈ S(e_a)) (f_i ∘ S^{-1} ⋈ 1)
  {
    const Structure dst(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        Vec left(nd), right(nd);
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& [l, sv] : st.antipode(a)) left[k * n + l] = ring.mul(st.counit()[k], sv);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t b = 0; b < n; ++b) right[j * n + b] = ring.mul(sinv(i, j), st.unit()[b]);
        const Vec s = dst.mul(left, right);
        for (std::size_t t = 0; t < nd; ++t) d.antipode.at(t, i * n + a) = s[t];
      }
  }
  // R = Σ_a (ε ⋈ e_a) ⊗ (f_a ⋈ 1)
  MultiMap r = MultiMap::zero(ring, nd, 0, 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      if (ring.is_zero(st.counit()[k])) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (ring.is_zero(st.unit()[b])) continue;
        auto& slot = r.at((k * n + a) * nd + (a * n + b), 0);
        slot = ring.fma(slot, st.counit()[k], st.unit()[b]);
      }
    }

  const AxiomReport report = verify_hopf(d);
  if (!report.verified()) {
    for (const auto& c : report.checks)
      if (!c.passed) throw Error(ErrorCode::InternalAxiomFailure, "double fails " + c.name + ": " + c.first_failure);
  }
  const QtReport qt = verify_qt(d, r);
  if (!qt.quasitriangular)
    throw Error(ErrorCode::InternalAxiomFailure,
                "canonical R fails: " + (qt.failures.empty() ? std::string("?") : qt.failures.front()));
  return DoubleResult{std::move(d), std::move(r)};
}

MultiMap iterate(const HopfPresentation& h, unsigned q, IterateDirection direction) {
  check_shapes(h);
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "iterate needs q >= 1");
  MultiMap acc = MultiMap::identity(h.ring, h.dim, 1);
  for (unsigned level = 2; level <= q; ++level) {
    if (direction == IterateDirection::Coproduct) {
      MultiMap step = level == 2 ? h.comult : tensor(h.comult, MultiMap::identity(h.ring, h.dim, level - 2));
      acc = compose(step, acc);
    } else {
      MultiMap step = level == 2 ? h.mult : tensor(h.mult, MultiMap::identity(h.ring, h.dim, level - 2));
      acc = compose(acc, step);
    }
  }
  return acc;
}

AntipodeOrders antipode_orders(const HopfPresentation& h) {
  check_shapes(h);
  const MultiMap id = MultiMap::identity(h.ring, h.dim, 1);
  const std::size_t bound = 4 * h.dim;
  auto order_of = [&](const MultiMap& f) {
    MultiMap power = f;
    for (std::size_t t = 1; t <= bound; ++t) {
      if (power == id) return t;
      power = compose(f, power);
    }
    throw Error(ErrorCode::OrderNotFound, "no order up to " + std::to_string(bound));
  };
  AntipodeOrders o;
  o.order = order_of(h.antipode);
  o.sq_order = order_of(compose(h.antipode, h.antipode));
  return o;
}

RingElement trace_antipode_squared(const HopfPresentation& h) {
  check_shapes(h);
  const MultiMap s2 = compose(h.antipode, h.antipode);
  RingElement t = h.ring.zero();
  for (std::size_t i = 0; i < h.dim; ++i) t = h.ring.add(t, s2.at(i, i));
  return t;
}

std::vector<std::vector<RingElement>> integral(const HopfPresentation& h, Side side) {
  check_shapes(h);
  require_field(h.ring, "integral");
  const Ring& ring = h.ring;
  const std::size_t n = h.dim;
  Matrix m(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t in = side == Side::Left ? a * n + j : j * n + a;
      for (std::size_t k = 0; k < n; ++k) {
        RingElement v = h.mult.at(k, in);
        if (j == k) v = ring.sub(v, h.counit.at(0, a));
        m(a * n + k, j) = v;
      }
    }
  const Vec zero(n * n);
  return solve_field(ring, m, zero).kernel_basis;
}

namespace {

bool has_nonzero_counit(const HopfPresentation& h, const std::vector<Vec>& space) {
  for (const auto& v : space) {
    RingElement s = h.ring.zero();
    for (std::size_t i = 0; i < h.dim; ++i) s = h.ring.fma(s, h.counit.at(0, i), v[i]);
    if (!h.ring.is_zero(s)) return true;
  }
  return false;
}

}  // namespace

bool is_semisimple(const HopfPresentation& h) { return has_nonzero_counit(h, integral(h, Side::Left)); }

bool is_cosemisimple(const HopfPresentation& h) { return is_semisimple(dual(h)); }

std::uint64_t root_search_bound() {
  if (const char* env = std::getenv("HOPFKIT_ROOT_SEARCH_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 16;
}

namespace {

// polynomial c_0 + c_1 t + ... (monic, highest coefficient last)
std::vector<RingElement> minimal_polynomial(const Ring& field, std::size_t n, const MultiMap& mult,
                                            std::span<const RingElement> unit, std::size_t b) {
  std::vector<Vec> powers;
  powers.emplace_back(unit.begin(), unit.end());
  Echelon ech(field, n, false);
  ech.add_row(to_sparse(field, powers[0]));
  for (std::size_t d = 1; d <= n + 1; ++d) {
    Vec next(n);
    const Vec& prev = powers.back();
    for (std::size_t j = 0; j < n; ++j) {
      if (field.is_zero(prev[j])) continue;
      for (std::size_t k = 0; k < n; ++k) next[k] = field.fma(next[k], mult.at(k, b * n + j), prev[j]);
    }
    if (ech.add_row(to_sparse(field, next))) {
      powers.push_back(std::move(next));
      continue;
    }
    Matrix m(n, powers.size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < powers.size(); ++c) m(i, c) = powers[c][i];
    const auto sol = solve_field(field, m, next);
    if (!sol.particular) throw Error(ErrorCode::InternalAxiomFailure, "Krylov dependency not solvable");
    std::vector<RingElement> poly(powers.size() + 1);
    for (std::size_t c = 0; c < powers.size(); ++c) poly[c] = field.neg((*sol.particular)[c]);
    poly.back() = field.one();
    return poly;
  }
  throw Error(ErrorCode::InternalAxiomFailure, "minimal polynomial degree exceeds dimension");
}

std::vector<RingElement> roots_in_field(const Ring& field, const std::vector<RingElement>& poly) {
  std::vector<RingElement> roots;
  const std::uint64_t q = field.residue_field_size();
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    const RingElement x = field.residue_element(idx);
    RingElement v = field.zero();
    for (std::size_t c = poly.size(); c-- > 0;) v = field.fma(poly[c], v, x);
    if (field.is_zero(v)) roots.push_back(x);
  }
  return roots;
}

}  // namespace

std::vector<std::vector<RingElement>> algebra_characters(const Ring& field, std::size_t n, const MultiMap& mult,
                                                         std::span<const RingElement> unit) {
  require_field(field, "character search");
  if (field.residue_field_size() > root_search_bound())
    throw Error(ErrorCode::FieldTooLargeForRootSearch,
                "q = " + std::to_string(field.residue_field_size()) + " exceeds the root search bound");
  // each candidate space is a list of functionals (value vectors on the basis)
  std::vector<std::vector<Vec>> spaces(1);
  for (std::size_t i = 0; i < n; ++i) spaces[0].push_back(basis_vector(field, n, i));

  for (std::size_t b = 0; b < n && !spaces.empty(); ++b) {
    const auto roots = roots_in_field(field, minimal_polynomial(field, n, mult, unit, b));
    std::vector<std::vector<Vec>> next;
    for (const auto& w : spaces) {
      for (const auto& lambda : roots) {
        // Σ_t α_t (ψ_t(b e_x) - λ ψ_t(e_x)) = 0 for all x
        Matrix m(n, w.size());
        for (std::size_t t = 0; t < w.size(); ++t)
          for (std::size_t x = 0; x < n; ++x) {
            RingElement v = field.neg(field.mul(lambda, w[t][x]));
            for (std::size_t k = 0; k < n; ++k) v = field.fma(v, mult.at(k, b * n + x), w[t][k]);
            m(x, t) = v;
          }
        const auto kernel = solve_field(field, m, Vec(n)).kernel_basis;
        if (kernel.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& alpha : kernel) {
          Vec psi(n);
          for (std::size_t t = 0; t < w.size(); ++t)
            for (std::size_t k = 0; k < n; ++k) psi[k] = field.fma(psi[k], alpha[t], w[t][k]);
          sub.push_back(std::move(psi));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }

  std::vector<Vec> chars;
  for (const auto& w : spaces) {
    if (w.size() != 1) throw Error(ErrorCode::InternalAxiomFailure, "joint eigenspace of a character is not a line");
    RingElement at_one = field.zero();
    for (std::size_t k = 0; k < n; ++k) at_one = field.fma(at_one, unit[k], w[0][k]);
    if (field.is_zero(at_one)) continue;
    chars.push_back(detail::scale_vec(field, w[0], field.invert(at_one)));
  }
  return chars;
}

std::vector<std::vector<RingElement>> grouplikes(const HopfPresentation& h, bool central_only) {
  check_shapes(h);
  require_field(h.ring, "grouplike search");
  const HopfPresentation d = dual(h);
  const Vec dual_unit = d.unit.column(0);
  auto found = algebra_characters(h.ring, h.dim, d.mult, dual_unit);

  const Structure st(h);
  const Ring& ring = h.ring;
  const Vec one = st.unit();
  std::vector<Vec> out;
  for (auto& g : found) {
    Vec gg(h.dim * h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = 0; j < h.dim; ++j) gg[i * h.dim + j] = ring.mul(g[i], g[j]);
    if (st.comul(g) != gg || !ring.is_one(st.counit_of(g)))
      throw Error(ErrorCode::InternalAxiomFailure, "character is not grouplike");
    if (central_only) {
      bool central = true;
      for (std::size_t x = 0; x < h.dim && central; ++x) {
        const Vec ex = basis_vector(ring, h.dim, x);
        central = st.mul(g, ex) == st.mul(ex, g);
      }
      if (!central) continue;
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    const bool ua = a == one, ub = b == one;
    if (ua != ub) return ua;
    return a < b;
  });
  return out;
}

QtReport verify_qt(const HopfPresentation& h, const MultiMap& r) {
  check_shapes(h);
  const Ring& ring = h.ring;
  const std::size_t n = h.dim;
  if (!(r.ring() == ring) || r.arity_in() != 0 || r.arity_out() != 2 || r.dim_out() != n)
    throw Error(ErrorCode::ArityMismatch, "R must be a 0 -> 2 map on the algebra");
  const Structure st(h);
  QtReport rep;
  const Vec rv = r.column(0);
  const auto cop = coproduct_table(st);

  for (std::size_t x = 0; x < n; ++x) {
    const Vec dx = column_of(st.coproduct(x), n * n);
    if (st.mul(rv, dx, 2) != st.mul(swap_legs(dx, n), rv, 2)) {
      rep.failures.push_back("R Δ(x) != Δop(x) R at basis " + std::to_string(x));
      break;
    }
  }
  // R13, R23, R12 in A^{⊗3}
  Vec r13(n * n * n), r23(n * n * n), r12(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RingElement& c = rv[i * n + j];
      if (ring.is_zero(c)) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (ring.is_zero(st.unit()[u])) continue;
        const RingElement cu = ring.mul(c, st.unit()[u]);
        r13[(i * n + u) * n + j] = ring.add(r13[(i * n + u) * n + j], cu);
        r23[(u * n + i) * n + j] = ring.add(r23[(u * n + i) * n + j], cu);
        r12[(i * n + j) * n + u] = ring.add(r12[(i * n + j) * n + u], cu);
      }
    }
  if (apply_first_leg(ring, n, rv, 1, cop, 2) != st.mul(r13, r23, 3))
    rep.failures.push_back("(Δ ⊗ I)R != R13 R23");
  if (apply_last_leg(ring, n, rv, cop, 2) != st.mul(r13, r12, 3)) rep.failures.push_back("(I ⊗ Δ)R != R13 R12");

  const Vec rbar = apply_first_leg(ring, n, rv, 1, antipode_table(st), 1);
  const Vec one2 = st.unit_power(2);
  if (st.mul(rv, rbar, 2) != one2 || st.mul(rbar, rv, 2) != one2)
    rep.failures.push_back("R is not invertible with inverse (S ⊗ I)R");

  rep.quasitriangular = rep.failures.empty();
  if (rep.quasitriangular) {
    rep.triangular = st.mul(swap_legs(rv, n), rv, 2) == one2;
    if (!rep.triangular) rep.failures.push_back("R21 R != 1 ⊗ 1");
  }
  return rep;
}

DrinfeldElement drinfeld_u(const HopfPresentation& h, const MultiMap& r) {
  check_shapes(h);
  const Ring& ring = h.ring;
  const std::size_t n = h.dim;
  const Structure st(h);
  DrinfeldElement out;
  out.u.assign(n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RingElement& c = r.at(i * n + j, 0);
      if (ring.is_zero(c)) continue;
      for (const auto& [sj, sv] : st.antipode(j)) st.accumulate_product(sj, i, 1, ring.mul(c, sv), out.u);
    }
  out.equals_antipode = st.apply_antipode(out.u) == out.u;
  out.squares_to_one = st.mul(out.u, out.u) == st.unit();
  return out;
}

MorphismReport verify_morphism(const HopfMorphism& phi) {
  check_shapes(phi.source);
  check_shapes(phi.target);
  const Ring& ring = phi.source.ring;
  if (!(phi.target.ring == ring) || !(phi.map.ring() == ring))
    throw Error(ErrorCode::DescriptorMismatch, "morphism data over different rings");
  const std::size_t na = phi.source.dim, nb = phi.target.dim;
  if (phi.map.arity_in() != 1 || phi.map.arity_out() != 1 || phi.map.dim_in() != na || phi.map.dim_out() != nb)
    throw Error(ErrorCode::ArityMismatch, "morphism map has the wrong shape");
  const Structure sa(phi.source), sb(phi.target);
  std::vector<Vec> img(na);
  for (std::size_t a = 0; a < na; ++a) img[a] = phi.map.column(a);
  auto apply = [&](const Vec& x) {
    Vec y(nb);
    for (std::size_t a = 0; a < na; ++a) {
      if (ring.is_zero(x[a])) continue;
      for (std::size_t b = 0; b < nb; ++b) y[b] = ring.fma(y[b], img[a][b], x[a]);
    }
    return y;
  };

  MorphismReport rep;
  rep.multiplicative = true;
  for (std::size_t a = 0; a < na && rep.multiplicative; ++a)
    for (std::size_t b = 0; b < na && rep.multiplicative; ++b)
      rep.multiplicative = apply(column_of(sa.product(a, b), na)) == sb.mul(img[a], img[b]);

  rep.comultiplicative = true;
  for (std::size_t a = 0; a < na && rep.comultiplicative; ++a) {
    Vec rhs(nb * nb);
    for (const auto& [xy, v] : sa.coproduct(a)) {
      const std::size_t x = xy / na, y = xy % na;
      for (std::size_t i = 0; i < nb; ++i) {
        if (ring.is_zero(img[x][i])) continue;
        const RingElement vi = ring.mul(v, img[x][i]);
        for (std::size_t j = 0; j < nb; ++j) rhs[i * nb + j] = ring.fma(rhs[i * nb + j], vi, img[y][j]);
      }
    }
    rep.comultiplicative = sb.comul(img[a]) == rhs;
  }
  rep.unital = apply(sa.unit()) == sb.unit();
  rep.counital = true;
  for (std::size_t a = 0; a < na && rep.counital; ++a) rep.counital = sb.counit_of(img[a]) == sa.counit()[a];
  return rep;
}

HopfMorphism theta(const HopfPresentation& h, const MultiMap& r) {
  check_shapes(h);
  const std::size_t n = h.dim;
  MultiMap map = MultiMap::zero(h.ring, n, 1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) map.at(j, i) = r.at(i * n + j, 0);
  HopfMorphism phi{dual_cop(h), h, std::move(map)};
  if (!verify_morphism(phi).verified()) throw Error(ErrorCode::ThetaNotHopfMap, "θ_R is not a Hopf morphism");
  return phi;
}

MultiMap r_from_theta(const MultiMap& theta_map) {
  const std::size_t n = theta_map.dim_in();
  MultiMap r = MultiMap::zero(theta_map.ring(), n, 0, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i * n + j, 0) = theta_map.at(j, i);
  return r;
}

std::vector<std::size_t> irreducible_dimensions(const HopfPresentation& h) {
  check_shapes(h);
  require_field(h.ring, "irreducible_dimensions");
  if (!is_semisimple(h)) throw Error(ErrorCode::NotSemisimple, "algebra is not semisimple");
  const Ring& ring = h.ring;
  const std::size_t n = h.dim;
  const Structure st(h);

  // center: z e_x = e_x z for all x
  Matrix cm(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) cm(x * n + k, j) = ring.sub(h.mult.at(k, j * n + x), h.mult.at(k, x * n + j));
  const auto center = solve_field(ring, cm, Vec(n * n)).kernel_basis;
  const std::size_t s = center.size();

  Matrix zm(n, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < s; ++c) zm(i, c) = center[c][i];
  auto coords = [&](const Vec& v) {
    const auto sol = solve_field(ring, zm, v);
    if (!sol.particular) throw Error(ErrorCode::InternalAxiomFailure, "center is not closed");
    return *sol.particular;
  };
  MultiMap zmult = MultiMap::zero(ring, s, 2, 1);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const Vec c = coords(st.mul(center[a], center[b]));
      for (std::size_t k = 0; k < s; ++k) zmult.at(k, a * s + b) = c[k];
    }
  const Vec zunit = coords(st.unit());
  const auto chars = algebra_characters(ring, s, zmult, zunit);
  if (chars.size() < s) throw Error(ErrorCode::NotSplit, "center does not split over the base field");

  Matrix cmat(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t a = 0; a < s; ++a) cmat(i, a) = chars[i][a];
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  for (std::size_t j = 0; j < s; ++j) {
    const auto sol = solve_field(ring, cmat, basis_vector(ring, s, j));
    if (!sol.particular) throw Error(ErrorCode::InternalAxiomFailure, "character matrix is singular");
    Vec e(n);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t k = 0; k < n; ++k) e[k] = ring.fma(e[k], (*sol.particular)[a], center[a][k]);
    Matrix lm(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      const Vec col = st.mul(e, basis_vector(ring, n, x));
      for (std::size_t k = 0; k < n; ++k) lm(k, x) = col[k];
    }
    const std::size_t sq = rank_field(ring, lm);
    std::size_t root = 0;
    while ((root + 1) * (root + 1) <= sq) ++root;
    if (root * root != sq) throw Error(ErrorCode::NotSplit, "block of non-square dimension");
    dims.push_back(root);
    total += sq;
  }
  if (total != n) throw Error(ErrorCode::InternalAxiomFailure, "block dimensions do not add up");
  std::sort(dims.begin(), dims.end());
  return dims;
}

AnalysisReport analyze(const HopfPresentation& h) {
  check_shapes(h);
  AnalysisReport rep;
  const HopfPresentation base = h.ring.is_field() ? h : change_ring(h, h.ring.residue_field());
  rep.semisimple = is_semisimple(base);
  rep.cosemisimple = is_cosemisimple(base);
  rep.commutative = is_commutative(h);
  rep.cocommutative = is_cocommutative(h);
  const auto orders = antipode_orders(h);
  rep.antipode_order = orders.order;
  rep.antipode_sq_order = orders.sq_order;
  rep.trace_s2 = trace_antipode_squared(h);
  rep.dim_in_k = h.ring.from_int(static_cast<std::int64_t>(h.dim));
  if (h.ring.is_field() && h.ring.residue_field_size() <= root_search_bound()) {
    rep.grouplikes = grouplikes(h, false);
    rep.central_grouplikes = grouplikes(h, true);
    rep.grouplikes_computed = true;
  }
  return rep;
}

HopfPresentation builtin_presentation(std::string_view name, const Ring& ring) {
  if (name.starts_with("dual:")) return dual(group_algebra(ring, builtin_group_table(name.substr(5))));
  if (name.starts_with("double:"))
    return drinfeld_double(group_algebra(ring, builtin_group_table(name.substr(7)))).double_algebra;
  return group_algebra(ring, builtin_group_table(name));
}

}  // namespace hopfkit
