#include "hopfkit/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"
#include "structure.hpp"

namespace hopfkit {

using detail::Structure;
using detail::Vec;

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  if (const char* env = std::getenv(name)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return fallback;
}

struct CoactionTerm {
  std::uint32_t k;  // basis tensor of A^{⊗legs} being coacted on
  std::uint32_t b;  // basis element of B
  RingElement c;
};

std::vector<std::size_t> digits(std::size_t flat, std::size_t n, unsigned legs) {
  std::vector<std::size_t> d(legs);
  for (unsigned t = legs; t-- > 0;) {
    d[t] = flat % n;
    flat /= n;
  }
  return d;
}

}  // namespace

std::size_t cohomology_budget() { return env_size("HOPFKIT_COHOMOLOGY_MAX_DIM", 6); }
std::size_t solve_budget() { return env_size("HOPFKIT_SOLVE_MAX_DIM", 12); }

struct BialgebraComplex::State {
  HopfPresentation a, b;
  MultiMap phi;
  Structure sa, sb;
  std::vector<SparseVector> phi_cols;
  // merge[k] = {(x, y, c) : e_x e_y has coefficient c at e_k}
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, RingElement>>> merge;

  mutable std::mutex mu;
  mutable std::map<unsigned, std::shared_ptr<const std::vector<SparseVector>>> boundary_tables;
  // coaction tables keyed by (legs, right side), indexed by the A^{⊗legs} tensor left after coacting
  mutable std::map<std::pair<unsigned, bool>, std::shared_ptr<const std::vector<std::vector<CoactionTerm>>>>
      coactions;
  // keyed by (degree, tracks combinations)
  mutable std::map<std::pair<unsigned, bool>, std::shared_ptr<const Echelon>> factorizations;

  State(HopfPresentation a_, HopfPresentation b_, MultiMap phi_)
      : a(std::move(a_)), b(std::move(b_)), phi(std::move(phi_)), sa(a), sb(b) {
    phi_cols.resize(a.dim);
    for (std::size_t x = 0; x < a.dim; ++x) phi_cols[x] = phi.sparse_column(x);
    merge.resize(a.dim);
    for (std::size_t x = 0; x < a.dim; ++x)
      for (std::size_t y = 0; y < a.dim; ++y)
        for (const auto& [k, c] : sa.product(x, y))
          merge[k].emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), c);
  }

  // Φ_legs(e_x) = φ^{⊗legs}(Δ_legs(e_x)) for every basis x
  std::shared_ptr<const std::vector<SparseVector>> boundary(unsigned legs) const {
    std::lock_guard lock(mu);
    auto& slot = boundary_tables[legs];
    if (slot) return slot;
    const Ring& ring = a.ring;
    auto table = std::make_shared<std::vector<SparseVector>>(a.dim);
    for (std::size_t x = 0; x < a.dim; ++x) {
      std::map<std::size_t, RingElement> acc;
      for (const auto& [idx, c] : sa.iterated_coproduct(x, legs)) {
        const auto d = digits(idx, a.dim, legs);
        auto rec = [&](auto&& self, unsigned t, std::size_t out, const RingElement& coef) -> void {
          if (t == legs) {
            acc[out] = ring.add(acc[out], coef);
            return;
          }
          for (const auto& [bk, bv] : phi_cols[d[t]]) self(self, t + 1, out * b.dim + bk, ring.mul(coef, bv));
        };
        rec(rec, 0, 0, c);
      }
      for (const auto& [idx, c] : acc)
        if (!ring.is_zero(c)) (*table)[x].emplace_back(static_cast<std::uint32_t>(idx), c);
    }
    slot = table;
    return slot;
  }

  // Left coaction (right = false): e_K -> Σ φ(x_1 ... x_P) ⊗ e_Y with Δ(e_{k_t}) ∋ e_{x_t} ⊗ e_{y_t}.
  // Right coaction (right = true): Δ(e_{k_t}) ∋ e_{y_t} ⊗ e_{x_t}. Indexed by Y.
  std::shared_ptr<const std::vector<std::vector<CoactionTerm>>> coaction(unsigned legs, bool right) const {
    std::lock_guard lock(mu);
    auto& slot = coactions[{legs, right}];
    if (slot) return slot;
    const Ring& ring = a.ring;
    const std::size_t n = a.dim;
    const std::size_t size = ipow(n, legs);
    auto table = std::make_shared<std::vector<std::vector<CoactionTerm>>>(size);
    for (std::size_t K = 0; K < size; ++K) {
      const auto kd = digits(K, n, legs);
      std::map<std::pair<std::size_t, std::size_t>, RingElement> acc;  // (Y, b) -> coefficient
      auto rec = [&](auto&& self, unsigned t, std::size_t y, const Vec& prod) -> void {
        if (t == legs) {
          for (std::size_t x = 0; x < n; ++x) {
            if (ring.is_zero(prod[x])) continue;
            for (const auto& [bk, bv] : phi_cols[x]) {
              auto& s = acc[{y, bk}];
              s = ring.fma(s, prod[x], bv);
            }
          }
          return;
        }
        for (const auto& [xy, c] : sa.coproduct(kd[t])) {
          const std::size_t x = right ? xy % n : xy / n;
          const std::size_t yy = right ? xy / n : xy % n;
          Vec next(n);
          for (std::size_t i = 0; i < n; ++i) {
            if (ring.is_zero(prod[i])) continue;
            sa.accumulate_product(i, x, 1, ring.mul(prod[i], c), next);
          }
          self(self, t + 1, y * n + yy, next);
        }
      };
      rec(rec, 0, 0, sa.unit());
      for (const auto& [key, c] : acc)
        if (!ring.is_zero(c))
          (*table)[key.first].push_back(
              CoactionTerm{static_cast<std::uint32_t>(K), static_cast<std::uint32_t>(key.second), c});
    }
    slot = table;
    return slot;
  }
};

BialgebraComplex::BialgebraComplex(HopfPresentation a, HopfPresentation b, MultiMap phi) {
  check_shapes(a);
  check_shapes(b);
  if (!(a.ring == b.ring) || !(phi.ring() == a.ring))
    throw Error(ErrorCode::DescriptorMismatch, "complex data over different rings");
  HopfMorphism m{a, b, phi};
  if (!verify_morphism(m).verified()) throw Error(ErrorCode::InvalidArgument, "φ is not a bialgebra morphism");
  state_ = std::make_shared<State>(std::move(a), std::move(b), std::move(phi));
}

BialgebraComplex::BialgebraComplex(HopfPresentation a) {
  check_shapes(a);
  MultiMap id = MultiMap::identity(a.ring, a.dim, 1);
  state_ = std::make_shared<State>(a, a, std::move(id));
}

BialgebraComplex::~BialgebraComplex() = default;
BialgebraComplex::BialgebraComplex(const BialgebraComplex&) = default;
BialgebraComplex& BialgebraComplex::operator=(const BialgebraComplex&) = default;

const HopfPresentation& BialgebraComplex::source() const { return state_->a; }
const HopfPresentation& BialgebraComplex::target() const { return state_->b; }
const MultiMap& BialgebraComplex::morphism() const { return state_->phi; }
const Ring& BialgebraComplex::ring() const { return state_->a.ring; }

namespace {

void require_cochain(const BialgebraComplex& cx, const MultiMap& f, bool allow_empty_input) {
  if (!(f.ring() == cx.ring())) throw Error(ErrorCode::DescriptorMismatch, "cochain over a different ring");
  if ((!allow_empty_input && f.arity_in() == 0) || f.arity_out() == 0)
    throw Error(ErrorCode::ArityMismatch, "cochain arities out of range");
  if ((f.arity_in() > 0 && f.dim_in() != cx.source().dim) || f.dim_out() != cx.target().dim)
    throw Error(ErrorCode::ArityMismatch, "cochain dimensions do not match the complex");
}

}  // namespace

MultiMap BialgebraComplex::d_alg(const MultiMap& f) const {
  require_cochain(*this, f, false);
  const State& s = *state_;
  const Ring& ring = s.a.ring;
  const std::size_t na = s.a.dim, nb = s.b.dim;
  const unsigned P = f.arity_in(), Q = f.arity_out();  // p + 1, q + 1
  const unsigned p = P - 1;
  MultiMap g(ring, na, nb, P + 1, Q);
  const auto phi_q = s.boundary(Q);
  const std::size_t in_size = f.in_size();

  const RingElement first_sign = (p + 1) % 2 ? ring.neg(ring.one()) : ring.one();
  const RingElement minus_one = ring.neg(ring.one());
  const std::size_t out_size = f.out_size();
  // Φ(x) e_J and e_J Φ(y) depend only on J; collect them once per J
  std::vector<SparseVector> left(na), right(na);
  std::vector<RingElement> scratch(out_size);
  auto collect = [&](std::size_t J, bool on_left, std::size_t x) {
    std::vector<std::size_t> touched;
    for (const auto& [K, c] : (*phi_q)[x]) {
      auto add_to = [&](std::size_t out, const RingElement& w) {
        if (ring.is_zero(scratch[out])) touched.push_back(out);
        scratch[out] = ring.add(scratch[out], w);
      };
      if (on_left)
        s.sb.for_each_product(K, J, Q, c, add_to);
      else
        s.sb.for_each_product(J, K, Q, c, add_to);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    SparseVector out;
    for (std::size_t t : touched) {
      if (!ring.is_zero(scratch[t])) out.emplace_back(static_cast<std::uint32_t>(t), scratch[t]);
      scratch[t] = RingElement{};
    }
    return out;
  };
  for (std::size_t J = 0; J < out_size; ++J) {
    bool any = false;
    for (std::size_t I = 0; I < in_size && !any; ++I) any = !ring.is_zero(f.at(J, I));
    if (!any) continue;
    for (std::size_t x = 0; x < na; ++x) {
      left[x] = collect(J, true, x);
      right[x] = collect(J, false, x);
    }
    for (std::size_t I = 0; I < in_size; ++I) {
      const RingElement& v = f.at(J, I);
      if (ring.is_zero(v)) continue;
      // (-1)^{p+1} Φ(a_1) f(a_2, ..., a_{p+2})
      const RingElement lv = ring.mul(first_sign, v);
      for (std::size_t x = 0; x < na; ++x)
        for (const auto& [out, w] : left[x]) {
          auto& slot = g.at(out, x * in_size + I);
          slot = ring.fma(slot, lv, w);
        }
      // merged pairs a_t a_{t+1}, sign (-1)^{p + t} for 0-based t
      const auto id = digits(I, na, P);
      for (unsigned t = 0; t < P; ++t) {
        const RingElement sign = (p + t) % 2 ? minus_one : ring.one();
        const std::size_t head_w = ipow(na, P - t), tail_w = ipow(na, P - 1 - t);
        const std::size_t head = I / head_w, tail = I % tail_w;
        for (const auto& [x, y, c] : s.merge[id[t]]) {
          const std::size_t in = ((head * na + x) * na + y) * tail_w + tail;
          auto& slot = g.at(J, in);
          slot = ring.fma(slot, sign, ring.mul(c, v));
        }
      }
      // -f(a_1, ..., a_{p+1}) Φ(a_{p+2})
      const RingElement rv = ring.neg(v);
      for (std::size_t y = 0; y < na; ++y)
        for (const auto& [out, w] : right[y]) {
          auto& slot = g.at(out, I * na + y);
          slot = ring.fma(slot, rv, w);
        }
    }
  }
  return g;
}

MultiMap BialgebraComplex::d_coalg(const MultiMap& f) const {
  require_cochain(*this, f, true);
  const State& s = *state_;
  const Ring& ring = s.a.ring;
  const std::size_t na = s.a.dim, nb = s.b.dim;
  const unsigned P = f.arity_in(), Q = f.arity_out();
  MultiMap g(ring, na, nb, P, Q + 1);
  const auto left = s.coaction(P, false);
  const auto right = s.coaction(P, true);
  const std::size_t out_size = f.out_size();
  const RingElement minus_one = ring.neg(ring.one());
  const RingElement last_sign = (Q + 1) % 2 ? minus_one : ring.one();

  for (std::size_t J = 0; J < out_size; ++J)
    for (std::size_t Y = 0; Y < f.in_size(); ++Y) {
      const RingElement& v = f.at(J, Y);
      if (ring.is_zero(v)) continue;
      // Σ φ(a_1' ... a_{p+1}') ⊗ f(a_1'', ..., a_{p+1}'')
      for (const auto& t : (*left)[Y]) {
        auto& slot = g.at(t.b * out_size + J, t.k);
        slot = ring.fma(slot, t.c, v);
      }
      // (-1)^j Δ on output leg j
      for (unsigned j = 1; j <= Q; ++j) {
        const RingElement sign = j % 2 ? minus_one : ring.one();
        const std::size_t tail_w = ipow(nb, Q - j);
        const std::size_t head = J / (tail_w * nb), leg = (J / tail_w) % nb, tail = J % tail_w;
        for (const auto& [xy, c] : s.sb.coproduct(leg)) {
          const std::size_t out = (head * nb * nb + xy) * tail_w + tail;
          auto& slot = g.at(out, Y);
          slot = ring.fma(slot, sign, ring.mul(c, v));
        }
      }
      // (-1)^{q+2} Σ f(a_1', ..., a_{p+1}') ⊗ φ(a_1'' ... a_{p+1}'')
      for (const auto& t : (*right)[Y]) {
        auto& slot = g.at(J * nb + t.b, t.k);
        slot = ring.fma(slot, last_sign, ring.mul(t.c, v));
      }
    }
  return g;
}

TotalCochain BialgebraComplex::zero(unsigned degree) const {
  TotalCochain z{degree, {}};
  for (unsigned p = 0; p <= degree; ++p)
    z.components.emplace_back(ring(), source().dim, target().dim, p + 1, degree - p + 1);
  return z;
}

TotalCochain BialgebraComplex::d_total(const TotalCochain& x) const {
  if (x.components.size() != x.degree + 1) throw Error(ErrorCode::ArityMismatch, "cochain has the wrong component count");
  TotalCochain out = zero(x.degree + 1);
  for (unsigned p = 0; p <= x.degree; ++p) {
    const MultiMap& f = x.components[p];
    if (f.arity_in() != p + 1 || f.arity_out() != x.degree - p + 1)
      throw Error(ErrorCode::ArityMismatch, "component has the wrong arity");
    if (f.is_zero()) continue;
    out.components[p + 1] = add(out.components[p + 1], d_alg(f));
    const MultiMap dc = d_coalg(f);
    out.components[p] = p % 2 ? sub(out.components[p], dc) : add(out.components[p], dc);
  }
  return out;
}

bool BialgebraComplex::is_cocycle(const TotalCochain& z) const {
  for (const auto& c : d_total(z).components)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t BialgebraComplex::cochain_size(unsigned degree) const {
  std::size_t total = 0;
  for (unsigned p = 0; p <= degree; ++p) total += ipow(source().dim, p + 1) * ipow(target().dim, degree - p + 1);
  return total;
}

std::vector<RingElement> BialgebraComplex::flatten(const TotalCochain& x) const {
  std::vector<RingElement> v;
  v.reserve(cochain_size(x.degree));
  for (const auto& c : x.components) v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
  return v;
}

TotalCochain BialgebraComplex::unflatten(unsigned degree, std::span<const RingElement> v) const {
  if (v.size() != cochain_size(degree)) throw Error(ErrorCode::ArityMismatch, "flat cochain has the wrong length");
  TotalCochain x = zero(degree);
  std::size_t off = 0;
  for (auto& c : x.components) {
    std::copy(v.begin() + off, v.begin() + off + c.coeffs().size(), c.coeffs().begin());
    off += c.coeffs().size();
  }
  return x;
}

namespace {

// Rows of the matrix of d: C^{n-1} -> C^n, inserted into an echelon factorization.
std::shared_ptr<const Echelon> factor_differential(const BialgebraComplex& cx, unsigned n, bool track) {
  const Ring& ring = cx.ring();
  const std::size_t cols = cx.cochain_size(n - 1), rows = cx.cochain_size(n);
  std::vector<SparseVector> row_lists(rows);
  std::vector<RingElement> unit(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    unit[j] = ring.one();
    const TotalCochain e = cx.unflatten(n - 1, unit);
    unit[j] = ring.zero();
    std::size_t off = 0;
    for (const auto& comp : cx.d_total(e).components) {
      const auto coeffs = comp.coeffs();
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!ring.is_zero(coeffs[i])) row_lists[off + i].emplace_back(static_cast<std::uint32_t>(j), coeffs[i]);
      off += coeffs.size();
    }
  }
  auto ech = std::make_shared<Echelon>(ring, cols, track);
  for (const auto& r : row_lists) ech->add_row(r);
  return ech;
}

}  // namespace

std::optional<TotalCochain> BialgebraComplex::solve_coboundary(const TotalCochain& z) const {
  if (z.degree == 0) throw Error(ErrorCode::InvalidArgument, "coboundary solve needs degree >= 1");
  if (!ring().is_field()) throw Error(ErrorCode::InvalidArgument, "coboundary solve needs a field");
  if (std::max(source().dim, target().dim) > solve_budget())
    throw Error(ErrorCode::BudgetExceeded, "dimension above the coboundary solve budget");
  if (!is_cocycle(z)) throw Error(ErrorCode::NotACocycle, "d(z) != 0");
  std::shared_ptr<const Echelon> ech;
  {
    std::lock_guard lock(state_->mu);
    ech = state_->factorizations[{z.degree, true}];
  }
  if (!ech) {
    ech = factor_differential(*this, z.degree, true);
    std::lock_guard lock(state_->mu);
    auto& slot = state_->factorizations[{z.degree, true}];
    if (!slot) slot = ech;
    ech = slot;
  }
  const auto sol = ech->solve(flatten(z));
  if (!sol) return std::nullopt;
  TotalCochain x = unflatten(z.degree - 1, *sol);
  if (d_total(x) != z) throw Error(ErrorCode::InternalAxiomFailure, "coboundary solution does not check");
  return x;
}

std::size_t BialgebraComplex::differential_rank(unsigned n) const {
  if (n == 0) return 0;
  if (!ring().is_field()) throw Error(ErrorCode::InvalidArgument, "ranks need a field");
  std::shared_ptr<const Echelon> ech;
  {
    std::lock_guard lock(state_->mu);
    for (bool track : {true, false}) {
      auto it = state_->factorizations.find({n, track});
      if (it != state_->factorizations.end() && it->second) ech = it->second;
    }
  }
  if (!ech) {
    ech = factor_differential(*this, n, false);
    std::lock_guard lock(state_->mu);
    auto& slot = state_->factorizations[{n, false}];
    if (!slot) slot = ech;
  }
  return ech->rank();
}

std::size_t BialgebraComplex::cohomology_dim(unsigned n) const {
  if (n > 2) throw Error(ErrorCode::InvalidArgument, "cohomology is computed in degrees 0..2");
  const std::size_t d = std::max(source().dim, target().dim);
  if ((n == 2 && d > cohomology_budget()) || d > solve_budget())
    throw Error(ErrorCode::BudgetExceeded, "dimension " + std::to_string(d) + " above the cohomology budget");
  return cochain_size(n) - differential_rank(n + 1) - differential_rank(n);
}

std::size_t BialgebraComplex::invariants_complex_dim(unsigned n) const {
  if (n > 2) throw Error(ErrorCode::InvalidArgument, "cohomology is computed in degrees 0..2");
  if (source().dim > 4 || target().dim > 4)
    throw Error(ErrorCode::BudgetExceeded, "invariants complex is limited to dimension 4");
  if (!ring().is_field()) throw Error(ErrorCode::InvalidArgument, "ranks need a field");
  const State& s = *state_;
  const Ring& r = ring();
  const std::size_t na = s.a.dim, nb = s.b.dim;

  // K^q = {b in B^{⊗(q+1)} : Φ(a) b = b Φ(a) for all a}
  auto invariants = [&](unsigned q) {
    const unsigned legs = q + 1;
    const std::size_t size = ipow(nb, legs);
    const auto phi = s.boundary(legs);
    Matrix m(na * size, size);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t j = 0; j < size; ++j)
        for (const auto& [K, c] : (*phi)[x]) {
          s.sb.for_each_product(K, j, legs, c, [&](std::size_t out, const RingElement& w) {
            m(x * size + out, j) = r.add(m(x * size + out, j), w);
          });
          s.sb.for_each_product(j, K, legs, c, [&](std::size_t out, const RingElement& w) {
            m(x * size + out, j) = r.sub(m(x * size + out, j), w);
          });
        }
    return solve_field(r, m, Vec(na * size)).kernel_basis;
  };
  auto rank_of_d = [&](unsigned q, const std::vector<Vec>& basis) -> std::size_t {
    if (basis.empty()) return 0;
    Echelon e(r, ipow(nb, q + 2), false);
    for (const auto& v : basis) {
      MultiMap f(r, na, nb, 0, q + 1);
      std::copy(v.begin(), v.end(), f.coeffs().begin());
      const MultiMap dv = d_coalg(f);
      e.add_row(to_sparse(r, std::vector<RingElement>(dv.coeffs().begin(), dv.coeffs().end())));
    }
    return e.rank();
  };
  const auto kn = invariants(n);
  const std::size_t rank_out = rank_of_d(n, kn);
  const std::size_t rank_in = n == 0 ? 0 : rank_of_d(n - 1, invariants(n - 1));
  return kn.size() - rank_out - rank_in;
}

}  // namespace hopfkit
