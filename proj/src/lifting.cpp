#include "hopfkit/lifting.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

LiftStrategy LiftStrategy::parse(const std::string& text) {
  if (text == "canonical") return canonical();
  const std::string prefix = "perturbed:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    const std::string digits = text.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos)
      return perturbed(std::stoull(digits));
  }
  throw Error(ErrorCode::InvalidArgument, "strategy must be canonical or perturbed:SEED, got " + text);
}

std::string LiftStrategy::to_string() const {
  return kind == Kind::Canonical ? "canonical" : "perturbed:" + std::to_string(seed);
}

void require_liftable(const HopfPresentation& base) {
  check_shapes(base);
  if (!base.ring.is_field()) throw Error(ErrorCode::InvalidArgument, "lifting starts from a field");
  if (!verify_hopf(base).verified()) throw Error(ErrorCode::InvalidArgument, "base fails the Hopf axioms");
  if (!is_semisimple(base) || !is_cosemisimple(base))
    throw Error(ErrorCode::NotSemisimpleOrCosemisimple, "base must be semisimple and cosemisimple");
}

namespace {

MultiMap perturb(const MultiMap& f, std::mt19937_64& rng, unsigned k) {
  const Ring& ring = f.ring();
  MultiMap noise(ring, f.dim_in(), f.dim_out(), f.arity_in(), f.arity_out());
  for (auto& c : noise.coeffs()) {
    std::int64_t digits[kMaxDegree] = {};
    for (unsigned t = 0; t < ring.degree(); ++t) digits[t] = static_cast<std::int64_t>(rng() % ring.p());
    c = ring.from_coeffs(std::span<const std::int64_t>(digits, ring.degree()));
  }
  return add(f, times_p_power(noise, k));
}

Ring ring_at(const HopfPresentation& base, unsigned precision) { return base.ring.with_precision(precision); }

bool all_zero(const TotalCochain& x) {
  for (const auto& c : x.components)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t support(const TotalCochain& x) {
  std::size_t s = 0;
  for (const auto& c : x.components) s += c.support_size();
  return s;
}

TotalCochain change_ring(const TotalCochain& x, const Ring& target) {
  TotalCochain y{x.degree, {}};
  for (const auto& c : x.components) y.components.push_back(hopfkit::change_ring(c, target));
  return y;
}

// Solves the unit from m(u ⊗ e_x) = e_x = m(e_x ⊗ u).
MultiMap recover_unit(const MultiMap& mult) {
  const Ring& ring = mult.ring();
  const std::size_t n = mult.dim_out();
  Matrix m(2 * n * n, n);
  std::vector<RingElement> rhs(2 * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        m(x * n + k, j) = mult.at(k, j * n + x);
        m(n * n + x * n + k, j) = mult.at(k, x * n + j);
      }
      if (x == k) rhs[x * n + k] = rhs[n * n + x * n + k] = ring.one();
    }
  const auto u = hensel_solve_full_rank(ring, m, rhs);
  return MultiMap::vector(ring, u);
}

// Solves the counit from (ε ⊗ I)Δ = I = (I ⊗ ε)Δ.
MultiMap recover_counit(const MultiMap& comult) {
  const Ring& ring = comult.ring();
  const std::size_t n = comult.dim_in();
  Matrix m(2 * n * n, n);
  std::vector<RingElement> rhs(2 * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        m(a * n + k, j) = comult.at(j * n + k, a);
        m(n * n + a * n + k, j) = comult.at(k * n + j, a);
      }
      if (a == k) rhs[a * n + k] = rhs[n * n + a * n + k] = ring.one();
    }
  const auto e = hensel_solve_full_rank(ring, m, rhs);
  return MultiMap::covector(ring, e);
}

void require_same_lift_shape(const LiftState& s1, const LiftState& s2) {
  if (!(s1.base == s2.base) || s1.precision != s2.precision)
    throw Error(ErrorCode::DifferentBaseOrPrecision, "lifts differ in base or precision");
}

}  // namespace

RawPair extend_pair(const HopfPresentation& current, const LiftStrategy& strategy) {
  const unsigned k = current.ring.precision();
  const Ring target = current.ring.with_precision(k + 1);
  RawPair pair{change_ring(current.mult, target), change_ring(current.comult, target)};
  if (strategy.kind == LiftStrategy::Kind::Perturbed) {
    std::seed_seq seq{strategy.seed, static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    pair.mult = perturb(pair.mult, rng, k);
    pair.comult = perturb(pair.comult, rng, k);
  }
  return pair;
}

RawPair initial_lift(const HopfPresentation& base, const LiftStrategy& strategy) {
  require_liftable(base);
  return extend_pair(base, strategy);
}

namespace {

// (m ⊗ m)(I ⊗ τ ⊗ I)(Δ ⊗ Δ), contracting one leg at a time.
MultiMap product_of_coproducts(const MultiMap& m, const MultiMap& d) {
  const Ring& ring = m.ring();
  const std::size_t n = m.dim_out();
  MultiMap out = MultiMap::zero(ring, n, 2, 2);
  std::vector<RingElement> u1(n * n * n), u(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(u1.begin(), u1.end(), RingElement{});
      std::fill(u.begin(), u.end(), RingElement{});
      for (std::size_t x1y1 = 0; x1y1 < n * n; ++x1y1) {
        const RingElement& da = d.at(x1y1, a);
        if (ring.is_zero(da)) continue;
        const std::size_t x1 = x1y1 / n, y1 = x1y1 % n;
        for (std::size_t x2 = 0; x2 < n; ++x2)
          for (std::size_t k = 0; k < n; ++k) {
            RingElement& slot = u1[(x2 * n + k) * n + y1];
            slot = ring.fma(slot, da, m.at(k, x1 * n + x2));
          }
      }
      for (std::size_t x2y2 = 0; x2y2 < n * n; ++x2y2) {
        const RingElement& db = d.at(x2y2, b);
        if (ring.is_zero(db)) continue;
        const std::size_t x2 = x2y2 / n, y2 = x2y2 % n;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t y1 = 0; y1 < n; ++y1) {
            RingElement& slot = u[(k * n + y1) * n + y2];
            slot = ring.fma(slot, db, u1[(x2 * n + k) * n + y1]);
          }
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t y = 0; y < n * n; ++y) {
          const RingElement& c = u[k * n * n + y];
          if (ring.is_zero(c)) continue;
          for (std::size_t l = 0; l < n; ++l) {
            RingElement& slot = out.at(k * n + l, a * n + b);
            slot = ring.fma(slot, c, m.at(l, y));
          }
        }
    }
  return out;
}

}  // namespace

TotalCochain associator_defect(const RawPair& pair) {
  const Ring& ring = pair.mult.ring();
  const std::size_t n = pair.mult.dim_out();
  const MultiMap id = MultiMap::identity(ring, n, 1);
  const MultiMap& m = pair.mult;
  const MultiMap& d = pair.comult;

  TotalCochain a{2, {}};
  a.components.push_back(sub(compose(tensor(id, d), d), compose(tensor(d, id), d)));
  a.components.push_back(sub(compose(d, m), product_of_coproducts(m, d)));
  a.components.push_back(sub(compose(m, tensor(id, m)), compose(m, tensor(m, id))));
  return a;
}

ObstructionReport obstruction(const RawPair& pair, const BialgebraComplex& base_complex) {
  const Ring& ring = pair.mult.ring();
  if (!(ring.residue_field() == base_complex.ring()))
    throw Error(ErrorCode::DescriptorMismatch, "pair does not reduce to the base field");
  const unsigned k = ring.precision() - 1;
  const TotalCochain a = associator_defect(pair);
  ObstructionReport rep;
  rep.c.degree = 2;
  for (const auto& comp : a.components) {
    for (const auto& v : comp.coeffs())
      if (ring.valuation(v) < k) throw Error(ErrorCode::NotDivisible, "defect is not divisible by p^k");
    rep.c.components.push_back(divide_p_power_to_residue(comp, k));
  }
  rep.cocycle_ok = base_complex.is_cocycle(rep.c);
  return rep;
}

Correction correct(const RawPair& pair, const ObstructionReport& report, const BialgebraComplex& base_complex) {
  const Ring& ring = pair.mult.ring();
  const unsigned k = ring.precision() - 1;
  const std::size_t n = pair.mult.dim_out();
  Correction out;
  RawPair fixed = pair;
  if (!all_zero(report.c)) {
    if (!report.cocycle_ok) throw Error(ErrorCode::CoboundaryUnsolvable, "obstruction is not a cocycle");
    const auto x = base_complex.solve_coboundary(report.c);
    if (!x) throw Error(ErrorCode::CoboundaryUnsolvable, "obstruction is not a coboundary");
    out.correction_support = support(*x);
    out.solver_rank = base_complex.differential_rank(2);
    const TotalCochain lifted = change_ring(*x, ring);
    // degree-1 parts ordered by p: [0] is δ in C^{0,1}, [1] is μ in C^{1,0}
    fixed.comult = sub(pair.comult, times_p_power(lifted.components[0], k));
    fixed.mult = sub(pair.mult, times_p_power(lifted.components[1], k));
  }
  if (!all_zero(associator_defect(fixed)))
    throw Error(ErrorCode::PostAxiomFailure, "corrected pair still has a nonzero defect");

  HopfPresentation h{ring, n, fixed.mult, MultiMap::zero(ring, n, 0, 1), fixed.comult, MultiMap::zero(ring, n, 1, 0),
                     MultiMap::zero(ring, n, 1, 1)};
  try {
    h.unit = recover_unit(h.mult);
    h.counit = recover_counit(h.comult);
  } catch (const Error& e) {
    throw Error(ErrorCode::PostAxiomFailure, std::string("unit or counit recovery failed: ") + e.what());
  }
  const AxiomReport rep = verify_hopf(h);
  if (!rep.bialgebra_verified()) {
    for (const auto& c : rep.checks)
      if (!c.passed && c.name != "left_antipode" && c.name != "right_antipode")
        throw Error(ErrorCode::PostAxiomFailure, "corrected bialgebra fails " + c.name);
  }
  out.bialgebra = std::move(h);
  return out;
}

MultiMap solve_antipode(const HopfPresentation& h) {
  const Ring& ring = h.ring;
  const std::size_t n = h.dim;
  // unknown S.at(j, x) sits at column j * n + x; equation (a, k) at row a * n + k
  Matrix t(n * n, n * n);
  std::vector<RingElement> rhs(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t xy = 0; xy < n * n; ++xy) {
      const RingElement& dv = h.comult.at(xy, a);
      if (ring.is_zero(dv)) continue;
      const std::size_t x = xy / n, y = xy % n;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const RingElement& mv = h.mult.at(k, j * n + y);
          if (!ring.is_zero(mv)) t(a * n + k, j * n + x) = ring.fma(t(a * n + k, j * n + x), dv, mv);
        }
    }
    for (std::size_t k = 0; k < n; ++k) rhs[a * n + k] = ring.mul(h.unit.at(k, 0), h.counit.at(0, a));
  }
  const auto s = hensel_solve(ring, t, rhs);
  MultiMap out = MultiMap::zero(ring, n, 1, 1);
  std::copy(s.begin(), s.end(), out.coeffs().begin());
  // m(I ⊗ S)Δ = unit ∘ counit
  bool right_ok = true;
  for (std::size_t a = 0; a < n && right_ok; ++a) {
    std::vector<RingElement> acc(n);
    for (std::size_t xy = 0; xy < n * n; ++xy) {
      const RingElement& dv = h.comult.at(xy, a);
      if (ring.is_zero(dv)) continue;
      const std::size_t x = xy / n, y = xy % n;
      for (std::size_t j = 0; j < n; ++j) {
        const RingElement c = ring.mul(dv, out.at(j, y));
        if (ring.is_zero(c)) continue;
        for (std::size_t k = 0; k < n; ++k) acc[k] = ring.fma(acc[k], c, h.mult.at(k, x * n + j));
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      if (acc[k] != ring.mul(h.unit.at(k, 0), h.counit.at(0, a))) right_ok = false;
  }
  if (!right_ok)
    throw Error(ErrorCode::RightAntipodeFailure, "solved antipode fails the right antipode identity");
  return out;
}

LiftState lift(const HopfPresentation& base, unsigned precision, const LiftStrategy& strategy) {
  require_liftable(base);
  return lift(BialgebraComplex(base), precision, strategy);
}

LiftState lift(const BialgebraComplex& cx, unsigned precision, const LiftStrategy& strategy) {
  if (precision == 0) throw Error(ErrorCode::InvalidArgument, "precision must be at least 1");
  const HopfPresentation& base = cx.source();
  if (!(cx.target() == base) || !(cx.morphism() == MultiMap::identity(base.ring, base.dim, 1)))
    throw Error(ErrorCode::InvalidArgument, "lifting needs the complex of (A, A, identity)");
  require_liftable(base);
  LiftState state{base, 1, base, {}};
  if (precision == 1) return state;
  for (unsigned k = 1; k < precision; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const RawPair pair = extend_pair(state.current, strategy);
    const ObstructionReport obs = obstruction(pair, cx);
    Correction corr = correct(pair, obs, cx);
    corr.bialgebra.antipode = solve_antipode(corr.bialgebra);
    const AxiomReport rep = verify_hopf(corr.bialgebra);
    if (!rep.verified()) throw Error(ErrorCode::PostAxiomFailure, "lifted presentation fails the Hopf axioms");
    state.current = std::move(corr.bialgebra);
    state.precision = k + 1;
    LiftStep step;
    step.precision = k + 1;
    step.obstruction_support = support(obs.c);
    step.correction_support = corr.correction_support;
    step.solver_rank = corr.solver_rank;
    step.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    state.transcript.push_back(step);
  }
  return state;
}

namespace {

// (η ⊗ ... ⊗ η) with `legs` factors
MultiMap tensor_power(const MultiMap& f, unsigned legs) {
  MultiMap acc = f;
  for (unsigned t = 1; t < legs; ++t) acc = tensor(acc, f);
  return acc;
}

HopfPresentation transport(const HopfPresentation& h, const MultiMap& eta, const MultiMap& eta_inv) {
  HopfPresentation t = h;
  t.mult = compose(eta, compose(h.mult, tensor_power(eta_inv, 2)));
  t.comult = compose(tensor_power(eta, 2), compose(h.comult, eta_inv));
  t.unit = compose(eta, h.unit);
  t.counit = compose(h.counit, eta_inv);
  t.antipode = compose(eta, compose(h.antipode, eta_inv));
  return t;
}

MultiMap inverse_map(const MultiMap& f) {
  const Matrix inv = invert_matrix(f.ring(), f.to_matrix());
  return MultiMap::from_matrix(f.ring(), inv, f.dim_in(), f.dim_out(), 1, 1);
}

}  // namespace

MultiMap reconcile(const LiftState& s1, const LiftState& s2) {
  require_same_lift_shape(s1, s2);
  const unsigned n = s1.precision;
  const Ring ring = s1.current.ring;
  const std::size_t dim = s1.base.dim;
  MultiMap eta = MultiMap::identity(ring, dim, 1);
  const BialgebraComplex cx(s1.base);
  for (unsigned k = 1; k < n; ++k) {
    const HopfPresentation t = transport(s1.current, eta, inverse_map(eta));
    TotalCochain diff{1, {}};
    const MultiMap dd = sub(t.comult, s2.current.comult);
    const MultiMap dm = sub(t.mult, s2.current.mult);
    for (const MultiMap* f : {&dd, &dm})
      for (const auto& v : f->coeffs())
        if (ring.valuation(v) < k) throw Error(ErrorCode::InternalAxiomFailure, "lifts disagree below p^k");
    diff.components.push_back(divide_p_power_to_residue(dd, k));
    diff.components.push_back(divide_p_power_to_residue(dm, k));
    if (all_zero(diff)) continue;
    std::optional<TotalCochain> gamma;
    try {
      gamma = cx.solve_coboundary(diff);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotACocycle) throw;
    }
    if (!gamma) throw Error(ErrorCode::CocycleUnsolvable, "structure difference is not a coboundary");
    const MultiMap g = change_ring(gamma->components[0], ring);
    eta = compose(sub(MultiMap::identity(ring, dim, 1), times_p_power(g, k)), eta);
  }
  if (!(transport(s1.current, eta, inverse_map(eta)) == s2.current))
    throw Error(ErrorCode::InternalAxiomFailure, "reconciling map does not intertwine the lifts");
  return eta;
}

HopfMorphism lift_morphism(const HopfMorphism& phi, const LiftState& lift_a, const LiftState& lift_b) {
  if (!(phi.source == lift_a.base) || !(phi.target == lift_b.base) || lift_a.precision != lift_b.precision)
    throw Error(ErrorCode::DifferentBaseOrPrecision, "morphism and lifts do not match");
  if (!verify_morphism(phi).verified()) throw Error(ErrorCode::InvalidArgument, "φ is not a Hopf morphism");
  const unsigned n = lift_a.precision;
  const BialgebraComplex cx(phi.source, phi.target, phi.map);
  MultiMap cur = phi.map;
  for (unsigned k = 1; k < n; ++k) {
    const Ring r = ring_at(phi.source, k + 1);
    const HopfPresentation a = change_ring(lift_a.current, r);
    const HopfPresentation b = change_ring(lift_b.current, r);
    const MultiMap f = change_ring(cur, r);
    // defects: f(xy) - f(x)f(y) and (f ⊗ f)Δ - Δ f
    const MultiMap psi = sub(compose(f, a.mult), compose(b.mult, tensor(f, f)));
    const MultiMap eta = sub(compose(tensor(f, f), a.comult), compose(b.comult, f));
    for (const MultiMap* g : {&psi, &eta})
      for (const auto& v : g->coeffs())
        if (r.valuation(v) < k) throw Error(ErrorCode::InternalAxiomFailure, "morphism defect below p^k");
    TotalCochain z{1, {divide_p_power_to_residue(eta, k), divide_p_power_to_residue(psi, k)}};
    MultiMap next = f;
    if (!all_zero(z)) {
      std::optional<TotalCochain> chi;
      try {
        chi = cx.solve_coboundary(z);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotACocycle) throw;
      }
      if (!chi) throw Error(ErrorCode::CocycleUnsolvable, "morphism defect is not a coboundary");
      next = sub(f, times_p_power(change_ring(chi->components[0], r), k));
    }
    cur = std::move(next);
  }
  cur = change_ring(cur, lift_a.current.ring);
  HopfMorphism out{lift_a.current, lift_b.current, cur};
  const MorphismReport rep = verify_morphism(out);
  if (!rep.multiplicative || !rep.comultiplicative)
    throw Error(ErrorCode::InternalAxiomFailure, "lifted morphism has a remaining defect");
  if (!rep.unital || !rep.counital)
    throw Error(ErrorCode::UnitCompatibilityFailure, "lifted morphism is not unital and counital");
  return out;
}

LiftState dual_cop_lift(const LiftState& lift_a) {
  LiftState s;
  s.base = dual_cop(lift_a.base);
  s.precision = lift_a.precision;
  s.current = dual_cop(lift_a.current);
  return s;
}

MultiMap lift_rmatrix(const HopfPresentation& h, const MultiMap& r, const LiftState& lift_a) {
  if (!(lift_a.base == h)) throw Error(ErrorCode::DifferentBaseOrPrecision, "lift is not over this algebra");
  const QtReport qt = verify_qt(h, r);
  if (!qt.quasitriangular) throw Error(ErrorCode::InvalidArgument, "R is not quasitriangular");
  const HopfMorphism th = theta(h, r);
  const HopfMorphism lifted = lift_morphism(th, dual_cop_lift(lift_a), lift_a);
  MultiMap rbar = r_from_theta(lifted.map);
  const QtReport after = verify_qt(lift_a.current, rbar);
  if (!after.quasitriangular) throw Error(ErrorCode::InternalAxiomFailure, "lifted R is not quasitriangular");
  if (qt.triangular && !after.triangular) throw Error(ErrorCode::TriangularityLost, "lifted R is not triangular");
  return rbar;
}

}  // namespace hopfkit
