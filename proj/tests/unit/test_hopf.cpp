#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hopfkit/error.hpp"
#include "hopfkit/hopf.hpp"

using namespace hopfkit;

namespace {

HopfPresentation group(const std::string& name, std::uint32_t p, unsigned n = 1) {
  return group_algebra(Ring::make(p, n), builtin_group_table(name));
}

std::vector<RingElement> ints(const Ring& r, std::initializer_list<std::int64_t> v) {
  std::vector<RingElement> out;
  for (auto x : v) out.push_back(r.from_int(x));
  return out;
}

// The ten Hopf identities written as equalities of composites of the
// structure maps, evaluated with compose/tensor/permute only.
std::vector<std::string> reference_axiom_failures(const HopfPresentation& h) {
  const Ring& r = h.ring;
  const std::size_t n = h.dim;
  const MultiMap i1 = MultiMap::identity(r, n);
  const MultiMap one = MultiMap::scalar(r, r.one());
  const unsigned mid_swap[] = {0, 2, 1, 3};
  const MultiMap tw = permute(r, n, mid_swap);
  const MultiMap ue = compose(h.unit, h.counit);
  std::vector<std::string> bad;
  auto check = [&](const char* name, const MultiMap& a, const MultiMap& b) {
    if (!(a == b)) bad.emplace_back(name);
  };
  check("associativity", compose(h.mult, tensor(h.mult, i1)), compose(h.mult, tensor(i1, h.mult)));
  check("unit", compose(h.mult, tensor(h.unit, i1)), i1);
  check("unit", compose(h.mult, tensor(i1, h.unit)), i1);
  check("coassociativity", compose(tensor(h.comult, i1), h.comult), compose(tensor(i1, h.comult), h.comult));
  check("counit", compose(tensor(h.counit, i1), h.comult), i1);
  check("counit", compose(tensor(i1, h.counit), h.comult), i1);
  check("comult_multiplicative", compose(h.comult, h.mult),
        compose(tensor(h.mult, h.mult), compose(tw, tensor(h.comult, h.comult))));
  check("counit_multiplicative", compose(h.counit, h.mult), tensor(h.counit, h.counit));
  check("comult_unit", compose(h.comult, h.unit), tensor(h.unit, h.unit));
  check("counit_unit", compose(h.counit, h.unit), one);
  check("left_antipode", compose(h.mult, compose(tensor(h.antipode, i1), h.comult)), ue);
  check("right_antipode", compose(h.mult, compose(tensor(i1, h.antipode), h.comult)), ue);
  return bad;
}

std::vector<std::string> failing(const AxiomReport& rep) {
  std::vector<std::string> out;
  for (const auto& c : rep.checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::vector<RingElement> apply1(const MultiMap& f, const std::vector<RingElement>& x) { return f.apply(x); }

std::vector<RingElement> product(const HopfPresentation& h, const std::vector<RingElement>& a,
                                 const std::vector<RingElement>& b) {
  std::vector<RingElement> ab(h.dim * h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) ab[i * h.dim + j] = h.ring.mul(a[i], b[j]);
  return h.mult.apply(ab);
}

// Dimension of the center, by solving the commutator equations with every
// basis element.
std::size_t center_dim(const HopfPresentation& h) {
  const Ring& r = h.ring;
  const std::size_t n = h.dim;
  Matrix m(n * n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < n; ++k)
        m(b * n + k, x) = r.sub(h.mult.at(k, x * n + b), h.mult.at(k, b * n + x));
  return n - rank_field(r, m);
}

MultiMap two_tensor(const Ring& r, std::size_t dim, std::initializer_list<std::int64_t> v) {
  MultiMap t(r, dim, dim, 0, 2);
  std::size_t k = 0;
  for (auto x : v) t.coeffs()[k++] = r.from_int(x);
  return t;
}

}  // namespace

TEST(Hopf, VerifyExamples) {
  EXPECT_TRUE(verify_hopf(group("C2", 5)).verified());
  EXPECT_TRUE(verify_hopf(group("C2", 5, 2)).verified());

  HopfPresentation broken = group("C2", 5);
  broken.antipode.at(1, 1) = broken.ring.zero();
  broken.antipode.at(0, 1) = broken.ring.one();
  const AxiomReport rep = verify_hopf(broken);
  EXPECT_EQ(failing(rep), (std::vector<std::string>{"left_antipode", "right_antipode"}));
  EXPECT_TRUE(rep.bialgebra_verified());
  EXPECT_FALSE(rep.get("left_antipode").first_failure.empty());
}

TEST(Hopf, GroupAlgebras) {
  const HopfPresentation c2 = group("C2", 5);
  const Ring& r = c2.ring;
  EXPECT_EQ(c2.dim, 2u);
  EXPECT_EQ(c2.mult.column(3), ints(r, {1, 0}));
  EXPECT_EQ(c2.comult.column(1), ints(r, {0, 0, 0, 1}));
  EXPECT_EQ(c2.antipode.column(1), ints(r, {0, 1}));

  const HopfPresentation s3 = group("S3", 7);
  EXPECT_EQ(s3.dim, 6u);
  EXPECT_FALSE(is_commutative(s3));
  EXPECT_TRUE(is_cocommutative(s3));
  EXPECT_EQ(group("C4", 3).dim, 4u);
  EXPECT_THROW(builtin_group_table("C9"), Error);
}

TEST(Hopf, Duality) {
  const HopfPresentation d = dual(group("C2", 5));
  const Ring& r = d.ring;
  // Pointwise product on the δ-basis.
  EXPECT_EQ(d.mult.column(0), ints(r, {1, 0}));
  EXPECT_EQ(d.mult.column(1), ints(r, {0, 0}));
  EXPECT_EQ(d.mult.column(3), ints(r, {0, 1}));
  EXPECT_EQ(d.unit.column(0), ints(r, {1, 1}));
  EXPECT_TRUE(verify_hopf(d).verified());

  const HopfPresentation s3 = group("S3", 7);
  EXPECT_EQ(dual(dual(s3)), s3);

  const HopfPresentation k4 = group("C2xC2", 5);
  EXPECT_TRUE(is_commutative(k4) && is_cocommutative(k4));
  const HopfPresentation s3d = dual(s3);
  EXPECT_TRUE(is_commutative(s3d));
  EXPECT_FALSE(is_cocommutative(s3d));
}

TEST(Hopf, ReferenceAxiomOracleAgrees) {
  const Ring f5 = Ring::make(5), f7 = Ring::make(7);
  for (const auto& [name, ring] : {std::pair{"C2", f5}, {"S3", f7}, {"dual:S3", f7}, {"Q8", f5}, {"dual:D4", f5},
                                   {"double:C2", f5}, {"double:C3", f7}}) {
    const HopfPresentation h = builtin_presentation(name, ring);
    EXPECT_TRUE(reference_axiom_failures(h).empty()) << name;
    EXPECT_TRUE(verify_hopf(h).verified()) << name;
  }
  HopfPresentation bad = builtin_presentation("S3", f7);
  bad.mult.at(2, 1 * 6 + 1) = f7.from_int(3);
  const auto names = failing(verify_hopf(bad));
  auto ref = reference_axiom_failures(bad);
  ref.erase(std::unique(ref.begin(), ref.end()), ref.end());
  EXPECT_EQ(names, ref);
}

TEST(Hopf, DrinfeldDouble) {
  const Ring f5 = Ring::make(5);
  const DoubleResult d = drinfeld_double(group("C2", 5));
  EXPECT_EQ(d.double_algebra.dim, 4u);
  EXPECT_TRUE(reference_axiom_failures(d.double_algebra).empty());
  EXPECT_TRUE(is_commutative(d.double_algebra));
  const QtReport qt = verify_qt(d.double_algebra, d.r_matrix);
  EXPECT_TRUE(qt.quasitriangular);
  EXPECT_FALSE(qt.triangular);
  EXPECT_TRUE(drinfeld_u(d.double_algebra, d.r_matrix).equals_antipode);
  EXPECT_EQ(irreducible_dimensions(d.double_algebra), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(Hopf, DoubleOfS3) {
  const DoubleResult d = drinfeld_double(group("S3", 7));
  EXPECT_EQ(d.double_algebra.dim, 36u);
  EXPECT_TRUE(verify_hopf(d.double_algebra).verified());
  EXPECT_TRUE(verify_qt(d.double_algebra, d.r_matrix).quasitriangular);
  const AntipodeOrders o = antipode_orders(d.double_algebra);
  EXPECT_EQ(o.order, 2u);
  EXPECT_EQ(o.sq_order, 1u);
  const auto dims = irreducible_dimensions(d.double_algebra);
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2, 2, 2, 2, 3, 3}));
  // Independent checks: one block per central idempotent, Σ n² = dim.
  EXPECT_EQ(dims.size(), center_dim(d.double_algebra));
  std::size_t sq = 0;
  for (auto n : dims) {
    sq += n * n;
    EXPECT_EQ(6 % n, 0u);
  }
  EXPECT_EQ(sq, 36u);
}

TEST(Hopf, AntipodeOrders) {
  const AntipodeOrders s3 = antipode_orders(group("S3", 5));
  EXPECT_EQ(s3.order, 2u);
  EXPECT_EQ(s3.sq_order, 1u);
  // On C2 the inversion map is the identity.
  const AntipodeOrders c2 = antipode_orders(group("C2", 5));
  EXPECT_EQ(c2.order, 1u);
  EXPECT_EQ(c2.sq_order, 1u);
}

TEST(Hopf, Integrals) {
  const HopfPresentation c2 = group("C2", 5);
  auto li = integral(c2, Side::Left);
  ASSERT_EQ(li.size(), 1u);
  EXPECT_EQ(li[0][0], li[0][1]);
  EXPECT_FALSE(c2.ring.is_zero(li[0][0]));

  const HopfPresentation c3 = group("C3", 3);
  li = integral(c3, Side::Left);
  ASSERT_EQ(li.size(), 1u);
  EXPECT_TRUE(li[0][0] == li[0][1] && li[0][1] == li[0][2]);
  EXPECT_TRUE(c3.ring.is_zero(c3.counit.apply(li[0])[0]));

  const HopfPresentation d = dual(c2);
  li = integral(d, Side::Left);
  ASSERT_EQ(li.size(), 1u);
  EXPECT_TRUE(d.ring.is_zero(li[0][1]));
  EXPECT_FALSE(d.ring.is_zero(li[0][0]));
}

TEST(Hopf, Semisimplicity) {
  EXPECT_TRUE(is_semisimple(group("C2", 5)));
  EXPECT_TRUE(is_cosemisimple(group("C2", 5)));
  EXPECT_FALSE(is_semisimple(group("C3", 3)));
  EXPECT_TRUE(is_cosemisimple(group("C3", 3)));
  const HopfPresentation s3 = group("S3", 7);
  EXPECT_TRUE(is_semisimple(s3) && is_cosemisimple(s3));
  EXPECT_EQ(trace_antipode_squared(s3), s3.ring.from_int(6));
}

TEST(Hopf, Grouplikes) {
  const HopfPresentation c2 = group("C2", 5);
  const Ring& r = c2.ring;
  EXPECT_EQ(grouplikes(c2, false), (std::vector{ints(r, {1, 0}), ints(r, {0, 1})}));
  EXPECT_EQ(grouplikes(c2, true).size(), 2u);
  EXPECT_EQ(grouplikes(dual(c2), false), (std::vector{ints(r, {1, 1}), ints(r, {1, 4})}));
  EXPECT_EQ(grouplikes(group("C2xC2", 3), true).size(), 4u);
}

TEST(Hopf, TriangularStructuresOnC2) {
  const HopfPresentation h = group("C2", 5);
  const Ring& r = h.ring;
  const MultiMap r0 = two_tensor(r, 2, {1, 0, 0, 0});
  const MultiMap r1 = two_tensor(r, 2, {3, 3, 3, 12});
  for (const MultiMap* rm : {&r0, &r1}) {
    const QtReport q = verify_qt(h, *rm);
    EXPECT_TRUE(q.quasitriangular && q.triangular);
  }
  const DrinfeldElement u0 = drinfeld_u(h, r0);
  EXPECT_EQ(u0.u, ints(r, {1, 0}));
  EXPECT_TRUE(u0.squares_to_one);
  const DrinfeldElement u1 = drinfeld_u(h, r1);
  EXPECT_EQ(u1.u, ints(r, {0, 1}));
  EXPECT_TRUE(u1.squares_to_one && u1.equals_antipode);

  // θ for R0 is f ↦ f(1)·1; θ for R1 sends the sign character to g.
  const HopfMorphism t0 = theta(h, r0);
  EXPECT_EQ(t0.map.column(0), ints(r, {1, 0}));
  EXPECT_EQ(t0.map.column(1), ints(r, {0, 0}));
  const HopfMorphism t1 = theta(h, r1);
  EXPECT_EQ(t1.map.apply(ints(r, {1, 4})), ints(r, {0, 1}));
  EXPECT_TRUE(verify_morphism(t1).verified());
  EXPECT_EQ(r_from_theta(t1.map), r1);
  EXPECT_EQ(r_from_theta(t0.map), r0);

  // A non-solution of the Yang-Baxter system.
  EXPECT_FALSE(verify_qt(h, two_tensor(r, 2, {1, 1, 0, 0})).quasitriangular);
}

TEST(Hopf, IrreducibleDimensionsOfS3) {
  const HopfPresentation s3 = group("S3", 7);
  EXPECT_EQ(irreducible_dimensions(s3), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(center_dim(s3), 3u);
  EXPECT_THROW(irreducible_dimensions(group("C3", 3)), Error);
}

// Corpus-wide invariants.
TEST(HopfProperty, CorpusInvariants) {
  for (std::uint32_t p : {5u, 7u}) {
    const Ring f = Ring::make(p);
    for (const auto& g : builtin_group_names()) {
      for (const std::string prefix : {"", "dual:"}) {
        const HopfPresentation h = builtin_presentation(prefix + g, f);
        if (h.dim % p == 0) continue;
        SCOPED_TRACE(prefix + g + "/F" + std::to_string(p));
        ASSERT_TRUE(verify_hopf(h).verified());
        EXPECT_EQ(dual(dual(h)), h);
        EXPECT_EQ(compose(h.antipode, h.antipode), MultiMap::identity(f, h.dim));
        EXPECT_EQ(trace_antipode_squared(h), f.from_int(static_cast<std::int64_t>(h.dim)));
        EXPECT_EQ(prefix.empty() ? is_cocommutative(h) : is_commutative(h), true);
        EXPECT_EQ(iterate(h, 3, IterateDirection::Coproduct), compose(tensor(h.comult, MultiMap::identity(f, h.dim)), h.comult));
        EXPECT_EQ(iterate(h, 3, IterateDirection::Coproduct), compose(tensor(MultiMap::identity(f, h.dim), h.comult), h.comult));

        const auto gl = grouplikes(h, false);
        ASSERT_FALSE(gl.empty());
        EXPECT_EQ(gl[0], h.unit.column(0));
        for (const auto& x : gl) {
          std::vector<RingElement> xx(h.dim * h.dim);
          for (std::size_t i = 0; i < h.dim; ++i)
            for (std::size_t j = 0; j < h.dim; ++j) xx[i * h.dim + j] = f.mul(x[i], x[j]);
          EXPECT_EQ(h.comult.apply(x), xx);
          EXPECT_EQ(product(h, x, apply1(h.antipode, x)), h.unit.column(0));
        }
      }
    }
  }
}

TEST(HopfProperty, PrimeDimensionExamplesAreCommutativeAndCocommutative) {
  for (const auto& [name, p] : {std::pair{"C2", 5u}, {"C3", 7u}, {"C5", 3u}, {"C7", 3u}, {"C7", 5u}}) {
    const HopfPresentation h = builtin_presentation(name, Ring::make(p));
    EXPECT_TRUE(is_commutative(h) && is_cocommutative(h)) << name;
    const HopfPresentation d = dual(h);
    EXPECT_TRUE(is_commutative(d) && is_cocommutative(d)) << name;
  }
}
