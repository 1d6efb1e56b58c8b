#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfkit/hopf.hpp"
#include "hopfkit/tensor.hpp"

using namespace hopfkit;

namespace {

MultiMap random_map(const Ring& r, std::size_t dim, unsigned ai, unsigned ao, std::mt19937_64& rng) {
  MultiMap f = MultiMap::zero(r, dim, ai, ao);
  for (auto& c : f.coeffs()) c = r.from_int(static_cast<std::int64_t>(rng() % r.characteristic()));
  return f;
}

// Entry-by-entry oracles written directly from the layout definition.
MultiMap naive_compose(const MultiMap& f, const MultiMap& g) {
  const Ring& r = f.ring();
  MultiMap h(r, g.dim_in(), f.dim_out(), g.arity_in(), f.arity_out());
  for (std::size_t o = 0; o < f.out_size(); ++o)
    for (std::size_t i = 0; i < g.in_size(); ++i) {
      RingElement s = r.zero();
      for (std::size_t k = 0; k < f.in_size(); ++k) s = r.add(s, r.mul(f.at(o, k), g.at(k, i)));
      h.at(o, i) = s;
    }
  return h;
}

MultiMap naive_tensor(const MultiMap& f, const MultiMap& g) {
  const Ring& r = f.ring();
  MultiMap h(r, f.dim_in(), f.dim_out(), f.arity_in() + g.arity_in(), f.arity_out() + g.arity_out());
  for (std::size_t o1 = 0; o1 < f.out_size(); ++o1)
    for (std::size_t o2 = 0; o2 < g.out_size(); ++o2)
      for (std::size_t i1 = 0; i1 < f.in_size(); ++i1)
        for (std::size_t i2 = 0; i2 < g.in_size(); ++i2)
          h.at(o1 * g.out_size() + o2, i1 * g.in_size() + i2) = r.mul(f.at(o1, i1), g.at(o2, i2));
  return h;
}

std::vector<unsigned> digits(std::size_t flat, std::size_t dim, unsigned n) {
  std::vector<unsigned> d(n);
  for (unsigned k = n; k-- > 0;) {
    d[k] = static_cast<unsigned>(flat % dim);
    flat /= dim;
  }
  return d;
}

std::size_t flatten(const std::vector<unsigned>& d, std::size_t dim) {
  std::size_t f = 0;
  for (unsigned x : d) f = f * dim + x;
  return f;
}

HopfPresentation c2(const Ring& r) { return group_algebra(r, builtin_group_table("C2")); }

std::vector<RingElement> basis_tensor(const Ring& r, std::size_t dim, std::vector<unsigned> legs) {
  std::vector<RingElement> v(ipow(dim, static_cast<unsigned>(legs.size())));
  v[flatten(legs, dim)] = r.one();
  return v;
}

}  // namespace

TEST(Tensor, ComposeExamples) {
  const Ring f5 = Ring::make(5);
  const HopfPresentation h = c2(f5);
  const MultiMap dm = compose(h.comult, h.mult);
  EXPECT_EQ(dm.column(flatten({1, 1}, 2)), basis_tensor(f5, 2, {0, 0}));
  EXPECT_EQ(compose(MultiMap::identity(f5, 2), h.antipode), h.antipode);
  EXPECT_EQ(compose(h.counit, h.unit), MultiMap::scalar(f5, f5.one()));
}

TEST(Tensor, TensorExamples) {
  const Ring f5 = Ring::make(5);
  const HopfPresentation h = c2(f5);
  const MultiMap id = MultiMap::identity(f5, 2);
  EXPECT_EQ(tensor(id, id), MultiMap::identity(f5, 2, 2));
  EXPECT_EQ(compose(tensor(h.counit, id), h.comult), id);
  const MultiMap ss = tensor(h.antipode, h.antipode);
  EXPECT_EQ(ss.column(flatten({1, 1}, 2)), basis_tensor(f5, 2, {1, 1}));
}

TEST(Tensor, PermuteExamples) {
  const Ring f5 = Ring::make(5);
  const unsigned swap[] = {1, 0};
  const MultiMap s = permute(f5, 3, swap);
  EXPECT_EQ(s.column(flatten({1, 2}, 3)), basis_tensor(f5, 3, {2, 1}));
  const unsigned id3[] = {0, 1, 2};
  EXPECT_EQ(permute(f5, 3, id3), MultiMap::identity(f5, 3, 3));
  EXPECT_EQ(compose(s, s), MultiMap::identity(f5, 3, 2));
}

TEST(Tensor, IterateExamples) {
  const Ring f5 = Ring::make(5);
  const HopfPresentation h = c2(f5);
  EXPECT_EQ(iterate(h, 3, IterateDirection::Coproduct).column(1), basis_tensor(f5, 2, {1, 1, 1}));
  EXPECT_EQ(iterate(h, 1, IterateDirection::Coproduct), MultiMap::identity(f5, 2));
  EXPECT_EQ(iterate(h, 3, IterateDirection::Product).column(flatten({1, 1, 1}, 2)), basis_tensor(f5, 2, {1}));
}

TEST(TensorProperty, ComposeAndTensorMatchOracles) {
  std::mt19937_64 rng(1);
  const Ring r = Ring::make(3, 2, 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 1 + rng() % 3;
    const unsigned a = rng() % 3, b = rng() % 3, c = rng() % 3;
    const MultiMap f = random_map(r, dim, b, c, rng), g = random_map(r, dim, a, b, rng);
    EXPECT_EQ(compose(f, g), naive_compose(f, g));
    const MultiMap u = random_map(r, dim, a, b, rng), v = random_map(r, dim, c, a, rng);
    EXPECT_EQ(tensor(u, v), naive_tensor(u, v));
  }
}

TEST(TensorProperty, InterchangeLawAndAssociativity) {
  std::mt19937_64 rng(2);
  const Ring r = Ring::make(5, 2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t dim = 2 + rng() % 2;
    const MultiMap f = random_map(r, dim, 1, 2, rng), g = random_map(r, dim, 1, 1, rng);
    const MultiMap h = random_map(r, dim, 2, 1, rng), k = random_map(r, dim, 0, 1, rng);
    EXPECT_EQ(compose(tensor(f, g), tensor(h, k)), tensor(compose(f, h), compose(g, k)));
    const MultiMap x = random_map(r, dim, 2, 1, rng), y = random_map(r, dim, 1, 2, rng), z = random_map(r, dim, 1, 1, rng);
    EXPECT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
    EXPECT_EQ(tensor(tensor(g, z), g), tensor(g, tensor(z, g)));
  }
}

TEST(TensorProperty, PermutationsCompose) {
  std::mt19937_64 rng(4);
  const Ring r = Ring::make(7);
  const std::size_t dim = 2;
  for (int t = 0; t < 20; ++t) {
    std::vector<unsigned> s(3), u(3);
    std::iota(s.begin(), s.end(), 0u);
    std::iota(u.begin(), u.end(), 0u);
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(u.begin(), u.end(), rng);
    std::vector<unsigned> su(3);
    for (unsigned k = 0; k < 3; ++k) su[k] = s[u[k]];
    EXPECT_EQ(compose(permute(r, dim, s), permute(r, dim, u)), permute(r, dim, su));
    // Leg k of the input lands at position s[k].
    for (std::size_t in = 0; in < 8; ++in) {
      const auto d = digits(in, dim, 3);
      std::vector<unsigned> moved(3);
      for (unsigned k = 0; k < 3; ++k) moved[s[k]] = d[k];
      EXPECT_EQ(permute(r, dim, s).column(in), basis_tensor(r, dim, moved));
    }
    const MultiMap f = random_map(r, dim, 3, 3, rng);
    EXPECT_EQ(permute_outputs(f, s), compose(permute(r, dim, s), f));
    EXPECT_EQ(permute_inputs(f, s), compose(f, permute(r, dim, s)));
  }
}

TEST(TensorProperty, RingChangeAndPowers) {
  std::mt19937_64 rng(6);
  const Ring f = Ring::make(5), r = Ring::make(5, 3);
  const MultiMap a = random_map(f, 2, 1, 2, rng);
  const MultiMap lifted = change_ring(a, r);
  EXPECT_EQ(change_ring(lifted, f), a);
  EXPECT_EQ(divide_p_power_to_residue(times_p_power(lifted, 2), 2), a);
  EXPECT_TRUE(change_ring(times_p_power(lifted, 1), f).is_zero());
}
