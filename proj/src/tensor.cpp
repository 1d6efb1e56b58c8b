#include "hopfkit/tensor.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

MultiMap::MultiMap(Ring ring, std::size_t dim_in, std::size_t dim_out, unsigned arity_in, unsigned arity_out)
    : ring_(std::move(ring)),
      dim_in_(dim_in),
      dim_out_(dim_out),
      arity_in_(arity_in),
      arity_out_(arity_out),
      in_size_(ipow(dim_in, arity_in)),
      out_size_(ipow(dim_out, arity_out)),
      coeffs_(in_size_ * out_size_) {}

MultiMap MultiMap::identity(const Ring& ring, std::size_t dim, unsigned arity) {
  MultiMap m(ring, dim, dim, arity, arity);
  for (std::size_t i = 0; i < m.in_size_; ++i) m.at(i, i) = ring.one();
  return m;
}

MultiMap MultiMap::scalar(const Ring& ring, const RingElement& value) {
  MultiMap m(ring, 1, 1, 0, 0);
  m.coeffs_[0] = value;
  return m;
}

MultiMap MultiMap::vector(const Ring& ring, std::span<const RingElement> v) {
  MultiMap m(ring, v.size(), v.size(), 0, 1);
  std::copy(v.begin(), v.end(), m.coeffs_.begin());
  return m;
}

MultiMap MultiMap::covector(const Ring& ring, std::span<const RingElement> v) {
  MultiMap m(ring, v.size(), v.size(), 1, 0);
  std::copy(v.begin(), v.end(), m.coeffs_.begin());
  return m;
}

std::vector<RingElement> MultiMap::column(std::size_t in) const {
  std::vector<RingElement> v(out_size_);
  for (std::size_t o = 0; o < out_size_; ++o) v[o] = at(o, in);
  return v;
}

SparseVector MultiMap::sparse_column(std::size_t in) const {
  SparseVector v;
  for (std::size_t o = 0; o < out_size_; ++o)
    if (!ring_.is_zero(at(o, in))) v.emplace_back(static_cast<std::uint32_t>(o), at(o, in));
  return v;
}

std::vector<RingElement> MultiMap::apply(std::span<const RingElement> x) const {
  if (x.size() != in_size_) throw Error(ErrorCode::ArityMismatch, "vector size does not match map input");
  std::vector<RingElement> y(out_size_);
  for (std::size_t i = 0; i < in_size_; ++i) {
    if (ring_.is_zero(x[i])) continue;
    for (std::size_t o = 0; o < out_size_; ++o) {
      const auto& c = at(o, i);
      if (!ring_.is_zero(c)) y[o] = ring_.fma(y[o], c, x[i]);
    }
  }
  return y;
}

bool MultiMap::is_zero() const {
  for (const auto& c : coeffs_)
    if (!ring_.is_zero(c)) return false;
  return true;
}

std::size_t MultiMap::support_size() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (!ring_.is_zero(c)) ++n;
  return n;
}

bool MultiMap::same_shape(const MultiMap& o) const {
  return arity_in_ == o.arity_in_ && arity_out_ == o.arity_out_ && in_size_ == o.in_size_ &&
         out_size_ == o.out_size_ && (arity_in_ == 0 || dim_in_ == o.dim_in_) &&
         (arity_out_ == 0 || dim_out_ == o.dim_out_);
}

Matrix MultiMap::to_matrix() const {
  Matrix m(out_size_, in_size_);
  m.data = coeffs_;
  return m;
}

MultiMap MultiMap::from_matrix(const Ring& ring, const Matrix& m, std::size_t dim_in, std::size_t dim_out,
                               unsigned arity_in, unsigned arity_out) {
  MultiMap f(ring, dim_in, dim_out, arity_in, arity_out);
  if (m.rows != f.out_size_ || m.cols != f.in_size_) throw Error(ErrorCode::ArityMismatch, "matrix shape mismatch");
  f.coeffs_ = m.data;
  return f;
}

namespace {

void require_same_ring(const MultiMap& f, const MultiMap& g) {
  if (!(f.ring() == g.ring())) throw Error(ErrorCode::DescriptorMismatch, "maps live over different rings");
}

std::size_t leg_dim(std::size_t a_dim, unsigned a_arity, std::size_t b_dim, unsigned b_arity) {
  if (a_arity == 0) return b_dim;
  if (b_arity == 0) return a_dim;
  if (a_dim != b_dim) throw Error(ErrorCode::ArityMismatch, "tensor factors have different leg dimensions");
  return a_dim;
}

// flat index of P_σ(e_{i_0} ⊗ ... ⊗ e_{i_{n-1}}) for every flat input index
std::vector<std::size_t> permutation_table(std::size_t dim, std::span<const unsigned> sigma) {
  const unsigned n = static_cast<unsigned>(sigma.size());
  std::vector<bool> seen(n, false);
  for (unsigned s : sigma) {
    if (s >= n || seen[s]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[s] = true;
  }
  const std::size_t size = ipow(dim, n);
  std::vector<std::size_t> weight(n);  // weight of output position
  for (unsigned k = 0; k < n; ++k) weight[k] = ipow(dim, n - 1 - k);
  std::vector<std::size_t> table(size);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t out = 0;
    for (unsigned k = 0; k < n; ++k) out += digits[k] * weight[sigma[k]];
    table[flat] = out;
    for (unsigned k = n; k-- > 0;) {
      if (++digits[k] < dim) break;
      digits[k] = 0;
    }
  }
  return table;
}

}  // namespace

MultiMap compose(const MultiMap& f, const MultiMap& g) {
  require_same_ring(f, g);
  if (f.arity_in() != g.arity_out() || f.in_size() != g.out_size())
    throw Error(ErrorCode::ArityMismatch, "inner arities of composition do not match");
  const Ring& ring = f.ring();
  MultiMap h(ring, g.dim_in(), f.dim_out(), g.arity_in(), f.arity_out());
  const std::size_t mid = f.in_size();
  for (std::size_t k = 0; k < mid; ++k) {
    // column k of f times row k of g
    SparseVector fcol;
    for (std::size_t o = 0; o < f.out_size(); ++o)
      if (!ring.is_zero(f.at(o, k))) fcol.emplace_back(static_cast<std::uint32_t>(o), f.at(o, k));
    if (fcol.empty()) continue;
    for (std::size_t i = 0; i < g.in_size(); ++i) {
      const auto& gv = g.at(k, i);
      if (ring.is_zero(gv)) continue;
      for (const auto& [o, fv] : fcol) h.at(o, i) = ring.fma(h.at(o, i), fv, gv);
    }
  }
  return h;
}

MultiMap tensor(const MultiMap& f, const MultiMap& g) {
  require_same_ring(f, g);
  const Ring& ring = f.ring();
  const std::size_t din = leg_dim(f.dim_in(), f.arity_in(), g.dim_in(), g.arity_in());
  const std::size_t dout = leg_dim(f.dim_out(), f.arity_out(), g.dim_out(), g.arity_out());
  MultiMap h(ring, din, dout, f.arity_in() + g.arity_in(), f.arity_out() + g.arity_out());
  for (std::size_t fo = 0; fo < f.out_size(); ++fo)
    for (std::size_t fi = 0; fi < f.in_size(); ++fi) {
      const auto& a = f.at(fo, fi);
      if (ring.is_zero(a)) continue;
      for (std::size_t go = 0; go < g.out_size(); ++go)
        for (std::size_t gi = 0; gi < g.in_size(); ++gi) {
          const auto& b = g.at(go, gi);
          if (ring.is_zero(b)) continue;
          h.at(fo * g.out_size() + go, fi * g.in_size() + gi) = ring.mul(a, b);
        }
    }
  return h;
}

MultiMap add(const MultiMap& f, const MultiMap& g) {
  require_same_ring(f, g);
  if (!f.same_shape(g)) throw Error(ErrorCode::ArityMismatch, "cannot add maps of different shapes");
  MultiMap h = f;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) h.coeffs()[i] = f.ring().add(f.coeffs()[i], g.coeffs()[i]);
  return h;
}

MultiMap sub(const MultiMap& f, const MultiMap& g) {
  require_same_ring(f, g);
  if (!f.same_shape(g)) throw Error(ErrorCode::ArityMismatch, "cannot subtract maps of different shapes");
  MultiMap h = f;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) h.coeffs()[i] = f.ring().sub(f.coeffs()[i], g.coeffs()[i]);
  return h;
}

MultiMap scale(const MultiMap& f, const RingElement& s) {
  MultiMap h = f;
  for (auto& c : h.coeffs()) c = f.ring().mul(c, s);
  return h;
}

MultiMap permute(const Ring& ring, std::size_t dim, std::span<const unsigned> sigma) {
  const auto table = permutation_table(dim, sigma);
  const unsigned n = static_cast<unsigned>(sigma.size());
  MultiMap p(ring, dim, dim, n, n);
  for (std::size_t in = 0; in < table.size(); ++in) p.at(table[in], in) = ring.one();
  return p;
}

MultiMap permute_outputs(const MultiMap& f, std::span<const unsigned> sigma) {
  if (sigma.size() != f.arity_out()) throw Error(ErrorCode::ArityMismatch, "permutation size differs from output arity");
  const auto table = permutation_table(f.dim_out(), sigma);
  MultiMap h(f.ring(), f.dim_in(), f.dim_out(), f.arity_in(), f.arity_out());
  for (std::size_t o = 0; o < f.out_size(); ++o)
    for (std::size_t i = 0; i < f.in_size(); ++i) h.at(table[o], i) = f.at(o, i);
  return h;
}

MultiMap permute_inputs(const MultiMap& f, std::span<const unsigned> sigma) {
  if (sigma.size() != f.arity_in()) throw Error(ErrorCode::ArityMismatch, "permutation size differs from input arity");
  const auto table = permutation_table(f.dim_in(), sigma);
  MultiMap h(f.ring(), f.dim_in(), f.dim_out(), f.arity_in(), f.arity_out());
  for (std::size_t o = 0; o < f.out_size(); ++o)
    for (std::size_t i = 0; i < f.in_size(); ++i) h.at(o, i) = f.at(o, table[i]);
  return h;
}

MultiMap change_ring(const MultiMap& f, const Ring& target) {
  MultiMap h(target, f.dim_in(), f.dim_out(), f.arity_in(), f.arity_out());
  const bool up = target.precision() >= f.ring().precision();
  for (std::size_t i = 0; i < h.coeffs().size(); ++i)
    h.coeffs()[i] = up ? digit_lift(f.ring(), f.coeffs()[i], target) : reduce(f.ring(), f.coeffs()[i], target);
  return h;
}

MultiMap times_p_power(const MultiMap& f, unsigned k) {
  const Ring& ring = f.ring();
  RingElement pk = ring.one();
  for (unsigned i = 0; i < k; ++i) pk = ring.scale(pk, ring.p());
  return scale(f, pk);
}

MultiMap divide_p_power_to_residue(const MultiMap& f, unsigned k) {
  const Ring& ring = f.ring();
  const Ring field = ring.residue_field();
  MultiMap h(field, f.dim_in(), f.dim_out(), f.arity_in(), f.arity_out());
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    const RingElement q = exact_div_p(ring, f.coeffs()[i], k);
    for (unsigned t = 0; t < ring.degree(); ++t) h.coeffs()[i].c[t] = q.c[t] % ring.p();
  }
  return h;
}

}  // namespace hopfkit
