#include "hopfkit/linalg.hpp"

#include <variant>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  static bool is_zero(value_type a) { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const {
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  // a -= c * b
  void axpy_neg(value_type& a, value_type c, value_type b) const {
    a = static_cast<value_type>((a + std::uint64_t{p - c} * b) % p);
  }
  value_type from(const RingElement& e) const { return e.c[0]; }
  RingElement to(value_type v) const {
    RingElement r;
    r.c[0] = v;
    return r;
  }
  value_type one() const { return 1; }
  value_type zero() const { return 0; }
};

struct GaloisOps {
  using value_type = RingElement;
  Ring ring;

  bool is_zero(const value_type& a) const { return ring.is_zero(a); }
  value_type add(const value_type& a, const value_type& b) const { return ring.add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return ring.sub(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return ring.mul(a, b); }
  value_type inv(const value_type& a) const { return ring.invert(a); }
  void axpy_neg(value_type& a, const value_type& c, const value_type& b) const {
    a = ring.sub(a, ring.mul(c, b));
  }
  value_type from(const RingElement& e) const { return e; }
  RingElement to(const value_type& v) const { return v; }
  value_type one() const { return ring.one(); }
  value_type zero() const { return ring.zero(); }
};

template <class Ops>
class EchelonT {
 public:
  using V = typename Ops::value_type;

  EchelonT(Ops ops, std::size_t cols, bool track)
      : ops_(std::move(ops)), cols_(cols), track_(track), col_to_pivot_(cols, -1), work_(cols, ops_.zero()) {}

  bool add_row(const SparseVector& row) {
    const std::size_t row_index = n_rows_++;
    if (track_) {
      std::vector<std::pair<std::uint32_t, V>> stored;
      stored.reserve(row.size());
      for (const auto& [j, v] : row) stored.emplace_back(j, ops_.from(v));
      original_.push_back(std::move(stored));
    }
    if (row.empty()) return false;
    for (const auto& [j, v] : row) work_[j] = ops_.from(v);

    steps_.clear();
    std::size_t c = row.front().first;
    for (; c < cols_; ++c) {
      if (ops_.is_zero(work_[c])) continue;
      const int k = col_to_pivot_[c];
      if (k < 0) break;
      const V coef = ops_.mul(work_[c], pivot_inv_[k]);
      const auto& pc = piv_cols_[k];
      const auto& pv = piv_vals_[k];
      for (std::size_t t = 0; t < pc.size(); ++t) ops_.axpy_neg(work_[pc[t]], coef, pv[t]);
      if (track_) steps_.emplace_back(k, coef);
    }
    if (c == cols_) return false;

    const int id = static_cast<int>(piv_cols_.size());
    std::vector<std::uint32_t> pc;
    std::vector<V> pv;
    for (std::size_t j = c; j < cols_; ++j) {
      if (!ops_.is_zero(work_[j])) {
        pc.push_back(static_cast<std::uint32_t>(j));
        pv.push_back(work_[j]);
        work_[j] = ops_.zero();
      }
    }
    pivot_inv_.push_back(ops_.inv(pv.front()));
    pivot_col_.push_back(static_cast<std::uint32_t>(c));
    col_to_pivot_[c] = id;
    piv_cols_.push_back(std::move(pc));
    piv_vals_.push_back(std::move(pv));
    if (track_) {
      std::vector<V> comb(id + 1, ops_.zero());
      comb[id] = ops_.one();
      for (const auto& [k, coef] : steps_) {
        const auto& tk = comb_[k];
        for (std::size_t j = 0; j < tk.size(); ++j)
          if (!ops_.is_zero(tk[j])) ops_.axpy_neg(comb[j], coef, tk[j]);
      }
      comb_.push_back(std::move(comb));
      pivot_row_.push_back(static_cast<std::uint32_t>(row_index));
    }
    return true;
  }

  std::size_t rank() const { return piv_cols_.size(); }
  std::size_t rows() const { return n_rows_; }

  std::optional<std::vector<RingElement>> solve(std::span<const RingElement> rhs) const {
    if (!track_) throw Error(ErrorCode::InvalidArgument, "echelon was built without combination tracking");
    if (rhs.size() != n_rows_) throw Error(ErrorCode::InvalidArgument, "rhs length does not match row count");
    const std::size_t r = rank();
    std::vector<V> y(r, ops_.zero());
    for (std::size_t k = 0; k < r; ++k) {
      V acc = ops_.zero();
      for (std::size_t j = 0; j <= k; ++j) {
        const V& t = comb_[k][j];
        if (!ops_.is_zero(t)) acc = ops_.add(acc, ops_.mul(t, ops_.from(rhs[pivot_row_[j]])));
      }
      y[k] = acc;
    }
    std::vector<V> x(cols_, ops_.zero());
    back_substitute(x, y);
    for (std::size_t i = 0; i < n_rows_; ++i) {
      V acc = ops_.zero();
      for (const auto& [j, v] : original_[i]) acc = ops_.add(acc, ops_.mul(v, x[j]));
      if (acc != ops_.from(rhs[i])) return std::nullopt;
    }
    std::vector<RingElement> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = ops_.to(x[j]);
    return out;
  }

  std::vector<std::vector<RingElement>> kernel_basis() const {
    std::vector<std::vector<RingElement>> basis;
    const std::vector<V> y(rank(), ops_.zero());
    for (std::size_t f = 0; f < cols_; ++f) {
      if (col_to_pivot_[f] >= 0) continue;
      std::vector<V> x(cols_, ops_.zero());
      x[f] = ops_.one();
      back_substitute(x, y);
      std::vector<RingElement> out(cols_);
      for (std::size_t j = 0; j < cols_; ++j) out[j] = ops_.to(x[j]);
      basis.push_back(std::move(out));
    }
    return basis;
  }

 private:
  // Solves the echelon rows for the pivot unknowns, in decreasing pivot column order.
  void back_substitute(std::vector<V>& x, const std::vector<V>& y) const {
    for (std::size_t c = cols_; c-- > 0;) {
      const int k = col_to_pivot_[c];
      if (k < 0) continue;
      V acc = y[k];
      const auto& pc = piv_cols_[k];
      const auto& pv = piv_vals_[k];
      for (std::size_t t = 1; t < pc.size(); ++t) ops_.axpy_neg(acc, pv[t], x[pc[t]]);
      x[c] = ops_.mul(acc, pivot_inv_[k]);
    }
  }

  Ops ops_;
  std::size_t cols_;
  bool track_;
  std::size_t n_rows_ = 0;
  std::vector<int> col_to_pivot_;
  std::vector<V> work_;
  std::vector<std::vector<std::uint32_t>> piv_cols_;
  std::vector<std::vector<V>> piv_vals_;
  std::vector<V> pivot_inv_;
  std::vector<std::uint32_t> pivot_col_;
  std::vector<std::vector<V>> comb_;
  std::vector<std::uint32_t> pivot_row_;
  std::vector<std::vector<std::pair<std::uint32_t, V>>> original_;
  std::vector<std::pair<int, V>> steps_;
};

}  // namespace

struct Echelon::Impl {
  Ring field;
  std::size_t cols;
  std::variant<EchelonT<PrimeOps>, EchelonT<GaloisOps>> engine;

  static std::variant<EchelonT<PrimeOps>, EchelonT<GaloisOps>> make(const Ring& f, std::size_t c, bool track) {
    if (f.degree() == 1) return EchelonT<PrimeOps>(PrimeOps{f.p()}, c, track);
    return EchelonT<GaloisOps>(GaloisOps{f}, c, track);
  }

  Impl(const Ring& f, std::size_t c, bool track) : field(f), cols(c), engine(make(f, c, track)) {}
};

Echelon::Echelon(const Ring& field, std::size_t cols, bool track_combinations) {
  if (!field.is_field()) throw Error(ErrorCode::InvalidArgument, "echelon factorization needs a field");
  impl_ = std::make_unique<Impl>(field, cols, track_combinations);
}
Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

bool Echelon::add_row(const SparseVector& row) {
  return std::visit([&](auto& e) { return e.add_row(row); }, impl_->engine);
}
std::size_t Echelon::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->engine);
}
std::size_t Echelon::rows() const {
  return std::visit([](const auto& e) { return e.rows(); }, impl_->engine);
}
std::size_t Echelon::cols() const { return impl_->cols; }
const Ring& Echelon::field() const { return impl_->field; }
std::optional<std::vector<RingElement>> Echelon::solve(std::span<const RingElement> rhs) const {
  return std::visit([&](const auto& e) { return e.solve(rhs); }, impl_->engine);
}
std::vector<std::vector<RingElement>> Echelon::kernel_basis() const {
  return std::visit([](const auto& e) { return e.kernel_basis(); }, impl_->engine);
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_ints(const Ring& ring, const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (rows[i].size() != m.cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

std::vector<RingElement> multiply(const Ring& ring, const Matrix& m, std::span<const RingElement> x) {
  if (x.size() != m.cols) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in matrix-vector product");
  std::vector<RingElement> y(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    RingElement acc;
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!ring.is_zero(x[j])) acc = ring.fma(acc, m(i, j), x[j]);
    y[i] = acc;
  }
  return y;
}

SparseVector to_sparse(const Ring& ring, std::span<const RingElement> dense) {
  SparseVector v;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (!ring.is_zero(dense[j])) v.emplace_back(static_cast<std::uint32_t>(j), dense[j]);
  return v;
}

namespace {

Echelon factor_rows(const Ring& field, const Matrix& m, bool track) {
  Echelon e(field, m.cols, track);
  for (std::size_t i = 0; i < m.rows; ++i)
    e.add_row(to_sparse(field, std::span<const RingElement>(m.data.data() + i * m.cols, m.cols)));
  return e;
}

Matrix reduce_matrix(const Ring& ring, const Matrix& m, const Ring& target) {
  Matrix r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) r.data[i] = reduce(ring, m.data[i], target);
  return r;
}

}  // namespace

LinearSolution solve_field(const Ring& field, const Matrix& m, std::span<const RingElement> rhs) {
  if (!field.is_field()) throw Error(ErrorCode::InvalidArgument, "solve_field needs a field");
  if (rhs.size() != m.rows) throw Error(ErrorCode::InvalidArgument, "rhs length does not match row count");
  const Echelon e = factor_rows(field, m, true);
  LinearSolution s;
  s.rank = e.rank();
  s.particular = e.solve(rhs);
  s.kernel_basis = e.kernel_basis();
  return s;
}

std::size_t rank_field(const Ring& field, const Matrix& m) { return factor_rows(field, m, false).rank(); }

namespace {

std::vector<RingElement> hensel_with(const Ring& ring, const Matrix& m, const Echelon& e,
                                     std::span<const RingElement> rhs) {
  const Ring& field = e.field();
  std::vector<RingElement> x(m.cols);
  std::vector<RingElement> residual(rhs.begin(), rhs.end());
  std::uint32_t pk = 1;
  for (unsigned k = 0; k < ring.precision(); ++k) {
    std::vector<RingElement> digit_rhs(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (unsigned t = 0; t < ring.degree(); ++t) {
        if (residual[i].c[t] % pk != 0) throw Error(ErrorCode::Inconsistent, "residual lost p-adic divisibility");
        digit_rhs[i].c[t] = residual[i].c[t] / pk % ring.p();
      }
    }
    const auto y = e.solve(digit_rhs);
    if (!y) throw Error(ErrorCode::Inconsistent, "no solution at p-digit " + std::to_string(k));
    const RingElement scale = ring.from_int(pk);
    for (std::size_t j = 0; j < m.cols; ++j) x[j] = ring.fma(x[j], scale, digit_lift(field, (*y)[j], ring));
    const auto mx = multiply(ring, m, x);
    for (std::size_t i = 0; i < m.rows; ++i) residual[i] = ring.sub(rhs[i], mx[i]);
    pk *= ring.p();
  }
  for (const auto& r : residual)
    if (!ring.is_zero(r)) throw Error(ErrorCode::Inconsistent, "lifted solution leaves a residual");
  return x;
}

}  // namespace

std::vector<RingElement> hensel_solve_full_rank(const Ring& ring, const Matrix& m, std::span<const RingElement> rhs) {
  if (rhs.size() != m.rows) throw Error(ErrorCode::InvalidArgument, "rhs length does not match row count");
  const Ring field = ring.residue_field();
  const Echelon e = factor_rows(field, reduce_matrix(ring, m, field), true);
  if (e.rank() != m.cols) throw Error(ErrorCode::SingularModP, "matrix is not of full column rank mod p");
  return hensel_with(ring, m, e, rhs);
}

std::vector<RingElement> hensel_solve(const Ring& ring, const Matrix& m, std::span<const RingElement> rhs) {
  if (m.rows != m.cols) throw Error(ErrorCode::InvalidArgument, "hensel_solve needs a square matrix");
  return hensel_solve_full_rank(ring, m, rhs);
}

Matrix invert_matrix(const Ring& ring, const Matrix& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::InvalidArgument, "only square matrices are invertible");
  const std::size_t n = m.rows;
  const Ring field = ring.residue_field();
  const Echelon e = factor_rows(field, reduce_matrix(ring, m, field), true);
  if (e.rank() != n) throw Error(ErrorCode::SingularModP, "matrix is singular mod p");
  Matrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<RingElement> unit(n);
    unit[col] = ring.one();
    const auto x = hensel_with(ring, m, e, unit);
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

}  // namespace hopfkit
