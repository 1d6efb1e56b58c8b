#include "structure.hpp"

#include <map>

#include "hopfkit/error.hpp"

namespace hopfkit::detail {

Structure::Structure(const HopfPresentation& h)
    : ring_(h.ring), n_(h.dim), prod_(h.dim * h.dim), coprod_(h.dim), anti_(h.dim), unit_(h.dim), counit_(h.dim) {
  for (std::size_t in = 0; in < n_ * n_; ++in) prod_[in] = h.mult.sparse_column(in);
  for (std::size_t i = 0; i < n_; ++i) {
    coprod_[i] = h.comult.sparse_column(i);
    anti_[i] = h.antipode.sparse_column(i);
    unit_[i] = h.unit.at(i, 0);
    counit_[i] = h.counit.at(0, i);
  }
}

void Structure::accumulate_product(std::size_t I, std::size_t J, unsigned legs, const RingElement& coef,
                                   Vec& out) const {
  if (legs > 16) throw Error(ErrorCode::InvalidArgument, "too many tensor legs");
  for_each_product(I, J, legs, coef, [&](std::size_t idx, const RingElement& c) { out[idx] = ring_.add(out[idx], c); });
}

Vec Structure::mul(const Vec& x, const Vec& y, unsigned legs) const {
  Vec out(x.size());
  std::vector<std::size_t> ynz;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!ring_.is_zero(y[j])) ynz.push_back(j);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (ring_.is_zero(x[i])) continue;
    for (std::size_t j : ynz) accumulate_product(i, j, legs, ring_.mul(x[i], y[j]), out);
  }
  return out;
}

Vec Structure::comul(const Vec& x) const {
  Vec out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (ring_.is_zero(x[i])) continue;
    for (const auto& [k, v] : coprod_[i]) out[k] = ring_.fma(out[k], v, x[i]);
  }
  return out;
}

Vec Structure::apply_antipode(const Vec& x) const {
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (ring_.is_zero(x[i])) continue;
    for (const auto& [k, v] : anti_[i]) out[k] = ring_.fma(out[k], v, x[i]);
  }
  return out;
}

RingElement Structure::counit_of(const Vec& x) const {
  RingElement s = ring_.zero();
  for (std::size_t i = 0; i < n_; ++i) s = ring_.fma(s, counit_[i], x[i]);
  return s;
}

Vec Structure::unit_power(unsigned legs) const {
  Vec v{ring_.one()};
  for (unsigned t = 0; t < legs; ++t) {
    Vec next(v.size() * n_);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (ring_.is_zero(v[i])) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (!ring_.is_zero(unit_[k])) next[i * n_ + k] = ring_.mul(v[i], unit_[k]);
    }
    v = std::move(next);
  }
  return v;
}

SparseVector Structure::iterated_coproduct(std::size_t a, unsigned k) const {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "iterated coproduct needs k >= 1");
  std::map<std::size_t, RingElement> cur{{a, ring_.one()}};
  for (unsigned level = 2; level <= k; ++level) {
    // apply Δ to the first leg; the tail has level - 2 legs
    std::size_t tail = 1;
    for (unsigned t = 0; t + 2 < level; ++t) tail *= n_;
    std::map<std::size_t, RingElement> next;
    for (const auto& [idx, c] : cur) {
      const std::size_t first = idx / tail, rest = idx % tail;
      for (const auto& [k2, v] : coprod_[first]) {
        auto& slot = next[k2 * tail + rest];
        slot = ring_.fma(slot, c, v);
      }
    }
    cur.clear();
    for (auto& [idx, c] : next)
      if (!ring_.is_zero(c)) cur.emplace(idx, c);
  }
  SparseVector out;
  out.reserve(cur.size());
  for (const auto& [idx, c] : cur) out.emplace_back(static_cast<std::uint32_t>(idx), c);
  return out;
}

Vec basis_vector(const Ring& ring, std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = ring.one();
  return v;
}

bool is_zero_vec(const Ring& ring, const Vec& v) {
  for (const auto& c : v)
    if (!ring.is_zero(c)) return false;
  return true;
}

Vec sub_vec(const Ring& ring, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.sub(a[i], b[i]);
  return r;
}

Vec scale_vec(const Ring& ring, const Vec& a, const RingElement& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.mul(a[i], s);
  return r;
}

}  // namespace hopfkit::detail
