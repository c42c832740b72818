#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "owb/groebner.hpp"
#include "owb/poly.hpp"

namespace owb {

// Exact division: q with a = q*b; throws if b does not divide a.
template <class F>
Poly<F> poly_exact_div(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return a;
  auto ord = MonomialOrder::grevlex();
  auto res = divide(R, a, std::vector<Poly<F>>{b}, ord, true);
  if (!res.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return res.cofactors[0];
}

// Dense matrix of field scalars with exact Gaussian rank.
template <class F>
struct ScalarMat {
  std::size_t rows = 0, cols = 0;
  std::vector<typename F::Elem> a;

  ScalarMat() = default;
  ScalarMat(std::size_t r, std::size_t c, typename F::Elem fill)
      : rows(r), cols(c), a(r * c, fill) {}
  typename F::Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const typename F::Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <class F>
std::size_t scalar_rank(const FieldOps<F>& fop, ScalarMat<F> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r)
      if (!fop.is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot == m.rows) continue;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(rank, k), m.at(pivot, k));
    auto inv = fop.inv(m.at(rank, c));
    for (std::size_t k = 0; k < m.cols; ++k) m.at(rank, k) = fop.mul(m.at(rank, k), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || fop.is_zero(m.at(r, c))) continue;
      auto f = m.at(r, c);
      for (std::size_t k = 0; k < m.cols; ++k)
        m.at(r, k) = fop.sub(m.at(r, k), fop.mul(f, m.at(rank, k)));
    }
    ++rank;
  }
  return rank;
}

// Jacobian rank of a generator list at a point of its zero set.
template <class F>
std::size_t jacobian_rank_at(const Ring<F>& R, const std::vector<Poly<F>>& gens,
                             const std::vector<typename F::Elem>& point) {
  for (const auto& g : gens)
    if (!R.fop.is_zero(poly_eval(R, g, point)))
      throw std::domain_error("point is not on the zero set");
  ScalarMat<F> jac(gens.size(), R.nvars(), R.fop.zero());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < R.nvars(); ++c)
      jac.at(r, c) = poly_eval(R, poly_derivative(R, gens[r], c), point);
  return scalar_rank(R.fop, jac);
}

// Dense matrix of polynomials.
template <class F>
struct PolyMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Poly<F>> a;

  PolyMat() = default;
  PolyMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Poly<F>& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Poly<F>& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <class F>
PolyMat<F> mat_mul(const Ring<F>& R, const PolyMat<F>& x, const PolyMat<F>& y) {
  PolyMat<F> z(x.rows, y.cols);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < y.cols; ++c) {
      Poly<F> acc = R.zero();
      for (std::size_t k = 0; k < x.cols; ++k)
        acc = poly_add(R, acc, poly_mul(R, x.at(r, k), y.at(k, c)));
      z.at(r, c) = std::move(acc);
    }
  return z;
}

template <class F>
PolyMat<F> mat_add(const Ring<F>& R, const PolyMat<F>& x, const PolyMat<F>& y) {
  PolyMat<F> z(x.rows, x.cols);
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] = poly_add(R, x.a[k], y.a[k]);
  return z;
}

template <class F>
PolyMat<F> mat_scale(const Ring<F>& R, const PolyMat<F>& x, const Poly<F>& s) {
  PolyMat<F> z(x.rows, x.cols);
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] = poly_mul(R, x.a[k], s);
  return z;
}

template <class F>
PolyMat<F> mat_transpose(const PolyMat<F>& x) {
  PolyMat<F> z(x.cols, x.rows);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c) z.at(c, r) = x.at(r, c);
  return z;
}

// Determinant of the square submatrix (selected rows x selected cols) by
// column-by-column Laplace expansion memoized over row subsets.
template <class F>
Poly<F> minor_det(const Ring<F>& R, const PolyMat<F>& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k != cols.size()) throw std::invalid_argument("minor must be square");
  if (k == 0) return R.one();
  std::map<std::uint64_t, Poly<F>> memo;  // bitmask of used rows, per column depth
  // dp over columns left to right; state = set of rows already consumed
  std::function<Poly<F>(std::size_t, std::uint64_t)> go = [&](std::size_t col,
                                                              std::uint64_t used) -> Poly<F> {
    if (col == k) return R.one();
    std::uint64_t key = used * (k + 1) + col;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Poly<F> acc = R.zero();
    std::size_t seen = 0;
    for (std::size_t r = 0; r < k; ++r) {
      if (used & (1ull << r)) continue;
      const Poly<F>& entry = m.at(rows[r], cols[col]);
      if (!entry.is_zero()) {
        Poly<F> sub = go(col + 1, used | (1ull << r));
        Poly<F> contrib = poly_mul(R, entry, sub);
        if (seen % 2 == 1) contrib = poly_neg(R, contrib);
        acc = poly_add(R, acc, contrib);
      }
      ++seen;
    }
    memo.emplace(key, acc);
    return acc;
  };
  return go(0, 0);
}

template <class F>
Poly<F> mat_det(const Ring<F>& R, const PolyMat<F>& m) {
  std::vector<std::size_t> idx(m.rows);
  for (std::size_t k = 0; k < m.rows; ++k) idx[k] = k;
  return minor_det(R, m, idx, idx);
}

// All k x k minors over all row subsets for fixed columns (k = cols.size()).
template <class F>
std::map<std::vector<std::size_t>, Poly<F>> maximal_minors(const Ring<F>& R,
                                                           const PolyMat<F>& m) {
  std::map<std::vector<std::size_t>, Poly<F>> out;
  std::vector<std::size_t> cols(m.cols);
  for (std::size_t k = 0; k < m.cols; ++k) cols[k] = k;
  std::vector<std::size_t> rows(m.cols);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == m.cols) {
      out.emplace(rows, minor_det(R, m, rows, cols));
      return;
    }
    for (std::size_t r = start; r + (m.cols - pos) <= m.rows; ++r) {
      rows[pos] = r;
      rec(pos + 1, r + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Adjugate of a square polynomial matrix (transpose of cofactors).
template <class F>
PolyMat<F> mat_adjugate(const Ring<F>& R, const PolyMat<F>& m) {
  const std::size_t k = m.rows;
  PolyMat<F> adj(k, k);
  std::vector<std::size_t> all(k);
  for (std::size_t t = 0; t < k; ++t) all[t] = t;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> rr, cc;
      for (std::size_t t = 0; t < k; ++t) {
        if (t != r) rr.push_back(t);
        if (t != c) cc.push_back(t);
      }
      Poly<F> cof = minor_det(R, m, rr, cc);
      if ((r + c) % 2 == 1) cof = poly_neg(R, cof);
      adj.at(c, r) = std::move(cof);
    }
  return adj;
}

// Fraction-free (Bareiss) rank for matrices over an integral domain of polys.
template <class F>
std::size_t mat_rank_bareiss(const Ring<F>& R, PolyMat<F> m) {
  std::size_t rank = 0;
  Poly<F> prev = R.one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = m.rows;
    for (std::size_t r = row; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == m.rows) continue;
    if (pivot != row)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(row, k), m.at(pivot, k));
    for (std::size_t r = row + 1; r < m.rows; ++r) {
      for (std::size_t k = col + 1; k < m.cols; ++k) {
        Poly<F> num = poly_sub(R, poly_mul(R, m.at(row, col), m.at(r, k)),
                               poly_mul(R, m.at(r, col), m.at(row, k)));
        m.at(r, k) = poly_exact_div(R, num, prev);
      }
      m.at(r, col) = R.zero();
    }
    prev = m.at(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace owb
