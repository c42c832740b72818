#include "owb/lattice.hpp"

#include <stdexcept>

namespace owb {

namespace {

void require_shapes(const LatticePoint& p) {
  std::size_t rows = 2 * p.n + 2, cols = p.n + 1;
  if (p.n == 0 || p.i < 0 || p.i > static_cast<long>(p.n))
    throw std::invalid_argument("level out of range");
  if (p.plus.rows != rows || p.plus.cols != cols || p.minus.rows != rows ||
      p.minus.cols != cols)
    throw std::invalid_argument("matrix shapes are wrong");
}

bool pi_free(const RingQ& R, const PolyMat<QQ>& M) {
  for (const auto& f : M.a)
    for (const auto& t : f.terms)
      if (t.m.deg != 0) return false;
  (void)R;
  return true;
}

bool is_zero_mat(const PolyMat<QQ>& M) {
  for (const auto& f : M.a)
    if (!f.is_zero()) return false;
  return true;
}

void check_ell_range(std::size_t n, long i, long ell) {
  long lo = std::max<long>(0, 2 * i - static_cast<long>(n));
  if (ell < lo || ell > i) throw std::domain_error("stratum index out of range");
}

}  // namespace

RingQ lattice_ring() { return RingQ(QQ{}, {"pi"}); }

PolyMat<QQ> pairing_matrix(const RingQ& R, std::size_t n) {
  std::size_t N = 2 * n + 2;
  PolyMat<QQ> phi(N, N);
  for (auto& f : phi.a) f = R.zero();
  for (std::size_t a = 1; a <= 2 * n; ++a) phi.at(a - 1, 2 * n - a) = R.one();
  phi.at(2 * n, 2 * n) = R.one();
  phi.at(2 * n + 1, 2 * n + 1) = R.one();
  return phi;
}

TransitionMaps transition_maps(const RingQ& R, std::size_t n, long i, CoeffRing mode) {
  std::size_t N = 2 * n + 2;
  PolyQ pi0 = mode == CoeffRing::local
                  ? poly_neg(R, poly_mul(R, R.var("pi"), R.var("pi")))
                  : R.zero();
  TransitionMaps tm;
  tm.lambda1 = PolyMat<QQ>(N, N);
  tm.lambda2 = PolyMat<QQ>(N, N);
  for (auto& f : tm.lambda1.a) f = R.zero();
  for (auto& f : tm.lambda2.a) f = R.zero();
  tm.iota_keeps.assign(N, 0);
  for (std::size_t a = 1; a <= N; ++a) {
    bool outer = a <= static_cast<std::size_t>(i) ||
                 (a > 2 * n - static_cast<std::size_t>(i) && a <= 2 * n);
    std::size_t k = a - 1;
    if (a <= 2 * n) {
      tm.lambda1.at(k, k) = outer ? pi0 : R.one();
      tm.lambda2.at(k, k) = outer ? R.one() : pi0;
      tm.iota_keeps[k] = outer ? 1 : 0;
    } else if (a == 2 * n + 1) {
      tm.lambda1.at(k, k) = pi0;
      tm.lambda2.at(k, k) = R.one();
      tm.iota_keeps[k] = 1;
    } else {
      tm.lambda1.at(k, k) = R.one();
      tm.lambda2.at(k, k) = pi0;
      tm.iota_keeps[k] = 0;
    }
  }
  auto prod = mat_mul(R, tm.lambda2, tm.lambda1);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      const PolyQ& want = r == c ? pi0 : R.zero();
      if (!poly_sub(R, prod.at(r, c), want).is_zero())
        throw std::logic_error("transition maps do not compose to the uniformizer");
    }
  return tm;
}

bool is_unit_local(const PolyQ& f) {
  for (const auto& t : f.terms)
    if (t.m.deg == 0) return !QQ::is_zero(t.c);
  return false;
}

std::vector<std::size_t> unit_minor_rows(const RingQ& R, const PolyMat<QQ>& M) {
  std::size_t k = M.cols;
  if (M.rows < k) return {};
  std::vector<std::size_t> pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = j;
  std::vector<std::size_t> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = j;
  while (true) {
    if (is_unit_local(minor_det(R, M, pick, cols))) return pick;
    // next combination
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == M.rows - k + (j - 1)) --j;
    if (j == 0) return {};
    ++pick[j - 1];
    for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
  }
}

bool columns_contained(const RingQ& R, const PolyMat<QQ>& M, const PolyMat<QQ>& T) {
  auto rows = unit_minor_rows(R, M);
  if (rows.empty()) return false;
  std::size_t k = M.cols;
  PolyMat<QQ> block(k, k), target(k, T.cols);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) block.at(r, c) = M.at(rows[r], c);
    for (std::size_t c = 0; c < T.cols; ++c) target.at(r, c) = T.at(rows[r], c);
  }
  PolyQ d = mat_det(R, block);
  auto lhs = mat_mul(R, M, mat_mul(R, mat_adjugate(R, block), target));
  auto rhs = mat_scale(R, T, d);
  for (std::size_t idx = 0; idx < lhs.a.size(); ++idx)
    if (!poly_sub(R, lhs.a[idx], rhs.a[idx]).is_zero()) return false;
  return true;
}

bool check_naive(const RingQ& R, const LatticePoint& p, CoeffRing mode) {
  require_shapes(p);
  if (mode == CoeffRing::residue && (!pi_free(R, p.plus) || !pi_free(R, p.minus)))
    throw std::invalid_argument("residue-field check needs pi-free entries");
  if (unit_minor_rows(R, p.plus).empty()) return false;
  if (unit_minor_rows(R, p.minus).empty()) return false;
  auto phi = pairing_matrix(R, p.n);
  if (!is_zero_mat(mat_mul(R, mat_transpose(p.minus), mat_mul(R, phi, p.plus))))
    return false;
  auto tm = transition_maps(R, p.n, p.i, mode);
  if (!columns_contained(R, p.plus, mat_mul(R, tm.lambda1, p.minus))) return false;
  if (!columns_contained(R, p.minus, mat_mul(R, tm.lambda2, p.plus))) return false;
  return true;
}

LatticePoint representative_point(const RingQ& R, std::size_t n, long i, long ell) {
  if (n == 0 || i < 0 || i > static_cast<long>(n))
    throw std::domain_error("level out of range");
  check_ell_range(n, i, ell);
  std::size_t N = 2 * n + 2;
  LatticePoint p{n, i, PolyMat<QQ>(N, n + 1), PolyMat<QQ>(N, n + 1)};
  for (auto& f : p.plus.a) f = R.zero();
  for (auto& f : p.minus.a) f = R.zero();
  std::size_t col = 0;
  for (long j = i + 1 - ell; j <= static_cast<long>(n) + i - ell; ++j, ++col)
    p.plus.at(static_cast<std::size_t>(j) - 1, col) = R.one();
  p.plus.at(2 * n + 1, col) = R.one();
  col = 0;
  for (long j = 1; j <= static_cast<long>(n) - i + ell; ++j, ++col)
    p.minus.at(static_cast<std::size_t>(j) - 1, col) = R.one();
  for (long j = 2 * static_cast<long>(n) + 1 - i + ell; j <= 2 * static_cast<long>(n);
       ++j, ++col)
    p.minus.at(static_cast<std::size_t>(j) - 1, col) = R.one();
  p.minus.at(2 * n, col) = R.one();
  return p;
}

LatticePoint lift_point(const RingQ& R, std::size_t n, long i, long ell) {
  if (n == 0 || i < 0 || i > static_cast<long>(n))
    throw std::domain_error("level out of range");
  check_ell_range(n, i, ell);
  std::size_t N = 2 * n + 2;
  PolyQ pi = R.var("pi");
  LatticePoint p{n, i, PolyMat<QQ>(N, n + 1), PolyMat<QQ>(N, n + 1)};
  for (auto& f : p.plus.a) f = R.zero();
  for (auto& f : p.minus.a) f = R.zero();
  long ln = static_cast<long>(n);
  std::size_t col = 0;
  for (long j = i + 1 - ell; j <= ln - i + ell; ++j, ++col)
    p.plus.at(static_cast<std::size_t>(j) - 1, col) = R.one();
  for (long m = 1; m <= i - ell; ++m, ++col) {
    p.plus.at(static_cast<std::size_t>(ln - i + ell + m) - 1, col) = R.one();
    p.plus.at(static_cast<std::size_t>(i - ell + 1 - m) - 1, col) = pi;
  }
  for (long m = 1; m <= i - ell; ++m, ++col) {
    p.plus.at(static_cast<std::size_t>(ln + m) - 1, col) = R.one();
    p.plus.at(static_cast<std::size_t>(2 * ln + 1 - m) - 1, col) = pi;
  }
  p.plus.at(2 * n, col) = pi;
  p.plus.at(2 * n + 1, col) = poly_neg(R, R.one());
  col = 0;
  for (long m = 1; m <= i - ell; ++m, ++col) {
    p.minus.at(static_cast<std::size_t>(m) - 1, col) = R.one();
    p.minus.at(static_cast<std::size_t>(ln + 1 - m) - 1, col) = poly_neg(R, pi);
  }
  for (long j = i - ell + 1; j <= ln - i + ell; ++j, ++col)
    p.minus.at(static_cast<std::size_t>(j) - 1, col) = R.one();
  for (long m = 1; m <= i - ell; ++m, ++col) {
    p.minus.at(static_cast<std::size_t>(2 * ln - i + ell + m) - 1, col) = R.one();
    p.minus.at(static_cast<std::size_t>(ln + i - ell + 1 - m) - 1, col) = poly_neg(R, pi);
  }
  p.minus.at(2 * n, col) = R.one();
  p.minus.at(2 * n + 1, col) = pi;
  return p;
}

LatticePoint reduce_at_pi_zero(const RingQ& R, const LatticePoint& p) {
  LatticePoint q = p;
  std::vector<PolyQ> images = {R.zero()};
  for (auto& f : q.plus.a) f = poly_subst(R, f, images);
  for (auto& f : q.minus.a) f = poly_subst(R, f, images);
  return q;
}

long stratum_rank(const RingQ& R, const LatticePoint& p) {
  require_shapes(p);
  if (!pi_free(R, p.plus)) throw std::invalid_argument("stratum rank needs a pi-free point");
  auto tm = transition_maps(R, p.n, p.i, CoeffRing::residue);
  PolyMat<QQ> cut = p.plus;
  for (std::size_t r = 0; r < cut.rows; ++r)
    if (!tm.iota_keeps[r])
      for (std::size_t c = 0; c < cut.cols; ++c) cut.at(r, c) = R.zero();
  return static_cast<long>(mat_rank_bareiss(R, cut));
}

PolyMat<QQ> column_echelon(const RingQ& R, const PolyMat<QQ>& M) {
  if (!pi_free(R, M)) throw std::invalid_argument("echelon form needs pi-free entries");
  // row-reduce the transpose over the rationals, canonical RREF
  std::size_t rows = M.cols, cols = M.rows;
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const PolyQ& f = M.at(c, r);
      if (!f.is_zero()) a[r][c] = f.terms.front().c;
    }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[lead]);
    mpq_class inv = 1 / a[lead][c];
    for (auto& x : a[lead]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[lead][k];
    }
    ++lead;
  }
  PolyMat<QQ> out(M.rows, M.cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out.at(c, r) = a[r][c] == 0 ? R.zero() : poly_scale(R, R.one(), a[r][c]);
  return out;
}

long mat_rank_q(const RingQ& R, const PolyMat<QQ>& M) {
  return static_cast<long>(mat_rank_bareiss(R, M));
}

}  // namespace owb
