#include "owb/spin.hpp"

#include <algorithm>
#include <stdexcept>

namespace owb {

namespace {

bool contains(const WedgeSubset& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

WedgeSubset replace_elem(const WedgeSubset& s, int out, int in) {
  WedgeSubset r;
  r.reserve(s.size());
  for (int x : s)
    if (x != out) r.push_back(x);
  r.push_back(in);
  std::sort(r.begin(), r.end());
  return r;
}

PolyQ pi_pow(const RingQ& R, long e) {
  PolyQ p = R.one();
  PolyQ pi = R.var("pi");
  for (long k = 0; k < e; ++k) p = poly_mul(R, p, pi);
  return p;
}

std::vector<std::size_t> to_zero_based(const WedgeSubset& s) {
  std::vector<std::size_t> r(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) r[k] = static_cast<std::size_t>(s[k]) - 1;
  return r;
}

}  // namespace

int sign_sigma(const WedgeSubset& s, std::size_t universe) {
  (void)universe;
  long sum = 0;
  for (int x : s) sum += x;
  long k = static_cast<long>(s.size());
  long e = sum + (k + 1) / 2;
  return e % 2 == 0 ? 1 : -1;
}

int sign_sigma_brute(const WedgeSubset& s, std::size_t universe) {
  std::vector<int> img;
  img.reserve(universe);
  for (int x : s) img.push_back(x);
  for (int x = 1; x <= static_cast<int>(universe); ++x)
    if (!contains(s, x)) img.push_back(x);
  long inv = 0;
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = a + 1; b < img.size(); ++b)
      if (img[a] > img[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

WedgeSubset subset_star(const WedgeSubset& s, std::size_t universe) {
  WedgeSubset r;
  r.reserve(s.size());
  for (int x : s) r.push_back(static_cast<int>(universe) + 1 - x);
  std::sort(r.begin(), r.end());
  return r;
}

WedgeSubset subset_perp(const WedgeSubset& s, std::size_t universe) {
  WedgeSubset star = subset_star(s, universe), r;
  r.reserve(universe - s.size());
  for (int x = 1; x <= static_cast<int>(universe); ++x)
    if (!contains(star, x)) r.push_back(x);
  return r;
}

long subset_d(const WedgeSubset& s, std::size_t n, long i) {
  long lo = 2 * static_cast<long>(n) + 3 - i;
  long c = 0;
  for (int x : s)
    if (x >= lo) ++c;
  return c;
}

SpinType classify_subset(const WedgeSubset& s, std::size_t n, long i) {
  long ds = subset_d(s, n, i);
  long dp = subset_d(subset_perp(s, 2 * n + 2), n, i);
  bool has1 = contains(s, static_cast<int>(n) + 1);
  bool has2 = contains(s, static_cast<int>(n) + 2);
  if (ds > dp) {
    if (has1 && has2) return SpinType::I;
    if (has1) return SpinType::II;
    if (has2) return SpinType::III;
    return SpinType::IV;
  }
  if (ds == dp) {
    if (has1 && has2) return SpinType::V;
    if (has1 && !has2) return SpinType::VI;
  }
  return SpinType::none;
}

std::vector<WedgeSubset> all_subsets(std::size_t universe, std::size_t k) {
  std::vector<WedgeSubset> out;
  if (k > universe) return out;
  WedgeSubset cur(k);
  for (std::size_t j = 0; j < k; ++j) cur[j] = static_cast<int>(j) + 1;
  while (true) {
    out.push_back(cur);
    std::size_t j = k;
    while (j > 0 &&
           cur[j - 1] == static_cast<int>(universe - k + j))
      --j;
    if (j == 0) break;
    ++cur[j - 1];
    for (std::size_t l = j; l < k; ++l) cur[l] = cur[l - 1] + 1;
  }
  return out;
}

std::vector<WedgeSubset> self_perp_subsets(std::size_t n) {
  std::vector<WedgeSubset> out;
  for (const auto& s : all_subsets(2 * n + 2, n + 1))
    if (subset_perp(s, 2 * n + 2) == s) out.push_back(s);
  return out;
}

std::vector<PairedRelation> paired_relations(const RingQ& R, std::size_t n, long i,
                                             int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::vector<PairedRelation> out;
  int np1 = static_cast<int>(n) + 1, np2 = static_cast<int>(n) + 2;
  for (const auto& s : all_subsets(2 * n + 2, n + 1)) {
    SpinType t = classify_subset(s, n, i);
    if (t == SpinType::none) continue;
    WedgeSubset perp = subset_perp(s, 2 * n + 2);
    long dd = subset_d(s, n, i) - subset_d(perp, n, i);
    int sg = sign_sigma(s, 2 * n + 2);
    WedgeSubset target;
    PolyQ c;
    switch (t) {
      case SpinType::I:
        target = perp;
        c = poly_scale(R, pi_pow(R, 2 * dd + 1), mpq_class(sign * sg * (dd % 2 ? -1 : 1)));
        break;
      case SpinType::II:
        target = replace_elem(perp, np1, np2);
        c = poly_scale(R, pi_pow(R, 2 * dd + 1), mpq_class(sign * sg * (dd % 2 ? -1 : 1)));
        break;
      case SpinType::III:
        target = replace_elem(perp, np2, np1);
        c = poly_scale(R, pi_pow(R, 2 * dd - 1), mpq_class(-sign * sg * (dd % 2 ? -1 : 1)));
        break;
      case SpinType::IV:
        target = perp;
        c = poly_scale(R, pi_pow(R, 2 * dd - 1), mpq_class(sign * sg * (dd % 2 ? -1 : 1)));
        break;
      case SpinType::V:
        target = perp;
        c = poly_scale(R, pi_pow(R, 1), mpq_class(sign * sg));
        break;
      case SpinType::VI:
        target = replace_elem(perp, np1, np2);
        c = poly_scale(R, pi_pow(R, 1), mpq_class(sign * sg));
        break;
      default:
        continue;
    }
    out.push_back(PairedRelation{s, target, c, t});
  }
  return out;
}

std::size_t subset_index(const std::vector<WedgeSubset>& family, const WedgeSubset& s) {
  auto it = std::lower_bound(family.begin(), family.end(), s);
  if (it == family.end() || *it != s) throw std::logic_error("subset not in family");
  return static_cast<std::size_t>(it - family.begin());
}

WedgeVec involution_a(const RingQ& R, const WedgeVec& w, std::size_t n) {
  auto family = all_subsets(2 * n + 2, n + 1);
  if (w.coeff.size() != family.size())
    throw std::invalid_argument("wedge vector has the wrong length");
  WedgeVec out;
  out.coeff.assign(family.size(), R.zero());
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    WedgeSubset perp = subset_perp(family[idx], 2 * n + 2);
    int sg = sign_sigma(perp, 2 * n + 2);
    const PolyQ& src = w.coeff[subset_index(family, perp)];
    out.coeff[idx] = sg == 1 ? src : poly_neg(R, src);
  }
  return out;
}

std::vector<WedgeVec> h_basis(const RingQ& R, std::size_t n, long i, int sign) {
  auto family = all_subsets(2 * n + 2, n + 1);
  std::vector<WedgeVec> out;
  for (const auto& rel : paired_relations(R, n, i, sign)) {
    WedgeVec v;
    v.coeff.assign(family.size(), R.zero());
    v.coeff[subset_index(family, rel.source)] = R.one();
    v.coeff[subset_index(family, rel.target)] = rel.coeff;
    out.push_back(std::move(v));
  }
  return out;
}

PolyMat<QQ> to_g_basis(const RingQ& R, const LatticePoint& p) {
  (void)R;
  std::size_t n = p.n, N = 2 * n + 2;
  long i = p.i;
  if (p.minus.rows != N || p.minus.cols != n + 1)
    throw std::invalid_argument("matrix shapes are wrong");
  std::vector<std::size_t> gperm(N);  // g slot -> beta slot, 0-based
  for (std::size_t a = 1; a <= n; ++a) gperm[a - 1] = a - 1;
  gperm[n] = 2 * n;
  gperm[n + 1] = 2 * n + 1;
  for (std::size_t m = 1; m <= n - static_cast<std::size_t>(i); ++m)
    gperm[n + 1 + m] = n + m - 1;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(i); ++m)
    gperm[2 * n + 1 - static_cast<std::size_t>(i) + m] = 2 * n - static_cast<std::size_t>(i) + m - 1;
  PolyMat<QQ> out(N, n + 1);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < n + 1; ++c) out.at(r, c) = p.minus.at(gperm[r], c);
  return out;
}

std::vector<PolyQ> wedge_minors(const RingQ& R, const PolyMat<QQ>& M) {
  std::vector<std::size_t> cols(M.cols);
  for (std::size_t c = 0; c < M.cols; ++c) cols[c] = c;
  std::vector<PolyQ> out;
  for (const auto& s : all_subsets(M.rows, M.cols))
    out.push_back(minor_det(R, M, to_zero_based(s), cols));
  return out;
}

PolyMat<QQ> g_to_split(const RingQ& Rq, std::size_t n, long i) {
  std::size_t N = 2 * n + 2;
  PolyQ pi = Rq.var("pi"), q = Rq.var("q");
  PolyQ pi0 = poly_neg(Rq, poly_mul(Rq, pi, pi));
  PolyMat<QQ> T(N, N);
  for (auto& f : T.a) f = Rq.zero();
  for (std::size_t a = 1; a <= n; ++a) T.at(a - 1, a - 1) = Rq.one();
  T.at(n, n) = poly_scale(Rq, Rq.one(), mpq_class(1, 2));
  T.at(n + 1, n) = pi0;
  T.at(n, n + 1) = poly_scale(Rq, q, mpq_class(1, 2));
  T.at(n + 1, n + 1) = pi;
  for (std::size_t a = n + 3; a <= 2 * n + 2 - static_cast<std::size_t>(i); ++a)
    T.at(a - 1, a - 1) = Rq.one();
  for (std::size_t a = 2 * n + 3 - static_cast<std::size_t>(i); a <= N; ++a)
    T.at(a - 1, a - 1) = pi0;
  return T;
}

bool spin_membership(const RingQ& R, const LatticePoint& p, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (!check_naive(R, p, CoeffRing::local))
    throw std::invalid_argument("point fails the chain membership conditions");
  std::size_t n = p.n;
  auto family = all_subsets(2 * n + 2, n + 1);
  PolyMat<QQ> Mg = to_g_basis(R, p);
  std::vector<PolyQ> a = wedge_minors(R, Mg);

  bool relations_ok = true;
  for (const auto& rel : paired_relations(R, n, p.i, sign)) {
    const PolyQ& lhs = a[subset_index(family, rel.target)];
    PolyQ rhs = poly_mul(R, rel.coeff, a[subset_index(family, rel.source)]);
    if (!poly_sub(R, lhs, rhs).is_zero()) {
      relations_ok = false;
      break;
    }
  }

  // independent eigenvector test over the split basis, denominators handled
  // by the inverse-uniformizer variable
  RingQ Rq(QQ{}, {"pi", "q"});
  std::vector<PolyQ> lift_images = {Rq.var("pi")};
  PolyMat<QQ> Mq(Mg.rows, Mg.cols);
  for (std::size_t k = 0; k < Mg.a.size(); ++k)
    Mq.a[k] = poly_subst(Rq, Mg.a[k], lift_images);
  PolyMat<QQ> Me = mat_mul(Rq, g_to_split(Rq, n, p.i), Mq);
  std::vector<PolyQ> b = wedge_minors(Rq, Me);
  Ideal<QQ> laurent;
  laurent.gens.push_back(
      poly_sub(Rq, poly_mul(Rq, Rq.var("pi"), Rq.var("q")), Rq.one()));
  auto ord = MonomialOrder::grevlex();
  const auto& gb = laurent.gb(Rq, ord);
  bool eigen_ok = true;
  for (std::size_t idx = 0; idx < family.size() && eigen_ok; ++idx) {
    WedgeSubset perp = subset_perp(family[idx], 2 * n + 2);
    int sg = sign_sigma(family[idx], 2 * n + 2);
    PolyQ rhs = poly_scale(Rq, b[idx], mpq_class(sign * sg));
    PolyQ diff = poly_sub(Rq, b[subset_index(family, perp)], rhs);
    if (!normal_form(Rq, diff, gb.polys, ord).is_zero()) eigen_ok = false;
  }

  if (relations_ok != eigen_ok)
    throw std::logic_error("the two membership tests disagree");
  return relations_ok;
}

RingQ x_ring(long i) {
  long m = 2 * i + 1;
  std::vector<std::string> names;
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c)
      names.push_back("x" + std::to_string(r) + std::to_string(c));
  names.push_back("pi");
  return RingQ(QQ{}, names);
}

PolyMat<QQ> x_matrix(const RingQ& R, long i) {
  long m = 2 * i + 1;
  PolyMat<QQ> X(m, m);
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c)
      X.at(r - 1, c - 1) = R.var("x" + std::to_string(r) + std::to_string(c));
  return X;
}

std::vector<PolyQ> spin_ideal_gens(const RingQ& R, long i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  PolyMat<QQ> X = x_matrix(R, i);
  PolyQ pi = R.var("pi");
  std::size_t m = static_cast<std::size_t>(2 * i + 1);
  auto idx_sets = all_subsets(m, static_cast<std::size_t>(i));
  std::vector<PolyQ> gens;
  for (const auto& u : idx_sets)
    for (const auto& v : idx_sets) {
      WedgeSubset up = subset_perp(u, m), vp = subset_perp(v, m);
      PolyQ big = minor_det(R, X, to_zero_based(up), to_zero_based(vp));
      PolyQ small = minor_det(R, X, to_zero_based(u), to_zero_based(v));
      long e = i + (sign == 1 ? 0 : 1);
      int c = sign_sigma(u, m) * sign_sigma(v, m) * (e % 2 ? -1 : 1);
      gens.push_back(
          poly_sub(R, big, poly_scale(R, poly_mul(R, pi, small), mpq_class(c))));
    }
  return gens;
}

}  // namespace owb
