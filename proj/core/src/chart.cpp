#include "owb/chart.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "owb/orth.hpp"

namespace owb {

namespace {

std::string nm(const char* stem, long r, long c) {
  return std::string(stem) + std::to_string(r) + std::to_string(c);
}

// new-layout index: the middle row/column of the square matrix holds the old
// edge vector, so old index r skips over slot i+1
long wide(long r, long i) { return r <= i ? r : r + 1; }

PolyMat<QQ> neg_mat(const RingQ& R, const PolyMat<QQ>& m) {
  PolyMat<QQ> z = m;
  for (auto& f : z.a) f = poly_neg(R, f);
  return z;
}

std::vector<std::string> x_names(long i) {
  std::vector<std::string> names;
  for (long r = 1; r <= 2 * i + 1; ++r)
    for (long c = 1; c <= 2 * i + 1; ++c) names.push_back(nm("x", r, c));
  return names;
}

}  // namespace

ChartVars chart_vars(std::size_t n, long i) {
  if (i < 0 || 2 * i > static_cast<long>(n)) throw std::domain_error("level out of range");
  long m = static_cast<long>(n) - 2 * i;
  std::vector<std::string> names = x_names(i);
  for (long r = 1; r <= 2 * i; ++r)
    for (long c = 1; c <= m; ++c) names.push_back(nm("b", r, c));
  for (long c = 1; c <= m; ++c) names.push_back("c" + std::to_string(c));
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c)
      if (r + c < m + 1) names.push_back(nm("a", r, c));
  names.push_back("pi");
  ChartVars cv{RingQ(QQ{}, names), n, i, 0};
  cv.free_count = static_cast<std::size_t>(2 * i * m + m + m * (m - 1) / 2);
  if (cv.free_count !=
      static_cast<std::size_t>(m * (static_cast<long>(n) + 2 * i + 1) / 2))
    throw std::logic_error("free variable count mismatch");
  return cv;
}

ChartBlocks chart_blocks(const ChartVars& cv) {
  const RingQ& R = cv.ring;
  long i = cv.i, m = static_cast<long>(cv.n) - 2 * i;
  ChartBlocks B;
  B.A1 = PolyMat<QQ>(2 * i, 2 * i);
  B.C1 = PolyMat<QQ>(2 * i, 1);
  B.C3 = PolyMat<QQ>(1, 2 * i);
  for (long r = 1; r <= 2 * i; ++r) {
    for (long k = 1; k <= 2 * i; ++k)
      B.A1.at(r - 1, k - 1) = R.var(nm("x", wide(r, i), wide(k, i)));
    B.C1.at(r - 1, 0) = R.var(nm("x", wide(r, i), i + 1));
    B.C3.at(0, r - 1) = R.var(nm("x", i + 1, wide(r, i)));
  }
  B.c = R.var(nm("x", i + 1, i + 1));
  B.A2 = PolyMat<QQ>(2 * i, m);
  for (long r = 1; r <= 2 * i; ++r)
    for (long c = 1; c <= m; ++c) B.A2.at(r - 1, c - 1) = R.var(nm("b", r, c));
  B.C4 = PolyMat<QQ>(1, m);
  for (long c = 1; c <= m; ++c) B.C4.at(0, c - 1) = R.var("c" + std::to_string(c));

  PolyMat<QQ> hm = anti_identity(R, m), h2i = anti_identity(R, 2 * i);
  B.A3 = neg_mat(R, mat_add(R, mat_mul(R, adjoint_of(R, B.A2), B.A1),
                            mat_mul(R, hm, mat_mul(R, mat_transpose(B.C4), B.C3))));
  B.C2 = neg_mat(
      R, mat_mul(R, hm,
                 mat_add(R,
                         mat_mul(R, mat_transpose(B.A2), mat_mul(R, h2i, B.C1)),
                         mat_scale(R, mat_transpose(B.C4), B.c))));

  // the strictly-upper anti-triangle is free; the rest is forced by
  // A4 + A4^ad + Q = 0 where Q = A2^ad A2 + H C4^t C4 satisfies Q^ad = Q
  PolyMat<QQ> Q = mat_add(R, mat_mul(R, adjoint_of(R, B.A2), B.A2),
                          mat_mul(R, hm, mat_mul(R, mat_transpose(B.C4), B.C4)));
  B.A4 = PolyMat<QQ>(m, m);
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c) {
      if (r + c < m + 1) {
        B.A4.at(r - 1, c - 1) = R.var(nm("a", r, c));
      } else if (r + c == m + 1) {
        B.A4.at(r - 1, c - 1) = poly_scale(R, Q.at(r - 1, c - 1), mpq_class(-1, 2));
      } else {
        long rr = m + 1 - c, cc = m + 1 - r;
        B.A4.at(r - 1, c - 1) =
            poly_neg(R, poly_add(R, R.var(nm("a", rr, cc)), Q.at(rr - 1, cc - 1)));
      }
    }
  return B;
}

PolyMat<QQ> chart_plane_matrix(const ChartVars& cv) {
  const RingQ& R = cv.ring;
  std::size_t n = cv.n;
  long i = cv.i, m = static_cast<long>(n) - 2 * i;
  ChartBlocks B = chart_blocks(cv);
  PolyMat<QQ> F(2 * n + 2, n + 1);
  auto X = [&](long r, long c) { return R.var(nm("x", r, c)); };
  // column blocks of widths i, m, 1, i
  std::size_t c2 = static_cast<std::size_t>(i), c3 = n - static_cast<std::size_t>(i),
              c4 = c3 + 1;
  for (long r = 1; r <= i; ++r) F.at(r - 1, r - 1) = R.one();
  for (long j = 1; j <= m; ++j) F.at(i + j - 1, c2 + j - 1) = R.one();
  for (long r = 1; r <= i; ++r) {
    std::size_t row = c3 + static_cast<std::size_t>(r) - 1;  // rows n-i+1 .. n
    for (long k = 1; k <= i; ++k) F.at(row, k - 1) = X(r, k);
    for (long j = 1; j <= m; ++j) F.at(row, c2 + j - 1) = B.A2.at(r - 1, j - 1);
    F.at(row, c3) = X(r, i + 1);
    for (long k = 1; k <= i; ++k) F.at(row, c4 + k - 1) = X(r, i + 1 + k);
  }
  F.at(n, c3) = R.one();
  {
    std::size_t row = n + 1;
    for (long k = 1; k <= i; ++k) F.at(row, k - 1) = X(i + 1, k);
    for (long j = 1; j <= m; ++j) F.at(row, c2 + j - 1) = B.C4.at(0, j - 1);
    F.at(row, c3) = X(i + 1, i + 1);
    for (long k = 1; k <= i; ++k) F.at(row, c4 + k - 1) = X(i + 1, i + 1 + k);
  }
  for (long r = 1; r <= i; ++r) {
    std::size_t row = n + 1 + static_cast<std::size_t>(r);
    for (long k = 1; k <= i; ++k) F.at(row, k - 1) = X(i + 1 + r, k);
    for (long j = 1; j <= m; ++j) F.at(row, c2 + j - 1) = B.A2.at(i + r - 1, j - 1);
    F.at(row, c3) = X(i + 1 + r, i + 1);
    for (long k = 1; k <= i; ++k) F.at(row, c4 + k - 1) = X(i + 1 + r, i + 1 + k);
  }
  for (long r = 1; r <= m; ++r) {
    std::size_t row = n + 1 + static_cast<std::size_t>(i + r);
    for (long k = 1; k <= i; ++k) F.at(row, k - 1) = B.A3.at(r - 1, k - 1);
    for (long j = 1; j <= m; ++j) F.at(row, c2 + j - 1) = B.A4.at(r - 1, j - 1);
    F.at(row, c3) = B.C2.at(r - 1, 0);
    for (long k = 1; k <= i; ++k) F.at(row, c4 + k - 1) = B.A3.at(r - 1, i + k - 1);
  }
  for (long r = 1; r <= i; ++r)
    F.at(2 * n + 1 - static_cast<std::size_t>(i - r), c4 + r - 1) = R.one();
  return F;
}

std::vector<PolyQ> naive_ideal_gens(const RingQ& R, long i) {
  PolyQ pi = R.var("pi");
  return naive_gens<QQ>(R, i, poly_neg(R, poly_mul(R, pi, pi)));
}

std::vector<PolyQ> spin_oracle_gens(const ChartVars& cv, int sign) {
  const RingQ& R = cv.ring;
  PolyMat<QQ> F = chart_plane_matrix(cv);
  std::vector<PolyQ> minors = wedge_minors(R, F);
  auto family = all_subsets(2 * cv.n + 2, cv.n + 1);
  std::vector<PolyQ> gens;
  for (const auto& rel : paired_relations(R, cv.n, cv.i, sign)) {
    const PolyQ& tgt = minors[subset_index(family, rel.target)];
    const PolyQ& src = minors[subset_index(family, rel.source)];
    gens.push_back(poly_sub(R, tgt, poly_mul(R, rel.coeff, src)));
  }
  return gens;
}

bool implied_relations_check(std::size_t n, long i) {
  ChartVars cv = chart_vars(n, i);
  const RingQ& R = cv.ring;
  ChartBlocks B = chart_blocks(cv);
  long m = static_cast<long>(n) - 2 * i;
  PolyMat<QQ> hm = anti_identity(R, m), h2i = anti_identity(R, 2 * i);
  PolyQ pi = R.var("pi");
  PolyQ pi0 = poly_neg(R, poly_mul(R, pi, pi));

  auto ord = MonomialOrder::grevlex();
  // raw Gebauer-Moeller output; membership only needs some basis of the
  // ideal, and the reduced form is far too large at level two
  auto basis = buchberger(R, naive_ideal_gens(R, i), ord, Budget{}, true);

  auto scaled_id = [&](long k) {
    PolyMat<QQ> e(k, k);
    for (long j = 0; j < k; ++j) e.at(j, j) = pi0;
    return e;
  };
  auto times = [&](const PolyMat<QQ>& M, const PolyQ& s) { return mat_scale(R, M, s); };
  auto A1ad = adjoint_of(R, B.A1), A2ad = adjoint_of(R, B.A2),
       A3ad = adjoint_of(R, B.A3), A4ad = adjoint_of(R, B.A4);
  auto C1t = mat_transpose(B.C1), C2t = mat_transpose(B.C2),
       C3t = mat_transpose(B.C3), C4t = mat_transpose(B.C4);

  std::vector<PolyMat<QQ>> leftovers;
  // first the direct pairing conditions on the dependent blocks
  leftovers.push_back(mat_add(
      R, mat_add(R, mat_mul(R, A1ad, B.A1), mat_mul(R, h2i, mat_mul(R, C3t, B.C3))),
      scaled_id(2 * i)));
  leftovers.push_back(mat_add(
      R, mat_add(R, mat_mul(R, A2ad, B.A1), mat_mul(R, hm, mat_mul(R, C4t, B.C3))),
      B.A3));
  leftovers.push_back(mat_add(R, mat_mul(R, C1t, mat_mul(R, h2i, B.A1)),
                              times(B.C3, B.c)));
  leftovers.push_back(mat_add(
      R, mat_add(R, B.A4, A4ad),
      mat_add(R, mat_mul(R, A2ad, B.A2), mat_mul(R, hm, mat_mul(R, C4t, B.C4)))));
  leftovers.push_back(mat_add(R, mat_mul(R, C2t, hm),
                              mat_add(R, mat_mul(R, C1t, mat_mul(R, h2i, B.A2)),
                                      times(B.C4, B.c))));
  {
    PolyMat<QQ> e6 = mat_mul(R, C1t, mat_mul(R, h2i, B.C1));
    if (e6.rows == 0) e6 = PolyMat<QQ>(1, 1);
    e6.at(0, 0) = poly_add(R, e6.at(0, 0), poly_add(R, poly_mul(R, B.c, B.c), pi0));
    leftovers.push_back(e6);
  }
  // then the transposed-module conditions
  leftovers.push_back(mat_add(
      R, mat_add(R, mat_mul(R, B.A1, A3ad), neg_mat(R, times(B.A2, pi0))),
      mat_mul(R, B.C1, mat_mul(R, C2t, hm))));
  leftovers.push_back(
      mat_add(R,
              mat_add(R, mat_mul(R, B.A3, A3ad), neg_mat(R, times(B.A4, pi0))),
              mat_add(R, mat_mul(R, B.C2, mat_mul(R, C2t, hm)),
                      neg_mat(R, times(A4ad, pi0)))));
  leftovers.push_back(mat_add(
      R, mat_add(R, neg_mat(R, mat_mul(R, B.C3, A3ad)), times(B.C4, pi0)),
      neg_mat(R, times(mat_mul(R, C2t, hm), B.c))));
  leftovers.push_back(mat_add(
      R, mat_add(R, mat_mul(R, B.A1, A1ad), mat_mul(R, B.C1, mat_mul(R, C1t, h2i))),
      scaled_id(2 * i)));
  leftovers.push_back(
      mat_add(R, mat_mul(R, B.A3, A1ad),
              mat_add(R, mat_mul(R, B.C2, mat_mul(R, C1t, h2i)),
                      neg_mat(R, times(A2ad, pi0)))));
  leftovers.push_back(mat_add(R, mat_mul(R, B.C3, A1ad),
                              times(mat_mul(R, C1t, h2i), B.c)));
  leftovers.push_back(mat_add(
      R, mat_add(R, mat_mul(R, B.A3, mat_mul(R, h2i, C3t)), times(B.C2, B.c)),
      neg_mat(R, times(mat_mul(R, hm, C4t), pi0))));
  {
    PolyMat<QQ> g8 = mat_mul(R, B.C3, mat_mul(R, h2i, C3t));
    if (g8.rows == 0) g8 = PolyMat<QQ>(1, 1);
    g8.at(0, 0) = poly_add(R, g8.at(0, 0), poly_add(R, poly_mul(R, B.c, B.c), pi0));
    leftovers.push_back(g8);
  }

  for (const auto& L : leftovers)
    for (const auto& f : L.a)
      if (!normal_form(R, f, basis, ord).is_zero()) return false;
  return true;
}

bool oracle_matches_spin(std::size_t n, long i, int sign, const Budget& budget) {
  ChartVars cv = chart_vars(n, i);
  const RingQ& R = cv.ring;
  std::vector<PolyQ> naive = naive_ideal_gens(R, i);
  std::vector<PolyQ> spin = spin_ideal_gens(R, i, sign);
  std::vector<PolyQ> oracle = spin_oracle_gens(cv, sign);
  auto ord = MonomialOrder::grevlex();

  std::vector<PolyQ> with_spin = naive;
  with_spin.insert(with_spin.end(), spin.begin(), spin.end());
  auto gb1 = groebner(R, with_spin, ord, budget);
  for (const auto& g : oracle)
    if (!normal_form(R, g, gb1.polys, ord).is_zero()) return false;

  auto gb0 = groebner(R, naive, ord, budget);
  std::vector<PolyQ> with_oracle = naive;
  for (const auto& g : oracle) {
    PolyQ r = normal_form(R, g, gb0.polys, ord);
    if (!r.is_zero()) with_oracle.push_back(r);
  }
  auto gb2 = groebner(R, with_oracle, ord, budget);
  for (const auto& g : spin)
    if (!normal_form(R, g, gb2.polys, ord).is_zero()) return false;
  return true;
}

bool special_fiber_equality(long i, int sign, std::uint64_t prime) {
  GF gf(prime);
  Ring<GF> R(gf, x_names(i));
  Ideal<GF> lhs, rhs;
  lhs.gens = naive_gens<GF>(R, i, R.zero());
  auto spin0 = spin_minor_gens<GF>(R, i, sign, R.zero());
  lhs.gens.insert(lhs.gens.end(), spin0.begin(), spin0.end());
  if (i >= 1)
    rhs.gens = ri_gens<GF>(R, i);
  else
    rhs.gens.push_back(R.var("x11"));
  return ideal_equal(R, lhs, rhs);
}

bool irreducibility_oracle(long i, std::uint64_t prime) {
  if (i != 1) throw std::domain_error("parametrization oracle only covers level one");
  GF gf(prime);
  std::vector<std::string> names = x_names(1);
  std::size_t nx = names.size();
  for (long j = 1; j <= 3; ++j) names.push_back("u" + std::to_string(j));
  for (long j = 1; j <= 3; ++j) names.push_back("v" + std::to_string(j));
  Ring<GF> Ruv(gf, names);

  Ideal<GF> graph;
  auto u = [&](long j) { return Ruv.var("u" + std::to_string(j)); };
  auto v = [&](long j) { return Ruv.var("v" + std::to_string(j)); };
  for (long r = 1; r <= 3; ++r)
    for (long c = 1; c <= 3; ++c)
      graph.gens.push_back(
          poly_sub(Ruv, Ruv.var(nm("x", r, c)), poly_mul(Ruv, u(r), v(c))));
  auto iso = [&](auto w) {
    Poly<GF> s = poly_mul(Ruv, w(2), w(2));
    Poly<GF> cross = poly_mul(Ruv, w(1), w(3));
    return poly_add(Ruv, s, poly_add(Ruv, cross, cross));
  };
  graph.gens.push_back(iso(u));
  graph.gens.push_back(iso(v));

  std::set<std::size_t> drop;
  for (std::size_t k = nx; k < names.size(); ++k) drop.insert(k);
  Ideal<GF> elim = eliminate(Ruv, graph, drop);

  Ring<GF> Rx(gf, x_names(1));
  std::vector<std::size_t> down(names.size(), 0);
  for (std::size_t k = 0; k < nx; ++k) down[k] = k;
  Ideal<GF> J;
  for (const auto& g : elim.gens) J.gens.push_back(poly_rename(Rx, g, down));
  Ideal<GF> R1;
  R1.gens = ri_gens<GF>(Rx, 1);

  for (const auto& g : J.gens)
    if (!radical_member(Rx, g, R1)) return false;
  for (const auto& g : R1.gens)
    if (!radical_member(Rx, g, J)) return false;
  return krull_dim(Rx, J) == 3;
}

SmoothnessReport generic_smoothness_probe(long i, long trials, std::uint64_t prime,
                                          std::uint64_t seed) {
  if (i < 1) throw std::domain_error("rank locus needs a positive level");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  GF gf(prime);
  std::size_t d = static_cast<std::size_t>(2 * i + 1);
  Ring<GF> Rx(gf, x_names(i));
  std::vector<Poly<GF>> gens = ri_gens<GF>(Rx, i);
  std::size_t expected =
      d * d - static_cast<std::size_t>(i) * d;  // codimension of the rank locus
  SplitMix rng(seed);
  SmoothnessReport rep;
  rep.trials = trials;
  long safety = 1000 * trials;
  for (long t = 0; t < trials; ++t) {
    GfMat X;
    while (true) {
      if (--safety < 0) throw ResourceLimitError("sampling kept hitting the gate");
      GfMat g1 = random_split_orthogonal(gf, d, rng);
      GfMat g2 = random_split_orthogonal(gf, d, rng);
      X.assign(d, std::vector<std::uint64_t>(d, 0));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          std::uint64_t acc = 0;
          for (long k = 0; k < i; ++k)
            acc = gf.add(acc, gf.mul(g1[r][static_cast<std::size_t>(k)],
                                     g2[c][static_cast<std::size_t>(k)]));
          X[r][c] = acc;
        }
      GfMat corner(static_cast<std::size_t>(i),
                   std::vector<std::uint64_t>(static_cast<std::size_t>(i), 0));
      for (long r = 0; r < i; ++r)
        for (long c = 0; c < i; ++c)
          corner[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              X[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (gf_det(gf, corner) != 0) break;
      ++rep.rejects;
    }
    std::vector<std::uint64_t> point;
    point.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) point.push_back(X[r][c]);
    if (jacobian_rank_at(Rx, gens, point) == expected)
      ++rep.passes;
    else
      ++rep.failures;
  }
  rep.ok = rep.failures == 0 && rep.passes == trials;
  return rep;
}

bool exotic_i0_check(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  RingQ R = x_ring(0);
  PolyQ x = R.var("x11"), pi = R.var("pi");
  PolyQ lin = poly_sub(R, x, poly_scale(R, pi, mpq_class(sign)));
  Ideal<QQ> full, line;
  full.gens = naive_ideal_gens(R, 0);
  full.gens.push_back(lin);
  line.gens.push_back(lin);
  if (!ideal_equal(R, full, line)) return false;
  // the quotient collapses onto the coefficient line: x has a linear normal
  // form and the ideal is proper
  auto bord = MonomialOrder::block(1);
  auto gb = groebner(R, full.gens, bord);
  if (gb.polys.size() != 1) return false;
  PolyQ nf_x = normal_form(R, x, gb.polys, bord);
  if (!poly_sub(R, nf_x, poly_scale(R, pi, mpq_class(sign))).is_zero()) return false;
  return normal_form(R, R.one(), gb.polys, bord) == R.one();
}

long chart_fiber_dimension(std::size_t n, long i, std::uint64_t prime) {
  GF gf(prime);
  std::vector<std::string> names = x_names(i);
  long m = static_cast<long>(n) - 2 * i;
  for (long r = 1; r <= 2 * i; ++r)
    for (long c = 1; c <= m; ++c) names.push_back(nm("b", r, c));
  for (long c = 1; c <= m; ++c) names.push_back("c" + std::to_string(c));
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c)
      if (r + c < m + 1) names.push_back(nm("a", r, c));
  Ring<GF> R(gf, names);
  Ideal<GF> I;
  I.gens = naive_gens<GF>(R, i, R.zero());
  auto spin0 = spin_minor_gens<GF>(R, i, 1, R.zero());
  I.gens.insert(I.gens.end(), spin0.begin(), spin0.end());
  return static_cast<long>(krull_dim(R, I));
}

}  // namespace owb
