#pragma once

// The distinguished affine chart: a (2i+1) square matrix of coordinates cut
// out by two quadratic matrix identities, a free-variable block, and the
// paired-minor relations.  Builders here are generic over the coefficient
// field so the same code runs exactly over QQ and modulo a prime.

#include <cstdint>
#include <string>
#include <vector>

#include "owb/groebner.hpp"
#include "owb/polymat.hpp"
#include "owb/spin.hpp"

namespace owb {

template <class F>
PolyMat<F> anti_identity(const Ring<F>& R, std::size_t k) {
  PolyMat<F> h(k, k);
  for (auto& f : h.a) f = R.zero();
  for (std::size_t j = 0; j < k; ++j) h.at(j, k - 1 - j) = R.one();
  return h;
}

// H M^t H with the anti-identity of each side's size
template <class F>
PolyMat<F> adjoint_of(const Ring<F>& R, const PolyMat<F>& m) {
  return mat_mul(R, anti_identity<F>(R, m.cols),
                 mat_mul(R, mat_transpose(m), anti_identity<F>(R, m.rows)));
}

template <class F>
PolyMat<F> x_matrix_gen(const Ring<F>& R, long i) {
  long m = 2 * i + 1;
  PolyMat<F> X(m, m);
  for (long r = 1; r <= m; ++r)
    for (long c = 1; c <= m; ++c)
      X.at(r - 1, c - 1) = R.var("x" + std::to_string(r) + std::to_string(c));
  return X;
}

// entries of X^tHX + pi0*H and XHX^t + pi0*H, duplicates removed
template <class F>
std::vector<Poly<F>> naive_gens(const Ring<F>& R, long i, const Poly<F>& pi0) {
  PolyMat<F> X = x_matrix_gen(R, i);
  PolyMat<F> H = anti_identity<F>(R, 2 * i + 1);
  PolyMat<F> scaled = mat_scale(R, H, pi0);
  PolyMat<F> lhs1 = mat_add(R, mat_mul(R, mat_transpose(X), mat_mul(R, H, X)), scaled);
  PolyMat<F> lhs2 = mat_add(R, mat_mul(R, X, mat_mul(R, H, mat_transpose(X))), scaled);
  std::vector<Poly<F>> out;
  auto push_unique = [&](const Poly<F>& f) {
    if (f.is_zero()) return;
    for (const auto& g : out)
      if (poly_sub(R, f, g).is_zero()) return;
    out.push_back(f);
  };
  for (const auto& f : lhs1.a) push_unique(f);
  for (const auto& f : lhs2.a) push_unique(f);
  return out;
}

// paired-minor generators with an arbitrary scalar in place of the
// uniformizer (pass the variable, or zero for the special fiber)
template <class F>
std::vector<Poly<F>> spin_minor_gens(const Ring<F>& R, long i, int sign,
                                     const Poly<F>& pi) {
  PolyMat<F> X = x_matrix_gen(R, i);
  std::size_t m = static_cast<std::size_t>(2 * i + 1);
  auto idx_sets = all_subsets(m, static_cast<std::size_t>(i));
  auto zero_based = [](const WedgeSubset& s) {
    std::vector<std::size_t> r(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) r[k] = static_cast<std::size_t>(s[k]) - 1;
    return r;
  };
  std::vector<Poly<F>> gens;
  for (const auto& u : idx_sets)
    for (const auto& v : idx_sets) {
      auto up = subset_perp(u, m), vp = subset_perp(v, m);
      Poly<F> big = minor_det(R, X, zero_based(up), zero_based(vp));
      Poly<F> small = minor_det(R, X, zero_based(u), zero_based(v));
      long e = i + (sign == 1 ? 0 : 1);
      long c = sign_sigma(u, m) * sign_sigma(v, m) * (e % 2 ? -1 : 1);
      Poly<F> rhs = poly_mul(R, pi, small);
      if (c < 0) rhs = poly_neg(R, rhs);
      gens.push_back(poly_sub(R, big, rhs));
    }
  return gens;
}

// special-fiber presentation: both quadratic identities at pi = 0 plus all
// (i+1)-minors of X
template <class F>
std::vector<Poly<F>> ri_gens(const Ring<F>& R, long i) {
  if (i < 1) throw std::domain_error("rank locus needs a positive level");
  std::vector<Poly<F>> out = naive_gens(R, i, R.zero());
  PolyMat<F> X = x_matrix_gen(R, i);
  std::size_t m = static_cast<std::size_t>(2 * i + 1);
  auto rows = all_subsets(m, static_cast<std::size_t>(i) + 1);
  for (const auto& rs : rows)
    for (const auto& cs : rows) {
      std::vector<std::size_t> r0(rs.size()), c0(cs.size());
      for (std::size_t k = 0; k < rs.size(); ++k) r0[k] = static_cast<std::size_t>(rs[k]) - 1;
      for (std::size_t k = 0; k < cs.size(); ++k) c0[k] = static_cast<std::size_t>(cs[k]) - 1;
      out.push_back(minor_det(R, X, r0, c0));
    }
  return out;
}

// full chart variable table: the matrix entries, the free blocks, and pi
struct ChartVars {
  RingQ ring;
  std::size_t n = 0;
  long i = 0;
  std::size_t free_count = 0;
};

ChartVars chart_vars(std::size_t n, long i);

// the dependent blocks, expressed in the chart variables
struct ChartBlocks {
  PolyMat<QQ> A1, C1, C3;  // matrix entries rearranged to the older layout
  PolyQ c;
  PolyMat<QQ> A2, C4;      // free
  PolyMat<QQ> A3, C2, A4;  // eliminated
};

ChartBlocks chart_blocks(const ChartVars& cv);

// the (2n+2) x (n+1) symbolic column matrix of the chart's plane
PolyMat<QQ> chart_plane_matrix(const ChartVars& cv);

std::vector<PolyQ> naive_ideal_gens(const RingQ& R, long i);

// relation differences computed from the symbolic plane's maximal minors
std::vector<PolyQ> spin_oracle_gens(const ChartVars& cv, int sign);

bool implied_relations_check(std::size_t n, long i);

// ideal equality of (naive + oracle) and (naive + paired-minor) generators
bool oracle_matches_spin(std::size_t n, long i, int sign, const Budget& budget);

bool special_fiber_equality(long i, int sign, std::uint64_t prime);

bool irreducibility_oracle(long i, std::uint64_t prime);

struct SmoothnessReport {
  long trials = 0, passes = 0, failures = 0, rejects = 0;
  bool ok = false;
};

SmoothnessReport generic_smoothness_probe(long i, long trials, std::uint64_t prime,
                                          std::uint64_t seed);

bool exotic_i0_check(int sign);

long chart_fiber_dimension(std::size_t n, long i, std::uint64_t prime);

}  // namespace owb
