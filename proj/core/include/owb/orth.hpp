#pragma once

// Random elements of the split orthogonal group of the anti-diagonal form
// over a prime field, via the Cayley map on form-skew matrices.  Used to
// sample points of rank loci and of the degree-two fiber components.

#include <cstdint>
#include <vector>

#include "owb/arith.hpp"

namespace owb {

struct SplitMix {
  std::uint64_t s;
  explicit SplitMix(std::uint64_t seed) : s(seed + 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t mod(std::uint64_t p) { return next() % p; }
};

using GfMat = std::vector<std::vector<std::uint64_t>>;

inline GfMat gf_identity(std::size_t k) {
  GfMat m(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) m[j][j] = 1;
  return m;
}

inline GfMat gf_mul(const GF& gf, const GfMat& a, const GfMat& b) {
  std::size_t n = a.size(), p = b[0].size(), q = b.size();
  GfMat c(n, std::vector<std::uint64_t>(p, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < q; ++k) {
      if (!a[r][k]) continue;
      for (std::size_t s = 0; s < p; ++s)
        c[r][s] = gf.add(c[r][s], gf.mul(a[r][k], b[k][s]));
    }
  return c;
}

// Gauss-Jordan; empty result if singular
inline GfMat gf_inverse(const GF& gf, GfMat a) {
  std::size_t k = a.size();
  GfMat inv = gf_identity(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return {};
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    std::uint64_t f = gf.inv(a[c][c]);
    for (std::size_t s = 0; s < k; ++s) {
      a[c][s] = gf.mul(a[c][s], f);
      inv[c][s] = gf.mul(inv[c][s], f);
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      std::uint64_t g = a[r][c];
      for (std::size_t s = 0; s < k; ++s) {
        a[r][s] = gf.sub(a[r][s], gf.mul(g, a[c][s]));
        inv[r][s] = gf.sub(inv[r][s], gf.mul(g, inv[c][s]));
      }
    }
  }
  return inv;
}

// g with g^t H g = H and det g = 1, H the anti-identity of size k
inline GfMat random_split_orthogonal(const GF& gf, std::size_t k, SplitMix& rng) {
  while (true) {
    // S skew-symmetric, K = S H is H-skew, Cayley (I-K)^{-1}(I+K)
    GfMat s(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = r + 1; c < k; ++c) {
        s[r][c] = rng.mod(gf.p);
        s[c][r] = gf.sub(0, s[r][c]);
      }
    GfMat K(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) K[r][c] = s[r][k - 1 - c];
    GfMat num = gf_identity(k), den = gf_identity(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        num[r][c] = gf.add(num[r][c], K[r][c]);
        den[r][c] = gf.sub(den[r][c], K[r][c]);
      }
    GfMat deninv = gf_inverse(gf, den);
    if (deninv.empty()) continue;
    return gf_mul(gf, deninv, num);
  }
}

// anti-identity conjugation sanity: g^t H g == H
inline bool is_form_orthogonal(const GF& gf, const GfMat& g) {
  std::size_t k = g.size();
  GfMat h(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) h[j][k - 1 - j] = 1;
  GfMat gt(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) gt[r][c] = g[c][r];
  return gf_mul(gf, gt, gf_mul(gf, h, g)) == h;
}

// determinant by Gaussian elimination
inline std::uint64_t gf_det(const GF& gf, GfMat a) {
  std::size_t k = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = gf.sub(0, det);
    }
    det = gf.mul(det, a[c][c]);
    std::uint64_t f = gf.inv(a[c][c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t g = gf.mul(a[r][c], f);
      for (std::size_t s = c; s < k; ++s) a[r][s] = gf.sub(a[r][s], gf.mul(g, a[c][s]));
    }
  }
  return det;
}

}  // namespace owb
