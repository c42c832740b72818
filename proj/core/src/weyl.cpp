#include "owb/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace owb {

SignedPerm SignedPerm::identity(std::size_t two_m) {
  SignedPerm p;
  p.img.resize(two_m);
  for (std::size_t j = 0; j < two_m; ++j) p.img[j] = j + 1;
  return p;
}

bool SignedPerm::is_valid(const std::vector<std::size_t>& img) {
  const std::size_t two_m = img.size();
  if (two_m % 2 != 0) return false;
  std::vector<bool> seen(two_m + 1, false);
  for (auto v : img) {
    if (v < 1 || v > two_m || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t j = 1; j <= two_m; ++j)
    if (img[j - 1] + img[two_m - j] != two_m + 1) return false;
  return true;
}

SignedPerm SignedPerm::from_one_based(std::vector<std::size_t> img) {
  if (!is_valid(img)) throw std::invalid_argument("not a star-compatible permutation");
  SignedPerm p;
  p.img = std::move(img);
  return p;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm p;
  p.img.resize(img.size());
  for (std::size_t j = 0; j < img.size(); ++j) p.img[img[j] - 1] = j + 1;
  return p;
}

SignedPerm SignedPerm::compose(const SignedPerm& then) const {
  SignedPerm p;
  p.img.resize(img.size());
  for (std::size_t j = 0; j < img.size(); ++j) p.img[j] = img[then.img[j] - 1];
  return p;
}

SignedPerm SignedPerm::tau_pair(std::size_t two_m, std::size_t j, std::size_t jp) {
  auto p = identity(two_m);
  std::size_t js = two_m + 1 - j, jps = two_m + 1 - jp;
  std::swap(p.img[j - 1], p.img[jp - 1]);
  std::swap(p.img[js - 1], p.img[jps - 1]);
  return p;
}

SignedPerm SignedPerm::tau_star(std::size_t two_m, std::size_t j) {
  auto p = identity(two_m);
  std::size_t js = two_m + 1 - j;
  std::swap(p.img[j - 1], p.img[js - 1]);
  return p;
}

bool is_translation_stated(const IntVec& t) {
  if (t.size() % 2 != 1) return false;
  const std::size_t n = t.size() / 2;
  long c = t[2 * n];
  for (std::size_t j = 1; j <= n; ++j)
    if (t[j - 1] + t[2 * n - j] != 2 * c) return false;
  return true;
}

bool is_translation_similitude(const IntVec& t) {
  if (t.size() % 2 != 1) return false;
  const std::size_t n = t.size() / 2;
  long c = t[2 * n];
  for (std::size_t j = 1; j <= n; ++j)
    if (t[j - 1] + t[2 * n - j] != c) return false;
  return true;
}

AffineWeylElement AffineWeylElement::identity(std::size_t n) {
  return {IntVec(2 * n + 1, 0), SignedPerm::identity(2 * n)};
}

AffineWeylElement AffineWeylElement::compose(const AffineWeylElement& rhs) const {
  const std::size_t two_n = finite.size();
  AffineWeylElement out;
  out.finite = finite.compose(rhs.finite);
  out.translation.resize(two_n + 1);
  SignedPerm inv = finite.inverse();
  for (std::size_t j = 1; j <= two_n; ++j)
    out.translation[j - 1] = rhs.translation[inv.apply(j) - 1] + translation[j - 1];
  out.translation[two_n] = rhs.translation[two_n] + translation[two_n];
  return out;
}

IntVec act(const AffineWeylElement& w, const IntVec& v) {
  const std::size_t two_n = w.finite.size();
  if (v.size() != two_n + 1 || w.translation.size() != two_n + 1)
    throw std::invalid_argument("dimension mismatch");
  IntVec out(two_n + 1);
  SignedPerm inv = w.finite.inverse();
  for (std::size_t j = 1; j <= two_n; ++j)
    out[j - 1] = v[inv.apply(j) - 1] + w.translation[j - 1];
  out[two_n] = v[two_n] + w.translation[two_n];
  return out;
}

IntVec omega_vec(std::size_t n, long i, bool minus) {
  IntVec v(2 * n + 1, 0);
  if (!minus) {
    for (long j = 0; j < i; ++j) v[j] = -1;
    v[2 * n] = -1;
  } else {
    for (long j = 0; j < i; ++j) v[2 * n - 1 - j] = 1;
  }
  return v;
}

IntVec star_vec(const IntVec& v) {
  const std::size_t two_n = v.size() - 1;
  IntVec out(v.size());
  for (std::size_t j = 1; j <= two_n; ++j) out[j - 1] = v[two_n - j];
  out[two_n] = -v[two_n] - 1;
  return out;
}

bool is_face(const IntVec& v_i, const IntVec& v_mi, long i) {
  if (v_i.size() != v_mi.size() || v_i.size() % 2 != 1) return false;
  const std::size_t two_n = v_i.size() - 1;
  for (std::size_t k = 0; k < v_i.size(); ++k)
    if (!(v_mi[k] >= v_i[k] && v_i[k] >= v_mi[k] - 1)) return false;
  long si = std::accumulate(v_i.begin(), v_i.end(), 0L);
  long smi = std::accumulate(v_mi.begin(), v_mi.end(), 0L);
  if (si != smi - 2 * i - 1) return false;
  IntVec s = star_vec(v_i);
  long d = s[0] + v_mi[0];
  for (std::size_t j = 1; j < two_n; ++j)
    if (s[j] + v_mi[j] != d) return false;
  return s[two_n] + v_mi[two_n] == 0;
}

bool is_permissible_face(const IntVec& v_i, const IntVec& v_mi, std::size_t n, long i) {
  IntVec oi = omega_vec(n, i, false), omi = omega_vec(n, i, true);
  if (v_i.size() != oi.size() || v_mi.size() != oi.size()) return false;
  for (std::size_t k = 0; k < oi.size(); ++k) {
    if (!(oi[k] <= v_i[k] && v_i[k] <= oi[k] + 1)) return false;
    if (!(omi[k] <= v_mi[k] && v_mi[k] <= omi[k] + 1)) return false;
  }
  long si = std::accumulate(v_i.begin(), v_i.end(), 0L);
  if (si != static_cast<long>(n) - i) return false;
  // the level pairing ties v_{-i} to v_i with constant 1
  if (v_i[2 * n] != 0) return false;
  IntVec s = star_vec(v_i);
  for (std::size_t j = 0; j < 2 * n; ++j)
    if (s[j] + v_mi[j] != 1) return false;
  if (s[2 * n] + v_mi[2 * n] != 0) return false;
  // consequences provable from the accepted clauses
  if (v_mi[2 * n] != 1 || !is_face(v_i, v_mi, i))
    throw std::logic_error("accepted pair must be a face with unit similitude slot");
  return true;
}

Face face_from_subset(std::size_t n, long i, const std::vector<std::size_t>& E) {
  std::set<std::size_t> in(E.begin(), E.end());
  IntVec v = omega_vec(n, i, false);
  for (std::size_t j = 1; j <= 2 * n; ++j)
    if (!in.count(j)) v[j - 1] += 1;
  v[2 * n] += 1;
  IntVec s = star_vec(v);
  IntVec v_mi(2 * n + 1);
  for (std::size_t j = 0; j < 2 * n; ++j) v_mi[j] = 1 - s[j];
  v_mi[2 * n] = -s[2 * n];
  return {v, v_mi};
}

std::vector<Face> enumerate_window_faces(std::size_t n, long i) {
  std::vector<Face> out;
  IntVec oi = omega_vec(n, i, false), omi = omega_vec(n, i, true);
  const std::size_t len = 2 * n + 1;
  for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
    IntVec v = oi;
    for (std::size_t k = 0; k < len; ++k)
      if (mask & (1ull << k)) v[k] += 1;
    IntVec s = star_vec(v);
    for (long d = -2; d <= 3; ++d) {
      IntVec v_mi(len);
      for (std::size_t j = 0; j < 2 * n; ++j) v_mi[j] = d - s[j];
      v_mi[2 * n] = -s[2 * n];
      bool in_window = true;
      for (std::size_t k = 0; k < len && in_window; ++k)
        if (!(omi[k] <= v_mi[k] && v_mi[k] <= omi[k] + 1)) in_window = false;
      if (in_window && is_face(v, v_mi, i)) out.push_back({v, v_mi});
    }
  }
  return out;
}

std::vector<Face> enumerate_permissible_faces(std::size_t n, long i) {
  std::vector<Face> out;
  for (const auto& f : enumerate_window_faces(n, i))
    if (is_permissible_face(f.v_i, f.v_mi, n, i)) out.push_back(f);
  return out;
}

namespace {
// all signed permutations on [1,2n]: pair permutation + per-pair flip
template <class Fn>
void for_each_signed_perm(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> pairperm(n);
  std::iota(pairperm.begin(), pairperm.end(), 1);
  do {
    for (std::uint64_t flips = 0; flips < (1ull << n); ++flips) {
      std::vector<std::size_t> img(2 * n);
      for (std::size_t j = 1; j <= n; ++j) {
        std::size_t target = pairperm[j - 1];
        if (flips & (1ull << (j - 1))) target = 2 * n + 1 - target;
        img[j - 1] = target;
        img[2 * n - j] = 2 * n + 1 - target;
      }
      fn(SignedPerm::from_one_based(std::move(img)));
    }
  } while (std::next_permutation(pairperm.begin(), pairperm.end()));
}
}  // namespace

bool face_reachable(const Face& f, std::size_t n, long i, bool stated_lattice) {
  IntVec oi = omega_vec(n, i, false), omi = omega_vec(n, i, true);
  bool found = false;
  for_each_signed_perm(n, [&](SignedPerm w0) {
    if (found) return;
    AffineWeylElement w{IntVec(2 * n + 1, 0), w0};
    SignedPerm inv = w0.inverse();
    IntVec t(2 * n + 1);
    for (std::size_t j = 1; j <= 2 * n; ++j) t[j - 1] = f.v_i[j - 1] - oi[inv.apply(j) - 1];
    t[2 * n] = f.v_i[2 * n] - oi[2 * n];
    if (stated_lattice ? !is_translation_stated(t) : !is_translation_similitude(t)) return;
    w.translation = t;
    if (act(w, omi) == f.v_mi) found = true;
  });
  return found;
}

bool is_permissible_general(const AffineWeylElement& w, std::size_t n,
                            const std::vector<long>& I) {
  if (I.empty()) throw std::invalid_argument("level set must be non-empty");
  for (long i : I) {
    IntVec vi = act(w, omega_vec(n, i, false));
    IntVec vmi = act(w, omega_vec(n, i, true));
    if (!is_permissible_face(vi, vmi, n, i)) return false;
  }
  return true;
}

bool is_permissible_general(const std::vector<Face>& faces, std::size_t n,
                            const std::vector<long>& I) {
  if (I.empty() || faces.size() != I.size())
    throw std::invalid_argument("one face per level required");
  for (std::size_t k = 0; k < I.size(); ++k)
    if (!is_permissible_face(faces[k].v_i, faces[k].v_mi, n, I[k])) return false;
  return true;
}

}  // namespace owb
