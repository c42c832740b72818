#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace owb {

using IntVec = std::vector<long>;

// Signed permutation of [1,2m]: sigma(j) + sigma(2m+1-j) = 2m+1.
struct SignedPerm {
  std::vector<std::size_t> img;  // 0-based: img[j-1] = sigma(j)

  static SignedPerm identity(std::size_t two_m);
  static bool is_valid(const std::vector<std::size_t>& img);
  static SignedPerm from_one_based(std::vector<std::size_t> img);

  std::size_t size() const { return img.size(); }
  std::size_t apply(std::size_t j) const { return img[j - 1]; }  // 1-based
  SignedPerm inverse() const;
  SignedPerm compose(const SignedPerm& then) const;  // this∘then: j -> this(then(j))
  bool operator==(const SignedPerm& o) const { return img == o.img; }

  // star-pair transpositions generating the factors of the level stabilizer
  static SignedPerm tau_pair(std::size_t two_m, std::size_t j, std::size_t jp);  // (j jp)(j* jp*)
  static SignedPerm tau_star(std::size_t two_m, std::size_t j);                  // (j j*)
};

// Translation vectors in Z^{2n+1}.
// Stated shape: (b_1..b_n, 2c-b_n..2c-b_1, c).
// Similitude-compatible shape: t(j) + t(j*) = t(2n+1) for all j <= 2n,
// the form under which permissible elements exist (see the faces report).
bool is_translation_stated(const IntVec& t);
bool is_translation_similitude(const IntVec& t);

struct AffineWeylElement {
  IntVec translation;  // length 2n+1
  SignedPerm finite;   // on [1,2n]

  static AffineWeylElement identity(std::size_t n);
  // w * w' (apply w' first); translation lattices are closed under this.
  AffineWeylElement compose(const AffineWeylElement& rhs) const;
};

// wv(j) = v(w0^{-1}(j)) + t(j), slot 2n+1 fixed by the finite part.
IntVec act(const AffineWeylElement& w, const IntVec& v);

IntVec omega_vec(std::size_t n, long i, bool minus);  // omega_{i} or omega_{-i}

// v*(j) = v(j*) for j <= 2n, v*(2n+1) = -v(2n+1) - 1.
IntVec star_vec(const IntVec& v);

bool is_face(const IntVec& v_i, const IntVec& v_mi, long i);
bool is_permissible_face(const IntVec& v_i, const IntVec& v_mi, std::size_t n, long i);

// One face per naively-permissible subset: v_i = omega_i + mu with
// mu(j) = [j not in E], mu(2n+1) = 1, and v_{-i} forced by the star identity.
struct Face {
  IntVec v_i, v_mi;
};
Face face_from_subset(std::size_t n, long i, const std::vector<std::size_t>& E);

// All faces inside the permissibility window (P1), regardless of the sum
// condition; used by the reporting side of the faces command.
std::vector<Face> enumerate_window_faces(std::size_t n, long i);
std::vector<Face> enumerate_permissible_faces(std::size_t n, long i);

// Is the face reachable as (w omega_i, w omega_{-i})? Searched over finite
// parts of the level stabilizer shape times translations of the given shape
// (translation solved for directly; only the shape test differs).
bool face_reachable(const Face& f, std::size_t n, long i, bool stated_lattice);

bool is_permissible_general(const AffineWeylElement& w, std::size_t n,
                            const std::vector<long>& I);
bool is_permissible_general(const std::vector<Face>& faces, std::size_t n,
                            const std::vector<long>& I);

}  // namespace owb
