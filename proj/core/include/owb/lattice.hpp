#pragma once

// Periodic chain membership at desk scale.  A point is a pair of
// (2n+2) x (n+1) column matrices: `plus` in the alpha basis of the level-i
// lattice, `minus` in the beta basis of the level-(-i) lattice.  Entries live
// in QQ[pi] with pi0 identified with -pi^2 throughout; the residue field is
// reached by setting pi = 0.

#include <cstddef>

#include "owb/polymat.hpp"

namespace owb {

struct LatticePoint {
  std::size_t n = 0;
  long i = 0;
  PolyMat<QQ> plus;
  PolyMat<QQ> minus;
};

// which coefficient semantics check_naive applies: the pi-adic local ring
// (units have nonzero constant term) or its residue field (pi must be absent
// and the transition maps degenerate)
enum class CoeffRing { local, residue };

struct TransitionMaps {
  PolyMat<QQ> lambda1;  // level -i to level i
  PolyMat<QQ> lambda2;  // level i to level -i
  std::vector<int> iota_keeps;  // 0/1 per alpha slot, the inclusion mod pi0
};

RingQ lattice_ring();

// pairing between the beta and alpha bases; pure 0/1
PolyMat<QQ> pairing_matrix(const RingQ& R, std::size_t n);

// asserts lambda2 * lambda1 = pi0 * identity on construction
TransitionMaps transition_maps(const RingQ& R, std::size_t n, long i, CoeffRing mode);

bool is_unit_local(const PolyQ& f);

// first row subset whose maximal minor is a unit, or empty if none
std::vector<std::size_t> unit_minor_rows(const RingQ& R, const PolyMat<QQ>& M);

// every column of T lies in the column span of M over the local ring,
// certified through the adjugate of a unit-minor row block
bool columns_contained(const RingQ& R, const PolyMat<QQ>& M, const PolyMat<QQ>& T);

bool check_naive(const RingQ& R, const LatticePoint& p, CoeffRing mode);

LatticePoint representative_point(const RingQ& R, std::size_t n, long i, long ell);
LatticePoint lift_point(const RingQ& R, std::size_t n, long i, long ell);

// set pi = 0 in every entry
LatticePoint reduce_at_pi_zero(const RingQ& R, const LatticePoint& p);

// rank of the reduced inclusion applied to the plus block; p must be pi-free
long stratum_rank(const RingQ& R, const LatticePoint& p);

// canonical reduced column echelon form of a pi-free matrix, for span equality
PolyMat<QQ> column_echelon(const RingQ& R, const PolyMat<QQ>& M);

long mat_rank_q(const RingQ& R, const PolyMat<QQ>& M);

}  // namespace owb
