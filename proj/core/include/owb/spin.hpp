#pragma once

// Half-wedge bookkeeping for the two components of the similitude space.
// Subsets of [1, 2n+2] of size n+1 index wedge coordinates; the involution and
// the paired-basis relations below single out each component.  Coordinates
// over the split basis may carry negative powers of pi; those live in the ring
// QQ[pi, q] modulo pi*q = 1.

#include <cstddef>
#include <vector>

#include "owb/groebner.hpp"
#include "owb/lattice.hpp"

namespace owb {

using WedgeSubset = std::vector<int>;  // sorted, 1-based

enum class SpinType { none, I, II, III, IV, V, VI };

int sign_sigma(const WedgeSubset& s, std::size_t universe);
int sign_sigma_brute(const WedgeSubset& s, std::size_t universe);

WedgeSubset subset_star(const WedgeSubset& s, std::size_t universe);
WedgeSubset subset_perp(const WedgeSubset& s, std::size_t universe);
long subset_d(const WedgeSubset& s, std::size_t n, long i);
SpinType classify_subset(const WedgeSubset& s, std::size_t n, long i);

std::vector<WedgeSubset> all_subsets(std::size_t universe, std::size_t k);
std::vector<WedgeSubset> self_perp_subsets(std::size_t n);

// for a classified subset: the partner index set and the coefficient c with
// h_S = g_S + c * g_partner, equivalently the relation a_partner = c * a_S
struct PairedRelation {
  WedgeSubset source;
  WedgeSubset target;
  PolyQ coeff;
  SpinType type;
};

std::vector<PairedRelation> paired_relations(const RingQ& R, std::size_t n, long i,
                                             int sign);

// wedge coordinates indexed parallel to all_subsets(2n+2, n+1)
struct WedgeVec {
  std::vector<PolyQ> coeff;
};

std::size_t subset_index(const std::vector<WedgeSubset>& family, const WedgeSubset& s);

// a(e_S) = sign_sigma(S) e_{S perp}, extended linearly; split-basis coordinates
WedgeVec involution_a(const RingQ& R, const WedgeVec& w, std::size_t n);

std::vector<WedgeVec> h_basis(const RingQ& R, std::size_t n, long i, int sign);

// row permutation taking the minus block to the reordered dual-lattice basis
PolyMat<QQ> to_g_basis(const RingQ& R, const LatticePoint& p);

// all maximal minors, one per row subset in enumeration order
std::vector<PolyQ> wedge_minors(const RingQ& R, const PolyMat<QQ>& M);

// change of basis from the reordered dual basis to the split basis, inside
// QQ[pi, q]; column n+2 uses q for the inverse uniformizer
PolyMat<QQ> g_to_split(const RingQ& Rq, std::size_t n, long i);

bool spin_membership(const RingQ& R, const LatticePoint& p, int sign);

// polynomial ring QQ[x_jk, pi] for a (2i+1) square matrix of variables
RingQ x_ring(long i);
PolyMat<QQ> x_matrix(const RingQ& R, long i);

std::vector<PolyQ> spin_ideal_gens(const RingQ& R, long i, int sign);

}  // namespace owb
