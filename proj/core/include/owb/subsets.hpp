#pragma once

#include <cstdint>
#include <vector>

#include "owb/weyl.hpp"

namespace owb {

// Subsets E of [1,2n] with |E| = n, sorted ascending; the pair conditions:
// star pairs inside [1,i] u [i*,2n] never lie entirely in E, star pairs
// inside [i+1, i*-1] meet E.
using Subset = std::vector<std::size_t>;

bool is_perm_subset(const Subset& E, std::size_t n, long i);
std::vector<Subset> enumerate_perm_subsets(std::size_t n, long i);

// Closed-form count: sum over l of C(i,l) 2^l C(n-i, i-l) 2^{n-2i+l}.
std::uint64_t perm_subset_count_formula(std::size_t n, long i);

// a-pair count: star pairs in the outer index set meeting E exactly once.
long orbit_invariant(const Subset& E, std::size_t n, long i);

// E^l = [i+1-l, n+i-l]
Subset representative_subset(std::size_t n, long i, long l);

// Orbits under the level stabilizer generated by in-factor pair swaps and
// star swaps; BFS closure on the subset list.
std::vector<std::vector<Subset>> subset_orbits(std::size_t n, long i);
std::size_t orbit_count(std::size_t n, long i);

}  // namespace owb
