#pragma once

#include <cstddef>
#include <set>
#include <vector>

namespace owb {

// Index sets I of standard levels, non-empty subsets of [0,n].
using LevelSet = std::set<long>;

LevelSet reflect_levels(const LevelSet& I, std::size_t n);  // i -> n-i

// Deterministic class representative: the lexicographically smaller of
// {I, n-I} as sorted vectors.
LevelSet canonical_parahoric(const LevelSet& I, std::size_t n);

std::size_t maximal_class_count(std::size_t n);  // floor(n/2) + 1

// Cross-check: number of distinct canonical forms of the singletons {0}..{n}.
std::size_t maximal_class_count_by_canonicalization(std::size_t n);

}  // namespace owb
