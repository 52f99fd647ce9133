#pragma once

// Shadowed partitions P_2(n): pairs (S_1, S_2) of subsets of {0,...,n-1}
// with S_1, S_2, S_2+1 pairwise disjoint and covering {0,...,n-1}.
// Equivalently monomino/domino tilings of a strip of n cells: i in S_1 is a
// monomino, i in S_2 starts a domino occupying i and i+1.

#include <vector>

#include "dss/shadow.hpp"

namespace dss {

struct ShadowedPair {
  IndexSet s1, s2;
  long n = 0;
};

// All of P_2(n) in tiling order (at each position a monomino is tried
// before a domino, reading left to right).  |P_2(n)| follows the Fibonacci
// recurrence.  0 <= n <= 30.
std::vector<ShadowedPair> shadowed_partitions(long n);

// the defining predicate, usable as an independent check
bool is_valid_shadowed_pair(IndexSet s1, IndexSet s2, long n);

}  // namespace dss
