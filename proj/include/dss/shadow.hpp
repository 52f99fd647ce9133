#pragma once

// Finite subsets S of {0, 1, ..., 63} with the combinatorial data attached
// to them throughout the series formulas: the shadow M(S) = {i in S : i-1
// not in S}, the weight w(S) = sum_{i in S} q^i, and the monomial
// m(S) = prod_{i in M(S)} T^(q^i - 1).

#include <cstdint>
#include <string>
#include <vector>

#include "dss/fqpoly.hpp"

namespace dss {

struct IndexSet {
  std::uint64_t bits = 0;

  static IndexSet range(long n) {  // {0, ..., n-1}
    if (n < 0 || n > 63) throw std::invalid_argument("IndexSet::range: n out of range");
    return {n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
  }
  static IndexSet of(std::initializer_list<long> xs) {
    IndexSet s;
    for (long x : xs) s = s.with(x);
    return s;
  }

  bool contains(long i) const { return i >= 0 && i < 64 && ((bits >> i) & 1); }
  IndexSet with(long i) const {
    if (i < 0 || i > 63) throw std::invalid_argument("IndexSet: element out of range");
    return {bits | (std::uint64_t{1} << i)};
  }
  IndexSet unite(IndexSet o) const { return {bits | o.bits}; }
  IndexSet shifted_up() const { return {bits << 1}; }  // S + 1
  bool disjoint(IndexSet o) const { return (bits & o.bits) == 0; }
  long size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  std::vector<long> elements() const;
  long max_element() const;  // -1 when empty

  friend bool operator==(IndexSet, IndexSet) = default;
  friend bool operator<(IndexSet a, IndexSet b) { return a.bits < b.bits; }

  std::string to_string() const;  // "{0,1,3}", "{}"
};

// M(S): elements of S whose predecessor is outside S
IndexSet shadow_m(IndexSet s);

// w(S) = sum_{i in S} q^i, with an overflow guard
std::uint64_t set_weight(const Fq& F, IndexSet s);

struct ShadowStats {
  IndexSet m_set;
  std::uint64_t weight;
  FqPoly monomial;  // m(S) = T^(w(M(S)) - |M(S)|)
};
ShadowStats shadow_stats(const Fq& F, IndexSet s);

}  // namespace dss
