#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bps/errors.hpp"

namespace bps {

// Subsets J of the ground set [r] = {1,...,r} as bitmasks: bit i-1 <-> element i.
using Mask = std::uint32_t;

// Bitmask width bounds the rank everywhere (2^r scans stay desk-scale).
inline constexpr int kMaxRank = 16;

inline int card(Mask J) { return std::popcount(J); }

inline Mask full_mask(int r) { return (Mask{1} << r) - 1; }

inline Mask complement(Mask J, int r) { return full_mask(r) & ~J; }

inline bool contains(Mask J, int j) { return (J >> (j - 1)) & 1u; }

// Elements of J in ascending order, 1-based.
inline std::vector<int> elements(Mask J) {
  std::vector<int> out;
  for (int j = 1; J != 0; ++j, J >>= 1)
    if (J & 1u) out.push_back(j);
  return out;
}

inline std::string set_to_string(Mask J) {
  std::string s = "{";
  bool first = true;
  for (int j : elements(J)) {
    if (!first) s += ",";
    s += std::to_string(j);
    first = false;
  }
  return s + "}";
}

// Shuffle sign eps(J,K) = (-1)^{#{(j,k) in J x K : j > k}} for disjoint J, K.
inline int shuffle_sign(Mask J, Mask K) {
  if ((J & K) != 0)
    throw OverlappingSets("shuffle_sign requires disjoint sets, got " +
                          set_to_string(J) + " and " + set_to_string(K));
  int inversions = 0;
  for (Mask rest = J; rest != 0; rest &= rest - 1) {
    Mask low = (rest & (~rest + 1)) - 1;  // bits strictly below lowest bit of rest
    inversions += std::popcount(K & low);
  }
  return (inversions & 1) ? -1 : +1;
}

// All k-subsets of [r], ordered lexicographically on ascending element tuples:
// {1,2} < {1,3} < ... < {1,r} < {2,3} < ...
inline std::vector<Mask> subsets_of_size(int r, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > r) return out;
  if (k == 0) return {Mask{0}};
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    Mask m = 0;
    for (int e : idx) m |= Mask{1} << (e - 1);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == r - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// All subsets of [r] in graded order: by cardinality, then tuple-lex.
inline std::vector<Mask> all_subsets_graded(int r) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << r);
  for (int k = 0; k <= r; ++k)
    for (Mask J : subsets_of_size(r, k)) out.push_back(J);
  return out;
}

}  // namespace bps
