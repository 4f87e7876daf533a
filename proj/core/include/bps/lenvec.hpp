#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bps/rational.hpp"
#include "bps/subset.hpp"

namespace bps {

// A weakly increasing nonnegative length vector l = (l_1 <= ... <= l_r).
// Entries are exact rationals; internally denominators are cleared so every
// subset sum is an Integer and the genericity test l(J) != l(J^c) is exact.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> entries);

  // Parses "1,2,2" or "1 2 2" (rationals like "3/2" allowed).
  static LengthVector parse(const std::string& text);

  int r() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  // Entries with denominators cleared (common multiple), same chamber.
  const std::vector<Integer>& scaled() const { return scaled_; }

  Rational subset_sum(Mask J) const;
  const Integer& subset_sum_scaled(Mask J) const { return sums_[J]; }

  bool is_generic() const { return !witness_.has_value(); }
  // First J (ascending mask order) with l(J) = l(J^c), if any.
  std::optional<Mask> genericity_witness() const { return witness_; }
  void require_generic() const;  // throws NonGeneric

  bool is_long(Mask J) const;   // l(J) > l(J^c); throws NonGeneric
  bool is_short(Mask J) const;  // complementary

  // sigma_l(J) = #{ j in J : J\{j} is short }.
  int sigma(Mask J) const;
  // mu(l) = min{ sigma_l(J) : J long, sigma_l(J) > 0 }.
  int mu() const;

  std::string str() const;  // "(1,2,2)"

 private:
  std::vector<Rational> entries_;
  std::vector<Integer> scaled_;
  std::vector<Integer> sums_;  // all 2^r subset sums of scaled_
  Integer total_;
  std::optional<Mask> witness_;
};

// The combinatorial type of a generic length vector: which subsets are short.
// Canonical encoding: the antichain of minimal long sets, as a sorted list of
// bitmasks (the long family is its up-closure, the short family the rest).
struct Chamber {
  int r = 0;
  std::vector<Mask> min_long;      // canonical id, ascending masks
  std::vector<Mask> short_family;  // all short subsets, ascending masks
  std::vector<Integer> representative;

  std::string id() const;  // "r3:3-5-6"
  std::string representative_str() const;
  bool operator==(const Chamber& o) const {
    return r == o.r && min_long == o.min_long;
  }
  bool operator<(const Chamber& o) const {
    return min_long < o.min_long;  // lexicographic on the canonical encoding
  }
};

Chamber chamber_of(const LengthVector& l);

struct ChamberEnumeration {
  std::vector<Chamber> chambers;  // sorted by canonical encoding
  int entry_bound = 0;
  // True iff raising the entry bound by 2 finds no new chamber.
  bool stabilized = false;
};

// Chambers of all generic weakly increasing integer vectors with entries in
// 0..max_entry, deduplicated by combinatorial type; representative = first
// vector seen in ascending lexicographic order.
ChamberEnumeration enumerate_chambers(int r, int max_entry);

}  // namespace bps
