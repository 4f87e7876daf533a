#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bps {

// Base class of all errors raised by the engine.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument (malformed length vector, out-of-range rank, bad subset...).
struct BadInput : Error {
  using Error::Error;
};

// The length vector has a subset J with l(J) = l(J^c); `witness` is the first
// such J in ascending bitmask order.
struct NonGeneric : Error {
  std::uint32_t witness;
  NonGeneric(std::uint32_t witness_mask, const std::string& msg)
      : Error(msg), witness(witness_mask) {}
};

// shuffle_sign called on subsets that are not disjoint.
struct OverlappingSets : Error {
  using Error::Error;
};

// An operation defined only for odd r was called with even r.
struct EvenR : Error {
  using Error::Error;
};

// A configured resource bound was hit; computations fail loudly, never
// silently truncate.
struct ResourceError : Error {
  using Error::Error;
};

struct DegreeCapExceeded : ResourceError {
  int degree;
  int cap;
  DegreeCapExceeded(int deg, int cap_, const std::string& msg)
      : ResourceError(msg), degree(deg), cap(cap_) {}
};

struct PairLimitExceeded : ResourceError {
  long limit;
  PairLimitExceeded(long limit_, const std::string& msg)
      : ResourceError(msg), limit(limit_) {}
};

}  // namespace bps
