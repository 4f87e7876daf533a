#pragma once

#include <string>
#include <vector>

#include "bps/groebner.hpp"

namespace bps {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  int threads = 0;  // for the chamber sweep; 0 = hardware concurrency
  GBLimits limits;
  std::string cache_path;  // optional syzygy-order cache for the r=5 sweep
};

// Runs the full acceptance suite (nine numbered criteria); exceptions inside
// a criterion are caught and reported as failures.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

inline bool all_passed(const std::vector<CriterionResult>& rs) {
  for (const CriterionResult& r : rs)
    if (!r.pass) return false;
  return !rs.empty();
}

}  // namespace bps
