#pragma once

#include <map>
#include <string>
#include <vector>

#include "bps/groebner.hpp"
#include "bps/lenvec.hpp"
#include "bps/report.hpp"

namespace bps {

struct SweepOptions {
  int r = 3;
  std::vector<int> bs = {1};  // syzygy orders to compute, one per b
  int entry_bound = 0;        // 0: use r + 1
  int threads = 1;            // 0: hardware concurrency
  GBLimits limits;
  bool with_poincare = true;  // also fill Poincare/Betti/pairing fields
  std::string cache_path;     // optional syzord cache (JSON), "" = none
};

struct SweepResult {
  std::vector<ChamberReport> reports;  // chamber order of the enumeration
  bool stabilized = false;
  int violations = 0;  // reports with conjecture_ok == false (and no error)
  int errors = 0;      // reports that failed with an error

  std::string summary() const;  // "17/17 chambers satisfy syzord = mu-1"
};

// Enumerates the chambers for r and computes a ChamberReport per chamber on
// a worker pool. Per-chamber failures are captured in the report's error
// field without aborting the sweep.
SweepResult verify_conjecture_sweep(const SweepOptions& opt);

// Results cache: "chamber_id|b=N" -> syzygy order. Loading a missing file
// yields an empty cache.
std::map<std::string, int> load_syzord_cache(const std::string& path);
void save_syzord_cache(const std::string& path,
                       const std::map<std::string, int>& cache);
std::string syzord_cache_key(const std::string& chamber_id, int b);

// Report for a single length vector (the `analyze` command).
ChamberReport analyze_lengths(const LengthVector& l, int a, int b,
                              const GBLimits& lim = {});

}  // namespace bps
