#pragma once

#include <map>
#include <string>
#include <vector>

#include "bps/lenvec.hpp"
#include "bps/presentation.hpp"
#include "bps/resolution.hpp"

namespace bps {

// Everything computed for one chamber; serialized as JSON. All fields take
// part in the round-trip guarantee parse(emit(x)) == x.
struct ChamberReport {
  std::string chamber_id;
  std::string representative;  // "(1,1,1)"
  int r = 0;
  int mu = 0;
  std::map<int, int> syzord_by_b;  // b -> syzygy order
  bool conjecture_ok = false;      // every computed syzord equals mu - 1
  std::string poincare_x;          // Poincare polynomial at a = b = 1
  long long betti_sum_e = 0;
  bool pairing_perfect = false;
  long long millis = 0;
  std::string error;  // nonempty when the computation failed

  bool operator==(const ChamberReport& o) const = default;
};

std::string emit_report_json(const ChamberReport& rep);
ChamberReport parse_report_json(const std::string& text);
std::string emit_reports_json(const std::vector<ChamberReport>& reps);
std::vector<ChamberReport> parse_reports_json(const std::string& text);

// Chamber database. CSV columns: r, chamber_id, representative, num_short,
// mu. The JSON mirror carries the full short-set family.
std::string chamber_db_csv(const ChamberEnumeration& e, int r);
std::string chamber_db_json(const ChamberEnumeration& e, int r);

// Row-major matrix serialization of a presentation (entries as polynomial
// strings), and a resolution dump built out of it.
std::string matrix_json(const GradedPresentation& p);
std::string resolution_json(const FreeResolution& res);

// Summary of one Koszul syzygy module K_k.
struct KoszulReport {
  int r = 0, b = 0, k = 0;
  BettiTable betti;
  std::string hilbert;
  int syzord = 0;

  std::string text() const;
};

std::string emit_koszul_json(const KoszulReport& rep);

}  // namespace bps
