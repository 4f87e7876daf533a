#pragma once

#include <map>
#include <string>
#include <vector>

#include "bps/laurent.hpp"
#include "bps/presentation.hpp"

namespace bps {

// Graded Betti table: ranks[i] maps internal degree -> rank of F_i.
struct BettiTable {
  std::vector<std::map<int, int>> ranks;

  int length() const { return static_cast<int>(ranks.size()) - 1; }
  int total_rank(int i) const {
    int s = 0;
    for (auto& [d, k] : ranks[i]) s += k;
    return s;
  }
  bool operator==(const BettiTable& o) const { return ranks == o.ranks; }
  std::string csv() const;  // "homological_degree,internal_degree,rank"
};

// Chain F_0 <- F_1 <- ... <- F_L of graded free modules; mats[k] holds the
// columns of d_{k+1} : F_{k+1} -> F_k.
struct FreeResolution {
  PolyRing ring;
  std::vector<FreeModule> modules;
  std::vector<std::vector<Vec>> mats;
  bool minimal = false;
  // True when the chain ends because the last kernel was zero; false when the
  // max_len cutoff truncated it.
  bool complete = false;

  int length() const { return static_cast<int>(mats.size()); }
  BettiTable betti() const;
};

// Minimal graded free resolution of coker(p), computed by minimalizing the
// presentation and then repeatedly taking minimal generators of kernels.
// max_len is a hard stop (Hilbert's syzygy theorem guarantees length <= n,
// so max_len >= n never triggers it).
FreeResolution minimal_free_resolution(const GradedPresentation& p,
                                       int max_len, const GBLimits& lim = {});

// Hilbert series of coker(p) as numerator / (1-x^2)^n, via the alternating
// sum over a finite free resolution.
HilbertSeries hilbert_series(const GradedPresentation& p,
                             const GBLimits& lim = {});

// d_i o d_{i+1} = 0 for all i (symbolic check).
bool resolution_composition_is_zero(const FreeResolution& res);

// No matrix entry is a nonzero constant.
bool resolution_is_minimal(const FreeResolution& res);

}  // namespace bps
