#pragma once

#include <vector>

#include "bps/presentation.hpp"
#include "bps/resolution.hpp"

namespace bps {

// Auslander-Bridger transpose of the presented module.
inline GradedPresentation auslander_transpose(const GradedPresentation& p) {
  return transpose(p);
}

// Columns of the dualized matrix: input columns live in a free module with
// `rows` components; output column j (one per row) collects the j-th
// component of every input column.
std::vector<Vec> dual_columns(const PolyRing& ring,
                              const std::vector<Vec>& cols, int rows);

// Ext^i_R(coker p, R) == 0 for i >= 1, read off a minimal free resolution.
bool ext_vanishes(const GradedPresentation& p, int i, const GBLimits& lim = {});

// Same test, reusing an already computed minimal resolution of the module.
bool ext_vanishes_with_resolution(const FreeResolution& res, int i,
                                  const GBLimits& lim = {});

// Largest s <= n (n = number of ring variables) such that coker(p) is an
// s-th syzygy module: the transpose T has Ext^k(T, R) = 0 for 1 <= k <= s.
// Free modules give n.
int syzygy_order(const GradedPresentation& p, const GBLimits& lim = {});

}  // namespace bps
