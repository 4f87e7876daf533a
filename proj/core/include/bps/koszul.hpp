#pragma once

#include <vector>

#include "bps/presentation.hpp"
#include "bps/subset.hpp"

namespace bps {

// Koszul complex on (t_1^b, ..., t_r^b) over Q[t_1..t_r]. The basis of the
// k-th exterior power is the list of k-subsets in tuple-lex order.
struct KoszulData {
  int r;
  int b = 1;
  MonoOrder order = MonoOrder::DegRevLex;

  PolyRing ring() const { return PolyRing{r, order}; }
  std::vector<Mask> basis(int k) const { return subsets_of_size(r, k); }
};

// Columns of d_k : Lambda^k -> Lambda^{k-1},
// e_J |-> sum_{j in J} sign({j}, J\{j}) t_j^b e_{J\{j}}.
// Valid for 1 <= k <= r+1; k = r+1 gives no columns.
std::vector<Vec> koszul_differential(int k, const KoszulData& data);

// K_k = coker(d_{k+1}), the k-th Koszul syzygy module: C(r,k) generators in
// degree 0, relations in degree 2b. K_r is free of rank 1; K_{r+1} = 0.
GradedPresentation koszul_syzygy_presentation(int k, const KoszulData& data);

}  // namespace bps
