#pragma once

#include <string>
#include <vector>

#include "bps/groebner.hpp"
#include "bps/poly.hpp"

namespace bps {

// Presentation of a graded module M = coker(d1 : F1 -> F0) over
// R = k[t_1..t_n]: generators with degree shifts plus homogeneous relation
// columns. Zero columns are never stored.
struct GradedPresentation {
  PolyRing ring;
  FreeModule target;            // F0: generator degrees
  std::vector<Vec> relations;   // columns of d1, each nonzero and homogeneous
  std::vector<int> rel_degrees; // degree of each column

  int num_generators() const { return target.rank(); }
  int num_relations() const { return static_cast<int>(relations.size()); }
  bool is_free_presentation() const { return relations.empty(); }
};

// Builds a presentation, dropping zero columns and checking homogeneity.
GradedPresentation make_presentation(const PolyRing& ring, FreeModule target,
                                     std::vector<Vec> columns);

// Free module as a presentation of itself.
GradedPresentation free_presentation(const PolyRing& ring, FreeModule target);

// Eliminates unit (degree-0) entries of the relation matrix by row/column
// operations: the result presents the same module with a minimal generating
// set and relation entries in the maximal ideal. Pivots are chosen
// deterministically (first column, then smallest row index).
GradedPresentation minimalize(const GradedPresentation& p);

// M[l]: adds l to all generator and relation degrees.
GradedPresentation shift(const GradedPresentation& p, int l);

// Block direct sum (same ring).
GradedPresentation direct_sum(const GradedPresentation& a,
                              const GradedPresentation& b);

// Auslander-Bridger transpose: coker of the dualized relation matrix, with
// negated degree shifts. Requires nothing of p beyond homogeneity; free
// summands of the result only shift Ext^{>=1} by nothing.
GradedPresentation transpose(const GradedPresentation& p);

// Matrix entry (row i, column j) as a polynomial (for serialization/tests).
Poly presentation_entry(const GradedPresentation& p, int i, int j);

// Matrix-vector product: v lives in the free module indexed by the columns,
// the result is sum over terms (m, k, c) of c * x^m * cols[k].
Vec apply_columns(const PolyRing& ring, const std::vector<Vec>& cols,
                  const Vec& v);

}  // namespace bps
