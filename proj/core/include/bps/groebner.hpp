#pragma once

#include <vector>

#include "bps/poly.hpp"

namespace bps {

// Resource bounds for Groebner computations; hitting one raises a
// ResourceError subclass rather than truncating silently. The degree cap
// bounds the degree of any basis element above the smallest generator shift.
struct GBLimits {
  int degree_cap = 64;
  long pair_limit = 1000000;
};

struct DivisionResult {
  Vec rem;                  // no term divisible by any leading term of G
  std::vector<Poly> quot;   // f = sum_i quot[i] * G[i] + rem
};

// Full division of f by the list G in the module order; deterministic
// (reducers are tried in list order).
DivisionResult divide(const PolyRing& R, const Vec& f,
                      const std::vector<Vec>& G);
Vec normal_form(const PolyRing& R, const Vec& f, const std::vector<Vec>& G);

// Reduced monic Groebner basis of the submodule of F generated by gens,
// sorted by decreasing leading term: the canonical form used for equality
// tests. Inputs must be homogeneous with respect to F's shifts.
std::vector<Vec> buchberger(const PolyRing& R, const std::vector<Vec>& gens,
                            const FreeModule& F, const GBLimits& lim = {});

// As above, but each basis element carries its expression in the input
// generators: g[k] = sum_i expr[k][i] * gens[i].
struct TrackedBasis {
  std::vector<Vec> g;
  std::vector<std::vector<Poly>> expr;
};
TrackedBasis buchberger_tracked(const PolyRing& R,
                                const std::vector<Vec>& gens,
                                const FreeModule& F, const GBLimits& lim = {});

// Schreyer syzygies of a Groebner basis G in F: generators of the kernel of
// R^{|G|} -> F, e_k -> G[k]. Throws BadInput if G is not a Groebner basis.
std::vector<Vec> syzygy_module(const PolyRing& R, const std::vector<Vec>& G,
                               const FreeModule& F, const GBLimits& lim = {});

// Generators of the kernel of R^{|gens|} -> F, e_i -> gens[i], for an
// arbitrary generator list (columns of a presentation matrix).
std::vector<Vec> kernel(const PolyRing& R, const std::vector<Vec>& gens,
                        const FreeModule& F, const GBLimits& lim = {});

// Indices of a minimal generating subset of elems (graded Nakayama): scan in
// weakly increasing degree, keep an element iff it is not in the submodule
// generated by those already kept.
std::vector<int> minimal_generator_indices(const PolyRing& R,
                                           const std::vector<Vec>& elems,
                                           const FreeModule& F,
                                           const GBLimits& lim = {});

}  // namespace bps
