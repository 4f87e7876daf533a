#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bps/koszul.hpp"
#include "bps/laurent.hpp"
#include "bps/lenvec.hpp"
#include "bps/presentation.hpp"
#include "bps/subset.hpp"

namespace bps {

// Parameters of the space X_{a,b}(l): sphere dimensions d = 2a+2b-1 and
// dbar = 2a-1.
struct SpaceParams {
  int a = 1;
  int b = 1;
  LengthVector l;

  SpaceParams(int a_, int b_, LengthVector l_);
  int r() const { return l.r(); }
  int d() const { return 2 * a + 2 * b - 1; }
  int dbar() const { return 2 * a - 1; }
};

// dim X = (2a+2b-1) r - 2a.
int dimension(const SpaceParams& p);

// Poincare polynomial of X: sum over short J of x^{|J| d} plus sum over
// long J of x^{|J| d - dbar - 1}. Throws NonGeneric.
Laurent poincare_polynomial_X(const SpaceParams& p);

// Poincare polynomial of the equilateral polygon space E_{2a}(1,...,1) with
// r = 2m+1 sides:
//   sum_{j<m} C(r,j) (x^{j dbar} + x^{(2m-j) dbar - 1})
//   + C(2m, m-1) (x^{m dbar} + x^{m dbar - 1}).
// Throws EvenR when r is even.
Laurent poincare_polynomial_E_equilateral(int a, int r);

// Total Betti number of the polygon space: 4 * #{short J containing r}.
// The parameter a does not change the count. Throws NonGeneric.
Integer betti_sum_E(const LengthVector& l, int a);

// Basis classes of H^*(X): alpha_J (J short, degree |J| d) and beta_J
// (J long, degree |J| d - dbar - 1), with a rational coefficient.
struct CohomologyClass {
  enum class Kind { Alpha, Beta };
  Kind kind;
  Mask J = 0;
  Rational coeff = 1;

  int degree(const SpaceParams& p) const;
  std::string str() const;
  bool operator==(const CohomologyClass& o) const {
    return kind == o.kind && J == o.J && coeff == o.coeff;
  }
};

// All 2^r basis classes: alphas over short sets in graded subset order, then
// betas over long sets in graded subset order. Throws NonGeneric.
std::vector<CohomologyClass> basis_classes(const SpaceParams& p);

// Cup product; nullopt encodes zero. Rules:
//   alpha_J alpha_K = sign(J,K) alpha_{J u K} if disjoint and the union is
//                     short, else zero;
//   alpha_J beta_K  = sign(J,K) beta_{J u K} if disjoint, else zero;
//   beta_J beta_K   = 0.
std::optional<CohomologyClass> cup_product(const CohomologyClass& x,
                                           const CohomologyClass& y,
                                           const SpaceParams& p);

// Matrix of the top-degree pairing over basis_classes(p): entry (i, j) is
// the coefficient of beta_{[r]} in basis_i cup basis_j.
std::vector<std::vector<int>> pairing_matrix(const SpaceParams& p);

// Exactly one +-1 in every row and every column, zeros elsewhere.
bool is_signed_permutation(const std::vector<std::vector<int>>& mat);

// Matrix of iota^T_* on equivariant homology. Source generators [V_J] then
// [W_J] over short J (degrees -|J|d and -(|J|d + dbar)); target generators
// [V_K] over all K in graded subset order (degree -|K|d). Columns:
//   [V_J] |-> [V_J],
//   [W_J] |-> sum_{j not in J} sign(J,{j}) t_j^b [V_{J u {j}}].
struct IotaMatrix {
  PolyRing ring;
  FreeModule source;
  FreeModule target;
  std::vector<Vec> cols;
  std::vector<Mask> short_sets;  // labels of the V (and W) source columns
  std::vector<Mask> all_sets;    // labels of the target rows

  int num_short() const { return static_cast<int>(short_sets.size()); }
};

IotaMatrix iota_matrix(const LengthVector& l, int b, int a = 1);

// Presentation of coker(iota^T_*): one generator [V_J] per long J (degree
// -|J|d), one relation per short J with at least one long superset J u {j}:
//   sum_{j not in J, J u {j} long} sign(J,{j}) t_j^b [V_{J u {j}}] = 0,
// in degree -(|J|d + dbar). Every nonzero entry has polynomial degree 2b.
GradedPresentation coker_presentation(const LengthVector& l, int b, int a = 1);

// Syzygy order of the equivariant cohomology of X_{a,b}(l), computed as
// syzygy_order(coker_presentation(l, b)). Independent of a.
int ht_syzygy_order(const LengthVector& l, int b, const GBLimits& lim = {});

// One summand of the equilateral splitting: copies * R[shift] when free,
// else copies * K_k[shift].
struct Summand {
  bool free_module;
  int k = 0;
  int copies = 1;
  int shift = 0;

  std::string str() const;
  bool operator==(const Summand& o) const {
    return free_module == o.free_module && k == o.k && copies == o.copies &&
           shift == o.shift;
  }
};

// Splitting of H_T^*(X_{a,b}(1,...,1)), r = 2m+1:
//   sum_{j<m} C(r,j) R[jd]  +  K_m[md]  +  K_{m+2}[(m+1)d + 2b - dbar - 1]
//   + sum_{j>m+1} C(r,j) R[jd - dbar - 1].
struct EquilateralDecomposition {
  int r = 0, m = 0, a = 1, b = 1;
  std::vector<Summand> summands;
};

EquilateralDecomposition equilateral_decomposition(int m, int a, int b);

// Hilbert series of the decomposition (sum of shifted summand series).
HilbertSeries decomposition_series(const EquilateralDecomposition& dec,
                                   const GBLimits& lim = {});

// Direct sum of the shifted summand presentations.
GradedPresentation decomposition_presentation(
    const EquilateralDecomposition& dec);

// Hilbert series of H_T^*(X) via the exact sequence
//   0 -> coker(iota)[rd] -> H_T^*(X) -> ker(iota)[rd-1] -> 0:
// x^{rd} HS(coker) + x^{rd-1} HS(ker), the kernel computed by the syzygy
// engine on iota_matrix.
HilbertSeries equivariant_hilbert_series(const SpaceParams& p,
                                         const GBLimits& lim = {});

}  // namespace bps
