#include "bps/bigpoly.hpp"

#include <map>
#include <sstream>

#include "bps/errors.hpp"
#include "bps/resolution.hpp"
#include "bps/syzord.hpp"

namespace bps {

SpaceParams::SpaceParams(int a_, int b_, LengthVector l_)
    : a(a_), b(b_), l(std::move(l_)) {
  if (a < 1 || b < 1) throw BadInput("SpaceParams: a and b must be >= 1");
}

int dimension(const SpaceParams& p) { return p.d() * p.r() - 2 * p.a; }

Laurent poincare_polynomial_X(const SpaceParams& p) {
  p.l.require_generic();
  Laurent out;
  const int r = p.r();
  for (Mask J = 0; J < (Mask{1} << r); ++J) {
    if (p.l.is_long(J))
      out.add_term(card(J) * p.d() - p.dbar() - 1, 1);
    else
      out.add_term(card(J) * p.d(), 1);
  }
  return out;
}

Laurent poincare_polynomial_E_equilateral(int a, int r) {
  if (a < 1) throw BadInput("poincare_polynomial_E_equilateral: a must be >= 1");
  if (r < 1 || r % 2 == 0)
    throw EvenR("poincare_polynomial_E_equilateral needs odd r, got " +
                std::to_string(r));
  const int m = (r - 1) / 2;
  const int dbar = 2 * a - 1;
  Laurent out;
  for (int j = 0; j < m; ++j) {
    const Integer c = binomial(r, j);
    out.add_term(j * dbar, c);
    out.add_term((2 * m - j) * dbar - 1, c);
  }
  const Integer c = binomial(2 * m, m - 1);
  out.add_term(m * dbar, c);
  out.add_term(m * dbar - 1, c);
  return out;
}

Integer betti_sum_E(const LengthVector& l, int a) {
  if (a < 1) throw BadInput("betti_sum_E: a must be >= 1");
  l.require_generic();
  const int r = l.r();
  Integer count = 0;
  for (Mask J = 0; J < (Mask{1} << r); ++J)
    if (contains(J, r) && l.is_short(J)) ++count;
  return 4 * count;
}

int CohomologyClass::degree(const SpaceParams& p) const {
  return kind == Kind::Alpha ? card(J) * p.d()
                             : card(J) * p.d() - p.dbar() - 1;
}

std::string CohomologyClass::str() const {
  std::string s;
  if (coeff == -1)
    s += "-";
  else if (coeff != 1)
    s += to_string(coeff) + "*";
  s += kind == Kind::Alpha ? "alpha" : "beta";
  return s + set_to_string(J);
}

namespace {

void check_class(const CohomologyClass& c, const SpaceParams& p) {
  if (c.kind == CohomologyClass::Kind::Alpha) {
    if (!p.l.is_short(c.J))
      throw BadInput("alpha class requires a short set, got " +
                     set_to_string(c.J));
  } else if (!p.l.is_long(c.J)) {
    throw BadInput("beta class requires a long set, got " +
                   set_to_string(c.J));
  }
}

}  // namespace

std::vector<CohomologyClass> basis_classes(const SpaceParams& p) {
  p.l.require_generic();
  std::vector<CohomologyClass> out;
  for (Mask J : all_subsets_graded(p.r()))
    if (p.l.is_short(J))
      out.push_back({CohomologyClass::Kind::Alpha, J, 1});
  for (Mask J : all_subsets_graded(p.r()))
    if (p.l.is_long(J)) out.push_back({CohomologyClass::Kind::Beta, J, 1});
  return out;
}

std::optional<CohomologyClass> cup_product(const CohomologyClass& x,
                                           const CohomologyClass& y,
                                           const SpaceParams& p) {
  p.l.require_generic();
  check_class(x, p);
  check_class(y, p);
  if (x.coeff == 0 || y.coeff == 0) return std::nullopt;
  using Kind = CohomologyClass::Kind;
  if (x.kind == Kind::Beta && y.kind == Kind::Beta) return std::nullopt;
  if ((x.J & y.J) != 0) return std::nullopt;
  const Rational c = x.coeff * y.coeff * shuffle_sign(x.J, y.J);
  const Mask u = x.J | y.J;
  if (x.kind == Kind::Alpha && y.kind == Kind::Alpha) {
    if (!p.l.is_short(u)) return std::nullopt;
    return CohomologyClass{Kind::Alpha, u, c};
  }
  return CohomologyClass{Kind::Beta, u, c};
}

std::vector<std::vector<int>> pairing_matrix(const SpaceParams& p) {
  const std::vector<CohomologyClass> basis = basis_classes(p);
  const Mask top = full_mask(p.r());
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto z = cup_product(basis[i], basis[j], p);
      if (z && z->kind == CohomologyClass::Kind::Beta && z->J == top)
        mat[i][j] = z->coeff > 0 ? 1 : -1;
    }
  return mat;
}

bool is_signed_permutation(const std::vector<std::vector<int>>& mat) {
  const std::size_t n = mat.size();
  std::vector<int> col_hits(n, 0);
  for (const auto& row : mat) {
    if (row.size() != n) return false;
    int row_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      if (row[j] != 1 && row[j] != -1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

IotaMatrix iota_matrix(const LengthVector& l, int b, int a) {
  if (a < 1 || b < 1) throw BadInput("iota_matrix: a, b must be >= 1");
  l.require_generic();
  const int r = l.r();
  const int d = 2 * a + 2 * b - 1;
  const int dbar = 2 * a - 1;

  IotaMatrix mx;
  mx.ring = PolyRing{r, MonoOrder::DegRevLex};
  mx.all_sets = all_subsets_graded(r);
  std::map<Mask, int> row;
  for (std::size_t i = 0; i < mx.all_sets.size(); ++i) {
    row[mx.all_sets[i]] = static_cast<int>(i);
    mx.target.shifts.push_back(-card(mx.all_sets[i]) * d);
  }
  for (Mask J : mx.all_sets)
    if (l.is_short(J)) mx.short_sets.push_back(J);

  for (Mask J : mx.short_sets) {  // [V_J] |-> [V_J]
    mx.source.shifts.push_back(-card(J) * d);
    mx.cols.push_back(Vec::unit(row.at(J)));
  }
  for (Mask J : mx.short_sets) {  // [W_J] |-> sum of t_j^b [V_{J u j}]
    mx.source.shifts.push_back(-(card(J) * d + dbar));
    std::vector<MTerm> terms;
    for (int j = 1; j <= r; ++j) {
      if (contains(J, j)) continue;
      const Mask jj = Mask{1} << (j - 1);
      terms.push_back({Monomial::var(j - 1, b), row.at(J | jj),
                       Rational(shuffle_sign(J, jj))});
    }
    mx.cols.push_back(vec_normalize(mx.ring, std::move(terms)));
  }
  return mx;
}

GradedPresentation coker_presentation(const LengthVector& l, int b, int a) {
  if (a < 1 || b < 1)
    throw BadInput("coker_presentation: a, b must be >= 1");
  l.require_generic();
  const int r = l.r();
  const int d = 2 * a + 2 * b - 1;
  const int dbar = 2 * a - 1;

  const PolyRing ring{r, MonoOrder::DegRevLex};
  FreeModule target;
  std::map<Mask, int> row;
  for (Mask J : all_subsets_graded(r)) {
    if (!l.is_long(J)) continue;
    row[J] = target.rank();
    target.shifts.push_back(-card(J) * d);
  }
  std::vector<Vec> cols;
  for (Mask J : all_subsets_graded(r)) {
    if (!l.is_short(J)) continue;
    std::vector<MTerm> terms;
    for (int j = 1; j <= r; ++j) {
      if (contains(J, j)) continue;
      const Mask jj = Mask{1} << (j - 1);
      if (!l.is_long(J | jj)) continue;
      terms.push_back({Monomial::var(j - 1, b), row.at(J | jj),
                       Rational(shuffle_sign(J, jj))});
    }
    cols.push_back(vec_normalize(ring, std::move(terms)));
  }
  return make_presentation(ring, target, cols);
}

int ht_syzygy_order(const LengthVector& l, int b, const GBLimits& lim) {
  return syzygy_order(coker_presentation(l, b), lim);
}

std::string Summand::str() const {
  std::ostringstream os;
  if (copies != 1) os << copies << "*";
  if (free_module)
    os << "R";
  else
    os << "K_" << k;
  os << "[" << shift << "]";
  return os.str();
}

EquilateralDecomposition equilateral_decomposition(int m, int a, int b) {
  if (m < 0) throw BadInput("equilateral_decomposition: m must be >= 0");
  if (a < 1 || b < 1)
    throw BadInput("equilateral_decomposition: a, b must be >= 1");
  const int r = 2 * m + 1;
  if (r > kMaxRank) throw BadInput("equilateral_decomposition: r too large");
  const int d = 2 * a + 2 * b - 1;
  const int dbar = 2 * a - 1;

  EquilateralDecomposition dec;
  dec.r = r;
  dec.m = m;
  dec.a = a;
  dec.b = b;
  for (int j = 0; j < m; ++j)
    dec.summands.push_back(
        {true, 0, binomial(r, j).convert_to<int>(), j * d});
  dec.summands.push_back({false, m, 1, m * d});
  // K_{m+2} summand; its shift is the unique value making the relation
  // degrees (2b above the generators) fit the ambient grading.
  dec.summands.push_back({false, m + 2, 1, (m + 1) * d + 2 * b - dbar - 1});
  for (int j = m + 2; j <= r; ++j)
    dec.summands.push_back(
        {true, 0, binomial(r, j).convert_to<int>(), j * d - dbar - 1});
  return dec;
}

HilbertSeries decomposition_series(const EquilateralDecomposition& dec,
                                   const GBLimits& lim) {
  HilbertSeries total{Laurent{}, dec.r};
  const KoszulData kd{dec.r, dec.b};
  for (const Summand& s : dec.summands) {
    Laurent num = s.free_module
                      ? Laurent::one()
                      : hilbert_series(koszul_syzygy_presentation(s.k, kd),
                                       lim)
                            .num;
    total.num += (num * Laurent::monomial(0, s.copies)).shifted(s.shift);
  }
  return total;
}

GradedPresentation decomposition_presentation(
    const EquilateralDecomposition& dec) {
  const KoszulData kd{dec.r, dec.b};
  const PolyRing ring = kd.ring();
  GradedPresentation total = free_presentation(ring, FreeModule::trivial(0));
  for (const Summand& s : dec.summands) {
    GradedPresentation piece =
        s.free_module ? free_presentation(ring, FreeModule::trivial(1))
                      : koszul_syzygy_presentation(s.k, kd);
    piece = shift(piece, s.shift);
    for (int c = 0; c < s.copies; ++c) total = direct_sum(total, piece);
  }
  return total;
}

HilbertSeries equivariant_hilbert_series(const SpaceParams& p,
                                         const GBLimits& lim) {
  const int rd = p.r() * p.d();
  const IotaMatrix io = iota_matrix(p.l, p.b, p.a);
  const HilbertSeries cok =
      hilbert_series(coker_presentation(p.l, p.b, p.a), lim);

  // HS(ker) = HS(source) - HS(image); the image is source/ker, presented by
  // the kernel generators as relations.
  const std::vector<Vec> ker_gens = kernel(io.ring, io.cols, io.target, lim);
  const HilbertSeries im =
      hilbert_series(make_presentation(io.ring, io.source, ker_gens), lim);
  Laurent src_num;
  for (int s : io.source.shifts) src_num.add_term(s, 1);

  Laurent total =
      cok.num.shifted(rd) + (src_num - im.num).shifted(rd - 1);
  return HilbertSeries{total, p.r()};
}

}  // namespace bps
