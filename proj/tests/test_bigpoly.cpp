#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bps/bigpoly.hpp"
#include "bps/errors.hpp"
#include "bps/syzord.hpp"

using namespace bps;

namespace {

LengthVector lv(std::initializer_list<int> xs) {
  std::vector<Rational> es;
  for (int x : xs) es.emplace_back(x);
  return LengthVector(std::move(es));
}

Laurent lpoly(std::initializer_list<std::pair<int, int>> terms) {
  Laurent p;
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("space parameters") {
  SpaceParams p(1, 1, lv({1, 1, 1}));
  CHECK(p.d() == 3);
  CHECK(p.dbar() == 1);
  CHECK(dimension(p) == 7);

  SpaceParams q(2, 1, lv({1, 1, 1}));
  CHECK(q.d() == 5);
  CHECK(q.dbar() == 3);
  CHECK(dimension(q) == 11);

  CHECK(dimension(SpaceParams(1, 1, lv({1}))) == 1);
  CHECK(dimension(SpaceParams(1, 2, lv({1, 1, 1}))) == 13);

  CHECK_THROWS_AS(SpaceParams(0, 1, lv({1})), BadInput);
  CHECK_THROWS_AS(SpaceParams(1, 0, lv({1})), BadInput);
}

TEST_CASE("poincare polynomial of X") {
  SpaceParams p(1, 1, lv({1, 1, 1}));
  CHECK(poincare_polynomial_X(p) ==
        lpoly({{0, 1}, {3, 3}, {4, 3}, {7, 1}}));

  // One dominant edge: the product formula (1+x^d)^{r-1} (1+x^{2b-1}).
  SpaceParams one_long(1, 1, lv({0, 0, 1}));
  Laurent d3 = Laurent::one() + Laurent::monomial(3);
  Laurent x1 = Laurent::one() + Laurent::monomial(1);
  CHECK(poincare_polynomial_X(one_long) == d3 * d3 * x1);

  SpaceParams one_long_b2(1, 2, lv({0, 0, 1}));
  Laurent d5 = Laurent::one() + Laurent::monomial(5);
  Laurent x3 = Laurent::one() + Laurent::monomial(3);
  CHECK(poincare_polynomial_X(one_long_b2) == d5 * d5 * x3);

  // Total rank 2^r and Poincare duality.
  for (const SpaceParams& sp :
       {p, one_long, one_long_b2, SpaceParams(2, 1, lv({1, 1, 1, 1, 1}))}) {
    CHECK(poincare_polynomial_X(sp).value_at_one() ==
          Integer(1) << sp.r());
    CHECK(poincare_polynomial_X(sp).is_palindromic(dimension(sp)));
  }

  CHECK_THROWS_AS(poincare_polynomial_X(SpaceParams(1, 1, lv({1, 1}))),
                  NonGeneric);
}

TEST_CASE("poincare polynomial of the equilateral polygon space") {
  CHECK(poincare_polynomial_E_equilateral(1, 3) == lpoly({{0, 2}, {1, 2}}));
  CHECK(poincare_polynomial_E_equilateral(1, 5) ==
        lpoly({{0, 1}, {1, 9}, {2, 9}, {3, 1}}));
  CHECK(poincare_polynomial_E_equilateral(2, 3) ==
        lpoly({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));

  // Total rank 2^r - 2*C(2m, m) for r = 2m+1.
  CHECK(poincare_polynomial_E_equilateral(1, 3).value_at_one() == 4);
  CHECK(poincare_polynomial_E_equilateral(1, 5).value_at_one() == 20);
  CHECK(poincare_polynomial_E_equilateral(1, 7).value_at_one() == 88);
  CHECK(poincare_polynomial_E_equilateral(3, 7).value_at_one() == 88);

  CHECK_THROWS_AS(poincare_polynomial_E_equilateral(1, 4), EvenR);
  CHECK_THROWS_AS(poincare_polynomial_E_equilateral(0, 3), BadInput);
}

TEST_CASE("betti sum of the polygon space") {
  CHECK(betti_sum_E(lv({1, 1, 1}), 1) == 4);
  CHECK(betti_sum_E(lv({0, 0, 1}), 1) == 0);
  CHECK(betti_sum_E(lv({0, 1, 1, 1}), 1) == 8);
  CHECK(betti_sum_E(lv({1, 1, 1}), 2) == 4);  // independent of a

  // Equilateral cross-check against the Poincare polynomial.
  CHECK(betti_sum_E(lv({1, 1, 1, 1, 1}), 1) ==
        poincare_polynomial_E_equilateral(1, 5).value_at_one());

  CHECK_THROWS_AS(betti_sum_E(lv({1, 1}), 1), NonGeneric);
}

TEST_CASE("basis classes") {
  SpaceParams p(1, 1, lv({1, 1, 1}));
  std::vector<CohomologyClass> basis = basis_classes(p);
  REQUIRE(basis.size() == 8);

  using K = CohomologyClass::Kind;
  const std::pair<K, Mask> expected[] = {
      {K::Alpha, 0},     {K::Alpha, 0b001}, {K::Alpha, 0b010},
      {K::Alpha, 0b100}, {K::Beta, 0b011},  {K::Beta, 0b101},
      {K::Beta, 0b110},  {K::Beta, 0b111}};
  for (int i = 0; i < 8; ++i) {
    CHECK(basis[i].kind == expected[i].first);
    CHECK(basis[i].J == expected[i].second);
    CHECK(basis[i].coeff == Rational(1));
  }

  CHECK(basis[1].degree(p) == 3);   // alpha_{1}
  CHECK(basis[4].degree(p) == 4);   // beta_{1,2}: 2d - dbar - 1
  CHECK(basis[7].degree(p) == 7);   // beta_{1,2,3} = top class

  SpaceParams pb2(1, 2, lv({1, 1, 1}));
  CHECK(basis[1].degree(pb2) == 5);
  CHECK(basis[4].degree(pb2) == 8);
}

TEST_CASE("cup products") {
  SpaceParams p(1, 1, lv({1, 1, 1}));
  auto alpha = [](Mask J) {
    return CohomologyClass{CohomologyClass::Kind::Alpha, J, Rational(1)};
  };
  auto beta = [](Mask J) {
    return CohomologyClass{CohomologyClass::Kind::Beta, J, Rational(1)};
  };

  // alpha * alpha with a long union vanishes.
  CHECK(!cup_product(alpha(0b001), alpha(0b010), p).has_value());

  // alpha * beta on disjoint sets survives with a shuffle sign.
  auto ab = cup_product(alpha(0b001), beta(0b110), p);
  REQUIRE(ab.has_value());
  CHECK(ab->kind == CohomologyClass::Kind::Beta);
  CHECK(ab->J == 0b111);
  CHECK(ab->coeff == Rational(1));

  auto ab2 = cup_product(alpha(0b010), beta(0b101), p);
  REQUIRE(ab2.has_value());
  CHECK(ab2->coeff == Rational(-1));

  // Overlapping sets multiply to zero, as do two betas.
  CHECK(!cup_product(alpha(0b001), beta(0b101), p).has_value());
  CHECK(!cup_product(beta(0b011), beta(0b101), p).has_value());
  CHECK(!cup_product(beta(0b011), beta(0b011), p).has_value());

  // alpha_{} is the unit.
  auto unit = cup_product(alpha(0), beta(0b110), p);
  REQUIRE(unit.has_value());
  CHECK(*unit == beta(0b110));

  // Coefficients multiply.
  CohomologyClass x = alpha(0b001);
  x.coeff = Rational(3, 2);
  CohomologyClass y = beta(0b110);
  y.coeff = Rational(2);
  auto xy = cup_product(x, y, p);
  REQUIRE(xy.has_value());
  CHECK(xy->coeff == Rational(3));

  // Graded commutativity (all products here are in even total degree).
  auto lhs = cup_product(alpha(0b010), beta(0b101), p);
  auto rhs = cup_product(beta(0b101), alpha(0b010), p);
  REQUIRE(lhs.has_value());
  REQUIRE(rhs.has_value());
  CHECK(*lhs == *rhs);

  // Classes must be labeled by sets of the right kind.
  CHECK_THROWS_AS(cup_product(alpha(0b011), alpha(0), p), BadInput);
  CHECK_THROWS_AS(cup_product(beta(0b001), alpha(0), p), BadInput);
}

TEST_CASE("pairing matrix") {
  SpaceParams p(1, 1, lv({1, 1, 1}));
  std::vector<std::vector<int>> mat = pairing_matrix(p);
  REQUIRE(mat.size() == 8);
  CHECK(is_signed_permutation(mat));

  // alpha_J pairs with beta_{complement}.
  CHECK(mat[0][7] == 1);   // alpha_{} . beta_{1,2,3}
  CHECK(mat[1][6] == 1);   // alpha_{1} . beta_{2,3}
  CHECK(mat[2][5] == -1);  // alpha_{2} . beta_{1,3}
  CHECK(mat[3][4] == 1);   // alpha_{3} . beta_{1,2}
  CHECK(mat[4][5] == 0);   // beta . beta
  CHECK(mat[0][0] == 0);

  SpaceParams q(1, 1, lv({0, 1, 1, 1}));
  CHECK(is_signed_permutation(pairing_matrix(q)));
}

TEST_CASE("signed permutation predicate") {
  CHECK(is_signed_permutation({{0, 1}, {-1, 0}}));
  CHECK(!is_signed_permutation({{1, 1}, {0, 1}}));
  CHECK(!is_signed_permutation({{2, 0}, {0, 1}}));
  CHECK(!is_signed_permutation({{1, 0}, {1, 0}}));
  CHECK(!is_signed_permutation({{1, 0}}));
  CHECK(is_signed_permutation({}));  // vacuously true for the 0x0 matrix
}

TEST_CASE("iota matrix") {
  // r = 1: source [V_{}], [W_{}]; target [V_{}], [V_{1}].
  IotaMatrix io1 = iota_matrix(lv({1}), 1);
  CHECK(io1.short_sets == std::vector<Mask>{0});
  CHECK(io1.all_sets == std::vector<Mask>{0, 1});
  CHECK(io1.source.shifts == std::vector<int>{0, -1});
  CHECK(io1.target.shifts == std::vector<int>{0, -3});
  REQUIRE(io1.cols.size() == 2);
  CHECK(io1.cols[0] == Vec::unit(0));
  Vec w0;
  w0.t.push_back({Monomial::var(0), 1, Rational(1)});
  CHECK(io1.cols[1] == w0);

  // Degrees double with b = 2.
  IotaMatrix io1b2 = iota_matrix(lv({1}), 2);
  CHECK(io1b2.source.shifts == std::vector<int>{0, -1});
  CHECK(io1b2.target.shifts == std::vector<int>{0, -5});
  Vec w0b2;
  w0b2.t.push_back({Monomial::var(0, 2), 1, Rational(1)});
  CHECK(io1b2.cols[1] == w0b2);

  // r = 2, lengths (0,1): shorts {}, {1}.
  IotaMatrix io2 = iota_matrix(lv({0, 1}), 1);
  CHECK(io2.short_sets == std::vector<Mask>{0, 0b01});
  CHECK(io2.all_sets == std::vector<Mask>{0, 0b01, 0b10, 0b11});
  CHECK(io2.source.shifts == std::vector<int>{0, -3, -1, -4});
  CHECK(io2.target.shifts == std::vector<int>{0, -3, -3, -6});
  REQUIRE(io2.cols.size() == 4);
  // W_{} -> t1 [V_{1}] + t2 [V_{2}].
  Vec w_empty = vec_normalize(io2.ring,
                              {{Monomial::var(0), 1, Rational(1)},
                               {Monomial::var(1), 2, Rational(1)}});
  CHECK(io2.cols[2] == w_empty);
  // W_{1} -> t2 [V_{1,2}].
  Vec w_one;
  w_one.t.push_back({Monomial::var(1), 3, Rational(1)});
  CHECK(io2.cols[3] == w_one);

  // Columns are homogeneous of the source degree.
  for (std::size_t j = 0; j < io2.cols.size(); ++j)
    CHECK(vec_degree_homog(io2.cols[j], io2.target,
                           io2.source.shifts[j]) == io2.source.shifts[j]);

  CHECK_THROWS_AS(iota_matrix(lv({1, 1}), 1), NonGeneric);
}

TEST_CASE("cokernel presentation") {
  // r = 1: coker = R[-3] / (t1^b).
  GradedPresentation c1 = coker_presentation(lv({1}), 1);
  CHECK(c1.target.shifts == std::vector<int>{-3});
  REQUIRE(c1.num_relations() == 1);
  CHECK(c1.rel_degrees == std::vector<int>{-1});
  CHECK(presentation_entry(c1, 0, 0) == Poly::term(Monomial::var(0), 1));

  GradedPresentation c1b2 = coker_presentation(lv({1}), 2);
  CHECK(c1b2.target.shifts == std::vector<int>{-5});
  CHECK(c1b2.rel_degrees == std::vector<int>{-1});
  CHECK(presentation_entry(c1b2, 0, 0) == Poly::term(Monomial::var(0, 2), 1));

  // Equilateral triangle: 4 long sets, 3 surviving relations.
  GradedPresentation c3 = coker_presentation(lv({1, 1, 1}), 1);
  CHECK(c3.target.shifts == std::vector<int>{-6, -6, -6, -9});
  CHECK(c3.num_relations() == 3);
  CHECK(c3.rel_degrees == std::vector<int>{-4, -4, -4});
  // Relation of J = {1}: t2 [V_{1,2}] + t3 [V_{1,3}].
  CHECK(presentation_entry(c3, 0, 0) == Poly::term(Monomial::var(1), 1));
  CHECK(presentation_entry(c3, 1, 0) == Poly::term(Monomial::var(2), 1));
  CHECK(presentation_entry(c3, 2, 0).is_zero());
  CHECK(presentation_entry(c3, 3, 0).is_zero());
  // Relation of J = {2}: -t1 [V_{1,2}] + t3 [V_{2,3}].
  CHECK(presentation_entry(c3, 0, 1) == Poly::term(Monomial::var(0), -1));
  CHECK(presentation_entry(c3, 2, 1) == Poly::term(Monomial::var(2), 1));

  // One dominant edge: every short set extends by edge 3 only.
  GradedPresentation cd = coker_presentation(lv({0, 0, 1}), 1);
  CHECK(cd.target.shifts == std::vector<int>{-3, -6, -6, -9});
  CHECK(cd.num_relations() == 4);
  CHECK(cd.rel_degrees == std::vector<int>{-1, -4, -4, -7});

  // The parameter a moves degrees but not the matrix entries.
  GradedPresentation c3a2 = coker_presentation(lv({1, 1, 1}), 1, 2);
  CHECK(c3a2.target.shifts == std::vector<int>{-10, -10, -10, -15});
  CHECK(presentation_entry(c3a2, 0, 0) == Poly::term(Monomial::var(1), 1));
}

TEST_CASE("syzygy order of the equivariant cohomology") {
  CHECK(ht_syzygy_order(lv({1}), 1) == 0);
  CHECK(ht_syzygy_order(lv({1, 1, 1}), 1) == 1);
  CHECK(ht_syzygy_order(lv({1, 1, 1}), 2) == 1);
  CHECK(ht_syzygy_order(lv({0, 0, 1}), 1) == 0);
  CHECK(ht_syzygy_order(lv({0, 1, 1, 1}), 1) == 1);
  CHECK(ht_syzygy_order(lv({1, 1, 1, 2}), 1) == 0);
  CHECK_THROWS_AS(ht_syzygy_order(lv({1, 1}), 1), NonGeneric);
}

TEST_CASE("equilateral decomposition") {
  EquilateralDecomposition dec = equilateral_decomposition(1, 1, 1);
  CHECK(dec.r == 3);
  REQUIRE(dec.summands.size() == 4);
  CHECK(dec.summands[0] == Summand{true, 0, 1, 0});    // R
  CHECK(dec.summands[1] == Summand{false, 1, 1, 3});   // K_1[3]
  CHECK(dec.summands[2] == Summand{false, 3, 1, 6});   // K_3[6]
  CHECK(dec.summands[3] == Summand{true, 0, 1, 7});    // R[7]

  EquilateralDecomposition dec5 = equilateral_decomposition(2, 1, 1);
  CHECK(dec5.r == 5);
  // j = 0, 1 free; K_2[6]; K_4[9]; j = 4, 5 free.
  REQUIRE(dec5.summands.size() == 6);
  CHECK(dec5.summands[0] == Summand{true, 0, 1, 0});
  CHECK(dec5.summands[1] == Summand{true, 0, 5, 3});
  CHECK(dec5.summands[2] == Summand{false, 2, 1, 6});
  CHECK(dec5.summands[3] == Summand{false, 4, 1, 9});
  CHECK(dec5.summands[4] == Summand{true, 0, 5, 10});
  CHECK(dec5.summands[5] == Summand{true, 0, 1, 13});

  // m = 0 degenerates to K_0 plus the zero module K_2.
  EquilateralDecomposition dec1 = equilateral_decomposition(0, 1, 1);
  CHECK(dec1.r == 1);
  REQUIRE(dec1.summands.size() == 2);
  CHECK(dec1.summands[0] == Summand{false, 0, 1, 0});
  CHECK(dec1.summands[1] == Summand{false, 2, 1, 3});
  CHECK(decomposition_series(dec1).num == Laurent::power_of_one_minus(2, 1));

  CHECK_THROWS_AS(equilateral_decomposition(-1, 1, 1), BadInput);
}

TEST_CASE("equivariant hilbert series") {
  // r = 1: H_T has series (1 - x^{2b}) / (1 - x^2).
  for (int b = 1; b <= 2; ++b) {
    HilbertSeries h = equivariant_hilbert_series(SpaceParams(1, b, lv({1})));
    CHECK(h.r == 1);
    CHECK(h.num == Laurent::power_of_one_minus(2 * b, 1));
  }

  // Equilateral triangle, a = b = 1.
  SpaceParams p(1, 1, lv({1, 1, 1}));
  Laurent expected = lpoly({{0, 1}, {3, 3}, {5, -3}, {6, 1}, {7, 2}});
  HilbertSeries h = equivariant_hilbert_series(p);
  CHECK(h.r == 3);
  CHECK(h.num == expected);
  CHECK(decomposition_series(equilateral_decomposition(1, 1, 1)).num ==
        expected);

  // Same chamber, b = 2.
  SpaceParams pb2(1, 2, lv({1, 1, 1}));
  Laurent expected_b2 = lpoly({{0, 1}, {5, 3}, {9, -3}, {12, 1}, {13, 2}});
  CHECK(equivariant_hilbert_series(pb2).num == expected_b2);
  CHECK(decomposition_series(equilateral_decomposition(1, 1, 2)).num ==
        expected_b2);

  // The decomposition runs through an honest presentation as well.
  GradedPresentation dp =
      decomposition_presentation(equilateral_decomposition(1, 1, 1));
  CHECK(hilbert_series(dp).num == expected);
  CHECK(syzygy_order(dp) == 1);
}
