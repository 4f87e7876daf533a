#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "bps/errors.hpp"
#include "bps/koszul.hpp"
#include "bps/presentation.hpp"
#include "bps/resolution.hpp"
#include "bps/syzord.hpp"

using namespace bps;

namespace {

Vec sv(const PolyRing& R, std::initializer_list<MTerm> ts) {
  return vec_normalize(R, std::vector<MTerm>(ts));
}

// R/(t1) over Q[t1..tn].
GradedPresentation principal_t1(int n) {
  PolyRing R{n, MonoOrder::DegRevLex};
  Vec col;
  col.t.push_back({Monomial::var(0), 0, Rational(1)});
  return make_presentation(R, FreeModule::trivial(1), {col});
}

}  // namespace

TEST_CASE("presentations") {
  PolyRing R{2, MonoOrder::DegRevLex};

  GradedPresentation fp = free_presentation(R, FreeModule{{0, -3}});
  CHECK(fp.is_free_presentation());
  CHECK(fp.num_generators() == 2);

  // Zero columns are dropped; inhomogeneous columns are rejected.
  Vec col = sv(R, {{Monomial::var(0), 0, Rational(1)}});
  GradedPresentation p =
      make_presentation(R, FreeModule::trivial(1), {Vec::zero(), col});
  CHECK(p.num_relations() == 1);
  CHECK(p.rel_degrees == std::vector<int>{2});

  Vec bad = sv(R, {{Monomial::var(0), 0, Rational(1)},
                   {Monomial::one(), 0, Rational(1)}});
  CHECK_THROWS_AS(make_presentation(R, FreeModule::trivial(1), {bad}),
                  BadInput);

  // Entry lookup: rows are generators, columns relations.
  CHECK(presentation_entry(p, 0, 0) == Poly::term(Monomial::var(0), 1));

  GradedPresentation sh = shift(p, 5);
  CHECK(sh.target.shifts == std::vector<int>{5});
  CHECK(sh.rel_degrees == std::vector<int>{7});

  GradedPresentation ds = direct_sum(p, fp);
  CHECK(ds.num_generators() == 3);
  CHECK(ds.num_relations() == 1);
  CHECK(ds.target.shifts == std::vector<int>{0, 0, -3});
}

TEST_CASE("apply_columns") {
  PolyRing R{2, MonoOrder::DegRevLex};
  std::vector<Vec> cols = {sv(R, {{Monomial::var(0), 0, Rational(1)}}),
                           sv(R, {{Monomial::one(), 0, Rational(1)},
                                  {Monomial::var(1), 1, Rational(-1)}})};
  Vec v = sv(R, {{Monomial::var(1), 0, Rational(1)},
                 {Monomial::one(), 1, Rational(1)}});
  // t2 * col0 + col1 = t1*t2 + e1 - t2*e2.
  Vec expected = sv(R, {{mono_mul(Monomial::var(0), Monomial::var(1)), 0,
                         Rational(1)},
                        {Monomial::one(), 0, Rational(1)},
                        {Monomial::var(1), 1, Rational(-1)}});
  CHECK(apply_columns(R, cols, v) == expected);
  CHECK(apply_columns(R, cols, Vec::zero()).is_zero());

  Vec out_of_range = Vec::unit(2);
  CHECK_THROWS_AS(apply_columns(R, cols, out_of_range), BadInput);
}

TEST_CASE("minimalization") {
  PolyRing R{2, MonoOrder::DegRevLex};

  // coker(e2 - t1*e1 : R -> R(0) + R(-2)) is free of rank 1.
  Vec col = sv(R, {{Monomial::one(), 1, Rational(1)},
                   {Monomial::var(0), 0, Rational(-1)}});
  GradedPresentation p = make_presentation(R, FreeModule{{0, 2}}, {col});
  GradedPresentation m = minimalize(p);
  CHECK(m.num_generators() == 1);
  CHECK(m.num_relations() == 0);
  CHECK(m.target.shifts == std::vector<int>{0});

  // A presentation with no constant entries is left alone.
  KoszulData kd{2, 1};
  GradedPresentation k1 = koszul_syzygy_presentation(1, kd);
  GradedPresentation k1m = minimalize(k1);
  CHECK(k1m.num_generators() == k1.num_generators());
  CHECK(k1m.num_relations() == k1.num_relations());
}

TEST_CASE("koszul data") {
  KoszulData kd{3, 1};
  CHECK(kd.basis(0) == std::vector<Mask>{0});
  CHECK(kd.basis(2) == std::vector<Mask>{0b011, 0b101, 0b110});

  // d_2 over r=2: e_{12} -> t1*e_{2} - t2*e_{1}.
  KoszulData k2{2, 1};
  std::vector<Vec> d2 = koszul_differential(2, k2);
  REQUIRE(d2.size() == 1);
  PolyRing R = k2.ring();
  CHECK(d2[0] == sv(R, {{Monomial::var(0), 1, Rational(1)},
                        {Monomial::var(1), 0, Rational(-1)}}));

  // d_{r+1} has no columns; indices outside 1..r+1 are rejected.
  CHECK(koszul_differential(3, k2).empty());
  CHECK_THROWS_AS(koszul_differential(0, k2), BadInput);
  CHECK_THROWS_AS(koszul_differential(4, k2), BadInput);

  // d o d = 0 for every k.
  for (int k = 2; k <= 3; ++k) {
    std::vector<Vec> dk = koszul_differential(k, kd);
    std::vector<Vec> dk1 = koszul_differential(k - 1, kd);
    for (const Vec& c : dk) CHECK(apply_columns(kd.ring(), dk1, c).is_zero());
  }

  // b is the exponent of the forms.
  KoszulData kb{2, 2};
  std::vector<Vec> db = koszul_differential(2, kb);
  CHECK(db[0] == sv(R, {{Monomial::var(0, 2), 1, Rational(1)},
                        {Monomial::var(1, 2), 0, Rational(-1)}}));

  // K_r is free, K_{r+1} is zero.
  CHECK(koszul_syzygy_presentation(3, kd).is_free_presentation());
  CHECK(koszul_syzygy_presentation(3, kd).num_generators() == 1);
  CHECK(koszul_syzygy_presentation(4, kd).num_generators() == 0);
  CHECK_THROWS_AS(koszul_syzygy_presentation(-1, kd), BadInput);
  CHECK_THROWS_AS(koszul_syzygy_presentation(5, kd), BadInput);
}

TEST_CASE("resolution of the residue field") {
  KoszulData kd{2, 1};
  GradedPresentation k0 = koszul_syzygy_presentation(0, kd);
  FreeResolution res = minimal_free_resolution(k0, 4);

  CHECK(res.length() == 2);
  CHECK(res.complete);
  CHECK(res.minimal);
  CHECK(resolution_composition_is_zero(res));
  CHECK(resolution_is_minimal(res));

  BettiTable bt = res.betti();
  REQUIRE(bt.ranks.size() == 3);
  CHECK(bt.ranks[0] == std::map<int, int>{{0, 1}});
  CHECK(bt.ranks[1] == std::map<int, int>{{2, 2}});
  CHECK(bt.ranks[2] == std::map<int, int>{{4, 1}});
  CHECK(bt.total_rank(1) == 2);
  CHECK(bt.length() == 2);
}

TEST_CASE("resolution of K_1 over three variables") {
  KoszulData kd{3, 1};
  GradedPresentation k1 = koszul_syzygy_presentation(1, kd);
  FreeResolution res = minimal_free_resolution(k1, 5);

  CHECK(res.length() == 2);
  BettiTable bt = res.betti();
  CHECK(bt.ranks[0] == std::map<int, int>{{0, 3}});
  CHECK(bt.ranks[1] == std::map<int, int>{{2, 3}});
  CHECK(bt.ranks[2] == std::map<int, int>{{4, 1}});
  CHECK(bt.csv() ==
        "homological_degree,internal_degree,rank\n"
        "0,0,3\n"
        "1,2,3\n"
        "2,4,1\n");

  // K_2 needs a single step.
  GradedPresentation k2 = koszul_syzygy_presentation(2, kd);
  FreeResolution res2 = minimal_free_resolution(k2, 5);
  CHECK(res2.length() == 1);
  CHECK(res2.betti().ranks[0] == std::map<int, int>{{0, 3}});
  CHECK(res2.betti().ranks[1] == std::map<int, int>{{2, 1}});

  // Free modules resolve instantly.
  PolyRing R = kd.ring();
  FreeResolution resf =
      minimal_free_resolution(free_presentation(R, FreeModule{{0, -1}}), 5);
  CHECK(resf.length() == 0);
  CHECK(resf.complete);
}

TEST_CASE("truncated resolutions are flagged") {
  KoszulData kd{2, 1};
  GradedPresentation k0 = koszul_syzygy_presentation(0, kd);
  FreeResolution res = minimal_free_resolution(k0, 1);
  CHECK(res.length() == 1);
  CHECK(!res.complete);
  // Vanishing past the truncation point is undecidable from this chain.
  CHECK_THROWS_AS(ext_vanishes_with_resolution(res, 1), BadInput);
}

TEST_CASE("hilbert series") {
  KoszulData kd2{2, 1};
  HilbertSeries h = hilbert_series(koszul_syzygy_presentation(0, kd2));
  CHECK(h.r == 2);
  CHECK(h.num == Laurent::power_of_one_minus(2, 2));

  KoszulData kd3b2{3, 2};
  CHECK(hilbert_series(koszul_syzygy_presentation(0, kd3b2)).num ==
        Laurent::power_of_one_minus(4, 3));

  CHECK(hilbert_series(principal_t1(2)).num ==
        Laurent::one() - Laurent::monomial(2));

  PolyRing R{2, MonoOrder::DegRevLex};
  Laurent two = Laurent::monomial(0, 2);
  CHECK(hilbert_series(free_presentation(R, FreeModule::trivial(2))).num ==
        two);

  // K_2 over r=3: 3 generators, one linear relation.
  KoszulData kd3{3, 1};
  Laurent expected = Laurent::monomial(0, 3) - Laurent::monomial(2);
  CHECK(hilbert_series(koszul_syzygy_presentation(2, kd3)).num == expected);
}

TEST_CASE("transpose") {
  // The transpose of a free module is zero.
  PolyRing R{2, MonoOrder::DegRevLex};
  GradedPresentation tf = transpose(free_presentation(R, FreeModule{{0, 4}}));
  CHECK(tf.num_generators() == 0);

  // transpose(R/(t1)) is presented by the same 1x1 matrix, dual degrees.
  GradedPresentation p = principal_t1(2);
  GradedPresentation tp = transpose(p);
  CHECK(tp.num_generators() == 1);
  CHECK(tp.target.shifts == std::vector<int>{-2});
  CHECK(tp.num_relations() == 1);
  CHECK(presentation_entry(tp, 0, 0) == Poly::term(Monomial::var(0), 1));
  CHECK(auslander_transpose(p).target == tp.target);

  // Double transpose restores the original matrix here.
  GradedPresentation tt = transpose(tp);
  CHECK(tt.target.shifts == std::vector<int>{0});
  CHECK(presentation_entry(tt, 0, 0) == Poly::term(Monomial::var(0), 1));
}

TEST_CASE("dual columns") {
  PolyRing R{2, MonoOrder::DegRevLex};
  std::vector<Vec> cols = {sv(R, {{Monomial::var(0), 0, Rational(1)},
                                  {Monomial::var(1), 1, Rational(1)}})};
  std::vector<Vec> dual = dual_columns(R, cols, 2);
  REQUIRE(dual.size() == 2);
  CHECK(dual[0] == sv(R, {{Monomial::var(0), 0, Rational(1)}}));
  CHECK(dual[1] == sv(R, {{Monomial::var(1), 0, Rational(1)}}));
}

TEST_CASE("ext vanishing") {
  KoszulData kd{2, 1};
  GradedPresentation k0 = koszul_syzygy_presentation(0, kd);
  CHECK(ext_vanishes(k0, 1));
  CHECK(!ext_vanishes(k0, 2));
  CHECK_THROWS_AS(ext_vanishes(k0, 0), BadInput);

  GradedPresentation p = principal_t1(2);
  CHECK(!ext_vanishes(p, 1));
  CHECK(ext_vanishes(p, 2));
  CHECK(ext_vanishes(p, 3));

  PolyRing R{2, MonoOrder::DegRevLex};
  GradedPresentation fp = free_presentation(R, FreeModule::trivial(2));
  for (int i = 1; i <= 3; ++i) CHECK(ext_vanishes(fp, i));

  // The resolution-reusing form agrees.
  FreeResolution res = minimal_free_resolution(p, 4);
  CHECK(ext_vanishes_with_resolution(res, 1) == ext_vanishes(p, 1));
  CHECK(ext_vanishes_with_resolution(res, 2) == ext_vanishes(p, 2));
}

TEST_CASE("syzygy orders of Koszul modules") {
  for (int r = 2; r <= 3; ++r) {
    KoszulData kd{r, 1};
    for (int k = 0; k <= r; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      CHECK(syzygy_order(koszul_syzygy_presentation(k, kd)) == k);
    }
  }

  // b = 2 changes degrees but not the orders.
  KoszulData kb{2, 2};
  CHECK(syzygy_order(koszul_syzygy_presentation(1, kb)) == 1);

  CHECK(syzygy_order(principal_t1(2)) == 0);

  PolyRing R3{3, MonoOrder::DegRevLex};
  CHECK(syzygy_order(free_presentation(R3, FreeModule::trivial(2))) == 3);
}

TEST_CASE("syzygy order of direct sums is the minimum") {
  KoszulData kd{3, 1};
  PolyRing R = kd.ring();
  GradedPresentation k1 = koszul_syzygy_presentation(1, kd);
  GradedPresentation k2 = koszul_syzygy_presentation(2, kd);
  GradedPresentation free1 = free_presentation(R, FreeModule::trivial(1));

  CHECK(syzygy_order(direct_sum(free1, k1)) == 1);
  CHECK(syzygy_order(direct_sum(k1, k2)) == 1);
  CHECK(syzygy_order(direct_sum(k2, free1)) == 2);

  // Shifts do not change the syzygy order.
  CHECK(syzygy_order(shift(k1, 5)) == 1);
}
