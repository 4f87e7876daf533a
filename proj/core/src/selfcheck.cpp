#include "bps/selfcheck.hpp"

#include <functional>
#include <sstream>

#include "bps/bigpoly.hpp"
#include "bps/errors.hpp"
#include "bps/koszul.hpp"
#include "bps/lenvec.hpp"
#include "bps/resolution.hpp"
#include "bps/sweep.hpp"
#include "bps/syzord.hpp"

namespace bps {

namespace {

// Accumulates pass/fail over many sub-checks, remembering the first failure.
struct Acc {
  bool ok = true;
  int checked = 0;
  std::string first_fail;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      if (ok) first_fail = what;
      ok = false;
    }
  }
  std::string detail() const {
    if (ok) return std::to_string(checked) + " checks";
    return "failed: " + first_fail;
  }
};

LengthVector equilateral(int r) {
  return LengthVector(std::vector<Rational>(r, Rational(1)));
}

LengthVector lengths_of(std::vector<int> v) {
  std::vector<Rational> q(v.begin(), v.end());
  return LengthVector(std::move(q));
}

LengthVector rep_of(const Chamber& c) {
  std::vector<Rational> q;
  for (const Integer& e : c.representative) q.emplace_back(e);
  return LengthVector(std::move(q));
}

std::string fmt_case(const std::string& head, int got, int want) {
  std::ostringstream os;
  os << head << ": got " << got << ", want " << want;
  return os.str();
}

// --- criterion bodies ---------------------------------------------------

void koszul_syzygy_orders(Acc& acc, const GBLimits& lim) {
  for (int r : {2, 3, 4})
    for (int b : {1, 2})
      for (int k = 0; k <= r; ++k) {
        const KoszulData kd{r, b};
        const int got =
            syzygy_order(koszul_syzygy_presentation(k, kd), lim);
        std::ostringstream head;
        head << "K_" << k << " r=" << r << " b=" << b;
        acc.expect(got == k, fmt_case(head.str(), got, k));
      }
}

void equilateral_syzygy_orders(Acc& acc, const GBLimits& lim) {
  for (int b : {1, 2}) {
    const int got3 = ht_syzygy_order(equilateral(3), b, lim);
    acc.expect(got3 == 1, fmt_case("(1,1,1) b=" + std::to_string(b), got3, 1));
    const int got5 = ht_syzygy_order(equilateral(5), b, lim);
    acc.expect(got5 == 2,
               fmt_case("(1,1,1,1,1) b=" + std::to_string(b), got5, 2));
  }
}

void zero_padded_syzygy_orders(Acc& acc, const GBLimits& lim) {
  const int got1 = ht_syzygy_order(lengths_of({0, 1, 1, 1}), 1, lim);
  acc.expect(got1 == 1, fmt_case("(0,1,1,1)", got1, 1));
  const int got2 = ht_syzygy_order(lengths_of({0, 0, 0, 1, 1, 1}), 1, lim);
  acc.expect(got2 == 1, fmt_case("(0,0,0,1,1,1)", got2, 1));
  const int got3 = ht_syzygy_order(lengths_of({1, 2, 2, 2, 3, 3}), 1, lim);
  acc.expect(got3 == 0, fmt_case("(1,2,2,2,3,3)", got3, 0));
}

void conjecture_sweep(Acc& acc, const AcceptanceOptions& opt) {
  for (int r = 1; r <= 5; ++r) {
    SweepOptions so;
    so.r = r;
    so.bs = {1};
    so.threads = opt.threads;
    so.limits = opt.limits;
    so.with_poincare = false;
    so.cache_path = opt.cache_path;
    const SweepResult res = verify_conjecture_sweep(so);
    acc.expect(res.stabilized,
               "chamber enumeration not stabilized at r=" + std::to_string(r));
    for (const ChamberReport& rep : res.reports) {
      if (!rep.error.empty()) {
        acc.expect(false, rep.chamber_id + ": " + rep.error);
        continue;
      }
      acc.expect(rep.conjecture_ok,
                 fmt_case(rep.chamber_id + " " + rep.representative +
                              " syzord (mu=" + std::to_string(rep.mu) + ")",
                          rep.syzord_by_b.at(1), rep.mu - 1));
    }
  }
}

void poincare_polynomials(Acc& acc) {
  const std::vector<std::pair<int, int>> abs = {{1, 1}, {2, 1}, {1, 2}};
  for (int r = 1; r <= 6; ++r) {
    const ChamberEnumeration en = enumerate_chambers(r, r + 1);
    acc.expect(en.stabilized,
               "chamber enumeration not stabilized at r=" + std::to_string(r));
    for (const Chamber& c : en.chambers) {
      const LengthVector l = rep_of(c);
      for (auto [a, b] : abs) {
        const SpaceParams p(a, b, l);
        const Laurent px = poincare_polynomial_X(p);
        acc.expect(px.value_at_one() == Integer(1) << r,
                   c.id() + " a=" + std::to_string(a) + " b=" +
                       std::to_string(b) + ": P(1) != 2^r, got " +
                       to_string(px.value_at_one()));
        acc.expect(px.is_palindromic(dimension(p)),
                   c.id() + " a=" + std::to_string(a) + " b=" +
                       std::to_string(b) + ": not palindromic: " + px.str());
      }
    }
  }
  // Cross-check: (1,1,1) at a = b = 1.
  {
    Laurent want;
    want.add_term(0, 1);
    want.add_term(3, 3);
    want.add_term(4, 3);
    want.add_term(7, 1);
    const Laurent got =
        poincare_polynomial_X(SpaceParams(1, 1, equilateral(3)));
    acc.expect(got == want, "(1,1,1) a=b=1: got " + got.str());
  }
  // Cross-check: (0,...,0,1) against (1+x^d)^{r-1} (1+x^{2b-1}).
  for (int r = 1; r <= 6; ++r)
    for (auto [a, b] : abs) {
      std::vector<int> v(r, 0);
      v.back() = 1;
      const SpaceParams p(a, b, lengths_of(v));
      Laurent want = Laurent::one();
      Laurent fac = Laurent::one();
      fac.add_term(p.d(), 1);
      for (int i = 0; i + 1 < r; ++i) want = want * fac;
      Laurent last = Laurent::one();
      last.add_term(2 * b - 1, 1);
      want = want * last;
      const Laurent got = poincare_polynomial_X(p);
      acc.expect(got == want, "(0,..,0,1) r=" + std::to_string(r) + " a=" +
                                  std::to_string(a) + " b=" +
                                  std::to_string(b) + ": got " + got.str());
    }
}

void polygon_betti_sums(Acc& acc) {
  for (int r : {3, 5, 7}) {
    const int m = (r - 1) / 2;
    const Integer want = (Integer(1) << r) - 2 * binomial(2 * m, m);
    const Integer at_one = poincare_polynomial_E_equilateral(1, r).value_at_one();
    acc.expect(at_one == want, "P_E(1) r=" + std::to_string(r) + ": got " +
                                   to_string(at_one) + ", want " +
                                   to_string(want));
    const Integer bs = betti_sum_E(equilateral(r), 1);
    acc.expect(bs == want, "betti_sum_E r=" + std::to_string(r) + ": got " +
                               to_string(bs) + ", want " + to_string(want));
  }
}

void ring_structure(Acc& acc) {
  const auto same = [](const std::optional<CohomologyClass>& x,
                       const std::optional<CohomologyClass>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || *x == *y;
  };

  for (int r = 1; r <= 4; ++r) {
    const ChamberEnumeration en = enumerate_chambers(r, r + 1);
    for (const Chamber& c : en.chambers) {
      const LengthVector l = rep_of(c);
      for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}}) {
        const SpaceParams p(a, b, l);
        const std::vector<CohomologyClass> basis = basis_classes(p);
        int assoc_fail = 0, comm_fail = 0;
        for (const CohomologyClass& x : basis)
          for (const CohomologyClass& y : basis) {
            const auto xy = cup_product(x, y, p);
            auto yx = cup_product(y, x, p);
            // x y = (-1)^{deg x deg y} y x
            if (yx && (x.degree(p) * y.degree(p)) % 2 != 0)
              yx->coeff = -yx->coeff;
            if (!same(xy, yx)) ++comm_fail;
            for (const CohomologyClass& z : basis) {
              const std::optional<CohomologyClass> lhs =
                  xy ? cup_product(*xy, z, p) : std::nullopt;
              const std::optional<CohomologyClass> yz = cup_product(y, z, p);
              const std::optional<CohomologyClass> rhs =
                  yz ? cup_product(x, *yz, p) : std::nullopt;
              if (!same(lhs, rhs)) ++assoc_fail;
            }
          }
        acc.expect(assoc_fail == 0 && comm_fail == 0,
                   c.id() + " a=" + std::to_string(a) + " b=" +
                       std::to_string(b) + ": " + std::to_string(assoc_fail) +
                       " associativity and " + std::to_string(comm_fail) +
                       " commutativity failures");
      }
    }
  }
  for (int r = 1; r <= 5; ++r) {
    const ChamberEnumeration en = enumerate_chambers(r, r + 1);
    for (const Chamber& c : en.chambers) {
      const SpaceParams p(1, 1, rep_of(c));
      acc.expect(is_signed_permutation(pairing_matrix(p)),
                 c.id() + ": pairing matrix not a signed permutation");
    }
  }
}

void engine_properties(Acc& acc, const GBLimits& lim) {
  // Resolutions: d o d = 0, length <= r, minimality.
  std::vector<std::pair<std::string, GradedPresentation>> instances;
  for (int r : {2, 3})
    for (int b : {1, 2})
      for (int k = 0; k <= r; ++k) {
        std::ostringstream name;
        name << "K_" << k << " r=" << r << " b=" << b;
        instances.emplace_back(name.str(),
                               koszul_syzygy_presentation(k, KoszulData{r, b}));
      }
  instances.emplace_back("coker (1,1,1)",
                         coker_presentation(equilateral(3), 1));
  instances.emplace_back("coker (0,1,1,1)",
                         coker_presentation(lengths_of({0, 1, 1, 1}), 1));
  for (const auto& [name, p] : instances) {
    const FreeResolution res = minimal_free_resolution(p, p.ring.n + 2, lim);
    acc.expect(resolution_composition_is_zero(res), name + ": d o d != 0");
    acc.expect(res.length() <= p.ring.n,
               name + ": resolution longer than the variable count");
    acc.expect(res.minimal, name + ": resolution not minimal");
    acc.expect(res.complete, name + ": resolution truncated");
  }

  // Reduced-GB uniqueness under generator reordering.
  for (const auto& [name, p] : instances) {
    if (p.relations.empty()) continue;
    std::vector<Vec> rev(p.relations.rbegin(), p.relations.rend());
    const auto g1 = buchberger(p.ring, p.relations, p.target, lim);
    const auto g2 = buchberger(p.ring, rev, p.target, lim);
    acc.expect(g1 == g2, name + ": reduced GB depends on generator order");
  }

  // Betti tables are monomial-order independent (degrevlex vs lex), r <= 3.
  for (const auto& [name, p] : instances) {
    if (p.ring.n > 3) continue;
    const PolyRing lex{p.ring.n, MonoOrder::Lex};
    const GradedPresentation plex =
        make_presentation(lex, p.target, p.relations);
    const BettiTable b1 =
        minimal_free_resolution(p, p.ring.n + 2, lim).betti();
    const BettiTable b2 =
        minimal_free_resolution(plex, p.ring.n + 2, lim).betti();
    acc.expect(b1 == b2, name + ": Betti table differs between orders");
  }

  // hilbert_series(K_0) = (1 - x^{2b})^r / (1 - x^2)^r.
  for (int r = 1; r <= 4; ++r)
    for (int b : {1, 2}) {
      const HilbertSeries hs =
          hilbert_series(koszul_syzygy_presentation(0, KoszulData{r, b}), lim);
      acc.expect(hs.num == Laurent::power_of_one_minus(2 * b, r),
                 "K_0 r=" + std::to_string(r) + " b=" + std::to_string(b) +
                     ": numerator " + hs.num.str());
    }
}

void equilateral_decomposition_series(Acc& acc, const GBLimits& lim) {
  for (int r : {3, 5})
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}}) {
      const int m = (r - 1) / 2;
      const HilbertSeries lhs =
          equivariant_hilbert_series(SpaceParams(a, b, equilateral(r)), lim);
      const HilbertSeries rhs =
          decomposition_series(equilateral_decomposition(m, a, b), lim);
      acc.expect(lhs == rhs, "r=" + std::to_string(r) + " a=" +
                                 std::to_string(a) + " b=" + std::to_string(b) +
                                 ": " + lhs.str() + " vs " + rhs.str());
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  using Body = std::function<void(Acc&)>;
  const std::vector<std::pair<std::string, Body>> criteria = {
      {"koszul syzygy orders",
       [&](Acc& a) { koszul_syzygy_orders(a, opt.limits); }},
      {"equilateral syzygy orders",
       [&](Acc& a) { equilateral_syzygy_orders(a, opt.limits); }},
      {"zero-padded and mixed chambers",
       [&](Acc& a) { zero_padded_syzygy_orders(a, opt.limits); }},
      {"conjecture sweep r<=5", [&](Acc& a) { conjecture_sweep(a, opt); }},
      {"poincare polynomials", [&](Acc& a) { poincare_polynomials(a); }},
      {"polygon betti sums", [&](Acc& a) { polygon_betti_sums(a); }},
      {"ring structure", [&](Acc& a) { ring_structure(a); }},
      {"engine properties",
       [&](Acc& a) { engine_properties(a, opt.limits); }},
      {"equilateral decomposition",
       [&](Acc& a) { equilateral_decomposition_series(a, opt.limits); }},
  };

  std::vector<CriterionResult> out;
  int index = 1;
  for (const auto& [name, body] : criteria) {
    CriterionResult res;
    res.index = index++;
    res.name = name;
    Acc acc;
    try {
      body(acc);
      res.pass = acc.ok;
      res.detail = acc.detail();
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace bps
