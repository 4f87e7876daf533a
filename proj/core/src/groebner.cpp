#include "bps/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "bps/errors.hpp"

namespace bps {

namespace {

int min_shift(const FreeModule& F) {
  if (F.shifts.empty()) return 0;
  return *std::min_element(F.shifts.begin(), F.shifts.end());
}

struct SPair {
  int deg;
  int i, j;
};
struct SPairLater {
  bool operator()(const SPair& a, const SPair& b) const {
    return std::tie(a.deg, a.i, a.j) > std::tie(b.deg, b.i, b.j);
  }
};

// Buchberger engine; optionally tracks expressions of basis elements in the
// input generators (needed to pull kernels back to presentation coordinates).
class Engine {
 public:
  Engine(const PolyRing& R, const FreeModule& F, const GBLimits& lim,
         bool track)
      : R_(R), F_(F), lim_(lim), track_(track), base_shift_(min_shift(F)) {}

  // Returns the surviving input indices (zero inputs are dropped).
  std::vector<int> init(const std::vector<Vec>& gens) {
    std::vector<int> live;
    n_inputs_ = static_cast<int>(gens.size());
    for (int i = 0; i < n_inputs_; ++i) {
      Vec v = vec_normalize(R_, std::vector<MTerm>(gens[i].t));
      if (v.is_zero()) continue;
      vec_degree_homog(v, F_);  // validates homogeneity
      check_degree(v);          // inputs are basis elements too
      std::vector<Poly> e;
      if (track_) {
        e.assign(n_inputs_, Poly::zero());
        e[i] = Poly::constant(1);
      }
      push_element(std::move(v), std::move(e));
      live.push_back(i);
    }
    return live;
  }

  void run() {
    while (!pairs_.empty()) {
      SPair p = pairs_.top();
      pairs_.pop();
      if (++pairs_done_ > lim_.pair_limit)
        throw PairLimitExceeded(lim_.pair_limit,
                                "buchberger: S-pair limit exceeded");
      const MTerm& li = g_[p.i].lead();
      const MTerm& lj = g_[p.j].lead();
      // Buchberger's coprimality criterion is only valid for ideals (rank 1).
      if (F_.rank() == 1 && mono_coprime(li.m, lj.m)) continue;
      Monomial L = mono_lcm(li.m, lj.m);
      Monomial fi = mono_quot(L, li.m), fj = mono_quot(L, lj.m);
      Vec s = vec_axpy(R_, Vec::zero(), Rational(1) / li.c, fi, g_[p.i]);
      s = vec_axpy(R_, s, Rational(-1) / lj.c, fj, g_[p.j]);
      std::vector<Poly> es;
      if (track_) {
        es.assign(n_inputs_, Poly::zero());
        for (int k = 0; k < n_inputs_; ++k) {
          es[k] = poly_axpy(R_, es[k], Rational(1) / li.c, fi, expr_[p.i][k]);
          es[k] = poly_axpy(R_, es[k], Rational(-1) / lj.c, fj, expr_[p.j][k]);
        }
      }
      reduce(s, track_ ? &es : nullptr, all_indices());
      if (s.is_zero()) continue;
      check_degree(s);
      push_element(std::move(s), std::move(es));
    }
  }

  // Minimal leads + full tail reduction + monic + canonical sort.
  void interreduce() {
    const int n = static_cast<int>(g_.size());
    std::vector<char> alive(n, 1);
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (int j = 0; j < n && alive[i]; ++j) {
        if (i == j || !alive[j]) continue;
        const MTerm& li = g_[i].lead();
        const MTerm& lj = g_[j].lead();
        if (lj.comp != li.comp || !mono_divides(lj.m, li.m)) continue;
        if (lj.m == li.m) {
          alive[std::max(i, j)] = 0;  // equal leads: keep the earlier one
        } else {
          alive[i] = 0;
        }
      }
    }
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (alive[i]) idx.push_back(i);
    for (int i : idx) {
      std::vector<int> others;
      for (int j : idx)
        if (j != i) others.push_back(j);
      Vec v = g_[i];
      reduce(v, track_ ? &expr_[i] : nullptr, others);
      g_[i] = std::move(v);  // lead is not divisible by others, so it survives
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const MTerm& la = g_[a].lead();
      const MTerm& lb = g_[b].lead();
      return mterm_cmp(R_, la.m, la.comp, lb.m, lb.comp) > 0;
    });
    std::vector<Vec> ng;
    std::vector<std::vector<Poly>> ne;
    for (int i : idx) {
      ng.push_back(std::move(g_[i]));
      if (track_) ne.push_back(std::move(expr_[i]));
    }
    g_ = std::move(ng);
    expr_ = std::move(ne);
  }

  std::vector<Vec> take_basis() { return std::move(g_); }
  std::vector<std::vector<Poly>> take_expr() { return std::move(expr_); }

 private:
  std::vector<int> all_indices() const {
    std::vector<int> idx(g_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    return idx;
  }

  void check_degree(const Vec& v) {
    int d = vec_degree_homog(v, F_) - base_shift_;
    if (d > lim_.degree_cap)
      throw DegreeCapExceeded(d, lim_.degree_cap,
                              "buchberger: degree cap exceeded");
  }

  // Fully reduces v (and its expression) by the elements g_[k], k in idx.
  void reduce(Vec& v, std::vector<Poly>* ev, const std::vector<int>& idx) {
    std::vector<MTerm> rem;
    while (!v.is_zero()) {
      const MTerm t = v.lead();
      bool fired = false;
      for (int k : idx) {
        const MTerm& lt = g_[k].lead();
        if (lt.comp != t.comp || !mono_divides(lt.m, t.m)) continue;
        Rational c = t.c / lt.c;
        Monomial m = mono_quot(t.m, lt.m);
        v = vec_axpy(R_, v, -c, m, g_[k]);
        if (ev)
          for (int i = 0; i < n_inputs_; ++i)
            (*ev)[i] = poly_axpy(R_, (*ev)[i], -c, m, expr_[k][i]);
        fired = true;
        break;
      }
      if (!fired) {
        rem.push_back(t);
        v.t.erase(v.t.begin());
      }
    }
    v.t = std::move(rem);  // already in decreasing order
  }

  void push_element(Vec v, std::vector<Poly> e) {
    const Rational lc = v.lead().c;
    if (lc != 1) {
      v = vec_scale(v, Rational(1) / lc);
      if (track_)
        for (Poly& p : e) p = poly_scale(p, Rational(1) / lc);
    }
    int k = static_cast<int>(g_.size());
    for (int i = 0; i < k; ++i)
      if (g_[i].lead().comp == v.lead().comp)
        pairs_.push({pair_degree(g_[i], v), i, k});
    g_.push_back(std::move(v));
    if (track_) expr_.push_back(std::move(e));
  }

  int pair_degree(const Vec& a, const Vec& b) const {
    Monomial L = mono_lcm(a.lead().m, b.lead().m);
    return 2 * L.total() + F_.shifts[a.lead().comp];
  }

  const PolyRing& R_;
  const FreeModule& F_;
  const GBLimits& lim_;
  bool track_;
  int base_shift_;
  int n_inputs_ = 0;
  std::vector<Vec> g_;
  std::vector<std::vector<Poly>> expr_;
  std::priority_queue<SPair, std::vector<SPair>, SPairLater> pairs_;
  long pairs_done_ = 0;
};

}  // namespace

DivisionResult divide(const PolyRing& R, const Vec& f,
                      const std::vector<Vec>& G) {
  DivisionResult out;
  out.quot.assign(G.size(), Poly::zero());
  std::vector<std::vector<PTerm>> quot_terms(G.size());
  Vec cur = f;
  std::vector<MTerm> rem;
  while (!cur.is_zero()) {
    const MTerm t = cur.lead();
    bool fired = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G[k].is_zero()) continue;
      const MTerm& lt = G[k].lead();
      if (lt.comp != t.comp || !mono_divides(lt.m, t.m)) continue;
      Rational c = t.c / lt.c;
      Monomial m = mono_quot(t.m, lt.m);
      quot_terms[k].push_back({m, c});
      cur = vec_axpy(R, cur, -c, m, G[k]);
      fired = true;
      break;
    }
    if (!fired) {
      rem.push_back(t);
      cur.t.erase(cur.t.begin());
    }
  }
  out.rem.t = std::move(rem);
  for (std::size_t k = 0; k < G.size(); ++k)
    out.quot[k] = poly_normalize(R, std::move(quot_terms[k]));
  return out;
}

Vec normal_form(const PolyRing& R, const Vec& f, const std::vector<Vec>& G) {
  return divide(R, f, G).rem;
}

std::vector<Vec> buchberger(const PolyRing& R, const std::vector<Vec>& gens,
                            const FreeModule& F, const GBLimits& lim) {
  Engine e(R, F, lim, /*track=*/false);
  e.init(gens);
  e.run();
  e.interreduce();
  return e.take_basis();
}

TrackedBasis buchberger_tracked(const PolyRing& R,
                                const std::vector<Vec>& gens,
                                const FreeModule& F, const GBLimits& lim) {
  Engine e(R, F, lim, /*track=*/true);
  e.init(gens);
  e.run();
  e.interreduce();
  return {e.take_basis(), e.take_expr()};
}

std::vector<Vec> syzygy_module(const PolyRing& R, const std::vector<Vec>& G,
                               const FreeModule& F, const GBLimits&) {
  const int n = static_cast<int>(G.size());
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const MTerm& li = G[i].lead();
      const MTerm& lj = G[j].lead();
      if (li.comp != lj.comp) continue;
      Monomial L = mono_lcm(li.m, lj.m);
      Monomial fi = mono_quot(L, li.m), fj = mono_quot(L, lj.m);
      Vec s = vec_axpy(R, Vec::zero(), Rational(1) / li.c, fi, G[i]);
      s = vec_axpy(R, s, Rational(-1) / lj.c, fj, G[j]);
      DivisionResult d = divide(R, s, G);
      if (!d.rem.is_zero())
        throw BadInput("syzygy_module: input is not a Groebner basis");
      std::vector<Poly> coords(n);
      coords[i] = Poly::term(fi, Rational(1) / li.c);
      coords[j] = poly_add(R, coords[j],
                           Poly::term(fj, Rational(-1) / lj.c));
      for (int k = 0; k < n; ++k)
        coords[k] = poly_axpy(R, coords[k], Rational(-1), Monomial::one(),
                              d.quot[k]);
      Vec syz = vec_from_coords(R, coords);
      if (!syz.is_zero()) out.push_back(std::move(syz));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    const MTerm& la = a.lead();
    const MTerm& lb = b.lead();
    return mterm_cmp(R, la.m, la.comp, lb.m, lb.comp) > 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vec> kernel(const PolyRing& R, const std::vector<Vec>& gens,
                        const FreeModule& F, const GBLimits& lim) {
  const int s = static_cast<int>(gens.size());
  std::vector<Vec> out;
  std::vector<Vec> live;
  std::vector<int> live_idx;
  for (int i = 0; i < s; ++i) {
    Vec v = vec_normalize(R, std::vector<MTerm>(gens[i].t));
    if (v.is_zero()) {
      out.push_back(Vec::unit(i));
    } else {
      live.push_back(std::move(v));
      live_idx.push_back(i);
    }
  }
  if (!live.empty()) {
    TrackedBasis tb = buchberger_tracked(R, live, F, lim);
    // Schreyer syzygies of the basis, pulled back to input coordinates.
    std::vector<Vec> syz = syzygy_module(R, tb.g, F, lim);
    for (const Vec& w : syz) {
      std::vector<Poly> coords(s);
      for (const MTerm& t : w.t)
        for (std::size_t p = 0; p < live.size(); ++p)
          coords[live_idx[p]] = poly_axpy(R, coords[live_idx[p]], t.c, t.m,
                                          tb.expr[t.comp][static_cast<int>(p)]);
      Vec v = vec_from_coords(R, coords);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
    // e_i - (expression of gens[i] through the basis): kills redundant inputs.
    for (std::size_t p = 0; p < live.size(); ++p) {
      DivisionResult d = divide(R, live[p], tb.g);
      if (!d.rem.is_zero())
        throw BadInput("kernel: generator failed to reduce against own basis");
      std::vector<Poly> coords(s);
      coords[live_idx[p]] = Poly::constant(1);
      for (std::size_t k = 0; k < tb.g.size(); ++k)
        for (std::size_t q = 0; q < live.size(); ++q) {
          Poly prod = poly_mul(R, d.quot[k], tb.expr[k][static_cast<int>(q)]);
          coords[live_idx[q]] =
              poly_axpy(R, coords[live_idx[q]], Rational(-1), Monomial::one(),
                        prod);
        }
      Vec v = vec_from_coords(R, coords);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    const MTerm& la = a.lead();
    const MTerm& lb = b.lead();
    return mterm_cmp(R, la.m, la.comp, lb.m, lb.comp) > 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> minimal_generator_indices(const PolyRing& R,
                                           const std::vector<Vec>& elems,
                                           const FreeModule& F,
                                           const GBLimits& lim) {
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (!elems[i].is_zero()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return vec_degree_homog(elems[a], F) < vec_degree_homog(elems[b], F);
  });
  std::vector<int> kept;
  std::vector<Vec> basis;
  for (int i : order) {
    if (!kept.empty() && normal_form(R, elems[i], basis).is_zero()) continue;
    kept.push_back(i);
    basis.push_back(elems[i]);
    basis = buchberger(R, basis, F, lim);
  }
  return kept;
}

}  // namespace bps
