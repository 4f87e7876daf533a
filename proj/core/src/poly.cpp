#include "bps/poly.hpp"

#include <algorithm>

#include "bps/errors.hpp"

namespace bps {

Poly poly_normalize(const PolyRing& R, std::vector<PTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const PTerm& a, const PTerm& b) {
    return mono_cmp(R, a.m, b.m) > 0;
  });
  Poly p;
  for (PTerm& t : terms) {
    if (t.c == 0) continue;
    if (!p.t.empty() && p.t.back().m == t.m) {
      p.t.back().c += t.c;
      if (p.t.back().c == 0) p.t.pop_back();
    } else {
      p.t.push_back(std::move(t));
    }
  }
  return p;
}

Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b) {
  return poly_axpy(R, a, Rational(1), Monomial::one(), b);
}

Poly poly_neg(const Poly& a) {
  Poly p = a;
  for (PTerm& t : p.t) t.c = -t.c;
  return p;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (c == 0) return Poly::zero();
  Poly p = a;
  for (PTerm& t : p.t) t.c *= c;
  return p;
}

Poly poly_axpy(const PolyRing& R, const Poly& a, const Rational& c,
               const Monomial& m, const Poly& b) {
  if (c == 0 || b.is_zero()) return a;
  Poly out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      out.t.push_back(a.t[i++]);
      continue;
    }
    Monomial bm = mono_mul(m, b.t[j].m);
    if (i == a.t.size()) {
      out.t.push_back({bm, c * b.t[j].c});
      if (out.t.back().c == 0) out.t.pop_back();
      ++j;
      continue;
    }
    int cmp = mono_cmp(R, a.t[i].m, bm);
    if (cmp > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      out.t.push_back({bm, c * b.t[j].c});
      if (out.t.back().c == 0) out.t.pop_back();
      ++j;
    } else {
      Rational v = a.t[i].c + c * b.t[j].c;
      if (v != 0) out.t.push_back({a.t[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b) {
  Poly out;
  for (const PTerm& t : a.t) out = poly_axpy(R, out, t.c, t.m, b);
  return out;
}

int poly_degree_homog(const Poly& p) {
  if (p.is_zero()) return -1;
  int d = 2 * p.t.front().m.total();
  for (const PTerm& t : p.t)
    if (2 * t.m.total() != d) throw BadInput("polynomial is not homogeneous");
  return d;
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const PTerm& t : p.t) {
    Rational av = t.c < 0 ? Rational(-t.c) : t.c;
    if (first) {
      if (t.c < 0) s += "-";
      first = false;
    } else {
      s += t.c < 0 ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < kMaxRank; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(i + 1);
      if (t.m.e[i] > 1) vars += "^" + std::to_string(t.m.e[i]);
    }
    if (vars.empty()) {
      s += to_string(av);
    } else {
      if (av != 1) s += to_string(av) + "*";
      s += vars;
    }
  }
  return s;
}

Vec vec_normalize(const PolyRing& R, std::vector<MTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
    return mterm_cmp(R, a.m, a.comp, b.m, b.comp) > 0;
  });
  Vec v;
  for (MTerm& t : terms) {
    if (t.c == 0) continue;
    if (!v.t.empty() && v.t.back().m == t.m && v.t.back().comp == t.comp) {
      v.t.back().c += t.c;
      if (v.t.back().c == 0) v.t.pop_back();
    } else {
      v.t.push_back(std::move(t));
    }
  }
  return v;
}

Vec vec_add(const PolyRing& R, const Vec& a, const Vec& b) {
  return vec_axpy(R, a, Rational(1), Monomial::one(), b);
}

Vec vec_neg(const Vec& a) {
  Vec v = a;
  for (MTerm& t : v.t) t.c = -t.c;
  return v;
}

Vec vec_scale(const Vec& a, const Rational& c) {
  if (c == 0) return Vec::zero();
  Vec v = a;
  for (MTerm& t : v.t) t.c *= c;
  return v;
}

Vec vec_axpy(const PolyRing& R, const Vec& a, const Rational& c,
             const Monomial& m, const Vec& b) {
  if (c == 0 || b.is_zero()) return a;
  Vec out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      out.t.push_back(a.t[i++]);
      continue;
    }
    Monomial bm = mono_mul(m, b.t[j].m);
    if (i == a.t.size()) {
      out.t.push_back({bm, b.t[j].comp, c * b.t[j].c});
      if (out.t.back().c == 0) out.t.pop_back();
      ++j;
      continue;
    }
    int cmp = mterm_cmp(R, a.t[i].m, a.t[i].comp, bm, b.t[j].comp);
    if (cmp > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      out.t.push_back({bm, b.t[j].comp, c * b.t[j].c});
      if (out.t.back().c == 0) out.t.pop_back();
      ++j;
    } else {
      Rational v = a.t[i].c + c * b.t[j].c;
      if (v != 0) out.t.push_back({a.t[i].m, a.t[i].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Vec vec_axpy_poly(const PolyRing& R, const Vec& a, const Poly& p,
                  const Vec& b) {
  Vec out = a;
  for (const PTerm& t : p.t) out = vec_axpy(R, out, t.c, t.m, b);
  return out;
}

Vec vec_from_coords(const PolyRing& R, const std::vector<Poly>& coords) {
  std::vector<MTerm> terms;
  for (int i = 0; i < static_cast<int>(coords.size()); ++i)
    for (const PTerm& t : coords[i].t) terms.push_back({t.m, i, t.c});
  return vec_normalize(R, std::move(terms));
}

std::vector<Poly> vec_to_coords(const PolyRing& R, const Vec& v, int rank) {
  std::vector<std::vector<PTerm>> buckets(rank);
  for (const MTerm& t : v.t) buckets[t.comp].push_back({t.m, t.c});
  std::vector<Poly> out(rank);
  for (int i = 0; i < rank; ++i)
    out[i] = poly_normalize(R, std::move(buckets[i]));
  return out;
}

int vec_degree_homog(const Vec& v, const FreeModule& F, int fallback) {
  if (v.is_zero()) return fallback;
  int d = 2 * v.t.front().m.total() + F.shifts[v.t.front().comp];
  for (const MTerm& t : v.t)
    if (2 * t.m.total() + F.shifts[t.comp] != d)
      throw BadInput("module element is not homogeneous");
  return d;
}

bool vec_is_homogeneous(const Vec& v, const FreeModule& F) {
  if (v.is_zero()) return true;
  int d = 2 * v.t.front().m.total() + F.shifts[v.t.front().comp];
  for (const MTerm& t : v.t)
    if (2 * t.m.total() + F.shifts[t.comp] != d) return false;
  return true;
}

std::string vec_str(const Vec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const MTerm& t : v.t) {
    Rational av = t.c < 0 ? Rational(-t.c) : t.c;
    if (first) {
      if (t.c < 0) s += "-";
      first = false;
    } else {
      s += t.c < 0 ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < kMaxRank; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(i + 1);
      if (t.m.e[i] > 1) vars += "^" + std::to_string(t.m.e[i]);
    }
    if (av != 1) s += to_string(av) + "*";
    if (!vars.empty()) s += vars + "*";
    s += "e" + std::to_string(t.comp + 1);
  }
  return s;
}

}  // namespace bps
