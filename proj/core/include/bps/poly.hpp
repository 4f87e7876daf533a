#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bps/rational.hpp"
#include "bps/subset.hpp"

namespace bps {

// Monomial in t_1..t_n, n <= kMaxRank. The generators t_j have cohomological
// degree 2, so a monomial of exponent sum s sits in degree 2s.
struct Monomial {
  std::array<std::uint16_t, kMaxRank> e{};

  bool operator==(const Monomial& o) const { return e == o.e; }
  int total() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  static Monomial one() { return {}; }
  // t_{i+1}^p for 0-based variable index i.
  static Monomial var(int i, int p = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(p);
    return m;
  }
};

enum class MonoOrder { DegRevLex, Lex };

struct PolyRing {
  int n = 0;  // number of variables t_1..t_n
  MonoOrder order = MonoOrder::DegRevLex;
  bool operator==(const PolyRing& o) const {
    return n == o.n && order == o.order;
  }
};

// -1 / 0 / +1 for a < b / a == b / a > b in the ring's monomial order.
inline int mono_cmp(const PolyRing& R, const Monomial& a, const Monomial& b) {
  if (R.order == MonoOrder::DegRevLex) {
    int da = a.total(), db = b.total();
    if (da != db) return da < db ? -1 : 1;
    for (int i = R.n - 1; i >= 0; --i) {
      int d = int(a.e[i]) - int(b.e[i]);
      if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
  }
  for (int i = 0; i < R.n; ++i) {
    int d = int(a.e[i]) - int(b.e[i]);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxRank; ++i)
    m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return m;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (int i = 0; i < kMaxRank; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_quot(const Monomial& b, const Monomial& a) {  // b / a
  Monomial m;
  for (int i = 0; i < kMaxRank; ++i)
    m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxRank; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxRank; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

struct PTerm {
  Monomial m;
  Rational c;
};

// Sparse polynomial: terms sorted strictly decreasing in the ring's order,
// no zero coefficients.
struct Poly {
  std::vector<PTerm> t;

  bool is_zero() const { return t.empty(); }
  const PTerm& lead() const { return t.front(); }
  static Poly zero() { return {}; }
  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.t.push_back({Monomial::one(), c});
    return p;
  }
  static Poly term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.t.push_back({m, c});
    return p;
  }
  bool operator==(const Poly& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
    return true;
  }
};

// Sorts terms, merges duplicates, drops zeros.
Poly poly_normalize(const PolyRing& R, std::vector<PTerm> terms);
Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
// a + c * x^m * b
Poly poly_axpy(const PolyRing& R, const Poly& a, const Rational& c,
               const Monomial& m, const Poly& b);
Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);

// Homogeneous internal (cohomological) degree: 2 * exponent sum, equal across
// terms; -1 for the zero polynomial. Throws BadInput if not homogeneous.
int poly_degree_homog(const Poly& p);

// "3/2*t1^2*t3 - t2" with terms in the ring's order.
std::string poly_str(const Poly& p);

// ---------------------------------------------------------------------------
// Graded free modules and their elements.

// Free module with generator degree shifts (cohomological): generator i sits
// in degree shifts[i], and HS(R[l]) = x^l / (1-x^2)^r.
struct FreeModule {
  std::vector<int> shifts;
  int rank() const { return static_cast<int>(shifts.size()); }
  static FreeModule trivial(int rank) {
    return FreeModule{std::vector<int>(rank, 0)};
  }
  bool operator==(const FreeModule& o) const { return shifts == o.shifts; }
};

// Module term c * x^m * e_comp.
struct MTerm {
  Monomial m;
  int comp = 0;
  Rational c;
};

// Element of a free module: terms sorted strictly decreasing in the module
// order (term over position, ties to the smaller generator index).
struct Vec {
  std::vector<MTerm> t;

  bool is_zero() const { return t.empty(); }
  const MTerm& lead() const { return t.front(); }
  static Vec zero() { return {}; }
  static Vec unit(int comp) {
    Vec v;
    v.t.push_back({Monomial::one(), comp, Rational(1)});
    return v;
  }
  bool operator==(const Vec& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!(t[i].m == o.t[i].m) || t[i].comp != o.t[i].comp ||
          t[i].c != o.t[i].c)
        return false;
    return true;
  }
};

// Module order: monomial order first, then smaller component index wins.
inline int mterm_cmp(const PolyRing& R, const Monomial& ma, int ca,
                     const Monomial& mb, int cb) {
  int c = mono_cmp(R, ma, mb);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

Vec vec_normalize(const PolyRing& R, std::vector<MTerm> terms);
Vec vec_add(const PolyRing& R, const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Vec& a, const Rational& c);
// a + c * x^m * b
Vec vec_axpy(const PolyRing& R, const Vec& a, const Rational& c,
             const Monomial& m, const Vec& b);
// a + p * b for a polynomial p
Vec vec_axpy_poly(const PolyRing& R, const Vec& a, const Poly& p, const Vec& b);

// Assemble from one polynomial per component / split back.
Vec vec_from_coords(const PolyRing& R, const std::vector<Poly>& coords);
std::vector<Poly> vec_to_coords(const PolyRing& R, const Vec& v, int rank);

// Homogeneous degree of v in F: 2*deg(m) + F.shifts[comp], equal across terms.
// Throws BadInput if not homogeneous; returns fallback for the zero element.
int vec_degree_homog(const Vec& v, const FreeModule& F, int fallback = 0);
bool vec_is_homogeneous(const Vec& v, const FreeModule& F);

// "t2^2*e1 - t1*e2" with e-labels 1-based.
std::string vec_str(const Vec& v);

}  // namespace bps
