#pragma once

#include <map>
#include <string>

#include "bps/rational.hpp"

namespace bps {

// Sparse Laurent polynomial in one variable x with Integer coefficients.
// Used for Poincare polynomials and Hilbert-series numerators; exponents may
// be negative (cohomological degree shifts).
struct Laurent {
  std::map<int, Integer> c;  // exponent -> nonzero coefficient

  static Laurent monomial(int e, Integer coeff = 1) {
    Laurent p;
    if (coeff != 0) p.c[e] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return c.empty(); }

  Integer coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? Integer(0) : it->second;
  }

  void add_term(int e, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = c.emplace(e, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) c.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, v] : o.c) add_term(e, v);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [e, v] : o.c) add_term(e, -v);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (auto& [ea, va] : a.c)
      for (auto& [eb, vb] : b.c) p.add_term(ea + eb, va * vb);
    return p;
  }

  // Multiplication by x^e.
  Laurent shifted(int e) const {
    Laurent p;
    for (auto& [d, v] : c) p.c[d + e] = v;
    return p;
  }

  Integer value_at_one() const {
    Integer s = 0;
    for (auto& [e, v] : c) s += v;
    return s;
  }

  int min_degree() const { return c.empty() ? 0 : c.begin()->first; }
  int max_degree() const { return c.empty() ? 0 : c.rbegin()->first; }

  // x^dim * p(1/x) == p(x)?
  bool is_palindromic(int dim) const {
    for (auto& [e, v] : c)
      if (coeff(dim - e) != v) return false;
    return true;
  }

  bool operator==(const Laurent& o) const { return c == o.c; }

  // Human-readable form, ascending exponents: "1 + 3*x^3 - x^7".
  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, v] : c) {
      Integer av = v < 0 ? Integer(-v) : v;
      if (first) {
        if (v < 0) s += "-";
        first = false;
      } else {
        s += v < 0 ? " - " : " + ";
      }
      bool unit = (av == 1);
      if (e == 0) {
        s += av.str();
      } else {
        if (!unit) s += av.str() + "*";
        s += "x";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

  static Laurent one() { return monomial(0); }

  // (1 - x^e)^n
  static Laurent power_of_one_minus(int e, int n) {
    Laurent base = one();
    base.add_term(e, -1);
    Laurent p = one();
    for (int i = 0; i < n; ++i) p = p * base;
    return p;
  }
};

// Hilbert series of a graded module over k[t_1..t_r]: num / (1-x^2)^r.
// Two series with the same r are equal as rational functions iff the
// numerators coincide, so no normalization is needed.
struct HilbertSeries {
  Laurent num;
  int r = 0;

  HilbertSeries shifted(int e) const { return {num.shifted(e), r}; }
  HilbertSeries& operator+=(const HilbertSeries& o) {
    num += o.num;
    return *this;
  }
  bool operator==(const HilbertSeries& o) const {
    return r == o.r && num == o.num;
  }
  std::string str() const {
    return "(" + num.str() + ") / (1-x^2)^" + std::to_string(r);
  }
};

}  // namespace bps
