#ifndef MORLEY_RATFUNC_HPP
#define MORLEY_RATFUNC_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morley/multipoly.hpp"
#include "morley/poly_ops.hpp"

namespace morley {

// Quotient of two polynomials. Normalization removes the rational content of
// the denominator (making it a primitive integer polynomial with positive
// leading coefficient) and rescales the numerator to keep the value; no
// multivariate gcd is attempted — equality is always by cross-multiplication.
struct RatFunc {
  MultiPoly num;
  MultiPoly den = MultiPoly::constant(Rational(1));

  RatFunc() = default;
  RatFunc(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
  }
  static RatFunc from_poly(MultiPoly p) {
    return RatFunc(std::move(p), MultiPoly::constant(Rational(1)));
  }
  static RatFunc constant(Rational r) {
    return from_poly(MultiPoly::constant(std::move(r)));
  }

  void normalize() {
    Rational c = den.content();
    if (!c.is_one()) {
      Rational inv = c.inv();
      den *= inv;
      num *= inv;
    }
  }

  bool is_zero() const { return num.is_zero(); }

  RatFunc operator-() const {
    RatFunc r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
  }

  std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

// a == b as rational functions: exact cross-multiplication.
inline bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
  return a.num * b.den == b.num * a.den;
}

// Equality in the quotient ring where S_i = s_i^2 and C_i = c_i^2 are
// identified with the squares they abbreviate.
inline bool ratfunc_equal_caps(const RatFunc& a, const RatFunc& b) {
  return expand_caps(a.num * b.den) == expand_caps(b.num * a.den);
}

// Solves c1*var + c0 = 0 for var; p must have degree exactly 1 in var.
inline RatFunc solve_linear(const MultiPoly& p, Var var) {
  if (p.degree_in(var) != 1)
    throw std::invalid_argument("solve_linear: degree in variable is not 1");
  MultiPoly c1, c0;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int e = rest.e[index_of(var)];
    rest.e[index_of(var)] = 0;
    if (e == 1)
      c1.add_term(rest, c);
    else
      c0.add_term(rest, c);
  }
  return RatFunc(-c0, c1);
}

// Evaluates p with some variables bound to rational functions (a ring
// homomorphism into the fraction field). Unbound variables stay symbolic.
// Works over the common denominator prod_v den_v^{deg_v(p)} so the result
// does not accumulate one denominator factor per term.
inline RatFunc substitute_ratfunc(const MultiPoly& p,
                                  const std::map<Var, RatFunc>& bindings) {
  struct Bound {
    Var v;
    int deg;
    std::vector<MultiPoly> num_pow, den_pow;  // index = exponent
  };
  std::vector<Bound> bound;
  for (const auto& [v, rf] : bindings) {
    int d = p.degree_in(v);
    if (d == 0) continue;
    Bound b{v, d, {MultiPoly::constant(Rational(1))}, {MultiPoly::constant(Rational(1))}};
    for (int k = 1; k <= d; ++k) {
      b.num_pow.push_back(b.num_pow.back() * rf.num);
      b.den_pow.push_back(b.den_pow.back() * rf.den);
    }
    bound.push_back(std::move(b));
  }

  MultiPoly num_acc;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    MultiPoly term = MultiPoly::constant(c);
    for (const auto& b : bound) {
      int e = rest.e[index_of(b.v)];
      rest.e[index_of(b.v)] = 0;
      term *= b.num_pow[static_cast<size_t>(e)];
      term *= b.den_pow[static_cast<size_t>(b.deg - e)];
    }
    num_acc += term * MultiPoly::term(Rational(1), rest);
  }
  MultiPoly den_acc = MultiPoly::constant(Rational(1));
  for (const auto& b : bound) den_acc *= b.den_pow[static_cast<size_t>(b.deg)];
  return RatFunc(std::move(num_acc), std::move(den_acc));
}

// Substitution into an existing quotient, num and den separately.
inline RatFunc substitute_ratfunc(const RatFunc& f,
                                  const std::map<Var, RatFunc>& bindings) {
  RatFunc n = substitute_ratfunc(f.num, bindings);
  RatFunc d = substitute_ratfunc(f.den, bindings);
  return n / d;
}

}  // namespace morley

#endif  // MORLEY_RATFUNC_HPP
