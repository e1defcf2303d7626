#ifndef MORLEY_LAURENT_HPP
#define MORLEY_LAURENT_HPP

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morley/cyclotomic.hpp"

namespace morley {

// sin or cos of a*x + b*y + k*pi/6.
struct TrigAtom {
  TrigKind kind;
  int a = 0;
  int b = 0;
  int k = 0;

  double eval(double x, double y) const {
    double arg = a * x + b * y + k * 3.14159265358979323846 / 6.0;
    return kind == TrigKind::sin ? std::sin(arg) : std::cos(arg);
  }
};

// Laurent polynomial in z = e^{ix}, w = e^{iy} over Q(zeta_12). Exponents may
// be negative; no zero coefficients stored.
class LaurentPoly2 {
 public:
  using TermMap = std::map<std::pair<int, int>, CycloNum>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(CycloNum c) {
    LaurentPoly2 p;
    p.add(0, 0, std::move(c));
    return p;
  }
  static LaurentPoly2 monomial(int a, int b, CycloNum c) {
    LaurentPoly2 p;
    p.add(a, b, std::move(c));
    return p;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(int a, int b, const CycloNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  LaurentPoly2 operator-() const {
    LaurentPoly2 r;
    for (const auto& [ab, c] : t_) r.t_.emplace(ab, -c);
    return r;
  }
  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [ab, c] : o.t_) add(ab.first, ab.second, c);
    return *this;
  }
  LaurentPoly2& operator-=(const LaurentPoly2& o) {
    for (const auto& [ab, c] : o.t_) add(ab.first, ab.second, -c);
    return *this;
  }
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }

  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_)
        r.add(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return r;
  }
  LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a.t_ == b.t_;
  }

  std::complex<double> eval(double x, double y) const {
    std::complex<double> acc(0, 0);
    for (const auto& [ab, c] : t_) {
      double ang = ab.first * x + ab.second * y;
      acc += c.to_complex() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [ab, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*z^" + std::to_string(ab.first) + "*w^" +
             std::to_string(ab.second);
    }
    return out;
  }

 private:
  TermMap t_;
};

// Exponential compilation: with Z = zeta^k z^a w^b,
//   cos -> (Z + Z^-1)/2,   sin -> (Z - Z^-1)/(2i) = (Z - Z^-1) * (-zeta^3/2).
inline LaurentPoly2 compile(const TrigAtom& atom) {
  LaurentPoly2 zpos = LaurentPoly2::monomial(atom.a, atom.b, CycloNum::zeta_pow(atom.k));
  LaurentPoly2 zneg = LaurentPoly2::monomial(-atom.a, -atom.b, CycloNum::zeta_pow(-atom.k));
  if (atom.kind == TrigKind::cos) {
    LaurentPoly2 sum = zpos + zneg;
    LaurentPoly2 r;
    for (const auto& [ab, c] : sum.terms()) r.add(ab.first, ab.second, c * Rational(1, 2));
    return r;
  }
  LaurentPoly2 diff = zpos - zneg;
  CycloNum half_over_i = CycloNum::zeta_pow(3) * Rational(-1, 2);
  LaurentPoly2 r;
  for (const auto& [ab, c] : diff.terms()) r.add(ab.first, ab.second, c * half_over_i);
  return r;
}

// One signed product of trig atoms (an atom may repeat for powers).
struct TrigProduct {
  long scalar = 1;
  std::vector<TrigAtom> factors;

  LaurentPoly2 compiled() const {
    LaurentPoly2 acc = LaurentPoly2::constant(CycloNum(Rational(scalar)));
    for (const auto& f : factors) acc *= compile(f);
    return acc;
  }
  double eval(double x, double y) const {
    double acc = static_cast<double>(scalar);
    for (const auto& f : factors) acc *= f.eval(x, y);
    return acc;
  }
};

// The cleared-denominator side-difference expression at the trisector point,
// written in x = alpha/3, y = beta/3 so that all arguments live on the pi/6
// lattice with integer (x, y) coefficients.
inline std::vector<TrigProduct> trisector_identity_terms() {
  const TrigAtom sinx{TrigKind::sin, 1, 0, 0};
  const TrigAtom siny{TrigKind::sin, 0, 1, 0};
  const TrigAtom sin3x{TrigKind::sin, 3, 0, 0};
  const TrigAtom sin3y{TrigKind::sin, 0, 3, 0};
  const TrigAtom sinxy{TrigKind::sin, 1, 1, 0};
  const TrigAtom sin3xy{TrigKind::sin, 3, 3, 0};
  const TrigAtom cosy{TrigKind::cos, 0, 1, 0};
  const TrigAtom cos6x{TrigKind::cos, 1, 0, 1};    // cos(pi/6 + x)
  const TrigAtom cos6y{TrigKind::cos, 0, 1, 1};    // cos(pi/6 + y)
  const TrigAtom cos6xy{TrigKind::cos, 1, 1, 1};   // cos(pi/6 + x + y)
  const TrigAtom sin6xy{TrigKind::sin, 1, 1, 1};   // sin(pi/6 + x + y)

  return {
      {+1, {sinx, sinx, sin3xy, sin3xy, cos6x, cos6x, cos6y, cos6y}},
      {+1, {sin3x, sin3x, cos6xy, cos6xy, sinxy, sinxy, cos6y, cos6y}},
      {-2, {sinx, sin3x, cos6xy, cosy, sinxy, sin3xy, cos6x, cos6y, cos6y}},
      {-1, {sin3x, sin3x, siny, siny, sinxy, sinxy, cos6y, cos6y}},
      {-1, {sin3y, sin3y, sinx, sinx, sinxy, sinxy, cos6x, cos6x}},
      {+2, {sin3x, siny, sin3y, sinx, sin6xy, sinxy, sinxy, cos6x, cos6y}},
  };
}

struct IdentityCheck {
  bool ok;
  LaurentPoly2 residue;  // nonzero witness when the identity fails
};

// Compiles the trisector expression and checks that every Laurent
// coefficient vanishes — an exact, tolerance-free zero test.
inline IdentityCheck verify_morley_identity(
    const std::vector<TrigProduct>& terms = trisector_identity_terms()) {
  LaurentPoly2 total;
  for (const auto& t : terms) total += t.compiled();
  return {total.is_zero(), total};
}

}  // namespace morley

#endif  // MORLEY_LAURENT_HPP
