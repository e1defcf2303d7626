#ifndef MORLEY_QUADEXT_HPP
#define MORLEY_QUADEXT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "morley/rational.hpp"

namespace morley {

namespace detail {

// n = e^2 * d with d square-free, by trial division. The discriminants that
// reach this are small (tens of bits), so quadratic trial division is fine.
inline void square_free_split(mpz_class n, mpz_class& e, mpz_class& d) {
  e = 1;
  d = 1;
  if (n == 0) {
    e = 0;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(e.get_mpz_t(), n.get_mpz_t());
    return;
  }
  for (mpz_class f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      e *= f;
    }
  }
  d = n;
}

}  // namespace detail

// (p + q*sqrt(d)) / r with p, q, r rational, r > 0 and d a square-free
// positive integer; d = 1 encodes a plain rational. Arithmetic is closed for
// a fixed d.
struct QuadExt {
  Rational p, q, r;
  long d = 1;

  QuadExt() : p(0), q(0), r(1) {}
  QuadExt(Rational p_, Rational q_, Rational r_, long d_)
      : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), d(d_) {
    if (r.is_zero()) throw std::invalid_argument("QuadExt: zero r");
    if (d <= 0) throw std::invalid_argument("QuadExt: d must be positive");
    normalize();
  }
  static QuadExt rational(Rational x) {
    return QuadExt(std::move(x), Rational(0), Rational(1), 1);
  }

  void normalize() {
    if (r.sign() < 0) {
      p = -p;
      q = -q;
      r = -r;
    }
    if (d == 1) {  // fold sqrt(1) into the rational part
      p += q;
      q = Rational(0);
    }
  }

  bool is_rational() const { return q.is_zero(); }
  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("QuadExt: not rational");
    return p / r;
  }

  // Rational and irrational components: value = a + b*sqrt(d).
  Rational a() const { return p / r; }
  Rational b() const { return q / r; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (!x.b().is_zero() && !y.b().is_zero() && x.d != y.d) return false;
    return x.a() == y.a() && x.b() == y.b();
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  static long common_d(const QuadExt& x, const QuadExt& y) {
    if (x.b().is_zero()) return y.d;
    if (y.b().is_zero()) return x.d;
    if (x.d != y.d) throw std::invalid_argument("QuadExt: mixed radicands");
    return x.d;
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    long d = common_d(x, y);
    return QuadExt(x.a() + y.a(), x.b() + y.b(), Rational(1), d);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    long d = common_d(x, y);
    return QuadExt(x.a() - y.a(), x.b() - y.b(), Rational(1), d);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long d = common_d(x, y);
    Rational a = x.a() * y.a() + x.b() * y.b() * Rational(d);
    Rational b = x.a() * y.b() + x.b() * y.a();
    return QuadExt(a, b, Rational(1), d);
  }
  friend QuadExt operator*(const QuadExt& x, const Rational& s) {
    return QuadExt(x.a() * s, x.b() * s, Rational(1), x.d);
  }
  QuadExt operator-() const { return QuadExt(-a(), -b(), Rational(1), d); }

  bool is_zero() const { return a().is_zero() && b().is_zero(); }

  // Exact sign of a + b*sqrt(d).
  int sign() const {
    Rational pa = a(), pb = b();
    int sa = pa.sign(), sb = pb.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2*d.
    int cmp = (pa * pa - pb * pb * Rational(d)).sign();
    return cmp == 0 ? 0 : cmp * sa;
  }

  std::string str() const {
    if (is_rational()) return rational_value().str();
    std::string out = a().str();
    Rational bb = b();
    out += bb.sign() < 0 ? " - " : " + ";
    out += bb.abs().str() + "*sqrt(" + std::to_string(d) + ")";
    return out;
  }
};

// Exact roots of a*t^2 + b*t + c (a != 0). Returns both roots when the
// discriminant is nonnegative, nothing when it is negative.
inline std::vector<QuadExt> quad_roots(const Rational& a, const Rational& b,
                                       const Rational& c) {
  if (a.is_zero()) throw std::invalid_argument("quad_roots: a == 0");
  Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return {};
  // sqrt(n/m) = sqrt(n*m)/m.
  mpz_class nm = disc.num() * disc.den();
  mpz_class e, d;
  detail::square_free_split(nm, e, d);
  Rational root_rat_part(e, disc.den());  // sqrt(disc) = root_rat_part*sqrt(d)
  Rational two_a = Rational(2) * a;
  long dl = d.get_si();
  if (d == 1) {
    Rational sq(e, disc.den());
    return {QuadExt::rational((-b + sq) / two_a),
            QuadExt::rational((-b - sq) / two_a)};
  }
  return {QuadExt(-b / two_a, root_rat_part / two_a, Rational(1), dl),
          QuadExt(-b / two_a, -(root_rat_part / two_a), Rational(1), dl)};
}

}  // namespace morley

#endif  // MORLEY_QUADEXT_HPP
