#ifndef MORLEY_CYCLOTOMIC_HPP
#define MORLEY_CYCLOTOMIC_HPP

#include <array>
#include <complex>
#include <cstdlib>
#include <string>

#include "morley/rational.hpp"
#include "morley/variables.hpp"

namespace morley {

// Element of Q(zeta) with zeta a primitive 12th root of unity, stored on the
// basis 1, zeta, zeta^2, zeta^3 and reduced by the minimal polynomial
// zeta^4 = zeta^2 - 1. The field contains i = zeta^3 and sqrt(3) =
// zeta + zeta^-1, so every sin/cos of a multiple of pi/6 lives here exactly.
class CycloNum {
 public:
  CycloNum() = default;
  explicit CycloNum(Rational a0) { c_[0] = std::move(a0); }
  CycloNum(Rational a0, Rational a1, Rational a2, Rational a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static CycloNum zero() { return CycloNum(); }
  static CycloNum one() { return CycloNum(Rational(1)); }

  // zeta^k for any integer k (k is reduced mod 12, then mod the minimal
  // polynomial).
  static CycloNum zeta_pow(long k) {
    long e = k % 12;
    if (e < 0) e += 12;
    bool neg = false;
    if (e >= 6) {  // zeta^6 = -1
      e -= 6;
      neg = true;
    }
    CycloNum r;
    switch (e) {
      case 0: r.c_[0] = 1; break;
      case 1: r.c_[1] = 1; break;
      case 2: r.c_[2] = 1; break;
      case 3: r.c_[3] = 1; break;
      case 4: r.c_[2] = 1; r.c_[0] = -1; break;  // zeta^4 = zeta^2 - 1
      case 5: r.c_[3] = 1; r.c_[1] = -1; break;  // zeta^5 = zeta^3 - zeta
    }
    if (neg) r = -r;
    return r;
  }

  // Exact sin(k*pi/6) / cos(k*pi/6) as field elements.
  static CycloNum cos_pi6(long k) {
    return (zeta_pow(k) + zeta_pow(-k)) * Rational(1, 2);
  }
  static CycloNum sin_pi6(long k) {
    // (zeta^k - zeta^-k) / (2i), with 1/(2i) = -zeta^3/2.
    return (zeta_pow(k) - zeta_pow(-k)) * zeta_pow(3) * Rational(-1, 2);
  }

  const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }

  CycloNum operator-() const {
    return CycloNum(-c_[0], -c_[1], -c_[2], -c_[3]);
  }

  CycloNum& operator+=(const CycloNum& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycloNum& operator-=(const CycloNum& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycloNum& operator*=(const CycloNum& o) {
    // Convolution up to degree 6, then reduce zeta^4..zeta^6.
    std::array<Rational, 7> t;
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) t[i + j] += c_[i] * o.c_[j];
    }
    t[0] -= t[6];               // zeta^6 = -1
    t[3] += t[5]; t[1] -= t[5]; // zeta^5 = zeta^3 - zeta
    t[2] += t[4]; t[0] -= t[4]; // zeta^4 = zeta^2 - 1
    for (int i = 0; i < 4; ++i) c_[i] = t[i];
    return *this;
  }
  CycloNum& operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
  }

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < 4; ++i) {
      double ang = 3.14159265358979323846 * i / 6.0;
      acc += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

  std::string str() const {
    static const char* base[4] = {"", "*z", "*z^2", "*z^3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty() && c_[i].sign() > 0) out += "+";
      out += c_[i].str();
      out += base[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Rational, 4> c_{};
};

enum class CycloOp { add, mul };

inline CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
  return op == CycloOp::add ? a + b : a * b;
}

// sin(k*pi/6) or cos(k*pi/6) as an exact field element.
inline CycloNum cyclo_from_trig(TrigKind kind, long k) {
  return kind == TrigKind::sin ? CycloNum::sin_pi6(k) : CycloNum::cos_pi6(k);
}

}  // namespace morley

#endif  // MORLEY_CYCLOTOMIC_HPP
