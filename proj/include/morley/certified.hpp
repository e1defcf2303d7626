#ifndef MORLEY_CERTIFIED_HPP
#define MORLEY_CERTIFIED_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "morley/rational.hpp"

namespace morley {

// Rational interval guaranteed to contain a real value.
struct PrecisionInterval {
  Rational lo, hi;

  PrecisionInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("PrecisionInterval: lo > hi");
  }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool excludes(const Rational& x) const { return x < lo || hi < x; }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

namespace detail {

// 2^-bits.
inline Rational dyadic_eps(int bits) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return Rational(mpz_class(1), den);
}

// Outward rounding to denominator 2^bits; keeps numbers small between steps.
inline Rational round_down(const Rational& x, int bits) {
  mpz_class scaled;
  mpz_class num = x.num() << static_cast<mp_bitcnt_t>(bits);
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return Rational(scaled, den);
}
inline Rational round_up(const Rational& x, int bits) {
  mpz_class scaled;
  mpz_class num = x.num() << static_cast<mp_bitcnt_t>(bits);
  mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return Rational(scaled, den);
}

// arctan(1/x) enclosure from the alternating series; the first omitted term
// bounds the truncation error.
inline PrecisionInterval arctan_inv(long x, int bits) {
  Rational inv_x(1, x);
  Rational x2_inv = inv_x * inv_x;
  Rational term = inv_x;  // 1/(x*(2k+1)*x^(2k)) at k=0
  Rational sum(0);
  int k = 0;
  Rational eps = dyadic_eps(bits);
  while (true) {
    Rational contrib = term / Rational(2L * k + 1);
    sum += (k % 2 == 0) ? contrib : -contrib;
    term *= x2_inv;
    ++k;
    Rational next = term / Rational(2L * k + 1);
    if (next < eps) {
      // Alternating with decreasing terms: truth within next of sum.
      return {sum - next, sum + next};
    }
  }
}

}  // namespace detail

// pi within 2^-bits, via Machin's formula in exact rational arithmetic.
inline PrecisionInterval pi_interval(int bits) {
  auto a = detail::arctan_inv(5, bits + 8);
  auto b = detail::arctan_inv(239, bits + 8);
  Rational lo = Rational(16) * a.lo - Rational(4) * b.hi;
  Rational hi = Rational(16) * a.hi - Rational(4) * b.lo;
  return {detail::round_down(lo, bits + 4), detail::round_up(hi, bits + 4)};
}

namespace detail {

// sin at a nonnegative rational point x <= 2, by the alternating Taylor
// series with the first omitted term as the error bound.
inline PrecisionInterval sin_at(const Rational& x, int bits) {
  Rational x2 = x * x;
  Rational term = x;  // x^(2k+1)/(2k+1)!
  Rational sum(0);
  long k = 0;
  Rational eps = dyadic_eps(bits);
  while (true) {
    sum += (k % 2 == 0) ? term : -term;
    ++k;
    term *= x2 / Rational((2 * k) * (2 * k + 1));
    if (term < eps) {
      Rational lo = round_down(sum - term, bits + 4);
      Rational hi = round_up(sum + term, bits + 4);
      return {lo, hi};
    }
  }
}

}  // namespace detail

// Rigorous enclosure of sin^2(p*pi/q) of width <= 2^-precision_bits, computed
// by argument reduction to [0, pi/2] and a Taylor tail bound, all in exact
// rational arithmetic. This is a proof step, not a float.
inline PrecisionInterval certified_sin_sq(long p, long q, int precision_bits) {
  if (q == 0) throw std::invalid_argument("certified_sin_sq: q == 0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // sin^2 has period pi: reduce p/q mod 1, then fold sin(pi - x) = sin(x)
  // so the argument lands in [0, pi/2]. After the exact endpoint cases below
  // the true angle keeps a gap of at least pi/(2q) to pi/2, far wider than
  // the enclosure, so sin is increasing on the whole theta interval.
  long r = p % q;
  if (r < 0) r += q;
  if (2 * r > q) r = q - r;  // now r/q in [0, 1/2]
  if (r == 0) return {Rational(0), Rational(0)};
  if (2 * r == q) return {Rational(1), Rational(1)};  // sin^2(pi/2) exactly

  int work = precision_bits + 16;
  PrecisionInterval pi_enc = pi_interval(work);
  Rational frac(r, q);
  Rational theta_lo = pi_enc.lo * frac;
  Rational theta_hi = pi_enc.hi * frac;

  // sin is increasing on [0, pi/2].
  PrecisionInterval s_lo = detail::sin_at(theta_lo, work);
  PrecisionInterval s_hi = detail::sin_at(theta_hi, work);
  Rational lo = s_lo.lo;
  Rational hi = s_hi.hi;
  if (lo.sign() < 0) lo = Rational(0);
  if (hi > Rational(1)) hi = Rational(1);

  PrecisionInterval out(detail::round_down(lo * lo, precision_bits + 2),
                        detail::round_up(hi * hi, precision_bits + 2));
  if (out.width() > detail::dyadic_eps(precision_bits))
    throw std::logic_error("certified_sin_sq: enclosure wider than requested");
  return out;
}

}  // namespace morley

#endif  // MORLEY_CERTIFIED_HPP
