#ifndef MORLEY_SERIES_HPP
#define MORLEY_SERIES_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "morley/multipoly.hpp"
#include "morley/poly_ops.hpp"

namespace morley {

// u*alpha + v*beta + k0*pi + sum_i m_i*t_i*pi, everything exact. The linear
// coefficients u, v are polynomials of degree <= 1 in the t variables
// (arguments like t5*(alpha+beta-pi) - t6*alpha mix t's into the linear part
// and the phase).
struct PhasedLinearArg {
  MultiPoly u;
  MultiPoly v;
  int k0 = 0;
  std::array<int, 6> m{};

  PhasedLinearArg negated() const {
    PhasedLinearArg n;
    n.u = -u;
    n.v = -v;
    n.k0 = -k0;
    for (size_t i = 0; i < 6; ++i) n.m[i] = -m[i];
    return n;
  }
};

// Bivariate Taylor series in (alpha, beta) about (0,0), truncated at total
// degree N, with MultiPoly coefficients.
class TruncSeries {
 public:
  using CoeffMap = std::map<std::pair<int, int>, MultiPoly>;

  explicit TruncSeries(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("TruncSeries: negative degree");
  }

  int trunc() const { return trunc_; }
  const CoeffMap& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  static TruncSeries constant(MultiPoly p, int trunc) {
    TruncSeries s(trunc);
    s.set(0, 0, std::move(p));
    return s;
  }
  // u*alpha + v*beta as a series (degenerates to 0 when trunc == 0).
  static TruncSeries linear(const MultiPoly& u, const MultiPoly& v, int trunc) {
    TruncSeries s(trunc);
    if (trunc >= 1) {
      s.set(1, 0, u);
      s.set(0, 1, v);
    }
    return s;
  }

  void set(int i, int j, MultiPoly p) {
    if (i < 0 || j < 0 || i + j > trunc_)
      throw std::out_of_range("TruncSeries: degree out of range");
    if (p.is_zero())
      c_.erase({i, j});
    else
      c_[{i, j}] = std::move(p);
  }

  // Exact Taylor coefficient of alpha^i beta^j; requires i + j <= N.
  const MultiPoly& coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > trunc_)
      throw std::out_of_range("TruncSeries: coefficient out of range");
    static const MultiPoly kZero;
    auto it = c_.find({i, j});
    return it == c_.end() ? kZero : it->second;
  }

  TruncSeries operator-() const {
    TruncSeries r(trunc_);
    for (const auto& [ij, p] : c_) r.c_.emplace(ij, -p);
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_same_trunc(o);
    for (const auto& [ij, p] : o.c_) add(ij.first, ij.second, p);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check_same_trunc(o);
    for (const auto& [ij, p] : o.c_) add(ij.first, ij.second, -p);
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_same_trunc(b);
    TruncSeries r(a.trunc_);
    for (const auto& [ia, pa] : a.c_) {
      for (const auto& [ib, pb] : b.c_) {
        int i = ia.first + ib.first;
        int j = ia.second + ib.second;
        if (i + j > a.trunc_) continue;
        r.add(i, j, pa * pb);
      }
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend TruncSeries operator*(TruncSeries a, const MultiPoly& p) {
    TruncSeries r(a.trunc_);
    for (const auto& [ij, q] : a.c_) r.add(ij.first, ij.second, q * p);
    return r;
  }
  friend TruncSeries operator*(TruncSeries a, const Rational& r) {
    return std::move(a) * MultiPoly::constant(r);
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) {
    return !(a == b);
  }

  // The series containing exactly the total-degree-d terms.
  TruncSeries homogeneous_part(int d) const {
    if (d > trunc_) throw std::out_of_range("homogeneous_part: degree");
    TruncSeries r(trunc_);
    for (const auto& [ij, p] : c_) {
      if (ij.first + ij.second == d) r.c_.emplace(ij, p);
    }
    return r;
  }

  // Applies a polynomial substitution to every coefficient.
  TruncSeries substitute_coeffs(const std::map<Var, MultiPoly>& bindings) const {
    TruncSeries r(trunc_);
    for (const auto& [ij, p] : c_) r.add(ij.first, ij.second, substitute(p, bindings));
    return r;
  }

  double eval_double(double alpha, double beta,
                     const std::array<double, kVarCount>& vals) const {
    double acc = 0.0;
    for (const auto& [ij, p] : c_) {
      double t = p.eval_double(vals);
      for (int k = 0; k < ij.first; ++k) t *= alpha;
      for (int k = 0; k < ij.second; ++k) t *= beta;
      acc += t;
    }
    return acc;
  }

 private:
  void check_same_trunc(const TruncSeries& o) const {
    if (trunc_ != o.trunc_)
      throw std::invalid_argument("TruncSeries: truncation degree mismatch");
  }
  void add(int i, int j, MultiPoly p) {
    if (p.is_zero()) return;
    auto [it, inserted] = c_.try_emplace({i, j}, std::move(p));
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  int trunc_;
  CoeffMap c_;
};

enum class SeriesOp { add, sub, mul };

inline TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b,
                                SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  throw std::logic_error("series_arith: bad op");
}

namespace detail {

inline void check_linear_part(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() > 1) throw std::invalid_argument("sin_of: linear coefficient degree > 1");
    for (int i = 0; i < kVarCount; ++i) {
      if (m.e[i] && !t_index(var_at(i)))
        throw std::invalid_argument("sin_of: linear coefficient not in t variables");
    }
  }
}

// Taylor series of sin/cos of the pure linear part u*alpha + v*beta.
inline std::pair<TruncSeries, TruncSeries> sincos_linear(const PhasedLinearArg& arg,
                                                         int trunc) {
  check_linear_part(arg.u);
  check_linear_part(arg.v);
  TruncSeries lin = TruncSeries::linear(arg.u, arg.v, trunc);
  TruncSeries sin_s(trunc), cos_s(trunc);
  cos_s.set(0, 0, MultiPoly::constant(Rational(1)));
  TruncSeries power = lin;  // lin^k
  Rational factorial(1);
  for (int k = 1; k <= trunc; ++k) {
    factorial *= Rational(k);
    Rational coeff = Rational(1) / factorial;
    if (k % 4 == 2 || k % 4 == 3) coeff = -coeff;
    if (k % 2 == 1)
      sin_s += power * coeff;
    else
      cos_s += power * coeff;
    if (k < trunc) power *= lin;
  }
  return {std::move(sin_s), std::move(cos_s)};
}

}  // namespace detail

// sin of a phased linear argument: sin(phase)*cos(linear) +
// cos(phase)*sin(linear), with the phase expanded into s_i/c_i variables.
inline TruncSeries sin_of(const PhasedLinearArg& arg, int trunc) {
  auto [sl, cl] = detail::sincos_linear(arg, trunc);
  auto [pc, ps] = phase_expansion(arg.k0, arg.m);
  return cl * ps + sl * pc;
}

inline TruncSeries cos_of(const PhasedLinearArg& arg, int trunc) {
  auto [sl, cl] = detail::sincos_linear(arg, trunc);
  auto [pc, ps] = phase_expansion(arg.k0, arg.m);
  return cl * pc - sl * ps;
}

}  // namespace morley

#endif  // MORLEY_SERIES_HPP
