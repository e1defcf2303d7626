#ifndef MORLEY_A_SERIES_HPP
#define MORLEY_A_SERIES_HPP

#include <array>
#include <map>
#include <stdexcept>

#include "morley/series.hpp"

namespace morley {

namespace detail {

inline MultiPoly tp(int i) { return MultiPoly::variable(tvar(i)); }

// The six summands of the cleared-denominator GI^2 - IJ^2 expression, with
// the cevian subscripts routed through idx so the same template yields the
// rotated variants (rotating the vertex roles shifts every subscript by two).
inline TruncSeries build_side_difference(const std::array<int, 7>& idx, int N) {
  auto t = [&](int i) { return tp(idx[static_cast<size_t>(i)]); };
  auto phase = [&](int i, int mult) {
    std::array<int, 6> m{};
    m[static_cast<size_t>(idx[static_cast<size_t>(i)] - 1)] = mult;
    return m;
  };
  const MultiPoly one = MultiPoly::constant(Rational(1));
  const MultiPoly zero;

  // sin(t1*a)
  TruncSeries f1 = sin_of({t(1), zero, 0, {}}, N);
  // sin(a+b)
  TruncSeries f2 = sin_of({one, one, 0, {}}, N);
  // sin(-t3*b - t4*pi + t4*a + t4*b)
  TruncSeries f3 = sin_of({t(4), t(4) - t(3), 0, phase(4, -1)}, N);
  // sin(t5*(a+b-pi) - t6*a)
  TruncSeries f4 = sin_of({t(5) - t(6), t(5), 0, phase(5, -1)}, N);
  // sin(a)
  TruncSeries f5 = sin_of({one, zero, 0, {}}, N);
  // sin(t4*(pi - a - b))
  TruncSeries f6 = sin_of({-t(4), -t(4), 0, phase(4, 1)}, N);
  // sin(t1*a + t2*b)
  TruncSeries f7 = sin_of({t(1), t(2), 0, {}}, N);
  // sin(t3*b)
  TruncSeries f8 = sin_of({zero, t(3), 0, {}}, N);
  // sin(b)
  TruncSeries f9 = sin_of({zero, one, 0, {}}, N);
  // sin(t6*a)
  TruncSeries f10 = sin_of({t(6), zero, 0, {}}, N);
  // cos((-1 + t2 + t3)*b)
  TruncSeries g1 = cos_of({zero, t(2) + t(3) - one, 0, {}}, N);
  // cos((-1 + t4 + t5)*(pi - a - b))
  std::array<int, 6> m2{};
  m2[static_cast<size_t>(idx[4] - 1)] = 1;
  m2[static_cast<size_t>(idx[5] - 1)] = 1;
  TruncSeries g2 = cos_of({one - t(4) - t(5), one - t(4) - t(5), -1, m2}, N);

  const Rational two(2);
  TruncSeries a = f1 * f1 * f2 * f2 * f3 * f3 * f4 * f4;
  a += f5 * f5 * f6 * f6 * f7 * f7 * f4 * f4;
  a += f1 * f5 * f6 * g1 * f7 * f2 * f3 * f4 * f4 * two;
  a -= f5 * f5 * f8 * f8 * f7 * f7 * f4 * f4;
  a -= f9 * f9 * f10 * f10 * f7 * f7 * f3 * f3;
  a += f5 * f8 * f9 * f10 * g2 * f7 * f7 * f3 * f4 * two;
  return a;
}

}  // namespace detail

// The side-difference series. rotation 0 compares GI with IJ; rotations 1
// and 2 shift the vertex roles cyclically, which renames t1..t6 to
// t3,t4,t5,t6,t1,t2 (once or twice) in the same template.
inline TruncSeries build_A(int rotation, int N) {
  if (N < 4) throw std::invalid_argument("build_A: degree must be >= 4");
  if (rotation < 0 || rotation > 2) throw std::invalid_argument("build_A: rotation");
  std::array<int, 7> idx{0, 1, 2, 3, 4, 5, 6};
  for (int r = 0; r < rotation; ++r) {
    std::array<int, 7> next{0,
                            idx[3], idx[4], idx[5], idx[6], idx[1], idx[2]};
    idx = next;
  }
  return detail::build_side_difference(idx, N);
}

// Identifies the paired cevian fractions: t2 = t1, t4 = t3, t6 = t5 (and the
// matching sin/cos variables).
inline std::map<Var, MultiPoly> pairing_substitution() {
  std::map<Var, MultiPoly> b;
  b.emplace(tvar(2), MultiPoly::variable(tvar(1)));
  b.emplace(tvar(4), MultiPoly::variable(tvar(3)));
  b.emplace(tvar(6), MultiPoly::variable(tvar(5)));
  b.emplace(svar(2), MultiPoly::variable(svar(1)));
  b.emplace(svar(4), MultiPoly::variable(svar(3)));
  b.emplace(svar(6), MultiPoly::variable(svar(5)));
  b.emplace(cvar(2), MultiPoly::variable(cvar(1)));
  b.emplace(cvar(4), MultiPoly::variable(cvar(3)));
  b.emplace(cvar(6), MultiPoly::variable(cvar(5)));
  return b;
}

// Reduced side-difference series: build_A(0, N) under the pairing t2 = t1,
// t4 = t3, t6 = t5.
inline TruncSeries build_reduced_A(int N) {
  if (N < 8) throw std::invalid_argument("build_reduced_A: degree must be >= 8");
  return build_A(0, N).substitute_coeffs(pairing_substitution());
}

// The reduced expression built directly from its own display (only odd
// subscripts appear). Used to verify build_reduced_A term by term.
inline TruncSeries build_reduced_A_direct(int N) {
  using detail::tp;
  const MultiPoly one = MultiPoly::constant(Rational(1));
  const MultiPoly zero;
  auto phase = [](int i, int mult) {
    std::array<int, 6> m{};
    m[static_cast<size_t>(i - 1)] = mult;
    return m;
  };

  TruncSeries r1 = sin_of({tp(1), zero, 0, {}}, N);        // sin(t1*a)
  TruncSeries r2 = sin_of({one, one, 0, {}}, N);           // sin(a+b)
  TruncSeries r3 = sin_of({tp(3), zero, 0, phase(3, -1)}, N);  // sin(-t3*pi + t3*a)
  TruncSeries r4 = sin_of({zero, tp(5), 0, phase(5, -1)}, N);  // sin(-t5*pi + t5*b)
  TruncSeries r5 = sin_of({one, zero, 0, {}}, N);          // sin(a)
  TruncSeries r6 = sin_of({-tp(3), -tp(3), 0, phase(3, 1)}, N);  // sin(t3*(pi-a-b))
  TruncSeries r7 = sin_of({tp(1), tp(1), 0, {}}, N);       // sin(t1*a + t1*b)
  TruncSeries r8 = sin_of({zero, tp(3), 0, {}}, N);        // sin(t3*b)
  TruncSeries r9 = sin_of({zero, one, 0, {}}, N);          // sin(b)
  TruncSeries r10 = sin_of({tp(5), zero, 0, {}}, N);       // sin(t5*a)
  TruncSeries g1 = cos_of({zero, tp(1) + tp(3) - one, 0, {}}, N);
  std::array<int, 6> m2{};
  m2[2] = 1;
  m2[4] = 1;
  TruncSeries g2 = cos_of({one - tp(3) - tp(5), one - tp(3) - tp(5), -1, m2}, N);

  const Rational two(2);
  TruncSeries a = r1 * r1 * r2 * r2 * r3 * r3 * r4 * r4;
  a += r5 * r5 * r6 * r6 * r7 * r7 * r4 * r4;
  a += r1 * r5 * r6 * g1 * r7 * r2 * r3 * r4 * r4 * two;
  a -= r5 * r5 * r8 * r8 * r7 * r7 * r4 * r4;
  a -= r9 * r9 * r10 * r10 * r7 * r7 * r3 * r3;
  a += r5 * r8 * r9 * r10 * g2 * r7 * r7 * r3 * r4 * two;
  return a;
}

// The degree-6 coefficient form of the reduced series, before dividing by
// s3: 2*t3*t5*cos((t3+t5-1)*pi)*s3*s5 + ((t1+t3-1)^2 - t3^2)*s3^2*s5^2
// - t5^2*s3^2, with the constant phase expanded into s/c variables.
inline MultiPoly pre_system_polynomial() {
  std::array<int, 6> m{};
  m[2] = 1;
  m[4] = 1;
  MultiPoly cos_phase = phase_expansion(-1, m).first;  // cos((t3+t5-1)*pi)
  MultiPoly s3 = MultiPoly::variable(svar(3));
  MultiPoly s5 = MultiPoly::variable(svar(5));
  MultiPoly t1 = MultiPoly::variable(tvar(1));
  MultiPoly t3 = MultiPoly::variable(tvar(3));
  MultiPoly t5 = MultiPoly::variable(tvar(5));
  MultiPoly one = MultiPoly::constant(Rational(1));
  MultiPoly sum = t1 + t3 - one;
  return Rational(2) * t3 * t5 * cos_phase * s3 * s5 +
         (sum * sum - t3 * t3) * s3 * s3 * s5 * s5 - t5 * t5 * s3 * s3;
}

// The six-equation polynomial system: the first equation is the degree-6
// coefficient form divided by s3, the rest its orbit under permutations of
// the odd subscripts.
inline std::array<MultiPoly, 6> generate_system() {
  auto q = exact_divide(pre_system_polynomial(), MultiPoly::variable(svar(3)));
  if (!q) throw std::logic_error("generate_system: s3 does not divide");
  MultiPoly e1 = *q;
  std::array<MultiPoly, 6> sys;
  sys[0] = e1;
  sys[1] = permute_indices(e1, OddPerm::swap(3, 5));
  sys[2] = permute_indices(e1, OddPerm::swap(1, 3));
  sys[3] = permute_indices(sys[1], OddPerm::swap(1, 3));
  sys[4] = permute_indices(e1, OddPerm{{0, 5, 0, 1, 0, 3}});  // 1->5, 3->1, 5->3
  sys[5] = permute_indices(e1, OddPerm::swap(1, 5));
  return sys;
}

}  // namespace morley

#endif  // MORLEY_A_SERIES_HPP
