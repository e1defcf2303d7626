#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "morley/series.hpp"

using namespace morley;

namespace {
const MultiPoly kOne = MultiPoly::constant(Rational(1));
const MultiPoly kZero;
}  // namespace

TEST_CASE("truncated ring operations", "[series]") {
  TruncSeries a = TruncSeries::linear(kOne, kZero, 4);  // alpha
  TruncSeries b = TruncSeries::linear(kZero, kOne, 4);  // beta
  TruncSeries ab = a * b;
  CHECK(ab.coeff(1, 1) == kOne);
  CHECK(ab.coeff(2, 0).is_zero());

  TruncSeries sum = TruncSeries::linear(kOne, kOne, 2);
  TruncSeries sq = sum * sum;
  CHECK(sq.coeff(2, 0) == kOne);
  CHECK(sq.coeff(1, 1) == MultiPoly::constant(Rational(2)));
  CHECK(sq.coeff(0, 2) == kOne);

  TruncSeries other(5);
  CHECK_THROWS_AS(a * other, std::invalid_argument);
  CHECK_THROWS_AS(a.coeff(5, 0), std::out_of_range);
}

TEST_CASE("sine squares by hand", "[series]") {
  PhasedLinearArg alpha{kOne, kZero, 0, {}};
  TruncSeries s = sin_of(alpha, 4);
  TruncSeries sq = s * s;
  CHECK(sq.coeff(2, 0) == kOne);
  CHECK(sq.coeff(4, 0) == MultiPoly::constant(Rational(-1, 3)));
}

TEST_CASE("phased argument constant terms", "[series]") {
  PhasedLinearArg t1a{MultiPoly::variable(tvar(1)), kZero, 0, {}};
  TruncSeries s = sin_of(t1a, 6);
  CHECK(s.coeff(1, 0) == MultiPoly::variable(tvar(1)));
  CHECK(s.coeff(3, 0) == Rational(-1, 6) * MultiPoly::variable(tvar(1)).pow(3));
  CHECK(s.coeff(0, 0).is_zero());

  // sin(-t3*b - t4*pi + t4*a + t4*b): constant term is sin(-t4*pi) = -s4.
  std::array<int, 6> m{};
  m[3] = -1;
  PhasedLinearArg f3{MultiPoly::variable(tvar(4)),
                     MultiPoly::variable(tvar(4)) - MultiPoly::variable(tvar(3)),
                     0, m};
  CHECK(sin_of(f3, 4).coeff(0, 0) == parse_poly("-s4"));

  // cos((-1+t4+t5)*(pi-a-b)): constant term is cos((t4+t5-1)*pi)
  // = -(c4*c5 - s4*s5) by the addition formula.
  std::array<int, 6> m2{};
  m2[3] = 1;
  m2[4] = 1;
  MultiPoly lin = kOne - MultiPoly::variable(tvar(4)) - MultiPoly::variable(tvar(5));
  PhasedLinearArg g2{lin, lin, -1, m2};
  CHECK(cos_of(g2, 4).coeff(0, 0) == parse_poly("-(c4*c5-s4*s5)"));
}

TEST_CASE("homogeneous parts", "[series]") {
  TruncSeries sum = TruncSeries::linear(kOne, kOne, 3);
  TruncSeries cube = sum * sum * sum;
  CHECK(cube.homogeneous_part(3) == cube);
  CHECK(cube.homogeneous_part(2).is_zero());
  CHECK_THROWS_AS(cube.homogeneous_part(9), std::out_of_range);
}

TEST_CASE("sine is odd in the full argument", "[series]") {
  std::array<int, 6> m{};
  m[2] = 1;
  m[4] = -2;
  PhasedLinearArg arg{MultiPoly::variable(tvar(5)) - MultiPoly::variable(tvar(6)),
                      MultiPoly::variable(tvar(5)), 1, m};
  CHECK(sin_of(arg.negated(), 6) == -sin_of(arg, 6));
  CHECK(cos_of(arg.negated(), 6) == cos_of(arg, 6));
}

TEST_CASE("pythagorean identity for the side-difference arguments", "[series]") {
  const MultiPoly t1 = MultiPoly::variable(tvar(1));
  const MultiPoly t2 = MultiPoly::variable(tvar(2));
  const MultiPoly t3 = MultiPoly::variable(tvar(3));
  const MultiPoly t4 = MultiPoly::variable(tvar(4));
  const MultiPoly t5 = MultiPoly::variable(tvar(5));
  const MultiPoly t6 = MultiPoly::variable(tvar(6));
  auto ph = [](int i, int v) {
    std::array<int, 6> m{};
    m[static_cast<size_t>(i - 1)] = v;
    return m;
  };
  std::array<int, 6> m45{};
  m45[3] = 1;
  m45[4] = 1;
  std::vector<PhasedLinearArg> args = {
      {t1, kZero, 0, {}},
      {kOne, kOne, 0, {}},
      {t4, t4 - t3, 0, ph(4, -1)},
      {t5 - t6, t5, 0, ph(5, -1)},
      {kOne, kZero, 0, {}},
      {-t4, -t4, 0, ph(4, 1)},
      {t1, t2, 0, {}},
      {kZero, t3, 0, {}},
      {kZero, kOne, 0, {}},
      {t6, kZero, 0, {}},
      {kZero, t2 + t3 - kOne, 0, {}},
      {kOne - t4 - t5, kOne - t4 - t5, -1, m45},
  };
  const int N = 5;
  for (const auto& arg : args) {
    TruncSeries s = sin_of(arg, N);
    TruncSeries c = cos_of(arg, N);
    TruncSeries one = s * s + c * c;
    for (const auto& [ij, p] : one.coeffs()) {
      MultiPoly expected = (ij.first == 0 && ij.second == 0) ? kOne : kZero;
      REQUIRE(equal_mod_pythagorean(p, expected));
    }
  }
}

TEST_CASE("series evaluation tracks the trigonometric value", "[series]") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> ti(10, 80);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int N = 8;
  std::array<int, 6> m{};
  m[3] = -1;
  PhasedLinearArg arg{MultiPoly::variable(tvar(4)),
                      MultiPoly::variable(tvar(4)) - MultiPoly::variable(tvar(3)),
                      0, m};
  TruncSeries s = sin_of(arg, N);
  for (int k = 0; k < 100; ++k) {
    double t3 = ti(rng) / 100.0, t4 = ti(rng) / 100.0;
    double a = u(rng) * 0.05, b = u(rng) * 0.05;
    std::array<double, kVarCount> vals{};
    vals[static_cast<size_t>(index_of(tvar(3)))] = t3;
    vals[static_cast<size_t>(index_of(tvar(4)))] = t4;
    vals[static_cast<size_t>(index_of(svar(4)))] = std::sin(t4 * 3.14159265358979323846);
    vals[static_cast<size_t>(index_of(cvar(4)))] = std::cos(t4 * 3.14159265358979323846);
    double series = s.eval_double(a, b, vals);
    double direct =
        std::sin(-t3 * b - t4 * 3.14159265358979323846 + t4 * a + t4 * b);
    double r = std::abs(a) + std::abs(b);
    REQUIRE(std::abs(series - direct) <= 0.01 * std::pow(r, N + 1) + 5e-15);
  }
}
