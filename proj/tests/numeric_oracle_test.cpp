#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "morley/a_series.hpp"
#include "morley/certified.hpp"
#include "morley/geometry.hpp"
#include "morley/steps.hpp"

using namespace morley;

namespace {
CevianParams uniform_params(long num, long den) {
  CevianParams p;
  p.t.fill(Rational(num, den));
  return p;
}
}  // namespace

TEST_CASE("trisector scenes are equilateral", "[numeric_oracle]") {
  TriangleScene sym = construct_scene(kPi / 3, kPi / 3, CevianParams::trisector());
  SideLengths s = side_lengths(sym);
  CHECK(std::abs(s.GI - s.IJ) < 1e-14);
  CHECK(std::abs(s.IJ - s.JG) < 1e-14);

  TriangleScene gen = construct_scene(0.9, 0.7, CevianParams::trisector());
  SideLengths g = side_lengths(gen);
  CHECK(std::abs(g.GI - g.IJ) < 1e-12);
  CHECK(std::abs(g.IJ - g.JG) < 1e-12);

  // A uniform non-trisector fraction is clearly not equilateral.
  SideLengths bad = side_lengths(construct_scene(0.9, 0.7, uniform_params(3, 10)));
  CHECK(equilaterality_defect(bad) > 1e-3);
}

TEST_CASE("degenerate inputs are rejected", "[numeric_oracle]") {
  CHECK_THROWS_AS(construct_scene(1e-9, 0.5, CevianParams::trisector()),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_scene(0.5, 0.5, uniform_params(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_scene(3.14, 0.01, CevianParams::trisector()),
                  std::invalid_argument);
}

TEST_CASE("coordinates against closed forms on random scenes", "[numeric_oracle]") {
  std::mt19937_64 rng(51);
  double worst_rel = 0, worst_a = 0;
  for (int k = 0; k < 1000; ++k) {
    auto [a, b] = steps::random_angles(rng, 0.25);
    CevianParams p = steps::random_params(rng);
    TriangleScene s = construct_scene(a, b, p);
    SideLengths coord = side_lengths(s);
    SideLengths closed = side_lengths_closed_form(a, b, p);
    auto rel = [](double x, double y) {
      return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-12});
    };
    worst_rel = std::max({worst_rel, rel(coord.GI, closed.GI),
                          rel(coord.IJ, closed.IJ), rel(coord.JG, closed.JG)});
    double lhs = eval_A_direct(a, b, p);
    double rhs = (closed.GI * closed.GI - closed.IJ * closed.IJ) *
                 eval_common_denominator(a, b, p);
    worst_a = std::max(worst_a,
                       std::abs(lhs - rhs) /
                           std::max({std::abs(lhs), std::abs(rhs), 1e-12}));
  }
  CHECK(worst_rel < 1e-12);
  CHECK(worst_a < 1e-10);
}

TEST_CASE("the side-difference expression vanishes at the trisector point",
          "[numeric_oracle]") {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 100; ++k) {
    auto [a, b] = steps::random_angles(rng, 0.2);
    CHECK(std::abs(eval_A_direct(a, b, CevianParams::trisector())) < 1e-12);
  }
}

TEST_CASE("series evaluation matches the direct expression", "[numeric_oracle]") {
  TruncSeries A = build_A(0, 8);
  CevianParams p;
  p.t = {Rational(27, 100), Rational(31, 100), Rational(22, 100),
         Rational(35, 100), Rational(19, 100), Rational(41, 100)};
  auto vals = steps::numeric_vars(p.as_doubles());
  double series = A.eval_double(0.05, 0.07, vals);
  double direct = eval_A_direct(0.05, 0.07, p);
  CHECK(std::abs(series - direct) <= 0.01 * std::pow(0.12, 9));
}

TEST_CASE("law of sines on random triangles", "[numeric_oracle]") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 500; ++k) {
    auto [a, b] = steps::random_angles(rng, 0.2);
    REQUIRE(law_of_sines_defect(a, b) < 1e-13);
  }
}

TEST_CASE("equilaterality scan", "[numeric_oracle]") {
  ScanReport tri = equilateral_scan(50, CevianParams::trisector(), 0.1, false);
  CHECK(tri.max_defect < 1e-12);

  CevianParams bumped = CevianParams::trisector();
  bumped.t[0] = Rational(34, 100);
  ScanReport off = equilateral_scan(50, bumped, 0.1, false);
  CHECK(off.max_defect > 1e-4);

  ScanReport single = equilateral_scan(1, CevianParams::trisector());
  REQUIRE(single.rows.size() == 1);
  const ScanRow& row = single.rows[0];
  SideLengths direct = side_lengths(
      construct_scene(row.alpha, row.beta, CevianParams::trisector()));
  CHECK(row.defect == equilaterality_defect(direct));
}

TEST_CASE("scan csv format", "[numeric_oracle]") {
  ScanReport rep = equilateral_scan(2, CevianParams::trisector());
  std::ostringstream out;
  write_scan_csv(rep, out);
  std::string csv = out.str();
  CHECK(csv.rfind("alpha,beta,GI,IJ,JG,defect\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
}

TEST_CASE("certified sine squares", "[numeric_oracle]") {
  PrecisionInterval a = certified_sin_sq(7, 38, 128);
  CHECK(a.excludes(Rational(147, 211)));
  CHECK(a.excludes(Rational(5929, 46828)));
  CHECK(a.excludes(Rational(539, 4283)));
  PrecisionInterval b = certified_sin_sq(3, 11, 128);
  CHECK(b.excludes(Rational(144, 229)));
  CHECK(Rational(17328, 7199) > Rational(1));  // excluded a priori

  PrecisionInterval right = certified_sin_sq(1, 2, 128);
  CHECK(right.contains(Rational(1)));
  CHECK(right.width().is_zero());

  // Shrinks monotonically with precision, and nests around a finer reference.
  PrecisionInterval coarse = certified_sin_sq(7, 38, 80);
  PrecisionInterval fine = certified_sin_sq(7, 38, 200);
  CHECK(fine.width() <= coarse.width());
  Rational reference = (fine.lo + fine.hi) * Rational(1, 2);
  CHECK(coarse.contains(reference));
  CHECK(certified_sin_sq(7, 38, 64).contains(reference));

  // Direct double-precision cross-check.
  double approx = std::pow(std::sin(7 * kPi / 38), 2);
  CHECK(a.lo.to_double() <= approx + 1e-15);
  CHECK(a.hi.to_double() >= approx - 1e-15);
}

TEST_CASE("pi enclosure", "[numeric_oracle]") {
  PrecisionInterval pi = pi_interval(128);
  CHECK(std::abs(pi.lo.to_double() - kPi) < 1e-15);
  CHECK(std::abs(pi.hi.to_double() - kPi) < 1e-15);
  CHECK(pi.lo < pi.hi);
  // 2^-128 target width.
  Rational target(mpz_class(1), mpz_class(1) << 120);
  CHECK(pi.width() < target);
}
