#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "morley/cyclotomic.hpp"
#include "morley/rational.hpp"

using namespace morley;

TEST_CASE("rational arithmetic", "[exact_arith]") {
  CHECK(rat_arith(Rational(1, 3), Rational(1, 6), RatOp::add) == Rational(1, 2));
  CHECK(rat_arith(Rational(7, 38), Rational(0), RatOp::mul) == Rational(0));
  CHECK(rat_arith(Rational(147, 211), Rational(147, 211), RatOp::div) == Rational(1));
  CHECK_THROWS_AS(rat_arith(Rational(1), Rational(0), RatOp::div), std::domain_error);
}

TEST_CASE("rational normalization is canonical", "[exact_arith]") {
  Rational a(2, -4);
  CHECK(a == Rational(-1, 2));
  CHECK(a.den() == 2);
  CHECK(a.num() == -1);
  Rational zero(0, 7);
  CHECK(zero.fraction_str() == "0/1");
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational::parse("-10/15") == Rational(-2, 3));
  CHECK(Rational(147, 211).fraction_str() == "147/211");
}

TEST_CASE("twelfth root of unity relations", "[exact_arith]") {
  CycloNum z3 = CycloNum::zeta_pow(3);
  CHECK(z3 * z3 == CycloNum(Rational(-1)));  // zeta^6 = -1
  CHECK(CycloNum::zeta_pow(1) * CycloNum::zeta_pow(3) ==
        CycloNum(Rational(-1), Rational(0), Rational(1), Rational(0)));  // zeta^2 - 1
  CHECK(CycloNum::zeta_pow(12) == CycloNum::one());

  // zeta + zeta^-1 is 2*cos(pi/6); its square must reduce to 3.
  CycloNum two_cos = CycloNum::zeta_pow(1) + CycloNum::zeta_pow(11);
  CHECK(two_cos * two_cos == CycloNum(Rational(3)));
}

TEST_CASE("exact trigonometric embeddings", "[exact_arith]") {
  CycloNum c = cyclo_from_trig(TrigKind::cos, 1);  // cos(pi/6)
  CHECK(c * c == CycloNum(Rational(3, 4)));
  CHECK(cyclo_from_trig(TrigKind::sin, 0).is_zero());
  CHECK(cyclo_from_trig(TrigKind::cos, 6) == CycloNum(Rational(-1)));  // cos(pi)
  CHECK(cyclo_from_trig(TrigKind::sin, 3) == CycloNum::one());         // sin(pi/2)

  for (long k = -24; k <= 24; ++k) {
    CycloNum s = cyclo_from_trig(TrigKind::sin, k);
    CycloNum co = cyclo_from_trig(TrigKind::cos, k);
    CHECK(s * s + co * co == CycloNum::one());
  }
}

namespace {
CycloNum random_cyclo(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  return CycloNum(Rational(d(rng), 3), Rational(d(rng), 2), Rational(d(rng)),
                  Rational(d(rng), 5));
}
}  // namespace

TEST_CASE("field axioms on random triples", "[exact_arith]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    CycloNum a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
  }
}

TEST_CASE("numeric embedding agrees with exact arithmetic", "[exact_arith]") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    CycloNum a = random_cyclo(rng), b = random_cyclo(rng);
    std::complex<double> lhs = (a * b).to_complex();
    std::complex<double> rhs = a.to_complex() * b.to_complex();
    REQUIRE(std::abs(lhs - rhs) < 1e-9);
  }
}
