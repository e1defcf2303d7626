#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "morley/forms.hpp"
#include "morley/quadext.hpp"
#include "morley/ratfunc.hpp"
#include "morley/sturm.hpp"
#include "morley/unipoly.hpp"

using namespace morley;

TEST_CASE("resultant of linear polynomials", "[elimination]") {
  MultiPoly r = sylvester_resultant(parse_poly("t1-t3"), parse_poly("t1-t5"), tvar(1));
  // Standard convention: res(x-a, x-b) = b - a with this row ordering.
  CHECK(r == parse_poly("t3-t5"));
  CHECK_THROWS_AS(sylvester_resultant(parse_poly("t3"), parse_poly("t1-t3"), tvar(1)),
                  std::invalid_argument);
}

namespace {
MultiPoly random_unipoly(std::mt19937_64& rng, int mindeg) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(mindeg, 3);
  int d = deg(rng);
  MultiPoly p = MultiPoly::variable(tvar(1), d);
  for (int k = 0; k < d; ++k) {
    int c = coeff(rng);
    if (c) p += Rational(c) * MultiPoly::variable(tvar(1), k);
  }
  return p;
}
}  // namespace

TEST_CASE("resultant identities on random instances", "[elimination]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = random_unipoly(rng, 1);
    MultiPoly q = random_unipoly(rng, 1);
    MultiPoly r = random_unipoly(rng, 1);
    // Multiplicativity in the first argument.
    REQUIRE(sylvester_resultant(p * q, r, tvar(1)) ==
            sylvester_resultant(p, r, tvar(1)) * sylvester_resultant(q, r, tvar(1)));
    // Antisymmetry up to (-1)^{deg p * deg q}.
    MultiPoly ab = sylvester_resultant(p, q, tvar(1));
    MultiPoly ba = sylvester_resultant(q, p, tvar(1));
    int sign = (p.degree_in(tvar(1)) * q.degree_in(tvar(1))) % 2 ? -1 : 1;
    REQUIRE(ab == Rational(sign) * ba);
  }
}

TEST_CASE("univariate views round-trip", "[elimination]") {
  MultiPoly p = forms::elimination_q5();
  UniPoly u = UniPoly::from(p, tvar(5));
  CHECK(u.degree() == 5);
  CHECK(u.to_multipoly() == p);
  CHECK(!u.coeffs.back().is_zero());
  UniPoly v = UniPoly::from(p, tvar(1));
  CHECK(v.degree() == 5);
  CHECK(v.to_multipoly() == p);
}

TEST_CASE("solving linear equations", "[elimination]") {
  RatFunc x = solve_linear(parse_poly("2*t1-4"), tvar(1));
  CHECK(ratfunc_equal(x, RatFunc::constant(Rational(2))));

  RatFunc s1 = solve_linear(parse_poly("S1*(7*t1^2-4*t1+1) - 3*t1^2"), Svar(1));
  CHECK(ratfunc_equal(s1, RatFunc(parse_poly("3*t1^2"), parse_poly("7*t1^2-4*t1+1"))));

  MultiPoly rel = forms::paired_delta5() * MultiPoly::variable(Svar(5)) -
                  parse_poly("t5^2*(7*t1+4*t5-3)");
  CHECK(ratfunc_equal(solve_linear(rel, Svar(5)), forms::paired_s5()));

  CHECK_THROWS_AS(solve_linear(parse_poly("t1^2-1"), tvar(1)), std::invalid_argument);
  // Substituting the solution back kills the equation.
  RatFunc back = substitute_ratfunc(parse_poly("2*t1-4"), {{tvar(1), x}});
  CHECK(back.is_zero());
}

TEST_CASE("rational function equality", "[elimination]") {
  RatFunc a(parse_poly("t1"), MultiPoly::constant(Rational(1)));
  RatFunc b(parse_poly("2*t1"), MultiPoly::constant(Rational(2)));
  CHECK(ratfunc_equal(a, b));
  CHECK(!ratfunc_equal(a, RatFunc(parse_poly("t1+1"), MultiPoly::constant(Rational(1)))));
  // Caps-aware equality: S5 versus s5^2.
  RatFunc c(parse_poly("S5"), MultiPoly::constant(Rational(1)));
  RatFunc d(parse_poly("s5^2"), MultiPoly::constant(Rational(1)));
  CHECK(!ratfunc_equal(c, d));
  CHECK(ratfunc_equal_caps(c, d));
}

TEST_CASE("sign certificates", "[elimination]") {
  // Oracle for positivity on R: negative discriminant and positive lead.
  long disc = 42 * 42 - 4 * 131 * 7;
  REQUIRE(disc < 0);
  auto pos = sturm_sign_certificate(parse_poly("131*t1^2-42*t1+7"), tvar(1),
                                    std::nullopt, std::nullopt);
  CHECK(pos.verdict == SignVerdict::positive);

  auto neg = sturm_sign_certificate(parse_poly("5*t3^2-15*t3-8"), tvar(3),
                                    Rational(0), Rational(1));
  CHECK(neg.verdict == SignVerdict::negative);

  auto root = sturm_sign_certificate(parse_poly("t1-1"), tvar(1), Rational(0),
                                     Rational(2));
  CHECK(root.verdict == SignVerdict::has_root);

  // Endpoint roots count for the closed interval.
  auto endpoint = sturm_sign_certificate(parse_poly("t1-1"), tvar(1), Rational(1),
                                         Rational(2));
  CHECK(endpoint.verdict == SignVerdict::has_root);

  // Root counting on a polynomial with known roots.
  QPoly p = QPoly::from(parse_poly("(2*t1-1)*(3*t1-1)*(t1-2)"), tvar(1));
  CHECK(sturm_root_count(p, Rational(0), Rational(1)) == 2);
  CHECK(sturm_root_count(p, std::nullopt, std::nullopt) == 3);
}

TEST_CASE("positive certificates match sampling", "[elimination]") {
  auto cert = sturm_sign_certificate(parse_poly("61*t5^2+144*t5+111"), tvar(5),
                                     std::nullopt, std::nullopt);
  REQUIRE(cert.verdict == SignVerdict::positive);
  QPoly p = QPoly::from(parse_poly("61*t5^2+144*t5+111"), tvar(5));
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> num(-2000, 2000);
  std::uniform_int_distribution<long> den(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rational x(num(rng), den(rng));
    REQUIRE(p.eval(x).sign() > 0);
  }
}

TEST_CASE("quadratic extension roots", "[elimination]") {
  auto roots = quad_roots(Rational(57), Rational(-36), Rational(-5));
  REQUIRE(roots.size() == 2);
  QuadExt plus(Rational(6, 19), Rational(1, 57), Rational(1), 609);
  QuadExt minus(Rational(6, 19), Rational(-1, 57), Rational(1), 609);
  CHECK(((roots[0] == plus && roots[1] == minus) ||
         (roots[0] == minus && roots[1] == plus)));

  auto pm1 = quad_roots(Rational(1), Rational(0), Rational(-1));
  REQUIRE(pm1.size() == 2);
  CHECK(pm1[0].is_rational());

  // Oracle: equating the two derived denominators gives the final quadratic.
  MultiPoly diff = parse_poly("(13*t1^2-9*t1+2) - (7*t1^2-4*t1+1)");
  REQUIRE(diff == parse_poly("6*t1^2-5*t1+1"));
  auto final_roots = quad_roots(Rational(6), Rational(-5), Rational(1));
  REQUIRE(final_roots.size() == 2);
  std::set<std::string> values;
  for (const auto& r : final_roots) values.insert(r.rational_value().fraction_str());
  CHECK(values == std::set<std::string>{"1/3", "1/2"});

  CHECK(quad_roots(Rational(1), Rational(0), Rational(1)).empty());
  CHECK_THROWS_AS(quad_roots(Rational(0), Rational(1), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("roots satisfy their equations", "[elimination]") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<long> c(-9, 9);
  int checked = 0;
  while (checked < 200) {
    Rational a(c(rng)), b(c(rng)), cc(c(rng));
    if (a.is_zero()) continue;
    auto roots = quad_roots(a, b, cc);
    for (const auto& r : roots) {
      QuadExt lhs = r * r * a + r * b + QuadExt::rational(cc);
      REQUIRE(lhs.is_zero());
    }
    ++checked;
  }
}

TEST_CASE("quadratic extension signs", "[elimination]") {
  QuadExt nearly(Rational(6, 19), Rational(-1, 57), Rational(1), 609);
  CHECK(nearly.sign() < 0);  // 6/19 < sqrt(609)/57
  QuadExt pos(Rational(6, 19), Rational(1, 57), Rational(1), 609);
  CHECK(pos.sign() > 0);
  CHECK(QuadExt::rational(Rational(0)).sign() == 0);
  // (p + q*sqrt(d)) * (p - q*sqrt(d)) is rational.
  QuadExt prod = nearly * pos;
  CHECK(prod.is_rational());
  CHECK(prod.rational_value() == Rational(6, 19) * Rational(6, 19) -
                                     Rational(1, 57) * Rational(1, 57) * Rational(609));
}
