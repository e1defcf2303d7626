#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "morley/forms.hpp"
#include "morley/multipoly.hpp"
#include "morley/poly_ops.hpp"

using namespace morley;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> expd(0, 2);
  const Var vars[] = {tvar(1), tvar(3), tvar(5), svar(3), cvar(3), svar(5)};
  MultiPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (int rep = 0; rep < 2; ++rep)
      m.e[index_of(vars[pick(rng)])] += static_cast<uint8_t>(expd(rng));
    int c = coeff(rng);
    if (c) p.add_term(m, Rational(c));
  }
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic", "[polyring]") {
  CHECK(poly_arith(parse_poly("t1-t3"), parse_poly("t1+t3"), PolyOp::mul) ==
        parse_poly("t1^2-t3^2"));
  MultiPoly sq = parse_poly("(t1-t2)^2");
  CHECK(sq.term_count() == 3);
  CHECK(sq == parse_poly("t1^2 - 2*t1*t2 + t2^2"));
}

TEST_CASE("factored difference expands to the quadratic difference", "[polyring]") {
  // Two independent routes to the same polynomial: expanding the displayed
  // factors versus subtracting the two quadratic forms and stripping -2*S5.
  MultiPoly product =
      parse_poly("t1-t3") *
      (forms::s5_coefficient_cubic() * MultiPoly::variable(Svar(5)) - forms::s5_rhs());
  MultiPoly diff = forms::s5_quadratic() -
                   permute_indices(forms::s5_quadratic(), OddPerm::swap(1, 3));
  auto stripped = exact_divide(diff, parse_poly("-2*S5"));
  REQUIRE(stripped.has_value());
  CHECK(*stripped == product);
}

TEST_CASE("substitution", "[polyring]") {
  CHECK(substitute(parse_poly("t1-t2"),
                   {{tvar(2), MultiPoly::variable(tvar(1))}})
            .is_zero());
  CHECK(substitute(parse_poly("7*t1+4*t5-3"),
                   {{tvar(5), parse_poly("(3-7*t1)*1/4")}})
            .is_zero());
  CHECK_THROWS_AS(substitute(parse_poly("t1"),
                             {{tvar(1), MultiPoly::variable(tvar(2))},
                              {tvar(2), MultiPoly::variable(tvar(3))}}),
                  std::invalid_argument);
}

TEST_CASE("substitution is a ring homomorphism", "[polyring]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> val(-4, 4);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    std::map<Var, MultiPoly> b{
        {tvar(1), MultiPoly::constant(Rational(val(rng), 3))},
        {svar(3), MultiPoly::constant(Rational(val(rng), 2))},
        {cvar(3), parse_poly("t5+1")}};
    REQUIRE(substitute(p * q, b) == substitute(p, b) * substitute(q, b));
    REQUIRE(substitute(p + q, b) == substitute(p, b) + substitute(q, b));
  }
}

TEST_CASE("index permutations", "[polyring]") {
  const auto& sys = forms::system_display();
  CHECK(permute_indices(sys[0], OddPerm::swap(1, 3)) == sys[2]);
  CHECK(permute_indices(sys[0], OddPerm::swap(3, 5)) == sys[1]);
  CHECK(permute_indices(MultiPoly::constant(Rational(5)), OddPerm::cycle(1, 3, 5)) ==
        MultiPoly::constant(Rational(5)));

  std::mt19937_64 rng(12);
  OddPerm cycle = OddPerm::cycle(1, 3, 5);
  for (int i = 0; i < 100; ++i) {
    MultiPoly p = random_poly(rng);
    MultiPoly q = permute_indices(permute_indices(permute_indices(p, cycle), cycle), cycle);
    REQUIRE(q == p);
    REQUIRE(permute_indices(permute_indices(p, cycle), cycle.inverse()) == p);
  }
}

TEST_CASE("pythagorean reduction", "[polyring]") {
  CHECK(pythagorean_reduce(parse_poly("s4^2")) == parse_poly("1-c4^2"));
  CHECK(pythagorean_reduce(parse_poly("s4^3")) == parse_poly("s4*(1-c4^2)"));
  CHECK(pythagorean_reduce(parse_poly("s5^2*s3^2 - (1-c5^2)*(1-c3^2)")).is_zero());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_poly(rng);
    MultiPoly r = pythagorean_reduce(p);
    REQUIRE(pythagorean_reduce(r) == r);  // idempotent
  }
}

TEST_CASE("pythagorean reduction preserves values", "[polyring]") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> angle(0.1, 3.0);
  std::uniform_real_distribution<double> tval(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng);
    MultiPoly r = pythagorean_reduce(p);
    std::array<double, kVarCount> vals{};
    for (int k = 1; k <= 6; ++k) {
      double th = angle(rng);
      vals[static_cast<size_t>(index_of(tvar(k)))] = tval(rng);
      vals[static_cast<size_t>(index_of(svar(k)))] = std::sin(th);
      vals[static_cast<size_t>(index_of(cvar(k)))] = std::cos(th);
    }
    REQUIRE(std::abs(p.eval_double(vals) - r.eval_double(vals)) < 1e-12);
  }
}

TEST_CASE("exact division", "[polyring]") {
  auto q = exact_divide(parse_poly("t1^2-t3^2"), parse_poly("t1-t3"));
  REQUIRE(q.has_value());
  CHECK(*q == parse_poly("t1+t3"));
  CHECK(!exact_divide(parse_poly("t1^2+1"), parse_poly("t1-1")).has_value());
  CHECK_THROWS_AS(exact_divide(parse_poly("t1"), MultiPoly::zero()),
                  std::invalid_argument);

  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng);
    MultiPoly d = random_poly(rng);
    if (d.is_zero()) continue;
    auto quot = exact_divide(p * d, d);
    REQUIRE(quot.has_value());
    REQUIRE(*quot == p);
  }
}

TEST_CASE("factorization verification", "[polyring]") {
  CHECK(verify_factorization(parse_poly("t1^2-t3^2"), Rational(1),
                             {{parse_poly("t1-t3"), 1}, {parse_poly("t1+t3"), 1}}));
  CHECK(!verify_factorization(parse_poly("t1^2-t3^2"), Rational(2),
                              {{parse_poly("t1-t3"), 1}, {parse_poly("t1+t3"), 1}}));
}

TEST_CASE("phase expansion", "[polyring]") {
  CHECK(chebyshev_phase(TrigKind::sin, 1, 4) == parse_poly("s4"));
  CHECK(chebyshev_phase(TrigKind::cos, -1, 5) == parse_poly("c5"));
  CHECK(chebyshev_phase(TrigKind::sin, 2, 3) == parse_poly("2*s3*c3"));
  CHECK(chebyshev_phase(TrigKind::sin, -2, 3) == parse_poly("-2*s3*c3"));
  CHECK(chebyshev_phase(TrigKind::cos, 2, 3) == parse_poly("c3^2-s3^2"));

  // Numeric spot check of a mixed phase: cos(-pi + t3*pi + t5*pi).
  auto [c, s] = phase_expansion(-1, {0, 0, 1, 0, 1, 0});
  std::array<double, kVarCount> vals{};
  double th3 = 0.4, th5 = 1.1;
  vals[static_cast<size_t>(index_of(svar(3)))] = std::sin(th3);
  vals[static_cast<size_t>(index_of(cvar(3)))] = std::cos(th3);
  vals[static_cast<size_t>(index_of(svar(5)))] = std::sin(th5);
  vals[static_cast<size_t>(index_of(cvar(5)))] = std::cos(th5);
  CHECK(std::abs(c.eval_double(vals) - std::cos(-3.14159265358979323846 + th3 + th5)) < 1e-12);
  CHECK(std::abs(s.eval_double(vals) - std::sin(-3.14159265358979323846 + th3 + th5)) < 1e-12);
}

TEST_CASE("squared-variable abbreviations invert", "[polyring]") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    MultiPoly p = random_poly(rng);
    // expand_caps undoes to_caps, and to_caps leaves s/c exponents <= 1.
    REQUIRE(expand_caps(to_caps(p)) == expand_caps(p));
    MultiPoly capped = to_caps(p);
    for (const auto& [m, c] : capped.terms()) {
      for (int idx : {1, 3, 5}) {
        REQUIRE(m.exp(svar(idx)) <= 1);
        REQUIRE(m.exp(cvar(idx)) <= 1);
      }
    }
  }
  CHECK(to_caps(parse_poly("s3^5*c5^2")) == parse_poly("S3^2*s3*C5"));
  CHECK(expand_caps(parse_poly("S3^2*s3*C5")) == parse_poly("s3^5*c5^2"));
}

TEST_CASE("canonical serialization round-trips", "[polyring]") {
  const auto& sys = forms::system_display();
  for (const auto& e : sys) {
    CHECK(parse_poly(e.str()) == e);
  }
  CHECK(MultiPoly::zero().str() == "0");
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("-3/2*t1*s3^2").str() == "-3/2*t1*s3^2");
}
