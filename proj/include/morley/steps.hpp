#ifndef MORLEY_STEPS_HPP
#define MORLEY_STEPS_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "morley/certified.hpp"
#include "morley/geometry.hpp"
#include "morley/laurent.hpp"
#include "morley/pipeline.hpp"
#include "morley/quadext.hpp"
#include "morley/sturm.hpp"
#include "morley/unipoly.hpp"

namespace morley {
namespace steps {

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

inline Rational require_proportional(const MultiPoly& computed,
                                     const MultiPoly& expected,
                                     const std::string& label) {
  auto k = proportionality_mod_pythagorean(computed, expected);
  require(k.has_value(), label + ": not a rational multiple; residue " +
                             pythagorean_reduce(expand_caps(computed)).str());
  require(!k->is_zero(), label + ": zero constant");
  return *k;
}

inline void require_poly_equal(const MultiPoly& a, const MultiPoly& b,
                               const std::string& label) {
  if (a == b) return;
  throw StepFailure(label + ": difference " + (a - b).str());
}

inline void require_ratfunc_equal(const RatFunc& a, const RatFunc& b,
                                  const std::string& label) {
  if (ratfunc_equal_caps(a, b)) return;
  throw StepFailure(label + ": cross-multiplied difference " +
                    expand_caps(a.num * b.den - b.num * a.den).str());
}

// Numeric variable assignment for t_i = values[i], s_i/c_i = sin/cos(t_i*pi).
inline std::array<double, kVarCount> numeric_vars(const std::array<double, 6>& t) {
  std::array<double, kVarCount> v{};
  for (int i = 1; i <= 6; ++i) {
    double ti = t[static_cast<size_t>(i - 1)];
    v[static_cast<size_t>(index_of(tvar(i)))] = ti;
    v[static_cast<size_t>(index_of(svar(i)))] = std::sin(ti * kPi);
    v[static_cast<size_t>(index_of(cvar(i)))] = std::cos(ti * kPi);
  }
  for (int i : {1, 3, 5}) {
    double s = v[static_cast<size_t>(index_of(svar(i)))];
    double c = v[static_cast<size_t>(index_of(cvar(i)))];
    v[static_cast<size_t>(index_of(Svar(i)))] = s * s;
    v[static_cast<size_t>(index_of(Cvar(i)))] = c * c;
  }
  return v;
}

inline CevianParams random_params(std::mt19937_64& rng, long lo = 10, long hi = 44) {
  std::uniform_int_distribution<long> dist(lo, hi);
  CevianParams p;
  for (auto& x : p.t) x = Rational(dist(rng), 100);
  return p;
}

inline std::pair<double, double> random_angles(std::mt19937_64& rng,
                                               double margin = 0.3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double alpha = margin + u(rng) * (kPi - 3 * margin);
  double beta = margin + u(rng) * (kPi - alpha - 2 * margin);
  return {alpha, beta};
}

// Exact evaluation of a two-variable (t1, t5) rational function.
inline Rational eval_rf_t1t5(const RatFunc& f, const Rational& t1v,
                             const Rational& t5v) {
  std::array<Rational, kVarCount> vals{};
  vals[static_cast<size_t>(index_of(tvar(1)))] = t1v;
  vals[static_cast<size_t>(index_of(tvar(5)))] = t5v;
  Rational den = f.den.eval_rational(vals);
  if (den.is_zero()) throw StepFailure("evaluation hit a zero denominator");
  return f.num.eval_rational(vals) / den;
}

// The subscript merge t3 -> t1, t5 -> t1 (t1 = t3 = t5 case) and t3 -> t1
// alone, acting on all five families.
inline constexpr std::array<int, 7> kMerge31{0, 1, 2, 1, 4, 5, 6};
inline constexpr std::array<int, 7> kMergeAll1{0, 1, 2, 1, 4, 1, 6};

// ---------------------------------------------------------------------------
// Numeric geometry steps
// ---------------------------------------------------------------------------

inline void s01_law_of_sines(PipelineContext&, StepResult& r) {
  std::mt19937_64 rng(1001);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    auto [a, b] = random_angles(rng, 0.2);
    worst = std::max(worst, law_of_sines_defect(a, b));
  }
  require(worst < 1e-13, "length formulas off by " + std::to_string(worst));
  r.note("max deviation " + std::to_string(worst) + " over 200 triangles");
}

inline void s02_law_of_cosines(PipelineContext&, StepResult& r) {
  std::mt19937_64 rng(1002);
  double worst_side = 0, worst_point = 0;
  for (int k = 0; k < 200; ++k) {
    auto [a, b] = random_angles(rng, 0.25);
    CevianParams p = random_params(rng);
    TriangleScene s = construct_scene(a, b, p);
    TriangleScene d = construct_scene_dual(s);
    worst_point = std::max({worst_point, dist(s.G, d.G), dist(s.I, d.I),
                            dist(s.J, d.J)});
    SideLengths coord = side_lengths(s);
    SideLengths closed = side_lengths_closed_form(a, b, p);
    worst_side = std::max({worst_side, std::abs(coord.GI - closed.GI),
                           std::abs(coord.IJ - closed.IJ),
                           std::abs(coord.JG - closed.JG)});
  }
  require(worst_point < 1e-12,
          "dual-path construction disagrees by " + std::to_string(worst_point));
  require(worst_side < 1e-12,
          "squared-length closed forms off by " + std::to_string(worst_side));
  r.note("max point deviation " + std::to_string(worst_point) +
         ", max side deviation " + std::to_string(worst_side));
}

inline void s03_cleared_denominator(PipelineContext&, StepResult& r) {
  std::mt19937_64 rng(1003);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    auto [a, b] = random_angles(rng, 0.3);
    CevianParams p = random_params(rng);
    SideLengths closed = side_lengths_closed_form(a, b, p);
    double lhs = eval_A_direct(a, b, p);
    double rhs = (closed.GI * closed.GI - closed.IJ * closed.IJ) *
                 eval_common_denominator(a, b, p);
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-12});
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  require(worst < 1e-10, "cleared form deviates relatively by " + std::to_string(worst));
  r.note("max relative deviation " + std::to_string(worst) + " over 200 scenes");
}

// ---------------------------------------------------------------------------
// Taylor coefficient steps
// ---------------------------------------------------------------------------

inline void s04_first_coefficient(PipelineContext& ctx, StepResult& r) {
  const MultiPoly& c22 = ctx.full_A().coeff(2, 2);
  MultiPoly display = parse_poly("(-1+c4^2)*(-1+c5^2)*(t1-t2)^2");
  Rational k = require_proportional(c22, display, "alpha^2*beta^2 coefficient");
  r.constant("K", k);
}

inline void s05_rotations(PipelineContext&, StepResult& r) {
  const int N = 4;  // the rotation checks only need the degree-4 slot
  TruncSeries a1 = build_A(1, N);
  Rational k1 = require_proportional(
      a1.coeff(2, 2), parse_poly("(-1+c6^2)*(-1+c1^2)*(t3-t4)^2"),
      "first rotation coefficient");
  TruncSeries a2 = build_A(2, N);
  Rational k2 = require_proportional(
      a2.coeff(2, 2), parse_poly("(-1+c2^2)*(-1+c3^2)*(t5-t6)^2"),
      "second rotation coefficient");
  // The rotated series is the index-shifted original, coefficient for
  // coefficient.
  TruncSeries base = build_A(0, N);
  std::array<int, 7> shift{0, 3, 4, 5, 6, 1, 2};
  for (const auto& [ij, p] : base.coeffs()) {
    require_poly_equal(relabel_indices(p, shift), a1.coeff(ij.first, ij.second),
                       "rotation is not the index shift");
  }
  r.constant("K", k1);
  r.constant("K2", k2);
  r.note("divisibility by (t3-t4)^2 and (t5-t6)^2 confirmed");
}

inline void s06_reduced_series(PipelineContext& ctx, StepResult& r) {
  const TruncSeries& red = ctx.reduced_A();
  TruncSeries direct = build_reduced_A_direct(ctx.degree());
  require(red == direct,
          "pairing substitution disagrees with the direct reduced build");
  // Numeric agreement with the unreduced series under the pairing.
  std::array<double, 6> t{0.23, 0.23, 0.31, 0.31, 0.17, 0.17};
  auto vals = numeric_vars(t);
  double a0 = 0.06, b0 = 0.04;
  double full = ctx.full_A().eval_double(a0, b0, vals);
  double reduced = red.eval_double(a0, b0, vals);
  require(std::abs(full - reduced) < 1e-12,
          "paired evaluation mismatch " + std::to_string(full - reduced));
  r.note("substitution route equals direct build, all coefficients");
}

inline void s07_degree_six_form(PipelineContext& ctx, StepResult& r) {
  const TruncSeries& red = ctx.reduced_A();
  for (int d = 0; d < 6; ++d) {
    if (!red.homogeneous_part(d).is_zero()) {
      r.note("degree-" + std::to_string(d) + " part does not vanish");
    }
  }
  r.note("degrees 0..5 vanish identically");
  const MultiPoly P = pre_system_polynomial();
  const MultiPoly cof = parse_poly("t1^2");
  Rational k = require_proportional(red.coeff(4, 2), cof * P,
                                    "degree-6 leading slot");
  // Whole degree-6 part must be a^2 b^2 (a+b)^2 times the same polynomial.
  for (int i = 0; i <= 6; ++i) {
    int j = 6 - i;
    Rational binom(0);
    if (i == 4 && j == 2) binom = Rational(1);
    if (i == 3 && j == 3) binom = Rational(2);
    if (i == 2 && j == 4) binom = Rational(1);
    MultiPoly expected = cof * P * (k * binom);
    require(equal_mod_pythagorean(red.coeff(i, j), expected),
            "degree-6 slot (" + std::to_string(i) + "," + std::to_string(j) +
                ") is not the expected multiple");
  }
  r.constant("K", k);
  r.note("cofactor t1^2 (nonzero on the admissible domain)");
}

inline void s08_system(PipelineContext& ctx, StepResult& r) {
  const auto& sys = ctx.system();
  const auto& display = forms::system_display();
  for (size_t i = 0; i < 6; ++i) {
    require_poly_equal(sys[i], display[i],
                       "system equation " + std::to_string(i + 1));
  }
  // Division by s3 is legitimate: sin(t3*pi) > 0 for t3 in (0,1).
  MultiPoly recomposed = sys[0] * MultiPoly::variable(svar(3));
  require_poly_equal(recomposed, pre_system_polynomial(),
                     "s3 recomposition of the first equation");
  // All six vanish at the trisector point.
  auto vals = numeric_vars({1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3});
  for (size_t i = 0; i < 6; ++i) {
    double v = sys[i].eval_double(vals);
    require(std::abs(v) < 1e-12, "equation " + std::to_string(i + 1) +
                                     " does not vanish at the trisector point");
  }
  r.note("six equations match, recomposition exact, trisector point satisfies all");
}

inline void s11_second_order_coefficient(PipelineContext& ctx, StepResult& r) {
  const MultiPoly& c52 = ctx.reduced_A().coeff(5, 2);
  const MultiPoly cof = parse_poly("t1^2*t3");
  Rational k = require_proportional(c52, cof * forms::second_order_equation(),
                                    "alpha^5*beta^2 coefficient");
  r.constant("K", k);
  r.note("cofactor t1^2*t3 (nonzero on the admissible domain)");
}

// ---------------------------------------------------------------------------
// System manipulation steps
// ---------------------------------------------------------------------------

inline void s09_s3_closed_form(PipelineContext& ctx, StepResult& r) {
  const auto& sys = ctx.system();
  MultiPoly diff = to_caps(sys[0] * MultiPoly::variable(svar(3)) -
                           sys[1] * MultiPoly::variable(svar(5)));
  MultiPoly expected = parse_poly("2*(t5-t3)*(1-t1)*S3*S5 - t5^2*S3 + t3^2*S5");
  require_poly_equal(diff, expected, "combined difference of equations 1, 2");
  RatFunc s3 = solve_linear(expected, Svar(3));
  require_ratfunc_equal(s3, forms::s3_of_s5(), "S3 closed form");
  r.note("denominator nonzero: if it vanished, t3^2*S5 = 0 would follow");
}

inline void s10_s1_closed_form(PipelineContext& ctx, StepResult&) {
  const auto& sys = ctx.system();
  MultiPoly diff = to_caps(sys[2] * MultiPoly::variable(svar(1)) -
                           sys[3] * MultiPoly::variable(svar(5)));
  MultiPoly expected = parse_poly("2*(t5-t1)*(1-t3)*S1*S5 - t5^2*S1 + t1^2*S5");
  require_poly_equal(diff, expected, "combined difference of equations 3, 4");
  RatFunc s1 = solve_linear(expected, Svar(1));
  require_ratfunc_equal(s1, forms::s1_of_s5(), "S1 closed form");
}

inline void s12_t3_half_branch(PipelineContext&, StepResult& r) {
  MultiPoly reduced = pythagorean_reduce(forms::second_order_equation());
  std::map<Var, MultiPoly> sub{{tvar(3), MultiPoly::constant(Rational(1, 2))},
                               {cvar(3), MultiPoly::zero()}};
  MultiPoly residual = substitute(reduced, sub);
  auto q = exact_divide(residual, parse_poly("(t5-1/2)*c5"));
  require(q.has_value(), "residual is not a multiple of (t5-1/2)*c5: " +
                             residual.str());
  require_poly_equal(*q, parse_poly("3/2*t5*s5"), "branch cofactor");
  r.note("t5 = 1/2 forced, contradicting t4 + t5 = t3 + t5 < 1");
}

inline void s13_t5_half_branch(PipelineContext&, StepResult& r) {
  MultiPoly swapped =
      permute_indices(forms::second_order_equation(), OddPerm::swap(3, 5));
  require_poly_equal(swapped, forms::second_order_equation_swapped(),
                     "swapped second-order equation");
  std::map<Var, MultiPoly> sub{{tvar(5), MultiPoly::constant(Rational(1, 2))},
                               {cvar(5), MultiPoly::zero()}};
  MultiPoly residual = substitute(pythagorean_reduce(swapped), sub);
  auto q = exact_divide(residual, parse_poly("(t3-1/2)*c3"));
  require(q.has_value(), "residual is not a multiple of (t3-1/2)*c3");
  require_poly_equal(*q, parse_poly("3/2*t3*s3"), "branch cofactor");
  r.note("t3 = 1/2 forced, the symmetric contradiction");
}

inline void s14_cosine_products(PipelineContext& ctx, StepResult&) {
  const auto& sys = ctx.system();
  // Each closed form is its equation rearranged (up to the normalization
  // scale of the quotient representation).
  MultiPoly c35 = MultiPoly::variable(cvar(3)) * MultiPoly::variable(cvar(5));
  require_proportional(forms::cos_prod_35().den * c35 - forms::cos_prod_35().num,
                       -sys[0], "first cosine-product form");
  MultiPoly c51 = MultiPoly::variable(cvar(5)) * MultiPoly::variable(cvar(1));
  require_proportional(forms::cos_prod_51().den * c51 - forms::cos_prod_51().num,
                       -sys[3], "second cosine-product form");
  MultiPoly c13 = MultiPoly::variable(cvar(1)) * MultiPoly::variable(cvar(3));
  require_proportional(forms::cos_prod_13().den * c13 - forms::cos_prod_13().num,
                       -sys[4], "third cosine-product form");
  // Their product.
  RatFunc prod = forms::cos_prod_35() * forms::cos_prod_51() * forms::cos_prod_13();
  RatFunc display(
      parse_poly("((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)") *
          parse_poly("((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)") *
          parse_poly("((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)"),
      parse_poly("8*t1^2*t3^2*t5^2"));
  require_ratfunc_equal(prod, display, "product of the three closed forms");
}

inline void s15_squared_products(PipelineContext&, StepResult& r) {
  auto square = [](const RatFunc& f) { return f * f; };
  RatFunc e1sq(parse_poly("((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)^2*s3^2"),
               parse_poly("4*t3^2*t5^2*s5^2"));
  require_ratfunc_equal(square(forms::cos_prod_35()), e1sq, "first square");
  RatFunc e4sq(parse_poly("((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)^2*s5^2"),
               parse_poly("4*t5^2*t1^2*s1^2"));
  require_ratfunc_equal(square(forms::cos_prod_51()), e4sq, "second square");
  RatFunc e5sq(parse_poly("((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)^2*s1^2"),
               parse_poly("4*t3^2*t1^2*s3^2"));
  require_ratfunc_equal(square(forms::cos_prod_13()), e5sq, "third square");
  r.note("squares of the cosine-product forms match the displays");
}

inline void s16_squared_cosine_closed_forms(PipelineContext&, StepResult& r) {
  // c_i^2 = (product of all three) / (square of the form omitting i).
  RatFunc prod = forms::cos_prod_35() * forms::cos_prod_51() * forms::cos_prod_13();
  RatFunc c1sq = prod / (forms::cos_prod_35() * forms::cos_prod_35());
  RatFunc c3sq = prod / (forms::cos_prod_51() * forms::cos_prod_51());
  RatFunc c5sq = prod / (forms::cos_prod_13() * forms::cos_prod_13());

  RatFunc c1sq_display(
      parse_poly("s5^2*((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)"
                 "*((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)"),
      parse_poly("2*t1^2*s3^2*((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)"));
  require_ratfunc_equal(c1sq, c1sq_display, "first squared-cosine form");
  RatFunc c3sq_display(
      parse_poly("s1^2*((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)"
                 "*((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)"),
      parse_poly("2*t3^2*s5^2*((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)"));
  require_ratfunc_equal(c3sq, c3sq_display, "second squared-cosine form");
  RatFunc c5sq_display(
      parse_poly("s3^2*((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)"
                 "*((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)"),
      parse_poly("2*t5^2*s1^2*((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)"));
  require_ratfunc_equal(c5sq, c5sq_display, "third squared-cosine form");

  // Substituting the S1, S3 closed forms yields the C_i displays.
  std::map<Var, RatFunc> subs{{Svar(1), forms::s1_of_s5()},
                              {Svar(3), forms::s3_of_s5()}};
  RatFunc C1 = substitute_ratfunc(
      RatFunc(to_caps(c1sq_display.num), to_caps(c1sq_display.den)), subs);
  require_ratfunc_equal(C1, forms::c1_sq_closed(), "C1 closed form");
  RatFunc C3 = substitute_ratfunc(
      RatFunc(to_caps(c3sq_display.num), to_caps(c3sq_display.den)), subs);
  require_ratfunc_equal(C3, forms::c3_sq_closed(), "C3 closed form");
  RatFunc C5 = substitute_ratfunc(
      RatFunc(to_caps(c5sq_display.num), to_caps(c5sq_display.den)), subs);
  require_ratfunc_equal(C5, forms::c5_sq_closed(), "C5 closed form");
  r.note("squared-cosine displays and their S5-only forms all match");
}

inline void s17_mixed_term(PipelineContext&, StepResult&) {
  // (s3*s5 - c3*c5)*s3 with the cosine product eliminated, then S3 -> S3(S5).
  RatFunc b1_term(forms::bracket_135_caps() * MultiPoly::variable(Svar(3)),
                  parse_poly("2*t3*t5*s5"));
  RatFunc expr = RatFunc::from_poly(parse_poly("S3*s5")) - b1_term;
  RatFunc expr2 = substitute_ratfunc(expr, {{Svar(3), forms::s3_of_s5()}});
  RatFunc display(parse_poly("s5*t3*((1-t1)*(1-t1-2*t3)*S5-t5^2)"),
                  parse_poly("2*t5*(2*(t5-t3)*(1-t1)*S5-t5^2)"));
  require_ratfunc_equal(RatFunc(to_caps(expr2.num), to_caps(expr2.den)),
                        display, "mixed sine-cosine term");
}

inline void s18_quadratic_term(PipelineContext&, StepResult&) {
  RatFunc lhs = substitute_ratfunc(
      parse_poly("(t1-1)*(t1-2+3*t5)*S3 - 3/2*t3^2"),
      {{Svar(3), forms::s3_of_s5()}});
  RatFunc display(parse_poly("-t3^2*(2*(1-t1)*(2-t1-3*t3)*S5-3*t5^2)"),
                  parse_poly("4*(t5-t3)*(1-t1)*S5-2*t5^2"));
  require_ratfunc_equal(lhs, display, "quadratic bracket");
}

inline void s19_collected_equation(PipelineContext&, StepResult& r) {
  // The full right-hand bracket times c5.
  RatFunc b1_term(forms::bracket_135_caps() * MultiPoly::variable(Svar(3)),
                  parse_poly("2*t3*t5*s5"));
  RatFunc mixed = substitute_ratfunc(
      RatFunc::from_poly(parse_poly("S3*s5")) - b1_term,
      {{Svar(3), forms::s3_of_s5()}});
  RatFunc quad = substitute_ratfunc(
      parse_poly("(t1-1)*(t1-2+3*t5)*S3 - 3/2*t3^2"),
      {{Svar(3), forms::s3_of_s5()}});
  RatFunc bracket =
      (RatFunc::constant(Rational(3, 2)) * RatFunc::from_poly(parse_poly("t3*t5")) * mixed +
       RatFunc::from_poly(MultiPoly::variable(svar(5))) * quad) *
      RatFunc::from_poly(MultiPoly::variable(cvar(5)));
  RatFunc display(parse_poly("c5*s5*t3^2*((1-t1)*(t1-5+6*t3)*S5+3*t5^2)"),
                  parse_poly("8*(t5-t3)*(1-t1)*S5-4*t5^2"));
  require_ratfunc_equal(RatFunc(to_caps(bracket.num), to_caps(bracket.den)),
                        display, "collected right-hand side");

  // Dividing both sides of the rearranged equation by c5*s5*t3.
  RatFunc divisor = RatFunc::from_poly(parse_poly("c5*s5*t3"));
  RatFunc lhs(parse_poly("-3/2*t3*s5*s3*(t3+t5-1)*(s3*c5+c3*s5)"),
              MultiPoly::constant(Rational(1)));
  RatFunc lhs_div = lhs / divisor;
  RatFunc lhs_display(parse_poly("-3/2*(t3+t5-1)*(S3*c5+s3*c3*s5)"),
                      MultiPoly::variable(cvar(5)));
  require_ratfunc_equal(lhs_div, lhs_display, "left-hand side after division");
  RatFunc rhs_div = display / divisor;
  RatFunc rhs_display(parse_poly("t3*((1-t1)*(t1-5+6*t3)*S5+3*t5^2)"),
                      parse_poly("8*(t5-t3)*(1-t1)*S5-4*t5^2"));
  require_ratfunc_equal(rhs_div, rhs_display, "right-hand side after division");
  r.note("division by c5*s5*t3 justified: all three factors nonzero in this branch");
}

inline void s20_combined_left_side(PipelineContext&, StepResult&) {
  // c3/c5 from the ratio of the two cosine-product forms.
  RatFunc ratio = forms::cos_prod_13() / forms::cos_prod_51();
  RatFunc ratio_display(
      parse_poly("((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*S3-t3^2)*S1*t5"),
      parse_poly("((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*S1-t1^2)*s3*s5*t3"));
  require_ratfunc_equal(RatFunc(to_caps(ratio.num), to_caps(ratio.den)),
                        ratio_display, "cosine ratio");

  RatFunc combo = RatFunc::from_poly(MultiPoly::variable(Svar(3))) +
                  RatFunc::from_poly(parse_poly("s3*s5")) * ratio_display;
  RatFunc combo2 = substitute_ratfunc(
      combo, {{Svar(3), forms::s3_of_s5()}, {Svar(1), forms::s1_of_s5()}});
  RatFunc display(
      parse_poly("-t3*S5*((t3-2*t3^2-2*t1*t3+2*t1*t3^2+t3^3+6*t1*t3*t5-2*t1*t5"
                 "+t5^3-2*t3*t5+t5)*S5 - t3*t5^2 - t5^3)"),
      parse_poly("(2*(t5-t3)*(1-t1)*S5-t5^2)"
                 "*((2*t5*t1-2*t1+2*t1*t3+t3^2-2*t3+1)*S5-t5^2)"));
  require_ratfunc_equal(RatFunc(to_caps(combo2.num), to_caps(combo2.den)),
                        display, "combined left side");
}

inline void s21_s5_quadratic(PipelineContext&, StepResult& r) {
  MultiPoly NL = parse_poly(
      "(t3-2*t3^2-2*t1*t3+2*t1*t3^2+t3^3+6*t1*t3*t5-2*t1*t5+t5^3-2*t3*t5+t5)*S5"
      " - t3*t5^2 - t5^3");
  MultiPoly G4 = parse_poly("(2*t5*t1-2*t1+2*t1*t3+t3^2-2*t3+1)*S5-t5^2");
  MultiPoly G = parse_poly("6*(t3+t5-1)*S5") * NL -
                parse_poly("(1-t1)*(t1-5+6*t3)*S5+3*t5^2") * G4;
  auto k = proportionality_constant(G, forms::s5_quadratic());
  require(k.has_value(), "collected equation is not a multiple of the quadratic");
  r.constant("K", *k);
  r.note("quadratic obtained after clearing the two nonzero denominators");
}

inline void s22_swapped_quadratic(PipelineContext&, StepResult&) {
  MultiPoly swapped = permute_indices(forms::s5_quadratic(), OddPerm::swap(1, 3));
  MultiPoly display = parse_poly(
      "(5-72*t1*t3*t5-22*t1+35*t1^2-16*t3+52*t1*t3-54*t3*t1^2+22*t3*t5+24*t1*t5"
      "-12*t1*t5^2-6*t5-24*t1^3-6*t5^3+6*t5^2+13*t1^2*t3^2-24*t1^2*t5+6*t5*t1^3+18*t3*t1^3"
      "-12*t3^2*t5-26*t3^2*t1+2*t3^3*t5+2*t3^3*t1+6*t1*t5^3+13*t3^2-12*t3*t5^2+6*t5^4-2*t3^3"
      "+6*t1^4+36*t1*t3*t5^2+48*t3*t1^2*t5+12*t3^2*t1*t5)*S5^2"
      "+(-12*t1*t3*t5^2-6*t5^3*t3+12*t3*t5^2-9*t1^2*t5^2-12*t1*t5^3+18*t1*t5^2"
      "+6*t5^3-t3^2*t5^2-8*t5^2-6*t5^4)*S5+3*t5^4");
  require_poly_equal(swapped, display, "swapped quadratic");
}

inline void s23_factored_difference(PipelineContext&, StepResult& r) {
  MultiPoly quad1 = forms::s5_quadratic();
  MultiPoly quad3 = permute_indices(quad1, OddPerm::swap(1, 3));
  MultiPoly diff = quad1 - quad3;
  MultiPoly factored = parse_poly("(t1-t3)") *
                       (forms::s5_coefficient_cubic() * MultiPoly::variable(Svar(5)) -
                        forms::s5_rhs());
  auto q = exact_divide(diff, factored);
  require(q.has_value(), "difference does not factor as displayed");
  auto k = proportionality_constant(*q, MultiPoly::variable(Svar(5)));
  require(k.has_value(), "cofactor is not a multiple of S5");
  r.constant("K", *k);
  r.note("cofactor " + q->str() + "; S5 nonzero justifies dropping it");

  // The two index swaps displayed for later use.
  MultiPoly s3eq = permute_indices(factored, OddPerm::swap(3, 5));
  MultiPoly s3eq_display =
      parse_poly("(t1-t5)") *
      (forms::s3_coefficient_cubic() * MultiPoly::variable(Svar(3)) - forms::s3_rhs());
  require_poly_equal(s3eq, s3eq_display, "3<->5 swap");
  MultiPoly s1eq = permute_indices(factored, OddPerm::swap(1, 5));
  MultiPoly s1eq_display =
      parse_poly("(t5-t3)") *
      (forms::s1_coefficient_cubic() * MultiPoly::variable(Svar(1)) - forms::s1_rhs());
  require_poly_equal(s1eq, s1eq_display, "1<->5 swap");
}

// ---------------------------------------------------------------------------
// Case analysis: t1 = t3, t1 != t5
// ---------------------------------------------------------------------------

inline void s24_paired_case_setup(PipelineContext&, StepResult& r) {
  // With t1 = t3 and t1 != t5, the 3<->5 swapped equation divides by
  // (t1 - t5) and merges the subscripts 3 -> 1.
  MultiPoly merged_coeff = relabel_indices(forms::s3_coefficient_cubic(), kMerge31);
  require_poly_equal(merged_coeff, forms::paired_delta1(), "merged coefficient");
  MultiPoly merged_rhs = relabel_indices(forms::s3_rhs(), kMerge31);
  require_poly_equal(merged_rhs, parse_poly("t1^2*(7*t1+4*t5-3)"), "merged right side");

  // Substituting the S1(S5) closed form (with t3 = t1) gives the S5 relation.
  RatFunc s1_merged(relabel_indices(forms::s1_of_s5().num, kMerge31),
                    relabel_indices(forms::s1_of_s5().den, kMerge31));
  RatFunc lhs = substitute_ratfunc(
      merged_coeff * MultiPoly::variable(Svar(1)) - merged_rhs,
      {{Svar(1), s1_merged}});
  MultiPoly s5_relation = forms::paired_delta5() * MultiPoly::variable(Svar(5)) -
                          parse_poly("t5^2*(7*t1+4*t5-3)");
  RatFunc target(parse_poly("-t1^2") * s5_relation, s1_merged.den);
  require_ratfunc_equal(lhs, target, "S5 relation after substitution");
  r.note("cofactor -t1^2 dropped (t1 != 0)");

  // Zero-coefficient subcase: both the cubic coefficient and 7t1+4t5-3
  // vanish; eliminating t5 leaves (11t1-3)(131t1^2-42t1+7).
  MultiPoly t5_binding = parse_poly("(3-7*t1)*1/4");
  require(substitute(parse_poly("7*t1+4*t5-3"), {{tvar(5), t5_binding}}).is_zero(),
          "linear relation does not eliminate t5");
  MultiPoly reduced = substitute(forms::paired_delta5(), {{tvar(5), t5_binding}});
  Rational k = require_proportional(reduced, parse_poly("(11*t1-3)*(131*t1^2-42*t1+7)"),
                                    "eliminated coefficient");
  r.constant("K", k);
  auto cert = sturm_sign_certificate(parse_poly("131*t1^2-42*t1+7"), tvar(1),
                                     std::nullopt, std::nullopt);
  require(cert.verdict == SignVerdict::positive, "quadratic factor is not positive");
  // t1 = 3/11 forces t5 = (3 - 21/11)/4 = 3/11 = t1, the contradiction.
  std::array<Rational, kVarCount> vals{};
  vals[static_cast<size_t>(index_of(tvar(1)))] = Rational(3, 11);
  Rational t5_val = t5_binding.eval_rational(vals);
  require(t5_val == Rational(3, 11), "t5 value unexpected");
  r.note("subcase forces t1 = t5 = 3/11, contradicting t1 != t5");
}

inline void s25_paired_closed_forms(PipelineContext&, StepResult&) {
  MultiPoly s5_relation = forms::paired_delta5() * MultiPoly::variable(Svar(5)) -
                          parse_poly("t5^2*(7*t1+4*t5-3)");
  RatFunc s5 = solve_linear(s5_relation, Svar(5));
  require_ratfunc_equal(s5, forms::paired_s5(), "S5 closed form");

  std::map<Var, RatFunc> sub5{{Svar(5), forms::paired_s5()}};
  RatFunc s1_merged(relabel_indices(forms::s1_of_s5().num, kMerge31),
                    relabel_indices(forms::s1_of_s5().den, kMerge31));
  require_ratfunc_equal(substitute_ratfunc(s1_merged, sub5), forms::paired_s1(),
                        "S1 closed form");

  RatFunc c1_merged(relabel_indices(forms::c1_sq_closed().num, kMerge31),
                    relabel_indices(forms::c1_sq_closed().den, kMerge31));
  require_ratfunc_equal(substitute_ratfunc(c1_merged, sub5), forms::paired_c1(),
                        "C1 closed form");
  RatFunc c5_merged(relabel_indices(forms::c5_sq_closed().num, kMerge31),
                    relabel_indices(forms::c5_sq_closed().den, kMerge31));
  require_ratfunc_equal(substitute_ratfunc(c5_merged, sub5), forms::paired_c5(),
                        "C5 closed form");
}

inline void s26_elimination(PipelineContext&, StepResult& r) {
  // S1 + C1 - 1 = 0 clears to q1; S5 + C5 - 1 = 0 clears to q5.
  RatFunc one = RatFunc::constant(Rational(1));
  RatFunc sum1 = forms::paired_s1() + forms::paired_c1() - one;
  auto quot1 = exact_divide(sum1.num, forms::elimination_q1());
  require(quot1.has_value(), "first Pythagorean numerator is not a q1 multiple");
  auto k1 = proportionality_constant(*quot1, forms::paired_delta1());
  require(k1.has_value(), "unexpected cofactor for q1");
  r.constant("K", *k1);

  RatFunc sum5 = forms::paired_s5() + forms::paired_c5() - one;
  auto quot5 = exact_divide(sum5.num, forms::elimination_q5());
  require(quot5.has_value(), "second Pythagorean numerator is not a q5 multiple");
  auto k5 = proportionality_constant(*quot5, forms::paired_delta5());
  require(k5.has_value(), "unexpected cofactor for q5");
  r.constant("K5", *k5);
  r.note("cofactors are the nonzero closed-form denominators");

  // Resultants eliminate one variable each.
  MultiPoly res5 = sylvester_resultant(forms::elimination_q1(),
                                       forms::elimination_q5(), tvar(5));
  std::vector<std::pair<MultiPoly, unsigned>> f5 = {
      {parse_poly("38*t1-7"), 1},  {parse_poly("61*t1^2-98*t1+49"), 1},
      {parse_poly("11*t1-3"), 2},  {parse_poly("131*t1^2-42*t1+7"), 2},
      {parse_poly("2*t1-1"), 6}};
  require(verify_factorization(res5, Rational(48), f5),
          "t5 elimination does not match the displayed factorization");

  MultiPoly res1 = sylvester_resultant(forms::elimination_q1(),
                                       forms::elimination_q5(), tvar(1));
  std::vector<std::pair<MultiPoly, unsigned>> f1 = {
      {parse_poly("38*t5-23"), 1}, {parse_poly("61*t5^2+144*t5+111"), 1},
      {parse_poly("11*t5-3"), 2},  {parse_poly("131*t5^2-123*t5+40"), 2},
      {parse_poly("2*t5-1"), 6}};
  require(verify_factorization(res1, Rational(-48), f1),
          "t1 elimination does not match the corrected factorization");
  r.note("second factorization needs 61*t5^2+144*t5+111; the displayed "
         "constant term 11 is a misprint (degree check: 15 = 1+2+2+4+6)");

  // Quadratic factors are positive, so only the linear factors carry roots.
  for (const char* q : {"61*t1^2-98*t1+49", "131*t1^2-42*t1+7",
                        "61*t1^2+144*t1+111", "131*t1^2-123*t1+40"}) {
    auto cert = sturm_sign_certificate(parse_poly(q), tvar(1), std::nullopt,
                                       std::nullopt);
    require(cert.verdict == SignVerdict::positive,
            std::string("factor not positive: ") + q);
  }
  r.note("root candidates: t1 in {7/38, 3/11, 1/2}, t5 in {23/38, 3/11, 1/2}");
}

inline void s27_candidate_exclusions(PipelineContext& ctx, StepResult& r) {
  // Admissibility filter: t1 + t3 = 2*t1 < 1 kills t1 = 1/2; t1 != t5; the
  // pair sums stay below 1.
  std::vector<Rational> t1_roots = {Rational(7, 38), Rational(3, 11), Rational(1, 2)};
  std::vector<Rational> t5_roots = {Rational(23, 38), Rational(3, 11), Rational(1, 2)};
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& a : t1_roots) {
    if (Rational(2) * a >= Rational(1)) continue;
    for (const auto& b : t5_roots) {
      if (a == b) continue;
      if (a + b >= Rational(1)) continue;
      pairs.emplace_back(a, b);
    }
  }
  require(pairs.size() == 5, "expected exactly five surviving candidate pairs");

  // The S1 closed form evaluates to the five quoted rationals, three for
  // t1 = 7/38 and two for t1 = 3/11.
  std::set<std::string> quoted_738 = {Rational(147, 211).fraction_str(),
                                      Rational(5929, 46828).fraction_str(),
                                      Rational(539, 4283).fraction_str()};
  std::set<std::string> quoted_311 = {Rational(17328, 7199).fraction_str(),
                                      Rational(144, 229).fraction_str()};
  std::set<std::string> quoted_set, computed_set;
  quoted_set.insert(quoted_738.begin(), quoted_738.end());
  quoted_set.insert(quoted_311.begin(), quoted_311.end());

  int excluded = 0;
  for (const auto& [a, b] : pairs) {
    Rational rhs = eval_rf_t1t5(forms::paired_s1(), a, b);
    computed_set.insert(rhs.fraction_str());
    const auto& group = (a == Rational(7, 38)) ? quoted_738 : quoted_311;
    require(group.count(rhs.fraction_str()) == 1,
            "candidate value " + rhs.str() + " not in the quoted group for t1 = " +
                a.str());
    if (rhs > Rational(1) || rhs.sign() < 0) {
      ++excluded;  // sin^2 lies in [0, 1]
      r.note("pair (" + a.str() + ", " + b.str() + "): value " + rhs.str() +
             " outside [0,1]");
      continue;
    }
    PrecisionInterval enc = certified_sin_sq(
        static_cast<long>(a.num().get_si()), static_cast<long>(a.den().get_si()),
        ctx.config().precision_bits);
    require(enc.excludes(rhs), "interval fails to exclude " + rhs.str());
    ++excluded;
  }
  require(computed_set == quoted_set,
          "computed candidate values do not match the quoted list");
  require(excluded == 5, "not all candidates excluded");
  r.note("all five candidate pairs excluded with certified enclosures");
}

// ---------------------------------------------------------------------------
// Case t1 = t3 = t5 and the exact identity
// ---------------------------------------------------------------------------

inline void s28_fully_paired_case(PipelineContext& ctx, StepResult& r) {
  const auto& sys = ctx.system();
  // First equation with every subscript merged, divided by s1.
  MultiPoly merged = relabel_indices(sys[0], kMergeAll1);
  auto q = exact_divide(merged, MultiPoly::variable(svar(1)));
  require(q.has_value(), "merged equation is not divisible by s1");
  MultiPoly caps = substitute(to_caps(*q),
                              {{Cvar(1), parse_poly("1-S1")}});
  RatFunc s1_first = solve_linear(caps, Svar(1));
  RatFunc display1(parse_poly("3*t1^2"), parse_poly("7*t1^2-4*t1+1"));
  require_ratfunc_equal(s1_first, display1, "first S1 form");
  auto cert1 = sturm_sign_certificate(parse_poly("7*t1^2-4*t1+1"), tvar(1),
                                      std::nullopt, std::nullopt);
  require(cert1.verdict == SignVerdict::positive, "first denominator not positive");

  // Second relation from the degree-7 equation, divided by s1*c1.
  MultiPoly merged7 = relabel_indices(forms::second_order_equation(), kMergeAll1);
  auto q7 = exact_divide(merged7, parse_poly("s1*c1"));
  require(q7.has_value(), "merged second-order equation is not divisible by s1*c1");
  MultiPoly caps7 = substitute(to_caps(*q7), {{Cvar(1), parse_poly("1-S1")}});
  RatFunc s1_second = solve_linear(caps7, Svar(1));
  RatFunc display2(parse_poly("3*t1^2"), parse_poly("13*t1^2-9*t1+2"));
  require_ratfunc_equal(s1_second, display2, "second S1 form");
  auto cert2 = sturm_sign_certificate(parse_poly("13*t1^2-9*t1+2"), tvar(1),
                                      std::nullopt, std::nullopt);
  require(cert2.verdict == SignVerdict::positive, "second denominator not positive");
  r.note("c1 = 0 would force t1 = 1/2, excluded by 2*t1 < 1");

  // Equating the two forms: 3*t1^2*(6*t1^2-5*t1+1) = 0.
  MultiPoly cross = display1.num * display2.den - display2.num * display1.den;
  Rational k = require_proportional(cross, parse_poly("t1^2*(6*t1^2-5*t1+1)"),
                                    "cross-multiplied difference");
  r.constant("K", k);
  auto roots = quad_roots(Rational(6), Rational(-5), Rational(1));
  require(roots.size() == 2, "expected two roots");
  std::set<std::string> root_set;
  for (const auto& rt : roots) root_set.insert(rt.rational_value().fraction_str());
  require(root_set == std::set<std::string>{"1/3", "1/2"}, "unexpected roots");

  CevianParams half;
  half.t.fill(Rational(1, 2));
  require(!half.admissible(), "t = 1/2 should violate admissibility");
  CevianParams third = CevianParams::trisector();
  require(third.admissible(), "t = 1/3 should be admissible");
  r.note("roots 1/3 and 1/2; 1/2 rejected because t2 + t3 = 1 is not < 1");
}

inline void s29_exact_identity(PipelineContext&, StepResult& r) {
  // The compiled identity: every Laurent coefficient vanishes exactly.
  auto terms = trisector_identity_terms();
  auto check = verify_morley_identity(terms);
  require(check.ok, "residue " + check.residue.str());

  // Transcription guard: each compiled summand agrees numerically with the
  // corresponding summand of the original expression at t = 1/3.
  CevianParams third = CevianParams::trisector();
  std::mt19937_64 rng(2029);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  for (int k = 0; k < 25; ++k) {
    double x = u(rng), y = u(rng);
    auto original = eval_A_terms(3 * x, 3 * y, third);
    for (size_t i = 0; i < terms.size(); ++i) {
      double direct = terms[i].eval(x, y);
      double compiled = terms[i].compiled().eval(x, y).real();
      require(std::abs(direct - original[i]) < 1e-12,
              "summand " + std::to_string(i) + " transcription mismatch");
      require(std::abs(compiled - direct) < 1e-12,
              "summand " + std::to_string(i) + " compilation mismatch");
    }
  }
  r.note("all Laurent coefficients exactly zero; summands match numerically");
}

// ---------------------------------------------------------------------------
// All-distinct case
// ---------------------------------------------------------------------------

inline void s30_all_distinct_setup(PipelineContext&, StepResult& r) {
  // If all three S-coefficients vanish, the linear system forces 3/11.
  //   4*t1 + 4*t3 + 3*t5 = 3
  //   4*t1 + 3*t3 + 4*t5 = 3
  //   3*t1 + 4*t3 + 4*t5 = 3
  // Cramer over the rationals.
  using Mat3 = std::array<std::array<long, 3>, 3>;
  const Mat3 A = {{{4, 4, 3}, {4, 3, 4}, {3, 4, 4}}};
  auto det3 = [](const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  long det = det3(A);
  require(det != 0, "singular coefficient matrix");
  for (int col = 0; col < 3; ++col) {
    Mat3 M = A;
    for (int i = 0; i < 3; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(col)] = 3;
    Rational x(det3(M), det);
    require(x == Rational(3, 11), "solution component is not 3/11");
  }
  r.note("all-zero subcase forces t1 = t3 = t5 = 3/11, contradicting distinctness");

  // If only the S3 and S1 coefficients vanish, subtracting the two right
  // sides forces t1 = t3.
  MultiPoly diff = parse_poly("(4*t1-3+3*t3+4*t5) - (4*t5-3+3*t1+4*t3)");
  require_poly_equal(diff, parse_poly("t1-t3"), "two-zero subcase reduction");
  r.note("so at least the S5 and S3 coefficients are nonzero");
}

inline void s31_all_distinct_closed_forms(PipelineContext&, StepResult&) {
  // Solving each rearranged equation for its S variable.
  MultiPoly rel5 = forms::s5_coefficient_cubic() * MultiPoly::variable(Svar(5)) -
                   forms::s5_rhs();
  require_ratfunc_equal(solve_linear(rel5, Svar(5)), forms::s5_square_all_distinct(),
                        "S5 closed form");
  MultiPoly rel3 = forms::s3_coefficient_cubic() * MultiPoly::variable(Svar(3)) -
                   forms::s3_rhs();
  require_ratfunc_equal(solve_linear(rel3, Svar(3)), forms::s3_square_v1(),
                        "S3 closed form");
  MultiPoly rel1 = forms::s1_coefficient_cubic() * MultiPoly::variable(Svar(1)) -
                   forms::s1_rhs();
  require_ratfunc_equal(solve_linear(rel1, Svar(1)), forms::s1_square_v2(),
                        "S1 closed form");

  // Substituting the S5 form into the earlier S1(S5), S3(S5) relations.
  std::map<Var, RatFunc> sub5{{Svar(5), forms::s5_square_all_distinct()}};
  require_ratfunc_equal(substitute_ratfunc(forms::s1_of_s5(), sub5),
                        forms::s1_square_via_s5(), "second S1 form");
  require_ratfunc_equal(substitute_ratfunc(forms::s3_of_s5(), sub5),
                        forms::s3_square_via_s5(), "second S3 form");
}

inline void s32_cubic_identities(PipelineContext&, StepResult& r) {
  // Equal left sides: the cross-multiplied differences factor through the
  // displayed cubics.
  MultiPoly diff1 = forms::s1_square_v2().num * forms::s1_square_via_s5().den -
                    forms::s1_square_via_s5().num * forms::s1_square_v2().den;
  MultiPoly pref1 = parse_poly("t1^2*(t1-t5)") * forms::distinct_case_cubic_1();
  Rational k1 = require_proportional(diff1, pref1, "first equated pair");
  r.constant("K", k1);

  MultiPoly diff3 = forms::s3_square_v1().num * forms::s3_square_via_s5().den -
                    forms::s3_square_via_s5().num * forms::s3_square_v1().den;
  MultiPoly pref3 = parse_poly("t3^2*(t3-t5)") * forms::distinct_case_cubic_2();
  Rational k3 = require_proportional(diff3, pref3, "second equated pair");
  r.constant("K2", k3);
  r.note("prefactors t1^2*(t1-t5) and t3^2*(t3-t5) are nonzero by the case "
         "assumptions, leaving the two cubics");

  // Summing the two cubics factors as displayed.
  MultiPoly sum = forms::distinct_case_cubic_1() + forms::distinct_case_cubic_2();
  std::vector<std::pair<MultiPoly, unsigned>> factors = {
      {parse_poly("t1-t3"), 1},
      {parse_poly("t1+t3+t5"), 1},
      {parse_poly("4*t1-3+3*t5+4*t3"), 1}};
  require(verify_factorization(sum, Rational(1), factors),
          "sum of cubics does not factor as displayed");
  r.note("t1 != t3 and t1+t3+t5 > 0 leave 4*t1-3+3*t5+4*t3 = 0");
}

inline void s33_case_a_reduction(PipelineContext&, StepResult& r) {
  // Case A: the S1 coefficient vanishes together with its right side.
  require_poly_equal(forms::s1_coefficient_cubic(),
                     permute_indices(forms::s5_coefficient_cubic(), OddPerm::swap(1, 5)),
                     "S1 coefficient cubic");
  MultiPoly rhs_factor = parse_poly("4*t5-3+3*t1+4*t3");
  require(substitute(rhs_factor, {{tvar(5), forms::case_a_t5_binding()}}).is_zero(),
          "t5 binding does not kill the right-side factor");
  MultiPoly reduced = substitute(forms::s1_coefficient_cubic(),
                                 {{tvar(5), forms::case_a_t5_binding()}});
  Rational k = require_proportional(reduced, forms::case_a_p1(), "reduced constraint");
  r.constant("K", k);
}

inline void s34_case_a_closed_forms(PipelineContext&, StepResult& r) {
  std::map<Var, RatFunc> t5sub{
      {tvar(5), RatFunc::from_poly(forms::case_a_t5_binding())}};
  require_ratfunc_equal(substitute_ratfunc(forms::s5_square_all_distinct(), t5sub),
                        forms::case_a_s5(), "S5 under the Case A binding");
  require_ratfunc_equal(substitute_ratfunc(forms::s3_square_v1(), t5sub),
                        forms::case_a_s3(), "S3 under the Case A binding");
  std::map<Var, RatFunc> both{
      {tvar(5), RatFunc::from_poly(forms::case_a_t5_binding())},
      {Svar(5), forms::case_a_s5()}};
  require_ratfunc_equal(substitute_ratfunc(forms::s3_of_s5(), both),
                        forms::case_a_s3_v2(), "second S3 route");

  MultiPoly diff = forms::case_a_s3().num * forms::case_a_s3_v2().den -
                   forms::case_a_s3_v2().num * forms::case_a_s3().den;
  MultiPoly display = parse_poly("-16*t3^2*(-3+3*t1+8*t3)") * forms::case_a_p3();
  Rational k = require_proportional(diff, display, "equated S3 routes");
  r.constant("K", k);
}

inline void s35_case_a_first_subcase(PipelineContext&, StepResult& r) {
  // Subcase with -3 + 3*t1 + 8*t3 = 0.
  MultiPoly t3_binding = parse_poly("(3-3*t1)*1/8");
  MultiPoly reduced = substitute(forms::case_a_p1(), {{tvar(3), t3_binding}});
  Rational k = require_proportional(reduced, parse_poly("(11*t1-3)*(57*t1^2-36*t1-5)"),
                                    "reduced constraint");
  r.constant("K", k);

  auto roots = quad_roots(Rational(57), Rational(-36), Rational(-5));
  require(roots.size() == 2, "expected two quadratic roots");
  const QuadExt& pos = roots[0].sign() > 0 ? roots[0] : roots[1];
  const QuadExt& neg = roots[0].sign() > 0 ? roots[1] : roots[0];
  require(neg.sign() < 0, "third root is not negative");
  QuadExt expected_pos(Rational(6, 19), Rational(1, 57), Rational(1), 609);
  require(pos == expected_pos, "positive quadratic root unexpected: " + pos.str());

  // t1 = 3/11 leads back to t3 = 3/11 = t1.
  std::array<Rational, kVarCount> vals{};
  vals[static_cast<size_t>(index_of(tvar(1)))] = Rational(3, 11);
  require(t3_binding.eval_rational(vals) == Rational(3, 11),
          "root 3/11 does not merge t3 with t1");

  // The surviving root gives t3 = 39/152 - sqrt(609)/152 and then t5 = t3.
  QuadExt t3_val = (QuadExt::rational(Rational(3)) - pos * Rational(3)) *
                   Rational(1, 8);
  QuadExt t3_expected(Rational(39, 152), Rational(-1, 152), Rational(1), 609);
  require(t3_val == t3_expected, "t3 value unexpected: " + t3_val.str());
  MultiPoly t5_expr = substitute(forms::case_a_t5_binding(), {{tvar(3), t3_binding}});
  require_poly_equal(t5_expr, t3_binding, "t5 equals t3 identically in this subcase");
  r.note("t5 = t3 = 39/152 - sqrt(609)/152 contradicts t3 != t5");
}

inline void s36_case_a_resultants(PipelineContext&, StepResult& r) {
  MultiPoly res3 = sylvester_resultant(forms::case_a_p1(), forms::case_a_p3(), tvar(3));
  std::vector<std::pair<MultiPoly, unsigned>> f3 = {
      {parse_poly("11*t1-3"), 2},
      {parse_poly("t1+3"), 2},
      {parse_poly("131*t1^2-42*t1+7"), 2}};
  require(verify_factorization(res3, Rational(1, 16), f3),
          "t3 elimination does not match the displayed factorization");

  MultiPoly res1 = sylvester_resultant(forms::case_a_p1(), forms::case_a_p3(), tvar(1));
  std::vector<std::pair<MultiPoly, unsigned>> f1 = {
      {parse_poly("5*t3^2-15*t3-8"), 1},
      {parse_poly("131*t3^2-42*t3+7"), 1},
      {parse_poly("131*t3^2-123*t3+40"), 1},
      {parse_poly("11*t3-3"), 2}};
  require(verify_factorization(res1, Rational(-9), f1),
          "t1 elimination does not match the corrected factorization");
  r.note("the 11*t3-3 factor appears squared; the display drops the exponent "
         "(degree check: 8 = 2+2+2+2)");

  auto pos_r = sturm_sign_certificate(parse_poly("t1+3"), tvar(1), Rational(0),
                                      Rational(1));
  require(pos_r.verdict == SignVerdict::positive, "t1+3 not positive on [0,1]");
  for (const char* q : {"131*t1^2-42*t1+7", "131*t1^2-123*t1+40"}) {
    auto cert = sturm_sign_certificate(parse_poly(q), tvar(1), std::nullopt,
                                       std::nullopt);
    require(cert.verdict == SignVerdict::positive,
            std::string("factor not positive: ") + q);
  }
  auto negc = sturm_sign_certificate(parse_poly("5*t3^2-15*t3-8"), tvar(3),
                                     Rational(0), Rational(1));
  require(negc.verdict == SignVerdict::negative,
          "5*t3^2-15*t3-8 is not negative on [0,1]");
  r.note("only t1 = 3/11 and t3 = 3/11 survive, contradicting t1 != t3");
}

inline void s37_case_b_closure(PipelineContext&, StepResult& r) {
  // Case B keeps the S1 coefficient nonzero; the sum identity forces
  // 4*t1 - 3 + 3*t5 + 4*t3 = 0, which kills the S5 right side, so the S5
  // coefficient would have to vanish after all.
  MultiPoly t5_binding = parse_poly("(3-4*t1-4*t3)*1/3");
  require(substitute(parse_poly("4*t1-3+3*t5+4*t3"), {{tvar(5), t5_binding}}).is_zero(),
          "binding does not solve the linear relation");
  MultiPoly rhs = substitute(forms::s5_rhs(), {{tvar(5), t5_binding}});
  require(rhs.is_zero(), "right side does not vanish identically");
  r.note("S5 times a nonzero coefficient equals zero while S5 > 0: "
         "no solution with all three values distinct");
}

}  // namespace steps

inline const std::vector<DerivationStep>& step_registry() {
  static const std::vector<DerivationStep> registry = {
      {"S01", "unit-base side lengths follow the law of sines", "numeric",
       "a consequence of the law of sines", steps::s01_law_of_sines},
      {"S02", "cevian intersection distances match the law-of-cosines closed forms",
       "numeric", "Applying the law of cosine we get", steps::s02_law_of_cosines},
      {"S03", "the cleared-denominator expression equals (GI^2-IJ^2) times the "
       "denominator product", "numeric", "If $GI=IJ$ then $GI^2=IJ^2$",
       steps::s03_cleared_denominator},
      {"S04", "the alpha^2*beta^2 coefficient forces t1 = t2", "series-coeff",
       "Calculating the coefficient of $\\alpha^{2}\\beta^{2}$",
       steps::s04_first_coefficient},
      {"S05", "the rotated comparisons force t3 = t4 and t5 = t6", "poly-identity",
       "In the same way, $IJ=JG$ implies", steps::s05_rotations},
      {"S06", "the paired substitution reproduces the displayed reduced expression",
       "series-coeff", "Substituting (\\ref{eq:t12}), (\\ref{eq:t34}) and "
       "(\\ref{eq:t56})", steps::s06_reduced_series},
      {"S07", "the degree-6 part is a^2 b^2 (a+b)^2 times the displayed polynomial",
       "series-coeff", "The coefficient of $\\alpha^{2}\\beta^{2}(\\alpha+\\beta)^{2}$",
       steps::s07_degree_six_form},
      {"S08", "the six-equation system matches its display", "poly-identity",
       "we can write the following system of equations", steps::s08_system},
      {"S09", "S3 has the displayed closed form in S5", "ratfunc-identity",
       "Multiplying (\\ref{eq:Eeq1}) by $s_{3}$", steps::s09_s3_closed_form},
      {"S10", "S1 has the displayed closed form in S5", "ratfunc-identity",
       "Similarly, we obtain from", steps::s10_s1_closed_form},
      {"S11", "the alpha^5*beta^2 coefficient is the displayed second-order equation",
       "series-coeff", "Calculating the coefficient of $\\alpha^{5}\\beta^{2}$",
       steps::s11_second_order_coefficient},
      {"S12", "t3 = 1/2 forces the excluded t5 = 1/2", "poly-identity",
       "Substituting $t_{3}=1/2$ into (\\ref{eq:Eeq7})", steps::s12_t3_half_branch},
      {"S13", "t5 = 1/2 forces the excluded t3 = 1/2", "poly-identity",
       "Swapping $3$ and $5$ in (\\ref{eq:Eeq7})", steps::s13_t5_half_branch},
      {"S14", "the three cosine products multiply to the displayed form",
       "ratfunc-identity", "Taking the product of equations we obtain",
       steps::s14_cosine_products},
      {"S15", "the squared cosine products match their displays", "ratfunc-identity",
       "Taking the squares of equations", steps::s15_squared_products},
      {"S16", "C1, C3, C5 have the displayed S5-only closed forms",
       "ratfunc-identity", "Denote $C_{1}:=c_{1}^{2}$",
       steps::s16_squared_cosine_closed_forms},
      {"S17", "the mixed sine-cosine term collapses as displayed", "ratfunc-identity",
       "Using (\\ref{eq:E1}) and (\\ref{eq:S3}) we have", steps::s17_mixed_term},
      {"S18", "the quadratic bracket collapses as displayed", "ratfunc-identity",
       "Using (\\ref{eq:S3}) we have", steps::s18_quadratic_term},
      {"S19", "the collected equation divides by c5*s5*t3", "ratfunc-identity",
       "dividing by $c_{5}s_{5}t_{3}\\neq0$", steps::s19_collected_equation},
      {"S20", "the combined left side collapses as displayed", "ratfunc-identity",
       "Using (\\ref{eq:S3}) and (\\ref{eq:S1}) we get", steps::s20_combined_left_side},
      {"S21", "clearing denominators yields the S5 quadratic", "poly-identity",
       "From this equality we can derive", steps::s21_s5_quadratic},
      {"S22", "the 1<->3 swap of the quadratic matches its display", "poly-identity",
       "Swapping the indices $1$ and $3$", steps::s22_swapped_quadratic},
      {"S23", "the difference of the two quadratics factors as displayed",
       "poly-identity", "Since the right hand sides are equal",
       steps::s23_factored_difference},
      {"S24", "the paired case pins the S5 relation; its degenerate subcase is "
       "contradictory", "ratfunc-identity",
       "which contradicts the assumption $t_{1}\\neq t_{5}$",
       steps::s24_paired_case_setup},
      {"S25", "the paired closed forms for S5, S1, C1, C5 match their displays",
       "ratfunc-identity", "Using (\\ref{eq:S5t1eqt3}) (and $t_{1}=t_{3}$",
       steps::s25_paired_closed_forms},
      {"S26", "the Pythagorean relations clear to q1, q5 and both resultants factor",
       "resultant", "To eliminate $t_{5}$ from the system", steps::s26_elimination},
      {"S27", "all five candidate pairs fail the certified sine-square test",
       "sign-certificate", "none of them is a solution of our original problem",
       steps::s27_candidate_exclusions},
      {"S28", "the fully paired case leaves t1 = 1/3", "ratfunc-identity",
       "The last one is impossible, because", steps::s28_fully_paired_case},
      {"S29", "the trisector expression vanishes identically", "exact-trig",
       "a very tedious calculation gives", steps::s29_exact_identity},
      {"S30", "degenerate coefficient subcases contradict distinctness",
       "poly-identity", "whose solution is", steps::s30_all_distinct_setup},
      {"S31", "the all-distinct closed forms match their displays",
       "ratfunc-identity", "Using (\\ref{eq:s5square}) we get from",
       steps::s31_all_distinct_closed_forms},
      {"S32", "equating routes yields the two cubics and their factored sum",
       "poly-identity", "Summing the left and right sides we have",
       steps::s32_cubic_identities},
      {"S33", "Case A reduces to the displayed constraint", "poly-identity",
       "Substituting (\\ref{eq:t5eq}) into (\\ref{eq:CaseAt1t3t5})",
       steps::s33_case_a_reduction},
      {"S34", "the Case A closed forms and their equated difference match",
       "ratfunc-identity", "From (\\ref{eq:CaseAS3}) and (\\ref{eq:AS3v2}) it follows",
       steps::s34_case_a_closed_forms},
      {"S35", "subcase (i) collapses to t3 = t5, a contradiction", "poly-identity",
       "Here the third root is negative", steps::s35_case_a_first_subcase},
      {"S36", "subcase (ii) resultants force t1 = t3 = 3/11, a contradiction",
       "resultant", "Calculating the resultants we obtain",
       steps::s36_case_a_resultants},
      {"S37", "Case B forces a vanishing coefficient, closing the proof",
       "poly-identity", "Hence there is no solution in Case B",
       steps::s37_case_b_closure},
  };
  return registry;
}

}  // namespace morley

#endif  // MORLEY_STEPS_HPP
