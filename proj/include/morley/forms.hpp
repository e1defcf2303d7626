#ifndef MORLEY_FORMS_HPP
#define MORLEY_FORMS_HPP

#include <array>
#include <vector>

#include "morley/multipoly.hpp"
#include "morley/poly_ops.hpp"
#include "morley/ratfunc.hpp"

// The closed forms the derivation is checked against, entered once and
// shared by the step registry and the tests.
namespace morley::forms {

inline const std::array<MultiPoly, 6>& system_display() {
  static const std::array<MultiPoly, 6> sys = {
      parse_poly("-2*t3*t5*c3*c5*s5 + ((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2 - t5^2)*s3"),
      parse_poly("-2*t5*t3*c5*c3*s3 + ((1-2*t1-2*t5+t1^2+2*t1*t5+2*t5*t3)*s3^2 - t3^2)*s5"),
      parse_poly("-2*t1*t5*c1*c5*s5 + ((1-2*t3-2*t1+t3^2+2*t3*t1+2*t1*t5)*s5^2 - t5^2)*s1"),
      parse_poly("-2*t5*t1*c5*c1*s1 + ((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2 - t1^2)*s5"),
      parse_poly("-2*t1*t3*c1*c3*s3 + ((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2 - t3^2)*s1"),
      parse_poly("-2*t3*t1*c3*c1*s1 + ((1-2*t5-2*t3+t5^2+2*t5*t3+2*t3*t1)*s1^2 - t1^2)*s3")};
  return sys;
}

// The degree-7 coefficient equation (before the branch analysis).
inline const MultiPoly& second_order_equation() {
  static const MultiPoly p = parse_poly(
      "3/2*t5*s3*s5*(t3+t5-1)*(s3*c5+c3*s5)"
      " + (3/2*t3*t5*(s3*s5-c3*c5)*s5 + s3*((t1-1)*(t1-2+3*t3)*s5^2 - 3/2*t5^2))*c3");
  return p;
}

// Its 3<->5 swap, as displayed.
inline const MultiPoly& second_order_equation_swapped() {
  static const MultiPoly p = parse_poly(
      "3/2*t3*s5*s3*(t3+t5-1)*(s3*c5+c3*s5)"
      " + (3/2*t3*t5*(s3*s5-c3*c5)*s3 + s5*((t1-1)*(t1-2+3*t5)*s3^2 - 3/2*t3^2))*c5");
  return p;
}

// S3 and S1 expressed through S5.
inline const RatFunc& s3_of_s5() {
  static const RatFunc f(parse_poly("-t3^2*S5"),
                         parse_poly("2*(t5-t3)*(1-t1)*S5-t5^2"));
  return f;
}
inline const RatFunc& s1_of_s5() {
  static const RatFunc f(parse_poly("-t1^2*S5"),
                         parse_poly("2*(t5-t1)*(1-t3)*S5-t5^2"));
  return f;
}

// The three bracket polynomials of the system, in squared (caps) form.
inline const MultiPoly& bracket_135_caps() {
  static const MultiPoly p = parse_poly("(1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*S5-t5^2");
  return p;
}
inline const MultiPoly& bracket_351_caps() {
  static const MultiPoly p = parse_poly("(1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*S1-t1^2");
  return p;
}
inline const MultiPoly& bracket_513_caps() {
  static const MultiPoly p = parse_poly("(1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*S3-t3^2");
  return p;
}

// Cosine-product closed forms pulled out of the system equations.
inline const RatFunc& cos_prod_35() {  // c3*c5
  static const RatFunc f(parse_poly("((1-2*t1-2*t3+t1^2+2*t1*t3+2*t3*t5)*s5^2-t5^2)*s3"),
                         parse_poly("2*t3*t5*s5"));
  return f;
}
inline const RatFunc& cos_prod_51() {  // c5*c1
  static const RatFunc f(parse_poly("((1-2*t3-2*t5+t3^2+2*t3*t5+2*t5*t1)*s1^2-t1^2)*s5"),
                         parse_poly("2*t5*t1*s1"));
  return f;
}
inline const RatFunc& cos_prod_13() {  // c1*c3
  static const RatFunc f(parse_poly("((1-2*t5-2*t1+t5^2+2*t5*t1+2*t1*t3)*s3^2-t3^2)*s1"),
                         parse_poly("2*t3*t1*s3"));
  return f;
}

// C1, C3, C5 as functions of (t1, t3, t5, S5).
inline const RatFunc& c1_sq_closed() {
  static const RatFunc f(
      parse_poly("-((1+t5^2+4*t1*t3-2*t3-2*t1)*S5-t5^2)"
                 "*((1-2*t3+2*t5*t1-2*t1+2*t1*t3+t3^2)*S5-t5^2)"),
      parse_poly("2*((1-2*t1+t1^2+2*t1*t3+2*t3*t5-2*t3)*S5-t5^2)"
                 "*((2*t1*t3+2*t5-2*t3*t5-2*t1)*S5-t5^2)"));
  return f;
}
inline const RatFunc& c3_sq_closed() {
  static const RatFunc f(
      parse_poly("-((1+t5^2+4*t1*t3-2*t3-2*t1)*S5-t5^2)"
                 "*((1-2*t1+t1^2+2*t1*t3+2*t3*t5-2*t3)*S5-t5^2)"),
      parse_poly("2*((1-2*t3+2*t5*t1-2*t1+2*t1*t3+t3^2)*S5-t5^2)"
                 "*((2*t1*t3+2*t5-2*t1*t5-2*t3)*S5-t5^2)"));
  return f;
}
inline const RatFunc& c5_sq_closed() {
  static const RatFunc f(
      parse_poly("((1-2*t3+2*t5*t1-2*t1+2*t1*t3+t3^2)*S5-t5^2)"
                 "*((1-2*t1+t1^2+2*t1*t3+2*t3*t5-2*t3)*S5-t5^2)"),
      parse_poly("2*((1+t5^2+4*t1*t3-2*t3-2*t1)*S5-t5^2)*t5^2"));
  return f;
}

// The quadratic equation for S5 (coefficient * S5^2 + coefficient * S5 +
// 3*t5^4 = 0) and the factored difference with its 1<->3 swap.
inline const MultiPoly& s5_quadratic() {
  static const MultiPoly p = parse_poly(
      "(5-72*t1*t3*t5-22*t3+35*t3^2-16*t1+52*t1*t3-54*t1*t3^2+22*t1*t5+24*t3*t5"
      "-12*t3*t5^2-6*t5-24*t3^3-6*t5^3+6*t5^2+13*t1^2*t3^2-24*t3^2*t5+6*t5*t3^3+18*t1*t3^3"
      "-12*t1^2*t5-26*t1^2*t3+2*t1^3*t5+2*t1^3*t3+6*t3*t5^3+13*t1^2-12*t1*t5^2+6*t5^4-2*t1^3"
      "+6*t3^4+36*t1*t3*t5^2+48*t1*t3^2*t5+12*t1^2*t3*t5)*S5^2"
      "+(-12*t1*t3*t5^2-6*t5^3*t1+12*t1*t5^2-9*t3^2*t5^2-12*t3*t5^3+18*t3*t5^2"
      "+6*t5^3-t1^2*t5^2-8*t5^2-6*t5^4)*S5+3*t5^4");
  return p;
}

// The big cubic coefficient of S5 in the factored difference (and, under
// index swaps, of S3 and S1).
inline const MultiPoly& s5_coefficient_cubic() {
  static const MultiPoly p = parse_poly(
      "3*t1^3+2*t1^2*t5+11*t1^2*t3-11*t1^2+11*t1+20*t1*t3*t5-6*t1*t5-25*t1*t3"
      "+11*t1*t3^2-3+2*t3^2*t5+3*t5^3+t5-11*t3^2+3*t3^3+11*t3-6*t3*t5");
  return p;
}
inline const MultiPoly& s3_coefficient_cubic() {
  static const MultiPoly p = parse_poly(
      "3*t1^3+2*t1^2*t3+11*t1^2*t5-11*t1^2+11*t1+20*t1*t5*t3-6*t1*t3-25*t1*t5"
      "+11*t1*t5^2-3+2*t5^2*t3+3*t3^3+t3-11*t5^2+3*t5^3+11*t5-6*t5*t3");
  return p;
}
inline const MultiPoly& s1_coefficient_cubic() {
  static const MultiPoly p = parse_poly(
      "3*t5^3+2*t5^2*t1+11*t5^2*t3-11*t5^2+11*t5+20*t5*t3*t1-6*t5*t1-25*t5*t3"
      "+11*t5*t3^2-3+2*t3^2*t1+3*t1^3+t1-11*t3^2+3*t3^3+11*t3-6*t3*t1");
  return p;
}

inline const MultiPoly& s5_rhs() {
  static const MultiPoly p = parse_poly("t5^2*(4*t1-3+3*t5+4*t3)");
  return p;
}
inline const MultiPoly& s3_rhs() {
  static const MultiPoly p = parse_poly("t3^2*(4*t1-3+3*t3+4*t5)");
  return p;
}
inline const MultiPoly& s1_rhs() {
  static const MultiPoly p = parse_poly("t1^2*(4*t5-3+3*t1+4*t3)");
  return p;
}

// Closed forms in the all-distinct case.
inline const RatFunc& s5_square_all_distinct() {
  static const RatFunc f(s5_rhs(), s5_coefficient_cubic());
  return f;
}
inline const RatFunc& s3_square_v1() {
  static const RatFunc f(s3_rhs(), s3_coefficient_cubic());
  return f;
}
inline const RatFunc& s1_square_v2() {
  static const RatFunc f(s1_rhs(), s1_coefficient_cubic());
  return f;
}
inline const RatFunc& s1_square_via_s5() {
  static const RatFunc f(
      parse_poly("t1^2*(4*t1-3+3*t5+4*t3)"),
      parse_poly("-3+22*t1*t3*t5+11*t3-11*t3^2+5*t1-11*t1*t3+3*t1*t3^2-8*t1*t5"
                 "-20*t3*t5+6*t3*t5^2+7*t5+3*t3^3+3*t5^3-6*t5^2+10*t3^2*t5"
                 "+2*t1^2*t5+3*t1^2*t3-3*t1^2+3*t1^3"));
  return f;
}
inline const RatFunc& s3_square_via_s5() {
  static const RatFunc f(
      parse_poly("t3^2*(4*t1-3+3*t5+4*t3)"),
      parse_poly("-3+22*t1*t3*t5+11*t1-11*t1^2+5*t3-11*t1*t3+3*t3*t1^2-8*t3*t5"
                 "-20*t1*t5+6*t1*t5^2+7*t5+3*t1^3+3*t5^3-6*t5^2+10*t1^2*t5"
                 "+2*t3^2*t5+3*t3^2*t1-3*t3^2+3*t3^3"));
  return f;
}

// The two cubics produced by equating the S1 (and S3) closed forms.
inline const MultiPoly& distinct_case_cubic_1() {
  static const MultiPoly p = parse_poly(
      "3*t1^3+9*t1^2-6*t1^2*t5-9*t1^2*t3+27*t5*t1+30*t1*t3-20*t1-13*t1*t3^2"
      "-15*t1*t3*t5-6*t5^2*t1+9-t3^3-20*t3-9*t3*t5^2+9*t5^2+3*t5^3+12*t3^2"
      "+30*t3*t5-20*t5-13*t3^2*t5");
  return p;
}
inline const MultiPoly& distinct_case_cubic_2() {
  static const MultiPoly p = parse_poly(
      "-3*t3^3+9*t1*t3^2-9*t3^2+6*t3^2*t5-30*t1*t3-27*t3*t5+13*t1^2*t3"
      "+15*t1*t3*t5+20*t3+6*t3*t5^2-9+t1^3+20*t1-9*t5^2-3*t5^3-12*t1^2"
      "+9*t5^2*t1-30*t5*t1+13*t1^2*t5+20*t5");
  return p;
}

// Case t1 = t3: the S5/S1 closed forms and the S1+C1-1, S5+C5-1 numerators.
inline const MultiPoly& paired_delta5() {
  static const MultiPoly p = parse_poly(
      "-3-37*t1^2+25*t1^2*t5+22*t1^3-19*t1*t5+5*t1*t5^2+18*t1-3*t5^2+3*t5^3+5*t5");
  return p;
}
inline const MultiPoly& paired_delta1() {
  static const MultiPoly p = parse_poly(
      "-17*t1^2+31*t1^2*t5+8*t1^3-31*t1*t5+13*t1*t5^2+12*t1-11*t5^2+3*t5^3-3+11*t5");
  return p;
}
inline const RatFunc& paired_s5() {
  static const RatFunc f(parse_poly("t5^2*(7*t1+4*t5-3)"), paired_delta5());
  return f;
}
inline const RatFunc& paired_s1() {
  static const RatFunc f(parse_poly("t1^2*(7*t1+4*t5-3)"), paired_delta1());
  return f;
}
inline const RatFunc& paired_c1() {
  static const RatFunc f(parse_poly("(t1-t5)*(6*t1^2-3*t1-3*t1*t5+1-t5^2)"),
                         Rational(2) * paired_delta1());
  return f;
}
inline const RatFunc& paired_c5() {
  static const RatFunc f(
      parse_poly("(t1^2-1-3*t5^2+3*t5)"
                 "*(t5-t1+3*t1*t5+t1^3-t1^2*t5-3*t1*t5^2-3*t5^2+3*t5^3)"),
      parse_poly("2*(6*t1^2-3*t1-3*t1*t5+1-t5^2)") * paired_delta5());
  return f;
}
inline const MultiPoly& elimination_q1() {
  static const MultiPoly p = parse_poly(
      "4*t1^3-63*t1^2*t5+25*t1^2-23*t1-23*t5+65*t1*t5-24*t1*t5^2-5*t5^3+22*t5^2+6");
  return p;
}
inline const MultiPoly& elimination_q5() {
  static const MultiPoly p = parse_poly(
      "6-11*t5-53*t1-484*t1^3+218*t1^2-3*t5^3-11*t5^5+18*t5^4-263*t1^5+576*t1^4"
      "+212*t5^2*t1^3-114*t1^2*t5+44*t1*t5+85*t1*t5^2-206*t5^2*t1^2+56*t5^3*t1^2"
      "-t5^4*t1-62*t5^3*t1+162*t1^3*t5-169*t1^4*t5");
  return p;
}

// Case A of the all-distinct analysis.
inline const MultiPoly& case_a_p1() {
  static const MultiPoly p = parse_poly(
      "-131/64*t1-9/8*t3-9/64*t1^2+183/64*t1^3+3/2*t3^2-87/8*t1^2*t3"
      "+12*t1*t3-29/2*t1*t3^2+21/64");
  return p;
}
inline const MultiPoly& case_a_p3() {
  static const MultiPoly p = parse_poly(
      "155*t1^3-684*t1^2*t3-81*t1^2-95*t1+792*t1*t3-912*t1*t3^2-108*t3+21+144*t3^2");
  return p;
}
inline const MultiPoly& case_a_t5_binding() {
  static const MultiPoly p = parse_poly("(3-3*t1-4*t3)*1/4");
  return p;
}
inline const RatFunc& case_a_s5() {
  static const RatFunc f(
      parse_poly("(-3+3*t1+4*t3)^2*(7*t1-3+4*t3)"),
      parse_poly("125*t1+28*t3-77*t1^2+15*t1^3+208*t3^2-128*t3^3-708*t1^2*t3"
                 "+680*t1*t3-1104*t1*t3^2-63"));
  return f;
}
inline const RatFunc& case_a_s3() {
  static const RatFunc f(
      parse_poly("-64*t3^2*(t1-t3)"),
      parse_poly("79*t1+124*t3-79*t1^2+21*t1^3+80*t3^2-128*t3^3+732*t1^2*t3"
                 "-856*t1*t3+816*t1*t3^2-21"));
  return f;
}
inline const RatFunc& case_a_s3_v2() {
  static const RatFunc f(
      parse_poly("-16*t3^2*(7*t1-3+4*t3)"),
      parse_poly("-331*t1^2+187*t1-1512*t1*t3-9+260*t3+153*t1^3+1252*t1^2*t3"
                 "+1360*t1*t3^2-464*t3^2+128*t3^3"));
  return f;
}

}  // namespace morley::forms

#endif  // MORLEY_FORMS_HPP
