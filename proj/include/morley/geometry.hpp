#ifndef MORLEY_GEOMETRY_HPP
#define MORLEY_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "morley/rational.hpp"

namespace morley {

inline constexpr double kPi = 3.14159265358979323846;

// Cevian fractions t1..t6. Exact storage so CLI inputs round-trip; numeric
// work converts once.
struct CevianParams {
  std::array<Rational, 6> t;
  bool symbolic = false;  // true when the t_i stay ring variables

  static CevianParams trisector() {
    CevianParams p;
    p.t.fill(Rational(1, 3));
    return p;
  }

  std::array<double, 6> as_doubles() const {
    std::array<double, 6> d;
    for (size_t i = 0; i < 6; ++i) d[i] = t[i].to_double();
    return d;
  }

  // t_i > 0, t2+t3 < 1, t4+t5 < 1, t6+t1 < 1.
  bool admissible() const {
    for (const auto& x : t)
      if (x.sign() <= 0) return false;
    return (t[1] + t[2] < Rational(1)) && (t[3] + t[4] < Rational(1)) &&
           (t[5] + t[0] < Rational(1));
  }
};

struct Vec2 {
  double x = 0, y = 0;
};
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Base triangle EFH with EF = 1 on the x-axis plus the three cevian
// intersection points. Everything is produced by the law-of-sines closed
// forms, so constructing a scene doubles as a formula check.
struct TriangleScene {
  Vec2 E, F, H, G, I, J;
  double alpha = 0, beta = 0;
  CevianParams params;
};

inline constexpr double kDegenerateGuard = 1e-6;

inline void check_admissible_angles(double alpha, double beta) {
  if (!(alpha > kDegenerateGuard) || !(beta > kDegenerateGuard) ||
      !(alpha + beta < kPi - kDegenerateGuard))
    throw std::invalid_argument("scene: angles out of the admissible open region");
}

// G, I, J by the repeated law of sines: e.g. G lies on the ray from E at
// angle t1*alpha with |EG| = sin(t2*beta)/sin(t1*alpha + t2*beta).
inline TriangleScene construct_scene(double alpha, double beta,
                                     const CevianParams& params) {
  check_admissible_angles(alpha, beta);
  if (!params.admissible())
    throw std::invalid_argument("scene: inadmissible cevian fractions");
  auto t = params.as_doubles();
  double gamma = kPi - alpha - beta;

  TriangleScene s;
  s.alpha = alpha;
  s.beta = beta;
  s.params = params;
  s.E = {0, 0};
  s.F = {1, 0};
  double HE = std::sin(beta) / std::sin(alpha + beta);
  s.H = {HE * std::cos(alpha), HE * std::sin(alpha)};

  double EG = std::sin(t[1] * beta) / std::sin(t[0] * alpha + t[1] * beta);
  s.G = {EG * std::cos(t[0] * alpha), EG * std::sin(t[0] * alpha)};

  double FH = std::sin(alpha) / std::sin(alpha + beta);
  double FI = FH * std::sin(t[3] * gamma) / std::sin(t[2] * beta + t[3] * gamma);
  // Direction from F: the side FH sits at angle pi - beta; the cevian tilts
  // back toward FE by t3*beta.
  double ang_FI = kPi - (1 - t[2]) * beta;
  s.I = s.F + Vec2{FI * std::cos(ang_FI), FI * std::sin(ang_FI)};

  double JE = HE * std::sin(t[4] * gamma) / std::sin(t[4] * gamma + t[5] * alpha);
  double ang_EJ = (1 - t[5]) * alpha;
  s.J = {JE * std::cos(ang_EJ), JE * std::sin(ang_EJ)};
  return s;
}

// Same points approached from the other vertex of each small triangle; used
// to cross-check the closed forms against an independent path.
inline TriangleScene construct_scene_dual(const TriangleScene& s) {
  auto t = s.params.as_doubles();
  double alpha = s.alpha, beta = s.beta;
  double gamma = kPi - alpha - beta;
  TriangleScene d = s;

  double GF = std::sin(t[0] * alpha) / std::sin(t[0] * alpha + t[1] * beta);
  double ang_FG = kPi - t[1] * beta;
  d.G = s.F + Vec2{GF * std::cos(ang_FG), GF * std::sin(ang_FG)};

  double IH = std::sin(alpha) / std::sin(alpha + beta) * std::sin(t[2] * beta) /
              std::sin(t[2] * beta + t[3] * gamma);
  // From H the side HF tilts clockwise into the interior, HE counterclockwise.
  double ang_HF = std::atan2(s.F.y - s.H.y, s.F.x - s.H.x);
  d.I = s.H + Vec2{IH * std::cos(ang_HF - t[3] * gamma),
                   IH * std::sin(ang_HF - t[3] * gamma)};

  double HJ = std::sin(beta) / std::sin(alpha + beta) * std::sin(t[5] * alpha) /
              std::sin(t[4] * gamma + t[5] * alpha);
  double ang_HE = std::atan2(s.E.y - s.H.y, s.E.x - s.H.x);
  d.J = s.H + Vec2{HJ * std::cos(ang_HE + t[4] * gamma),
                   HJ * std::sin(ang_HE + t[4] * gamma)};
  return d;
}

struct SideLengths {
  double GI, IJ, JG;
};

inline SideLengths side_lengths(const TriangleScene& s) {
  return {dist(s.G, s.I), dist(s.I, s.J), dist(s.J, s.G)};
}

// The law-of-cosines closed forms for the squared sides, evaluated directly
// from the angles (no coordinates). The independent partner of side_lengths.
inline SideLengths side_lengths_closed_form(double alpha, double beta,
                                            const CevianParams& params) {
  auto t = params.as_doubles();
  double gamma = kPi - alpha - beta;
  double sab = std::sin(alpha + beta);

  double GF = std::sin(t[0] * alpha) / std::sin(t[0] * alpha + t[1] * beta);
  double EG = std::sin(t[1] * beta) / std::sin(t[0] * alpha + t[1] * beta);
  double FI = std::sin(alpha) / sab * std::sin(t[3] * gamma) /
              std::sin(t[2] * beta + t[3] * gamma);
  double IH = std::sin(alpha) / sab * std::sin(t[2] * beta) /
              std::sin(t[2] * beta + t[3] * gamma);
  double HJ = std::sin(beta) / sab * std::sin(t[5] * alpha) /
              std::sin(t[4] * gamma + t[5] * alpha);
  double JE = std::sin(beta) / sab * std::sin(t[4] * gamma) /
              std::sin(t[4] * gamma + t[5] * alpha);

  double GI2 = GF * GF + FI * FI -
               2 * GF * FI * std::cos((1 - t[1] - t[2]) * beta);
  double IJ2 = IH * IH + HJ * HJ -
               2 * IH * HJ * std::cos((1 - t[3] - t[4]) * gamma);
  double JG2 = JE * JE + EG * EG -
               2 * JE * EG * std::cos((1 - t[5] - t[0]) * alpha);
  return {std::sqrt(GI2), std::sqrt(IJ2), std::sqrt(JG2)};
}

// The six summands of the cleared-denominator GI^2 - IJ^2 expression,
// evaluated directly.
inline std::array<double, 6> eval_A_terms(double alpha, double beta,
                                          const CevianParams& params) {
  auto t = params.as_doubles();
  auto sq = [](double x) { return x * x; };
  double t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3], t5 = t[4], t6 = t[5];
  double f3 = std::sin(-t3 * beta - t4 * kPi + t4 * alpha + t4 * beta);
  double f4 = std::sin(t5 * (alpha + beta - kPi) - t6 * alpha);
  double f7 = std::sin(t1 * alpha + t2 * beta);
  return {
      sq(std::sin(t1 * alpha)) * sq(std::sin(alpha + beta)) * sq(f3) * sq(f4),
      sq(std::sin(alpha)) * sq(std::sin(t4 * (kPi - alpha - beta))) * sq(f7) * sq(f4),
      2 * std::sin(t1 * alpha) * std::sin(alpha) * std::sin(t4 * (kPi - alpha - beta))
          * std::cos((-1 + t2 + t3) * beta) * f7 * std::sin(alpha + beta) * f3 * sq(f4),
      -sq(std::sin(alpha)) * sq(std::sin(t3 * beta)) * sq(f7) * sq(f4),
      -sq(std::sin(beta)) * sq(std::sin(t6 * alpha)) * sq(f7) * sq(f3),
      2 * std::sin(alpha) * std::sin(t3 * beta) * std::sin(beta) * std::sin(t6 * alpha)
          * std::cos((-1 + t4 + t5) * (kPi - alpha - beta)) * sq(f7) * f3 * f4};
}

// Direct evaluation of the cleared-denominator GI^2 - IJ^2 expression.
inline double eval_A_direct(double alpha, double beta, const CevianParams& params) {
  auto terms = eval_A_terms(alpha, beta, params);
  double acc = 0;
  for (double v : terms) acc += v;
  return acc;
}

// Product of the four squared sine denominators cleared out of GI^2 - IJ^2.
inline double eval_common_denominator(double alpha, double beta,
                                      const CevianParams& params) {
  auto t = params.as_doubles();
  double gamma = kPi - alpha - beta;
  auto sq = [](double x) { return x * x; };
  return sq(std::sin(t[0] * alpha + t[1] * beta)) * sq(std::sin(alpha + beta)) *
         sq(std::sin(t[2] * beta + t[3] * gamma)) *
         sq(std::sin(t[4] * gamma + t[5] * alpha));
}

struct ScanRow {
  double alpha, beta, GI, IJ, JG, defect;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  double max_defect = 0;
  ScanRow worst{};
};

inline double equilaterality_defect(const SideLengths& s) {
  double d1 = std::abs(s.GI - s.IJ);
  double d2 = std::abs(s.IJ - s.JG);
  double d3 = std::abs(s.JG - s.GI);
  return std::max({d1, d2, d3});
}

// Max equilaterality defect over a grid spanning the admissible (alpha, beta)
// region, inset by `margin` to keep the geometry well conditioned (the
// theorem quantifies over an open region, so boundary values carry no
// information).
inline ScanReport equilateral_scan(int resolution, const CevianParams& params,
                                   double margin = 0.1, bool keep_rows = true) {
  if (resolution < 1) throw std::invalid_argument("scan: resolution < 1");
  ScanReport rep;
  for (int i = 0; i < resolution; ++i) {
    double ua = (i + 0.5) / resolution;
    double alpha = margin + ua * (kPi - 3 * margin);
    for (int j = 0; j < resolution; ++j) {
      double ub = (j + 0.5) / resolution;
      double beta = margin + ub * (kPi - alpha - 2 * margin);
      TriangleScene s = construct_scene(alpha, beta, params);
      SideLengths sides = side_lengths(s);
      double defect = equilaterality_defect(sides);
      ScanRow row{alpha, beta, sides.GI, sides.IJ, sides.JG, defect};
      if (keep_rows) rep.rows.push_back(row);
      if (defect > rep.max_defect) {
        rep.max_defect = defect;
        rep.worst = row;
      }
    }
  }
  return rep;
}

inline void write_scan_csv(const ScanReport& rep, std::ostream& out) {
  out << "alpha,beta,GI,IJ,JG,defect\n";
  out.precision(17);
  for (const auto& r : rep.rows) {
    out << r.alpha << ',' << r.beta << ',' << r.GI << ',' << r.IJ << ','
        << r.JG << ',' << r.defect << '\n';
  }
}

// P + s*d1  =  Q + u*d2, solved generically (Cramer).
inline Vec2 ray_intersect(Vec2 P, Vec2 d1, Vec2 Q, Vec2 d2) {
  double det = d1.x * (-d2.y) - (-d2.x) * d1.y;
  double rx = Q.x - P.x, ry = Q.y - P.y;
  double s = (rx * (-d2.y) - (-d2.x) * ry) / det;
  return P + s * d1;
}

// Lemma check: apex of a unit-base triangle located by generic ray
// intersection, side lengths compared with the law-of-sines formulas.
// Returns the worst absolute error over the two formulas.
inline double law_of_sines_defect(double alpha, double beta) {
  check_admissible_angles(alpha, beta);
  Vec2 B{0, 0}, C{1, 0};
  Vec2 A = ray_intersect(B, {std::cos(alpha), std::sin(alpha)}, C,
                         {std::cos(kPi - beta), std::sin(kPi - beta)});
  double AB = std::sin(beta) / std::sin(alpha + beta);
  double AC = std::sin(alpha) / std::sin(alpha + beta);
  double err1 = std::abs(dist(B, A) - AB);
  double err2 = std::abs(dist(C, A) - AC);
  return std::max(err1, err2);
}

}  // namespace morley

#endif  // MORLEY_GEOMETRY_HPP
