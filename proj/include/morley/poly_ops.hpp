#ifndef MORLEY_POLY_OPS_HPP
#define MORLEY_POLY_OPS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "morley/multipoly.hpp"

namespace morley {

// Ring homomorphism: replaces each bound variable by its binding and expands.
// Bindings may not mention bound variables (no recursive substitution).
inline MultiPoly substitute(const MultiPoly& p,
                            const std::map<Var, MultiPoly>& bindings) {
  for (const auto& [v, b] : bindings) {
    for (const auto& [bv, unused] : bindings) {
      if (b.contains_var(bv))
        throw std::invalid_argument("substitute: recursive binding");
    }
  }
  // Per-variable power cache; bindings are reused across many terms.
  std::map<Var, std::vector<MultiPoly>> powers;
  auto power = [&](Var v, int e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(Rational(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * bindings.at(v));
    return cache[static_cast<size_t>(e)];
  };

  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(c);
    Monomial rest;
    for (int i = 0; i < kVarCount; ++i) {
      if (!m.e[i]) continue;
      Var v = var_at(i);
      if (bindings.count(v)) {
        term *= power(v, m.e[i]);
      } else {
        rest.e[i] = m.e[i];
      }
    }
    out += term * MultiPoly::term(Rational(1), rest);
  }
  return out;
}

inline std::map<Var, MultiPoly> rational_bindings(
    const std::map<Var, Rational>& vals) {
  std::map<Var, MultiPoly> b;
  for (const auto& [v, r] : vals) b.emplace(v, MultiPoly::constant(r));
  return b;
}

// Relabels subscripts simultaneously in the t/s/c families (and the squared
// S/C families where defined) according to idx_map, a permutation of 1..6.
inline MultiPoly relabel_indices(const MultiPoly& p,
                                 const std::array<int, 7>& idx_map) {
  auto map_var = [&](Var v) -> Var {
    if (int i = t_index(v)) return tvar(idx_map[i]);
    if (int i = s_index(v)) return svar(idx_map[i]);
    if (int i = c_index(v)) return cvar(idx_map[i]);
    if (int i = Scap_index(v)) return Svar(idx_map[i]);
    if (int i = Ccap_index(v)) return Cvar(idx_map[i]);
    return v;
  };
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial nm;
    for (int i = 0; i < kVarCount; ++i) {
      if (m.e[i]) {
        int j = index_of(map_var(var_at(i)));
        nm.e[j] = static_cast<uint8_t>(nm.e[j] + m.e[i]);
      }
    }
    out.add_term(nm, c);
  }
  return out;
}

// Permutation of the odd subscripts {1,3,5}, acting simultaneously on
// t, s, c, S, C. perm[i] is the image of subscript i (entries 1, 3, 5).
struct OddPerm {
  std::array<int, 6> to{};  // index by subscript; only 1,3,5 used

  static OddPerm identity() { return OddPerm{{0, 1, 0, 3, 0, 5}}; }
  static OddPerm swap(int a, int b) {
    OddPerm p = identity();
    p.to[a] = b;
    p.to[b] = a;
    return p;
  }
  static OddPerm cycle(int a, int b, int c) {  // a->b->c->a
    OddPerm p = identity();
    p.to[a] = b;
    p.to[b] = c;
    p.to[c] = a;
    return p;
  }
  OddPerm inverse() const {
    OddPerm p = identity();
    for (int i : {1, 3, 5}) p.to[to[i]] = i;
    return p;
  }
};

inline MultiPoly permute_indices(const MultiPoly& p, const OddPerm& perm) {
  std::array<int, 7> idx_map = {0, 1, 2, 3, 4, 5, 6};
  for (int i : {1, 3, 5}) idx_map[i] = perm.to[i];
  return relabel_indices(p, idx_map);
}

// Rewrites every even power of s_i via s_i^2 = 1 - c_i^2 so that all
// s-exponents end up <= 1. Idempotent; keeps c-degree information intact.
inline MultiPoly pythagorean_reduce(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(c);
    Monomial rest;
    for (int i = 0; i < kVarCount; ++i) {
      if (!m.e[i]) continue;
      Var v = var_at(i);
      int si = s_index(v);
      if (si && m.e[i] >= 2) {
        int half = m.e[i] / 2;
        MultiPoly one_minus_c2 =
            MultiPoly::constant(Rational(1)) -
            MultiPoly::variable(cvar(si), 2);
        term *= one_minus_c2.pow(static_cast<unsigned>(half));
        if (m.e[i] % 2) rest.e[i] = 1;
      } else {
        rest.e[i] = m.e[i];
      }
    }
    out += term * MultiPoly::term(Rational(1), rest);
  }
  return out;
}

// s_i^2 -> S_i and c_i^2 -> C_i for i in {1,3,5}; odd leftover powers keep
// one bare s_i/c_i factor.
inline MultiPoly to_caps(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial nm = m;
    for (int i : {1, 3, 5}) {
      int se = nm.e[index_of(svar(i))];
      if (se >= 2) {
        nm.e[index_of(Svar(i))] = static_cast<uint8_t>(nm.e[index_of(Svar(i))] + se / 2);
        nm.e[index_of(svar(i))] = static_cast<uint8_t>(se % 2);
      }
      int ce = nm.e[index_of(cvar(i))];
      if (ce >= 2) {
        nm.e[index_of(Cvar(i))] = static_cast<uint8_t>(nm.e[index_of(Cvar(i))] + ce / 2);
        nm.e[index_of(cvar(i))] = static_cast<uint8_t>(ce % 2);
      }
    }
    out.add_term(nm, c);
  }
  return out;
}

// Inverse direction: S_i -> s_i^2, C_i -> c_i^2.
inline MultiPoly expand_caps(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial nm = m;
    for (int i : {1, 3, 5}) {
      if (int Se = nm.e[index_of(Svar(i))]) {
        nm.e[index_of(Svar(i))] = 0;
        nm.e[index_of(svar(i))] = static_cast<uint8_t>(nm.e[index_of(svar(i))] + 2 * Se);
      }
      if (int Ce = nm.e[index_of(Cvar(i))]) {
        nm.e[index_of(Cvar(i))] = 0;
        nm.e[index_of(cvar(i))] = static_cast<uint8_t>(nm.e[index_of(cvar(i))] + 2 * Ce);
      }
    }
    out.add_term(nm, c);
  }
  return out;
}

// Equality in the quotient by the Pythagorean relations s_i^2 + c_i^2 = 1
// (caps expanded first, then s-powers reduced to the normal form).
inline bool equal_mod_pythagorean(const MultiPoly& a, const MultiPoly& b) {
  return pythagorean_reduce(expand_caps(a - b)).is_zero();
}

// Exact division. Returns the quotient q with q*d == p, or nullopt when p is
// not a multiple of d.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& p,
                                             const MultiPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  MultiPoly rem = p;
  MultiPoly quot;
  const auto& [dm, dc] = d.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    Monomial qm;
    if (!rm.divide(dm, qm)) return std::nullopt;
    MultiPoly qt = MultiPoly::term(rc / dc, qm);
    quot += qt;
    rem -= qt * d;
  }
  return quot;
}

// True iff constant * prod factor_i^mult_i == p exactly (verification by
// expansion; the factorizations themselves are inputs, not discovered).
inline bool verify_factorization(
    const MultiPoly& p, const Rational& constant,
    const std::vector<std::pair<MultiPoly, unsigned>>& factors) {
  MultiPoly prod = MultiPoly::constant(constant);
  for (const auto& [f, mult] : factors) prod *= f.pow(mult);
  return prod == p;
}

// The K with a == K * b, when it exists and b != 0.
inline std::optional<Rational> proportionality_constant(const MultiPoly& a,
                                                        const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return std::nullopt;
  Rational k = a.leading().second / b.leading().second;
  if (a == b * k) return k;
  return std::nullopt;
}

// Same, but in the quotient by the Pythagorean relations.
inline std::optional<Rational> proportionality_mod_pythagorean(
    const MultiPoly& a, const MultiPoly& b) {
  MultiPoly ra = pythagorean_reduce(expand_caps(a));
  MultiPoly rb = pythagorean_reduce(expand_caps(b));
  return proportionality_constant(ra, rb);
}

// sin(m*theta_i) / cos(m*theta_i) expanded as a polynomial in s_i = sin
// theta_i and c_i = cos theta_i, via iterated angle addition. Negative m
// uses sin(-x) = -sin(x), cos(-x) = cos(x).
inline MultiPoly chebyshev_phase(TrigKind kind, int m, int i) {
  bool negate_sin = m < 0;
  unsigned n = static_cast<unsigned>(m < 0 ? -m : m);
  MultiPoly cm = MultiPoly::constant(Rational(1));  // cos(0)
  MultiPoly sm = MultiPoly::zero();                 // sin(0)
  MultiPoly c1 = MultiPoly::variable(cvar(i));
  MultiPoly s1 = MultiPoly::variable(svar(i));
  for (unsigned k = 0; k < n; ++k) {
    MultiPoly nc = cm * c1 - sm * s1;
    MultiPoly ns = sm * c1 + cm * s1;
    cm = std::move(nc);
    sm = std::move(ns);
  }
  if (kind == TrigKind::cos) return cm;
  return negate_sin ? -sm : sm;
}

// (cos, sin) of the constant phase k0*pi + sum_i m_i*t_i*pi, expanded into
// the s_i/c_i variables.
inline std::pair<MultiPoly, MultiPoly> phase_expansion(
    int k0, const std::array<int, 6>& m) {
  MultiPoly c = MultiPoly::constant(Rational(k0 % 2 == 0 ? 1 : -1));
  MultiPoly s = MultiPoly::zero();
  for (int i = 1; i <= 6; ++i) {
    if (!m[static_cast<size_t>(i - 1)]) continue;
    MultiPoly ci = chebyshev_phase(TrigKind::cos, m[static_cast<size_t>(i - 1)], i);
    MultiPoly si = chebyshev_phase(TrigKind::sin, m[static_cast<size_t>(i - 1)], i);
    MultiPoly nc = c * ci - s * si;
    MultiPoly ns = s * ci + c * si;
    c = std::move(nc);
    s = std::move(ns);
  }
  return {std::move(c), std::move(s)};
}

}  // namespace morley

#endif  // MORLEY_POLY_OPS_HPP
