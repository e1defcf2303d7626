#ifndef MORLEY_STURM_HPP
#define MORLEY_STURM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morley/multipoly.hpp"

namespace morley {

// Dense univariate polynomial over Q, index = degree. Used only by the sign
// certificates; the sparse MultiPoly stays the workhorse elsewhere.
struct QPoly {
  std::vector<Rational> c;

  static QPoly from(const MultiPoly& p, Var var) {
    QPoly q;
    q.c.assign(static_cast<size_t>(p.degree_in(var)) + 1, Rational(0));
    for (const auto& [m, coeff] : p.terms()) {
      for (int i = 0; i < kVarCount; ++i) {
        if (m.e[i] && var_at(i) != var)
          throw std::invalid_argument("QPoly: polynomial is not univariate");
      }
      q.c[static_cast<size_t>(m.exp(var))] = coeff;
    }
    q.trim();
    return q;
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  QPoly derivative() const {
    QPoly d;
    for (size_t k = 1; k < c.size(); ++k)
      d.c.push_back(c[k] * Rational(static_cast<long>(k)));
    d.trim();
    return d;
  }

  // Divides out the rational content; keeps the sign.
  void make_primitive() {
    if (is_zero()) return;
    mpz_class g = 0, l = 1;
    for (const auto& x : c) {
      mpz_class n = x.num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_class d = x.den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational content(g, l);
    for (auto& x : c) x /= content;
  }

  // Remainder of *this by d (degrees small, classical long division).
  QPoly rem(const QPoly& d) const {
    QPoly r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Rational q = r.lead() / d.lead();
      int shift = r.degree() - d.degree();
      for (int k = 0; k <= d.degree(); ++k)
        r.c[static_cast<size_t>(k + shift)] -= q * d.c[static_cast<size_t>(k)];
      r.trim();
    }
    return r;
  }
};

enum class SignVerdict { positive, negative, has_root };

inline const char* to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::positive: return "positive";
    case SignVerdict::negative: return "negative";
    case SignVerdict::has_root: return "has_root";
  }
  return "?";
}

namespace detail {

inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(p);
  chain.back().make_primitive();
  QPoly d = p.derivative();
  if (!d.is_zero()) {
    d.make_primitive();
    chain.push_back(d);
    while (true) {
      QPoly r = chain[chain.size() - 2].rem(chain.back());
      if (r.is_zero()) break;
      for (auto& x : r.c) x = -x;
      r.make_primitive();
      chain.push_back(std::move(r));
    }
  }
  return chain;
}

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

inline int chain_variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(q.eval(x).sign());
  return sign_changes(signs);
}

inline int chain_variations_at_inf(const std::vector<QPoly>& chain, int dir) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = q.lead().sign();
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

}  // namespace detail

// Number of distinct real roots of p in (lo, hi], with nullopt meaning the
// corresponding infinity. Square factors are collapsed by the primitive
// Sturm chain, which is all root counting needs.
inline int sturm_root_count(const QPoly& p, const std::optional<Rational>& lo,
                            const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = detail::sturm_chain(p);
  int vlo = lo ? detail::chain_variations_at(chain, *lo)
               : detail::chain_variations_at_inf(chain, -1);
  int vhi = hi ? detail::chain_variations_at(chain, *hi)
               : detail::chain_variations_at_inf(chain, +1);
  return vlo - vhi;
}

struct SignCertificate {
  SignVerdict verdict;
  int root_count = 0;      // roots found in the closed interval
  Rational sample;         // interior point whose sign decides the verdict
};

// Certified sign of p on [lo, hi] (closed; nullopt = unbounded side): either
// p is positive on the whole interval, negative on it, or has a root there.
// Certification is by a Sturm root count plus one sample evaluation.
inline SignCertificate sturm_sign_certificate(const QPoly& p,
                                              const std::optional<Rational>& lo,
                                              const std::optional<Rational>& hi) {
  if (p.is_zero()) return {SignVerdict::has_root, 1, Rational(0)};
  // Closed interval: endpoint roots count too.
  if (lo && p.eval(*lo).is_zero()) return {SignVerdict::has_root, 1, *lo};
  if (hi && p.eval(*hi).is_zero()) return {SignVerdict::has_root, 1, *hi};
  int roots = sturm_root_count(p, lo, hi);
  Rational sample;
  if (lo && hi)
    sample = (*lo + *hi) * Rational(1, 2);
  else if (lo)
    sample = *lo + Rational(1);
  else if (hi)
    sample = *hi - Rational(1);
  else
    sample = Rational(0);
  if (roots > 0) return {SignVerdict::has_root, roots, sample};
  int s = p.eval(sample).sign();
  if (s == 0) return {SignVerdict::has_root, 1, sample};
  return {s > 0 ? SignVerdict::positive : SignVerdict::negative, 0, sample};
}

inline SignCertificate sturm_sign_certificate(const MultiPoly& p, Var var,
                                              const std::optional<Rational>& lo,
                                              const std::optional<Rational>& hi) {
  return sturm_sign_certificate(QPoly::from(p, var), lo, hi);
}

}  // namespace morley

#endif  // MORLEY_STURM_HPP
