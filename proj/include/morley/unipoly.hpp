#ifndef MORLEY_UNIPOLY_HPP
#define MORLEY_UNIPOLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "morley/multipoly.hpp"
#include "morley/poly_ops.hpp"

namespace morley {

// View of a MultiPoly as a univariate polynomial in `var`, with MultiPoly
// coefficients in the remaining variables. coeffs[k] is the degree-k
// coefficient; the top entry is nonzero.
struct UniPoly {
  Var var;
  std::vector<MultiPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  static UniPoly from(const MultiPoly& p, Var var) {
    UniPoly u{var, {}};
    int deg = p.degree_in(var);
    u.coeffs.assign(static_cast<size_t>(deg) + 1, MultiPoly());
    for (const auto& [m, c] : p.terms()) {
      Monomial rest = m;
      int k = rest.e[index_of(var)];
      rest.e[index_of(var)] = 0;
      u.coeffs[static_cast<size_t>(k)].add_term(rest, c);
    }
    return u;
  }

  MultiPoly to_multipoly() const {
    MultiPoly p;
    for (size_t k = 0; k < coeffs.size(); ++k) {
      p += coeffs[k] * MultiPoly::variable(var, static_cast<int>(k));
    }
    return p;
  }
};

namespace detail {

// Fraction-free Bareiss determinant over the polynomial ring. All divisions
// are exact by construction; a failed division indicates a logic error.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return MultiPoly::constant(Rational(1));
  MultiPoly prev = MultiPoly::constant(Rational(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly::zero();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("bareiss: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly::zero();
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace detail

// Sylvester matrix of p and q in `var`: the first deg(q) rows carry the
// coefficients of p, the last deg(p) rows those of q, both descending.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const UniPoly& p,
                                                            const UniPoly& q) {
  int dp = p.degree(), dq = q.degree();
  size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (int r = 0; r < dq; ++r) {
    for (int k = 0; k <= dp; ++k)
      m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
          p.coeffs[static_cast<size_t>(dp - k)];
  }
  for (int r = 0; r < dp; ++r) {
    for (int k = 0; k <= dq; ++k)
      m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + k)] =
          q.coeffs[static_cast<size_t>(dq - k)];
  }
  return m;
}

// Resultant of p and q with respect to var, as the determinant of the
// Sylvester matrix computed by fraction-free elimination.
inline MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q,
                                     Var var) {
  UniPoly up = UniPoly::from(p, var);
  UniPoly uq = UniPoly::from(q, var);
  if (up.degree() < 1 || uq.degree() < 1)
    throw std::invalid_argument("sylvester_resultant: degree 0 in variable");
  return detail::bareiss_determinant(sylvester_matrix(up, uq));
}

}  // namespace morley

#endif  // MORLEY_UNIPOLY_HPP
