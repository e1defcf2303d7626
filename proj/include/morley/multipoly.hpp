#ifndef MORLEY_MULTIPOLY_HPP
#define MORLEY_MULTIPOLY_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morley/rational.hpp"
#include "morley/variables.hpp"

namespace morley {

// Exponent vector over the fixed 24-variable universe.
struct Monomial {
  std::array<uint8_t, kVarCount> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  int exp(Var v) const { return e[static_cast<size_t>(v)]; }
  bool is_constant() const {
    for (auto x : e) if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) {
      int s = e[i] + o.e[i];
      if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
      r.e[i] = static_cast<uint8_t>(s);
    }
    return r;
  }

  // Componentwise division; false when not divisible.
  bool divide(const Monomial& d, Monomial& out) const {
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] < d.e[i]) return false;
      out.e[i] = static_cast<uint8_t>(e[i] - d.e[i]);
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic order over the fixed Var order: first by total degree,
// ties by exponent vector lexicographically. Keeps serialization and leading
// terms deterministic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

// Sparse multivariate polynomial over Rational. No zero coefficients are
// ever stored; the term map is the canonical form.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(Rational r) {
    MultiPoly p;
    if (!r.is_zero()) p.terms_.emplace(Monomial{}, std::move(r));
    return p;
  }
  static MultiPoly variable(Var v, int exp = 1) {
    MultiPoly p;
    if (exp < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    Monomial m;
    m.e[static_cast<size_t>(v)] = static_cast<uint8_t>(exp);
    p.terms_.emplace(m, Rational(1));
    return p;
  }
  static MultiPoly term(Rational c, const Monomial& m) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }
  size_t term_count() const { return terms_.size(); }

  // Constant term (zero if absent).
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // As a Rational; requires is_constant().
  Rational to_rational() const {
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return constant_term();
  }

  int total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  int degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
  }

  bool contains_var(Var v) const {
    for (const auto& [m, c] : terms_)
      if (m.exp(v)) return true;
    return false;
  }

  // Leading term under grlex.
  const std::pair<const Monomial, Rational>& leading() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: leading of zero");
    return *terms_.rbegin();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(MultiPoly a, const Rational& r) {
    if (r.is_zero()) return MultiPoly();
    for (auto& [m, c] : a.terms_) c *= r;
    return a;
  }
  friend MultiPoly operator*(const Rational& r, MultiPoly a) { return std::move(a) * r; }
  MultiPoly& operator*=(const Rational& r) { return *this = *this * r; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const {
    MultiPoly acc = constant(Rational(1));
    MultiPoly base = *this;
    while (e) {
      if (e & 1u) acc *= base;
      if (e >>= 1u) base *= base;
    }
    return acc;
  }

  // gcd of numerators / lcm of denominators of all coefficients, signed by
  // the leading coefficient; zero polynomial has content 0.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
      mpz_class n = c.num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      mpz_class d = c.den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational content(g, l);
    if (leading().second.sign() < 0) content = -content;
    return content;
  }

  double eval_double(const std::array<double, kVarCount>& vals) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
      double t = c.to_double();
      for (int i = 0; i < kVarCount; ++i) {
        for (int k = 0; k < m.e[i]; ++k) t *= vals[i];
      }
      acc += t;
    }
    return acc;
  }

  // Exact evaluation; every variable that occurs must have a value.
  Rational eval_rational(const std::array<Rational, kVarCount>& vals) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < kVarCount; ++i) {
        if (m.e[i]) t *= morley::pow(vals[i], m.e[i]);
      }
      acc += t;
    }
    return acc;
  }

  // Canonical text form: grlex-descending terms, explicit '*' and '^'.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c.abs();
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      bool coeff_shown = !a.is_one() || m.is_constant();
      if (coeff_shown) out += a.str();
      bool first_factor = !coeff_shown;
      for (int i = 0; i < kVarCount; ++i) {
        if (!m.e[i]) continue;
        if (!first_factor) out += "*";
        first_factor = false;
        out += var_name(var_at(i));
        if (m.e[i] > 1) out += "^" + std::to_string(static_cast<int>(m.e[i]));
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

inline MultiPoly operator-(MultiPoly a, const Rational& r) {
  return std::move(a) - MultiPoly::constant(r);
}

enum class PolyOp { add, sub, mul };

inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::logic_error("poly_arith: bad op");
}

namespace detail {

// Recursive-descent parser for the canonical polynomial text form:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_poly: " + why + " at offset " +
                                std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool neg = false;
    if (consume('-')) neg = true;
    else consume('+');
    MultiPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') { ++pos_; acc += term(); }
      else if (c == '-') { ++pos_; acc -= term(); }
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (consume('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (consume('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected exponent");
      unsigned e = static_cast<unsigned>(
          std::stoul(std::string(s_.substr(start, pos_ - start))));
      b = b.pow(e);
    }
    return b;
  }

  MultiPoly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {  // unary minus inside a term, e.g. 2*-3 never appears but -x does
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == dstart) fail("expected denominator");
        std::string den(s_.substr(dstart, pos_ - dstart));
        return MultiPoly::constant(Rational::parse(digits + "/" + den));
      }
      return MultiPoly::constant(Rational::parse(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() &&
             std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto v = parse_var(name);
      if (!v) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(*v);
    }
    fail("unexpected character");
  }
};

}  // namespace detail

inline MultiPoly parse_poly(std::string_view s) {
  return detail::PolyParser(s).parse();
}

}  // namespace morley

#endif  // MORLEY_MULTIPOLY_HPP
