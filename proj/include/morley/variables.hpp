#ifndef MORLEY_VARIABLES_HPP
#define MORLEY_VARIABLES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morley {

enum class TrigKind { sin, cos };

// The fixed, closed variable universe of the cevian derivation:
//   t1..t6  cevian fractions,
//   s1..s6  sin(t_i*pi),   c1..c6  cos(t_i*pi),
//   S1,S3,S5 = s_i^2 and C1,C3,C5 = c_i^2 for the odd indices.
// Everything downstream (monomials, term order) indexes into this enum.
enum class Var : uint8_t {
  t1, t2, t3, t4, t5, t6,
  s1, s2, s3, s4, s5, s6,
  c1, c2, c3, c4, c5, c6,
  Scap1, Scap3, Scap5,
  Ccap1, Ccap3, Ccap5,
};

inline constexpr int kVarCount = 24;

inline constexpr int index_of(Var v) { return static_cast<int>(v); }
inline constexpr Var var_at(int i) { return static_cast<Var>(i); }

// Family accessors; i is the 1-based subscript.
inline Var tvar(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("tvar: index");
  return var_at(i - 1);
}
inline Var svar(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("svar: index");
  return var_at(6 + i - 1);
}
inline Var cvar(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("cvar: index");
  return var_at(12 + i - 1);
}
inline Var Svar(int i) {
  if (i != 1 && i != 3 && i != 5) throw std::out_of_range("Svar: index");
  return var_at(18 + (i - 1) / 2);
}
inline Var Cvar(int i) {
  if (i != 1 && i != 3 && i != 5) throw std::out_of_range("Cvar: index");
  return var_at(21 + (i - 1) / 2);
}

// Family membership. Returns the 1-based subscript, or 0 when v is not in
// the family.
inline int t_index(Var v) {
  int i = index_of(v);
  return i < 6 ? i + 1 : 0;
}
inline int s_index(Var v) {
  int i = index_of(v);
  return (i >= 6 && i < 12) ? i - 5 : 0;
}
inline int c_index(Var v) {
  int i = index_of(v);
  return (i >= 12 && i < 18) ? i - 11 : 0;
}
inline int Scap_index(Var v) {
  int i = index_of(v);
  return (i >= 18 && i < 21) ? 2 * (i - 18) + 1 : 0;
}
inline int Ccap_index(Var v) {
  int i = index_of(v);
  return (i >= 21 && i < 24) ? 2 * (i - 21) + 1 : 0;
}

inline const char* var_name(Var v) {
  static constexpr std::array<const char*, kVarCount> names = {
      "t1", "t2", "t3", "t4", "t5", "t6",
      "s1", "s2", "s3", "s4", "s5", "s6",
      "c1", "c2", "c3", "c4", "c5", "c6",
      "S1", "S3", "S5", "C1", "C3", "C5"};
  return names[static_cast<size_t>(v)];
}

inline std::optional<Var> parse_var(std::string_view s) {
  for (int i = 0; i < kVarCount; ++i) {
    if (s == var_name(var_at(i))) return var_at(i);
  }
  return std::nullopt;
}

}  // namespace morley

#endif  // MORLEY_VARIABLES_HPP
