#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g2chev/rational.hpp"

namespace g2chev {

/// Product of the sign generators e1..e4, exponents mod 2 (bit k = e{k+1}).
/// e5 is display shorthand for e1*e3*e4 and never appears in the normal form.
struct SignMonomial {
  std::uint8_t bits = 0;

  friend constexpr bool operator==(const SignMonomial&, const SignMonomial&) = default;
  friend constexpr SignMonomial operator*(SignMonomial x, SignMonomial y) {
    return {static_cast<std::uint8_t>(x.bits ^ y.bits)};
  }
  bool is_unit() const { return bits == 0; }
};

inline constexpr SignMonomial kMonoUnit{0};
inline constexpr SignMonomial kMonoE1{1};
inline constexpr SignMonomial kMonoE2{2};
inline constexpr SignMonomial kMonoE3{4};
inline constexpr SignMonomial kMonoE4{8};
inline constexpr SignMonomial kMonoE5{1 | 4 | 8};

/// One choice of concrete values for e1..e4.
struct SignAssignment {
  std::array<int, 4> v = {1, 1, 1, 1};

  friend constexpr bool operator==(const SignAssignment&, const SignAssignment&) = default;
  int value_of(SignMonomial m) const;

  std::string to_string() const;  // "++++", "+-+-"
  static SignAssignment parse(const std::string& text);
  static SignAssignment all_plus() { return {}; }
};

/// All 16 assignments, "++++" first, "----" last (e1 varies slowest).
const std::vector<SignAssignment>& all_assignments();

/// Exact rational multiple of a single sign monomial. The only sums this ring
/// needs are of like monomials (or with zero); anything else is a hard error,
/// which doubles as a consistency check in the solver.
struct SignCoefficient {
  Rational c;
  SignMonomial m;

  SignCoefficient() = default;
  SignCoefficient(Rational coeff, SignMonomial mono = kMonoUnit) : c(coeff), m(mono) {
    if (c.is_zero()) m = kMonoUnit;  // zero normal form
  }

  bool is_zero() const { return c.is_zero(); }

  friend bool operator==(const SignCoefficient&, const SignCoefficient&) = default;
  friend SignCoefficient operator*(const SignCoefficient& x, const SignCoefficient& y) {
    return {x.c * y.c, x.m * y.m};
  }
  friend SignCoefficient operator*(const Rational& a, const SignCoefficient& x) {
    return {a * x.c, x.m};
  }
  /// Throws std::domain_error if y is zero (monomials are self-inverse).
  friend SignCoefficient operator/(const SignCoefficient& x, const SignCoefficient& y) {
    if (y.is_zero()) throw std::domain_error("SignCoefficient: division by zero");
    return {x.c / y.c, x.m * y.m};
  }
  SignCoefficient operator-() const { return {-c, m}; }
  /// Defined only for like monomials or when one side is zero; otherwise
  /// throws std::logic_error.
  friend SignCoefficient operator+(const SignCoefficient& x, const SignCoefficient& y);
  friend SignCoefficient operator-(const SignCoefficient& x, const SignCoefficient& y) {
    return x + (-y);
  }

  /// Value under a concrete sign assignment: c * product of assigned signs.
  Rational specialize(const SignAssignment& sigma) const { return c * sigma.value_of(m); }
};

inline const SignCoefficient kCoeffZero{0};
inline const SignCoefficient kCoeffOne{1};

enum class CoeffStyle { ascii, unicode, latex };

/// "e1e3", "ε1ε3" or "\epsilon_1\epsilon_3". Monomials containing e4 are
/// displayed with an e5 factor whenever that needs no more symbols than the
/// plain form (so e1*e3*e4 prints "e5" and e2*e3*e4 prints "e1e2e5", while
/// e4 alone stays "e4").
std::string render(SignMonomial m, CoeffStyle style);

/// "-3e5", "e1e2", "2e2", "1", "-1", "1/2e1". The numeral is omitted exactly
/// when |c| == 1 and the monomial part is nonempty.
std::string render(const SignCoefficient& x, CoeffStyle style);

/// Inverse of render (ascii or unicode, e5 accepted and normalized);
/// throws std::invalid_argument on malformed input.
SignCoefficient parse_coeff(const std::string& text);

}  // namespace g2chev
