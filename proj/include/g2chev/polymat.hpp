#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g2chev/rational.hpp"

namespace g2chev {

/// Sparse bivariate polynomial in t and u with exact rational coefficients.
/// Terms are kept sorted by (deg_t, deg_u) with no zero coefficients stored.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(const Rational& c) { if (!c.is_zero()) terms_.push_back({key(0, 0), c}); }
  Poly2(long long c) : Poly2(Rational(c)) {}

  static Poly2 monomial(int deg_t, int deg_u, const Rational& c = 1);
  static Poly2 t() { return monomial(1, 0); }
  static Poly2 u() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;  // every coefficient has denominator 1
  Rational coeff(int deg_t, int deg_u) const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  friend Poly2 operator*(const Rational& a, const Poly2& p);
  Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
  Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend bool operator==(const Poly2&, const Poly2&) = default;

  Poly2 pow(int k) const;

  /// "t^2u - 3tu^2 + 1/2", terms by descending (deg_t, deg_u); "0" when zero.
  std::string to_string() const;

 private:
  static std::uint32_t key(int dt, int du) {
    return (static_cast<std::uint32_t>(dt) << 16) | static_cast<std::uint32_t>(du);
  }
  // (packed degrees, coefficient), ascending by key
  std::vector<std::pair<std::uint32_t, Rational>> terms_;
};

/// Dense square matrix over Poly2.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static PolyMatrix identity(int n);

  int dim() const { return n_; }
  Poly2& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Poly2& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool is_zero() const;
  bool is_integral() const;

  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator*(const Poly2& s, const PolyMatrix& x);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int n_;
  std::vector<Poly2> a_;
};

/// exp(f * nil) = sum_{k < bound} f^k nil^k / k!. Checks that nil^bound is
/// actually zero and throws std::logic_error otherwise, so nilpotency is
/// verified rather than assumed.
PolyMatrix exp_nilpotent(const PolyMatrix& nil, const Poly2& f, int bound);

}  // namespace g2chev
