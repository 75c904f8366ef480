#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g2chev/commutators.hpp"
#include "g2chev/constants.hpp"
#include "g2chev/polymat.hpp"

namespace g2chev {

inline constexpr int kAlgebraDim = 14;

/// Basis order: index 0 = h_a, 1 = h_b, 2 + k = e_{all_roots()[k]}.
int basis_index(const Root& r);

/// Coefficients (c_a, c_b) of [e_r, e_{-r}] = c_a h_a + c_b h_b for
/// r = m*a + n*b: c_a = 2m/(r,r), c_b = 6n/(r,r). This fixes the coroot
/// convention, e.g. a -> (1,0), a+b -> (1,3), 3a+2b -> (1,2); always integral
/// on this root system.
std::pair<Rational, Rational> coroot_coeffs(const Root& r);

/// The 14-dimensional algebra acting on itself through one specialized
/// constant table. Serves as the oracle: it is built from the multiplication
/// table alone and knows nothing about how formulas are generated.
class AdjointAlgebra {
 public:
  AdjointAlgebra(const ConstantTable& table, const SignAssignment& sigma);

  const SignAssignment& sigma() const { return sigma_; }

  /// Coordinates of [basis_i, basis_j]; integral by construction.
  const std::array<long long, kAlgebraDim>& bracket(int i, int j) const {
    return bracket_[i][j];
  }

  /// Jacobi identity on all C(14,3) = 364 unordered basis triples; returns a
  /// description of every failing triple (empty means pass).
  std::vector<std::string> jacobi_violations() const;

  /// Matrix of ad(e_r) on column vectors: column j holds [e_r, basis_j].
  PolyMatrix ad_matrix(const Root& r) const;

  /// exp(f * ad(e_r)). Nilpotency of ad(e_r) at the series bound is checked,
  /// and so is integrality of every entry (std::logic_error otherwise): the
  /// basis is supposed to carry the group over the integers, so this is
  /// verified rather than assumed.
  PolyMatrix root_element(const Root& r, const Poly2& f) const;

  struct FormulaCheck {
    bool ok = true;
    int row = -1, col = -1;  // first differing entry when !ok
    std::string lhs, rhs;    // the two polynomials at that entry
  };

  /// Exact comparison over the polynomial ring of
  ///   x_s(u)^{-1} x_r(t)^{-1} x_s(u) x_r(t)
  /// against the product prescribed by the formula (inverses enter as
  /// negated arguments, words multiply left to right).
  FormulaCheck check_formula(const CommutatorFormula& f) const;
  bool verify_formula(const CommutatorFormula& f) const { return check_formula(f).ok; }

 private:
  SignAssignment sigma_;
  std::array<std::array<std::array<long long, kAlgebraDim>, kAlgebraDim>, kAlgebraDim> bracket_{};
};

}  // namespace g2chev
