#pragma once

#include <string>
#include <vector>

#include "g2chev/constants.hpp"

namespace g2chev {

/// One factor x_{target}(c * (-t)^i * u^j) with target = i*r + j*s.
struct FormulaTerm {
  int i = 0;
  int j = 0;
  Root target;
  SignCoefficient c;
};

/// Commutator [x_s(u), x_r(t)] as the product of its terms, sorted by the
/// strictly increasing key (i+j, j); empty when r+s is not a root.
struct CommutatorFormula {
  Root s;  // left argument, carries u
  Root r;  // right argument, carries t
  std::vector<FormulaTerm> terms;
};

/// Ordered pair naming one formula: left is the s slot, right the r slot.
struct FormulaKey {
  Root left;
  Root right;
  friend constexpr bool operator==(const FormulaKey&, const FormulaKey&) = default;
};

/// M_{r,s,i} = (1/i!) N_{r,s} N_{r,r+s} ... N_{r,(i-1)r+s}. Requires i >= 1
/// and every chain link inside the root system (each factor is then nonzero).
SignCoefficient chain_product(const ConstantTable& table, const Root& r, const Root& s, int i);

/// Argument coefficient C_{ij} of the x_{ir+js} factor: C_{i1} = M_{r,s,i},
/// C_{1j} = (-1)^j M_{s,r,j}, C_{32} = (1/3) M_{r+s,r,2},
/// C_{23} = -(2/3) M_{s+r,s,2}. No other pattern occurs; anything else throws.
SignCoefficient arg_coefficient(const ConstantTable& table, int i, int j, const Root& r,
                                const Root& s);

/// Formula for the ordered pair (s, r); requires s != r and s != -r.
/// Terms come from a brute-force scan of i*r + j*s over the root system
/// (exponents never exceed 3; asserted).
CommutatorFormula formula(const ConstantTable& table, const Root& s, const Root& r);

/// All 60 ordered pairs (s, r) with r+s a root, s-major canonical order.
std::vector<CommutatorFormula> all_formulas(const ConstantTable& table);

/// The 41 pairs covered by the bundled reference list, in its order; shared
/// by the CLI and the golden tests.
const std::vector<FormulaKey>& reference_pairs();

/// Right-hand side product, e.g. "x_{a+b}(-e1tu) x_{2a+b}(e1e2t^2u)"; the
/// empty product renders as "1". sigma == nullptr keeps coefficients
/// symbolic; otherwise they specialize to integers.
std::string render(const CommutatorFormula& f, CoeffStyle style, const SignAssignment* sigma);

/// Full equation "[x_b(u), x_a(t)] = ...".
std::string render_equation(const CommutatorFormula& f, CoeffStyle style,
                            const SignAssignment* sigma);

/// {"signs": ..., "formulas": [{left, right, terms: [{i, j, target, coeff}]}]}
std::string formulas_to_json(const std::vector<CommutatorFormula>& fs, const SignAssignment* sigma);

/// Standalone document with one equation per line.
std::string formulas_to_latex(const std::vector<CommutatorFormula>& fs, const SignAssignment* sigma);

}  // namespace g2chev
