#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "g2chev/rootsys.hpp"
#include "g2chev/signs.hpp"

namespace g2chev {

/// Structure constants N_{r,s} of the bracket [e_r, e_s] = N_{r,s} e_{r+s},
/// indexed by ordered pairs of roots. Positions with r+s not a root are
/// structurally zero; exactly 60 positions can be nonzero.
class ConstantTable {
 public:
  /// Total lookup: zero wherever nothing is stored.
  const SignCoefficient& entry(const Root& r, const Root& s) const;

  /// Writable positions require r+s to be a root (so never s = +-r). Public
  /// so tests can corrupt single entries; solve() is the normal constructor.
  void set(const Root& r, const Root& s, const SignCoefficient& value);

  int nonzero_count() const;

  /// Nonzero entries as (r, s, value), r-major in canonical order.
  std::vector<std::tuple<Root, Root, SignCoefficient>> nonzero_entries() const;

 private:
  std::array<std::array<SignCoefficient, 12>, 12> cells_{};
};

/// Sign choices on the four extraspecial pairs, aligned with
/// extraspecial_pairs(). solve() requires the magnitudes 1, 2, 3, 1.
struct Seeds {
  std::array<SignCoefficient, 4> value;

  /// e1, 2e2, 3e3, e4.
  static Seeds symbolic();
};

/// Derives all 60 constants from the four seeds by a fixpoint over the
/// closure rules: antisymmetry, negation symmetry, the length-weighted
/// triple rule, and isolating the single unknown of a zero-sum quadruple
/// identity. Every derivation of an already-known entry is cross-checked, and
/// a mismatch or a stall before completion throws std::logic_error. The
/// result is independent of rule application order; shuffle_seed reorders the
/// work deterministically so tests can exercise exactly that.
ConstantTable solve(const Seeds& seeds = Seeds::symbolic(),
                    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Checks one concrete sign assignment against the full relation suite:
///  - antisymmetry N_{s,r} = -N_{r,s} on all 144 ordered pairs,
///  - N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2) on all
///    zero-sum triples,
///  - N_{r,s} N_{-r,-s} = -(p+1)^2 on all 60 bracketing pairs,
///  - the three-pairing identity on all zero-sum quadruples with no opposite
///    pair, each product divided by the squared length of its pair sum.
/// Returns a description of every violated instance (empty means pass).
std::vector<std::string> relation_violations(const ConstantTable& table,
                                             const SignAssignment& sigma);

/// 12x12 integer matrix in canonical order. Throws std::domain_error if a
/// specialized entry fails to be an integer.
std::array<std::array<long long, 12>, 12> specialize_table(const ConstantTable& table,
                                                           const SignAssignment& sigma);

/// Emitters; sigma == nullptr renders the symbolic table. All output is a
/// pure function of the arguments (byte-deterministic).
std::string table_to_json(const ConstantTable&, const SignAssignment* sigma);
std::string table_to_csv(const ConstantTable&, const SignAssignment* sigma);
std::string table_to_latex(const ConstantTable&, const SignAssignment* sigma);
std::string table_to_ascii(const ConstantTable&, const SignAssignment* sigma);

}  // namespace g2chev
