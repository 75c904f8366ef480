#include <doctest.h>

#include "g2chev/adjoint.hpp"

using namespace g2chev;

namespace {

const ConstantTable& table() {
  static const ConstantTable t = solve();
  return t;
}

const AdjointAlgebra& all_plus_algebra() {
  static const AdjointAlgebra algebra(table(), SignAssignment::all_plus());
  return algebra;
}

Root root(const char* text) { return parse_root(text); }

bool vector_is(const std::array<long long, kAlgebraDim>& v,
               std::initializer_list<std::pair<int, long long>> expected) {
  std::array<long long, kAlgebraDim> want{};
  for (auto [k, c] : expected) want[k] = c;
  return v == want;
}

}  // namespace

TEST_SUITE("adjoint") {

TEST_CASE("basis layout") {
  CHECK(basis_index(root("-3a-2b")) == 2);
  CHECK(basis_index(root("3a+2b")) == 13);
  CHECK(basis_index(root("a")) == 8);
}

TEST_CASE("coroot coefficients") {
  CHECK(coroot_coeffs(root("a")) == std::pair{Rational(1), Rational(0)});
  CHECK(coroot_coeffs(root("b")) == std::pair{Rational(0), Rational(1)});
  CHECK(coroot_coeffs(root("a+b")) == std::pair{Rational(1), Rational(3)});
  CHECK(coroot_coeffs(root("3a+2b")) == std::pair{Rational(1), Rational(2)});
  CHECK(coroot_coeffs(root("-a")) == std::pair{Rational(-1), Rational(0)});
  for (const Root& r : all_roots()) {
    auto [ca, cb] = coroot_coeffs(r);
    CHECK(ca.is_integer());
    CHECK(cb.is_integer());
  }
}

TEST_CASE("bracket anchors under all-plus signs") {
  const AdjointAlgebra& g = all_plus_algebra();
  int ha = 0, hb = 1;
  int ea = basis_index(root("a")), eb = basis_index(root("b"));
  int eab = basis_index(root("a+b")), ena = basis_index(root("-a"));

  CHECK(vector_is(g.bracket(ha, eb), {{eb, -3}}));   // [h_a, e_b] = (b,a) e_b
  CHECK(vector_is(g.bracket(ha, ea), {{ea, 2}}));
  CHECK(vector_is(g.bracket(hb, ea), {{ea, -1}}));   // [h_b, e_a] = (a, b-coroot) e_a
  CHECK(vector_is(g.bracket(hb, eb), {{eb, 2}}));
  CHECK(vector_is(g.bracket(ha, hb), {}));

  CHECK(vector_is(g.bracket(ea, eb), {{eab, 1}}));   // N_{a,b} = 1 here
  CHECK(vector_is(g.bracket(ea, ena), {{ha, 1}}));   // [e_a, e_{-a}] = h_a
  int etop = basis_index(root("3a+2b")), ebot = basis_index(root("-3a-2b"));
  CHECK(vector_is(g.bracket(etop, ebot), {{ha, 1}, {hb, 2}}));
}

TEST_CASE("bracket is antisymmetric") {
  const AdjointAlgebra& g = all_plus_algebra();
  for (int i = 0; i < kAlgebraDim; ++i)
    for (int j = 0; j < kAlgebraDim; ++j) {
      auto ij = g.bracket(i, j);
      auto ji = g.bracket(j, i);
      for (int k = 0; k < kAlgebraDim; ++k) CHECK(ij[k] == -ji[k]);
    }
}

TEST_CASE("jacobi holds for all sixteen sign assignments") {
  for (const SignAssignment& sigma : all_assignments()) {
    AdjointAlgebra g(table(), sigma);
    CHECK(g.jacobi_violations().empty());
  }
}

TEST_CASE("ad matrices have the right nilpotency orders") {
  const AdjointAlgebra& g = all_plus_algebra();
  PolyMatrix ad_a = g.ad_matrix(root("a"));
  CHECK(ad_a.at(basis_index(root("a+b")), basis_index(root("b"))) == Poly2(1));

  // Short root: the a-chain through b has four roots, so three applications
  // still land on e_{3a+b} and the fourth power is the first to vanish.
  PolyMatrix p = ad_a;
  int order = 1;
  while (!p.is_zero()) {
    p = p * ad_a;
    ++order;
    REQUIRE(order <= 8);
  }
  CHECK(order == 4);

  PolyMatrix ad_b = g.ad_matrix(root("b"));
  p = ad_b;
  order = 1;
  while (!p.is_zero()) {
    p = p * ad_b;
    ++order;
    REQUIRE(order <= 8);
  }
  CHECK(order == 3);
}

TEST_CASE("root elements are integral and form one-parameter groups") {
  const AdjointAlgebra& g = all_plus_algebra();
  for (const Root& r : all_roots()) {
    PolyMatrix x = g.root_element(r, Poly2::t());
    CHECK(x.is_integral());
    PolyMatrix y = g.root_element(r, Poly2::u());
    PolyMatrix z = g.root_element(r, Poly2::t() + Poly2::u());
    CHECK(x * y == z);
    CHECK(g.root_element(r, -Poly2::t()) * x == PolyMatrix::identity(kAlgebraDim));
  }
  PolyMatrix xa = g.root_element(root("a"), Poly2::t());
  CHECK(xa.at(basis_index(root("a+b")), basis_index(root("b"))) == Poly2::t());
}

TEST_CASE("the oracle accepts every generated formula") {
  const AdjointAlgebra& g = all_plus_algebra();
  for (const CommutatorFormula& f : all_formulas(table())) CHECK(g.verify_formula(f));
}

TEST_CASE("commuting pair checks against the identity") {
  CommutatorFormula f = formula(table(), root("3a+b"), root("3a+2b"));
  REQUIRE(f.terms.empty());
  CHECK(all_plus_algebra().verify_formula(f));
}

TEST_CASE("the oracle rejects corrupted formulas") {
  const AdjointAlgebra& g = all_plus_algebra();

  CommutatorFormula f = formula(table(), root("b"), root("a"));
  f.terms[1].c = -f.terms[1].c;
  auto check = g.check_formula(f);
  CHECK(!check.ok);
  CHECK(check.row >= 0);
  CHECK(check.row < kAlgebraDim);
  CHECK(check.col >= 0);
  CHECK(!check.lhs.empty());
  CHECK(!check.rhs.empty());
  CHECK(check.lhs != check.rhs);

  CommutatorFormula wrong_target = formula(table(), root("b"), root("a"));
  wrong_target.terms[0].target = root("3a+2b");
  CHECK(!g.verify_formula(wrong_target));

  CommutatorFormula wrong_power = formula(table(), root("b"), root("a"));
  wrong_power.terms[3].j = 1;
  CHECK(!g.verify_formula(wrong_power));

  CommutatorFormula dropped = formula(table(), root("b"), root("a"));
  dropped.terms.pop_back();
  CHECK(!g.verify_formula(dropped));
}

TEST_CASE("formula checks depend on the sign assignment") {
  // A formula specialized with the wrong table would fail; here the same
  // symbolic formula must pass against every assignment's own algebra.
  CommutatorFormula f = formula(table(), root("2a+b"), root("-3a-b"));
  for (const SignAssignment& sigma : all_assignments()) {
    AdjointAlgebra g(table(), sigma);
    CHECK(g.verify_formula(f));
  }
}

}  // TEST_SUITE
