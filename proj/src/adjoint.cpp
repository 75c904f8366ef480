#include "g2chev/adjoint.hpp"

#include <stdexcept>

namespace g2chev {

int basis_index(const Root& r) { return 2 + canonical_index(r); }

std::pair<Rational, Rational> coroot_coeffs(const Root& r) {
  long long len = inner(r, r);
  return {Rational(2 * r.m, len), Rational(6 * r.n, len)};
}

AdjointAlgebra::AdjointAlgebra(const ConstantTable& table, const SignAssignment& sigma)
    : sigma_(sigma) {
  const auto& roots = all_roots();
  // Cartan part: [h_a, e_s] = (s,a) e_s, [h_b, e_s] = (s,b)/3 e_s, i.e. the
  // pairing of s with the coroots of the simple roots.
  for (const Root& s : roots) {
    int es = basis_index(s);
    bracket_[0][es][es] = inner(s, kSimpleA);
    Rational hb = Rational(inner(s, kSimpleB)) / inner(kSimpleB, kSimpleB) * 2;
    bracket_[1][es][es] = hb.as_integer();
  }
  for (const Root& r : roots)
    for (const Root& s : roots) {
      int er = basis_index(r), es = basis_index(s);
      if (r + s == Root{0, 0}) {
        auto [ca, cb] = coroot_coeffs(r);
        bracket_[er][es][0] = ca.as_integer();
        bracket_[er][es][1] = cb.as_integer();
      } else if (auto t = sum(r, s)) {
        bracket_[er][es][basis_index(*t)] = table.entry(r, s).specialize(sigma).as_integer();
      }
    }
  // Antisymmetric closure fills [e, h].
  for (int i = 0; i < kAlgebraDim; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < kAlgebraDim; ++k) bracket_[i][j][k] = -bracket_[j][i][k];
}

namespace {

using Coords = std::array<long long, kAlgebraDim>;

}  // namespace

std::vector<std::string> AdjointAlgebra::jacobi_violations() const {
  auto bracket_vec = [&](const Coords& v, int j) {
    Coords out{};
    for (int m = 0; m < kAlgebraDim; ++m) {
      if (v[m] == 0) continue;
      for (int k = 0; k < kAlgebraDim; ++k) out[k] += v[m] * bracket_[m][j][k];
    }
    return out;
  };
  auto basis_name = [&](int i) {
    if (i == 0) return std::string("h_a");
    if (i == 1) return std::string("h_b");
    return "e_" + to_string(all_roots()[i - 2]);
  };
  std::vector<std::string> out;
  for (int i = 0; i < kAlgebraDim; ++i)
    for (int j = i + 1; j < kAlgebraDim; ++j)
      for (int k = j + 1; k < kAlgebraDim; ++k) {
        Coords total{};
        auto add = [&](int x, int y, int z) {
          Coords w = bracket_vec(bracket_[x][y], z);
          for (int m = 0; m < kAlgebraDim; ++m) total[m] += w[m];
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (int m = 0; m < kAlgebraDim; ++m)
          if (total[m] != 0) {
            out.push_back("jacobi fails on {" + basis_name(i) + "," + basis_name(j) + "," +
                          basis_name(k) + "}");
            break;
          }
      }
  return out;
}

PolyMatrix AdjointAlgebra::ad_matrix(const Root& r) const {
  PolyMatrix m(kAlgebraDim);
  int er = basis_index(r);
  for (int col = 0; col < kAlgebraDim; ++col)
    for (int row = 0; row < kAlgebraDim; ++row)
      if (bracket_[er][col][row] != 0) m.at(row, col) = Poly2(bracket_[er][col][row]);
  return m;
}

PolyMatrix AdjointAlgebra::root_element(const Root& r, const Poly2& f) const {
  PolyMatrix out = exp_nilpotent(ad_matrix(r), f, 5);
  if (!out.is_integral())
    throw std::logic_error("root_element: non-integral entry for r = " + to_string(r));
  return out;
}

AdjointAlgebra::FormulaCheck AdjointAlgebra::check_formula(const CommutatorFormula& f) const {
  Poly2 t = Poly2::t(), u = Poly2::u();
  PolyMatrix lhs = root_element(f.s, -u) * root_element(f.r, -t) * root_element(f.s, u) *
                   root_element(f.r, t);
  PolyMatrix rhs = PolyMatrix::identity(kAlgebraDim);
  for (const FormulaTerm& term : f.terms) {
    Rational c = term.c.specialize(sigma_);
    if (term.i % 2 != 0) c = -c;
    rhs = rhs * root_element(term.target, Poly2::monomial(term.i, term.j, c));
  }
  if (lhs == rhs) return {};
  for (int row = 0; row < kAlgebraDim; ++row)
    for (int col = 0; col < kAlgebraDim; ++col)
      if (!(lhs.at(row, col) == rhs.at(row, col)))
        return {false, row, col, lhs.at(row, col).to_string(), rhs.at(row, col).to_string()};
  return {};
}

}  // namespace g2chev
