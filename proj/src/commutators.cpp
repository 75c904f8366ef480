#include "g2chev/commutators.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace g2chev {

SignCoefficient chain_product(const ConstantTable& table, const Root& r, const Root& s, int i) {
  if (i < 1) throw std::invalid_argument("chain_product: requires i >= 1");
  SignCoefficient out(1);
  Rational factorial = 1;
  Root cur = s;
  for (int k = 0; k < i; ++k) {
    const SignCoefficient& factor = table.entry(r, cur);  // throws if cur left the root system
    if (factor.is_zero())
      throw std::logic_error("chain_product: zero link N[" + to_string(r) + "," + to_string(cur) + "]");
    out = out * factor;
    factorial *= k + 1;
    cur = cur + r;
  }
  return (Rational(1) / factorial) * out;
}

SignCoefficient arg_coefficient(const ConstantTable& table, int i, int j, const Root& r,
                                const Root& s) {
  if (i == 1 && j == 1) return chain_product(table, r, s, 1);
  if (j == 1) return chain_product(table, r, s, i);
  if (i == 1) {
    SignCoefficient m = chain_product(table, s, r, j);
    return j % 2 == 0 ? m : -m;
  }
  if (i == 3 && j == 2) return Rational(1, 3) * chain_product(table, r + s, r, 2);
  if (i == 2 && j == 3) return Rational(-2, 3) * chain_product(table, s + r, s, 2);
  throw std::invalid_argument("arg_coefficient: pattern (" + std::to_string(i) + "," +
                              std::to_string(j) + ") does not occur");
}

CommutatorFormula formula(const ConstantTable& table, const Root& s, const Root& r) {
  if (s == r || s == -r) throw std::invalid_argument("formula: requires s != r and s != -r");
  CommutatorFormula f{s, r, {}};
  // Scan past the actual bound so the bound itself is checked.
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      Root target{i * r.m + j * s.m, i * r.n + j * s.n};
      if (!is_root(target)) continue;
      if (i > 3 || j > 3)
        throw std::logic_error("formula: exponent bound exceeded at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
      f.terms.push_back({i, j, target, arg_coefficient(table, i, j, r, s)});
    }
  std::sort(f.terms.begin(), f.terms.end(), [](const FormulaTerm& x, const FormulaTerm& y) {
    return std::pair(x.i + x.j, x.j) < std::pair(y.i + y.j, y.j);
  });
  for (size_t k = 1; k < f.terms.size(); ++k) {
    const FormulaTerm &x = f.terms[k - 1], &y = f.terms[k];
    if (!(std::pair(x.i + x.j, x.j) < std::pair(y.i + y.j, y.j)))
      throw std::logic_error("formula: term keys not strictly increasing");
  }
  return f;
}

std::vector<CommutatorFormula> all_formulas(const ConstantTable& table) {
  std::vector<CommutatorFormula> out;
  for (const Root& s : all_roots())
    for (const Root& r : all_roots())
      if (sum(r, s)) out.push_back(formula(table, s, r));
  return out;
}

const std::vector<FormulaKey>& reference_pairs() {
  static const std::vector<FormulaKey> pairs = [] {
    static const char* raw[41][2] = {
        {"b", "a"},          {"a", "b"},         {"a+b", "a"},       {"2a+b", "a"},
        {"3a+b", "b"},       {"2a+b", "a+b"},    {"-b", "-a"},       {"-a", "-b"},
        {"-a-b", "-a"},      {"-2a-b", "-a"},    {"-3a-b", "-b"},    {"-2a-b", "-a-b"},
        {"-a-b", "a"},       {"-2a-b", "a"},     {"-3a-b", "a"},     {"a", "-3a-b"},
        {"b", "-a-b"},       {"-a-b", "b"},      {"-3a-2b", "b"},    {"-a", "a+b"},
        {"-b", "a+b"},       {"a+b", "-b"},      {"-2a-b", "a+b"},   {"-3a-2b", "a+b"},
        {"a+b", "-3a-2b"},   {"-a", "2a+b"},     {"-a-b", "2a+b"},   {"-3a-b", "2a+b"},
        {"2a+b", "-3a-b"},   {"-3a-2b", "2a+b"}, {"2a+b", "-3a-2b"}, {"-a", "3a+b"},
        {"3a+b", "-a"},      {"-2a-b", "3a+b"},  {"3a+b", "-2a-b"},  {"-3a-2b", "3a+b"},
        {"-a-b", "3a+2b"},   {"3a+2b", "-a-b"},  {"-2a-b", "3a+2b"}, {"3a+2b", "-2a-b"},
        {"-3a-b", "3a+2b"},
    };
    std::vector<FormulaKey> out;
    for (const auto& p : raw) out.push_back({parse_root(p[0]), parse_root(p[1])});
    return out;
  }();
  return pairs;
}

namespace {

std::string subscripted(const Root& r, CoeffStyle style) {
  std::string name = to_string(r);
  if (style == CoeffStyle::latex || name.size() > 1) return "x_{" + name + "}";
  return "x_" + name;
}

std::string power(const char* var, int k) {
  if (k == 0) return "";
  std::string out = var;
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

// Argument c * (-t)^i * u^j with the (-1)^i sign folded into the coefficient.
std::string argument(const FormulaTerm& term, CoeffStyle style, const SignAssignment* sigma) {
  SignCoefficient c = term.i % 2 == 0 ? term.c : -term.c;
  std::string coeff;
  if (sigma) {
    long long v = c.specialize(*sigma).as_integer();
    if (v < 0) coeff += "-";
    if (v != 1 && v != -1) coeff += std::to_string(v < 0 ? -v : v);
  } else {
    coeff = render(c, style);  // coefficient magnitude 1 is already elided
  }
  return coeff + power("t", term.i) + power("u", term.j);
}

}  // namespace

std::string render(const CommutatorFormula& f, CoeffStyle style, const SignAssignment* sigma) {
  if (f.terms.empty()) return "1";
  std::string out;
  for (const FormulaTerm& term : f.terms) {
    if (!out.empty()) out += style == CoeffStyle::latex ? "\\," : " ";
    out += subscripted(term.target, style) + "(" + argument(term, style, sigma) + ")";
  }
  return out;
}

std::string render_equation(const CommutatorFormula& f, CoeffStyle style,
                            const SignAssignment* sigma) {
  return "[" + subscripted(f.s, style) + "(u), " + subscripted(f.r, style) + "(t)] = " +
         render(f, style, sigma);
}

std::string formulas_to_json(const std::vector<CommutatorFormula>& fs, const SignAssignment* sigma) {
  nlohmann::ordered_json j;
  j["signs"] = sigma ? sigma->to_string() : "symbolic";
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CommutatorFormula& f : fs) {
    nlohmann::ordered_json jf;
    jf["left"] = to_string(f.s);
    jf["right"] = to_string(f.r);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const FormulaTerm& term : f.terms) {
      nlohmann::ordered_json jt;
      jt["i"] = term.i;
      jt["j"] = term.j;
      jt["target"] = to_string(term.target);
      if (sigma)
        jt["coeff"] = term.c.specialize(*sigma).as_integer();
      else
        jt["coeff"] = render(term.c, CoeffStyle::ascii);
      terms.push_back(jt);
    }
    jf["terms"] = terms;
    list.push_back(jf);
  }
  j["formulas"] = list;
  return j.dump(2) + "\n";
}

std::string formulas_to_latex(const std::vector<CommutatorFormula>& fs,
                              const SignAssignment* sigma) {
  std::string out =
      "\\documentclass{article}\n"
      "\\usepackage{amsmath}\n"
      "\\begin{document}\n"
      "\\begin{align*}\n";
  for (const CommutatorFormula& f : fs) {
    out += "[" + subscripted(f.s, CoeffStyle::latex) + "(u), " +
           subscripted(f.r, CoeffStyle::latex) + "(t)] &= " +
           render(f, CoeffStyle::latex, sigma) + " \\\\\n";
  }
  out +=
      "\\end{align*}\n"
      "\\end{document}\n";
  return out;
}

}  // namespace g2chev
