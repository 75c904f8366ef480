#include "g2chev/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2chev/adjoint.hpp"

namespace g2chev::cli {

namespace {

std::optional<std::string> validate(const Config& c) {
  if (c.format == Format::csv && c.command != Command::table)
    return "csv output is only available for the table command";
  if (c.signs == SignsMode::all && c.command != Command::verify)
    return "--signs all is only available for the verify command";
  if (c.signs == SignsMode::symbolic && c.command == Command::verify)
    return "verify needs concrete signs: --signs with four of +/- or all";
  if ((c.pair || c.reference_only) && c.command != Command::formulas)
    return "--pair and --reference-only apply to the formulas command";
  if (c.pair && c.reference_only) return "--pair and --reference-only are mutually exclusive";
  if (c.pair && (c.pair->left == c.pair->right || c.pair->left == -c.pair->right))
    return "--pair needs two distinct non-opposite roots";
  return std::nullopt;
}

RunResult run_table(const Config& c) {
  ConstantTable table = solve();
  const SignAssignment* sigma = c.signs == SignsMode::single ? &c.sigma : nullptr;
  switch (c.format) {
    case Format::ascii: return {0, table_to_ascii(table, sigma), ""};
    case Format::csv: return {0, table_to_csv(table, sigma), ""};
    case Format::json: return {0, table_to_json(table, sigma), ""};
    case Format::latex: return {0, table_to_latex(table, sigma), ""};
  }
  return {2, "", "unreachable"};
}

RunResult run_formulas(const Config& c) {
  ConstantTable table = solve();
  const SignAssignment* sigma = c.signs == SignsMode::single ? &c.sigma : nullptr;
  std::vector<CommutatorFormula> list;
  if (c.pair) {
    list.push_back(formula(table, c.pair->left, c.pair->right));
  } else if (c.reference_only) {
    for (const FormulaKey& key : reference_pairs())
      list.push_back(formula(table, key.left, key.right));
  } else {
    list = all_formulas(table);
  }
  switch (c.format) {
    case Format::ascii: {
      std::string out;
      for (const CommutatorFormula& f : list)
        out += render_equation(f, CoeffStyle::ascii, sigma) + "\n";
      return {0, out, ""};
    }
    case Format::json: return {0, formulas_to_json(list, sigma), ""};
    case Format::latex: return {0, formulas_to_latex(list, sigma), ""};
    case Format::csv: break;  // rejected by validate
  }
  return {2, "", "unreachable"};
}

RunResult run_verify(const Config& c) {
  ConstantTable table = solve();
  std::vector<SignAssignment> sigmas =
      c.signs == SignsMode::all ? all_assignments() : std::vector<SignAssignment>{c.sigma};

  int formulas_total = 0, formulas_passed = 0;
  int jacobi_total = 0, jacobi_passed = 0;
  int relations_total = 0, relations_passed = 0;
  std::string text;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();

  for (const SignAssignment& sigma : sigmas) {
    std::string sig = sigma.to_string();
    std::vector<std::string> details;

    auto relations = relation_violations(table, sigma);
    ++relations_total;
    if (relations.empty()) ++relations_passed;
    for (const auto& v : relations) details.push_back(v);
    checks.push_back({{"kind", "relations"},
                      {"sigma", sig},
                      {"status", relations.empty() ? "pass" : "fail"}});

    AdjointAlgebra algebra(table, sigma);
    auto jacobi = algebra.jacobi_violations();
    ++jacobi_total;
    if (jacobi.empty()) ++jacobi_passed;
    for (const auto& v : jacobi) details.push_back(v);
    checks.push_back(
        {{"kind", "jacobi"}, {"sigma", sig}, {"status", jacobi.empty() ? "pass" : "fail"}});

    int pass_here = 0, total_here = 0;
    for (const CommutatorFormula& f : all_formulas(table)) {
      ++total_here;
      auto result = algebra.check_formula(f);
      nlohmann::ordered_json jc = {{"kind", "formula"},
                                   {"sigma", sig},
                                   {"left", to_string(f.s)},
                                   {"right", to_string(f.r)},
                                   {"status", result.ok ? "pass" : "fail"}};
      if (result.ok) {
        ++pass_here;
      } else {
        details.push_back("formula [" + to_string(f.s) + "," + to_string(f.r) +
                          "]: first mismatch at entry (" + std::to_string(result.row) + "," +
                          std::to_string(result.col) + "): word gives " + result.lhs +
                          ", formula gives " + result.rhs);
        jc["detail"] = details.back();
      }
      checks.push_back(jc);
    }
    formulas_total += total_here;
    formulas_passed += pass_here;

    text += "signs " + sig + ": relations " +
            (relations.empty() ? "ok" : std::to_string(relations.size()) + " violations") +
            ", jacobi " + (jacobi.empty() ? "ok" : std::to_string(jacobi.size()) + " violations") +
            ", formulas " + std::to_string(pass_here) + "/" + std::to_string(total_here) + "\n";
    for (const auto& d : details) text += "  " + d + "\n";
  }

  bool ok = formulas_passed == formulas_total && jacobi_passed == jacobi_total &&
            relations_passed == relations_total;
  std::string summary = std::to_string(formulas_passed) + "/" + std::to_string(formulas_total) +
                        " formulas verified, " + std::to_string(jacobi_passed) + "/" +
                        std::to_string(jacobi_total) + " Jacobi passes";
  text += summary + "\n";

  if (c.format == Format::json) {
    nlohmann::ordered_json j;
    j["checks"] = checks;
    j["summary"] = {{"formulas_passed", formulas_passed},
                    {"formulas_total", formulas_total},
                    {"jacobi_passed", jacobi_passed},
                    {"jacobi_total", jacobi_total},
                    {"relation_suites_passed", relations_passed},
                    {"relation_suites_total", relations_total},
                    {"ok", ok}};
    return {ok ? 0 : 1, j.dump(2) + "\n", ""};
  }
  return {ok ? 0 : 1, text, ""};
}

}  // namespace

RunResult run(const Config& config) {
  if (auto problem = validate(config)) return {2, "", *problem + "\n"};
  switch (config.command) {
    case Command::table: return run_table(config);
    case Command::formulas: return run_formulas(config);
    case Command::verify: return run_verify(config);
  }
  return {2, "", "unreachable\n"};
}

std::optional<Config> parse_signs_into(Config config, const std::vector<std::string>& tokens,
                                       std::string& error) {
  if (tokens.empty()) {
    config.signs = config.command == Command::verify ? SignsMode::all : SignsMode::symbolic;
    return config;
  }
  std::string joined;
  for (const auto& tok : tokens) joined += tok;
  if (joined == "symbolic") {
    config.signs = SignsMode::symbolic;
    return config;
  }
  if (joined == "all") {
    config.signs = SignsMode::all;
    return config;
  }
  try {
    config.sigma = SignAssignment::parse(joined);
  } catch (const std::invalid_argument&) {
    error = "--signs expects four of +/- (e.g. --signs + - + - or --signs +-+-), "
            "the word symbolic, or all";
    return std::nullopt;
  }
  config.signs = SignsMode::single;
  return config;
}

int main_from_args(int argc, const char* const* argv) {
  CLI::App app{"Structure constants and commutator formulas of the Chevalley group of type G2"};
  app.require_subcommand(1);

  struct SubArgs {
    std::vector<std::string> signs;
    std::string format = "ascii";
    std::string output;
    std::string pair;
    bool reference_only = false;
  };
  SubArgs args[3];
  const char* names[3] = {"table", "formulas", "verify"};
  const char* blurbs[3] = {"Print the 12x12 structure constant table",
                           "Print the commutator formulas",
                           "Run relation checks, Jacobi checks and the matrix oracle"};
  CLI::App* subs[3];
  for (int k = 0; k < 3; ++k) {
    CLI::App* sub = app.add_subcommand(names[k], blurbs[k]);
    sub->add_option("--signs", args[k].signs,
                    "four of +/-, or symbolic (table/formulas default), or all (verify default)")
        ->expected(-1);
    sub->add_option("--format", args[k].format, "output format")
        ->check(CLI::IsMember({"ascii", "latex", "json", "csv"}));
    sub->add_option("-o,--output", args[k].output, "write to a file instead of stdout");
    subs[k] = sub;
  }
  subs[1]->add_option("--pair", args[1].pair, "single formula for left,right (e.g. --pair b,a)");
  subs[1]->add_flag("--reference-only", args[1].reference_only,
                    "restrict to the bundled 41 reference pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  int k = subs[1]->parsed() ? 1 : (subs[2]->parsed() ? 2 : 0);
  Config config;
  config.command = k == 0 ? Command::table : (k == 1 ? Command::formulas : Command::verify);
  const std::string& fmt = args[k].format;
  config.format = fmt == "latex" ? Format::latex
                : fmt == "json"  ? Format::json
                : fmt == "csv"   ? Format::csv
                                 : Format::ascii;
  std::string error;
  auto parsed = parse_signs_into(config, args[k].signs, error);
  if (!parsed) {
    std::cerr << error << "\n";
    return 2;
  }
  config = *parsed;
  if (!args[k].pair.empty()) {
    auto comma = args[k].pair.find(',');
    if (comma == std::string::npos) {
      std::cerr << "--pair expects left,right\n";
      return 2;
    }
    try {
      config.pair = FormulaKey{parse_root(args[k].pair.substr(0, comma)),
                               parse_root(args[k].pair.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  config.reference_only = args[k].reference_only;

  RunResult result = run(config);
  if (!result.err.empty()) std::cerr << result.err;
  if (!args[k].output.empty()) {
    std::ofstream file(args[k].output, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << args[k].output << " for writing\n";
      return 2;
    }
    file << result.out;
  } else {
    std::cout << result.out;
  }
  return result.exit_code;
}

}  // namespace g2chev::cli
