#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2chev/commutators.hpp"

namespace g2chev::cli {

enum class Command { table, formulas, verify };
enum class Format { ascii, latex, json, csv };
enum class SignsMode { symbolic, single, all };

struct Config {
  Command command = Command::table;
  SignsMode signs = SignsMode::symbolic;  // verify defaults to all instead
  SignAssignment sigma;                   // meaningful when signs == single
  Format format = Format::ascii;
  std::optional<FormulaKey> pair;         // formulas only
  bool reference_only = false;            // formulas only: the bundled 41 pairs
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 usage error
  std::string out;
  std::string err;
};

/// Pure function of the config: identical configs produce identical bytes.
RunResult run(const Config& config);

/// Parses "symbolic", "all", "++++", "+-+-" or separated "+ - + -" tokens.
std::optional<Config> parse_signs_into(Config config, const std::vector<std::string>& tokens,
                                       std::string& error);

/// argv front end; prints the run output and returns its exit code.
int main_from_args(int argc, const char* const* argv);

}  // namespace g2chev::cli
