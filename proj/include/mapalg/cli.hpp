#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mapalg/io.hpp"

namespace mapalg::cli {

enum ExitCode : int { kOk = 0, kLawViolation = 1, kParseError = 2, kCapError = 3 };

enum class Verdict { pass, fail, conditional };

const char* to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string witness;  // omitted when empty
};

struct Caps {
  int dim_cap = 3;
  int levels = 1;
  int sigma_max = 1;
  std::uint64_t budget = 10'000'000;
};

/// {command, caps, checks, data, timing_ms}. timing_ms is null unless timing
/// was requested, so reports are byte-identical across runs.
struct Report {
  std::string command;
  Caps caps;
  std::vector<Check> checks;
  json data = json::object();
  std::optional<double> timing_ms;

  void add(std::string name, bool pass, std::string witness = {});
  bool pass() const;
  json to_json() const;
};

/// Runs one subcommand; `args` excludes the program name. The report goes to
/// `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapalg::cli
