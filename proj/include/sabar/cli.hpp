#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sabar {

enum class Verb { Help, BarcodeSimplicial, BarcodeSublevel, BarcodeRips, RootsOrder, FormulaMakeClosed };

struct RunConfig {
  Verb verb = Verb::Help;
  std::string input;  // filtration file or points CSV
  std::string formula;
  std::string poly;
  std::string radius = "0";
  std::optional<std::string> levels;        // grid-only path
  std::optional<std::string> extra_levels;  // merged into the critical values
  std::string polys;
  int max_dim = 2;
  int grid_n = 32;
  std::optional<std::string> json_out;  // "-" for stdout
  std::optional<std::string> svg_out;
  std::string help;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws UsageError for unknown flags, missing required flags and bad values.
RunConfig parse_args(const std::vector<std::string>& args);

enum ExitCode { kOk = 0, kUsage = 2, kContract = 3, kInternal = 4 };

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sabar
