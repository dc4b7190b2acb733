#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcagen/generators.hpp"

namespace fcagen::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kInternal = 3 };

/// Invalid flags or flag combinations; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything needed to reproduce a run. `output` and `jobs` are excluded
/// from the manifest: neither affects the bytes a run produces.
struct RunConfig {
  std::string command;                   // generate | ipi | stego | distinct | nullmodel
  GeneratorSpec spec;
  std::vector<std::string> models;       // distinct: model names to compare
  std::uint64_t count = 1;
  std::vector<std::uint64_t> checkpoints;
  bool omit_zero = true;                 // stego histogram
  std::string input;                     // ipi: directory of .cxt; nullmodel: reference file
  std::string method = "permute";        // nullmodel
  double beta = 0.0;                     // nullmodel dirichlet; 0 = 1000 * (|M|+1)

  std::filesystem::path output;
  std::size_t jobs = 1;
};

/// Parses a model name: direct, indirect, dirichlet, varA, varB.
/// varA and varB set the beta mode; `c` is used by varB.
GeneratorSpec spec_for_model(const std::string& name, std::size_t attributes, double c = 0.1);

/// Flat key=value text, one entry per line, LF-terminated.
std::string to_manifest(const RunConfig& config);
RunConfig from_manifest(const std::string& text);

// Commands. Each writes into config.output (created if missing) and
// returns normally or throws. Progress goes to `log`.
void cmd_generate(const RunConfig& config, std::ostream& log);
void cmd_ipi(const RunConfig& config, std::ostream& out, std::ostream& log);
void cmd_experiment_stego(const RunConfig& config, std::ostream& log);
void cmd_experiment_distinct(const RunConfig& config, std::ostream& log);
void cmd_nullmodel(const RunConfig& config, std::ostream& log);

/// Dispatches on config.command.
void run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Full command-line entry point; returns the process exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `.cxt` files of a directory, ordered by numeric suffix then name.
std::vector<std::filesystem::path> list_contexts(const std::filesystem::path& dir);

}  // namespace fcagen::cli
