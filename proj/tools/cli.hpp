#ifndef ANACON_TOOLS_CLI_HPP
#define ANACON_TOOLS_CLI_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace anacon::cli {

enum ExitCode : int {
  kNoConflict = 0,
  kConflict = 1,
  kInvalidContract = 2,
  kInconclusive = 3,
  kIoOrParseFailure = 4,
};

struct RunConfig {
  enum class Mode { Analyze, Reverse };

  std::filesystem::path input_path;
  Mode mode = Mode::Analyze;
  bool emit_xml = false;
  std::size_t max_states = 100000;
  std::size_t max_depth = 10;
  /// Defaults to the directory holding the input.
  std::optional<std::filesystem::path> output_dir;
  bool verbose = false;
};

inline constexpr const char* kResultCl = "Result_Cl.txt";
inline constexpr const char* kResultEng = "Result_Eng.txt";
inline constexpr const char* kContractXml = "contract.xml";

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_reverse(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace anacon::cli

#endif  // ANACON_TOOLS_CLI_HPP
