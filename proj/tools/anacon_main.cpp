#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  // The historical spelling of reverse mode is a single-dash long flag.
  std::vector<std::string> args(argv, argv + argc);
  for (auto& a : args) {
    if (a == "-cl") a = "--cl";
  }
  args.erase(args.begin());
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back

  anacon::cli::RunConfig cfg;
  bool reverse = false;
  std::string out_dir;

  CLI::App app{"Contract conflict analysis for restricted-English contracts", "anacon"};
  app.add_option("input", cfg.input_path, "Contract.txt, or a CL file with --cl")
      ->required();
  app.add_flag("--cl", reverse,
               "Translate a symbolic CL file into restricted English");
  app.add_flag("--xml", cfg.emit_xml, "Also write contract.xml");
  app.add_option("--max-states", cfg.max_states, "State budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "Trace length budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", out_dir, "Output directory (default: next to input)");
  app.add_flag("--verbose", cfg.verbose, "Log pipeline phases to stderr");

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : anacon::cli::kIoOrParseFailure;
  }

  cfg.mode = reverse ? anacon::cli::RunConfig::Mode::Reverse
                     : anacon::cli::RunConfig::Mode::Analyze;
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  return anacon::cli::run(cfg, std::cout, std::cerr);
}
