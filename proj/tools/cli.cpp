#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "anacon/cl_syntax.hpp"
#include "anacon/conflict_engine.hpp"
#include "anacon/contract_file.hpp"
#include "anacon/error.hpp"
#include "anacon/restricted_english.hpp"
#include "anacon/xml_export.hpp"

namespace anacon::cli {

namespace fs = std::filesystem;

namespace {

class Log {
 public:
  Log(std::ostream& err, bool on) : err_(err), on_(on) {}
  void operator()(const char* phase, const std::string& msg) const {
    if (on_) err_ << "[" << phase << "] " << msg << "\n";
  }

 private:
  std::ostream& err_;
  bool on_;
};

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

bool write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  return static_cast<bool>(out.flush());
}

fs::path output_dir_for(const RunConfig& cfg) {
  if (cfg.output_dir) return *cfg.output_dir;
  fs::path parent = cfg.input_path.parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

bool prepare_dir(const fs::path& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "error: cannot use output directory " << dir.string() << "\n";
    return false;
  }
  return true;
}

void remove_stale(const fs::path& dir) {
  std::error_code ec;
  fs::remove(dir / kResultEng, ec);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return cfg.mode == RunConfig::Mode::Reverse ? run_reverse(cfg, out, err)
                                              : run_analyze(cfg, out, err);
}

int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Log log(err, cfg.verbose);
  const auto text = read_file(cfg.input_path);
  if (!text) {
    err << "error: cannot read " << cfg.input_path.string() << "\n";
    return kIoOrParseFailure;
  }
  const fs::path dir = output_dir_for(cfg);
  if (!prepare_dir(dir, err)) return kIoOrParseFailure;

  log("Cont_Parser", "parsing " + cfg.input_path.string());
  ContractDocument doc;
  try {
    doc = parse_contract_file(*text);
  } catch (const ParseError& e) {
    err << cfg.input_path.string() << ":" << e.what() << "\n";
    return kIoOrParseFailure;
  }
  log("Cont_Parser", std::to_string(doc.dictionary.size()) + " actions, " +
                         std::to_string(doc.clauses.size()) + " clauses, " +
                         std::to_string(doc.contradictions.size()) +
                         " contradictions");

  log("Comparison", "checking actions against the dictionary");
  const auto diagnostics = validate(doc);
  if (!diagnostics.empty()) {
    for (const auto& d : diagnostics) {
      err << cfg.input_path.string() << ": " << format_diagnostic(d) << "\n";
    }
    remove_stale(dir);
    return kInvalidContract;
  }

  log("Cont_GF_Cl", "writing " + std::string(kResultCl));
  const Clause contract = doc.contract();
  if (!write_file(dir / kResultCl, print_cl(contract) + "\n")) {
    err << "error: cannot write " << (dir / kResultCl).string() << "\n";
    return kIoOrParseFailure;
  }
  if (cfg.emit_xml) {
    log("Cl2XML", "writing " + std::string(kContractXml));
    if (!write_file(dir / kContractXml, to_xml(contract) + "\n")) {
      err << "error: cannot write " << (dir / kContractXml).string() << "\n";
      return kIoOrParseFailure;
    }
  }

  log("CLAN", "exploring with max-states " + std::to_string(cfg.max_states) +
                  ", max-depth " + std::to_string(cfg.max_depth));
  ExplorationLimits limits;
  limits.max_states = cfg.max_states;
  limits.max_depth = cfg.max_depth;
  AnalysisResult result;
  try {
    result = build_and_check(doc, limits);
  } catch (const UnsupportedContract& e) {
    err << cfg.input_path.string() << ": unsupported contract: " << e.what()
        << "\n";
    remove_stale(dir);
    return kInvalidContract;
  }
  log("CLAN", std::to_string(result.states) + " states, " +
                  std::to_string(result.transitions) + " transitions");

  switch (result.verdict) {
    case AnalysisResult::Verdict::NoConflict:
      remove_stale(dir);
      out << "NO CONFLICT\n";
      return kNoConflict;
    case AnalysisResult::Verdict::Inconclusive:
      remove_stale(dir);
      out << "INCONCLUSIVE: bound reached (" << result.bound_hit << ")\n";
      return kInconclusive;
    case AnalysisResult::Verdict::Conflict:
      break;
  }

  log("Cl_GF_Cont", "writing " + std::string(kResultEng));
  const ConflictReport& report = *result.report;
  const std::string english = report_to_english(report, doc.source_spans);
  if (!write_file(dir / kResultEng, english)) {
    err << "error: cannot write " << (dir / kResultEng).string() << "\n";
    return kIoOrParseFailure;
  }
  out << english.substr(0, english.find('\n')) << "\n";
  out << "CONFLICT " << to_string(report.kind) << "\n";
  return kConflict;
}

int run_reverse(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Log log(err, cfg.verbose);
  const auto text = read_file(cfg.input_path);
  if (!text) {
    err << "error: cannot read " << cfg.input_path.string() << "\n";
    return kIoOrParseFailure;
  }
  const fs::path dir = output_dir_for(cfg);
  if (!prepare_dir(dir, err)) return kIoOrParseFailure;

  log("Cl_GF_Cont", "parsing " + cfg.input_path.string());
  Clause c = Clause::top();
  try {
    c = parse_cl(*text);
  } catch (const ParseError& e) {
    err << cfg.input_path.string() << ":" << e.what() << "\n";
    return kIoOrParseFailure;
  }
  if (!write_file(dir / kResultEng, linearize_re(c) + "\n")) {
    err << "error: cannot write " << (dir / kResultEng).string() << "\n";
    return kIoOrParseFailure;
  }
  out << "wrote " << (dir / kResultEng).string() << "\n";
  return kNoConflict;
}

}  // namespace anacon::cli
