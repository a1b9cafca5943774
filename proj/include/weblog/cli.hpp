#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "weblog/classification.hpp"
#include "weblog/reporting.hpp"

namespace weblog {

enum class Section { General, Access, CoRelations, Rules };

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  Format format = Format::Text;
  std::optional<std::filesystem::path> output;  // stdout when empty
  std::size_t min_support = 3;
  std::size_t min_hits = 3;
  double min_confidence = 0.5;
  std::set<Section> sections{Section::General, Section::Access, Section::CoRelations, Section::Rules};
  ClassifierConfig classifier;
  std::optional<std::size_t> top_n;
  // Injected report timestamp; current UTC time when empty.
  std::optional<std::string> timestamp;
};

// --help / --version / usage errors: print `message` and exit with `code`.
struct CliExit {
  int code = 0;
  std::string message;
};

using ArgsResult = std::variant<RunConfig, CliExit>;

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

ArgsResult parse_args(int argc, const char* const* argv);
ArgsResult parse_args(const std::vector<std::string>& args);  // args without the program name

// Assembles the report document for the configured sections.
ReportDocument build_report(const ParsedLog& log, const RunConfig& config);

// Full pipeline. Report goes to config.output or `out`; diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string_view to_string(Section section);

}  // namespace weblog
