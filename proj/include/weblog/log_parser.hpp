#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weblog/log_record.hpp"

namespace weblog {

// Why a line was rejected. `reason` is a short stable label used as a
// ParseStats key ("missing bracket", "bad status", ...).
struct ParseError {
  std::string reason;
  std::size_t line_number = 0;
};

using ParseResult = std::variant<LogRecord, ParseError>;

struct ParseStats {
  std::size_t total_lines = 0;
  std::size_t parsed = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;

  void merge(const ParseStats& other);
  friend bool operator==(const ParseStats&, const ParseStats&) = default;
};

struct ParsedLog {
  std::vector<LogRecord> records;
  ParseStats stats;
};

ParseResult parse_line(std::string_view line, std::size_t line_number);

// Accumulates records line by line. Blank lines are skipped with reason
// "blank"; malformed lines are counted and never stop the stream.
class LogParser {
 public:
  void feed(std::string_view line);

  const ParsedLog& result() const& { return log_; }
  ParsedLog result() && { return std::move(log_); }
  std::size_t lines_seen() const { return log_.stats.total_lines; }

 private:
  ParsedLog log_;
};

ParsedLog parse_log(std::istream& in);

// Reads plain or gzip-compressed files (detected from content), continuing
// line numbering across files. Throws IoError naming the path on failure.
ParsedLog parse_files(std::span<const std::filesystem::path> paths);

// Directory component of a url up to and including its last '/', ignoring
// any query string or fragment. "/a/b.gif?x" -> "/a/".
std::string extract_path(std::string_view url);

}  // namespace weblog
