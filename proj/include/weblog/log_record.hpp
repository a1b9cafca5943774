#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace weblog {

// Calendar date as written in the log's own offset ("27/Nov/2008").
struct LocalDate {
  std::chrono::year_month_day ymd;

  std::string to_string() const;  // dd/Mon/yyyy
  friend bool operator==(const LocalDate&, const LocalDate&) = default;
  friend auto operator<=>(const LocalDate& a, const LocalDate& b) { return a.ymd <=> b.ymd; }
};

// Instant normalized to UTC, remembering the offset it was logged with.
struct Timestamp {
  std::chrono::sys_seconds utc;
  std::chrono::minutes offset{0};

  LocalDate local_date() const;
  // CLF form: dd/Mon/yyyy:HH:MM:SS +zzzz, in the original offset.
  std::string to_clf() const;
  friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

enum class LogFormat { Common, Combined };

struct LogRecord {
  std::string ip;
  std::optional<std::string> identity;
  std::optional<std::string> authuser;
  Timestamp timestamp;
  std::string method;
  std::string url;
  std::optional<std::string> protocol;
  int status = 0;
  std::optional<std::uint64_t> bytes;
  std::optional<std::string> referrer;
  std::optional<std::string> user_agent;
  std::size_t line_number = 0;
  // Combined when the line carried the `"referrer" "user-agent"` trailer, even as "-" "-".
  LogFormat format = LogFormat::Common;

  friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

// Inverse of LocalDate::to_string.
std::optional<LocalDate> parse_local_date(std::string_view text);

// Canonical CLF (or Combined, when referrer/user-agent are present) line.
std::string serialize(const LogRecord& record);

}  // namespace weblog
