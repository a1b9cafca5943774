#pragma once

#include <span>
#include <string>
#include <vector>

#include "weblog/classification.hpp"
#include "weblog/log_record.hpp"
#include "weblog/ratio.hpp"

namespace weblog {

struct GeneralStats {
  std::size_t total_hits = 0;
  std::size_t successful_hits = 0;
  std::size_t incomplete_hits = 0;
  std::size_t page_views = 0;
  std::size_t image_views = 0;
  std::size_t file_downloads = 0;
  std::size_t other_assets = 0;
  std::size_t visitors = 0;  // distinct ips

  friend bool operator==(const GeneralStats&, const GeneralStats&) = default;
};

struct DailyRow {
  LocalDate date;
  std::size_t hits = 0;
  std::size_t successful = 0;
  std::size_t incomplete = 0;

  friend bool operator==(const DailyRow&, const DailyRow&) = default;
};

struct PerDay {
  std::vector<DailyRow> rows;  // ascending by date
  std::size_t average_hits = 0;

  friend bool operator==(const PerDay&, const PerDay&) = default;
};

struct CountRow {
  std::string label;
  std::size_t count = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct AccessRow {
  std::string key;
  std::size_t hits = 0;
  std::size_t incomplete = 0;

  Ratio success_ratio() const;
  friend bool operator==(const AccessRow&, const AccessRow&) = default;
};

enum class AccessKey { Ip, Url };

// (hits - incomplete) / hits. DomainError when hits == 0 or incomplete > hits.
Ratio success_ratio(std::size_t hits, std::size_t incomplete);

GeneralStats general_stats(std::span<const LogRecord> records, const ClassifierConfig& config);

// Rows per local date; average is floor(total / days), 0 for no records.
PerDay per_day(std::span<const LogRecord> records);

// Sorted by count descending, then family name.
std::vector<CountRow> browser_stats(std::span<const LogRecord> records);

// Incomplete records grouped by status label, count descending then label.
std::vector<CountRow> error_report(std::span<const LogRecord> records);

// One row per distinct key, ascending by key.
std::vector<AccessRow> access_stats(std::span<const LogRecord> records, AccessKey key_by);

}  // namespace weblog
