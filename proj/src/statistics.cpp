#include "weblog/statistics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "weblog/errors.hpp"

namespace weblog {

namespace {

std::vector<CountRow> sorted_counts(const std::unordered_map<std::string, std::size_t>& counts) {
  std::vector<CountRow> rows;
  rows.reserve(counts.size());
  for (const auto& [label, n] : counts) rows.push_back({label, n});
  std::sort(rows.begin(), rows.end(), [](const CountRow& a, const CountRow& b) {
    return a.count != b.count ? a.count > b.count : a.label < b.label;
  });
  return rows;
}

}  // namespace

Ratio success_ratio(std::size_t hits, std::size_t incomplete) {
  if (hits == 0) throw DomainError("success ratio of a key with zero hits");
  if (incomplete > hits) throw DomainError("incomplete hits exceed hits");
  return Ratio(hits - incomplete, hits);
}

Ratio AccessRow::success_ratio() const { return weblog::success_ratio(hits, incomplete); }

GeneralStats general_stats(std::span<const LogRecord> records, const ClassifierConfig& config) {
  GeneralStats s;
  std::unordered_set<std::string_view> ips;
  for (const auto& r : records) {
    ++s.total_hits;
    ips.insert(r.ip);
    if (classify_status(r.status) == Outcome::Incomplete) {
      ++s.incomplete_hits;
      continue;
    }
    ++s.successful_hits;
    switch (classify_resource(r.url, config)) {
      case RequestClass::PageView:
        ++s.page_views;
        break;
      case RequestClass::ImageView:
        ++s.image_views;
        break;
      case RequestClass::FileDownload:
        ++s.file_downloads;
        break;
      case RequestClass::OtherAsset:
        ++s.other_assets;
        break;
    }
  }
  s.visitors = ips.size();
  return s;
}

PerDay per_day(std::span<const LogRecord> records) {
  std::map<LocalDate, DailyRow> days;
  for (const auto& r : records) {
    auto date = r.timestamp.local_date();
    auto& row = days.try_emplace(date, DailyRow{date}).first->second;
    ++row.hits;
    if (classify_status(r.status) == Outcome::Successful) {
      ++row.successful;
    } else {
      ++row.incomplete;
    }
  }
  PerDay out;
  for (auto& [date, row] : days) out.rows.push_back(row);
  if (!out.rows.empty()) out.average_hits = records.size() / out.rows.size();
  return out;
}

std::vector<CountRow> browser_stats(std::span<const LogRecord> records) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& r : records) ++counts[browser_family(r.user_agent)];
  return sorted_counts(counts);
}

std::vector<CountRow> error_report(std::span<const LogRecord> records) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& r : records) {
    if (classify_status(r.status) == Outcome::Incomplete) ++counts[status_label(r.status)];
  }
  return sorted_counts(counts);
}

std::vector<AccessRow> access_stats(std::span<const LogRecord> records, AccessKey key_by) {
  std::map<std::string_view, AccessRow> rows;
  for (const auto& r : records) {
    const std::string& key = key_by == AccessKey::Ip ? r.ip : r.url;
    auto& row = rows.try_emplace(key, AccessRow{key}).first->second;
    ++row.hits;
    if (classify_status(r.status) == Outcome::Incomplete) ++row.incomplete;
  }
  std::vector<AccessRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace weblog
