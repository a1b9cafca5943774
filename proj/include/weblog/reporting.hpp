#pragma once

#include <json.hpp>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weblog/corelation.hpp"
#include "weblog/log_parser.hpp"
#include "weblog/mining.hpp"
#include "weblog/statistics.hpp"

namespace weblog {

enum class Format { Text, Csv, Json };

// "text", "csv" or "json"; anything else is a UsageError.
Format parse_format(std::string_view name);

// An association rule with its item ids resolved to names.
struct RuleRow {
  std::vector<Item> antecedent;
  std::vector<Item> consequent;
  std::size_t support = 0;
  std::size_t antecedent_support = 0;

  Ratio confidence() const { return Ratio(support, antecedent_support); }
  friend bool operator==(const RuleRow&, const RuleRow&) = default;
};

std::vector<RuleRow> name_rules(std::span<const AssociationRule> rules, const ItemDictionary& dictionary);

struct CoRelationTables {
  CoRelationTable ip_url{CoRelationShape::IpUrl, {}};
  CoRelationTable url_path{CoRelationShape::UrlPath, {}};
  CoRelationTable ip_path{CoRelationShape::IpPath, {}};
  CoRelationTable ip_url_path{CoRelationShape::IpUrlPath, {}};

  friend bool operator==(const CoRelationTables&, const CoRelationTables&) = default;
};

struct ReportMetadata {
  std::vector<std::string> inputs;
  std::size_t min_support = 3;
  std::size_t min_hits = 3;
  double min_confidence = 0.5;
  std::optional<std::size_t> top_n;
  std::vector<std::string> sections;
  std::string tool_version;
  std::string generated_at;
  ParseStats parse;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

// Sections that were not requested stay empty and are not rendered.
struct ReportDocument {
  std::optional<GeneralStats> general;
  std::optional<PerDay> per_day;
  std::optional<std::vector<CountRow>> browsers;
  std::optional<std::vector<CountRow>> errors;
  std::optional<std::vector<AccessRow>> access_ip;
  std::optional<std::vector<AccessRow>> access_url;
  std::optional<CoRelationTables> corelations;
  std::optional<std::vector<RuleRow>> rules;
  ReportMetadata metadata;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline constexpr int kSchemaVersion = 1;

std::string render_general(const GeneralStats& stats, const PerDay& per_day, std::span<const CountRow> browsers,
                           std::span<const CountRow> errors, Format format);

std::string render_table(std::span<const AccessRow> rows, std::string_view title, std::string_view key_label,
                         Format format);
std::string render_table(const CoRelationTable& table, std::string_view title, Format format);

// Text lines look like `{url:/a, url:/b} => {url:/c}  support=3 confidence=1`.
std::string render_rules(std::span<const RuleRow> rules, Format format);

void write_document(std::ostream& out, const ReportDocument& doc, Format format);
std::string render_document(const ReportDocument& doc, Format format);

// JSON output of write_document is exactly to_json(doc).dump(2) plus a newline.

nlohmann::ordered_json to_json(const ReportDocument& doc);

// Strict reader for the JSON schema; throws std::invalid_argument (or a
// nlohmann::json exception) when the document does not conform.
ReportDocument document_from_json(const nlohmann::json& j);

// Ratio cell text: 8 significant digits, no padding.
std::string format_ratio(const Ratio& r);

// RFC 4180 quoting, only when the cell needs it.
std::string csv_escape(std::string_view cell);

}  // namespace weblog
