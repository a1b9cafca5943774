#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weblog/log_record.hpp"
#include "weblog/ratio.hpp"
#include "weblog/statistics.hpp"

namespace weblog {

enum class CoRelationShape { IpUrl, UrlPath, IpPath, IpUrlPath };

std::string_view to_string(CoRelationShape shape);

struct CoRelationRow {
  std::optional<std::string> ip;
  std::optional<std::string> url;
  std::optional<std::string> path;
  std::size_t hits = 0;
  std::size_t incomplete = 0;

  Ratio success_ratio() const;
  friend bool operator==(const CoRelationRow&, const CoRelationRow&) = default;
};

struct CoRelationTable {
  CoRelationShape shape = CoRelationShape::IpUrl;
  std::vector<CoRelationRow> rows;  // ascending by key columns

  friend bool operator==(const CoRelationTable&, const CoRelationTable&) = default;
};

// Grouped Apriori over (ip, url, path) attributes of log records.
//
// Level 1 counts hits per distinct ip, url and path and drops values with
// fewer than min_hits hits. Level 2 scans records whose two attribute
// values both survived, grouping by the pair; a pair is kept only if at
// least min_hits of its co-occurrences were successful. Level 3 groups
// (ip, url, path) triples whose three constituent pairs all survived.
// Every row keeps both its total and incomplete co-occurrence counts.
struct CoRelations {
  std::vector<AccessRow> ips;    // surviving level-1 values
  std::vector<AccessRow> urls;
  std::vector<AccessRow> paths;
  CoRelationTable ip_url{CoRelationShape::IpUrl, {}};
  CoRelationTable url_path{CoRelationShape::UrlPath, {}};
  CoRelationTable ip_path{CoRelationShape::IpPath, {}};
  CoRelationTable ip_url_path{CoRelationShape::IpUrlPath, {}};
};

CoRelations custom_apriori(std::span<const LogRecord> records, std::size_t min_hits = 3);

}  // namespace weblog
