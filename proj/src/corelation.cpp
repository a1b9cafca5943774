#include "weblog/corelation.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

#include "weblog/classification.hpp"
#include "weblog/errors.hpp"
#include "weblog/log_parser.hpp"

namespace weblog {

namespace {

struct Counts {
  std::size_t hits = 0;
  std::size_t incomplete = 0;

  void add(bool ok) {
    ++hits;
    if (!ok) ++incomplete;
  }
  std::size_t successful() const { return hits - incomplete; }
};

// Drops values below min_hits and returns the survivors as sorted rows.
std::vector<AccessRow> surviving(const std::map<std::string_view, Counts>& counts, std::size_t min_hits) {
  std::vector<AccessRow> rows;
  for (const auto& [key, c] : counts) {
    if (c.hits >= min_hits) rows.push_back({std::string(key), c.hits, c.incomplete});
  }
  return rows;
}

bool contains(const std::vector<AccessRow>& sorted_rows, std::string_view key) {
  auto it = std::lower_bound(sorted_rows.begin(), sorted_rows.end(), key,
                             [](const AccessRow& row, std::string_view k) { return row.key < k; });
  return it != sorted_rows.end() && it->key == key;
}

template <typename Key>
bool kept(const std::map<Key, Counts>& groups, const Key& key, std::size_t min_hits) {
  auto it = groups.find(key);
  return it != groups.end() && it->second.successful() >= min_hits;
}

}  // namespace

std::string_view to_string(CoRelationShape shape) {
  switch (shape) {
    case CoRelationShape::IpUrl:
      return "ip_url";
    case CoRelationShape::UrlPath:
      return "url_path";
    case CoRelationShape::IpPath:
      return "ip_path";
    case CoRelationShape::IpUrlPath:
      return "ip_url_path";
  }
  return "ip_url";
}

Ratio CoRelationRow::success_ratio() const { return weblog::success_ratio(hits, incomplete); }

CoRelations custom_apriori(std::span<const LogRecord> records, std::size_t min_hits) {
  if (min_hits == 0) throw DomainError("min_hits must be at least 1");

  struct View {
    std::string_view ip;
    std::string_view url;
    std::string path;
    bool ok;
  };
  std::vector<View> views;
  views.reserve(records.size());
  for (const auto& r : records) {
    views.push_back({r.ip, r.url, extract_path(r.url), classify_status(r.status) == Outcome::Successful});
  }

  // Level 1: distinct values per attribute.
  std::map<std::string_view, Counts> ip_counts, url_counts, path_counts;
  for (const auto& v : views) {
    ip_counts[v.ip].add(v.ok);
    url_counts[v.url].add(v.ok);
    path_counts[v.path].add(v.ok);
  }
  CoRelations out;
  out.ips = surviving(ip_counts, min_hits);
  out.urls = surviving(url_counts, min_hits);
  out.paths = surviving(path_counts, min_hits);

  // Level 2: join each surviving left value with the right values seen in the same records.
  using Pair = std::pair<std::string_view, std::string_view>;
  std::map<Pair, Counts> ip_url, url_path, ip_path;
  for (const auto& v : views) {
    const bool ip_in = contains(out.ips, v.ip);
    const bool url_in = contains(out.urls, v.url);
    const bool path_in = contains(out.paths, v.path);
    if (ip_in && url_in) ip_url[{v.ip, v.url}].add(v.ok);
    if (url_in && path_in) url_path[{v.url, v.path}].add(v.ok);
    if (ip_in && path_in) ip_path[{v.ip, v.path}].add(v.ok);
  }

  // Level 3: only triples whose every pair survived the level-2 prune.
  using Triple = std::tuple<std::string_view, std::string_view, std::string_view>;
  std::map<Triple, Counts> triples;
  for (const auto& v : views) {
    if (kept(ip_url, Pair{v.ip, v.url}, min_hits) && kept(url_path, Pair{v.url, v.path}, min_hits) &&
        kept(ip_path, Pair{v.ip, v.path}, min_hits)) {
      triples[{v.ip, v.url, v.path}].add(v.ok);
    }
  }

  // Prune: groups with fewer than min_hits successful co-occurrences are removed.
  auto emit_pairs = [&](const std::map<Pair, Counts>& groups, CoRelationTable& table, auto&& assign) {
    for (const auto& [key, c] : groups) {
      if (c.successful() < min_hits) continue;
      CoRelationRow row;
      assign(row, key);
      row.hits = c.hits;
      row.incomplete = c.incomplete;
      table.rows.push_back(std::move(row));
    }
  };
  emit_pairs(ip_url, out.ip_url, [](CoRelationRow& row, const Pair& k) {
    row.ip = std::string(k.first);
    row.url = std::string(k.second);
  });
  emit_pairs(url_path, out.url_path, [](CoRelationRow& row, const Pair& k) {
    row.url = std::string(k.first);
    row.path = std::string(k.second);
  });
  emit_pairs(ip_path, out.ip_path, [](CoRelationRow& row, const Pair& k) {
    row.ip = std::string(k.first);
    row.path = std::string(k.second);
  });
  for (const auto& [key, c] : triples) {
    if (c.successful() < min_hits) continue;
    out.ip_url_path.rows.push_back(CoRelationRow{std::string(std::get<0>(key)), std::string(std::get<1>(key)),
                                                 std::string(std::get<2>(key)), c.hits, c.incomplete});
  }
  return out;
}

}  // namespace weblog
