#include "weblog/reporting.hpp"

#include <sstream>
#include <unordered_map>
#include <stdexcept>

#include "weblog/errors.hpp"

namespace weblog {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view kSep = "\t";

struct Column {
  std::string_view header;
  std::string_view json_key;
};

std::vector<Column> corelation_key_columns(CoRelationShape shape) {
  switch (shape) {
    case CoRelationShape::IpUrl:
      return {{"IPADDRESS", "ip"}, {"URL", "url"}};
    case CoRelationShape::UrlPath:
      return {{"URL", "url"}, {"PATH", "path"}};
    case CoRelationShape::IpPath:
      return {{"IPADDRESS", "ip"}, {"PATH", "path"}};
    case CoRelationShape::IpUrlPath:
      return {{"IPADDRESS", "ip"}, {"URL", "url"}, {"PATH", "path"}};
  }
  return {};
}

const std::string& key_cell(const CoRelationRow& row, std::string_view json_key) {
  static const std::string empty;
  const auto& field = json_key == "ip" ? row.ip : json_key == "url" ? row.url : row.path;
  return field ? *field : empty;
}

// Writes rows of cells in the requested delimited format.
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void title(std::string_view text) {
    if (format_ == Format::Csv) out_ << "# ";
    out_ << text << '\n';
  }

  void row(std::initializer_list<std::string_view> cells) { row(std::vector<std::string_view>(cells)); }

  void row(const std::vector<std::string_view>& cells) {
    bool first = true;
    for (auto cell : cells) {
      if (!first) out_ << (format_ == Format::Csv ? "," : kSep);
      out_ << (format_ == Format::Csv ? csv_escape(cell) : std::string(cell));
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
};

std::string count_str(std::size_t n) { return std::to_string(n); }

std::vector<std::pair<std::string_view, std::size_t>> general_rows(const GeneralStats& s) {
  return {{"TOTALNO OF HITS", s.total_hits},
          {"TOTALNO OF SUCCESSFUL HITS", s.successful_hits},
          {"TOTALNO OF INCOMPLETE HITS", s.incomplete_hits},
          {"TOTALNO OF VISITORS", s.visitors},
          {"PAGE VIEWS", s.page_views},
          {"IMAGE VIEWS", s.image_views},
          {"FILE DOWNLOADS", s.file_downloads},
          {"OTHER ASSETS", s.other_assets}};
}

void write_general(std::ostream& out, Format format, const GeneralStats& stats, const PerDay& per_day,
                   std::span<const CountRow> browsers, std::span<const CountRow> errors) {
  TableWriter w(out, format);
  const bool csv = format == Format::Csv;

  w.title("GENERAL STATISTICS");
  if (csv) w.row({"metric", "value"});
  for (const auto& [label, n] : general_rows(stats)) w.row({label, count_str(n)});
  if (!csv) out << '\n';

  w.title("PER DAY ANALYSIS");
  w.row({"DAY", "HITS", "SUCCESSFUL", "INCOMPLETE"});
  for (const auto& d : per_day.rows) {
    w.row({d.date.to_string(), count_str(d.hits), count_str(d.successful), count_str(d.incomplete)});
  }
  if (csv) {
    w.title("AVERAGE HITS PER DAY");
    w.row({"average_hits_per_day"});
    w.row({count_str(per_day.average_hits)});
  } else {
    w.row({"AVERAGE HITS PER DAY", count_str(per_day.average_hits)});
    out << '\n';
  }

  w.title("POPULAR BROWSERS");
  w.row({"BROWSER", "COUNT"});
  for (const auto& b : browsers) w.row({b.label, count_str(b.count)});
  if (!csv) out << '\n';

  w.title("ERROR REPORTS FOR PAGE ACCESS");
  if (csv) w.row({"ERROR", "COUNT"});
  for (const auto& e : errors) w.row({e.label, count_str(e.count)});
}

void write_access_table(std::ostream& out, Format format, std::span<const AccessRow> rows,
                        std::string_view title, std::string_view key_label) {
  TableWriter w(out, format);
  w.title(title);
  w.row({key_label, "HITS", "INCOMPLETE HITS", "% OF TOTAL"});
  for (const auto& r : rows) w.row({r.key, count_str(r.hits), count_str(r.incomplete), format_ratio(r.success_ratio())});
}

void write_corelation_table(std::ostream& out, Format format, const CoRelationTable& table,
                            std::string_view title) {
  TableWriter w(out, format);
  w.title(title);
  const auto keys = corelation_key_columns(table.shape);
  std::vector<std::string_view> header;
  for (const auto& c : keys) header.push_back(c.header);
  header.insert(header.end(), {"HITS", "INCOMPLETE", "% OF TOTAL"});
  w.row(header);
  for (const auto& r : table.rows) {
    std::vector<std::string> cells;
    for (const auto& c : keys) cells.push_back(key_cell(r, c.json_key));
    cells.push_back(count_str(r.hits));
    cells.push_back(count_str(r.incomplete));
    cells.push_back(format_ratio(r.success_ratio()));
    w.row(std::vector<std::string_view>(cells.begin(), cells.end()));
  }
}

std::string itemset_text(const std::vector<Item>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += to_string(items[i].attribute);
    out += ':';
    out += items[i].value;
  }
  return out + "}";
}

void write_rules(std::ostream& out, Format format, std::span<const RuleRow> rules) {
  if (format == Format::Text) {
    for (const auto& r : rules) {
      out << itemset_text(r.antecedent) << " => " << itemset_text(r.consequent) << "  support=" << r.support
          << " confidence=" << format_ratio(r.confidence()) << '\n';
    }
    return;
  }
  TableWriter w(out, format);
  w.row({"antecedent", "consequent", "support", "antecedent_support", "confidence"});
  for (const auto& r : rules) {
    w.row({itemset_text(r.antecedent), itemset_text(r.consequent), count_str(r.support),
           count_str(r.antecedent_support), format_ratio(r.confidence())});
  }
}

// ---- JSON ------------------------------------------------------------------

ordered_json general_json(const GeneralStats& s) {
  return {{"total_hits", s.total_hits},         {"successful_hits", s.successful_hits},
          {"incomplete_hits", s.incomplete_hits}, {"visitors", s.visitors},
          {"page_views", s.page_views},         {"image_views", s.image_views},
          {"file_downloads", s.file_downloads},   {"other_assets", s.other_assets}};
}

ordered_json per_day_json(const PerDay& p) {
  ordered_json rows = ordered_json::array();
  for (const auto& d : p.rows) {
    rows.push_back({{"date", d.date.to_string()},
                    {"hits", d.hits},
                    {"successful", d.successful},
                    {"incomplete", d.incomplete}});
  }
  return {{"rows", rows}, {"average_hits_per_day", p.average_hits}};
}

ordered_json counts_json(std::span<const CountRow> rows, std::string_view label_key) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) out.push_back({{std::string(label_key), r.label}, {"count", r.count}});
  return out;
}

ordered_json access_json(std::span<const AccessRow> rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"key", r.key},
                   {"hits", r.hits},
                   {"incomplete", r.incomplete},
                   {"success_ratio", r.success_ratio().to_double()}});
  }
  return out;
}

ordered_json corelation_json(const CoRelationTable& table) {
  ordered_json out = ordered_json::array();
  for (const auto& r : table.rows) {
    ordered_json row;
    for (const auto& c : corelation_key_columns(table.shape)) row[std::string(c.json_key)] = key_cell(r, c.json_key);
    row["hits"] = r.hits;
    row["incomplete"] = r.incomplete;
    row["success_ratio"] = r.success_ratio().to_double();
    out.push_back(std::move(row));
  }
  return out;
}

// Built member by member: nested initializer lists deep-copy every subtree,
// which dominates the cost once rule lists reach the hundreds of thousands.
ordered_json items_json(const std::vector<Item>& items) {
  ordered_json out = ordered_json::array();
  out.get_ref<ordered_json::array_t&>().reserve(items.size());
  for (const auto& i : items) {
    ordered_json item = ordered_json::object();
    item["attribute"] = to_string(i.attribute);
    item["value"] = i.value;
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json rule_json(const RuleRow& r) {
  ordered_json row = ordered_json::object();
  row["antecedent"] = items_json(r.antecedent);
  row["consequent"] = items_json(r.consequent);
  row["support"] = r.support;
  row["antecedent_support"] = r.antecedent_support;
  row["confidence"] = r.confidence().to_double();
  return row;
}

ordered_json rules_json(std::span<const RuleRow> rules) {
  ordered_json out = ordered_json::array();
  out.get_ref<ordered_json::array_t&>().reserve(rules.size());
  for (const auto& r : rules) out.push_back(rule_json(r));
  return out;
}

// Writes `value.dump(2)` as if it were nested `depth` spaces deep.
void write_nested(std::ostream& out, const ordered_json& value, std::size_t depth) {
  const std::string text = value.dump(2);
  const std::string indent(depth, ' ');
  std::size_t start = 0;
  for (std::size_t nl = text.find('\n'); nl != std::string::npos; nl = text.find('\n', start)) {
    out.write(text.data() + start, static_cast<std::streamsize>(nl + 1 - start));
    out << indent;
    start = nl + 1;
  }
  out.write(text.data() + start, static_cast<std::streamsize>(text.size() - start));
}

ordered_json metadata_json(const ReportMetadata& m) {
  ordered_json reasons = ordered_json::object();
  for (const auto& [reason, n] : m.parse.skip_reasons) reasons[reason] = n;
  return {{"inputs", m.inputs},
          {"thresholds", {{"min_support", m.min_support}, {"min_hits", m.min_hits}, {"min_confidence", m.min_confidence}}},
          {"top_n", m.top_n ? ordered_json(*m.top_n) : ordered_json(nullptr)},
          {"sections", m.sections},
          {"tool_version", m.tool_version},
          {"generated_at", m.generated_at},
          {"parse",
           {{"total_lines", m.parse.total_lines},
            {"parsed", m.parse.parsed},
            {"skipped", m.parse.skipped},
            {"skip_reasons", reasons}}}};
}

// ---- JSON reading ------------------------------------------------------------

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("report schema: " + what); }

Attribute attribute_from(const std::string& s) {
  if (s == "ip") return Attribute::Ip;
  if (s == "url") return Attribute::Url;
  if (s == "path") return Attribute::Path;
  schema_error("unknown item attribute '" + s + "'");
}

std::vector<CountRow> counts_from(const nlohmann::json& j, const char* label_key) {
  std::vector<CountRow> out;
  for (const auto& r : j) out.push_back({r.at(label_key).get<std::string>(), r.at("count").get<std::size_t>()});
  return out;
}

std::vector<AccessRow> access_from(const nlohmann::json& j) {
  std::vector<AccessRow> out;
  for (const auto& r : j) {
    AccessRow row{r.at("key").get<std::string>(), r.at("hits").get<std::size_t>(), r.at("incomplete").get<std::size_t>()};
    if (row.hits == 0 || row.incomplete > row.hits) schema_error("access row counts out of range");
    out.push_back(std::move(row));
  }
  return out;
}

CoRelationTable corelation_from(const nlohmann::json& j, CoRelationShape shape) {
  CoRelationTable table{shape, {}};
  for (const auto& r : j) {
    CoRelationRow row;
    for (const auto& c : corelation_key_columns(shape)) {
      auto value = r.at(std::string(c.json_key)).get<std::string>();
      if (c.json_key == "ip") row.ip = value;
      if (c.json_key == "url") row.url = value;
      if (c.json_key == "path") row.path = value;
    }
    row.hits = r.at("hits").get<std::size_t>();
    row.incomplete = r.at("incomplete").get<std::size_t>();
    if (row.hits == 0 || row.incomplete > row.hits) schema_error("co-relation row counts out of range");
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<Item> items_from(const nlohmann::json& j) {
  std::vector<Item> out;
  for (const auto& i : j) out.push_back({attribute_from(i.at("attribute").get<std::string>()), i.at("value").get<std::string>()});
  return out;
}

ordered_json document_json(const ReportDocument& doc, bool with_rules) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  if (doc.general) j["general"] = general_json(*doc.general);
  if (doc.per_day) j["per_day"] = per_day_json(*doc.per_day);
  if (doc.browsers) j["browsers"] = counts_json(*doc.browsers, "family");
  if (doc.errors) j["errors"] = counts_json(*doc.errors, "label");
  if (doc.access_ip) j["access_ip"] = access_json(*doc.access_ip);
  if (doc.access_url) j["access_url"] = access_json(*doc.access_url);
  if (doc.corelations) {
    j["corelations"] = {{"ip_url", corelation_json(doc.corelations->ip_url)},
                        {"url_path", corelation_json(doc.corelations->url_path)},
                        {"ip_path", corelation_json(doc.corelations->ip_path)},
                        {"ip_url_path", corelation_json(doc.corelations->ip_url_path)}};
  }
  if (doc.rules && with_rules) j["rules"] = rules_json(*doc.rules);
  j["metadata"] = metadata_json(doc.metadata);
  return j;
}

// Appends one rule laid out exactly as dump(2) would print it four spaces
// deep. Item values go through the library's escaper once each and are
// cached, since a few hundred distinct items recur across every rule.
class RuleJsonWriter {
 public:
  void append(std::string& buf, const RuleRow& r) {
    buf += "{\n      \"antecedent\": ";
    append_items(buf, r.antecedent);
    buf += ",\n      \"consequent\": ";
    append_items(buf, r.consequent);
    buf += ",\n      \"support\": ";
    buf += std::to_string(r.support);
    buf += ",\n      \"antecedent_support\": ";
    buf += std::to_string(r.antecedent_support);
    buf += ",\n      \"confidence\": ";
    buf += ordered_json(r.confidence().to_double()).dump();
    buf += "\n    }";
  }

 private:
  void append_items(std::string& buf, const std::vector<Item>& items) {
    if (items.empty()) {
      buf += "[]";
      return;
    }
    buf += "[\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) buf += ",\n";
      buf += "        {\n          \"attribute\": \"";
      buf += to_string(items[i].attribute);
      buf += "\",\n          \"value\": ";
      buf += escaped(items[i].value);
      buf += "\n        }";
    }
    buf += "\n      ]";
  }

  const std::string& escaped(const std::string& value) {
    auto it = escaped_.find(value);
    if (it == escaped_.end()) it = escaped_.emplace(value, ordered_json(value).dump()).first;
    return it->second;
  }

  std::unordered_map<std::string, std::string> escaped_;
};

// Same bytes as to_json(doc).dump(2), but rules are written one at a time
// so a large rule list never has to exist as a single JSON tree.
void write_json(std::ostream& out, const ReportDocument& doc) {
  ordered_json head = document_json(doc, false);
  bool first = true;
  auto key = [&](const std::string& name) {
    out << (first ? "{\n  " : ",\n  ") << ordered_json(name).dump() << ": ";
    first = false;
  };
  for (const auto& [name, value] : head.items()) {
    if (name == "metadata" && doc.rules) {
      key("rules");
      if (doc.rules->empty()) {
        out << "[]";
      } else {
        RuleJsonWriter writer;
        std::string buf = "[\n    ";
        for (std::size_t i = 0; i < doc.rules->size(); ++i) {
          if (i) buf += ",\n    ";
          writer.append(buf, (*doc.rules)[i]);
          if (buf.size() > (1u << 20)) {
            out << buf;
            buf.clear();
          }
        }
        out << buf << "\n  ]";
      }
    }
    key(name);
    write_nested(out, value, 2);
  }
  out << "\n}\n";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown output format '" + std::string(name) + "' (expected text, csv or json)");
}

std::string format_ratio(const Ratio& r) { return r.to_string(8); }

std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<RuleRow> name_rules(std::span<const AssociationRule> rules, const ItemDictionary& dictionary) {
  std::vector<RuleRow> out;
  out.reserve(rules.size());
  auto names = [&](const Itemset& s) {
    std::vector<Item> items;
    for (auto id : s) items.push_back(dictionary.item(id));
    return items;
  };
  for (const auto& r : rules) out.push_back({names(r.antecedent), names(r.consequent), r.support, r.antecedent_support});
  return out;
}

std::string render_general(const GeneralStats& stats, const PerDay& per_day, std::span<const CountRow> browsers,
                           std::span<const CountRow> errors, Format format) {
  if (format == Format::Json) {
    ordered_json j{{"general", general_json(stats)},
                   {"per_day", per_day_json(per_day)},
                   {"browsers", counts_json(browsers, "family")},
                   {"errors", counts_json(errors, "label")}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  write_general(out, format, stats, per_day, browsers, errors);
  return out.str();
}

std::string render_table(std::span<const AccessRow> rows, std::string_view title, std::string_view key_label,
                         Format format) {
  if (format == Format::Json) {
    return ordered_json{{"title", title}, {"rows", access_json(rows)}}.dump(2) + "\n";
  }
  std::ostringstream out;
  write_access_table(out, format, rows, title, key_label);
  return out.str();
}

std::string render_table(const CoRelationTable& table, std::string_view title, Format format) {
  if (format == Format::Json) {
    return ordered_json{{"title", title}, {"rows", corelation_json(table)}}.dump(2) + "\n";
  }
  std::ostringstream out;
  write_corelation_table(out, format, table, title);
  return out.str();
}

std::string render_rules(std::span<const RuleRow> rules, Format format) {
  if (format == Format::Json) return rules_json(rules).dump(2) + "\n";
  std::ostringstream out;
  write_rules(out, format, rules);
  return out.str();
}

ordered_json to_json(const ReportDocument& doc) { return document_json(doc, true); }

ReportDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  if (j.at("schema_version").get<int>() != kSchemaVersion) schema_error("unsupported schema_version");
  ReportDocument doc;
  if (j.contains("general")) {
    const auto& g = j.at("general");
    GeneralStats s;
    s.total_hits = g.at("total_hits").get<std::size_t>();
    s.successful_hits = g.at("successful_hits").get<std::size_t>();
    s.incomplete_hits = g.at("incomplete_hits").get<std::size_t>();
    s.visitors = g.at("visitors").get<std::size_t>();
    s.page_views = g.at("page_views").get<std::size_t>();
    s.image_views = g.at("image_views").get<std::size_t>();
    s.file_downloads = g.at("file_downloads").get<std::size_t>();
    s.other_assets = g.at("other_assets").get<std::size_t>();
    if (s.successful_hits + s.incomplete_hits != s.total_hits) schema_error("general: successful + incomplete != total");
    if (s.page_views + s.image_views + s.file_downloads + s.other_assets != s.successful_hits)
      schema_error("general: resource classes do not sum to successful hits");
    doc.general = s;
  }
  if (j.contains("per_day")) {
    PerDay p;
    for (const auto& r : j.at("per_day").at("rows")) {
      auto date = parse_local_date(r.at("date").get<std::string>());
      if (!date) schema_error("per_day: bad date");
      DailyRow row{*date, r.at("hits").get<std::size_t>(), r.at("successful").get<std::size_t>(),
                   r.at("incomplete").get<std::size_t>()};
      if (row.successful + row.incomplete != row.hits) schema_error("per_day: successful + incomplete != hits");
      p.rows.push_back(row);
    }
    p.average_hits = j.at("per_day").at("average_hits_per_day").get<std::size_t>();
    doc.per_day = std::move(p);
  }
  if (j.contains("browsers")) doc.browsers = counts_from(j.at("browsers"), "family");
  if (j.contains("errors")) doc.errors = counts_from(j.at("errors"), "label");
  if (j.contains("access_ip")) doc.access_ip = access_from(j.at("access_ip"));
  if (j.contains("access_url")) doc.access_url = access_from(j.at("access_url"));
  if (j.contains("corelations")) {
    const auto& c = j.at("corelations");
    doc.corelations = CoRelationTables{corelation_from(c.at("ip_url"), CoRelationShape::IpUrl),
                                       corelation_from(c.at("url_path"), CoRelationShape::UrlPath),
                                       corelation_from(c.at("ip_path"), CoRelationShape::IpPath),
                                       corelation_from(c.at("ip_url_path"), CoRelationShape::IpUrlPath)};
  }
  if (j.contains("rules")) {
    std::vector<RuleRow> rules;
    for (const auto& r : j.at("rules")) {
      RuleRow row{items_from(r.at("antecedent")), items_from(r.at("consequent")), r.at("support").get<std::size_t>(),
                  r.at("antecedent_support").get<std::size_t>()};
      if (row.antecedent_support == 0 || row.support > row.antecedent_support) schema_error("rule supports out of range");
      rules.push_back(std::move(row));
    }
    doc.rules = std::move(rules);
  }

  const auto& m = j.at("metadata");
  auto& meta = doc.metadata;
  meta.inputs = m.at("inputs").get<std::vector<std::string>>();
  meta.min_support = m.at("thresholds").at("min_support").get<std::size_t>();
  meta.min_hits = m.at("thresholds").at("min_hits").get<std::size_t>();
  meta.min_confidence = m.at("thresholds").at("min_confidence").get<double>();
  if (!m.at("top_n").is_null()) meta.top_n = m.at("top_n").get<std::size_t>();
  meta.sections = m.at("sections").get<std::vector<std::string>>();
  meta.tool_version = m.at("tool_version").get<std::string>();
  meta.generated_at = m.at("generated_at").get<std::string>();
  const auto& p = m.at("parse");
  meta.parse.total_lines = p.at("total_lines").get<std::size_t>();
  meta.parse.parsed = p.at("parsed").get<std::size_t>();
  meta.parse.skipped = p.at("skipped").get<std::size_t>();
  for (const auto& [reason, n] : p.at("skip_reasons").items()) meta.parse.skip_reasons[reason] = n.get<std::size_t>();
  if (meta.parse.parsed + meta.parse.skipped != meta.parse.total_lines) schema_error("parse: parsed + skipped != total");
  return doc;
}

void write_document(std::ostream& out, const ReportDocument& doc, Format format) {
  if (format == Format::Json) {
    write_json(out, doc);
    return;
  }

  const bool csv = format == Format::Csv;
  auto gap = [&] {
    if (!csv) out << '\n';
  };

  if (doc.general && doc.per_day && doc.browsers && doc.errors) {
    write_general(out, format, *doc.general, *doc.per_day, *doc.browsers, *doc.errors);
    gap();
  }
  if (doc.access_ip) {
    write_access_table(out, format, *doc.access_ip, "POPULAR VISITS", "IPADDRESS");
    gap();
  }
  if (doc.access_url) {
    write_access_table(out, format, *doc.access_url, "POPULAR URLS", "URL");
    gap();
  }
  if (doc.corelations) {
    write_corelation_table(out, format, doc.corelations->ip_url, "POPULAR URL");
    gap();
    write_corelation_table(out, format, doc.corelations->url_path, "URL PATHS");
    gap();
    write_corelation_table(out, format, doc.corelations->ip_path, "POPULAR PATHS");
    gap();
    write_corelation_table(out, format, doc.corelations->ip_url_path, "POPULAR URL PATHS");
    gap();
  }
  if (doc.rules) {
    TableWriter(out, format).title("ASSOCIATION RULES");
    write_rules(out, format, *doc.rules);
    gap();
  }

  const auto& m = doc.metadata;
  TableWriter w(out, format);
  w.title("REPORT METADATA");
  if (csv) w.row({"key", "value"});
  std::string inputs;
  for (std::size_t i = 0; i < m.inputs.size(); ++i) inputs += (i ? " " : "") + m.inputs[i];
  std::string sections;
  for (std::size_t i = 0; i < m.sections.size(); ++i) sections += (i ? " " : "") + m.sections[i];
  std::ostringstream conf;
  conf << m.min_confidence;
  w.row({"GENERATED AT", m.generated_at});
  w.row({"TOOL VERSION", m.tool_version});
  w.row({"INPUTS", inputs});
  w.row({"SECTIONS", sections});
  w.row({"MIN SUPPORT", count_str(m.min_support)});
  w.row({"MIN HITS", count_str(m.min_hits)});
  w.row({"MIN CONFIDENCE", conf.str()});
  w.row({"TOP N", m.top_n ? count_str(*m.top_n) : std::string("-")});
  w.row({"LINES READ", count_str(m.parse.total_lines)});
  w.row({"LINES PARSED", count_str(m.parse.parsed)});
  w.row({"LINES SKIPPED", count_str(m.parse.skipped)});
  for (const auto& [reason, n] : m.parse.skip_reasons) w.row({"SKIPPED: " + reason, count_str(n)});
}

std::string render_document(const ReportDocument& doc, Format format) {
  std::ostringstream out;
  write_document(out, doc, format);
  return out.str();
}

}  // namespace weblog
