#include "weblog/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "weblog/errors.hpp"
#include "weblog/version.hpp"

namespace weblog {

namespace {

std::set<Section> parse_sections(const std::vector<std::string>& names) {
  std::set<Section> out;
  for (const auto& raw : names) {
    std::stringstream ss(raw);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        out.insert({Section::General, Section::Access, Section::CoRelations, Section::Rules});
      } else if (name == "general") {
        out.insert(Section::General);
      } else if (name == "access") {
        out.insert(Section::Access);
      } else if (name == "corelations") {
        out.insert(Section::CoRelations);
      } else if (name == "rules") {
        out.insert(Section::Rules);
      } else {
        throw UsageError("--sections: unknown section '" + name + "' (expected general, access, corelations, rules, all)");
      }
    }
  }
  if (out.empty()) throw UsageError("--sections: no section given");
  return out;
}

void reject_overlap(const std::set<std::string>& a, const char* a_flag, const std::set<std::string>& b,
                    const char* b_flag) {
  for (const auto& ext : a) {
    if (b.count(ext)) {
      throw UsageError(std::string(a_flag) + " and " + b_flag + " both list extension '" + ext + "'");
    }
  }
}

std::string now_utc() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    std::time_t t = std::strtoll(epoch, nullptr, 10);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
  }
  auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

template <typename T>
void cap(std::vector<T>& rows, const std::optional<std::size_t>& top_n) {
  if (top_n && rows.size() > *top_n) rows.resize(*top_n);
}

}  // namespace

std::string_view to_string(Section section) {
  switch (section) {
    case Section::General:
      return "general";
    case Section::Access:
      return "access";
    case Section::CoRelations:
      return "corelations";
    case Section::Rules:
      return "rules";
  }
  return "general";
}

ArgsResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Web access-log analyzer: general/access statistics, co-relations and association rules",
               "weblog"};
  app.set_version_flag("--version", kToolVersion);

  RunConfig config;
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string output;
  std::vector<std::string> sections;
  std::string page_ext, image_ext, download_ext, timestamp;
  std::size_t top_n = 0;

  app.add_option("-i,--input", inputs, "Access log file(s), plain or gzip; concatenated in order")->required();
  app.add_option("-f,--format", format, "Output format: text, csv or json")->capture_default_str();
  app.add_option("-o,--output", output, "Write the report here instead of standard output");
  app.add_option("--min-support", config.min_support, "Classic Apriori minimum support (transactions)")
      ->capture_default_str();
  app.add_option("--min-hits", config.min_hits, "Co-relation minimum hits")->capture_default_str();
  app.add_option("--min-confidence", config.min_confidence, "Minimum rule confidence in (0, 1]")->capture_default_str();
  app.add_option("--sections", sections, "Comma-separated: general, access, corelations, rules, all")->delimiter(',');
  auto* page = app.add_option("--page-ext", page_ext, "Comma-separated page extensions");
  auto* image = app.add_option("--image-ext", image_ext, "Comma-separated image extensions");
  auto* download = app.add_option("--download-ext", download_ext, "Comma-separated download extensions");
  auto* top = app.add_option("--top-n", top_n, "Keep at most this many rows per table");
  app.add_option("--timestamp", timestamp, "Fixed report timestamp (for reproducible output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return CliExit{kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return CliExit{kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    return CliExit{kExitOk, std::string(kToolVersion) + "\n"};
  } catch (const CLI::ParseError& e) {
    return CliExit{kExitUsage, std::string("error: ") + e.what() + "\nRun with --help for usage.\n"};
  }

  try {
    for (const auto& in : inputs) config.inputs.emplace_back(in);
    config.format = parse_format(format);
    if (!output.empty()) config.output = output;
    if (config.min_support < 1) throw UsageError("--min-support must be at least 1");
    if (config.min_hits < 1) throw UsageError("--min-hits must be at least 1");
    if (!(config.min_confidence > 0.0 && config.min_confidence <= 1.0))
      throw UsageError("--min-confidence must lie in (0, 1]");
    if (!sections.empty()) config.sections = parse_sections(sections);
    if (page->count()) config.classifier.page_extensions = parse_extension_list(page_ext);
    if (image->count()) config.classifier.image_extensions = parse_extension_list(image_ext);
    if (download->count()) config.classifier.download_extensions = parse_extension_list(download_ext);
    reject_overlap(config.classifier.page_extensions, "--page-ext", config.classifier.image_extensions, "--image-ext");
    reject_overlap(config.classifier.page_extensions, "--page-ext", config.classifier.download_extensions,
                   "--download-ext");
    reject_overlap(config.classifier.image_extensions, "--image-ext", config.classifier.download_extensions,
                   "--download-ext");
    if (top->count()) {
      if (top_n < 1) throw UsageError("--top-n must be at least 1");
      config.top_n = top_n;
    }
    if (!timestamp.empty()) config.timestamp = timestamp;
  } catch (const UsageError& e) {
    return CliExit{kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
  return config;
}

ArgsResult parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_args(args);
}

ReportDocument build_report(const ParsedLog& log, const RunConfig& config) {
  const auto& records = log.records;
  ReportDocument doc;

  if (config.sections.count(Section::General)) {
    doc.general = general_stats(records, config.classifier);
    doc.per_day = per_day(records);
    doc.browsers = browser_stats(records);
    doc.errors = error_report(records);
    cap(doc.per_day->rows, config.top_n);
    cap(*doc.browsers, config.top_n);
    cap(*doc.errors, config.top_n);
  }
  if (config.sections.count(Section::Access)) {
    doc.access_ip = access_stats(records, AccessKey::Ip);
    doc.access_url = access_stats(records, AccessKey::Url);
    cap(*doc.access_ip, config.top_n);
    cap(*doc.access_url, config.top_n);
  }
  if (config.sections.count(Section::CoRelations)) {
    auto co = custom_apriori(records, config.min_hits);
    doc.corelations = CoRelationTables{std::move(co.ip_url), std::move(co.url_path), std::move(co.ip_path),
                                       std::move(co.ip_url_path)};
    cap(doc.corelations->ip_url.rows, config.top_n);
    cap(doc.corelations->url_path.rows, config.top_n);
    cap(doc.corelations->ip_path.rows, config.top_n);
    cap(doc.corelations->ip_url_path.rows, config.top_n);
  }
  if (config.sections.count(Section::Rules)) {
    auto db = build_transactions(records);
    auto frequent = apriori(db.transactions, config.min_support);
    auto rules = generate_rules(frequent, config.min_confidence);
    doc.rules = name_rules(rules, db.dictionary);
    cap(*doc.rules, config.top_n);
  }

  auto& m = doc.metadata;
  for (const auto& in : config.inputs) m.inputs.push_back(in.string());
  m.min_support = config.min_support;
  m.min_hits = config.min_hits;
  m.min_confidence = config.min_confidence;
  m.top_n = config.top_n;
  for (auto s : config.sections) m.sections.emplace_back(to_string(s));
  m.tool_version = kToolVersion;
  m.generated_at = config.timestamp ? *config.timestamp : now_utc();
  m.parse = log.stats;
  return doc;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.inputs.empty()) throw UsageError("no input files");
    config.classifier.validate();
    auto log = parse_files(config.inputs);
    auto doc = build_report(log, config);
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open output file: " + config.output->string());
      write_document(file, doc, config.format);
      file.flush();
      if (!file) throw IoError("error writing output file: " + config.output->string());
    } else {
      write_document(out, doc, config.format);
      out.flush();
    }
    if (log.stats.skipped > 0) err << "weblog: skipped " << log.stats.skipped << " of " << log.stats.total_lines << " lines\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "weblog: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "weblog: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "weblog: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "weblog: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace weblog
