#include "weblog/log_parser.hpp"

#include <gtest/gtest.h>
#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "synthetic_log.hpp"
#include "weblog/errors.hpp"

namespace weblog {
namespace {

LogRecord parse_ok(std::string_view line, std::size_t n = 1) {
  auto result = parse_line(line, n);
  EXPECT_TRUE(std::holds_alternative<LogRecord>(result))
      << line << " -> " << (std::holds_alternative<ParseError>(result) ? std::get<ParseError>(result).reason : "");
  return std::get<LogRecord>(result);
}

std::string parse_fail(std::string_view line) {
  auto result = parse_line(line, 1);
  EXPECT_TRUE(std::holds_alternative<ParseError>(result)) << line;
  return std::holds_alternative<ParseError>(result) ? std::get<ParseError>(result).reason : "";
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("weblog_parser_test_" + name);
}

TEST(ParseLineTest, CommonLogFormat) {
  auto r = parse_ok("1.2.3.4 - - [27/Nov/2008:10:00:00 +0530] \"GET /index.html HTTP/1.1\" 200 512");
  EXPECT_EQ(r.ip, "1.2.3.4");
  EXPECT_FALSE(r.identity);
  EXPECT_FALSE(r.authuser);
  EXPECT_EQ(r.method, "GET");
  EXPECT_EQ(r.url, "/index.html");
  EXPECT_EQ(r.protocol, "HTTP/1.1");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.bytes, 512u);
  EXPECT_EQ(r.format, LogFormat::Common);
  EXPECT_EQ(r.line_number, 1u);
}

TEST(ParseLineTest, DashBytesIsAbsent) {
  auto r = parse_ok("1.2.3.4 - - [27/Nov/2008:10:00:01 +0530] \"GET /x HTTP/1.0\" 404 -");
  EXPECT_EQ(r.status, 404);
  EXPECT_FALSE(r.bytes.has_value());
}

TEST(ParseLineTest, GarbageIsMalformed) { EXPECT_FALSE(parse_fail("garbage line").empty()); }

TEST(ParseLineTest, TimestampNormalizedToUtcKeepingLocalDate) {
  using namespace std::chrono;
  auto r = parse_ok("1.2.3.4 - - [28/Nov/2008:02:00:00 +0530] \"GET / HTTP/1.1\" 200 1");
  // 02:00 local at +05:30 is 20:30 UTC the previous day.
  EXPECT_EQ(r.timestamp.utc, sys_days{year{2008} / November / 27} + hours{20} + minutes{30});
  EXPECT_EQ(r.timestamp.offset, minutes{330});
  EXPECT_EQ(r.timestamp.local_date().to_string(), "28/Nov/2008");
  EXPECT_EQ(r.timestamp.to_clf(), "28/Nov/2008:02:00:00 +0530");

  auto west = parse_ok("1.2.3.4 - - [01/Jan/2009:23:59:59 -0800] \"GET / HTTP/1.1\" 200 1");
  EXPECT_EQ(west.timestamp.local_date().to_string(), "01/Jan/2009");
  EXPECT_EQ(west.timestamp.to_clf(), "01/Jan/2009:23:59:59 -0800");
}

TEST(ParseLineTest, CombinedTrailer) {
  auto r = parse_ok(
      "10.0.0.1 - frank [27/Nov/2008:10:00:00 +0000] \"GET /a.gif?x=1 HTTP/1.1\" 200 7 "
      "\"http://ref.example/\" \"Mozilla/4.0 (compatible; MSIE 6.0)\"");
  EXPECT_EQ(r.authuser, "frank");
  EXPECT_EQ(r.url, "/a.gif?x=1");
  EXPECT_EQ(r.referrer, "http://ref.example/");
  EXPECT_EQ(r.user_agent, "Mozilla/4.0 (compatible; MSIE 6.0)");
  EXPECT_EQ(r.format, LogFormat::Combined);

  auto dashes = parse_ok("10.0.0.1 - - [27/Nov/2008:10:00:00 +0000] \"GET / HTTP/1.1\" 200 7 \"-\" \"-\"");
  EXPECT_FALSE(dashes.referrer);
  EXPECT_FALSE(dashes.user_agent);
  EXPECT_EQ(dashes.format, LogFormat::Combined);
}

TEST(ParseLineTest, EscapedQuotesInsideFields) {
  auto r = parse_ok(
      "10.0.0.1 - - [27/Nov/2008:10:00:00 +0000] \"GET / HTTP/1.1\" 200 7 \"-\" \"Agent/1.0 (say \\\"hi\\\")\"");
  EXPECT_EQ(r.user_agent, "Agent/1.0 (say \\\"hi\\\")");
}

TEST(ParseLineTest, RequestTargets) {
  EXPECT_EQ(parse_ok("h - - [27/Nov/2008:10:00:00 +0000] \"OPTIONS * HTTP/1.1\" 200 0").url, "*");
  EXPECT_EQ(parse_ok("h - - [27/Nov/2008:10:00:00 +0000] \"GET http://x.org/p HTTP/1.1\" 200 0").url,
            "http://x.org/p");
  auto old = parse_ok("h - - [27/Nov/2008:10:00:00 +0000] \"GET /old\" 200 0");
  EXPECT_FALSE(old.protocol);
  EXPECT_EQ(parse_fail("h - - [27/Nov/2008:10:00:00 +0000] \"-\" 408 -"), "bad request");
}

TEST(ParseLineTest, ReasonLabels) {
  EXPECT_EQ(parse_fail("1.2.3.4 - - 27/Nov/2008 \"GET / HTTP/1.1\" 200 1"), "missing bracket");
  EXPECT_EQ(parse_fail("1.2.3.4 - - [31/Nov/2008:10:00:00 +0000] \"GET / HTTP/1.1\" 200 1"), "bad date");
  EXPECT_EQ(parse_fail("1.2.3.4 - - [27/Nov/2008:10:00:00 +0000] GET / 200 1"), "missing quote");
  EXPECT_EQ(parse_fail("1.2.3.4 - - [27/Nov/2008:10:00:00 +0000] \"GET / HTTP/1.1\" OK 1"), "bad status");
  EXPECT_EQ(parse_fail("1.2.3.4 - - [27/Nov/2008:10:00:00 +0000] \"GET / HTTP/1.1\" 700 1"), "bad status");
  EXPECT_EQ(parse_fail("1.2.3.4 - - [27/Nov/2008:10:00:00 +0000] \"GET / HTTP/1.1\" 200 1k"), "bad bytes");
}

TEST(ParseLineTest, EveryMalformedFixtureLineIsRejected) {
  auto lines = testing::malformed_lines();
  ASSERT_EQ(lines.size(), 50u);
  for (const auto& line : lines) parse_fail(line);
}

TEST(ParseLogTest, EmptyStream) {
  std::istringstream in("");
  auto log = parse_log(in);
  EXPECT_TRUE(log.records.empty());
  EXPECT_EQ(log.stats, ParseStats{});
}

TEST(ParseLogTest, CountsSkippedLines) {
  std::istringstream in(
      "1.2.3.4 - - [27/Nov/2008:10:00:00 +0530] \"GET /index.html HTTP/1.1\" 200 512\n"
      "garbage line\n"
      "1.2.3.4 - - [27/Nov/2008:10:00:01 +0530] \"GET /x HTTP/1.0\" 404 -\n");
  auto log = parse_log(in);
  ASSERT_EQ(log.records.size(), 2u);
  EXPECT_EQ(log.stats.total_lines, 3u);
  EXPECT_EQ(log.stats.parsed, 2u);
  EXPECT_EQ(log.stats.skipped, 1u);
  EXPECT_EQ(log.records[1].line_number, 3u);
}

TEST(ParseLogTest, BlankLinesAndCrlf) {
  std::istringstream in("\n   \r\n1.2.3.4 - - [27/Nov/2008:10:00:00 +0530] \"GET / HTTP/1.1\" 200 1\r\n");
  auto log = parse_log(in);
  EXPECT_EQ(log.stats.total_lines, 3u);
  EXPECT_EQ(log.stats.skipped, 2u);
  EXPECT_EQ(log.stats.skip_reasons.at("blank"), 2u);
  ASSERT_EQ(log.records.size(), 1u);
  EXPECT_EQ(log.records[0].bytes, 1u);
}

TEST(ParseLogTest, GeneratedLinesRoundTripFieldByField) {
  testing::LogShape shape;
  shape.lines = 10000;
  shape.seed = 99;
  auto expected = testing::random_records(shape);
  std::istringstream in(testing::to_log_text(expected));
  auto log = parse_log(in);
  EXPECT_EQ(log.stats.skipped, 0u);
  ASSERT_EQ(log.records.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    ASSERT_EQ(log.records[i], expected[i]) << serialize(expected[i]);
  }
}

TEST(ParseLogTest, InvariantsOnMixedInput) {
  std::mt19937_64 rng(5);
  testing::LogShape shape;
  shape.lines = 300;
  auto good = testing::random_records(shape);
  auto bad = testing::malformed_lines();
  std::string text;
  std::size_t expected_skips = 0;
  for (const auto& r : good) {
    text += serialize(r) + "\n";
    if (rng() % 4 == 0) {
      text += bad[rng() % bad.size()] + "\n";
      ++expected_skips;
    }
  }
  std::istringstream in(text);
  auto log = parse_log(in);
  EXPECT_EQ(log.stats.parsed + log.stats.skipped, log.stats.total_lines);
  EXPECT_EQ(log.stats.skipped, expected_skips);
  for (std::size_t i = 1; i < log.records.size(); ++i) {
    EXPECT_LT(log.records[i - 1].line_number, log.records[i].line_number);
  }
}

TEST(ParseFilesTest, PlainAndGzipConcatenate) {
  const auto plain = temp_file("plain.log");
  const auto gz = temp_file("day2.log.gz");
  {
    std::ofstream f(plain);
    f << "1.2.3.4 - - [27/Nov/2008:10:00:00 +0530] \"GET /a HTTP/1.1\" 200 1\n";
    f << "bad\n";
  }
  {
    gzFile f = gzopen(gz.c_str(), "wb");
    ASSERT_NE(f, nullptr);
    gzputs(f, "5.6.7.8 - - [28/Nov/2008:10:00:00 +0530] \"GET /b HTTP/1.1\" 404 -\n");
    gzputs(f, "5.6.7.8 - - [28/Nov/2008:10:00:01 +0530] \"GET /c HTTP/1.1\" 200 3");  // no final newline
    gzclose(f);
  }
  std::vector<std::filesystem::path> paths{plain, gz};
  auto log = parse_files(paths);
  ASSERT_EQ(log.records.size(), 3u);
  EXPECT_EQ(log.records[1].url, "/b");
  EXPECT_EQ(log.records[2].url, "/c");
  EXPECT_EQ(log.records[2].line_number, 4u);
  EXPECT_EQ(log.stats.skipped, 1u);
  std::filesystem::remove(plain);
  std::filesystem::remove(gz);
}

TEST(ParseFilesTest, MissingFileIsIoErrorNamingPath) {
  std::vector<std::filesystem::path> paths{"/nonexistent/dir/access.log"};
  try {
    parse_files(paths);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/access.log"), std::string::npos);
  }
}

TEST(ExtractPathTest, Examples) {
  EXPECT_EQ(extract_path("/atten_files/arrow.gif"), "/atten_files/");
  EXPECT_EQ(extract_path("/"), "/");
  EXPECT_EQ(extract_path("/combined.pdf?v=2"), "/");
  EXPECT_EQ(extract_path("/a/b/?q=/x/y"), "/a/b/");
  EXPECT_EQ(extract_path("*"), "/");
}

TEST(ExtractPathTest, MatchesCharacterScanAndIsPrefix) {
  std::mt19937_64 rng(11);
  const std::string alphabet = "/ab.?#=";
  for (int i = 0; i < 5000; ++i) {
    std::string url = "/";
    std::size_t len = rng() % 12;
    for (std::size_t k = 0; k < len; ++k) url += alphabet[rng() % alphabet.size()];
    auto path = extract_path(url);
    EXPECT_EQ(path, testing::brute_force_path(url)) << url;
    EXPECT_TRUE(path.ends_with('/'));
    EXPECT_TRUE(url.starts_with(path)) << url;
  }
}

}  // namespace
}  // namespace weblog
