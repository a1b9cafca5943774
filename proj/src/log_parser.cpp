#include "weblog/log_parser.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <memory>

#include "weblog/errors.hpp"

namespace weblog {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                      "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Cursor over one line. Each take_* returns false without consuming
// anything meaningful when the expected field is not there.
class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_spaces() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::string_view take_token() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !is_space(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  // Text between '[' and ']'.
  bool take_bracketed(std::string_view& out) {
    skip_spaces();
    if (peek() != '[') return false;
    auto close = s_.find(']', pos_ + 1);
    if (close == std::string_view::npos) return false;
    out = s_.substr(pos_ + 1, close - pos_ - 1);
    pos_ = close + 1;
    return true;
  }

  // Raw text between double quotes; backslash escapes are kept verbatim.
  bool take_quoted(std::string_view& out) {
    skip_spaces();
    if (peek() != '"') return false;
    std::size_t i = pos_ + 1;
    while (i < s_.size() && s_[i] != '"') {
      if (s_[i] == '\\' && i + 1 < s_.size()) ++i;
      ++i;
    }
    if (i >= s_.size()) return false;
    out = s_.substr(pos_ + 1, i - pos_ - 1);
    pos_ = i + 1;
    return true;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <typename T>
bool to_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::optional<std::string> dash_to_absent(std::string_view s) {
  if (s.empty() || s == "-") return std::nullopt;
  return std::string(s);
}

// dd/Mon/yyyy:HH:MM:SS +zzzz
std::optional<Timestamp> parse_clf_date(std::string_view s) {
  using namespace std::chrono;
  if (s.size() != 26 || s[2] != '/' || s[6] != '/' || s[11] != ':' || s[14] != ':' || s[17] != ':' || s[20] != ' ')
    return std::nullopt;
  unsigned d = 0, hh = 0, mm = 0, ss = 0, zh = 0, zm = 0;
  int y = 0;
  if (!to_number(s.substr(0, 2), d) || !to_number(s.substr(7, 4), y) || !to_number(s.substr(12, 2), hh) ||
      !to_number(s.substr(15, 2), mm) || !to_number(s.substr(18, 2), ss) || !to_number(s.substr(22, 2), zh) ||
      !to_number(s.substr(24, 2), zm))
    return std::nullopt;
  auto mon = std::find(kMonths.begin(), kMonths.end(), s.substr(3, 3));
  if (mon == kMonths.end()) return std::nullopt;
  char sign = s[21];
  if (sign != '+' && sign != '-') return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 59 || zh > 23 || zm > 59) return std::nullopt;

  year_month_day ymd{year{y}, month{static_cast<unsigned>(mon - kMonths.begin()) + 1}, day{d}};
  if (!ymd.ok()) return std::nullopt;

  minutes offset{static_cast<int>(zh * 60 + zm)};
  if (sign == '-') offset = -offset;
  auto local = sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss};
  return Timestamp{local - offset, offset};
}

bool valid_url(std::string_view url) {
  return url == "*" || url.starts_with('/') || url.find("://") != std::string_view::npos;
}

bool valid_method(std::string_view m) {
  return !m.empty() && std::all_of(m.begin(), m.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '-' || c == '_';
  });
}

ParseError fail(std::string reason, std::size_t line_number) { return ParseError{std::move(reason), line_number}; }

}  // namespace

ParseResult parse_line(std::string_view line, std::size_t line_number) {
  Scanner sc(line);
  LogRecord r;
  r.line_number = line_number;

  auto host = sc.take_token();
  if (host.empty()) return fail("blank", line_number);
  r.ip = std::string(host);
  auto ident = sc.take_token();
  auto user = sc.take_token();
  if (ident.empty() || user.empty()) return fail("missing field", line_number);
  r.identity = dash_to_absent(ident);
  r.authuser = dash_to_absent(user);

  std::string_view date;
  if (!sc.take_bracketed(date)) return fail("missing bracket", line_number);
  auto ts = parse_clf_date(date);
  if (!ts) return fail("bad date", line_number);
  r.timestamp = *ts;

  std::string_view request;
  if (!sc.take_quoted(request)) return fail("missing quote", line_number);
  {
    Scanner rq(request);
    auto method = rq.take_token();
    auto url = rq.take_token();
    auto protocol = rq.take_token();
    rq.skip_spaces();
    if (!valid_method(method) || url.empty() || !valid_url(url) || !rq.at_end()) return fail("bad request", line_number);
    r.method = std::string(method);
    r.url = std::string(url);
    if (!protocol.empty()) r.protocol = std::string(protocol);
  }

  auto status = sc.take_token();
  if (status.size() != 3 || !to_number(status, r.status) || r.status < 100 || r.status > 599)
    return fail("bad status", line_number);

  auto bytes = sc.take_token();
  if (bytes.empty()) return fail("missing field", line_number);
  if (bytes != "-") {
    std::uint64_t n = 0;
    if (!to_number(bytes, n)) return fail("bad bytes", line_number);
    r.bytes = n;
  }

  sc.skip_spaces();
  if (sc.at_end()) return r;

  std::string_view referrer;
  std::string_view agent;
  if (!sc.take_quoted(referrer) || !sc.take_quoted(agent)) return fail("missing quote", line_number);
  // Combined lines may carry extra custom fields after the user agent; they are ignored.
  r.referrer = dash_to_absent(referrer);
  r.user_agent = dash_to_absent(agent);
  r.format = LogFormat::Combined;
  return r;
}

void ParseStats::merge(const ParseStats& other) {
  total_lines += other.total_lines;
  parsed += other.parsed;
  skipped += other.skipped;
  for (const auto& [reason, n] : other.skip_reasons) skip_reasons[reason] += n;
}

void LogParser::feed(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto& stats = log_.stats;
  const std::size_t line_number = ++stats.total_lines;
  if (std::all_of(line.begin(), line.end(), is_space)) {
    ++stats.skipped;
    ++stats.skip_reasons["blank"];
    return;
  }
  auto result = parse_line(line, line_number);
  if (auto* rec = std::get_if<LogRecord>(&result)) {
    ++stats.parsed;
    log_.records.push_back(std::move(*rec));
  } else {
    ++stats.skipped;
    ++stats.skip_reasons[std::get<ParseError>(result).reason];
  }
}

ParsedLog parse_log(std::istream& in) {
  LogParser parser;
  std::string line;
  while (std::getline(in, line)) parser.feed(line);
  if (in.bad()) throw IoError("read error on log stream");
  return std::move(parser).result();
}

namespace {

struct GzCloser {
  void operator()(gzFile f) const { gzclose(f); }
};
using GzHandle = std::unique_ptr<std::remove_pointer_t<gzFile>, GzCloser>;

void parse_file_into(const std::filesystem::path& path, LogParser& parser) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw IoError("cannot open input file: " + path.string());
  GzHandle file{gzopen(path.c_str(), "rb")};
  if (!file) throw IoError("cannot open input file: " + path.string());
  gzbuffer(file.get(), 1 << 17);

  std::string line;
  std::array<char, 8192> buf{};
  bool pending = false;
  while (gzgets(file.get(), buf.data(), static_cast<int>(buf.size())) != nullptr) {
    std::string_view chunk(buf.data());
    pending = true;
    if (!chunk.empty() && chunk.back() == '\n') {
      chunk.remove_suffix(1);
      line.append(chunk);
      parser.feed(line);
      line.clear();
      pending = false;
    } else {
      line.append(chunk);
    }
  }
  int err = Z_OK;
  const char* msg = gzerror(file.get(), &err);
  if (err != Z_OK && err != Z_STREAM_END) throw IoError("error reading " + path.string() + ": " + msg);
  if (pending && !line.empty()) parser.feed(line);
}

}  // namespace

ParsedLog parse_files(std::span<const std::filesystem::path> paths) {
  LogParser parser;
  for (const auto& p : paths) parse_file_into(p, parser);
  return std::move(parser).result();
}

std::string extract_path(std::string_view url) {
  auto end = url.find_first_of("?#");
  auto target = url.substr(0, end);
  auto slash = target.rfind('/');
  if (slash == std::string_view::npos) return "/";
  return std::string(target.substr(0, slash + 1));
}

}  // namespace weblog
