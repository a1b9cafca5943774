#include "weblog/log_record.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>

namespace weblog {

namespace {

constexpr std::array<const char*, 12> kMonths = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                 "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::string format_date(const std::chrono::year_month_day& ymd) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02u/%s/%04d", static_cast<unsigned>(ymd.day()),
                kMonths[static_cast<unsigned>(ymd.month()) - 1], static_cast<int>(ymd.year()));
  return buf;
}

}  // namespace

std::string LocalDate::to_string() const { return format_date(ymd); }

LocalDate Timestamp::local_date() const {
  auto local = utc + offset;
  return LocalDate{std::chrono::year_month_day{std::chrono::floor<std::chrono::days>(local)}};
}

std::string Timestamp::to_clf() const {
  using namespace std::chrono;
  auto local = utc + offset;
  auto day = floor<days>(local);
  hh_mm_ss hms{local - day};
  auto off = offset.count();
  char sign = off < 0 ? '-' : '+';
  off = std::abs(off);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s:%02d:%02d:%02d %c%02d%02d", format_date(year_month_day{day}).c_str(),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()), sign, static_cast<int>(off / 60), static_cast<int>(off % 60));
  return buf;
}

std::optional<LocalDate> parse_local_date(std::string_view text) {
  if (text.size() != 11 || text[2] != '/' || text[6] != '/') return std::nullopt;
  auto digits = [](std::string_view s, int& out) {
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
    }
    return true;
  };
  int d = 0, y = 0;
  if (!digits(text.substr(0, 2), d) || !digits(text.substr(7, 4), y)) return std::nullopt;
  for (unsigned m = 0; m < kMonths.size(); ++m) {
    if (text.substr(3, 3) == kMonths[m]) {
      std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m + 1},
                                      std::chrono::day{static_cast<unsigned>(d)}};
      if (!ymd.ok()) return std::nullopt;
      return LocalDate{ymd};
    }
  }
  return std::nullopt;
}

std::string serialize(const LogRecord& r) {
  auto or_dash = [](const std::optional<std::string>& s) -> const std::string& {
    static const std::string dash = "-";
    return s ? *s : dash;
  };
  std::string out;
  out.reserve(128);
  out += r.ip;
  out += ' ';
  out += or_dash(r.identity);
  out += ' ';
  out += or_dash(r.authuser);
  out += " [";
  out += r.timestamp.to_clf();
  out += "] \"";
  out += r.method;
  out += ' ';
  out += r.url;
  if (r.protocol) {
    out += ' ';
    out += *r.protocol;
  }
  out += "\" ";
  out += std::to_string(r.status);
  out += ' ';
  out += r.bytes ? std::to_string(*r.bytes) : "-";
  if (r.format == LogFormat::Combined) {
    out += " \"";
    out += or_dash(r.referrer);
    out += "\" \"";
    out += or_dash(r.user_agent);
    out += '"';
  }
  return out;
}

}  // namespace weblog
