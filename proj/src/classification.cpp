#include "weblog/classification.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "weblog/errors.hpp"

namespace weblog {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_disjoint(const std::set<std::string>& a, std::string_view a_name, const std::set<std::string>& b,
                    std::string_view b_name) {
  for (const auto& ext : a) {
    if (b.count(ext)) {
      throw DomainError("extension '" + ext + "' listed as both " + std::string(a_name) + " and " + std::string(b_name));
    }
  }
}

const std::map<int, std::string_view>& reason_phrases() {
  static const std::map<int, std::string_view> phrases = {
      {100, "CONTINUE"},
      {101, "SWITCHING PROTOCOLS"},
      {200, "OK"},
      {201, "CREATED"},
      {202, "ACCEPTED"},
      {203, "NON-AUTHORITATIVE INFORMATION"},
      {204, "NO CONTENT"},
      {205, "RESET CONTENT"},
      {206, "PARTIAL CONTENT"},
      {300, "MULTIPLE CHOICES"},
      {301, "MOVED PERMANENTLY"},
      {302, "FOUND"},
      {303, "SEE OTHER"},
      {304, "NOT MODIFIED"},
      {305, "USE PROXY"},
      {307, "TEMPORARY REDIRECT"},
      {308, "PERMANENT REDIRECT"},
      {400, "BAD REQUEST"},
      {401, "UNAUTHORIZED"},
      {402, "PAYMENT REQUIRED"},
      {403, "FORBIDDEN"},
      {404, "REQUEST NOT FOUND"},
      {405, "METHOD NOT ALLOWED"},
      {406, "NOT ACCEPTABLE"},
      {407, "PROXY AUTHENTICATION REQUIRED"},
      {408, "REQUEST TIMEOUT"},
      {409, "CONFLICT"},
      {410, "GONE"},
      {411, "LENGTH REQUIRED"},
      {412, "PRECONDITION FAILED"},
      {413, "PAYLOAD TOO LARGE"},
      {414, "URI TOO LONG"},
      {415, "UNSUPPORTED MEDIA TYPE"},
      {416, "RANGE NOT SATISFIABLE"},
      {417, "EXPECTATION FAILED"},
      {429, "TOO MANY REQUESTS"},
      {500, "INTERNAL SERVER ERROR"},
      {501, "NOT IMPLEMENTED"},
      {502, "BAD GATEWAY"},
      {503, "SERVICE UNAVAILABLE"},
      {504, "GATEWAY TIMEOUT"},
      {505, "HTTP VERSION NOT SUPPORTED"},
  };
  return phrases;
}

}  // namespace

void ClassifierConfig::validate() const {
  check_disjoint(page_extensions, "page", image_extensions, "image");
  check_disjoint(page_extensions, "page", download_extensions, "download");
  check_disjoint(image_extensions, "image", download_extensions, "download");
}

Outcome classify_status(int status) {
  if (status < 100 || status > 599) throw DomainError("status code out of range: " + std::to_string(status));
  return status >= 200 && status <= 299 ? Outcome::Successful : Outcome::Incomplete;
}

std::string status_label(int status) {
  const auto& phrases = reason_phrases();
  if (auto it = phrases.find(status); it != phrases.end()) return std::string(it->second);
  return "STATUS " + std::to_string(status);
}

RequestClass classify_resource(std::string_view url, const ClassifierConfig& config) {
  auto target = url.substr(0, url.find_first_of("?#"));
  if (target.ends_with('/')) return RequestClass::PageView;
  auto segment = target.substr(target.rfind('/') == std::string_view::npos ? 0 : target.rfind('/') + 1);
  auto dot = segment.rfind('.');
  if (dot == std::string_view::npos) return RequestClass::OtherAsset;
  auto ext = lowercase(segment.substr(dot + 1));
  if (config.page_extensions.count(ext)) return RequestClass::PageView;
  if (config.image_extensions.count(ext)) return RequestClass::ImageView;
  if (config.download_extensions.count(ext)) return RequestClass::FileDownload;
  return RequestClass::OtherAsset;
}

std::string browser_family(const std::optional<std::string>& user_agent) {
  if (!user_agent) return "unknown";
  const auto& ua = *user_agent;
  auto begin = ua.find_first_not_of(" \t");
  if (begin == std::string::npos) return "unknown";
  auto end = ua.find_first_of(" \t", begin);
  return ua.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
}

std::string_view to_string(Outcome outcome) {
  return outcome == Outcome::Successful ? "successful" : "incomplete";
}

std::string_view to_string(RequestClass cls) {
  switch (cls) {
    case RequestClass::PageView:
      return "page";
    case RequestClass::ImageView:
      return "image";
    case RequestClass::FileDownload:
      return "download";
    case RequestClass::OtherAsset:
      return "other";
  }
  return "other";
}

std::set<std::string> parse_extension_list(std::string_view csv) {
  std::set<std::string> out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    auto tok = csv.substr(0, comma);
    csv = comma == std::string_view::npos ? std::string_view{} : csv.substr(comma + 1);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '.')) tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.insert(lowercase(tok));
  }
  return out;
}

}  // namespace weblog
