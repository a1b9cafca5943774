#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace weblog {

enum class Outcome { Successful, Incomplete };

enum class RequestClass { PageView, ImageView, FileDownload, OtherAsset };

// Lowercase extensions without the dot. Urls ending in "/" are always pages.
struct ClassifierConfig {
  std::set<std::string> page_extensions{"html", "htm", "php", "asp", "jsp"};
  std::set<std::string> image_extensions{"gif", "jpg", "jpeg", "png", "bmp", "ico"};
  std::set<std::string> download_extensions{"pdf", "zip", "doc", "ppt", "xls", "rar", "exe"};

  // Throws DomainError naming the shared extension if two sets overlap.
  void validate() const;

  friend bool operator==(const ClassifierConfig&, const ClassifierConfig&) = default;
};

// Successful iff 2xx. Throws DomainError outside 100..599.
Outcome classify_status(int status);

// Upper-case reason phrase; 404 reads "REQUEST NOT FOUND", unknown codes "STATUS <n>".
std::string status_label(int status);

RequestClass classify_resource(std::string_view url, const ClassifierConfig& config);

// First user-agent token with its version ("Mozilla/4.0"); "unknown" when absent.
std::string browser_family(const std::optional<std::string>& user_agent);

std::string_view to_string(Outcome outcome);
std::string_view to_string(RequestClass cls);

// Parses a comma-separated extension list ("gif, .PNG,jpg") into lowercase tokens.
std::set<std::string> parse_extension_list(std::string_view csv);

}  // namespace weblog
