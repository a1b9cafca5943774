#include "weblog/classification.hpp"

#include <gtest/gtest.h>

#include "synthetic_log.hpp"
#include "weblog/errors.hpp"
#include "weblog/statistics.hpp"

namespace weblog {
namespace {

TEST(ClassifyStatusTest, TwoHundredsAreSuccessful) {
  EXPECT_EQ(classify_status(200), Outcome::Successful);
  EXPECT_EQ(classify_status(206), Outcome::Successful);
  EXPECT_EQ(classify_status(299), Outcome::Successful);
  EXPECT_EQ(classify_status(404), Outcome::Incomplete);
  EXPECT_EQ(classify_status(304), Outcome::Incomplete);
  EXPECT_EQ(classify_status(100), Outcome::Incomplete);
  EXPECT_EQ(classify_status(599), Outcome::Incomplete);
}

TEST(ClassifyStatusTest, OutOfRangeThrows) {
  EXPECT_THROW(classify_status(99), DomainError);
  EXPECT_THROW(classify_status(600), DomainError);
}

TEST(ClassifyStatusTest, PartitionHoldsOnSyntheticLog) {
  testing::LogShape shape;
  shape.lines = 2000;
  auto records = testing::random_records(shape);
  std::size_t ok = 0, bad = 0, not_modified = 0;
  for (const auto& r : records) {
    (classify_status(r.status) == Outcome::Successful ? ok : bad)++;
    if (r.status == 304) ++not_modified;
  }
  EXPECT_EQ(ok + bad, records.size());
  EXPECT_GT(not_modified, 0u);
}

TEST(StatusLabelTest, Labels) {
  EXPECT_EQ(status_label(404), "REQUEST NOT FOUND");
  EXPECT_EQ(status_label(500), "INTERNAL SERVER ERROR");
  EXPECT_EQ(status_label(304), "NOT MODIFIED");
  EXPECT_EQ(status_label(599), "STATUS 599");
}

TEST(ClassifyResourceTest, DefaultExtensions) {
  ClassifierConfig config;
  EXPECT_EQ(classify_resource("/combined.pdf", config), RequestClass::FileDownload);
  EXPECT_EQ(classify_resource("/atten_files/arrow.gif", config), RequestClass::ImageView);
  EXPECT_EQ(classify_resource("/atten_files/menu.js", config), RequestClass::OtherAsset);
  EXPECT_EQ(classify_resource("/atten.html", config), RequestClass::PageView);
  EXPECT_EQ(classify_resource("/", config), RequestClass::PageView);
  EXPECT_EQ(classify_resource("/docs/", config), RequestClass::PageView);
  EXPECT_EQ(classify_resource("/IMG/Photo.JPG?size=2", config), RequestClass::ImageView);
  EXPECT_EQ(classify_resource("/v1.2/readme", config), RequestClass::OtherAsset);
  EXPECT_EQ(classify_resource("*", config), RequestClass::OtherAsset);
}

TEST(ClassifyResourceTest, ConfigOverrides) {
  ClassifierConfig config;
  config.page_extensions = parse_extension_list("html, .JS");
  EXPECT_EQ(classify_resource("/atten_files/menu.js", config), RequestClass::PageView);
  EXPECT_EQ(classify_resource("/x.php", config), RequestClass::OtherAsset);
}

TEST(ClassifyResourceTest, OverlappingSetsRejected) {
  ClassifierConfig config;
  EXPECT_NO_THROW(config.validate());
  config.image_extensions.insert("pdf");
  EXPECT_THROW(config.validate(), DomainError);
}

TEST(ClassifyResourceTest, ClassCountsNeverExceedSuccessful) {
  testing::LogShape shape;
  shape.lines = 3000;
  shape.seed = 3;
  auto records = testing::random_records(shape);
  ClassifierConfig config;
  std::size_t ok = 0, classed = 0;
  for (const auto& r : records) {
    if (classify_status(r.status) != Outcome::Successful) continue;
    ++ok;
    if (classify_resource(r.url, config) != RequestClass::OtherAsset) ++classed;
  }
  EXPECT_LE(classed, ok);
  EXPECT_LT(classed, ok);  // the generator emits .js/.css too
}

TEST(BrowserFamilyTest, FirstToken) {
  EXPECT_EQ(browser_family(std::string("Mozilla/4.0 (compatible; MSIE 6.0)")), "Mozilla/4.0");
  EXPECT_EQ(browser_family(std::nullopt), "unknown");
  EXPECT_EQ(browser_family(std::string("curl/7.19.7")), "curl/7.19.7");
  EXPECT_EQ(browser_family(std::string("")), "unknown");
  EXPECT_EQ(browser_family(std::string("   ")), "unknown");
}

TEST(ParseExtensionListTest, NormalizesTokens) {
  EXPECT_EQ(parse_extension_list("GIF, .png,,jpg "), (std::set<std::string>{"gif", "png", "jpg"}));
  EXPECT_TRUE(parse_extension_list("").empty());
}

}  // namespace
}  // namespace weblog
