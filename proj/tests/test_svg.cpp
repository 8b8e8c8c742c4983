#include <doctest.h>

#include <filesystem>

#include "langsim/evaluation.hpp"
#include "langsim/svg.hpp"

using namespace langsim;

namespace {

const std::filesystem::path kData = LANGSIM_TEST_DATA_DIR;

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("scatter render is deterministic and marks diagonal points") {
  auto scores = load_score_matrix(kData / "scores" / "dep_xlmr.csv");
  auto sim = load_matrix_csv(kData / "sims" / "wals.csv");
  auto pairs = build_pairs(scores, sim, true);

  ScatterOptions options{"dep/xlmr vs wals-quantified (full)", "wals-quantified",
                         "dep/xlmr las"};
  std::string once = scatter_svg(pairs.sample, options);
  std::string twice = scatter_svg(pairs.sample, options);
  CHECK(once == twice);

  CHECK(once.find("viewBox=\"0 0 640.00 480.00\"") != std::string::npos);
  CHECK(count_occurrences(once, "<circle") == 56);
  CHECK(count_occurrences(once, "#d9822b") == 8);  // 8 diagonal anchors as squares
  CHECK(once.find("wals-quantified</text>") != std::string::npos);

  auto zero_shot = build_pairs(scores, sim, false);
  std::string zs = scatter_svg(zero_shot.sample, options);
  CHECK(count_occurrences(zs, "#d9822b") == 0);
  CHECK(count_occurrences(zs, "<circle") == 56);
}

TEST_CASE("axis tick labels carry three decimals") {
  PairedSample sample;
  sample.add(0.0, 0.0);
  sample.add(1.0, 2.0);
  sample.add(0.5, 1.0);
  std::string svg = scatter_svg(sample, {"t", "x", "y"});
  CHECK(svg.find(">-0.050</text>") != std::string::npos);
  CHECK(svg.find(">1.050</text>") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("labels are XML-escaped") {
  PairedSample sample;
  sample.add(0.0, 0.0, {"a<b", "c&d", "", ""});
  sample.add(1.0, 1.0);
  std::string svg = scatter_svg(sample, {"x<y", "a&b", "q>r"});
  CHECK(svg.find("x&lt;y") != std::string::npos);
  CHECK(svg.find("a&amp;b") != std::string::npos);
  CHECK(svg.find("q&gt;r") != std::string::npos);
  CHECK(svg.find("a<b") == std::string::npos);
}
