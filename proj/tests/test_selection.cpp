#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "langsim/error.hpp"
#include "langsim/selection.hpp"

using namespace langsim;

namespace {

const std::filesystem::path kData = LANGSIM_TEST_DATA_DIR;

}

TEST_CASE("consonant-proximity ranking puts German ahead of Korean for Japanese") {
  auto m = load_matrix_csv(kData / "sims" / "elinguistics.csv");
  auto list = rank_sources(m, "jpn", m.languages());
  REQUIRE(list.entries.size() == 7);
  CHECK(list.direction == RankDirection::ascending_distance);
  CHECK(list.entries[0].source == "deu");
  CHECK(list.entries[0].value == 87.4);
  CHECK(list.entries[1].source == "kor");
  CHECK(list.entries[1].value == 88.0);
  CHECK(list.entries[0].rank == 1);
  CHECK(list.excluded.empty());
}

TEST_CASE("typology ranking fixtures") {
  auto m = load_matrix_csv(kData / "sims" / "wals.csv");
  auto danish = rank_sources(m, "dan", m.languages());
  CHECK(danish.entries[0].source == "eng");
  CHECK(danish.entries[0].value == 0.109);
  auto korean = rank_sources(m, "kor", m.languages());
  CHECK(korean.entries[0].source == "jpn");
  CHECK(korean.entries[0].value == 0.108);
}

TEST_CASE("per-category average ranking: Polish's best source is Russian") {
  auto m = load_matrix_csv(kData / "sims" / "lang2vec.csv");
  auto [code, value] = best_source(m, "pol", m.languages());
  CHECK(code == "rus");
  CHECK(value == 0.344);
}

TEST_CASE("similarity matrices rank descending with row=source orientation") {
  auto m = load_matrix_csv(kData / "sims" / "ezglot.csv");
  std::vector<std::string> candidates = {"eng", "dan"};
  auto [code, value] = best_source(m, "deu", candidates);
  CHECK(code == "eng");
  CHECK(value == 28.0);
  auto list = rank_sources(m, "deu", candidates);
  CHECK(list.direction == RankDirection::descending_similarity);
  CHECK(list.entries[1].source == "dan");
  CHECK(list.entries[1].value == 17.0);
}

TEST_CASE("missing pairs are excluded with a reason, never ranked") {
  auto m = load_matrix_csv(kData / "sims" / "ezglot.csv");
  auto list = rank_sources(m, "jpn", m.languages());
  // only English and Korean document a similarity toward Japanese
  REQUIRE(list.entries.size() == 2);
  CHECK(list.entries[0].source == "eng");
  CHECK(list.entries[0].value == 7.0);
  CHECK(list.entries[1].source == "kor");
  CHECK(list.excluded.size() == 5);
  for (const auto& x : list.excluded) CHECK(x.reason == "missing-cell");
}

TEST_CASE("singleton candidate gets rank 1") {
  auto m = load_matrix_csv(kData / "sims" / "wals.csv");
  std::vector<std::string> one = {"rus"};
  auto list = rank_sources(m, "pol", one);
  REQUIRE(list.entries.size() == 1);
  CHECK(list.entries[0].rank == 1);
  CHECK(list.entries[0].source == "rus");
}

TEST_CASE("equal values break ties toward the smaller code") {
  DistanceMatrix m({"tt", "bb", "aa"}, MatrixKind::distance, true, "synthetic");
  for (std::size_t i = 0; i < 3; ++i) m.set_cell(i, i, 0.0);
  m.set_cell(0, 1, 0.7);
  m.set_cell(1, 0, 0.7);
  m.set_cell(0, 2, 0.7);
  m.set_cell(2, 0, 0.7);
  m.set_cell(1, 2, 0.4);
  m.set_cell(2, 1, 0.4);
  auto [code, value] = best_source(m, "tt", m.languages());
  CHECK(code == "aa");
  CHECK(value == 0.7);
  auto list = rank_sources(m, "tt", m.languages());
  CHECK(list.entries[0].rank == 1);
  CHECK(list.entries[1].rank == 2);
  CHECK(list.entries[1].source == "bb");
}

TEST_CASE("ranking is invariant under candidate permutation") {
  auto m = load_matrix_csv(kData / "sims" / "elinguistics.csv");
  std::vector<std::string> candidates = m.languages();
  auto baseline = rank_sources(m, "dan", candidates);
  std::mt19937 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    auto shuffled = rank_sources(m, "dan", candidates);
    REQUIRE(shuffled.entries.size() == baseline.entries.size());
    for (std::size_t i = 0; i < baseline.entries.size(); ++i) {
      CHECK(shuffled.entries[i].source == baseline.entries[i].source);
      CHECK(shuffled.entries[i].rank == baseline.entries[i].rank);
    }
  }
}

TEST_CASE("strictly increasing transforms preserve distance rankings") {
  auto m = load_matrix_csv(kData / "sims" / "wals.csv");
  DistanceMatrix scaled = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto c = m.cell(i, j);
      if (c.has_value()) scaled.set_cell(i, j, 3.0 * *c + 1.0 * *c * *c);
    }
  }
  for (const auto& target : m.languages()) {
    auto a = rank_sources(m, target, m.languages());
    auto b = rank_sources(scaled, target, scaled.languages());
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].source == b.entries[i].source);
    }
  }
}

TEST_CASE("bookkeeping invariant and error paths") {
  auto m = load_matrix_csv(kData / "sims" / "ezglot.csv");
  for (const auto& target : m.languages()) {
    auto list = rank_sources(m, target, m.languages());
    for (const auto& e : list.entries) CHECK(e.source != target);
    CHECK(list.entries.size() + list.excluded.size() + 1 == m.languages().size());
  }

  CHECK_THROWS_AS(rank_sources(m, "xxx", m.languages()), Error);
  std::vector<std::string> bogus = {"yyy"};
  CHECK_THROWS_AS(rank_sources(m, "deu", bogus), Error);

  std::vector<std::string> only_target = {"deu"};
  try {
    rank_sources(m, "deu", only_target);
    FAIL("expected EmptyCandidates");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCandidates);
  }
}
