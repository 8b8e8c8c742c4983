#include <doctest.h>

#include <filesystem>
#include <random>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"

using namespace langsim;

TEST_CASE("csv parse handles quoting") {
  auto rows = csv::parse("a,b,c\n\"x,y\",\"he said \"\"hi\"\"\",\"line\nbreak\"\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == csv::Row{"a", "b", "c"});
  CHECK(rows[1] == csv::Row{"x,y", "he said \"hi\"", "line\nbreak"});
}

TEST_CASE("csv parse tolerates CRLF and missing trailing newline") {
  auto rows = csv::parse("a,b\r\n1,2");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == csv::Row{"1", "2"});
}

TEST_CASE("csv parse keeps empty fields") {
  auto rows = csv::parse(",x,\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == csv::Row{"", "x", ""});
}

TEST_CASE("unterminated quote is an error") {
  CHECK_THROWS_AS(csv::parse("\"oops"), Error);
}

TEST_CASE("join/parse round trip on random fields") {
  std::mt19937 rng(7);
  const std::string alphabet = "ab,\"\n x";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 8);
  for (int iter = 0; iter < 500; ++iter) {
    csv::Row row;
    int fields = 1 + iter % 5;
    for (int f = 0; f < fields; ++f) {
      std::string s;
      int l = len(rng);
      for (int i = 0; i < l; ++i) s.push_back(alphabet[pick(rng)]);
      row.push_back(s);
    }
    // a lone empty field serializes to an empty line, which parses as no row
    if (row.size() == 1 && row[0].empty()) continue;
    auto parsed = csv::parse(csv::join_row(row) + "\n");
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == row);
  }
}

TEST_CASE("metadata line is split off and parsed") {
  auto [meta, body] = csv::split_metadata("# provenance=x kind=distance symmetric=true\na,b\n");
  CHECK(meta.at("provenance") == "x");
  CHECK(meta.at("kind") == "distance");
  CHECK(body == "a,b\n");

  auto plain = csv::split_metadata("a,b\n");
  CHECK(plain.metadata.empty());
  CHECK(plain.body == "a,b\n");

  CHECK_THROWS_AS(csv::split_metadata("# provenance=x provenance=y\na\n"), Error);
  CHECK_THROWS_AS(csv::split_metadata("# notakeyvalue\na\n"), Error);
}

TEST_CASE("atomic write leaves no temp file behind") {
  auto dir = std::filesystem::temp_directory_path() / "langsim_csv_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "out.txt";
  csv::write_file_atomic(path, "hello\n");
  CHECK(csv::read_file(path) == "hello\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}
