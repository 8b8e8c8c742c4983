#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "langsim/error.hpp"
#include "langsim/metrics.hpp"
#include "langsim/typology.hpp"

using namespace langsim;

namespace {

const std::filesystem::path kData = LANGSIM_TEST_DATA_DIR;

struct SyntheticTable {
  LanguageCatalog languages;
  FeatureCatalog features;
  FeatureValueTable table;
};

SyntheticTable two_feature_pair() {
  SyntheticTable s{
      LanguageCatalog({{"aa", "", "", "", {}}, {"bb", "", "", "", {}}}),
      FeatureCatalog({{"f1", "", 3}, {"f2", "", 2}}),
      {},
  };
  s.table = FeatureValueTable(s.languages);
  s.table.insert("aa", "f1", 1);
  s.table.insert("bb", "f1", 3);
  s.table.insert("aa", "f2", 1);
  s.table.insert("bb", "f2", 1);
  return s;
}

}  // namespace

TEST_CASE("quantified distance: hand-evaluated example") {
  auto s = two_feature_pair();
  auto mean_abs = quantified_wals_distance(s.table, s.features, "aa", "bb", WalsMode::mean_abs);
  CHECK(mean_abs.value == 0.5);
  CHECK(mean_abs.shared_count == 2);
  CHECK(mean_abs.sparse_overlap);  // 2 < 10
  auto rms = quantified_wals_distance(s.table, s.features, "aa", "bb", WalsMode::rms);
  CHECK(rms.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("quantified distance: identity is zero over all documented features") {
  auto s = two_feature_pair();
  auto d = quantified_wals_distance(s.table, s.features, "aa", "aa", WalsMode::mean_abs);
  CHECK(d.value == 0.0);
  CHECK(d.shared_count == 2);
}

TEST_CASE("pair with no shared features is incomparable, not distance zero") {
  LanguageCatalog languages({{"aa", "", "", "", {}}, {"bb", "", "", "", {}}});
  FeatureCatalog features({{"f1", "", 2}, {"f2", "", 2}});
  FeatureValueTable table(languages);
  table.insert("aa", "f1", 1);
  table.insert("bb", "f2", 1);
  try {
    quantified_wals_distance(table, features, "aa", "bb", WalsMode::mean_abs);
    FAIL("expected NoSharedFeatures");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSharedFeatures);
  }
}

TEST_CASE("a feature documented for neither language changes nothing") {
  auto s = two_feature_pair();
  auto before = quantified_wals_distance(s.table, s.features, "aa", "bb", WalsMode::mean_abs);

  SyntheticTable wider{
      LanguageCatalog({{"aa", "", "", "", {}}, {"bb", "", "", "", {}}, {"cc", "", "", "", {}}}),
      FeatureCatalog({{"f1", "", 3}, {"f2", "", 2}, {"f9", "", 4}}),
      {},
  };
  wider.table = FeatureValueTable(wider.languages);
  wider.table.insert("aa", "f1", 1);
  wider.table.insert("bb", "f1", 3);
  wider.table.insert("aa", "f2", 1);
  wider.table.insert("bb", "f2", 1);
  wider.table.insert("cc", "f9", 2);
  auto after = quantified_wals_distance(wider.table, wider.features, "aa", "bb", WalsMode::mean_abs);
  CHECK(after.value == before.value);
  CHECK(after.shared_count == before.shared_count);
}

TEST_CASE("quantified distance properties on random tables") {
  std::mt19937 rng(31);
  std::vector<LanguageRecord> recs;
  for (char c = 'a'; c <= 'e'; ++c) recs.push_back({std::string(1, c), "", "", "", {}});
  LanguageCatalog languages(recs);
  std::uniform_int_distribution<int> kdist(2, 9);
  std::uniform_int_distribution<int> coin(0, 3);

  for (int iter = 0; iter < 300; ++iter) {
    std::vector<FeatureSpec> specs;
    for (int f = 0; f < 12; ++f) {
      specs.push_back({"f" + std::to_string(f), "", kdist(rng)});
    }
    FeatureCatalog features(specs);
    FeatureValueTable table(languages);
    for (const auto& rec : recs) {
      for (const auto& spec : specs) {
        if (coin(rng) != 0) {
          std::uniform_int_distribution<int> vdist(1, spec.num_categories);
          table.insert(rec.code, spec.feature_id, vdist(rng));
        }
      }
    }
    for (const auto& a : recs) {
      for (const auto& b : recs) {
        WalsDistance ab;
        try {
          ab = quantified_wals_distance(table, features, a.code, b.code, WalsMode::mean_abs);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NoSharedFeatures);
          continue;
        }
        auto ba = quantified_wals_distance(table, features, b.code, a.code, WalsMode::mean_abs);
        CHECK(ab.value == ba.value);  // exact symmetry
        CHECK(ab.value >= 0.0);
        CHECK(ab.value <= 1.0);
        auto rms = quantified_wals_distance(table, features, a.code, b.code, WalsMode::rms);
        CHECK(ab.value <= rms.value + 1e-15);
        CHECK(rms.value <= std::sqrt(ab.value) + 1e-15);
      }
    }
  }
}

TEST_CASE("distance matrix over the bundled snapshot") {
  auto languages = load_languages(kData / "wals" / "languages.csv");
  auto features = load_features(kData / "wals" / "features.csv");
  auto loaded = load_values(kData / "wals" / "values.csv", languages, features);

  auto result = wals_distance_matrix(loaded.table, features, languages.codes(),
                                     WalsMode::mean_abs);
  const auto& m = result.distances;
  CHECK(m.size() == 8);
  CHECK(m.kind() == MatrixKind::distance);
  CHECK(m.symmetric());
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(m.cell(i, i) == 0.0);
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(m.cell(i, j) == m.cell(j, i));
    }
  }
  CHECK_FALSE(result.any_sparse);
  // per-pair selection matches the pairwise operation
  auto pair = quantified_wals_distance(loaded.table, features, "eng", "dan", WalsMode::mean_abs);
  CHECK(m.cell("eng", "dan") == pair.value);
  CHECK(result.shared_counts.cell("eng", "dan") == static_cast<double>(pair.shared_count));
}

TEST_CASE("two-language matrix has a single independent value") {
  auto s = two_feature_pair();
  std::vector<std::string> langs = {"aa", "bb"};
  auto result = wals_distance_matrix(s.table, s.features, langs, WalsMode::mean_abs);
  CHECK(result.distances.cell(0, 1) == 0.5);
  CHECK(result.distances.cell(1, 0) == 0.5);
  CHECK(result.any_sparse);
}

TEST_CASE("averaging six categories") {
  CategoryDistances six_equal{0.3, 0.3, 0.3, 0.3, 0.3, 0.3};
  CHECK(lang2vec_average(six_equal, Lang2vecPolicy::strict).value == doctest::Approx(0.3));

  CategoryDistances spread{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  CHECK(lang2vec_average(spread, Lang2vecPolicy::strict).value == doctest::Approx(0.5));

  CategoryDistances partial{0.2, std::nullopt, 0.4, std::nullopt, std::nullopt, std::nullopt};
  try {
    lang2vec_average(partial, Lang2vecPolicy::strict);
    FAIL("expected MissingCategory");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingCategory);
    CHECK(std::string(e.what()).find("geographic") != std::string::npos);
    CHECK(std::string(e.what()).find("featural") != std::string::npos);
  }
  auto loose = lang2vec_average(partial, Lang2vecPolicy::allow_partial);
  CHECK(loose.value == doctest::Approx(0.3));
  CHECK(loose.categories_present == 2);

  CategoryDistances none{};
  CHECK_THROWS_AS(lang2vec_average(none, Lang2vecPolicy::allow_partial), Error);

  CategoryDistances bad{1.5, 0.1, 0.1, 0.1, 0.1, 0.1};
  try {
    lang2vec_average(bad, Lang2vecPolicy::strict);
    FAIL("expected ValueOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValueOutOfRange);
  }
}

TEST_CASE("average is invariant under category permutation") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int iter = 0; iter < 1000; ++iter) {
    std::array<double, 6> vals;
    for (auto& v : vals) v = unit(rng);
    CategoryDistances a{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
    std::shuffle(vals.begin(), vals.end(), rng);
    CategoryDistances b{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
    CHECK(lang2vec_average(a, Lang2vecPolicy::strict).value ==
          doctest::Approx(lang2vec_average(b, Lang2vecPolicy::strict).value).epsilon(1e-15));
  }
}

TEST_CASE("per-category fixture averages back to the matrix fixture") {
  auto table = load_category_distances(kData / "lang2vec" / "categories.csv");
  auto averaged = lang2vec_distance_matrix(table, Lang2vecPolicy::strict);
  auto reference = load_matrix_csv(kData / "sims" / "lang2vec.csv");

  REQUIRE(averaged.size() == reference.size());
  CHECK(std::fabs(*averaged.cell("eng", "deu") - 0.352) <= 0.005);
  for (const auto& a : reference.languages()) {
    for (const auto& b : reference.languages()) {
      CHECK(std::fabs(*averaged.cell(a, b) - *reference.cell(a, b)) < 5e-4);
    }
  }
}
