#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "langsim/matrix.hpp"
#include "langsim/typology.hpp"

namespace langsim {

enum class WalsMode { mean_abs, rms };

const char* to_string(WalsMode mode) noexcept;
WalsMode wals_mode_from_string(const std::string& s);

/// Pairs sharing fewer documented features than this get flagged, not
/// rejected.
inline constexpr int kSparseOverlapThreshold = 10;

struct WalsDistance {
  double value = 0.0;
  int shared_count = 0;
  bool sparse_overlap = false;
};

/// Average normalized difference over the features documented for both
/// languages. Per feature f with values x, y and k_f categories the
/// contribution is |x - y| / (k_f - 1); mean_abs averages those,
/// rms averages their squares and takes the root. Symmetric, 0 for a == b,
/// always in [0, 1].
WalsDistance quantified_wals_distance(const FeatureValueTable& table,
                                      const FeatureCatalog& features, const std::string& a,
                                      const std::string& b, WalsMode mode);

struct WalsMatrixResult {
  DistanceMatrix distances;      // kind=distance, symmetric
  DistanceMatrix shared_counts;  // integer-valued; diagonal = documented feature count
  bool any_sparse = false;
};

/// All n(n-1)/2 pairs with pairwise feature selection; pairs sharing no
/// feature become missing cells.
WalsMatrixResult wals_distance_matrix(const FeatureValueTable& table,
                                      const FeatureCatalog& features,
                                      std::span<const std::string> languages, WalsMode mode);

struct CategoryDistances {
  std::optional<double> genetic;
  std::optional<double> geographic;
  std::optional<double> syntactic;
  std::optional<double> inventory;
  std::optional<double> phonological;
  std::optional<double> featural;

  static constexpr std::array<const char*, 6> names = {
      "genetic", "geographic", "syntactic", "inventory", "phonological", "featural"};

  std::array<std::optional<double>, 6> values() const {
    return {genetic, geographic, syntactic, inventory, phonological, featural};
  }
};

enum class Lang2vecPolicy { strict, allow_partial };

const char* to_string(Lang2vecPolicy policy) noexcept;
Lang2vecPolicy lang2vec_policy_from_string(const std::string& s);

struct Lang2vecAverage {
  double value = 0.0;
  int categories_present = 0;
};

/// strict: all six categories must be present; allow_partial: mean of the
/// ones that are.
Lang2vecAverage lang2vec_average(const CategoryDistances& cd, Lang2vecPolicy policy);

/// Long-format per-pair category file: columns lang_a, lang_b and the six
/// category names, NA marking an absent category.
struct CategoryDistanceTable {
  std::vector<std::string> languages;  // first-appearance order
  std::map<std::pair<std::string, std::string>, CategoryDistances> pairs;
};

CategoryDistanceTable load_category_distances(const std::filesystem::path& path);

/// Averages every pair into a symmetric distance matrix with a zero
/// diagonal.
DistanceMatrix lang2vec_distance_matrix(const CategoryDistanceTable& table,
                                        Lang2vecPolicy policy);

}  // namespace langsim
