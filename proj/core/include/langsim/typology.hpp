#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace langsim {

struct LanguageRecord {
  std::string code;
  std::string name;
  std::string family;
  std::string genus;
  std::vector<std::string> iso_codes;

  bool operator==(const LanguageRecord&) const = default;
};

struct FeatureSpec {
  std::string feature_id;
  std::string name;
  int num_categories = 0;

  bool operator==(const FeatureSpec&) const = default;
};

/// Ordered catalog of languages keyed by code. Immutable once loaded.
class LanguageCatalog {
 public:
  LanguageCatalog() = default;
  explicit LanguageCatalog(std::vector<LanguageRecord> records);

  bool contains(const std::string& code) const;
  const LanguageRecord& at(const std::string& code) const;  // throws UnknownLanguage
  const std::vector<LanguageRecord>& records() const { return records_; }
  std::vector<std::string> codes() const;
  std::size_t size() const { return records_.size(); }

 private:
  std::vector<LanguageRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Ordered catalog of features keyed by feature id. Immutable once loaded.
class FeatureCatalog {
 public:
  FeatureCatalog() = default;
  explicit FeatureCatalog(std::vector<FeatureSpec> specs);

  bool contains(const std::string& feature_id) const;
  const FeatureSpec& at(const std::string& feature_id) const;  // throws UnknownFeature
  const std::vector<FeatureSpec>& specs() const { return specs_; }
  std::size_t size() const { return specs_.size(); }

 private:
  std::vector<FeatureSpec> specs_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Sparse language x feature store of categorical values. A missing entry
/// means "undocumented", never zero. Immutable once loaded; concurrent
/// reads are safe.
class FeatureValueTable {
 public:
  FeatureValueTable() = default;
  explicit FeatureValueTable(const LanguageCatalog& languages);

  void insert(const std::string& language, const std::string& feature_id, int value);

  std::optional<int> value(const std::string& language, const std::string& feature_id) const;

  /// Feature -> value map for one language, lexicographic by feature id.
  const std::map<std::string, int>& language_entries(const std::string& language) const;

  /// Features documented for both a and b, lexicographic. For a == b this
  /// is everything documented for a.
  std::vector<std::string> shared_features(const std::string& a, const std::string& b) const;

  std::size_t entry_count() const { return entry_count_; }
  std::size_t language_count() const { return by_language_.size(); }

  /// Language -> (feature -> value), both levels lexicographic.
  const std::map<std::string, std::map<std::string, int>>& all_entries() const {
    return by_language_;
  }

  bool operator==(const FeatureValueTable&) const = default;

 private:
  const std::map<std::string, int>& entries_or_throw(const std::string& language) const;

  std::map<std::string, std::map<std::string, int>> by_language_;
  std::size_t entry_count_ = 0;
};

LanguageCatalog load_languages(const std::filesystem::path& path);
FeatureCatalog load_features(const std::filesystem::path& path);

struct ValuesLoadResult {
  FeatureValueTable table;
  std::size_t skipped_blank = 0;  // rows with an empty value cell
};

ValuesLoadResult load_values(const std::filesystem::path& path,
                             const LanguageCatalog& languages,
                             const FeatureCatalog& features);

/// Long-format re-serialization, rows sorted by (language, feature).
std::string serialize_values(const FeatureValueTable& table);

}  // namespace langsim
