#include "langsim/typology.hpp"

#include <algorithm>
#include <charconv>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"

namespace langsim {

namespace {

// Header lookup: every listed column must be present, extras are ignored.
std::vector<std::size_t> column_indices(const csv::Row& header,
                                        const std::vector<std::string>& required,
                                        const std::string& where) {
  std::vector<std::size_t> out;
  for (const auto& name : required) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw Error(ErrorCode::MissingColumn, "column '" + name + "' missing in " + where);
    }
    out.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  return out;
}

std::string cell_at(const csv::Row& row, std::size_t idx) {
  return idx < row.size() ? row[idx] : std::string();
}

std::vector<std::string> split_iso(const std::string& raw) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t sep = raw.find(';', start);
    std::string part = raw.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (!part.empty()) out.push_back(part);
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return out;
}

int parse_positive_int(const std::string& s, ErrorCode code, const std::string& what) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v <= 0) {
    throw Error(code, what + " '" + s + "' is not a positive integer");
  }
  return v;
}

}  // namespace

LanguageCatalog::LanguageCatalog(std::vector<LanguageRecord> records)
    : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].code.empty()) {
      throw Error(ErrorCode::DuplicateCode, "empty language code at record " + std::to_string(i + 1));
    }
    if (!index_.emplace(records_[i].code, i).second) {
      throw Error(ErrorCode::DuplicateCode, "language code '" + records_[i].code + "' appears twice");
    }
  }
}

bool LanguageCatalog::contains(const std::string& code) const {
  return index_.count(code) != 0;
}

const LanguageRecord& LanguageCatalog::at(const std::string& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownLanguage, "language '" + code + "' is not cataloged");
  }
  return records_[it->second];
}

std::vector<std::string> LanguageCatalog::codes() const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.code);
  return out;
}

FeatureCatalog::FeatureCatalog(std::vector<FeatureSpec> specs) : specs_(std::move(specs)) {
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    if (specs_[i].num_categories < 2) {
      throw Error(ErrorCode::InvalidCategoryCount,
                  "feature '" + specs_[i].feature_id + "' declares " +
                      std::to_string(specs_[i].num_categories) + " categories (minimum is 2)");
    }
    if (!index_.emplace(specs_[i].feature_id, i).second) {
      throw Error(ErrorCode::DuplicateFeatureId,
                  "feature id '" + specs_[i].feature_id + "' appears twice");
    }
  }
}

bool FeatureCatalog::contains(const std::string& feature_id) const {
  return index_.count(feature_id) != 0;
}

const FeatureSpec& FeatureCatalog::at(const std::string& feature_id) const {
  auto it = index_.find(feature_id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownFeature, "feature '" + feature_id + "' is not cataloged");
  }
  return specs_[it->second];
}

FeatureValueTable::FeatureValueTable(const LanguageCatalog& languages) {
  for (const auto& r : languages.records()) {
    by_language_[r.code];
  }
}

void FeatureValueTable::insert(const std::string& language, const std::string& feature_id,
                               int value) {
  auto it = by_language_.find(language);
  if (it == by_language_.end()) {
    throw Error(ErrorCode::UnknownLanguage, "language '" + language + "' is not cataloged");
  }
  auto [pos, added] = it->second.emplace(feature_id, value);
  if (!added) {
    pos->second = value;  // last row wins
  } else {
    ++entry_count_;
  }
}

const std::map<std::string, int>& FeatureValueTable::entries_or_throw(
    const std::string& language) const {
  auto it = by_language_.find(language);
  if (it == by_language_.end()) {
    throw Error(ErrorCode::UnknownLanguage, "language '" + language + "' is not cataloged");
  }
  return it->second;
}

std::optional<int> FeatureValueTable::value(const std::string& language,
                                            const std::string& feature_id) const {
  const auto& entries = entries_or_throw(language);
  auto it = entries.find(feature_id);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

const std::map<std::string, int>& FeatureValueTable::language_entries(
    const std::string& language) const {
  return entries_or_throw(language);
}

std::vector<std::string> FeatureValueTable::shared_features(const std::string& a,
                                                            const std::string& b) const {
  const auto& ea = entries_or_throw(a);
  const auto& eb = entries_or_throw(b);
  std::vector<std::string> out;
  if (a == b) {
    out.reserve(ea.size());
    for (const auto& [fid, v] : ea) out.push_back(fid);
    return out;
  }
  auto ia = ea.begin();
  auto ib = eb.begin();
  while (ia != ea.end() && ib != eb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.push_back(ia->first);
      ++ia;
      ++ib;
    }
  }
  return out;
}

LanguageCatalog load_languages(const std::filesystem::path& path) {
  auto rows = csv::parse(csv::read_file(path));
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has no header row");
  }
  auto cols = column_indices(rows[0], {"code", "name", "family", "genus"}, path.string());
  bool has_iso = std::find(rows[0].begin(), rows[0].end(), "iso_codes") != rows[0].end();
  std::size_t iso_col = 0;
  if (has_iso) {
    iso_col = static_cast<std::size_t>(
        std::find(rows[0].begin(), rows[0].end(), "iso_codes") - rows[0].begin());
  }
  if (rows.size() == 1) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has a header but no data rows");
  }
  std::vector<LanguageRecord> records;
  records.reserve(rows.size() - 1);
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    LanguageRecord rec;
    rec.code = cell_at(rows[i], cols[0]);
    rec.name = cell_at(rows[i], cols[1]);
    rec.family = cell_at(rows[i], cols[2]);
    rec.genus = cell_at(rows[i], cols[3]);
    if (has_iso) rec.iso_codes = split_iso(cell_at(rows[i], iso_col));
    if (rec.code.empty()) {
      throw Error(ErrorCode::DuplicateCode,
                  "empty language code at line " + std::to_string(i + 1));
    }
    auto [it, added] = seen.emplace(rec.code, i + 1);
    if (!added) {
      throw Error(ErrorCode::DuplicateCode, "language code '" + rec.code + "' at line " +
                                                std::to_string(i + 1) +
                                                " already declared at line " +
                                                std::to_string(it->second));
    }
    records.push_back(std::move(rec));
  }
  return LanguageCatalog(std::move(records));
}

FeatureCatalog load_features(const std::filesystem::path& path) {
  auto rows = csv::parse(csv::read_file(path));
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has no header row");
  }
  auto cols = column_indices(rows[0], {"feature_id", "name", "num_categories"}, path.string());
  if (rows.size() == 1) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has a header but no data rows");
  }
  std::vector<FeatureSpec> specs;
  specs.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    FeatureSpec spec;
    spec.feature_id = cell_at(rows[i], cols[0]);
    spec.name = cell_at(rows[i], cols[1]);
    spec.num_categories = parse_positive_int(cell_at(rows[i], cols[2]),
                                             ErrorCode::InvalidCategoryCount,
                                             "num_categories at line " + std::to_string(i + 1));
    if (spec.num_categories < 2) {
      throw Error(ErrorCode::InvalidCategoryCount,
                  "feature '" + spec.feature_id + "' at line " + std::to_string(i + 1) +
                      " declares fewer than 2 categories");
    }
    specs.push_back(std::move(spec));
  }
  return FeatureCatalog(std::move(specs));
}

ValuesLoadResult load_values(const std::filesystem::path& path, const LanguageCatalog& languages,
                             const FeatureCatalog& features) {
  auto rows = csv::parse(csv::read_file(path));
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has no header row");
  }
  auto cols = column_indices(rows[0], {"language_code", "feature_id", "value_code"}, path.string());

  ValuesLoadResult result;
  result.table = FeatureValueTable(languages);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::string line = std::to_string(i + 1);
    std::string lang = cell_at(rows[i], cols[0]);
    std::string fid = cell_at(rows[i], cols[1]);
    std::string raw = cell_at(rows[i], cols[2]);
    if (!languages.contains(lang)) {
      throw Error(ErrorCode::UnknownLanguage,
                  "language '" + lang + "' at line " + line + " is not cataloged");
    }
    if (!features.contains(fid)) {
      throw Error(ErrorCode::UnknownFeature,
                  "feature '" + fid + "' at line " + line + " is not cataloged");
    }
    if (raw.empty()) {
      ++result.skipped_blank;  // missing data, not an error
      continue;
    }
    int v = parse_positive_int(raw, ErrorCode::ValueOutOfRange, "value at line " + line);
    int k = features.at(fid).num_categories;
    if (v < 1 || v > k) {
      throw Error(ErrorCode::ValueOutOfRange, "value " + raw + " at line " + line +
                                                  " outside 1.." + std::to_string(k) +
                                                  " for feature '" + fid + "'");
    }
    result.table.insert(lang, fid, v);
  }
  return result;
}

std::string serialize_values(const FeatureValueTable& table) {
  std::string out = "language_code,feature_id,value_code\n";
  for (const auto& [lang, entries] : table.all_entries()) {
    for (const auto& [fid, v] : entries) {
      out += lang + "," + fid + "," + std::to_string(v) + "\n";
    }
  }
  return out;
}

}  // namespace langsim
