#include "langsim/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"

namespace langsim {

const char* to_string(WalsMode mode) noexcept {
  return mode == WalsMode::mean_abs ? "mean-abs" : "rms";
}

WalsMode wals_mode_from_string(const std::string& s) {
  if (s == "mean-abs") return WalsMode::mean_abs;
  if (s == "rms") return WalsMode::rms;
  throw Error(ErrorCode::ValueOutOfRange, "mode must be 'mean-abs' or 'rms', got '" + s + "'");
}

WalsDistance quantified_wals_distance(const FeatureValueTable& table,
                                      const FeatureCatalog& features, const std::string& a,
                                      const std::string& b, WalsMode mode) {
  std::vector<std::string> shared = table.shared_features(a, b);
  if (shared.empty()) {
    throw Error(ErrorCode::NoSharedFeatures,
                "'" + a + "' and '" + b + "' share no documented features");
  }
  const auto& ea = table.language_entries(a);
  const auto& eb = table.language_entries(b);

  double sum = 0.0;
  for (const std::string& fid : shared) {
    int k = features.at(fid).num_categories;
    double x = static_cast<double>(ea.at(fid));
    double y = static_cast<double>(eb.at(fid));
    double d = std::fabs(x - y) / static_cast<double>(k - 1);
    sum += mode == WalsMode::mean_abs ? d : d * d;
  }
  double avg = sum / static_cast<double>(shared.size());

  WalsDistance result;
  result.value = mode == WalsMode::mean_abs ? avg : std::sqrt(avg);
  result.shared_count = static_cast<int>(shared.size());
  result.sparse_overlap = result.shared_count < kSparseOverlapThreshold;
  if (a == b) result.value = 0.0;
  return result;
}

WalsMatrixResult wals_distance_matrix(const FeatureValueTable& table,
                                      const FeatureCatalog& features,
                                      std::span<const std::string> languages, WalsMode mode) {
  if (languages.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "a distance matrix needs at least 2 languages");
  }
  std::vector<std::string> codes(languages.begin(), languages.end());
  WalsMatrixResult result{
      DistanceMatrix(codes, MatrixKind::distance, true, "wals-quantified"),
      DistanceMatrix(codes, MatrixKind::similarity, true, "wals-shared-count"),
      false,
  };
  result.distances.set_metadata("mode", to_string(mode));

  for (std::size_t i = 0; i < codes.size(); ++i) {
    result.distances.set_cell(i, i, 0.0);
    result.shared_counts.set_cell(i, i,
                                  static_cast<double>(table.language_entries(codes[i]).size()));
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      try {
        WalsDistance d = quantified_wals_distance(table, features, codes[i], codes[j], mode);
        result.distances.set_cell(i, j, d.value);
        result.distances.set_cell(j, i, d.value);
        result.shared_counts.set_cell(i, j, static_cast<double>(d.shared_count));
        result.shared_counts.set_cell(j, i, static_cast<double>(d.shared_count));
        result.any_sparse = result.any_sparse || d.sparse_overlap;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoSharedFeatures) throw;
        result.shared_counts.set_cell(i, j, 0.0);
        result.shared_counts.set_cell(j, i, 0.0);
        // incomparable pair stays missing
      }
    }
  }
  return result;
}

const char* to_string(Lang2vecPolicy policy) noexcept {
  return policy == Lang2vecPolicy::strict ? "strict" : "allow-partial";
}

Lang2vecPolicy lang2vec_policy_from_string(const std::string& s) {
  if (s == "strict") return Lang2vecPolicy::strict;
  if (s == "allow-partial") return Lang2vecPolicy::allow_partial;
  throw Error(ErrorCode::ValueOutOfRange,
              "policy must be 'strict' or 'allow-partial', got '" + s + "'");
}

Lang2vecAverage lang2vec_average(const CategoryDistances& cd, Lang2vecPolicy policy) {
  auto values = cd.values();
  double sum = 0.0;
  int present = 0;
  std::string absent;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].has_value()) {
      if (!absent.empty()) absent += ", ";
      absent += CategoryDistances::names[i];
      continue;
    }
    double v = *values[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::ValueOutOfRange,
                  std::string(CategoryDistances::names[i]) + " distance " +
                      format_double(v) + " outside [0,1]");
    }
    sum += v;
    ++present;
  }
  if (present == 0) {
    throw Error(ErrorCode::MissingCategory, "all six categories absent");
  }
  if (policy == Lang2vecPolicy::strict && present < 6) {
    throw Error(ErrorCode::MissingCategory, "absent categories: " + absent);
  }
  return Lang2vecAverage{sum / static_cast<double>(present), present};
}

namespace {

std::optional<double> parse_category_cell(const std::string& s, std::size_t line) {
  if (s.empty() || s == "NA") return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::UnparseableCell,
                "category value '" + s + "' at line " + std::to_string(line) + " is not a number");
  }
  return v;
}

}  // namespace

CategoryDistanceTable load_category_distances(const std::filesystem::path& path) {
  auto rows = csv::parse(csv::read_file(path));
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has no header row");
  }
  std::vector<std::string> required = {"lang_a", "lang_b"};
  for (const char* name : CategoryDistances::names) required.emplace_back(name);
  std::vector<std::size_t> cols;
  for (const auto& name : required) {
    auto it = std::find(rows[0].begin(), rows[0].end(), name);
    if (it == rows[0].end()) {
      throw Error(ErrorCode::MissingColumn, "column '" + name + "' missing in " + path.string());
    }
    cols.push_back(static_cast<std::size_t>(it - rows[0].begin()));
  }

  CategoryDistanceTable table;
  auto note_language = [&table](const std::string& code) {
    if (std::find(table.languages.begin(), table.languages.end(), code) ==
        table.languages.end()) {
      table.languages.push_back(code);
    }
  };
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    auto cell = [&](std::size_t c) { return c < row.size() ? row[c] : std::string(); };
    std::string a = cell(cols[0]);
    std::string b = cell(cols[1]);
    if (a.empty() || b.empty()) {
      throw Error(ErrorCode::UnknownLanguage,
                  "blank language code at line " + std::to_string(i + 1));
    }
    note_language(a);
    note_language(b);
    CategoryDistances cd;
    cd.genetic = parse_category_cell(cell(cols[2]), i + 1);
    cd.geographic = parse_category_cell(cell(cols[3]), i + 1);
    cd.syntactic = parse_category_cell(cell(cols[4]), i + 1);
    cd.inventory = parse_category_cell(cell(cols[5]), i + 1);
    cd.phonological = parse_category_cell(cell(cols[6]), i + 1);
    cd.featural = parse_category_cell(cell(cols[7]), i + 1);
    table.pairs[{a, b}] = cd;
  }
  return table;
}

DistanceMatrix lang2vec_distance_matrix(const CategoryDistanceTable& table,
                                        Lang2vecPolicy policy) {
  if (table.languages.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "need at least 2 languages to build a matrix");
  }
  DistanceMatrix m(table.languages, MatrixKind::distance, true, "lang2vec-averaged");
  m.set_metadata("policy", to_string(policy));
  for (std::size_t i = 0; i < table.languages.size(); ++i) {
    m.set_cell(i, i, 0.0);
  }
  for (const auto& [key, cd] : table.pairs) {
    std::size_t i = m.index_of(key.first);
    std::size_t j = m.index_of(key.second);
    if (i == j) continue;  // self distance is fixed at 0
    Lang2vecAverage avg = lang2vec_average(cd, policy);
    m.set_cell(i, j, avg.value);
    m.set_cell(j, i, avg.value);
  }
  return m;
}

}  // namespace langsim
