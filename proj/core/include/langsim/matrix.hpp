#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace langsim {

enum class MatrixKind { distance, similarity };

const char* to_string(MatrixKind kind) noexcept;
MatrixKind matrix_kind_from_string(const std::string& s);

/// Square language-indexed matrix of pairwise values with explicit missing
/// cells. kind=distance means smaller is closer and the diagonal, where
/// present, is exactly 0; kind=similarity means larger is closer.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> languages, MatrixKind kind, bool symmetric,
                 std::string provenance);

  const std::vector<std::string>& languages() const { return languages_; }
  std::size_t size() const { return languages_.size(); }
  bool contains(const std::string& code) const;
  std::size_t index_of(const std::string& code) const;  // throws UnknownLanguage

  std::optional<double> cell(std::size_t i, std::size_t j) const;
  std::optional<double> cell(const std::string& row, const std::string& col) const;
  void set_cell(std::size_t i, std::size_t j, double value);
  void set_missing(std::size_t i, std::size_t j);

  MatrixKind kind() const { return kind_; }
  bool symmetric() const { return symmetric_; }
  const std::string& provenance() const { return provenance_; }

  /// Extra metadata key=value pairs carried from/to the file header.
  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  void set_metadata(const std::string& key, const std::string& value);

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::vector<std::string> languages_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::optional<double>> cells_;  // row-major n*n
  MatrixKind kind_ = MatrixKind::distance;
  bool symmetric_ = true;
  std::string provenance_;
  std::map<std::string, std::string> metadata_;
};

/// Reads the matrix CSV format: a `# provenance=.. kind=.. symmetric=..`
/// metadata line, a header row of language codes, then one row per
/// language with `NA` marking missing cells. Symmetry and a zero distance
/// diagonal are verified on load.
DistanceMatrix load_matrix_csv(const std::filesystem::path& path);

/// Same, but additionally checks the file against an expected kind and
/// symmetry flag.
DistanceMatrix load_matrix_csv(const std::filesystem::path& path, MatrixKind expected_kind,
                               bool symmetric_expected);

std::string serialize_matrix(const DistanceMatrix& m);
void write_matrix_csv(const std::filesystem::path& path, const DistanceMatrix& m);

/// cell(row = source, column = target); the orientation used for
/// asymmetric similarity matrices throughout.
std::optional<double> similarity_lookup(const DistanceMatrix& m, const std::string& source,
                                        const std::string& target);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace langsim
