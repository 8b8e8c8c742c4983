#include "langsim/matrix.hpp"

#include <charconv>
#include <cmath>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"

namespace langsim {

const char* to_string(MatrixKind kind) noexcept {
  return kind == MatrixKind::distance ? "distance" : "similarity";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "distance") return MatrixKind::distance;
  if (s == "similarity") return MatrixKind::similarity;
  throw Error(ErrorCode::MissingMetadata, "kind must be 'distance' or 'similarity', got '" + s + "'");
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> languages, MatrixKind kind, bool symmetric,
                               std::string provenance)
    : languages_(std::move(languages)),
      cells_(languages_.size() * languages_.size()),
      kind_(kind),
      symmetric_(symmetric),
      provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < languages_.size(); ++i) {
    if (!index_.emplace(languages_[i], i).second) {
      throw Error(ErrorCode::DuplicateCode, "language '" + languages_[i] + "' listed twice");
    }
  }
}

bool DistanceMatrix::contains(const std::string& code) const { return index_.count(code) != 0; }

std::size_t DistanceMatrix::index_of(const std::string& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownLanguage, "language '" + code + "' is not in the matrix");
  }
  return it->second;
}

std::optional<double> DistanceMatrix::cell(std::size_t i, std::size_t j) const {
  return cells_.at(i * languages_.size() + j);
}

std::optional<double> DistanceMatrix::cell(const std::string& row, const std::string& col) const {
  return cell(index_of(row), index_of(col));
}

void DistanceMatrix::set_cell(std::size_t i, std::size_t j, double value) {
  cells_.at(i * languages_.size() + j) = value;
}

void DistanceMatrix::set_missing(std::size_t i, std::size_t j) {
  cells_.at(i * languages_.size() + j) = std::nullopt;
}

void DistanceMatrix::set_metadata(const std::string& key, const std::string& value) {
  metadata_[key] = value;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

double parse_cell(const std::string& s, std::size_t row, std::size_t col) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error(ErrorCode::UnparseableCell, "cell (" + std::to_string(row + 1) + "," +
                                                std::to_string(col + 1) + ") value '" + s +
                                                "' is not a finite number");
  }
  return v;
}

std::string require_meta(const std::map<std::string, std::string>& meta, const std::string& key,
                         const std::string& where) {
  auto it = meta.find(key);
  if (it == meta.end()) {
    throw Error(ErrorCode::MissingMetadata, "metadata key '" + key + "' missing in " + where);
  }
  return it->second;
}

}  // namespace

DistanceMatrix load_matrix_csv(const std::filesystem::path& path) {
  auto [meta, body] = csv::split_metadata(csv::read_file(path));
  std::string provenance = require_meta(meta, "provenance", path.string());
  MatrixKind kind = matrix_kind_from_string(require_meta(meta, "kind", path.string()));
  std::string sym = require_meta(meta, "symmetric", path.string());
  if (sym != "true" && sym != "false") {
    throw Error(ErrorCode::MissingMetadata, "symmetric must be 'true' or 'false' in " + path.string());
  }
  bool symmetric = sym == "true";

  auto rows = csv::parse(body);
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has no matrix header row");
  }
  const csv::Row& header = rows[0];
  if (header.size() < 2) {
    throw Error(ErrorCode::NotSquare, path.string() + " header lists no language codes");
  }
  std::vector<std::string> codes(header.begin() + 1, header.end());
  std::size_t n = codes.size();
  if (rows.size() - 1 != n) {
    throw Error(ErrorCode::NotSquare, path.string() + " has " + std::to_string(rows.size() - 1) +
                                          " data rows for " + std::to_string(n) + " columns");
  }

  DistanceMatrix m(codes, kind, symmetric, provenance);
  for (const auto& [key, value] : meta) {
    if (key == "provenance" || key == "kind" || key == "symmetric") continue;
    m.set_metadata(key, value);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const csv::Row& row = rows[i + 1];
    if (row.empty() || row[0] != codes[i]) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i + 2) + " of " + path.string() +
                                            " is labeled '" + (row.empty() ? "" : row[0]) +
                                            "' but the header order expects '" + codes[i] + "'");
    }
    if (row.size() != n + 1) {
      throw Error(ErrorCode::NotSquare, "row '" + codes[i] + "' has " +
                                            std::to_string(row.size() - 1) + " cells, expected " +
                                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& s = row[j + 1];
      if (s == "NA") continue;  // stays missing
      m.set_cell(i, j, parse_cell(s, i, j));
    }
  }

  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto a = m.cell(i, j);
        auto b = m.cell(j, i);
        if (a != b) {
          throw Error(ErrorCode::SymmetryViolation,
                      "cells (" + codes[i] + "," + codes[j] + ") and (" + codes[j] + "," +
                          codes[i] + ") disagree in " + path.string());
        }
      }
    }
  }
  if (kind == MatrixKind::distance) {
    for (std::size_t i = 0; i < n; ++i) {
      auto d = m.cell(i, i);
      if (d.has_value() && *d != 0.0) {
        throw Error(ErrorCode::InvalidDiagonal, "distance diagonal for '" + codes[i] +
                                                    "' is " + format_double(*d) + ", expected 0");
      }
    }
  }
  return m;
}

DistanceMatrix load_matrix_csv(const std::filesystem::path& path, MatrixKind expected_kind,
                               bool symmetric_expected) {
  DistanceMatrix m = load_matrix_csv(path);
  if (m.kind() != expected_kind) {
    throw Error(ErrorCode::MissingMetadata, path.string() + " declares kind=" +
                                                to_string(m.kind()) + ", expected " +
                                                to_string(expected_kind));
  }
  if (m.symmetric() != symmetric_expected) {
    throw Error(ErrorCode::MissingMetadata,
                path.string() + " declares symmetric=" + (m.symmetric() ? "true" : "false") +
                    ", expected " + (symmetric_expected ? "true" : "false"));
  }
  return m;
}

std::string serialize_matrix(const DistanceMatrix& m) {
  std::vector<std::pair<std::string, std::string>> meta = {
      {"provenance", m.provenance()},
      {"kind", to_string(m.kind())},
      {"symmetric", m.symmetric() ? "true" : "false"},
  };
  for (const auto& [k, v] : m.metadata()) meta.emplace_back(k, v);

  std::string out = csv::format_metadata_line(meta);
  csv::Row header = {"code"};
  for (const auto& code : m.languages()) header.push_back(code);
  out += csv::join_row(header) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    csv::Row row = {m.languages()[i]};
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto c = m.cell(i, j);
      row.push_back(c.has_value() ? format_double(*c) : "NA");
    }
    out += csv::join_row(row) + "\n";
  }
  return out;
}

void write_matrix_csv(const std::filesystem::path& path, const DistanceMatrix& m) {
  csv::write_file_atomic(path, serialize_matrix(m));
}

std::optional<double> similarity_lookup(const DistanceMatrix& m, const std::string& source,
                                        const std::string& target) {
  return m.cell(source, target);
}

}  // namespace langsim
