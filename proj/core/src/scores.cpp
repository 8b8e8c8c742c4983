#include "langsim/scores.hpp"

#include <charconv>
#include <cmath>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"
#include "langsim/matrix.hpp"

namespace langsim {

const char* to_string(Task task) noexcept {
  switch (task) {
    case Task::sentiment: return "sentiment";
    case Task::ner: return "ner";
    case Task::dep: return "dep";
  }
  return "?";
}

const char* to_string(Model model) noexcept {
  return model == Model::mbert ? "mbert" : "xlmr";
}

Task task_from_string(const std::string& s) {
  if (s == "sentiment") return Task::sentiment;
  if (s == "ner") return Task::ner;
  if (s == "dep") return Task::dep;
  throw Error(ErrorCode::MissingMetadata, "task must be sentiment, ner, or dep, got '" + s + "'");
}

Model model_from_string(const std::string& s) {
  if (s == "mbert") return Model::mbert;
  if (s == "xlmr") return Model::xlmr;
  throw Error(ErrorCode::MissingMetadata, "model must be mbert or xlmr, got '" + s + "'");
}

const char* metric_name_for(Task task) noexcept {
  return task == Task::dep ? "las" : "macro-f1";
}

ScoreMatrix::ScoreMatrix(std::vector<std::string> languages, Task task, Model model,
                         std::string provenance)
    : languages_(std::move(languages)),
      cells_(languages_.size() * languages_.size(), 0.0),
      task_(task),
      model_(model),
      provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < languages_.size(); ++i) {
    if (!index_.emplace(languages_[i], i).second) {
      throw Error(ErrorCode::DuplicateCode, "language '" + languages_[i] + "' listed twice");
    }
  }
}

bool ScoreMatrix::contains(const std::string& code) const { return index_.count(code) != 0; }

std::size_t ScoreMatrix::index_of(const std::string& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownLanguage, "language '" + code + "' is not in the score matrix");
  }
  return it->second;
}

double ScoreMatrix::cell(std::size_t source, std::size_t target) const {
  return cells_.at(source * languages_.size() + target);
}

double ScoreMatrix::cell(const std::string& source, const std::string& target) const {
  return cell(index_of(source), index_of(target));
}

void ScoreMatrix::set_cell(std::size_t source, std::size_t target, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::OutOfRangeScore,
                "score " + format_double(value) + " outside [0,1]");
  }
  cells_.at(source * languages_.size() + target) = value;
}

ScoreMatrix load_score_matrix(const std::filesystem::path& path) {
  auto [meta, body] = csv::split_metadata(csv::read_file(path));
  auto require = [&](const char* key) {
    auto it = meta.find(key);
    if (it == meta.end()) {
      throw Error(ErrorCode::MissingMetadata,
                  std::string("metadata key '") + key + "' missing in " + path.string());
    }
    return it->second;
  };
  std::string provenance = require("provenance");
  Task task = task_from_string(require("task"));
  Model model = model_from_string(require("model"));
  if (auto it = meta.find("metric"); it != meta.end() && it->second != metric_name_for(task)) {
    throw Error(ErrorCode::MissingMetadata, "metric '" + it->second + "' does not match task " +
                                                to_string(task) + " (expected " +
                                                metric_name_for(task) + ")");
  }

  auto rows = csv::parse(body);
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, path.string() + " has no matrix header row");
  }
  std::vector<std::string> codes(rows[0].begin() + 1, rows[0].end());
  std::size_t n = codes.size();
  if (n == 0 || rows.size() - 1 != n) {
    throw Error(ErrorCode::NotSquare, path.string() + " has " + std::to_string(rows.size() - 1) +
                                          " data rows for " + std::to_string(n) + " columns");
  }

  ScoreMatrix m(codes, task, model, provenance);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.empty() || row[0] != codes[i] || row.size() != n + 1) {
      throw Error(ErrorCode::NotSquare,
                  "row " + std::to_string(i + 2) + " of " + path.string() +
                      " does not match the header order");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& s = row[j + 1];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::UnparseableCell, "cell (" + codes[i] + "," + codes[j] +
                                                    ") value '" + s + "' is not a number");
      }
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::OutOfRangeScore, "cell (" + codes[i] + "," + codes[j] +
                                                    ") score " + s + " outside [0,1]");
      }
      m.set_cell(i, j, v);
    }
  }
  return m;
}

std::string serialize_score_matrix(const ScoreMatrix& m) {
  std::vector<std::pair<std::string, std::string>> meta = {
      {"provenance", m.provenance()},
      {"task", to_string(m.task())},
      {"model", to_string(m.model())},
      {"metric", m.metric_name()},
  };
  std::string out = csv::format_metadata_line(meta);
  csv::Row header = {"code"};
  for (const auto& code : m.languages()) header.push_back(code);
  out += csv::join_row(header) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    csv::Row row = {m.languages()[i]};
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(format_double(m.cell(i, j)));
    }
    out += csv::join_row(row) + "\n";
  }
  return out;
}

}  // namespace langsim
