#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace langsim {

enum class Task { sentiment, ner, dep };
enum class Model { mbert, xlmr };

const char* to_string(Task task) noexcept;
const char* to_string(Model model) noexcept;
Task task_from_string(const std::string& s);
Model model_from_string(const std::string& s);

/// dep is scored with las, the other tasks with macro-f1.
const char* metric_name_for(Task task) noexcept;

/// Dense source x target transfer-score matrix; rows are the fine-tuning
/// source, columns the evaluation target. Every cell present, in [0, 1].
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::vector<std::string> languages, Task task, Model model,
              std::string provenance);

  const std::vector<std::string>& languages() const { return languages_; }
  std::size_t size() const { return languages_.size(); }
  bool contains(const std::string& code) const;
  std::size_t index_of(const std::string& code) const;  // throws UnknownLanguage

  double cell(std::size_t source, std::size_t target) const;
  double cell(const std::string& source, const std::string& target) const;
  void set_cell(std::size_t source, std::size_t target, double value);

  Task task() const { return task_; }
  Model model() const { return model_; }
  const char* metric_name() const { return metric_name_for(task_); }
  const std::string& provenance() const { return provenance_; }

  bool operator==(const ScoreMatrix&) const = default;

 private:
  std::vector<std::string> languages_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> cells_;
  Task task_ = Task::sentiment;
  Model model_ = Model::mbert;
  std::string provenance_;
};

/// Matrix CSV with metadata keys provenance=, task=, model= (metric= is
/// validated against the task when present).
ScoreMatrix load_score_matrix(const std::filesystem::path& path);

std::string serialize_score_matrix(const ScoreMatrix& m);

}  // namespace langsim
