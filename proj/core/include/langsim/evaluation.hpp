#pragma once

#include <span>
#include <string>
#include <vector>

#include "langsim/matrix.hpp"
#include "langsim/scores.hpp"
#include "langsim/stats.hpp"

namespace langsim {

struct BuildPairsResult {
  PairedSample sample;
  int excluded_missing = 0;  // pairs dropped because the similarity cell is absent
};

/// One observation per (source, target) cell where the similarity matrix
/// has a value: x = similarity cell, y = score cell. Diagonal cells are
/// dropped when include_diagonal is false. Both matrices must cover the
/// same language set.
BuildPairsResult build_pairs(const ScoreMatrix& scores, const DistanceMatrix& sim,
                             bool include_diagonal);

struct StudyRow {
  Task task = Task::sentiment;
  Model model = Model::mbert;
  std::string sim_provenance;
  bool include_diagonal = true;
  int n = 0;
  int excluded = 0;
  CorrelationResult pearson;
  CorrelationResult spearman;
};

struct StudyReport {
  std::vector<StudyRow> rows;  // ordered by (task, model, provenance)
};

/// Cartesian product of score matrices and similarity matrices, each cell
/// correlated with both methods. Row order is deterministic regardless of
/// input order.
StudyReport correlation_study(std::span<const ScoreMatrix> scores,
                              std::span<const DistanceMatrix> sims, bool include_diagonal);

struct EnglishVsBestCell {
  Task task = Task::sentiment;
  Model model = Model::mbert;
  std::string target;
  double reference_score = 0.0;
  std::string best_source;
  double best_score = 0.0;
  double diff = 0.0;  // reference_score - best_score
};

struct EnglishVsBestResult {
  ZTestResult test;
  std::vector<EnglishVsBestCell> cells;
  std::string reference;
};

/// For every (matrix, target != reference): the reference language's
/// transfer score minus the best zero-shot score over sources other than
/// the target itself, z-tested over all cells.
EnglishVsBestResult english_vs_best(std::span<const ScoreMatrix> scores,
                                    const std::string& reference = "eng");

/// "full" when the diagonal is included, else "zero-shot".
const char* diagonal_mode_name(bool include_diagonal) noexcept;

/// Fixed 3-decimal rendering; values rounding to zero lose their sign.
std::string format_fixed3(double v);

// Stable-ordered serializations: one line/object per (study cell, method).
std::string report_to_csv(const StudyReport& report);
std::string report_to_json(const StudyReport& report);
StudyReport report_from_csv(const std::string& text);
StudyReport report_from_json(const std::string& text);

std::string ztest_to_json(const EnglishVsBestResult& result);
std::string ztest_audit_to_csv(const EnglishVsBestResult& result);

}  // namespace langsim
