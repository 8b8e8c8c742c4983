#include "langsim/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"

namespace langsim {

namespace {

std::string join_codes(std::vector<std::string> codes) {
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) {
    if (!out.empty()) out += " ";
    out += c;
  }
  return out;
}

double round3(double v) {
  double r = std::round(v * 1000.0) / 1000.0;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

const char* diagonal_mode_name(bool include_diagonal) noexcept {
  return include_diagonal ? "full" : "zero-shot";
}

std::string format_fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", round3(v));
  return buf;
}

BuildPairsResult build_pairs(const ScoreMatrix& scores, const DistanceMatrix& sim,
                             bool include_diagonal) {
  std::vector<std::string> a = scores.languages();
  std::vector<std::string> b = sim.languages();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw Error(ErrorCode::LanguageSetMismatch,
                "score languages {" + join_codes(scores.languages()) + "} vs similarity languages {" +
                    join_codes(sim.languages()) + "}");
  }

  BuildPairsResult result;
  const auto& langs = scores.languages();
  for (const std::string& source : langs) {
    for (const std::string& target : langs) {
      if (!include_diagonal && source == target) continue;
      auto x = similarity_lookup(sim, source, target);
      if (!x.has_value()) {
        ++result.excluded_missing;
        continue;
      }
      result.sample.add(*x, scores.cell(source, target),
                        PairLabel{source, target, to_string(scores.task()),
                                  to_string(scores.model())});
    }
  }
  return result;
}

StudyReport correlation_study(std::span<const ScoreMatrix> scores,
                              std::span<const DistanceMatrix> sims, bool include_diagonal) {
  StudyReport report;
  for (const ScoreMatrix& sc : scores) {
    for (const DistanceMatrix& sim : sims) {
      BuildPairsResult pairs = build_pairs(sc, sim, include_diagonal);
      StudyRow row;
      row.task = sc.task();
      row.model = sc.model();
      row.sim_provenance = sim.provenance();
      row.include_diagonal = include_diagonal;
      row.n = static_cast<int>(pairs.sample.size());
      row.excluded = pairs.excluded_missing;
      row.pearson = pearson(pairs.sample);
      row.spearman = spearman(pairs.sample);
      report.rows.push_back(std::move(row));
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const StudyRow& a, const StudyRow& b) {
    if (a.task != b.task) return static_cast<int>(a.task) < static_cast<int>(b.task);
    if (a.model != b.model) return static_cast<int>(a.model) < static_cast<int>(b.model);
    return a.sim_provenance < b.sim_provenance;
  });
  return report;
}

EnglishVsBestResult english_vs_best(std::span<const ScoreMatrix> scores,
                                    const std::string& reference) {
  std::vector<const ScoreMatrix*> ordered;
  for (const ScoreMatrix& m : scores) {
    if (!m.contains(reference)) {
      throw Error(ErrorCode::UnknownLanguage, "reference '" + reference + "' missing from " +
                                                  m.provenance());
    }
    ordered.push_back(&m);
  }
  std::sort(ordered.begin(), ordered.end(), [](const ScoreMatrix* a, const ScoreMatrix* b) {
    if (a->task() != b->task()) return static_cast<int>(a->task()) < static_cast<int>(b->task());
    return static_cast<int>(a->model()) < static_cast<int>(b->model());
  });

  EnglishVsBestResult result;
  result.reference = reference;
  std::vector<double> diffs;
  for (const ScoreMatrix* m : ordered) {
    for (const std::string& target : m->languages()) {
      if (target == reference) continue;
      EnglishVsBestCell cell;
      cell.task = m->task();
      cell.model = m->model();
      cell.target = target;
      cell.reference_score = m->cell(reference, target);
      // best zero-shot source: the monolingual source == target cell is out
      bool first = true;
      for (const std::string& source : m->languages()) {
        if (source == target) continue;
        double s = m->cell(source, target);
        if (first || s > cell.best_score) {
          cell.best_score = s;
          cell.best_source = source;
          first = false;
        }
      }
      cell.diff = cell.reference_score - cell.best_score;
      diffs.push_back(cell.diff);
      result.cells.push_back(std::move(cell));
    }
  }
  result.test = paired_z_test(diffs);
  return result;
}

std::string report_to_csv(const StudyReport& report) {
  std::string out = "task,model,metric,mode,method,rho,p,n\n";
  for (const StudyRow& row : report.rows) {
    for (const CorrelationResult* r : {&row.pearson, &row.spearman}) {
      csv::Row fields = {
          to_string(row.task),
          to_string(row.model),
          row.sim_provenance,
          diagonal_mode_name(row.include_diagonal),
          to_string(r->method),
          format_fixed3(r->rho),
          format_fixed3(r->p_value),
          std::to_string(r->n),
      };
      out += csv::join_row(fields) + "\n";
    }
  }
  return out;
}

std::string report_to_json(const StudyReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const StudyRow& row : report.rows) {
    for (const CorrelationResult* r : {&row.pearson, &row.spearman}) {
      rows.push_back({
          {"task", to_string(row.task)},
          {"model", to_string(row.model)},
          {"metric", row.sim_provenance},
          {"mode", diagonal_mode_name(row.include_diagonal)},
          {"method", to_string(r->method)},
          {"rho", round3(r->rho)},
          {"p", round3(r->p_value)},
          {"n", r->n},
      });
    }
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

namespace {

struct ParsedCell {
  Task task;
  Model model;
  std::string metric;
  bool include_diagonal;
  CorrelationMethod method;
  double rho;
  double p;
  int n;
};

StudyReport assemble_report(const std::vector<ParsedCell>& cells) {
  StudyReport report;
  for (const ParsedCell& c : cells) {
    StudyRow* row = nullptr;
    if (!report.rows.empty()) {
      StudyRow& last = report.rows.back();
      if (last.task == c.task && last.model == c.model && last.sim_provenance == c.metric &&
          last.include_diagonal == c.include_diagonal) {
        row = &last;
      }
    }
    if (row == nullptr) {
      StudyRow fresh;
      fresh.task = c.task;
      fresh.model = c.model;
      fresh.sim_provenance = c.metric;
      fresh.include_diagonal = c.include_diagonal;
      fresh.n = c.n;
      report.rows.push_back(std::move(fresh));
      row = &report.rows.back();
    }
    CorrelationResult r;
    r.method = c.method;
    r.rho = c.rho;
    r.p_value = c.p;
    r.n = c.n;
    r.df = c.n - 2;
    (c.method == CorrelationMethod::pearson ? row->pearson : row->spearman) = r;
  }
  return report;
}

bool mode_from_string(const std::string& s) {
  if (s == "full") return true;
  if (s == "zero-shot") return false;
  throw Error(ErrorCode::UnparseableCell, "mode must be 'full' or 'zero-shot', got '" + s + "'");
}

CorrelationMethod method_from_string(const std::string& s) {
  if (s == "pearson") return CorrelationMethod::pearson;
  if (s == "spearman") return CorrelationMethod::spearman;
  throw Error(ErrorCode::UnparseableCell, "method must be pearson or spearman, got '" + s + "'");
}

}  // namespace

StudyReport report_from_csv(const std::string& text) {
  auto rows = csv::parse(text);
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyFile, "report CSV has no header");
  }
  std::vector<ParsedCell> cells;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 8) {
      throw Error(ErrorCode::UnparseableCell,
                  "report line " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                      " fields, expected 8");
    }
    ParsedCell c{task_from_string(r[0]), model_from_string(r[1]), r[2], mode_from_string(r[3]),
                 method_from_string(r[4]), std::stod(r[5]), std::stod(r[6]), std::stoi(r[7])};
    cells.push_back(std::move(c));
  }
  return assemble_report(cells);
}

StudyReport report_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<ParsedCell> cells;
  for (const auto& item : doc.at("rows")) {
    ParsedCell c{task_from_string(item.at("task").get<std::string>()),
                 model_from_string(item.at("model").get<std::string>()),
                 item.at("metric").get<std::string>(),
                 mode_from_string(item.at("mode").get<std::string>()),
                 method_from_string(item.at("method").get<std::string>()),
                 item.at("rho").get<double>(),
                 item.at("p").get<double>(),
                 item.at("n").get<int>()};
    cells.push_back(std::move(c));
  }
  return assemble_report(cells);
}

std::string ztest_to_json(const EnglishVsBestResult& result) {
  nlohmann::ordered_json doc;
  doc["reference"] = result.reference;
  doc["z"] = round3(result.test.z);
  doc["p"] = round3(result.test.p_value);
  doc["n"] = result.test.n;
  doc["mean_diff"] = result.test.mean_diff;
  doc["sd_diff"] = result.test.sd_diff;
  return doc.dump(2) + "\n";
}

std::string ztest_audit_to_csv(const EnglishVsBestResult& result) {
  std::string out = "task,model,target,reference_score,best_source,best_score,diff\n";
  for (const EnglishVsBestCell& cell : result.cells) {
    csv::Row fields = {
        to_string(cell.task),
        to_string(cell.model),
        cell.target,
        format_double(cell.reference_score),
        cell.best_source,
        format_double(cell.best_score),
        format_double(cell.diff),
    };
    out += csv::join_row(fields) + "\n";
  }
  return out;
}

}  // namespace langsim
