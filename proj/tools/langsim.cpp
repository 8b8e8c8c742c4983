// Command line surface for the language-similarity toolkit: compute the
// quantified typology distance matrix, average per-category distances,
// rank transfer sources for a target, and reproduce the correlation and
// z-test study from bundled or user-supplied matrices.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "langsim/csv.hpp"
#include "langsim/error.hpp"
#include "langsim/evaluation.hpp"
#include "langsim/matrix.hpp"
#include "langsim/metrics.hpp"
#include "langsim/scores.hpp"
#include "langsim/selection.hpp"
#include "langsim/svg.hpp"
#include "langsim/typology.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

fs::path fixtures_dir() {
  if (const char* env = std::getenv("LANGSIM_FIXTURES")) {
    return fs::path(env);
  }
  return fs::path(LANGSIM_DEFAULT_DATA_DIR);
}

std::vector<fs::path> csv_files_in(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw langsim::Error(langsim::ErrorCode::IoFailure, dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw langsim::Error(langsim::ErrorCode::EmptyFile, "no .csv files in " + dir.string());
  }
  return files;
}

std::vector<langsim::ScoreMatrix> load_scores_dir(const fs::path& dir) {
  std::vector<langsim::ScoreMatrix> out;
  for (const auto& p : csv_files_in(dir)) out.push_back(langsim::load_score_matrix(p));
  return out;
}

std::vector<langsim::DistanceMatrix> load_sims_dir(const fs::path& dir) {
  std::vector<langsim::DistanceMatrix> out;
  for (const auto& p : csv_files_in(dir)) out.push_back(langsim::load_matrix_csv(p));
  return out;
}

std::vector<std::string> split_commas(const std::string& raw) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t sep = raw.find(',', start);
    std::string part =
        raw.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (!part.empty()) out.push_back(part);
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return out;
}

std::string sanitize_tag(const std::string& tag) {
  std::string out;
  for (char c : tag) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
  }
  return out;
}

fs::path sibling_with_suffix(const fs::path& out, const std::string& suffix,
                             const std::string& ext) {
  fs::path p = out;
  p.replace_extension("");
  p += suffix;
  p += ext;
  return p;
}

void emit(const fs::path& out, const std::string& content) {
  if (out.empty() || out == "-") {
    std::cout << content;
  } else {
    langsim::csv::write_file_atomic(out, content);
  }
}

// ---- wals-matrix -------------------------------------------------------

struct WalsMatrixArgs {
  std::string languages_path;
  std::string features_path;
  std::string values_path;
  std::string langs;
  std::string mode = "mean-abs";
  std::string snapshot;
  std::string out;
};

int cmd_wals_matrix(const WalsMatrixArgs& args) {
  auto catalog = langsim::load_languages(args.languages_path);
  auto features = langsim::load_features(args.features_path);
  auto loaded = langsim::load_values(args.values_path, catalog, features);

  std::vector<std::string> subset =
      args.langs.empty() ? catalog.codes() : split_commas(args.langs);
  for (const auto& code : subset) {
    catalog.at(code);  // unknown codes fail before any work
  }
  langsim::WalsMode mode = langsim::wals_mode_from_string(args.mode);
  auto result = langsim::wals_distance_matrix(loaded.table, features, subset, mode);

  std::string snapshot =
      args.snapshot.empty() ? fs::path(args.values_path).stem().string() : args.snapshot;
  result.distances.set_metadata("snapshot", snapshot);
  result.shared_counts.set_metadata("snapshot", snapshot);

  emit(args.out, langsim::serialize_matrix(result.distances));
  fs::path counts_path = sibling_with_suffix(args.out, "_counts", ".csv");
  langsim::csv::write_file_atomic(counts_path, langsim::serialize_matrix(result.shared_counts));

  if (loaded.skipped_blank > 0) {
    std::cerr << "note: skipped " << loaded.skipped_blank << " blank value rows\n";
  }
  if (result.any_sparse) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        auto c = result.shared_counts.cell(i, j);
        if (c.has_value() && *c < langsim::kSparseOverlapThreshold) {
          std::cerr << "warning: " << subset[i] << "-" << subset[j] << " share only "
                    << static_cast<int>(*c) << " features\n";
        }
      }
    }
  }
  return 0;
}

// ---- lang2vec-avg ------------------------------------------------------

struct Lang2vecArgs {
  std::string pairs_path;
  std::string policy = "strict";
  std::string out;
};

int cmd_lang2vec_avg(const Lang2vecArgs& args) {
  auto table = langsim::load_category_distances(args.pairs_path);
  auto policy = langsim::lang2vec_policy_from_string(args.policy);
  auto matrix = langsim::lang2vec_distance_matrix(table, policy);
  emit(args.out, langsim::serialize_matrix(matrix));
  return 0;
}

// ---- rank --------------------------------------------------------------

struct RankArgs {
  std::string matrix_path;
  std::string target;
  std::string format = "csv";
  bool tie_audit = false;
  std::string out;
};

std::vector<std::vector<std::string>> tie_groups(const langsim::RankedList& list) {
  std::vector<std::vector<std::string>> groups;
  std::size_t i = 0;
  while (i < list.entries.size()) {
    std::size_t j = i;
    while (j + 1 < list.entries.size() &&
           list.entries[j + 1].value == list.entries[i].value) {
      ++j;
    }
    if (j > i) {
      std::vector<std::string> group;
      for (std::size_t k = i; k <= j; ++k) group.push_back(list.entries[k].source);
      groups.push_back(std::move(group));
    }
    i = j + 1;
  }
  return groups;
}

int cmd_rank(const RankArgs& args) {
  auto matrix = langsim::load_matrix_csv(args.matrix_path);
  if (!matrix.contains(args.target)) {
    std::string codes;
    for (const auto& c : matrix.languages()) codes += " " + c;
    std::cerr << "error: target '" << args.target << "' is not in the matrix; valid codes:"
              << codes << "\n";
    return 1;
  }
  auto list = langsim::rank_sources(matrix, args.target, matrix.languages());
  auto groups = args.tie_audit ? tie_groups(list) : std::vector<std::vector<std::string>>{};

  std::string content;
  if (args.format == "csv") {
    content = "rank,source,value,note\n";
    for (const auto& e : list.entries) {
      std::string note;
      for (const auto& g : groups) {
        if (std::find(g.begin(), g.end(), e.source) != g.end()) note = "tied";
      }
      content += std::to_string(e.rank) + "," + e.source + "," + langsim::format_double(e.value) +
                 "," + note + "\n";
    }
    for (const auto& x : list.excluded) {
      content += "," + x.source + ",," + x.reason + "\n";
    }
  } else {
    ordered_json doc;
    doc["target"] = list.target;
    doc["metric"] = list.metric_provenance;
    doc["direction"] = langsim::to_string(list.direction);
    doc["entries"] = ordered_json::array();
    for (const auto& e : list.entries) {
      doc["entries"].push_back({{"rank", e.rank}, {"source", e.source}, {"value", e.value}});
    }
    doc["excluded"] = ordered_json::array();
    for (const auto& x : list.excluded) {
      doc["excluded"].push_back({{"source", x.source}, {"reason", x.reason}});
    }
    if (args.tie_audit) {
      doc["tie_groups"] = groups;
    }
    content = doc.dump(2) + "\n";
  }
  emit(args.out, content);
  return 0;
}

// ---- correlate ---------------------------------------------------------

struct CorrelateArgs {
  std::string scores_dir;
  std::string sims_dir;
  std::string diagonal = "include";
  std::string format = "csv";
  std::string out;
};

void write_scatter_plots(const fs::path& out, std::span<const langsim::ScoreMatrix> scores,
                         std::span<const langsim::DistanceMatrix> sims, bool include_diagonal) {
  for (const auto& sc : scores) {
    for (const auto& sim : sims) {
      auto pairs = langsim::build_pairs(sc, sim, include_diagonal);
      langsim::ScatterOptions options;
      options.title = std::string(langsim::to_string(sc.task())) + "/" +
                      langsim::to_string(sc.model()) + " vs " + sim.provenance() + " (" +
                      langsim::diagonal_mode_name(include_diagonal) + ")";
      options.x_label = sim.provenance();
      options.y_label = std::string(langsim::to_string(sc.task())) + "/" +
                        langsim::to_string(sc.model()) + " " + sc.metric_name();
      std::string name = std::string("_") + langsim::to_string(sc.task()) + "_" +
                         langsim::to_string(sc.model()) + "_" + sanitize_tag(sim.provenance());
      fs::path svg_path = sibling_with_suffix(out, name, ".svg");
      langsim::csv::write_file_atomic(svg_path, langsim::scatter_svg(pairs.sample, options));
    }
  }
}

int cmd_correlate(const CorrelateArgs& args) {
  auto scores = load_scores_dir(args.scores_dir.empty() ? fixtures_dir() / "scores"
                                                        : fs::path(args.scores_dir));
  auto sims =
      load_sims_dir(args.sims_dir.empty() ? fixtures_dir() / "sims" : fs::path(args.sims_dir));
  bool include_diagonal = args.diagonal == "include";
  auto report = langsim::correlation_study(scores, sims, include_diagonal);

  if (args.format == "json") {
    emit(args.out, langsim::report_to_json(report));
  } else {
    emit(args.out, langsim::report_to_csv(report));
  }
  if (args.format == "svg") {
    write_scatter_plots(args.out, scores, sims, include_diagonal);
  }
  return 0;
}

// ---- ztest -------------------------------------------------------------

struct ZtestArgs {
  std::string scores_dir;
  std::string reference = "eng";
  std::string out;
};

int cmd_ztest(const ZtestArgs& args) {
  auto scores = load_scores_dir(args.scores_dir.empty() ? fixtures_dir() / "scores"
                                                        : fs::path(args.scores_dir));
  auto result = langsim::english_vs_best(scores, args.reference);
  emit(args.out, langsim::ztest_to_json(result));
  fs::path audit_path = sibling_with_suffix(args.out, "_diffs", ".csv");
  langsim::csv::write_file_atomic(audit_path, langsim::ztest_audit_to_csv(result));
  return 0;
}

// ---- report ------------------------------------------------------------

struct ReportArgs {
  std::string scores_dir;
  std::string sims_dir;
  std::string reference = "eng";
  std::string out;
};

int cmd_report(const ReportArgs& args) {
  auto scores = load_scores_dir(args.scores_dir.empty() ? fixtures_dir() / "scores"
                                                        : fs::path(args.scores_dir));
  auto sims =
      load_sims_dir(args.sims_dir.empty() ? fixtures_dir() / "sims" : fs::path(args.sims_dir));

  ordered_json doc;
  for (bool include_diagonal : {true, false}) {
    auto report = langsim::correlation_study(scores, sims, include_diagonal);
    auto parsed = ordered_json::parse(langsim::report_to_json(report));
    doc[langsim::diagonal_mode_name(include_diagonal)] = parsed.at("rows");
  }
  auto ztest = langsim::english_vs_best(scores, args.reference);
  doc["ztest"] = ordered_json::parse(langsim::ztest_to_json(ztest));
  emit(args.out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linguistic distance metrics and transfer-language selection toolkit"};
  app.require_subcommand(1);

  fs::path fx = fixtures_dir();

  WalsMatrixArgs wals_args;
  wals_args.languages_path = (fx / "wals" / "languages.csv").string();
  wals_args.features_path = (fx / "wals" / "features.csv").string();
  wals_args.values_path = (fx / "wals" / "values.csv").string();
  auto* wals_cmd = app.add_subcommand(
      "wals-matrix", "Compute the quantified typology distance matrix for a language set");
  wals_cmd->add_option("--languages", wals_args.languages_path, "Language catalog CSV")
      ->capture_default_str();
  wals_cmd->add_option("--features", wals_args.features_path, "Feature catalog CSV")
      ->capture_default_str();
  wals_cmd->add_option("--values", wals_args.values_path, "Long-format value table CSV")
      ->capture_default_str();
  wals_cmd->add_option("--langs", wals_args.langs,
                       "Comma-separated language subset (default: whole catalog)");
  wals_cmd->add_option("--mode", wals_args.mode, "Averaging mode")
      ->check(CLI::IsMember({"mean-abs", "rms"}))
      ->capture_default_str();
  wals_cmd->add_option("--snapshot", wals_args.snapshot,
                       "Snapshot identifier recorded in the output (default: values file stem)");
  wals_cmd->add_option("--out", wals_args.out, "Output matrix CSV path")->required();

  Lang2vecArgs l2v_args;
  l2v_args.pairs_path = (fx / "lang2vec" / "categories.csv").string();
  auto* l2v_cmd = app.add_subcommand(
      "lang2vec-avg", "Average six per-category distances into a distance matrix");
  l2v_cmd->add_option("--pairs", l2v_args.pairs_path, "Per-pair category distance CSV")
      ->capture_default_str();
  l2v_cmd->add_option("--lang2vec-policy", l2v_args.policy, "Missing-category policy")
      ->check(CLI::IsMember({"strict", "allow-partial"}))
      ->capture_default_str();
  l2v_cmd->add_option("--out", l2v_args.out, "Output matrix CSV path")->required();

  RankArgs rank_args;
  auto* rank_cmd =
      app.add_subcommand("rank", "Rank candidate source languages for a transfer target");
  rank_cmd->add_option("--matrix", rank_args.matrix_path, "Similarity or distance matrix CSV")
      ->required();
  rank_cmd->add_option("--target", rank_args.target, "Transfer target language code")->required();
  rank_cmd->add_option("--format", rank_args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  rank_cmd->add_flag("--tie-audit", rank_args.tie_audit, "Report groups of tied candidates");
  rank_cmd->add_option("--out", rank_args.out, "Output path (default: stdout)");

  CorrelateArgs corr_args;
  auto* corr_cmd = app.add_subcommand(
      "correlate", "Correlate transfer scores against similarity matrices");
  corr_cmd->add_option("--scores-dir", corr_args.scores_dir, "Directory of score matrix CSVs")
      ->capture_default_str();
  corr_cmd->add_option("--sims-dir", corr_args.sims_dir, "Directory of similarity matrix CSVs")
      ->capture_default_str();
  corr_cmd->add_option("--diagonal", corr_args.diagonal, "Keep or drop source==target cells")
      ->check(CLI::IsMember({"include", "exclude"}))
      ->capture_default_str();
  corr_cmd->add_option("--format", corr_args.format, "csv, json, or csv plus svg scatter plots")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  corr_cmd->add_option("--out", corr_args.out, "Report output path")->required();

  ZtestArgs ztest_args;
  auto* ztest_cmd = app.add_subcommand(
      "ztest", "Paired z-test of a reference source against the per-target best");
  ztest_cmd->add_option("--scores-dir", ztest_args.scores_dir, "Directory of score matrix CSVs")
      ->capture_default_str();
  ztest_cmd->add_option("--reference", ztest_args.reference, "Reference source language")
      ->capture_default_str();
  ztest_cmd->add_option("--out", ztest_args.out, "Result JSON path")->required();

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand(
      "report", "Full study document: correlations in both modes plus the z-test");
  report_cmd->add_option("--scores-dir", report_args.scores_dir, "Directory of score matrix CSVs")
      ->capture_default_str();
  report_cmd->add_option("--sims-dir", report_args.sims_dir,
                         "Directory of similarity matrix CSVs")
      ->capture_default_str();
  report_cmd->add_option("--reference", report_args.reference, "Reference source language")
      ->capture_default_str();
  report_cmd->add_option("--out", report_args.out, "Study JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (wals_cmd->parsed()) return cmd_wals_matrix(wals_args);
    if (l2v_cmd->parsed()) return cmd_lang2vec_avg(l2v_args);
    if (rank_cmd->parsed()) return cmd_rank(rank_args);
    if (corr_cmd->parsed()) return cmd_correlate(corr_args);
    if (ztest_cmd->parsed()) return cmd_ztest(ztest_args);
    if (report_cmd->parsed()) return cmd_report(report_args);
  } catch (const langsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
