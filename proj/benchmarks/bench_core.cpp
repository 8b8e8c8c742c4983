#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "langsim/evaluation.hpp"
#include "langsim/matrix.hpp"
#include "langsim/metrics.hpp"
#include "langsim/scores.hpp"
#include "langsim/stats.hpp"
#include "langsim/typology.hpp"

namespace {

const std::filesystem::path kData = LANGSIM_BENCH_DATA_DIR;

langsim::PairedSample random_sample(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  langsim::PairedSample s;
  for (int i = 0; i < n; ++i) s.add(gauss(rng), gauss(rng));
  return s;
}

void BM_pearson(benchmark::State& state) {
  auto s = random_sample(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(langsim::pearson(s));
  }
}
BENCHMARK(BM_pearson)->Arg(56)->Arg(1000);

void BM_spearman(benchmark::State& state) {
  auto s = random_sample(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(langsim::spearman(s));
  }
}
BENCHMARK(BM_spearman)->Arg(56)->Arg(1000);

void BM_fractional_ranks(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coarse(0, 9);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (auto& x : xs) x = coarse(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(langsim::fractional_ranks(xs));
  }
}
BENCHMARK(BM_fractional_ranks)->Arg(56)->Arg(4096);

void BM_student_t_p(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 0.001;
    if (t > 10.0) t = 0.0;
    benchmark::DoNotOptimize(langsim::student_t_two_tailed_p(t, 54));
  }
}
BENCHMARK(BM_student_t_p);

void BM_wals_matrix(benchmark::State& state) {
  auto languages = langsim::load_languages(kData / "wals" / "languages.csv");
  auto features = langsim::load_features(kData / "wals" / "features.csv");
  auto loaded = langsim::load_values(kData / "wals" / "values.csv", languages, features);
  auto codes = languages.codes();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        langsim::wals_distance_matrix(loaded.table, features, codes, langsim::WalsMode::mean_abs));
  }
}
BENCHMARK(BM_wals_matrix);

void BM_correlation_study(benchmark::State& state) {
  std::vector<langsim::ScoreMatrix> scores;
  for (const char* name : {"sentiment_mbert.csv", "sentiment_xlmr.csv", "ner_mbert.csv",
                           "ner_xlmr.csv", "dep_mbert.csv", "dep_xlmr.csv"}) {
    scores.push_back(langsim::load_score_matrix(kData / "scores" / name));
  }
  std::vector<langsim::DistanceMatrix> sims;
  for (const char* name : {"elinguistics.csv", "ezglot.csv", "lang2vec.csv", "wals.csv"}) {
    sims.push_back(langsim::load_matrix_csv(kData / "sims" / name));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(langsim::correlation_study(scores, sims, false));
  }
}
BENCHMARK(BM_correlation_study);

}  // namespace

BENCHMARK_MAIN();
