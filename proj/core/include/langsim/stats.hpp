#pragma once

#include <span>
#include <string>
#include <vector>

namespace langsim {

struct PairLabel {
  std::string source;
  std::string target;
  std::string task;
  std::string model;

  bool operator==(const PairLabel&) const = default;
};

/// Flat list of (x, y) observations with optional pairing metadata.
class PairedSample {
 public:
  void add(double x, double y, PairLabel label = {});

  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  const std::vector<PairLabel>& labels() const { return labels_; }
  std::size_t size() const { return xs_.size(); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<PairLabel> labels_;
};

enum class CorrelationMethod { pearson, spearman };

const char* to_string(CorrelationMethod method) noexcept;

struct CorrelationResult {
  CorrelationMethod method = CorrelationMethod::pearson;
  double rho = 0.0;
  double p_value = 1.0;
  int n = 0;
  int df = 0;  // n - 2
};

struct ZTestResult {
  double z = 0.0;
  double p_value = 1.0;
  int n = 0;
  double mean_diff = 0.0;
  double sd_diff = 0.0;
};

/// Rank 1 = smallest; ties get the mean of the rank positions they span,
/// so the ranks always sum to n(n+1)/2 exactly.
std::vector<double> fractional_ranks(std::span<const double> xs);

CorrelationResult pearson(const PairedSample& sample);

/// Pearson correlation of the fractional ranks, p-value via the same
/// t-transform.
CorrelationResult spearman(const PairedSample& sample);

/// Two-tailed p for Student's t: I_x(df/2, 1/2) with x = df/(df + t^2),
/// evaluated by a Lentz continued fraction. Absolute error below 1e-8.
double student_t_two_tailed_p(double t, int df);

/// z = mean(d) / (sd_sample(d) / sqrt(n)), two-tailed normal p.
ZTestResult paired_z_test(std::span<const double> diffs);

namespace detail {

/// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace detail

}  // namespace langsim
