#include "langsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "langsim/error.hpp"

namespace langsim {

void PairedSample::add(double x, double y, PairLabel label) {
  xs_.push_back(x);
  ys_.push_back(y);
  labels_.push_back(std::move(label));
}

const char* to_string(CorrelationMethod method) noexcept {
  return method == CorrelationMethod::pearson ? "pearson" : "spearman";
}

std::vector<double> fractional_ranks(std::span<const double> xs) {
  if (xs.empty()) {
    throw Error(ErrorCode::TooFewPoints, "cannot rank an empty list");
  }
  for (double v : xs) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteValue, "ranking requires finite values");
    }
  }
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    // positions i..j (0-based) share the mean of ranks i+1..j+1
    double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

namespace {

struct Moments {
  double cov = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
};

Moments central_moments(std::span<const double> xs, std::span<const double> ys) {
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  Moments m;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    m.cov += dx * dy;
    m.var_x += dx * dx;
    m.var_y += dy * dy;
  }
  return m;
}

CorrelationResult correlate(std::span<const double> xs, std::span<const double> ys,
                            CorrelationMethod method) {
  std::size_t n = xs.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewPoints,
                std::string(to_string(method)) + " needs at least 3 points, got " + std::to_string(n));
  }
  Moments m = central_moments(xs, ys);
  if (m.var_x == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "x coordinate is constant");
  }
  if (m.var_y == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "y coordinate is constant");
  }
  double rho = m.cov / std::sqrt(m.var_x * m.var_y);
  rho = std::clamp(rho, -1.0, 1.0);

  CorrelationResult result;
  result.method = method;
  result.rho = rho;
  result.n = static_cast<int>(n);
  result.df = static_cast<int>(n) - 2;
  double denom = 1.0 - rho * rho;
  if (denom <= 0.0) {
    result.p_value = 0.0;
  } else {
    double t = rho * std::sqrt(static_cast<double>(result.df) / denom);
    result.p_value = student_t_two_tailed_p(t, result.df);
  }
  return result;
}

}  // namespace

CorrelationResult pearson(const PairedSample& sample) {
  return correlate(sample.xs(), sample.ys(), CorrelationMethod::pearson);
}

CorrelationResult spearman(const PairedSample& sample) {
  if (sample.size() < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "spearman needs at least 3 points, got " + std::to_string(sample.size()));
  }
  std::vector<double> rx = fractional_ranks(sample.xs());
  std::vector<double> ry = fractional_ranks(sample.ys());
  return correlate(rx, ry, CorrelationMethod::spearman);
}

namespace detail {

namespace {

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kEps = 1e-10;
  constexpr double kTiny = 1e-30;
  constexpr int kMaxIter = 500;

  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw Error(ErrorCode::NonFiniteValue, "incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_prefactor = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  double prefactor = std::exp(ln_prefactor);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return prefactor * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - prefactor * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace detail

double student_t_two_tailed_p(double t, int df) {
  if (df < 1) {
    throw Error(ErrorCode::InvalidDegreesOfFreedom,
                "degrees of freedom must be >= 1, got " + std::to_string(df));
  }
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::NonFiniteValue, "t statistic must be finite");
  }
  if (t == 0.0) return 1.0;
  double nu = static_cast<double>(df);
  double x = nu / (nu + t * t);
  return detail::regularized_incomplete_beta(nu / 2.0, 0.5, x);
}

ZTestResult paired_z_test(std::span<const double> diffs) {
  std::size_t n = diffs.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewPoints,
                "paired z-test needs at least 2 differences, got " + std::to_string(n));
  }
  for (double d : diffs) {
    if (!std::isfinite(d)) {
      throw Error(ErrorCode::NonFiniteValue, "differences must be finite");
    }
  }
  double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double d : diffs) {
    double dd = d - mean;
    ss += dd * dd;
  }
  double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "all differences are identical");
  }
  ZTestResult result;
  result.n = static_cast<int>(n);
  result.mean_diff = mean;
  result.sd_diff = sd;
  result.z = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.p_value = std::erfc(std::fabs(result.z) / std::sqrt(2.0));
  return result;
}

}  // namespace langsim
