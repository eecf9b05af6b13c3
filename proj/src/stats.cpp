#include "handshape/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Core>

#include "handshape/kinematics.hpp"

namespace handshape {

namespace {

constexpr double kDegenerateControlTol = 1e-12;

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 3e-15;
  constexpr int kMaxIterations = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

struct Moments {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
};

Moments centered_moments(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Map<const Eigen::VectorXd> vx(x.data(), n);
  const Eigen::Map<const Eigen::VectorXd> vy(y.data(), n);
  Moments m;
  m.mean_x = vx.mean();
  m.mean_y = vy.mean();
  const Eigen::ArrayXd dx = vx.array() - m.mean_x;
  const Eigen::ArrayXd dy = vy.array() - m.mean_y;
  m.sxx = (dx * dx).sum();
  m.syy = (dy * dy).sum();
  m.sxy = (dx * dy).sum();
  return m;
}

// r only, with the shared validation; normalization cancels in the ratio.
double correlation_coefficient(std::span<const double> x, std::span<const double> y) {
  const Moments m = centered_moments(x, y);
  if (m.sxx == 0.0 || m.syy == 0.0) {
    throw ZeroVariance("correlation requires nonzero variance in both series");
  }
  return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_prefix = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
  const double prefix = std::exp(log_prefix);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return prefix * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - prefix * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
  return t >= 0.0 ? 1.0 - tail : tail;
}

double two_sided_t_p_value(double t, double df) {
  return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double pearson_p_value(double r, int n) {
  const double df = n - 2;
  const double denom = 1.0 - r * r;
  if (denom <= 0.0) return 0.0;
  const double t = r * std::sqrt(df / denom);
  return two_sided_t_p_value(t, df);
}

double mean_pair_distance(
    const std::map<char, std::vector<AngleVectord>>& samples_by_letter, char a,
    char b, HdAggregation aggregation) {
  const auto ia = samples_by_letter.find(a);
  const auto ib = samples_by_letter.find(b);
  if (ia == samples_by_letter.end() || ia->second.empty()) {
    throw MissingLetter(std::string("no samples for letter '") + a + "'");
  }
  if (ib == samples_by_letter.end() || ib->second.empty()) {
    throw MissingLetter(std::string("no samples for letter '") + b + "'");
  }
  const auto& sa = ia->second;
  const auto& sb = ib->second;

  if (aggregation == HdAggregation::MeanVector) {
    AngleVectord ma = AngleVectord::Zero();
    AngleVectord mb = AngleVectord::Zero();
    for (const auto& h : sa) ma += h;
    for (const auto& h : sb) mb += h;
    ma /= static_cast<double>(sa.size());
    mb /= static_cast<double>(sb.size());
    return handshape_distance(ma, mb);
  }

  double sum = 0.0;
  for (const auto& ha : sa) {
    for (const auto& hb : sb) sum += handshape_distance(ha, hb);
  }
  return sum / (static_cast<double>(sa.size()) * static_cast<double>(sb.size()));
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("pearson: series lengths differ");
  }
  if (x.size() < 3) {
    throw TooFewPoints("pearson needs at least 3 paired observations, got " +
                       std::to_string(x.size()));
  }
  const double r = correlation_coefficient(x, y);
  const int n = static_cast<int>(x.size());
  return CorrelationResult{r, pearson_p_value(r, n), n};
}

CorrelationResult partial_correlation(std::span<const double> x,
                                      std::span<const double> y,
                                      std::span<const double> z) {
  if (x.size() != y.size() || x.size() != z.size()) {
    throw std::invalid_argument("partial_correlation: series lengths differ");
  }
  if (x.size() < 4) {
    throw TooFewPoints("partial correlation needs at least 4 observations, got " +
                       std::to_string(x.size()));
  }
  const double r_xy = correlation_coefficient(x, y);
  const double r_xz = correlation_coefficient(x, z);
  const double r_yz = correlation_coefficient(y, z);
  if (std::abs(r_xz) >= 1.0 - kDegenerateControlTol ||
      std::abs(r_yz) >= 1.0 - kDegenerateControlTol) {
    throw DegenerateControl("control variable is perfectly correlated with a series");
  }

  const double r = std::clamp(
      (r_xy - r_xz * r_yz) / std::sqrt((1.0 - r_xz * r_xz) * (1.0 - r_yz * r_yz)),
      -1.0, 1.0);
  const int n = static_cast<int>(x.size());
  const double df = n - 3;
  const double denom = 1.0 - r * r;
  const double p =
      denom <= 0.0 ? 0.0 : two_sided_t_p_value(r * std::sqrt(df / denom), df);
  return CorrelationResult{r, p, n};
}

}  // namespace handshape
