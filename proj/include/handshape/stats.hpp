#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "handshape/errors.hpp"
#include "handshape/types.hpp"

namespace handshape {

/// Arithmetic mean of the values sharing a key.
template <typename Key>
std::map<Key, double> mean_by_key(std::span<const std::pair<Key, double>> samples) {
  std::map<Key, double> sums;
  std::map<Key, int> counts;
  for (const auto& [key, value] : samples) {
    sums[key] += value;
    counts[key] += 1;
  }
  for (auto& [key, sum] : sums) sum /= counts[key];
  return sums;
}

/// How per-letter-pair handshape distance is aggregated across samples.
enum class HdAggregation { CrossProduct, MeanVector };

/// Mean handshape distance between two letters' samples. CrossProduct
/// averages HD over every sample pair; MeanVector first averages each
/// letter's angle vectors and takes a single HD.
double mean_pair_distance(const std::map<char, std::vector<AngleVectord>>& samples_by_letter,
                          char a, char b,
                          HdAggregation aggregation = HdAggregation::CrossProduct);

/// Pearson correlation with a two-sided p-value from the Student-t
/// distribution (df = n - 2). Requires n >= 3 and nonzero variance in both
/// series; |r| = 1 yields p = 0.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

/// First-order partial correlation of x and y controlling for z, p-value
/// with df = n - 3. Requires n >= 4; a control perfectly correlated with
/// either series raises DegenerateControl.
CorrelationResult partial_correlation(std::span<const double> x,
                                      std::span<const double> y,
                                      std::span<const double> z);

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation, absolute accuracy around 1e-14 for the arguments used here.
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of the Student-t distribution with df degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-sided tail probability P(|T| >= |t|) for df degrees of freedom.
double two_sided_t_p_value(double t, double df);

/// Two-sided p-value of a Pearson coefficient r over n observations.
double pearson_p_value(double r, int n);

}  // namespace handshape
