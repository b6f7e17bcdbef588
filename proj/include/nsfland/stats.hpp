#pragma once

#include <span>

namespace nsfland {

struct KsResult {
  double statistic = 0.0;  ///< D = sup |F_a - F_b|
  double p_value = 1.0;
};

/// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
/// Q(D (sqrt(ne) + 0.12 + 0.11 / sqrt(ne))), ne = |a| |b| / (|a| + |b|).
/// Throws DomainError if either sample is empty.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Quantile at probability p by linear interpolation of order statistics at
/// rank (k - 1) p. `sorted` must be ascending and non-empty.
double interpolated_quantile(std::span<const double> sorted, double p);

/// Throws DomainError on an empty sample.
FiveNumberSummary five_number_summary(std::span<const double> sample);

double sample_mean(std::span<const double> sample);

}  // namespace nsfland
