#include "nsfland/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nsfland/errors.hpp"

namespace nsfland {

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  // The alternating series converges slowly for small lambda; there the
  // equivalent Jacobi-transformed form 1 - sqrt(2 pi) / lambda sum exp(-(2k-1)^2 pi^2 / (8 lambda^2))
  // is used instead. Both forms stop once a term drops below 1e-12.
  if (lambda < 1.18) {
    const double x = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(-odd * odd * x);
      sum += term;
      if (term < 1e-12) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("KS test needs two non-empty samples");
  std::vector<double> xs(a.begin(), a.end());
  std::vector<double> ys(b.begin(), b.end());
  std::ranges::sort(xs);
  std::ranges::sort(ys);

  const double na = static_cast<double>(xs.size());
  const double nb = static_cast<double>(ys.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < xs.size() && j < ys.size()) {
    // Advance past every copy of the smallest remaining value in both samples
    // before comparing, so ties never open a spurious gap.
    const double x = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == x) ++i;
    while (j < ys.size() && ys[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }

  const double ne = na * nb / (na + nb);
  const double root = std::sqrt(ne);
  return KsResult{d, kolmogorov_survival(d * (root + 0.12 + 0.11 / root))};
}

double interpolated_quantile(std::span<const double> sorted, double p) {
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

FiveNumberSummary five_number_summary(std::span<const double> sample) {
  if (sample.empty()) throw DomainError("five-number summary of an empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::ranges::sort(sorted);
  return FiveNumberSummary{sorted.front(), interpolated_quantile(sorted, 0.25), interpolated_quantile(sorted, 0.5),
                           interpolated_quantile(sorted, 0.75), sorted.back()};
}

double sample_mean(std::span<const double> sample) {
  if (sample.empty()) throw DomainError("mean of an empty sample");
  double total = 0.0;
  for (double x : sample) total += x;
  return total / static_cast<double>(sample.size());
}

}  // namespace nsfland
