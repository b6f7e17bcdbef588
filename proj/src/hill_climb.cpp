#include "nsfland/hill_climb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "nsfland/errors.hpp"

namespace nsfland {

ClimbTrace hill_climb(const FitnessLandscape& l, SolutionId start, Rng& rng, RevisitScope scope) {
  if (start.index >= l.size()) throw DomainError("start solution " + std::to_string(start.index) + " out of range");

  ClimbTrace trace;
  trace.start = start;
  trace.path.push_back(start);

  std::unordered_set<std::uint32_t> visited{start.index};
  std::vector<std::uint32_t> candidates;
  candidates.reserve(static_cast<std::size_t>(l.num_vars()));
  std::uint32_t s = start.index;

  for (;;) {
    candidates.clear();
    for (int bit = l.num_vars() - 1; bit >= 0; --bit) {
      const std::uint32_t t = s ^ (1u << bit);
      if (l[t] > l[s]) candidates.push_back(t);
    }
    if (!candidates.empty()) {
      s = candidates[uniform_below(rng, candidates.size())];
      if (scope == RevisitScope::Plateau) visited.clear();
      visited.insert(s);
      trace.path.push_back(SolutionId{s});
      continue;
    }
    for (int bit = l.num_vars() - 1; bit >= 0; --bit) {
      const std::uint32_t t = s ^ (1u << bit);
      if (l[t] == l[s] && !visited.contains(t)) candidates.push_back(t);
    }
    if (candidates.empty()) break;
    s = candidates[uniform_below(rng, candidates.size())];
    visited.insert(s);
    trace.path.push_back(SolutionId{s});
  }

  trace.final_fitness = l[s];
  trace.reached_global = trace.final_fitness == l.max_value();
  return trace;
}

ReachEstimate estimate_reach(const FitnessLandscape& l, std::int64_t runs, Rng& rng, RevisitScope scope) {
  if (runs < 1) throw DomainError("runs must be at least 1");
  ReachEstimate out;
  out.runs = runs;
  out.f_star = std::numeric_limits<Fitness>::min();
  for (std::int64_t r = 0; r < runs; ++r) {
    const SolutionId start{static_cast<std::uint32_t>(uniform_below(rng, l.size()))};
    const auto trace = hill_climb(l, start, rng, scope);
    out.f_star = std::max(out.f_star, trace.final_fitness);
    if (trace.reached_global) ++out.hits;
  }
  out.p_hat = static_cast<double>(out.hits) / static_cast<double>(runs);
  out.standard_error = std::sqrt(out.p_hat * (1.0 - out.p_hat) / static_cast<double>(runs));
  return out;
}

}  // namespace nsfland
