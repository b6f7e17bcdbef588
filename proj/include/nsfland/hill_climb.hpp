#pragma once

#include <cstdint>
#include <vector>

#include "nsfland/landscape.hpp"
#include "nsfland/random.hpp"

namespace nsfland {

/// Scope of the "not yet encountered" memory used for equal-fitness moves.
enum class RevisitScope {
  /// Cleared on every strict improvement.
  Plateau,
  /// Kept for the whole climb.
  Climb,
};

struct ClimbTrace {
  SolutionId start;
  std::vector<SolutionId> path;  ///< includes start
  Fitness final_fitness = 0;
  bool reached_global = false;
};

/// Moves to a uniformly chosen strictly better neighbour while one exists;
/// otherwise to a uniformly chosen equal-fitness neighbour not visited in the
/// current scope; otherwise stops. Throws DomainError for an invalid start.
ClimbTrace hill_climb(const FitnessLandscape& l, SolutionId start, Rng& rng,
                      RevisitScope scope = RevisitScope::Plateau);

struct ReachEstimate {
  double p_hat = 0.0;
  double standard_error = 0.0;
  Fitness f_star = 0;
  std::int64_t runs = 0;
  std::int64_t hits = 0;
};

/// Monte Carlo share of climbs from uniform random starts that end at the
/// global maximum fitness.
ReachEstimate estimate_reach(const FitnessLandscape& l, std::int64_t runs, Rng& rng,
                             RevisitScope scope = RevisitScope::Plateau);

}  // namespace nsfland
