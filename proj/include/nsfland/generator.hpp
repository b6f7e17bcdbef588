#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsfland/landscape.hpp"
#include "nsfland/random.hpp"

namespace nsfland {

struct GenConfig {
  int num_vars = 3;
  LandscapeClass cls = LandscapeClass::NoNsf;
  /// Fitness values are drawn from {0, ..., V-1}. Empty means 2^num_vars.
  std::optional<std::int64_t> value_domain_size;
  std::uint64_t seed = 0;

  std::int64_t resolved_value_domain() const noexcept {
    return value_domain_size.value_or(std::int64_t{1} << num_vars);
  }
};

/// Throws DomainError for num_vars outside [1, 16], a non-positive domain, a
/// class other than NSF/NoNSF, or an NSF domain smaller than 2.
void validate(const GenConfig& cfg);

/// Per-solution interval of still-feasible fitness values while an NSF
/// landscape is being assigned.
class DomainState {
 public:
  struct Interval {
    std::int64_t lo;
    std::int64_t hi;
  };

  DomainState(int num_vars, std::int64_t value_domain_size);

  Interval domain(std::uint32_t s) const { return {lo_.at(s), hi_.at(s)}; }

  /// Fixes s to v and intersects every other domain with
  /// [v - d(s, t), v + d(s, t)], d being Hamming distance. A single sweep
  /// reaches the fixpoint for the |f(s) - f(t)| <= 1 edge constraints, and the
  /// domains stay non-empty; a violation throws std::logic_error.
  void assign(std::uint32_t s, std::int64_t v);

 private:
  int num_vars_;
  std::vector<std::int64_t> lo_;
  std::vector<std::int64_t> hi_;
};

/// One landscape. NoNSF: independent uniform values. NSF: solutions are
/// visited in a uniformly random order, each takes a uniform value from its
/// current domain, and the assignment is propagated. Pure function of cfg.
FitnessLandscape generate(const GenConfig& cfg);

/// `count` landscapes; landscape i uses seed derive_seed(cfg.seed, i), so the
/// result does not depend on `threads`.
std::vector<FitnessLandscape> generate_batch(const GenConfig& cfg, int count, unsigned threads = 1);

}  // namespace nsfland
