#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "nsfland/landscape.hpp"

namespace nsfland {

/// Exact proportion num / den.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(Ratio a, Ratio b) noexcept { return a.num * b.den == b.num * a.den; }
};

/// Sorted set of absolute differences between realised fitness values; always
/// contains 0 for non-empty input.
std::vector<Fitness> delta_set(std::span<const Fitness> values);
std::vector<Fitness> delta_set(const FitnessLandscape& l);

/// Share of all solutions whose fitness is v + delta or v - delta.
Ratio proportion_space(std::span<const Fitness> values, Fitness v, Fitness delta);
Ratio proportion_space(const FitnessLandscape& l, Fitness v, Fitness delta);

/// Share of the neighbours of fitness-v solutions whose fitness is v +- delta.
/// The neighbour pool is a set: a solution adjacent to several fitness-v
/// solutions is counted once. Throws DomainError if v is not realised.
Ratio proportion_neighbours(const FitnessLandscape& l, Fitness v, Fitness delta);

enum class NsfViolationKind { Monotonicity, Sum };

struct NsfViolation {
  Fitness value = 0;
  /// Delta at which pn - p increased; empty for sum violations.
  std::optional<Fitness> delta;
  NsfViolationKind kind = NsfViolationKind::Monotonicity;
};

struct NsfValueProfile {
  std::vector<Ratio> p;   ///< aligned with NsfProfile::deltas
  std::vector<Ratio> pn;  ///< aligned with NsfProfile::deltas
};

struct NsfProfile {
  std::vector<Fitness> deltas;
  std::map<Fitness, NsfValueProfile> per_value;
  bool verdict = true;
  std::vector<NsfViolation> violations;
};

/// Decides the Neighbours-with-Similar-Fitness property: for every realised v,
/// pn(v, delta) - p(v, delta) must be non-increasing over ascending deltas and
/// its sum over deltas must be non-negative. Comparisons are exact.
NsfProfile check_nsf(const FitnessLandscape& l);

nlohmann::json to_json(const NsfProfile& profile);

}  // namespace nsfland
