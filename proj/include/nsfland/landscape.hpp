#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsfland/types.hpp"

namespace nsfland {

/// Largest variable count a landscape may hold (2^16 solutions).
inline constexpr int kMaxVars = 16;

/// A solution of an n-variable problem, stored as the integer whose bits are
/// the variable values. Variable b_1 is the most significant of the n bits, so
/// the usual binary rendering of the index reads b_1 ... b_n left to right.
struct SolutionId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(SolutionId, SolutionId) = default;
};

/// Bit position of 1-based variable `var` in an n-variable solution index.
constexpr int variable_bit(int var, int num_vars) noexcept { return num_vars - var; }

constexpr int hamming_distance(std::uint32_t a, std::uint32_t b) noexcept {
  return std::popcount(a ^ b);
}

/// "1010"-style rendering, b_1 first.
std::string to_bitstring(SolutionId s, int num_vars);

/// Inverse of to_bitstring. Throws DomainError on characters other than 0/1.
SolutionId from_bitstring(std::string_view bits);

/// The n solutions at Hamming distance 1, in order of flipped bit position
/// from most significant to least. Throws DomainError if s is out of range.
std::vector<SolutionId> neighbours(SolutionId s, int num_vars);

enum class LandscapeClass { Nsf, NoNsf, External };

std::string_view to_string(LandscapeClass cls);

/// Parses "NSF", "NoNSF" or "external" (case-insensitive). Throws ValidationError.
LandscapeClass parse_landscape_class(std::string_view text);

struct LandscapeMetadata {
  LandscapeClass cls = LandscapeClass::External;
  std::uint64_t seed = 0;
  std::int64_t value_domain_size = 1;

  friend bool operator==(const LandscapeMetadata&, const LandscapeMetadata&) = default;
};

/// Complete enumeration of an n-variable bitstring space with one integer
/// fitness per solution. Immutable after construction.
///
/// Construction validates that there are exactly 2^n values, that every value
/// lies in [0, value_domain_size), and, for NSF landscapes, that no 1-flip
/// edge changes the fitness by more than one.
class FitnessLandscape {
 public:
  FitnessLandscape(int num_vars, std::vector<Fitness> values, LandscapeMetadata metadata);

  /// External landscape whose value domain is inferred as max + 1.
  FitnessLandscape(int num_vars, std::vector<Fitness> values);

  int num_vars() const noexcept { return num_vars_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }
  std::span<const Fitness> values() const noexcept { return values_; }
  Fitness operator[](std::uint32_t index) const noexcept { return values_[index]; }
  Fitness fitness(SolutionId s) const { return values_.at(s.index); }
  const LandscapeMetadata& metadata() const noexcept { return metadata_; }
  Fitness max_value() const noexcept { return max_value_; }

  bool operator==(const FitnessLandscape&) const = default;

 private:
  int num_vars_;
  std::vector<Fitness> values_;
  LandscapeMetadata metadata_;
  Fitness max_value_;
};

/// Largest fitness difference across any 1-flip edge.
Fitness max_edge_difference(const FitnessLandscape& l);

/// Selects the N chosen variables of an M-variable problem and fixes the rest.
/// Masks are over solution-index bits.
struct Restriction {
  int total_vars = 0;
  std::uint32_t chosen_mask = 0;
  /// Values of the fixed variables; bits inside chosen_mask must be zero.
  std::uint32_t fixed_values = 0;

  int chosen_count() const noexcept { return std::popcount(chosen_mask); }

  /// Base-space index of restricted solution k: k's bits are scattered into
  /// the chosen positions, lowest bit first.
  std::uint32_t embed(std::uint32_t k) const noexcept;
};

/// Throws DomainError unless the restriction is consistent for M variables.
void validate(const Restriction& r);

/// The N-variable landscape induced by r. Class becomes External.
FitnessLandscape restrict(const FitnessLandscape& base, const Restriction& r);

/// All solutions attaining the maximum value; never empty for non-empty input.
std::vector<SolutionId> global_maxima(std::span<const Fitness> values);
std::vector<SolutionId> global_maxima(const FitnessLandscape& l);

}  // namespace nsfland
