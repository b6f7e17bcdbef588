#include "nsfland/landscape.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "nsfland/errors.hpp"

namespace nsfland {

namespace {

void check_num_vars(int num_vars) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw DomainError("variable count " + std::to_string(num_vars) + " outside [1, " +
                      std::to_string(kMaxVars) + "]");
  }
}

bool iequals(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

}  // namespace

std::string to_bitstring(SolutionId s, int num_vars) {
  std::string out(static_cast<std::size_t>(num_vars), '0');
  for (int var = 1; var <= num_vars; ++var) {
    if ((s.index >> variable_bit(var, num_vars)) & 1u) out[static_cast<std::size_t>(var - 1)] = '1';
  }
  return out;
}

SolutionId from_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxVars)) {
    throw DomainError("bitstring length must be in [1, 16]");
  }
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bitstring may only contain 0 and 1");
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return SolutionId{index};
}

std::vector<SolutionId> neighbours(SolutionId s, int num_vars) {
  check_num_vars(num_vars);
  if (s.index >= (1u << num_vars)) {
    throw DomainError("solution index " + std::to_string(s.index) + " out of range for " +
                      std::to_string(num_vars) + " variables");
  }
  std::vector<SolutionId> out;
  out.reserve(static_cast<std::size_t>(num_vars));
  for (int bit = num_vars - 1; bit >= 0; --bit) out.push_back(SolutionId{s.index ^ (1u << bit)});
  return out;
}

std::string_view to_string(LandscapeClass cls) {
  switch (cls) {
    case LandscapeClass::Nsf: return "NSF";
    case LandscapeClass::NoNsf: return "NoNSF";
    case LandscapeClass::External: return "external";
  }
  return "external";
}

LandscapeClass parse_landscape_class(std::string_view text) {
  if (iequals(text, "NSF")) return LandscapeClass::Nsf;
  if (iequals(text, "NoNSF")) return LandscapeClass::NoNsf;
  if (iequals(text, "external")) return LandscapeClass::External;
  throw ValidationError("unknown landscape class '" + std::string(text) + "'");
}

FitnessLandscape::FitnessLandscape(int num_vars, std::vector<Fitness> values,
                                   LandscapeMetadata metadata)
    : num_vars_(num_vars), values_(std::move(values)), metadata_(metadata) {
  check_num_vars(num_vars_);
  const std::size_t expected = std::size_t{1} << num_vars_;
  if (values_.size() != expected) {
    throw DomainError("landscape with " + std::to_string(num_vars_) + " variables needs " +
                      std::to_string(expected) + " values, got " + std::to_string(values_.size()));
  }
  if (metadata_.value_domain_size < 1) throw DomainError("value domain size must be positive");
  for (Fitness v : values_) {
    if (v < 0 || v >= metadata_.value_domain_size) {
      throw DomainError("fitness value " + std::to_string(v) + " outside [0, " +
                        std::to_string(metadata_.value_domain_size) + ")");
    }
  }
  max_value_ = *std::ranges::max_element(values_);
  if (metadata_.cls == LandscapeClass::Nsf && max_edge_difference(*this) > 1) {
    throw DomainError("landscape marked NSF has a neighbour pair differing by more than one");
  }
}

FitnessLandscape::FitnessLandscape(int num_vars, std::vector<Fitness> values)
    : FitnessLandscape(num_vars, values,
                       LandscapeMetadata{LandscapeClass::External, 0,
                                         values.empty() ? 1
                                                        : std::int64_t{*std::ranges::max_element(values)} + 1}) {}

Fitness max_edge_difference(const FitnessLandscape& l) {
  Fitness worst = 0;
  for (std::uint32_t s = 0; s < l.size(); ++s) {
    for (int bit = 0; bit < l.num_vars(); ++bit) {
      const std::uint32_t t = s ^ (1u << bit);
      if (t > s) worst = std::max(worst, static_cast<Fitness>(std::abs(l[s] - l[t])));
    }
  }
  return worst;
}

std::uint32_t Restriction::embed(std::uint32_t k) const noexcept {
  std::uint32_t out = fixed_values;
  std::uint32_t mask = chosen_mask;
  while (mask != 0) {
    const std::uint32_t low = mask & (~mask + 1);
    if (k & 1u) out |= low;
    k >>= 1;
    mask ^= low;
  }
  return out;
}

void validate(const Restriction& r) {
  check_num_vars(r.total_vars);
  const std::uint32_t full = (r.total_vars == 32) ? ~0u : ((1u << r.total_vars) - 1);
  if (r.chosen_mask == 0) throw DomainError("restriction must choose at least one variable");
  if ((r.chosen_mask & ~full) != 0) throw DomainError("chosen mask selects bits beyond the variable count");
  if ((r.fixed_values & ~full) != 0) throw DomainError("fixed values set bits beyond the variable count");
  if ((r.fixed_values & r.chosen_mask) != 0) {
    throw DomainError("fixed values assign a chosen variable");
  }
}

FitnessLandscape restrict(const FitnessLandscape& base, const Restriction& r) {
  validate(r);
  if (r.total_vars != base.num_vars()) {
    throw DomainError("restriction is over " + std::to_string(r.total_vars) +
                      " variables but the landscape has " + std::to_string(base.num_vars()));
  }
  const int n = r.chosen_count();
  std::vector<Fitness> values(std::size_t{1} << n);
  for (std::uint32_t k = 0; k < values.size(); ++k) values[k] = base[r.embed(k)];
  LandscapeMetadata meta = base.metadata();
  meta.cls = LandscapeClass::External;
  return FitnessLandscape(n, std::move(values), meta);
}

std::vector<SolutionId> global_maxima(std::span<const Fitness> values) {
  std::vector<SolutionId> out;
  if (values.empty()) return out;
  const Fitness best = *std::ranges::max_element(values);
  for (std::uint32_t i = 0; i < values.size(); ++i) {
    if (values[i] == best) out.push_back(SolutionId{i});
  }
  return out;
}

std::vector<SolutionId> global_maxima(const FitnessLandscape& l) { return global_maxima(l.values()); }

}  // namespace nsfland
