#include "nsfland/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "nsfland/errors.hpp"
#include "nsfland/parallel.hpp"

namespace nsfland {

void validate(const GenConfig& cfg) {
  if (cfg.num_vars < 1 || cfg.num_vars > kMaxVars) {
    throw DomainError("num_vars " + std::to_string(cfg.num_vars) + " outside [1, 16]");
  }
  if (cfg.cls == LandscapeClass::External) throw DomainError("generator class must be NSF or NoNSF");
  const auto domain = cfg.resolved_value_domain();
  if (domain < 1 || domain > std::numeric_limits<Fitness>::max()) {
    throw DomainError("value domain size must be in [1, 2^31)");
  }
  if (cfg.cls == LandscapeClass::Nsf && domain < 2) {
    throw DomainError("NSF landscapes need a value domain of at least 2");
  }
}

DomainState::DomainState(int num_vars, std::int64_t value_domain_size)
    : num_vars_(num_vars),
      lo_(std::size_t{1} << num_vars, 0),
      hi_(std::size_t{1} << num_vars, value_domain_size - 1) {}

void DomainState::assign(std::uint32_t s, std::int64_t v) {
  if (v < lo_.at(s) || v > hi_.at(s)) throw std::logic_error("value outside the feasible domain");
  const auto count = static_cast<std::uint32_t>(lo_.size());
  for (std::uint32_t t = 0; t < count; ++t) {
    const int d = hamming_distance(s, t);
    lo_[t] = std::max(lo_[t], v - d);
    hi_[t] = std::min(hi_[t], v + d);
    if (lo_[t] > hi_[t]) {
      // Unreachable for difference-one constraints on the hypercube.
      throw std::logic_error("propagation emptied the domain of solution " + std::to_string(t));
    }
  }
}

FitnessLandscape generate(const GenConfig& cfg) {
  validate(cfg);
  const std::int64_t domain = cfg.resolved_value_domain();
  const std::size_t size = std::size_t{1} << cfg.num_vars;
  Rng rng(cfg.seed);
  std::vector<Fitness> values(size);

  if (cfg.cls == LandscapeClass::NoNsf) {
    for (auto& v : values) v = static_cast<Fitness>(uniform_below(rng, static_cast<std::uint64_t>(domain)));
  } else {
    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), 0u);
    shuffle(std::span(order), rng);
    DomainState state(cfg.num_vars, domain);
    for (std::uint32_t s : order) {
      const auto [lo, hi] = state.domain(s);
      const auto v = lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
      state.assign(s, v);
      values[s] = static_cast<Fitness>(v);
    }
  }
  return FitnessLandscape(cfg.num_vars, std::move(values),
                          LandscapeMetadata{cfg.cls, cfg.seed, domain});
}

std::vector<FitnessLandscape> generate_batch(const GenConfig& cfg, int count, unsigned threads) {
  if (count < 1) throw DomainError("batch count must be at least 1");
  validate(cfg);
  std::vector<std::optional<FitnessLandscape>> slots(static_cast<std::size_t>(count));
  parallel_for(slots.size(), threads, [&](std::size_t i) {
    GenConfig child = cfg;
    child.seed = derive_seed(cfg.seed, i);
    slots[i].emplace(generate(child));
  });
  std::vector<FitnessLandscape> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace nsfland
