#include "nsfland/nsf_metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "nsfland/errors.hpp"

namespace nsfland {

namespace {

std::vector<Fitness> distinct_sorted(std::span<const Fitness> values) {
  std::vector<Fitness> out(values.begin(), values.end());
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t count_at_distance(const std::unordered_map<Fitness, std::int64_t>& hist, Fitness v,
                               Fitness delta) {
  auto lookup = [&](std::int64_t x) -> std::int64_t {
    if (x < std::numeric_limits<Fitness>::min() || x > std::numeric_limits<Fitness>::max()) return 0;
    auto it = hist.find(static_cast<Fitness>(x));
    return it == hist.end() ? 0 : it->second;
  };
  std::int64_t n = lookup(std::int64_t{v} + delta);
  if (delta != 0) n += lookup(std::int64_t{v} - delta);
  return n;
}

std::unordered_map<Fitness, std::int64_t> histogram(std::span<const Fitness> values) {
  std::unordered_map<Fitness, std::int64_t> hist;
  for (Fitness v : values) ++hist[v];
  return hist;
}

// Neighbour pool of fitness-v solutions, bucketed by |f - v|.
struct NeighbourPool {
  std::int64_t size = 0;
  std::unordered_map<Fitness, std::int64_t> by_delta;
};

NeighbourPool neighbour_pool(const FitnessLandscape& l, std::span<const std::uint32_t> members,
                             std::vector<std::uint32_t>& stamp, std::uint32_t tag) {
  NeighbourPool pool;
  for (std::uint32_t s : members) {
    const Fitness v = l[s];
    for (int bit = 0; bit < l.num_vars(); ++bit) {
      const std::uint32_t t = s ^ (1u << bit);
      if (stamp[t] == tag) continue;
      stamp[t] = tag;
      ++pool.size;
      ++pool.by_delta[static_cast<Fitness>(std::abs(std::int64_t{l[t]} - v))];
    }
  }
  return pool;
}

}  // namespace

std::vector<Fitness> delta_set(std::span<const Fitness> values) {
  const auto distinct = distinct_sorted(values);
  if (distinct.empty()) return {};
  const std::int64_t range = std::int64_t{distinct.back()} - distinct.front();
  std::vector<Fitness> out;
  if (range <= (std::int64_t{1} << 24)) {
    std::vector<bool> seen(static_cast<std::size_t>(range) + 1, false);
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (std::size_t j = i; j < distinct.size(); ++j) {
        seen[static_cast<std::size_t>(distinct[j] - distinct[i])] = true;
      }
    }
    for (std::size_t d = 0; d < seen.size(); ++d) {
      if (seen[d]) out.push_back(static_cast<Fitness>(d));
    }
  } else {
    std::set<Fitness> seen;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (std::size_t j = i; j < distinct.size(); ++j) seen.insert(distinct[j] - distinct[i]);
    }
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

std::vector<Fitness> delta_set(const FitnessLandscape& l) { return delta_set(l.values()); }

Ratio proportion_space(std::span<const Fitness> values, Fitness v, Fitness delta) {
  if (values.empty()) throw DomainError("empty value sequence");
  if (delta < 0) throw DomainError("delta must be non-negative");
  const auto hist = histogram(values);
  return Ratio{count_at_distance(hist, v, delta), static_cast<std::int64_t>(values.size())};
}

Ratio proportion_space(const FitnessLandscape& l, Fitness v, Fitness delta) {
  return proportion_space(l.values(), v, delta);
}

Ratio proportion_neighbours(const FitnessLandscape& l, Fitness v, Fitness delta) {
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (std::ranges::find(l.values(), v) == l.values().end()) {
    throw DomainError("fitness value " + std::to_string(v) + " is not realised");
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t s = 0; s < l.size(); ++s) {
    if (l[s] == v) members.push_back(s);
  }
  std::vector<std::uint32_t> stamp(l.size(), 0);
  const auto pool = neighbour_pool(l, members, stamp, 1);
  auto it = pool.by_delta.find(delta);
  return Ratio{it == pool.by_delta.end() ? 0 : it->second, pool.size};
}

NsfProfile check_nsf(const FitnessLandscape& l) {
  NsfProfile profile;
  profile.deltas = delta_set(l);
  const auto hist = histogram(l.values());
  const auto realised = distinct_sorted(l.values());
  const std::int64_t space = l.size();

  std::unordered_map<Fitness, std::vector<std::uint32_t>> members;
  for (std::uint32_t s = 0; s < l.size(); ++s) members[l[s]].push_back(s);

  std::vector<std::uint32_t> stamp(l.size(), 0);
  std::uint32_t tag = 0;
  for (Fitness v : realised) {
    const auto pool = neighbour_pool(l, members.at(v), stamp, ++tag);
    NsfValueProfile entry;
    entry.p.reserve(profile.deltas.size());
    entry.pn.reserve(profile.deltas.size());

    // pn - p over the common denominator |N_v| * |S|.
    std::int64_t previous = 0;
    std::int64_t total = 0;
    for (std::size_t k = 0; k < profile.deltas.size(); ++k) {
      const Fitness delta = profile.deltas[k];
      const std::int64_t in_space = count_at_distance(hist, v, delta);
      auto it = pool.by_delta.find(delta);
      const std::int64_t in_pool = it == pool.by_delta.end() ? 0 : it->second;
      entry.p.push_back(Ratio{in_space, space});
      entry.pn.push_back(Ratio{in_pool, pool.size});

      const std::int64_t diff = in_pool * space - in_space * pool.size;
      if (k > 0 && diff > previous) {
        profile.violations.push_back(NsfViolation{v, delta, NsfViolationKind::Monotonicity});
      }
      previous = diff;
      total += diff;
    }
    if (total < 0) profile.violations.push_back(NsfViolation{v, std::nullopt, NsfViolationKind::Sum});
    profile.per_value.emplace(v, std::move(entry));
  }
  profile.verdict = profile.violations.empty();
  return profile;
}

nlohmann::json to_json(const NsfProfile& profile) {
  nlohmann::json per_value = nlohmann::json::array();
  for (const auto& [v, entry] : profile.per_value) {
    nlohmann::json p = nlohmann::json::array();
    nlohmann::json pn = nlohmann::json::array();
    for (const auto& r : entry.p) p.push_back(r.value());
    for (const auto& r : entry.pn) pn.push_back(r.value());
    per_value.push_back({{"value", v}, {"p", p}, {"pn", pn}});
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& viol : profile.violations) {
    violations.push_back(
        {{"value", viol.value},
         {"delta", viol.delta ? nlohmann::json(*viol.delta) : nlohmann::json(nullptr)},
         {"reason", viol.kind == NsfViolationKind::Monotonicity ? "MONOTONICITY" : "SUM"}});
  }
  return {{"deltas", profile.deltas},
          {"per_value", per_value},
          {"verdict", profile.verdict},
          {"violations", violations}};
}

}  // namespace nsfland
