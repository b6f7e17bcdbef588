#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "nsfland/errors.hpp"
#include "nsfland/generator.hpp"
#include "nsfland/hill_climb.hpp"
#include "nsfland/markov.hpp"
#include "oracles.hpp"

using namespace nsfland;

namespace {

FitnessLandscape popcount_landscape(int n) {
  std::vector<Fitness> values(std::size_t{1} << n);
  for (std::size_t s = 0; s < values.size(); ++s) values[s] = std::popcount(s);
  return FitnessLandscape(n, std::move(values));
}

FitnessLandscape permutation_landscape(int n, std::uint64_t seed) {
  std::vector<Fitness> values(std::size_t{1} << n);
  std::iota(values.begin(), values.end(), 0);
  Rng rng(seed);
  shuffle(std::span(values), rng);
  return FitnessLandscape(n, std::move(values));
}

}  // namespace

TEST_CASE("climb on a constant landscape") {
  const FitnessLandscape flat(3, std::vector<Fitness>(8, 1));
  Rng rng(1);
  const auto trace = hill_climb(flat, SolutionId{0}, rng);
  CHECK(trace.reached_global);
  CHECK(trace.final_fitness == 1);
  std::set<SolutionId> unique(trace.path.begin(), trace.path.end());
  CHECK(unique.size() == trace.path.size());
  CHECK(estimate_reach(flat, 50, rng).p_hat == 1.0);
}

TEST_CASE("climb follows the only improving route") {
  std::vector<Fitness> values(8, 0);
  values[from_bitstring("000").index] = 1;
  values[from_bitstring("001").index] = 2;
  values[from_bitstring("011").index] = 3;
  values[from_bitstring("111").index] = 4;
  const FitnessLandscape l(3, values);
  Rng rng(3);
  const auto trace = hill_climb(l, from_bitstring("000"), rng);
  std::vector<std::string> path;
  for (auto s : trace.path) path.push_back(to_bitstring(s, 3));
  CHECK(path == std::vector<std::string>{"000", "001", "011", "111"});
  CHECK(trace.reached_global);
}

TEST_CASE("fitness never decreases and plateaus are not revisited") {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto l = oracle::random_landscape(5, 3, seed);
    for (std::uint32_t start = 0; start < l.size(); start += 7) {
      const auto trace = hill_climb(l, SolutionId{start}, rng);
      REQUIRE(trace.path.front() == SolutionId{start});
      std::set<SolutionId> plateau{trace.path.front()};
      for (std::size_t k = 1; k < trace.path.size(); ++k) {
        const Fitness prev = l.fitness(trace.path[k - 1]);
        const Fitness cur = l.fitness(trace.path[k]);
        CHECK(cur >= prev);
        CHECK(hamming_distance(trace.path[k - 1].index, trace.path[k].index) == 1);
        if (cur > prev) plateau.clear();
        CHECK(plateau.insert(trace.path[k]).second);
      }
      CHECK(trace.final_fitness == l.fitness(trace.path.back()));
    }
  }
}

TEST_CASE("climb-scope memory never revisits any solution") {
  Rng rng(9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto l = oracle::random_landscape(4, 2, seed);
    const auto trace = hill_climb(l, SolutionId{0}, rng, RevisitScope::Climb);
    std::set<SolutionId> unique(trace.path.begin(), trace.path.end());
    CHECK(unique.size() == trace.path.size());
  }
}

TEST_CASE("Monte Carlo reach agrees with absorption analysis on plateau-free landscapes") {
  Rng rng(12345);
  constexpr std::int64_t kRuns = 20000;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto l = permutation_landscape(3, seed);
    const double exact =
        p_global(l, build_chain<double>(l, TransitionPolicy::GreedyPlateau), Combine::Sum).p_global;
    const auto est = estimate_reach(l, kRuns, rng);
    const double sigma = std::sqrt(exact * (1.0 - exact) / kRuns);
    CHECK(std::abs(est.p_hat - exact) <= 3.0 * sigma + 1e-12);
  }
}

TEST_CASE("unimodal landscape is always solved") {
  Rng rng(4);
  const auto est = estimate_reach(popcount_landscape(6), 500, rng);
  CHECK(est.p_hat == 1.0);
  CHECK(est.hits == 500);
  CHECK(est.f_star == 6);
  CHECK(est.standard_error == 0.0);
}

TEST_CASE("a single run gives zero or one") {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto est = estimate_reach(oracle::random_landscape(4, 16, seed), 1, rng);
    CHECK((est.p_hat == 0.0 || est.p_hat == 1.0));
  }
}

TEST_CASE("estimates are reproducible from the seed") {
  const auto l = oracle::random_landscape(6, 10, 3);
  Rng a(77), b(77);
  CHECK(estimate_reach(l, 1000, a).hits == estimate_reach(l, 1000, b).hits);
}

TEST_CASE("invalid climbs are rejected") {
  const auto l = oracle::random_landscape(3, 4, 1);
  Rng rng(1);
  CHECK_THROWS_AS(hill_climb(l, SolutionId{8}, rng), DomainError);
  CHECK_THROWS_AS(estimate_reach(l, 0, rng), DomainError);
}
