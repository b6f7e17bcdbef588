#include <doctest.h>

#include <numeric>

#include "nsfland/errors.hpp"
#include "nsfland/generator.hpp"
#include "nsfland/nsf_metrics.hpp"
#include "oracles.hpp"

using namespace nsfland;

TEST_CASE("delta set") {
  CHECK(delta_set(std::vector<Fitness>{1, 2, 3, 4, 5, 6}) == std::vector<Fitness>{0, 1, 2, 3, 4, 5});
  CHECK(delta_set(std::vector<Fitness>{7, 7, 7}) == std::vector<Fitness>{0});
  CHECK(delta_set(std::vector<Fitness>{0, 3, 7, 3}) == std::vector<Fitness>{0, 3, 4, 7});
}

TEST_CASE("proportion of the search space at a given difference") {
  const std::vector<Fitness> toy{1, 2, 3, 4, 5, 6};
  CHECK(proportion_space(toy, 3, 1) == Ratio{2, 6});
  CHECK(proportion_space(toy, 3, 0) == Ratio{1, 6});
  const FitnessLandscape flat(2, {4, 4, 4, 4});
  CHECK(proportion_space(flat, 4, 0) == Ratio{1, 1});
}

TEST_CASE("proportion of neighbours at a given difference") {
  const FitnessLandscape pair(1, {0, 1});
  CHECK(proportion_neighbours(pair, 0, 1) == Ratio{1, 1});
  CHECK(proportion_neighbours(pair, 0, 0) == Ratio{0, 1});
  const FitnessLandscape flat(3, std::vector<Fitness>(8, 2));
  CHECK(proportion_neighbours(flat, 2, 0) == Ratio{1, 1});
  CHECK_THROWS_AS(proportion_neighbours(pair, 5, 0), DomainError);
}

TEST_CASE("neighbour pool counts each solution once") {
  // 00 and 11 both have fitness 0 and share neighbours 01 and 10.
  const FitnessLandscape l(2, {0, 1, 1, 0});
  CHECK(proportion_neighbours(l, 0, 1) == Ratio{2, 2});
}

TEST_CASE("constant landscape has the NSF property") {
  const auto profile = check_nsf(FitnessLandscape(3, std::vector<Fitness>(8, 5)));
  CHECK(profile.verdict);
  CHECK(profile.violations.empty());
  CHECK(profile.deltas == std::vector<Fitness>{0});
}

TEST_CASE("two-solution landscape violates monotonicity") {
  const auto profile = check_nsf(FitnessLandscape(1, {0, 1}));
  CHECK_FALSE(profile.verdict);
  bool found = false;
  for (const auto& v : profile.violations) {
    if (v.value == 0 && v.delta == 1 && v.kind == NsfViolationKind::Monotonicity) found = true;
    CHECK(v.kind == NsfViolationKind::Monotonicity);
  }
  CHECK(found);
  const auto& zero = profile.per_value.at(0);
  CHECK(zero.p[0].value() - zero.pn[0].value() == doctest::Approx(0.5));
}

TEST_CASE("profile matches a set-builder brute force") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const auto l = oracle::random_landscape(n, 1 + static_cast<std::int64_t>(seed % 7), seed);
    const auto profile = check_nsf(l);
    const auto brute = oracle::brute_nsf(l);
    REQUIRE(profile.deltas == brute.deltas);
    for (const auto& [v, entry] : profile.per_value) {
      for (std::size_t k = 0; k < profile.deltas.size(); ++k) {
        CHECK(entry.p[k].value() == doctest::Approx(brute.p.at(v)[k]).epsilon(1e-15));
        CHECK(entry.pn[k].value() == doctest::Approx(brute.pn.at(v)[k]).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("proportions are bounded and pn sums to one") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const auto l = oracle::random_landscape(n, 2 + static_cast<std::int64_t>(seed % 9), seed * 31);
    const auto profile = check_nsf(l);
    for (const auto& [v, entry] : profile.per_value) {
      std::int64_t num = 0;
      for (std::size_t k = 0; k < profile.deltas.size(); ++k) {
        CHECK(entry.p[k].value() >= 0.0);
        CHECK(entry.p[k].value() <= 1.0);
        CHECK(entry.pn[k].value() >= 0.0);
        CHECK(entry.pn[k].value() <= 1.0);
        num += entry.pn[k].num;
      }
      CHECK(num == entry.pn.front().den);
    }
    CHECK(profile.verdict == profile.violations.empty());
  }
}

TEST_CASE("verdict is invariant under hypercube automorphisms") {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.num_vars = 3 + static_cast<int>(seed % 4);
    cfg.cls = seed % 2 == 0 ? LandscapeClass::Nsf : LandscapeClass::NoNsf;
    cfg.value_domain_size = 3 + static_cast<std::int64_t>(seed % 5);
    cfg.seed = seed;
    const auto l = generate(cfg);
    const auto image = oracle::apply_automorphism(l, rng);
    CHECK(check_nsf(l).verdict == check_nsf(image).verdict);
  }
}

TEST_CASE("profile JSON carries deltas, verdict and violations") {
  const auto j = to_json(check_nsf(FitnessLandscape(1, {0, 1})));
  CHECK(j["verdict"] == false);
  CHECK(j["deltas"] == nlohmann::json::array({0, 1}));
  CHECK(j["violations"][0]["reason"] == "MONOTONICITY");
  CHECK(j["per_value"].size() == 2);
}
