#include <doctest.h>

#include <set>
#include <sstream>

#include "nsfland/errors.hpp"
#include "nsfland/experiment.hpp"

using namespace nsfland;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.sizes = {3, 4};
  cfg.count = 25;
  cfg.seed = 9;
  return cfg;
}

std::string csv(const ExperimentReport& r) {
  std::ostringstream out;
  write_csv(r, out);
  return out.str();
}

}  // namespace

TEST_CASE("single-landscape cells have degenerate quartiles") {
  auto cfg = small_config();
  cfg.count = 1;
  const auto report = run_experiment(cfg);
  REQUIRE(report.cells.size() == 4);
  for (const auto& c : report.cells) {
    CHECK(c.summary.min == c.summary.max);
    CHECK(c.summary.q1 == c.summary.median);
    CHECK(c.mean == c.sample.front());
  }
}

TEST_CASE("experiment results do not depend on the thread count") {
  auto cfg = small_config();
  const auto one = run_experiment(cfg);
  cfg.threads = 3;
  const auto three = run_experiment(cfg);
  CHECK(csv(one) == csv(three));
  CHECK(to_json(one).dump() == to_json(three).dump());
}

TEST_CASE("cells are reported in config order and KS rows pair classes") {
  std::vector<std::pair<int, LandscapeClass>> order;
  const auto report = run_experiment(small_config(), [&](const CellResult& c) { order.emplace_back(c.num_vars, c.cls); });
  CHECK(order == std::vector<std::pair<int, LandscapeClass>>{{3, LandscapeClass::NoNsf},
                                                               {3, LandscapeClass::Nsf},
                                                               {4, LandscapeClass::NoNsf},
                                                               {4, LandscapeClass::Nsf}});
  REQUIRE(report.ks.size() == 2);
  CHECK(report.ks[0].num_vars == 3);
  for (const auto& row : report.ks) CHECK(row.reject_at_99 == (row.ks.p_value < 0.01));
  const auto text = csv(report);
  CHECK(text.rfind(kCsvHeader, 0) == 0);
  CHECK(std::ranges::count(text, '\n') == 1 + 4 * 25);
}

TEST_CASE("records hold both combine modes") {
  const auto report = run_experiment(small_config());
  for (const auto& c : report.cells)
    for (const auto& r : c.records) {
      CHECK(r.p_global_avg <= r.p_global_sum + 1e-15);
      CHECK(r.p_global_sum <= 1.0 + 1e-12);
      CHECK(r.p_global_avg >= 0.0);
      if (r.num_global_optima == 1) CHECK(r.p_global_avg == r.p_global_sum);
    }
}

TEST_CASE("config JSON round trip") {
  auto cfg = small_config();
  cfg.policy = TransitionPolicy::StrictImproving;
  cfg.combine = Combine::Sum;
  cfg.value_domain = 5;
  const auto back = experiment_config_from_json(to_json(cfg));
  CHECK(to_json(back) == to_json(cfg));
  CHECK(config_hash(back) == config_hash(cfg));
  auto other = cfg;
  other.seed = 10;
  CHECK(config_hash(other) != config_hash(cfg));
}

TEST_CASE("invalid experiment configs") {
  CHECK_THROWS_AS(experiment_config_from_json(nlohmann::json::array()), ValidationError);
  CHECK_THROWS_AS(experiment_config_from_json({{"count", 0}}), ValidationError);
  CHECK_THROWS_AS(experiment_config_from_json({{"sizes", {2, 20}}}), ValidationError);
  CHECK_THROWS_AS(experiment_config_from_json({{"classes", {"external"}}}), ValidationError);
  CHECK_THROWS_AS(experiment_config_from_json({{"policy", "random"}}), ValidationError);
  CHECK_THROWS_AS(experiment_config_from_json({{"count", "many"}}), ValidationError);
}

TEST_CASE("cell seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (int n = 1; n <= 16; ++n)
    for (auto cls : {LandscapeClass::Nsf, LandscapeClass::NoNsf}) seen.insert(cell_seed(1, n, cls));
  CHECK(seen.size() == 32);
}

TEST_CASE("report JSON carries provenance") {
  auto cfg = small_config();
  cfg.count = 3;
  const auto j = to_json(run_experiment(cfg), std::string("2026-01-01T00:00:00Z"));
  CHECK(j["provenance"]["seed"] == 9);
  CHECK(j["provenance"]["timestamp"] == "2026-01-01T00:00:00Z");
  CHECK(j["provenance"]["config_hash"].get<std::string>().size() == 16);
  CHECK(j["cells"].size() == 4);
  CHECK_FALSE(to_json(run_experiment(cfg)).at("provenance").contains("timestamp"));
}
