#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsfland/landscape.hpp"
#include "nsfland/markov.hpp"
#include "nsfland/stats.hpp"

namespace nsfland {

struct ExperimentConfig {
  std::vector<int> sizes{3, 4, 5, 6, 7, 8, 9};
  int count = 1000;
  std::vector<LandscapeClass> classes{LandscapeClass::NoNsf, LandscapeClass::Nsf};
  std::uint64_t seed = 1;
  TransitionPolicy policy = TransitionPolicy::GreedyPlateau;
  Combine combine = Combine::Average;
  /// Fixed fitness value domain; empty means 2^n for each size n.
  std::optional<std::int64_t> value_domain;
  /// Worker threads. Does not affect results.
  unsigned threads = 1;
};

/// Throws ValidationError on an empty size list, sizes outside [1, 16],
/// count < 1, an empty class list or the External class.
void validate(const ExperimentConfig& cfg);

/// Accepts the keys of to_json(ExperimentConfig); missing keys keep defaults.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

/// Result-affecting fields only (threads is omitted).
nlohmann::json to_json(const ExperimentConfig& cfg);

/// FNV-1a over the canonical JSON dump of the config.
std::uint64_t config_hash(const ExperimentConfig& cfg);

/// Seed of the (n, class) cell; landscape i of the cell uses derive_seed(cell_seed, i).
std::uint64_t cell_seed(std::uint64_t seed, int num_vars, LandscapeClass cls);

struct LandscapeRecord {
  int num_vars = 0;
  LandscapeClass cls = LandscapeClass::NoNsf;
  int landscape_id = 0;
  std::uint64_t seed = 0;
  std::int64_t value_domain_size = 0;
  std::int64_t num_absorbing = 0;
  std::int64_t num_global_optima = 0;
  double p_global_avg = 0.0;
  double p_global_sum = 0.0;

  double p_global(Combine combine) const { return combine == Combine::Average ? p_global_avg : p_global_sum; }
};

/// Builds the chain of one landscape and records p_global in both modes.
LandscapeRecord analyse_landscape(const FitnessLandscape& l, TransitionPolicy policy, int landscape_id);

struct CellResult {
  int num_vars = 0;
  LandscapeClass cls = LandscapeClass::NoNsf;
  std::vector<LandscapeRecord> records;
  /// p_global under the configured combine mode, one per landscape.
  std::vector<double> sample;
  FiveNumberSummary summary;
  double mean = 0.0;
};

struct KsRow {
  int num_vars = 0;
  KsResult ks;
  bool reject_at_99 = false;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellResult> cells;
  /// One row per size for which both NSF and NoNSF cells exist.
  std::vector<KsRow> ks;
  std::string tool_version;
  std::uint64_t config_hash = 0;

  const CellResult* find(int num_vars, LandscapeClass cls) const;
};

/// Runs every (size, class) cell. Cells are processed in config order and
/// `on_cell` is called as each one completes. Results do not depend on
/// cfg.threads.
ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::function<void(const CellResult&)>& on_cell = {});

inline constexpr const char* kCsvHeader =
    "n,class,landscape_id,seed,value_domain_size,num_absorbing,num_global_optima,p_global_avg,p_global_sum";

std::string to_csv_row(const LandscapeRecord& r);
void write_csv_rows(const CellResult& cell, std::ostream& out);
void write_csv(const ExperimentReport& report, std::ostream& out);

/// Summary report. The timestamp, when given, only appears in the provenance block.
nlohmann::json to_json(const ExperimentReport& report, const std::optional<std::string>& timestamp = std::nullopt);

std::string tool_version();

}  // namespace nsfland
