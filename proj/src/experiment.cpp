#include "nsfland/experiment.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "nsfland/errors.hpp"
#include "nsfland/generator.hpp"
#include "nsfland/parallel.hpp"
#include "nsfland/random.hpp"

#ifndef NSFLAND_VERSION
#define NSFLAND_VERSION "0.0.0"
#endif

namespace nsfland {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr double kKsAlpha = 0.01;

}  // namespace

std::string tool_version() { return NSFLAND_VERSION; }

void validate(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty()) throw ValidationError("experiment needs at least one size");
  for (int n : cfg.sizes) {
    if (n < 1 || n > kMaxVars) throw ValidationError("size " + std::to_string(n) + " outside [1, 16]");
  }
  if (cfg.count < 1) throw ValidationError("count must be at least 1");
  if (cfg.classes.empty()) throw ValidationError("experiment needs at least one class");
  for (auto cls : cfg.classes) {
    if (cls == LandscapeClass::External) throw ValidationError("experiment classes must be NSF or NoNSF");
  }
  if (cfg.value_domain && *cfg.value_domain < 1) throw ValidationError("value domain must be positive");
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("experiment config must be a JSON object");
  ExperimentConfig cfg;
  try {
    if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<int>>();
    if (j.contains("count")) cfg.count = j.at("count").get<int>();
    if (j.contains("classes")) {
      cfg.classes.clear();
      for (const auto& c : j.at("classes")) cfg.classes.push_back(parse_landscape_class(c.get<std::string>()));
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("policy")) cfg.policy = parse_policy(j.at("policy").get<std::string>());
    if (j.contains("combine")) cfg.combine = parse_combine(j.at("combine").get<std::string>());
    if (j.contains("value_domain") && !j.at("value_domain").is_null()) {
      cfg.value_domain = j.at("value_domain").get<std::int64_t>();
    }
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad experiment config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json classes = nlohmann::json::array();
  for (auto c : cfg.classes) classes.push_back(std::string(to_string(c)));
  return {{"sizes", cfg.sizes},
          {"count", cfg.count},
          {"classes", classes},
          {"seed", cfg.seed},
          {"policy", std::string(to_string(cfg.policy))},
          {"combine", std::string(to_string(cfg.combine))},
          {"value_domain", cfg.value_domain ? nlohmann::json(*cfg.value_domain) : nlohmann::json(nullptr)}};
}

std::uint64_t config_hash(const ExperimentConfig& cfg) { return fnv1a(to_json(cfg).dump()); }

std::uint64_t cell_seed(std::uint64_t seed, int num_vars, LandscapeClass cls) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(num_vars)), cls == LandscapeClass::Nsf ? 1 : 0);
}

LandscapeRecord analyse_landscape(const FitnessLandscape& l, TransitionPolicy policy, int landscape_id) {
  const auto model = build_chain<double>(l, policy);
  const auto result = p_global(l, model, Combine::Sum);
  LandscapeRecord rec;
  rec.num_vars = l.num_vars();
  rec.cls = l.metadata().cls;
  rec.landscape_id = landscape_id;
  rec.seed = l.metadata().seed;
  rec.value_domain_size = l.metadata().value_domain_size;
  rec.num_absorbing = static_cast<std::int64_t>(model.absorbing.size());
  rec.num_global_optima = static_cast<std::int64_t>(result.global_absorbers.size());
  rec.p_global_sum = result.p_global;
  const auto averaged = reach_by_start(model, result.absorption, result.global_absorbers, Combine::Average);
  rec.p_global_avg = mean(std::span<const double>(averaged));
  return rec;
}

const CellResult* ExperimentReport::find(int num_vars, LandscapeClass cls) const {
  for (const auto& c : cells) {
    if (c.num_vars == num_vars && c.cls == cls) return &c;
  }
  return nullptr;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, const std::function<void(const CellResult&)>& on_cell) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;
  report.tool_version = tool_version();
  report.config_hash = config_hash(cfg);

  for (int n : cfg.sizes) {
    for (auto cls : cfg.classes) {
      GenConfig gen;
      gen.num_vars = n;
      gen.cls = cls;
      gen.value_domain_size = cfg.value_domain;
      gen.seed = cell_seed(cfg.seed, n, cls);

      CellResult cell;
      cell.num_vars = n;
      cell.cls = cls;
      cell.records.resize(static_cast<std::size_t>(cfg.count));
      parallel_for(cell.records.size(), cfg.threads, [&](std::size_t i) {
        GenConfig child = gen;
        child.seed = derive_seed(gen.seed, i);
        cell.records[i] = analyse_landscape(generate(child), cfg.policy, static_cast<int>(i));
      });
      cell.sample.reserve(cell.records.size());
      for (const auto& r : cell.records) cell.sample.push_back(r.p_global(cfg.combine));
      cell.summary = five_number_summary(cell.sample);
      cell.mean = sample_mean(cell.sample);
      if (on_cell) on_cell(cell);
      report.cells.push_back(std::move(cell));
    }
  }

  for (int n : cfg.sizes) {
    const auto* nsf = report.find(n, LandscapeClass::Nsf);
    const auto* nonsf = report.find(n, LandscapeClass::NoNsf);
    if (nsf == nullptr || nonsf == nullptr) continue;
    const auto ks = ks_two_sample(nonsf->sample, nsf->sample);
    report.ks.push_back(KsRow{n, ks, ks.p_value < kKsAlpha});
  }
  return report;
}

std::string to_csv_row(const LandscapeRecord& r) {
  return std::to_string(r.num_vars) + ',' + std::string(to_string(r.cls)) + ',' + std::to_string(r.landscape_id) +
         ',' + std::to_string(r.seed) + ',' + std::to_string(r.value_domain_size) + ',' +
         std::to_string(r.num_absorbing) + ',' + std::to_string(r.num_global_optima) + ',' +
         format_double(r.p_global_avg) + ',' + format_double(r.p_global_sum);
}

void write_csv_rows(const CellResult& cell, std::ostream& out) {
  for (const auto& r : cell.records) out << to_csv_row(r) << '\n';
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& cell : report.cells) write_csv_rows(cell, out);
}

nlohmann::json to_json(const ExperimentReport& report, const std::optional<std::string>& timestamp) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"n", c.num_vars},
                     {"class", std::string(to_string(c.cls))},
                     {"count", c.records.size()},
                     {"combine", std::string(to_string(report.config.combine))},
                     {"mean", c.mean},
                     {"min", c.summary.min},
                     {"q1", c.summary.q1},
                     {"median", c.summary.median},
                     {"q3", c.summary.q3},
                     {"max", c.summary.max}});
  }
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& row : report.ks) {
    ks.push_back({{"n", row.num_vars},
                  {"D", row.ks.statistic},
                  {"p_value", row.ks.p_value},
                  {"reject_at_99", row.reject_at_99}});
  }
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(report.config_hash));
  nlohmann::json provenance = {
      {"seed", report.config.seed}, {"config_hash", hash}, {"tool_version", report.tool_version}};
  if (timestamp) provenance["timestamp"] = *timestamp;
  return {{"provenance", provenance}, {"config", to_json(report.config)}, {"cells", cells}, {"ks", ks}};
}

}  // namespace nsfland
