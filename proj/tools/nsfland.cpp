// Command-line front end: landscape generation, NSF checks, chain analysis,
// Monte Carlo cross-checks and the full batch experiment.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsfland/errors.hpp"
#include "nsfland/experiment.hpp"
#include "nsfland/generator.hpp"
#include "nsfland/hill_climb.hpp"
#include "nsfland/landscape_io.hpp"
#include "nsfland/markov.hpp"
#include "nsfland/nsf_metrics.hpp"
#include "nsfland/parallel.hpp"
#include "nsfland/toy.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kVerification = 2, kIo = 3 };

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string threads = "1";
  std::string out;
  std::string format = "json";

  unsigned thread_count() const {
    if (threads == "auto") return nsfland::default_threads();
    try {
      const int t = std::stoi(threads);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
    throw nsfland::ValidationError("--threads must be a positive integer or 'auto'");
  }
};

json matrix_json(const nsfland::MatrixX<double>& m) {
  json rows = json::array();
  for (nsfland::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (nsfland::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

nsfland::FitnessLandscape load_single(const std::string& path) {
  auto all = nsfland::load_landscapes(path);
  if (all.size() != 1) throw nsfland::ValidationError(path + " holds " + std::to_string(all.size()) + " landscapes, expected one");
  return std::move(all.front());
}

void emit(const json& j, const GlobalOptions& g) {
  if (g.out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw nsfland::IoError("cannot write " + g.out);
  f << j.dump(2) << '\n';
}

void emit_text(const std::string& text, const GlobalOptions& g) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw nsfland::IoError("cannot write " + g.out);
  f << text;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitness landscape generator and local-search escape analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed (u64)");
  app.add_option("--threads", g.threads, "Worker threads, or 'auto'");
  app.add_option("--out", g.out, "Output file, or directory for gen/experiment");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate landscapes");
  int gen_n = 3;
  std::string gen_class = "nsf";
  int gen_count = 1;
  std::optional<std::int64_t> gen_domain;
  gen->add_option("--n", gen_n, "Variable count")->required()->check(CLI::Range(1, nsfland::kMaxVars));
  gen->add_option("--class", gen_class, "nsf or nonsf")->required();
  gen->add_option("--count", gen_count, "Number of landscapes")->check(CLI::PositiveNumber);
  gen->add_option("--value-domain", gen_domain, "Fitness values are drawn from [0, V); default 2^n");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Absorbing-chain analysis of one landscape");
  std::string an_in, an_policy = "greedy-plateau", an_combine = "average";
  bool an_matrices = false;
  analyze->add_option("--in", an_in, "Landscape JSON")->required();
  analyze->add_option("--policy", an_policy, "greedy-plateau or strict");
  analyze->add_option("--combine", an_combine, "average or sum");
  analyze->add_flag("--emit-matrices", an_matrices, "Include Q, R, N and B");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Monte Carlo hill-climb estimate");
  std::string or_in, or_scope = "plateau";
  std::int64_t or_runs = 10000;
  oracle->add_option("--in", or_in, "Landscape JSON")->required();
  oracle->add_option("--runs", or_runs, "Number of climbs")->check(CLI::PositiveNumber);
  oracle->add_option("--revisit-scope", or_scope, "plateau or climb")->check(CLI::IsMember({"plateau", "climb"}));

  // nsf-check
  auto* nsf = app.add_subcommand("nsf-check", "Evaluate the NSF property");
  std::string nsf_in;
  nsf->add_option("--in", nsf_in, "Landscape JSON")->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run the batch study");
  std::string ex_config;
  std::vector<int> ex_sizes;
  std::optional<int> ex_count;
  std::vector<std::string> ex_classes;
  std::optional<std::string> ex_policy, ex_combine;
  std::optional<std::int64_t> ex_domain;
  exp->add_option("--config", ex_config, "JSON config file");
  exp->add_option("--sizes", ex_sizes, "Variable counts")->delimiter(',');
  exp->add_option("--count", ex_count, "Landscapes per cell");
  exp->add_option("--classes", ex_classes, "nsf,nonsf")->delimiter(',');
  exp->add_option("--policy", ex_policy, "greedy-plateau or strict");
  exp->add_option("--combine", ex_combine, "average or sum");
  exp->add_option("--value-domain", ex_domain, "Fixed value domain size; default 2^n");

  auto* toy = app.add_subcommand("toy-verify", "Check the six-state worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*gen) {
      nsfland::GenConfig cfg;
      cfg.num_vars = gen_n;
      cfg.cls = nsfland::parse_landscape_class(gen_class);
      cfg.value_domain_size = gen_domain;
      cfg.seed = g.seed.value_or(0);
      const fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw nsfland::IoError("cannot create " + dir.string() + ": " + ec.message());
      const auto batch = nsfland::generate_batch(cfg, gen_count, g.thread_count());
      std::string prefix = cfg.cls == nsfland::LandscapeClass::Nsf ? "nsf" : "nonsf";
      for (std::size_t i = 0; i < batch.size(); ++i) {
        nsfland::save_landscape(batch[i], dir / (prefix + "_n" + std::to_string(gen_n) + "_" + std::to_string(i) + ".json"));
      }
      std::cerr << "wrote " << batch.size() << " landscapes to " << dir.string() << '\n';
    } else if (*analyze) {
      const auto l = load_single(an_in);
      const auto policy = nsfland::parse_policy(an_policy);
      const auto combine = nsfland::parse_combine(an_combine);
      const auto model = nsfland::build_chain<double>(l, policy);
      const auto result = nsfland::p_global(l, model, combine, an_matrices);
      if (g.format == "csv") {
        std::string text = "solution,reach\n";
        for (std::size_t s = 0; s < result.reach_by_start.size(); ++s) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", result.reach_by_start[s]);
          text += std::to_string(s) + ',' + buf + '\n';
        }
        emit_text(text, g);
      } else {
        json absorbing = json::array();
        std::vector<bool> global(model.absorbing.size(), false);
        for (auto idx : result.global_absorbers) global[static_cast<std::size_t>(idx)] = true;
        for (std::size_t j = 0; j < model.absorbing.size(); ++j) {
          absorbing.push_back({{"members", model.absorbing[j].members},
                               {"fitness", model.absorbing[j].fitness},
                               {"global", static_cast<bool>(global[j])}});
        }
        json out = {{"policy", std::string(nsfland::to_string(policy))},
                    {"combine", std::string(nsfland::to_string(combine))},
                    {"p_global", result.p_global},
                    {"reach_by_start", result.reach_by_start},
                    {"num_transient", model.transient.size()},
                    {"absorbing", absorbing}};
        if (an_matrices) {
          json transient_ids = json::array();
          for (const auto& s : model.transient) transient_ids.push_back(s.members.front());
          out["transient_order"] = transient_ids;
          out["Q"] = matrix_json(model.to_transient);
          out["R"] = matrix_json(model.to_absorbing);
          out["N"] = matrix_json(result.fundamental);
          out["B"] = matrix_json(result.absorption);
        }
        emit(out, g);
      }
    } else if (*oracle) {
      const auto l = load_single(or_in);
      nsfland::Rng rng(g.seed.value_or(0));
      const auto scope = or_scope == "climb" ? nsfland::RevisitScope::Climb : nsfland::RevisitScope::Plateau;
      const auto est = nsfland::estimate_reach(l, or_runs, rng, scope);
      if (g.format == "csv") {
        emit_text("p_hat,stderr,F_star,runs\n" + std::to_string(est.p_hat) + ',' +
                      std::to_string(est.standard_error) + ',' + std::to_string(est.f_star) + ',' +
                      std::to_string(est.runs) + '\n',
                  g);
      } else {
        emit({{"p_hat", est.p_hat}, {"stderr", est.standard_error}, {"F_star", est.f_star}, {"runs", est.runs}}, g);
      }
    } else if (*nsf) {
      const auto l = load_single(nsf_in);
      const auto profile = nsfland::check_nsf(l);
      if (g.format == "csv") {
        std::string text = "value,delta,p,pn\n";
        for (const auto& [v, entry] : profile.per_value) {
          for (std::size_t k = 0; k < profile.deltas.size(); ++k) {
            text += std::to_string(v) + ',' + std::to_string(profile.deltas[k]) + ',' +
                    std::to_string(entry.p[k].value()) + ',' + std::to_string(entry.pn[k].value()) + '\n';
          }
        }
        emit_text(text, g);
      } else {
        emit(nsfland::to_json(profile), g);
      }
    } else if (*exp) {
      nsfland::ExperimentConfig cfg;
      if (!ex_config.empty()) {
        std::ifstream f(ex_config);
        if (!f) throw nsfland::IoError("cannot open " + ex_config);
        json j;
        try {
          f >> j;
        } catch (const json::exception& e) {
          throw nsfland::ValidationError(ex_config + ": " + e.what());
        }
        cfg = nsfland::experiment_config_from_json(j);
      }
      if (!ex_sizes.empty()) cfg.sizes = ex_sizes;
      if (ex_count) cfg.count = *ex_count;
      if (!ex_classes.empty()) {
        cfg.classes.clear();
        for (const auto& c : ex_classes) cfg.classes.push_back(nsfland::parse_landscape_class(c));
      }
      if (ex_policy) cfg.policy = nsfland::parse_policy(*ex_policy);
      if (ex_combine) cfg.combine = nsfland::parse_combine(*ex_combine);
      if (ex_domain) cfg.value_domain = *ex_domain;
      if (g.seed) cfg.seed = *g.seed;
      if (app.get_option("--threads")->count() > 0) cfg.threads = g.thread_count();
      nsfland::validate(cfg);

      const fs::path dir = g.out.empty() ? fs::path("experiment_out") : fs::path(g.out);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw nsfland::IoError("cannot create " + dir.string() + ": " + ec.message());
      std::ofstream csv(dir / "results.csv");
      if (!csv) throw nsfland::IoError("cannot write " + (dir / "results.csv").string());
      csv << nsfland::kCsvHeader << '\n' << std::flush;

      const auto report = nsfland::run_experiment(cfg, [&](const nsfland::CellResult& cell) {
        nsfland::write_csv_rows(cell, csv);
        csv.flush();
        if (!csv) throw nsfland::IoError("write failed for " + (dir / "results.csv").string());
        std::cerr << "n=" << cell.num_vars << ' ' << nsfland::to_string(cell.cls) << ": median "
                  << cell.summary.median << ", mean " << cell.mean << '\n';
      });
      std::ofstream js(dir / "report.json");
      if (!js) throw nsfland::IoError("cannot write " + (dir / "report.json").string());
      js << nsfland::to_json(report, utc_timestamp()).dump(2) << '\n';
      for (const auto& row : report.ks) {
        std::cerr << "n=" << row.num_vars << " KS D=" << row.ks.statistic << " p=" << row.ks.p_value
                  << (row.reject_at_99 ? " (reject)" : "") << '\n';
      }
    } else if (*toy) {
      const auto report = nsfland::verify_toy();
      for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.error << ")\n";
      }
      std::cout << (report.passed() ? "toy-verify: PASS" : "toy-verify: FAIL") << '\n';
      return report.passed() ? kOk : kVerification;
    }
  } catch (const nsfland::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
