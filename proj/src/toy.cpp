#include "nsfland/toy.hpp"

#include <algorithm>
#include <chrono>

namespace nsfland {

bool ToyReport::passed() const {
  return std::ranges::all_of(checks, [](const ToyCheck& c) { return c.passed; });
}

ToyReport verify_toy(double tolerance) {
  const auto started = std::chrono::steady_clock::now();
  ToyReport report;
  const auto toy = toy_chain<double>();
  const auto model =
      import_chain<double>(toy.to_transient, toy.to_absorbing, toy.transient_fitness, toy.absorbing_fitness);

  const MatrixX<double> fundamental = fundamental_matrix(model);
  const double n_error = (fundamental - toy.expected_fundamental).cwiseAbs().maxCoeff();
  report.checks.push_back({"fundamental matrix matches expected values", n_error <= tolerance, n_error});

  const double residual = fundamental_residual(model, fundamental);
  report.checks.push_back({"N (I - Q) = I", residual <= tolerance, residual});

  const MatrixX<double> absorption = absorption_probabilities(model);
  const double b_error = (absorption.array() - 1.0).abs().maxCoeff();
  report.checks.push_back({"absorption probabilities are all one", b_error <= tolerance, b_error});

  const MatrixX<double> product = fundamental * model.to_absorbing;
  const double nr_error = (product - absorption).cwiseAbs().maxCoeff();
  report.checks.push_back({"B equals N R", nr_error <= tolerance, nr_error});

  for (Combine mode : {Combine::Average, Combine::Sum}) {
    const double p = p_global(model, mode).p_global;
    report.checks.push_back({"p_global = 1 (" + std::string(to_string(mode)) + ")",
                             std::abs(p - 1.0) <= tolerance, std::abs(p - 1.0)});
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  report.checks.push_back({"runtime under one second", report.seconds < 1.0, report.seconds});
  return report;
}

}  // namespace nsfland
