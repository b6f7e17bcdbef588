#pragma once

#include <string>
#include <vector>

#include "nsfland/markov.hpp"

namespace nsfland {

/// Six-solution worked example: fitness 1..6, s6 the only absorbing state,
/// every transient state moving uniformly to the listed better solutions.
template <typename Scalar>
struct ToyChain {
  MatrixX<Scalar> to_transient;
  MatrixX<Scalar> to_absorbing;
  std::vector<Fitness> transient_fitness{1, 2, 3, 4, 5};
  std::vector<Fitness> absorbing_fitness{6};
  /// Expected fundamental matrix.
  MatrixX<Scalar> expected_fundamental;
};

template <typename Scalar>
ToyChain<Scalar> toy_chain() {
  const Scalar zero(0), one(1);
  const Scalar quarter = one / Scalar(4), third = one / Scalar(3), half = one / Scalar(2);
  ToyChain<Scalar> toy;
  toy.to_transient.resize(5, 5);
  toy.to_transient << zero, quarter, quarter, quarter, quarter,
                      zero, zero, quarter, quarter, quarter,
                      zero, zero, zero, third, third,
                      zero, zero, zero, zero, half,
                      zero, zero, zero, zero, zero;
  toy.to_absorbing.resize(5, 1);
  toy.to_absorbing << zero, quarter, third, half, one;
  const Scalar five_sixteenths = Scalar(5) / Scalar(16), five_twelfths = Scalar(5) / Scalar(12);
  const Scalar five_eighths = Scalar(5) / Scalar(8);
  toy.expected_fundamental.resize(5, 5);
  toy.expected_fundamental << one, quarter, five_sixteenths, five_twelfths, five_eighths,
                              zero, one, quarter, third, half,
                              zero, zero, one, third, half,
                              zero, zero, zero, one, half,
                              zero, zero, zero, zero, one;
  return toy;
}

struct ToyCheck {
  std::string name;
  bool passed = false;
  double error = 0.0;
};

struct ToyReport {
  std::vector<ToyCheck> checks;
  double seconds = 0.0;

  bool passed() const;
};

/// Imports the toy chain, solves it and compares against the expected N and
/// the all-ones absorption vector.
ToyReport verify_toy(double tolerance = 1e-9);

}  // namespace nsfland
