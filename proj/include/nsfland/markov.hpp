#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "nsfland/errors.hpp"
#include "nsfland/landscape.hpp"
#include "nsfland/lu.hpp"
#include "nsfland/types.hpp"

namespace nsfland {

/// How a local search picks its next move.
enum class TransitionPolicy {
  /// Strictly better neighbours uniformly; failing that, equal neighbours
  /// uniformly; failing that, stop.
  GreedyPlateau,
  /// Strictly better neighbours uniformly; failing that, stop.
  StrictImproving,
};

/// How reach probabilities of several global optima are folded together.
enum class Combine { Average, Sum };

std::string_view to_string(TransitionPolicy policy);
std::string_view to_string(Combine combine);
TransitionPolicy parse_policy(std::string_view text);
Combine parse_combine(std::string_view text);

/// A chain state: one solution, or a closed class of equal-fitness solutions
/// contracted into a single absorbing state. For imported chains the members
/// are synthetic labels.
struct MacroState {
  std::vector<std::uint32_t> members;
  Fitness fitness = 0;
};

/// Scalar-free structure of the search chain over a landscape.
struct ChainSkeleton {
  /// Single-solution transient states, ordered by (fitness, index).
  std::vector<MacroState> transient;
  /// Closed classes, ordered by smallest member.
  std::vector<MacroState> absorbing;
  /// Per solution: position in `transient`, or -1.
  std::vector<std::int64_t> transient_index;
  /// Per solution: position in `absorbing`, or -1.
  std::vector<std::int64_t> absorbing_index;
  /// Per transient state: the solutions it moves to, each with equal probability.
  std::vector<std::vector<std::uint32_t>> successors;
};

/// Builds the move graph under `policy`, finds its strongly connected
/// components and turns every closed one into an absorbing state. Throws
/// CapacityError above kMaxVars variables.
ChainSkeleton chain_skeleton(const FitnessLandscape& l, TransitionPolicy policy);

/// Absorbing chain in canonical form P = [[Q, R], [0, I]].
template <typename Scalar>
struct TransitionModel {
  std::vector<MacroState> transient;
  std::vector<MacroState> absorbing;
  std::vector<std::int64_t> transient_index;
  std::vector<std::int64_t> absorbing_index;
  /// Q: transient -> transient.
  MatrixX<Scalar> to_transient;
  /// R: transient -> absorbing.
  MatrixX<Scalar> to_absorbing;

  std::size_t num_labels() const noexcept { return transient_index.size(); }
};

template <typename Scalar>
TransitionModel<Scalar> build_chain(const FitnessLandscape& l,
                                    TransitionPolicy policy = TransitionPolicy::GreedyPlateau) {
  ChainSkeleton skel = chain_skeleton(l, policy);
  const auto t = static_cast<Index>(skel.transient.size());
  const auto a = static_cast<Index>(skel.absorbing.size());
  TransitionModel<Scalar> m;
  m.to_transient = MatrixX<Scalar>::Zero(t, t);
  m.to_absorbing = MatrixX<Scalar>::Zero(t, a);
  for (Index i = 0; i < t; ++i) {
    const auto& succ = skel.successors[static_cast<std::size_t>(i)];
    const Scalar step = Scalar(1) / Scalar(static_cast<long>(succ.size()));
    for (std::uint32_t s : succ) {
      if (const auto j = skel.transient_index[s]; j >= 0) {
        m.to_transient(i, j) += step;
      } else {
        m.to_absorbing(i, skel.absorbing_index[s]) += step;
      }
    }
  }
  m.transient = std::move(skel.transient);
  m.absorbing = std::move(skel.absorbing);
  m.transient_index = std::move(skel.transient_index);
  m.absorbing_index = std::move(skel.absorbing_index);
  return m;
}

namespace detail {
/// Throws ValidationError unless every transient state can reach an
/// absorbing one through non-zero entries.
void check_absorption_reachable(const std::vector<std::vector<Index>>& forward,
                                const std::vector<bool>& exits);
}  // namespace detail

/// Wraps externally supplied Q and R. Transient state i gets label i and
/// absorbing state j label T + j. Optional fitness vectors tag the states so
/// p_global can identify global optima.
template <typename Scalar, typename DerivedQ, typename DerivedR>
TransitionModel<Scalar> import_chain(const Eigen::MatrixBase<DerivedQ>& q, const Eigen::MatrixBase<DerivedR>& r,
                                     std::span<const Fitness> transient_fitness = {},
                                     std::span<const Fitness> absorbing_fitness = {},
                                     double row_tolerance = 1e-9) {
  using std::abs;
  const Index t = q.rows();
  const Index a = r.cols();
  if (q.cols() != t) throw ValidationError("Q must be square");
  if (r.rows() != t) throw ValidationError("R must have one row per transient state");
  if (a < 1) throw ValidationError("chain needs at least one absorbing state");
  if (!transient_fitness.empty() && static_cast<Index>(transient_fitness.size()) != t) {
    throw ValidationError("transient fitness vector has the wrong length");
  }
  if (!absorbing_fitness.empty() && static_cast<Index>(absorbing_fitness.size()) != a) {
    throw ValidationError("absorbing fitness vector has the wrong length");
  }

  const Scalar tol = Scalar(row_tolerance);
  std::vector<std::vector<Index>> forward(static_cast<std::size_t>(t));
  std::vector<bool> exits(static_cast<std::size_t>(t), false);
  for (Index i = 0; i < t; ++i) {
    Scalar sum(0);
    for (Index j = 0; j < t; ++j) {
      const Scalar x = q(i, j);
      if (x < Scalar(0)) throw ValidationError("negative transition probability in Q");
      if (x != Scalar(0)) forward[static_cast<std::size_t>(i)].push_back(j);
      sum += x;
    }
    for (Index j = 0; j < a; ++j) {
      const Scalar x = r(i, j);
      if (x < Scalar(0)) throw ValidationError("negative transition probability in R");
      if (x != Scalar(0)) exits[static_cast<std::size_t>(i)] = true;
      sum += x;
    }
    if (abs(sum - Scalar(1)) > tol) {
      throw ValidationError("row " + std::to_string(i) + " of [Q | R] does not sum to one");
    }
  }
  detail::check_absorption_reachable(forward, exits);

  TransitionModel<Scalar> m;
  m.to_transient = q.template cast<Scalar>();
  m.to_absorbing = r.template cast<Scalar>();
  const auto labels = static_cast<std::size_t>(t + a);
  m.transient_index.assign(labels, -1);
  m.absorbing_index.assign(labels, -1);
  for (Index i = 0; i < t; ++i) {
    const auto label = static_cast<std::uint32_t>(i);
    m.transient.push_back(
        MacroState{{label}, transient_fitness.empty() ? Fitness{0} : transient_fitness[static_cast<std::size_t>(i)]});
    m.transient_index[label] = i;
  }
  for (Index j = 0; j < a; ++j) {
    const auto label = static_cast<std::uint32_t>(t + j);
    m.absorbing.push_back(
        MacroState{{label}, absorbing_fitness.empty() ? Fitness{0} : absorbing_fitness[static_cast<std::size_t>(j)]});
    m.absorbing_index[label] = j;
  }
  return m;
}

template <typename Scalar>
MatrixX<Scalar> identity_minus_transient(const TransitionModel<Scalar>& m) {
  const Index t = m.to_transient.rows();
  return MatrixX<Scalar>::Identity(t, t) - m.to_transient;
}

/// N = (I - Q)^{-1}: expected visits to each transient state before absorption.
template <typename Scalar>
MatrixX<Scalar> fundamental_matrix(const TransitionModel<Scalar>& m) {
  if (m.to_transient.rows() == 0) return MatrixX<Scalar>(0, 0);
  return DenseLu<Scalar>(identity_minus_transient(m)).inverse();
}

/// B = N R, obtained by solving (I - Q) B = R with the same factorisation.
template <typename Scalar>
MatrixX<Scalar> absorption_probabilities(const TransitionModel<Scalar>& m) {
  if (m.to_transient.rows() == 0) return MatrixX<Scalar>(0, m.to_absorbing.cols());
  return DenseLu<Scalar>(identity_minus_transient(m)).solve(m.to_absorbing);
}

/// max |N (I - Q) - I|.
template <typename Scalar>
Scalar fundamental_residual(const TransitionModel<Scalar>& m, const MatrixX<Scalar>& fundamental) {
  using std::abs;
  const Index t = m.to_transient.rows();
  const MatrixX<Scalar> e = fundamental * identity_minus_transient(m) - MatrixX<Scalar>::Identity(t, t);
  Scalar worst(0);
  for (Index i = 0; i < e.rows(); ++i)
    for (Index j = 0; j < e.cols(); ++j)
      if (abs(e(i, j)) > worst) worst = abs(e(i, j));
  return worst;
}

template <typename Scalar>
struct AbsorptionResult {
  /// N; empty unless requested.
  MatrixX<Scalar> fundamental;
  /// B, transient x absorbing.
  MatrixX<Scalar> absorption;
  /// Absorbing states whose fitness is the chain's maximum.
  std::vector<Index> global_absorbers;
  /// Per label (solution), probability of ending in a global optimum.
  std::vector<Scalar> reach_by_start;
  /// Mean of reach_by_start over all labels.
  Scalar p_global = Scalar(0);
};

template <typename Scalar>
std::vector<Index> global_absorbers(const TransitionModel<Scalar>& m) {
  Fitness best = std::numeric_limits<Fitness>::min();
  for (const auto& s : m.transient) best = std::max(best, s.fitness);
  for (const auto& s : m.absorbing) best = std::max(best, s.fitness);
  std::vector<Index> out;
  for (std::size_t j = 0; j < m.absorbing.size(); ++j) {
    if (m.absorbing[j].fitness == best) out.push_back(static_cast<Index>(j));
  }
  return out;
}

/// Per-label probability of ending in a global optimum. Sum adds the
/// absorption probabilities of all global optima; Average divides that by
/// their number. An absorbing start counts as reaching itself.
template <typename Scalar>
std::vector<Scalar> reach_by_start(const TransitionModel<Scalar>& m, const MatrixX<Scalar>& absorption,
                                   std::span<const Index> globals, Combine combine) {
  std::vector<bool> is_global(m.absorbing.size(), false);
  for (Index g : globals) is_global[static_cast<std::size_t>(g)] = true;
  const Scalar weight =
      combine == Combine::Average && !globals.empty() ? Scalar(1) / Scalar(static_cast<long>(globals.size())) : Scalar(1);

  std::vector<Scalar> reach(m.num_labels(), Scalar(0));
  for (std::size_t label = 0; label < reach.size(); ++label) {
    if (const auto i = m.transient_index[label]; i >= 0) {
      Scalar total(0);
      for (Index g : globals) total += absorption(i, g);
      reach[label] = total * weight;
    } else if (is_global[static_cast<std::size_t>(m.absorbing_index[label])]) {
      reach[label] = weight;
    }
  }
  return reach;
}

template <typename Scalar>
Scalar mean(std::span<const Scalar> xs) {
  Scalar total(0);
  for (const auto& x : xs) total += x;
  return xs.empty() ? total : total / Scalar(static_cast<long>(xs.size()));
}

/// Probability that the search, started from a uniformly random solution,
/// ends in a global optimum.
template <typename Scalar>
AbsorptionResult<Scalar> p_global(const TransitionModel<Scalar>& m, Combine combine = Combine::Average,
                                  bool keep_fundamental = false) {
  AbsorptionResult<Scalar> out;
  const Index t = m.to_transient.rows();
  if (t > 0) {
    const DenseLu<Scalar> lu(identity_minus_transient(m));
    out.absorption = lu.solve(m.to_absorbing);
    if (keep_fundamental) out.fundamental = lu.inverse();
  } else {
    out.absorption = MatrixX<Scalar>(0, m.to_absorbing.cols());
    if (keep_fundamental) out.fundamental = MatrixX<Scalar>(0, 0);
  }
  out.global_absorbers = global_absorbers(m);
  out.reach_by_start = reach_by_start(m, out.absorption, out.global_absorbers, combine);
  out.p_global = mean(std::span<const Scalar>(out.reach_by_start));
  return out;
}

/// As above, checking that `m` was built over `l`.
template <typename Scalar>
AbsorptionResult<Scalar> p_global(const FitnessLandscape& l, const TransitionModel<Scalar>& m,
                                  Combine combine = Combine::Average, bool keep_fundamental = false) {
  if (m.num_labels() != l.size()) throw DomainError("transition model was not built from this landscape");
  return p_global(m, combine, keep_fundamental);
}

}  // namespace nsfland
