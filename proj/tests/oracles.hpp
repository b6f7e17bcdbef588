#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they are used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "nsfland/landscape.hpp"
#include "nsfland/random.hpp"
#include "nsfland/types.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using nsfland::Fitness;

/// Relabels solutions by a hypercube automorphism: permute bit positions,
/// then xor with a mask. f'(phi(s)) = f(s).
inline nsfland::FitnessLandscape apply_automorphism(const nsfland::FitnessLandscape& l, nsfland::Rng& rng) {
  const int n = l.num_vars();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  nsfland::shuffle(std::span(perm), rng);
  const auto mask = static_cast<std::uint32_t>(nsfland::uniform_below(rng, l.size()));
  std::vector<Fitness> values(l.size());
  for (std::uint32_t s = 0; s < l.size(); ++s) {
    std::uint32_t image = 0;
    for (int b = 0; b < n; ++b) {
      if ((s >> b) & 1u) image |= 1u << perm[static_cast<std::size_t>(b)];
    }
    values[image ^ mask] = l[s];
  }
  return nsfland::FitnessLandscape(n, std::move(values), l.metadata());
}

/// Random landscape with values in [0, domain).
inline nsfland::FitnessLandscape random_landscape(int n, std::int64_t domain, std::uint64_t seed) {
  nsfland::Rng rng(seed);
  std::vector<Fitness> values(std::size_t{1} << n);
  for (auto& v : values) v = static_cast<Fitness>(rng() % static_cast<std::uint64_t>(domain));
  return nsfland::FitnessLandscape(n, std::move(values),
                                   nsfland::LandscapeMetadata{nsfland::LandscapeClass::External, seed, domain});
}

/// Neighbour pool and per-delta proportions straight from the set-builder
/// definitions, using std::set and bitstring flips.
struct BruteNsf {
  std::vector<Fitness> deltas;
  std::map<Fitness, std::vector<double>> p;
  std::map<Fitness, std::vector<double>> pn;
};

inline BruteNsf brute_nsf(const nsfland::FitnessLandscape& l) {
  BruteNsf out;
  std::set<Fitness> realised(l.values().begin(), l.values().end());
  std::set<Fitness> deltas;
  for (Fitness u : realised)
    for (Fitness w : realised) deltas.insert(u > w ? u - w : w - u);
  out.deltas.assign(deltas.begin(), deltas.end());
  const int n = l.num_vars();
  for (Fitness v : realised) {
    std::set<std::uint32_t> pool;
    for (std::uint32_t s = 0; s < l.size(); ++s) {
      if (l[s] != v) continue;
      const auto bits = nsfland::to_bitstring(nsfland::SolutionId{s}, n);
      for (std::size_t i = 0; i < bits.size(); ++i) {
        auto flipped = bits;
        flipped[i] = flipped[i] == '0' ? '1' : '0';
        pool.insert(nsfland::from_bitstring(flipped).index);
      }
    }
    for (Fitness d : out.deltas) {
      double in_space = 0, in_pool = 0;
      for (std::uint32_t s = 0; s < l.size(); ++s)
        if (l[s] == v + d || l[s] == v - d) in_space += 1;
      for (std::uint32_t s : pool)
        if (l[s] == v + d || l[s] == v - d) in_pool += 1;
      out.p[v].push_back(in_space / l.size());
      out.pn[v].push_back(in_pool / static_cast<double>(pool.size()));
    }
  }
  return out;
}

/// Absorption probabilities of a strictly improving climb by explicit path
/// enumeration: map from absorbing solution to probability, for one start.
/// Only valid when every move strictly increases fitness.
inline void enumerate_improving_paths(const nsfland::FitnessLandscape& l, std::uint32_t s, const Rational& prob,
                                      std::map<std::uint32_t, Rational>& out) {
  std::vector<std::uint32_t> better;
  for (int b = 0; b < l.num_vars(); ++b) {
    const std::uint32_t t = s ^ (1u << b);
    if (l[t] > l[s]) better.push_back(t);
  }
  if (better.empty()) {
    out[s] += prob;
    return;
  }
  const Rational step = prob / Rational(static_cast<long>(better.size()));
  for (std::uint32_t t : better) enumerate_improving_paths(l, t, step, out);
}

/// Elementwise equality that doctest can report as a plain bool.
/// Plain loops: Eigen expressions over cpp_rational trip a Boost trait.
template <typename Scalar>
bool same_matrix(const nsfland::MatrixX<Scalar>& a, const nsfland::MatrixX<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Scalar>
nsfland::MatrixX<Scalar> multiply(const nsfland::MatrixX<Scalar>& a, const nsfland::MatrixX<Scalar>& b) {
  nsfland::MatrixX<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar total(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) total += a(i, k) * b(k, j);
      out(i, j) = total;
    }
  return out;
}

/// Truncated sum_{k <= terms} Q^k.
inline Eigen::MatrixXd power_series(const Eigen::MatrixXd& q, int terms) {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(q.rows(), q.cols());
  Eigen::MatrixXd power = sum;
  for (int k = 1; k <= terms; ++k) {
    power = power * q;
    sum += power;
  }
  return sum;
}

}  // namespace oracle
