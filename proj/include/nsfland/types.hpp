#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace nsfland {

using Fitness = std::int32_t;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

}  // namespace nsfland
