#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nsfland/errors.hpp"
#include "nsfland/types.hpp"

namespace nsfland {

/// Dense LU factorisation with partial pivoting, P A = L U, templated on the
/// scalar so the same code runs in double and in exact rational arithmetic.
///
/// Rows whose entry below the pivot is already zero are skipped in the
/// elimination, so matrices that are upper triangular apart from small
/// diagonal blocks (the shape of I - Q when transient states are ordered by
/// fitness) factor in close to quadratic time.
template <typename Scalar>
class DenseLu {
 public:
  using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  template <typename Derived>
  explicit DenseLu(const Eigen::MatrixBase<Derived>& a) : perm_(static_cast<std::size_t>(a.rows())) {
    if (a.rows() != a.cols()) throw DomainError("LU factorisation needs a square matrix");
    lu_ = a;
    factor();
  }

  Index size() const noexcept { return lu_.rows(); }

  /// Packed factors: strict lower part holds L (unit diagonal), upper part U.
  const RowMajor& packed() const noexcept { return lu_; }

  /// Row i of P A is row permutation()[i] of A.
  const std::vector<Index>& permutation() const noexcept { return perm_; }

  /// Solves A X = B.
  template <typename Derived>
  MatrixX<Scalar> solve(const Eigen::MatrixBase<Derived>& b) const {
    if (b.rows() != size()) throw DomainError("right-hand side has the wrong number of rows");
    MatrixX<Scalar> x(b.rows(), b.cols());
    for (Index i = 0; i < size(); ++i) x.row(i) = b.row(perm_[static_cast<std::size_t>(i)]);
    lu_.template triangularView<Eigen::UnitLower>().solveInPlace(x);
    lu_.template triangularView<Eigen::Upper>().solveInPlace(x);
    return x;
  }

  /// A^{-1}.
  MatrixX<Scalar> inverse() const { return solve(MatrixX<Scalar>::Identity(size(), size())); }

 private:
  void factor() {
    using std::abs;
    const Index n = lu_.rows();
    for (Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;

    // Pivots at or below this magnitude are treated as zero. For exact
    // scalars epsilon() is zero and only a true zero pivot is rejected.
    Scalar scale(0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (abs(lu_(i, j)) > scale) scale = abs(lu_(i, j));
    const Scalar tiny = Eigen::NumTraits<Scalar>::epsilon() * Scalar(static_cast<long>(n)) * scale;

    for (Index k = 0; k < n; ++k) {
      Index pivot = k;
      Scalar best = abs(lu_(k, k));
      for (Index i = k + 1; i < n; ++i) {
        const Scalar candidate = abs(lu_(i, k));
        if (candidate > best) {
          best = candidate;
          pivot = i;
        }
      }
      if (best <= tiny || best == Scalar(0)) {
        throw SingularMatrixError("matrix is singular to working precision at column " + std::to_string(k) +
                                  " of " + std::to_string(n));
      }
      if (pivot != k) {
        lu_.row(k).swap(lu_.row(pivot));
        std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(pivot)]);
      }
      const Index tail = n - k - 1;
      for (Index i = k + 1; i < n; ++i) {
        if (lu_(i, k) == Scalar(0)) continue;
        lu_(i, k) /= lu_(k, k);
        if (tail > 0) lu_.row(i).tail(tail) -= lu_(i, k) * lu_.row(k).tail(tail);
      }
    }
  }

  RowMajor lu_;
  std::vector<Index> perm_;
};

}  // namespace nsfland
