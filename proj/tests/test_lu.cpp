#include <doctest.h>

#include <Eigen/LU>

#include "nsfland/errors.hpp"
#include "nsfland/lu.hpp"
#include "oracles.hpp"

using namespace nsfland;

TEST_CASE("solve agrees with Eigen's partial-pivot LU") {
  std::srand(3);
  for (int size : {1, 2, 5, 17, 40}) {
    const Eigen::MatrixXd a = Eigen::MatrixXd::Random(size, size) + 2.0 * Eigen::MatrixXd::Identity(size, size);
    const Eigen::MatrixXd b = Eigen::MatrixXd::Random(size, 3);
    const Eigen::MatrixXd ours = DenseLu<double>(a).solve(b);
    const Eigen::MatrixXd ref = a.partialPivLu().solve(b);
    CHECK((ours - ref).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("packed factors reconstruct P A") {
  std::srand(11);
  const Eigen::MatrixXd a = Eigen::MatrixXd::Random(9, 9);
  const DenseLu<double> lu(a);
  const Eigen::MatrixXd packed = lu.packed();
  const Eigen::MatrixXd l = packed.triangularView<Eigen::UnitLower>();
  const Eigen::MatrixXd u = packed.triangularView<Eigen::Upper>();
  Eigen::MatrixXd pa(9, 9);
  for (Index i = 0; i < 9; ++i) pa.row(i) = a.row(lu.permutation()[static_cast<std::size_t>(i)]);
  CHECK((l * u - pa).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exact rational inverse") {
  using oracle::Rational;
  MatrixX<Rational> a(3, 3);
  a << Rational(0), Rational(1), Rational(2),
       Rational(1), Rational(1, 3), Rational(0),
       Rational(4), Rational(0), Rational(1, 2);
  const auto inv = DenseLu<Rational>(a).inverse();
  const MatrixX<Rational> id = MatrixX<Rational>::Identity(3, 3);
  const auto left = oracle::multiply(inv, a), right = oracle::multiply(a, inv);
  CHECK(oracle::same_matrix(left, id));
  CHECK(oracle::same_matrix(right, id));
}

TEST_CASE("singular and non-square matrices are rejected") {
  Eigen::MatrixXd singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK_THROWS_AS(DenseLu<double>{singular}, SingularMatrixError);
  using oracle::Rational;
  MatrixX<Rational> zero = MatrixX<Rational>::Zero(2, 2);
  CHECK_THROWS_AS(DenseLu<Rational>{zero}, SingularMatrixError);
  CHECK_THROWS_AS(DenseLu<double>{Eigen::MatrixXd::Ones(2, 3)}, DomainError);
}
