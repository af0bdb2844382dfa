#include <gtest/gtest.h>

#include <random>

#include <Eigen/Dense>

#include "spfem/banded.hpp"
#include "spfem/galerkin.hpp"

namespace spfem {
namespace {

BandedMatrix<double> random_band(int n, int kl, int ku, double diag_boost, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  BandedMatrix<double> A(n, kl, ku);
  for (int j = 0; j < n; ++j)
    for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i) A(i, j) = dist(rng);
  for (int i = 0; i < n; ++i) A(i, i) += diag_boost;
  return A;
}

TEST(BandedLU, Identity) {
  BandedMatrix<double> A(5, 1, 1);
  for (int i = 0; i < 5; ++i) A(i, i) = 1.0;
  Eigen::VectorXd b(5);
  b << 1, 2, 3, 4, 5;
  EXPECT_EQ(BandedLU<double>(A).solve(b), b);
}

TEST(BandedLU, DiagonallyDominantMatchesDenseLU) {
  const int n = 50;
  const auto A = random_band(n, 3, 3, 8.0, 1);
  Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(n, -1.0, 2.0);
  const Eigen::VectorXd x = BandedLU<double>(A).solve(b);
  const Eigen::VectorXd ref = A.to_dense().partialPivLu().solve(b);
  EXPECT_LE((x - ref).norm(), 1e-10 * ref.norm());
}

// No diagonal boost: elimination has to interchange rows and fill the headroom.
TEST(BandedLU, PivotingCaseMatchesDenseLU) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    const int n = 100;
    const auto A = random_band(n, 2, 3, 0.0, seed);
    Eigen::VectorXd b = Eigen::VectorXd::Ones(n);
    const BandedLU<double> lu(A);
    const Eigen::VectorXd x = lu.solve(b);
    const Eigen::VectorXd ref = A.to_dense().partialPivLu().solve(b);
    EXPECT_LE((x - ref).norm(), 1e-10 * ref.norm()) << seed;
    bool swapped = false;
    for (int i = 0; i < n; ++i) swapped |= lu.pivots()[i] != i;
    EXPECT_TRUE(swapped);
  }
}

TEST(BandedLU, SingularPivotReportsIndex) {
  BandedMatrix<double> A(4, 1, 1);
  A(0, 0) = 1.0;
  A(1, 1) = 1.0;
  A(3, 3) = 1.0;  // column 2 is empty
  try {
    BandedLU<double> lu(A);
    FAIL() << "expected SingularPivotError";
  } catch (const SingularPivotError& err) {
    EXPECT_EQ(err.index(), 2);
  }
}

TEST(BandedMatrix, DenseViewAndProduct) {
  const auto A = random_band(12, 2, 1, 0.0, 3);
  const Eigen::MatrixXd D = A.to_dense();
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(12, 0.0, 1.0);
  EXPECT_LE(((A * x) - D * x).norm(), 1e-14);
  EXPECT_DOUBLE_EQ(A.norm_inf(), D.cwiseAbs().rowwise().sum().maxCoeff());
  EXPECT_EQ(A(0, 5), 0.0);
}

TEST(BandedSolve, ResidualBoundOnLargeLayerSystem) {
  const double eps = 1e-6;
  const auto bvp = paper_test_problem(eps);
  const Mesh1D mesh = generate({MeshFamily::RoosB, 1024, 5.0, eps, 1.0, 1.0});
  const BandedSystem sys = assemble(bvp, mesh, 4);
  const Eigen::VectorXd x = solve(sys);
  const double residual = (sys.matrix * x - sys.rhs).lpNorm<Eigen::Infinity>();
  const double scale = sys.matrix.norm_inf() * x.lpNorm<Eigen::Infinity>() +
                       sys.rhs.lpNorm<Eigen::Infinity>();
  EXPECT_LE(residual, 1e-9 * scale);
}

}  // namespace
}  // namespace spfem
