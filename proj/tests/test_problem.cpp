#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spfem/problem.hpp"

namespace spfem {
namespace {

const double kEpsGrid[] = {1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9};

TEST(LayerProblem, BoundaryValues) {
  const auto bvp = paper_test_problem(1e-3);
  EXPECT_EQ(bvp.exact->u(0.0), 0.0);
  EXPECT_EQ(bvp.exact->u(1.0), 0.0);
}

TEST(LayerProblem, MidpointValue) {
  EXPECT_NEAR(paper_test_problem(0.1).exact->u(0.5), 0.499977300035119, 1e-14);
}

// Fourth-order central differences with step eps/100, taken in long double
// so that the difference quotient is not limited by round-off where u'' is
// tiny (x = 0.9).
TEST(LayerProblem, DerivativesMatchFiniteDifferences) {
  const double eps = 0.1;
  const auto bvp = paper_test_problem(eps);
  const long double le = eps;
  auto u = [le](long double x) { return (1.0L - x) * (1.0L - std::exp(-2.0L * x / le)); };
  const long double h = le / 100.0L;
  for (double x : {0.01, 0.1, 0.5, 0.9}) {
    const long double X = x;
    const double d1 = static_cast<double>(
        (-u(X + 2 * h) + 8 * u(X + h) - 8 * u(X - h) + u(X - 2 * h)) / (12 * h));
    const double d2 = static_cast<double>(
        (-u(X + 2 * h) + 16 * u(X + h) - 30 * u(X) + 16 * u(X - h) - u(X - 2 * h)) / (12 * h * h));
    EXPECT_NEAR(bvp.exact->u_prime(x), d1, 1e-6 * std::abs(d1)) << x;
    // u'' recovered from the equation: -eps u'' = f + b u' - c u
    const double from_f =
        -(bvp.f(x) + bvp.b(x) * bvp.exact->u_prime(x) - bvp.c(x) * bvp.exact->u(x)) / eps;
    EXPECT_NEAR(from_f, d2, 1e-6 * std::abs(d2)) << x;
  }
}

TEST(LayerProblem, CoefficientBounds) {
  const auto report = check_coefficients(paper_test_problem(1e-4));
  EXPECT_DOUBLE_EQ(report.min_b, 2.0);
  EXPECT_DOUBLE_EQ(report.min_reaction, 0.5);
  EXPECT_TRUE(report.convection_ok());
  EXPECT_TRUE(report.coercive());
}

TEST(LayerProblem, CoefficientCheckWithoutAnalyticDerivative) {
  TwoPointBVP bvp = paper_test_problem(1e-4);
  bvp.b_prime = nullptr;
  EXPECT_NEAR(check_coefficients(bvp).min_reaction, 0.5, 1e-8);

  bvp.c = [](double) { return 0.25; };  // c + b'/2 < 0
  EXPECT_FALSE(check_coefficients(bvp).coercive());
}

TEST(LayerProblem, ResidualVanishesOnGrid) {
  for (double eps : kEpsGrid) {
    const auto bvp = paper_test_problem(eps);
    const auto& ex = *bvp.exact;
    for (int s = 0; s < 1000; ++s) {
      const double x = s / 999.0;
      const double e0 = std::exp(-2.0 * x / eps);
      const double d2u = -(2.0 / eps) * e0 * (2.0 + 2.0 * (1.0 - x) / eps);
      const double f = bvp.f(x);
      const double res = -eps * d2u - bvp.b(x) * ex.u_prime(x) + bvp.c(x) * ex.u(x) - f;
      ASSERT_LE(std::abs(res), 1e-9 * std::max(1.0, std::abs(f))) << eps << " " << x;
    }
  }
}

TEST(LayerProblem, DecompositionConsistent) {
  for (double eps : kEpsGrid) {
    const auto ex = *paper_test_problem(eps).exact;
    for (int s = 0; s < 1000; ++s) {
      const double x = s / 999.0;
      const double u = ex.u(x), du = ex.u_prime(x);
      ASSERT_NEAR(ex.S(x) + ex.E(x), u, 1e-12 * std::max(1.0, std::abs(u)));
      ASSERT_NEAR(ex.S_prime(x) + ex.E_prime(x), du, 1e-12 * std::max(1.0, std::abs(du)));
    }
  }
}

TEST(LayerProblem, RejectsEpsilonOutOfRange) {
  EXPECT_THROW(paper_test_problem(0.0), std::invalid_argument);
  EXPECT_THROW(paper_test_problem(1.5), std::invalid_argument);
  EXPECT_THROW(make_problem("nope", 0.1), std::invalid_argument);
}

TEST(LayerBounds, RoosSmallExample) {
  const auto bvp = paper_test_problem(0.01);
  const Mesh1D mesh = generate({MeshFamily::RoosB, 8, 2.0, 0.01, 1.0, 1.0});
  const auto r = check_layer_bounds(bvp, mesh, 2.0);
  // |E(x_3)| = 0.00427722..., N^2 = 64
  EXPECT_NEAR(r.before_midpoint, 0.273742113378211, 1e-12);
  EXPECT_LT(r.before_midpoint, 10.0);
}

TEST(LayerBounds, BoundedOverGrid) {
  for (MeshFamily family : {MeshFamily::RoosB, MeshFamily::KoptevaB}) {
    for (int k = 1; k <= 4; ++k) {
      const double sigma = k + 1.0;
      for (int N = 8; N <= 2048; N *= 2) {
        for (double eps : kEpsGrid) {
          const Mesh1D mesh = generate({family, N, sigma, eps, 5.0 * (k + 1) / 4.0, 1.0});
          const auto r = check_layer_bounds(paper_test_problem(eps), mesh, sigma);
          ASSERT_LT(r.before_midpoint, 10.0) << N << " " << eps;
          ASSERT_LT(r.at_midpoint, 10.0) << N << " " << eps;
        }
      }
    }
  }
}

TEST(LayerBounds, UniformMeshStillEvaluates) {
  const auto bvp = paper_test_problem(0.5);
  const Mesh1D mesh = generate({MeshFamily::RoosB, 8, 2.0, 0.5, 1.0, 1.0});
  const auto r = check_layer_bounds(bvp, mesh, 2.0);
  EXPECT_TRUE(std::isfinite(r.before_midpoint));
  EXPECT_TRUE(std::isfinite(r.at_midpoint));
}

TEST(LayerBounds, RequiresLayerComponent) {
  TwoPointBVP bvp = paper_test_problem(0.01);
  bvp.exact.reset();
  const Mesh1D mesh = generate({MeshFamily::RoosB, 8, 2.0, 0.01, 1.0, 1.0});
  EXPECT_THROW(check_layer_bounds(bvp, mesh, 2.0), std::invalid_argument);
}

TEST(ManufacturedProblem, QuadraticForcing) {
  const auto bvp = quadratic_test_problem(0.3);
  // f = 2 eps - (3-x)(1-2x) + x(1-x)
  for (double x : {0.0, 0.2, 0.7, 1.0})
    EXPECT_NEAR(bvp.f(x), 0.6 - (3 - x) * (1 - 2 * x) + x * (1 - x), 1e-15);
}

}  // namespace
}  // namespace spfem
