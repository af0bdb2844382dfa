#include <gtest/gtest.h>

#include <cmath>

#include "spfem/galerkin.hpp"
#include "spfem/interpolants.hpp"
#include "spfem/norms.hpp"

namespace spfem {
namespace {

TEST(ErrorNorms, IdenticalFunctionsGiveZero) {
  const Mesh1D mesh = generate({MeshFamily::KoptevaB, 16, 4.0, 1e-5, 5.0, 1.0});
  const auto p = [](double x) { return 2.0 * x * x * x - x + 0.5; };
  const auto dp = [](double x) { return 6.0 * x * x - 1.0; };
  const auto I = lagrange_interp(p, mesh, 3);
  const ErrorTriple e = error_norms(I, p, dp, 1e-5);
  EXPECT_LT(e.e_inf, 1e-11);
  EXPECT_LT(e.e_l2, 1e-11);
  EXPECT_LT(e.e_energy, 1e-11);
}

// int (x-x^2)^2 = 1/30, int (1-2x)^2 = 1/3
TEST(ErrorNorms, ClosedFormEnergyNorm) {
  const Mesh1D mesh = generate({MeshFamily::Uniform, 8, 1.0, 0.5, 1.0, 1.0});
  const auto v = [](double x) { return x * (1.0 - x); };
  const auto dv = [](double x) { return 1.0 - 2.0 * x; };
  const auto zero = [](double) { return 0.0; };
  const ErrorTriple e = error_norms(mesh, 2, v, dv, zero, zero, 1.0);
  EXPECT_NEAR(e.e_energy, std::sqrt(1.0 / 30.0 + 1.0 / 3.0), 1e-12);
  EXPECT_NEAR(e.e_l2, std::sqrt(1.0 / 30.0), 1e-12);
  EXPECT_NEAR(e.e_inf, 0.25, 1e-15);

  const auto I = lagrange_interp(v, mesh, 2);
  EXPECT_NEAR(norms_of(I, 1.0).e_energy, std::sqrt(1.0 / 30.0 + 1.0 / 3.0), 1e-12);
}

TEST(ErrorNorms, ReferenceValueK1N32) {
  const double eps = 1e-8;
  const auto bvp = paper_test_problem(eps);
  const Mesh1D mesh = generate({MeshFamily::RoosB, 32, 2.0, eps, 1.0, 1.0});
  const auto uh = galerkin_solve(bvp, mesh, 1);
  const double e = error_norms(uh, bvp.exact->u, bvp.exact->u_prime, eps).e_energy;
  EXPECT_NEAR(e, 0.0834, 0.02 * 0.0834);
}

TEST(ErrorNorms, SymmetricInArguments) {
  const Mesh1D mesh = generate({MeshFamily::RoosB, 16, 3.0, 1e-4, 1.0, 1.0});
  const auto ex = *paper_test_problem(1e-4).exact;
  const auto g = [](double x) { return std::sin(3 * x); };
  const auto dg = [](double x) { return 3 * std::cos(3 * x); };
  const auto ab = error_norms(mesh, 2, ex.u, ex.u_prime, g, dg, 1e-4);
  const auto ba = error_norms(mesh, 2, g, dg, ex.u, ex.u_prime, 1e-4);
  EXPECT_DOUBLE_EQ(ab.e_energy, ba.e_energy);
  EXPECT_DOUBLE_EQ(ab.e_l2, ba.e_l2);
  EXPECT_DOUBLE_EQ(ab.e_inf, ba.e_inf);
}

TEST(ErrorNorms, OrderingInvariants) {
  const double eps = 1e-6;
  const auto bvp = paper_test_problem(eps);
  for (int k = 1; k <= 4; ++k) {
    const Mesh1D mesh = generate({MeshFamily::KoptevaB, 32, k + 1.0, eps, 5.0 * (k + 1) / 4.0, 1.0});
    const auto e = error_norms(galerkin_solve(bvp, mesh, k), bvp.exact->u, bvp.exact->u_prime, eps);
    EXPECT_GE(e.e_l2, 0.0);
    EXPECT_LE(e.e_l2, e.e_inf);
    EXPECT_GE(e.e_energy, e.e_l2);
    EXPECT_GE(e.e_energy, std::sqrt(eps) * e.h1_seminorm);
  }
}

// Forcing every element to 128 panels moves the accepted value by < 1e-9
// relative. Below 1e-8 the pointwise derivative error is within a few
// thousand ulps of u', so only 1e-6 is asserted there.
TEST(ErrorNorms, RefinementConverged) {
  for (int k = 1; k <= 4; ++k) {
    for (MeshFamily family : {MeshFamily::RoosB, MeshFamily::KoptevaB}) {
      for (int N = 8; N <= (k <= 2 ? 2048 : 1024); N *= 4) {
        for (double eps : {1e-4, 1e-9}) {
          const auto bvp = paper_test_problem(eps);
          const Mesh1D mesh = generate({family, N, k + 1.0, eps, 5.0 * (k + 1) / 4.0, 1.0});
          const auto uh = galerkin_solve(bvp, mesh, k);
          const double base = error_norms(uh, bvp.exact->u, bvp.exact->u_prime, eps).e_energy;
          const double fine = error_norms(uh, bvp.exact->u, bvp.exact->u_prime, eps,
                                          NormOptions{128, 128, 0.0}).e_energy;
          const double tol = fine >= 1e-8 ? 1e-9 : 1e-6;
          EXPECT_NEAR(base, fine, tol * fine) << k << " " << N << " " << eps;
        }
      }
    }
  }
}

TEST(ErrorNorms, RejectsBadPanelCounts) {
  const Mesh1D mesh = generate({MeshFamily::Uniform, 4, 1.0, 0.5, 1.0, 1.0});
  const auto zero = [](double) { return 0.0; };
  EXPECT_THROW(error_norms(mesh, 1, zero, zero, zero, zero, 1.0, NormOptions{8, 4, 1e-10}),
               std::invalid_argument);
}

}  // namespace
}  // namespace spfem
