#include "spfem/galerkin.hpp"

#include <stdexcept>
#include <vector>

#include "spfem/lagrange_basis.hpp"
#include "spfem/quadrature.hpp"

namespace spfem {

BandedSystem assemble(const TwoPointBVP& bvp, const Mesh1D& mesh, int k,
                      const AssemblyOptions& options) {
  if (k < 1) throw std::invalid_argument("element degree k must be >= 1");
  for (int i = 0; i < mesh.intervals(); ++i)
    if (!(mesh.step(i) > 0.0))
      throw std::invalid_argument("mesh nodes must be strictly increasing");

  const int N = mesh.intervals();
  const int n = k * N - 1;
  const LagrangeBasis<double> basis(k);
  const GaussLegendre<double> rule(options.quadrature_points.value_or(k + 2));
  const double eps = bvp.epsilon;

  // Shape values and derivatives at the quadrature points, shared by all elements.
  const int q = rule.size();
  Eigen::MatrixXd phi(k + 1, q), dphi(k + 1, q);
  for (int g = 0; g < q; ++g) {
    phi.col(g) = basis.values(rule.points()[g]);
    dphi.col(g) = basis.derivatives(rule.points()[g]);
  }

  BandedSystem sys{BandedMatrix<double>(n, k, k), Eigen::VectorXd::Zero(n)};
  Eigen::MatrixXd local(k + 1, k + 1);
  Eigen::VectorXd local_rhs(k + 1);
  for (int e = 0; e < N; ++e) {
    const double x0 = mesh.node(e);
    const double h = mesh.step(e);
    local.setZero();
    local_rhs.setZero();
    for (int g = 0; g < q; ++g) {
      const double x = x0 + h * rule.points()[g];
      const double w = rule.weights()[g] * h;
      const double bx = bvp.b(x), cx = bvp.c(x), fx = bvp.f(x);
      const auto v = phi.col(g);
      const Eigen::VectorXd dv = dphi.col(g) / h;
      // rows: test functions, columns: trial functions
      local.noalias() += w * (eps * dv * dv.transpose() - bx * v * dv.transpose() +
                              cx * v * v.transpose());
      local_rhs.noalias() += w * fx * v;
    }
    for (int a = 0; a <= k; ++a) {
      const int row = e * k + a - 1;
      if (row < 0 || row >= n) continue;
      sys.rhs[row] += local_rhs[a];
      for (int c = 0; c <= k; ++c) {
        const int col = e * k + c - 1;
        if (col < 0 || col >= n) continue;
        sys.matrix(row, col) += local(a, c);
      }
    }
  }
  return sys;
}

Eigen::VectorXd solve(const BandedSystem& system) {
  return BandedLU<double>(system.matrix).solve(system.rhs);
}

PiecewisePolynomial galerkin_solve(const TwoPointBVP& bvp, const Mesh1D& mesh,
                                   int k, const AssemblyOptions& options) {
  const BandedSystem sys = assemble(bvp, mesh, k, options);
  PiecewisePolynomial uh(mesh, k);
  uh.coefficients().segment(1, sys.rhs.size()) = solve(sys);
  return uh;
}

}  // namespace spfem
