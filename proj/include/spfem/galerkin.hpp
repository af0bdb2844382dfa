#ifndef SPFEM_GALERKIN_HPP
#define SPFEM_GALERKIN_HPP

#include <optional>

#include <Eigen/Core>

#include "spfem/banded.hpp"
#include "spfem/mesh.hpp"
#include "spfem/piecewise_polynomial.hpp"
#include "spfem/problem.hpp"

namespace spfem {

/// Discrete problem on the interior nodes 1..kN-1 (unknown m-1 is global
/// node m). Dirichlet rows and columns are eliminated.
struct BandedSystem {
  BandedMatrix<double> matrix;
  Eigen::VectorXd rhs;
};

struct AssemblyOptions {
  /// Gauss points per element; k+2 when unset.
  std::optional<int> quadrature_points;
};

/// A[i][j] = eps(th_j', th_i') - (b th_j', th_i) + (c th_j, th_i),
/// rhs[i] = (f, th_i).
BandedSystem assemble(const TwoPointBVP& bvp, const Mesh1D& mesh, int k,
                      const AssemblyOptions& options = {});

/// Banded LU with partial pivoting. Throws SingularPivotError.
Eigen::VectorXd solve(const BandedSystem& system);

/// Galerkin approximation with zero boundary values reinserted.
PiecewisePolynomial galerkin_solve(const TwoPointBVP& bvp, const Mesh1D& mesh,
                                   int k, const AssemblyOptions& options = {});

}  // namespace spfem

#endif  // SPFEM_GALERKIN_HPP
