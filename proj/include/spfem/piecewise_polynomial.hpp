#ifndef SPFEM_PIECEWISE_POLYNOMIAL_HPP
#define SPFEM_PIECEWISE_POLYNOMIAL_HPP

#include <Eigen/Core>

#include "spfem/lagrange_basis.hpp"
#include "spfem/mesh.hpp"

namespace spfem {

/// Continuous, piecewise degree-k function in nodal Lagrange form.
///
/// Global node m = i*k + j is the j-th equidistant point x_i + (j/k) h_i of
/// element i; coefficient m is the function value there. Element ends are
/// shared, which makes the function C^0.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(Mesh1D mesh, int degree);
  PiecewisePolynomial(Mesh1D mesh, int degree, Eigen::VectorXd coefficients);

  const Mesh1D& mesh() const { return mesh_; }
  int degree() const { return basis_.degree(); }
  int elements() const { return mesh_.intervals(); }
  Eigen::Index num_nodes() const { return coefficients_.size(); }

  Eigen::VectorXd& coefficients() { return coefficients_; }
  const Eigen::VectorXd& coefficients() const { return coefficients_; }

  /// Physical coordinate of global node m.
  double node_position(Eigen::Index m) const;

  /// Nodal values belonging to element i.
  auto element_coefficients(int i) const {
    return coefficients_.segment(static_cast<Eigen::Index>(i) * degree(), degree() + 1);
  }

  /// Value and x-derivative at local coordinate t in [0,1] of element i.
  double value_on_element(int i, double t) const;
  double derivative_on_element(int i, double t) const;

  double operator()(double x) const;
  double derivative(double x) const;

  const LagrangeBasis<double>& basis() const { return basis_; }

 private:
  Mesh1D mesh_;
  LagrangeBasis<double> basis_;
  Eigen::VectorXd coefficients_;
};

}  // namespace spfem

#endif  // SPFEM_PIECEWISE_POLYNOMIAL_HPP
