#include "spfem/piecewise_polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace spfem {

PiecewisePolynomial::PiecewisePolynomial(Mesh1D mesh, int degree)
    : mesh_(std::move(mesh)), basis_(degree) {
  coefficients_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh_.intervals()) * degree + 1);
}

PiecewisePolynomial::PiecewisePolynomial(Mesh1D mesh, int degree,
                                         Eigen::VectorXd coefficients)
    : mesh_(std::move(mesh)), basis_(degree), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<Eigen::Index>(mesh_.intervals()) * degree + 1)
    throw std::invalid_argument("coefficient vector must have k*N+1 entries");
}

double PiecewisePolynomial::node_position(Eigen::Index m) const {
  const int k = degree();
  const int i = static_cast<int>(m / k);
  const int j = static_cast<int>(m % k);
  if (i == elements()) return 1.0;
  return mesh_.node(i) + (static_cast<double>(j) / k) * mesh_.step(i);
}

double PiecewisePolynomial::value_on_element(int i, double t) const {
  return basis_.values(t).dot(element_coefficients(i));
}

double PiecewisePolynomial::derivative_on_element(int i, double t) const {
  const auto c = element_coefficients(i);
  // shape derivatives sum to zero, so the offset removes cancellation
  return basis_.derivatives(t).dot((c.array() - c[0]).matrix()) / mesh_.step(i);
}

double PiecewisePolynomial::operator()(double x) const {
  const int i = mesh_.locate(x);
  return value_on_element(i, (x - mesh_.node(i)) / mesh_.step(i));
}

double PiecewisePolynomial::derivative(double x) const {
  const int i = mesh_.locate(x);
  return derivative_on_element(i, (x - mesh_.node(i)) / mesh_.step(i));
}

}  // namespace spfem
