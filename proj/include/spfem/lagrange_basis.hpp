#ifndef SPFEM_LAGRANGE_BASIS_HPP
#define SPFEM_LAGRANGE_BASIS_HPP

#include <stdexcept>

#include <Eigen/Core>

namespace spfem {

/// Degree-k Lagrange shape functions on [0,1] with equidistant nodes j/k.
template <typename Scalar>
class LagrangeBasis {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit LagrangeBasis(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("Lagrange degree must be >= 1");
    nodes_.resize(degree + 1);
    for (int j = 0; j <= degree; ++j) nodes_[j] = Scalar(j) / Scalar(degree);
    denominators_.resize(degree + 1);
    for (int j = 0; j <= degree; ++j) {
      Scalar d = 1;
      for (int m = 0; m <= degree; ++m)
        if (m != j) d *= nodes_[j] - nodes_[m];
      denominators_[j] = d;
    }
  }

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  const Vector& nodes() const { return nodes_; }

  Vector values(Scalar t) const {
    Vector out(size());
    for (int j = 0; j <= degree_; ++j) {
      Scalar p = 1;
      for (int m = 0; m <= degree_; ++m)
        if (m != j) p *= t - nodes_[m];
      out[j] = p / denominators_[j];
    }
    return out;
  }

  /// d/dt of each shape function.
  Vector derivatives(Scalar t) const {
    Vector out(size());
    for (int j = 0; j <= degree_; ++j) {
      Scalar sum = 0;
      for (int skip = 0; skip <= degree_; ++skip) {
        if (skip == j) continue;
        Scalar p = 1;
        for (int m = 0; m <= degree_; ++m)
          if (m != j && m != skip) p *= t - nodes_[m];
        sum += p;
      }
      out[j] = sum / denominators_[j];
    }
    return out;
  }

 private:
  int degree_;
  Vector nodes_;
  Vector denominators_;
};

}  // namespace spfem

#endif  // SPFEM_LAGRANGE_BASIS_HPP
