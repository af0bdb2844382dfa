#ifndef SPFEM_QUADRATURE_HPP
#define SPFEM_QUADRATURE_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace spfem {

namespace detail {

/// (P_q(z), P_q'(z)) by the three-term recurrence.
template <typename Scalar>
std::pair<Scalar, Scalar> legendre_with_derivative(int q, Scalar z) {
  Scalar prev = 1, cur = z;
  for (int n = 2; n <= q; ++n) {
    const Scalar next = ((2 * n - 1) * z * cur - (n - 1) * prev) / n;
    prev = cur;
    cur = next;
  }
  if (q == 0) return {Scalar(1), Scalar(0)};
  return {cur, q * (z * cur - prev) / (z * z - 1)};
}

}  // namespace detail

/// Gauss-Legendre rule mapped to [0,1]. Exact for polynomials of degree
/// 2q-1.
template <typename Scalar>
class GaussLegendre {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit GaussLegendre(int q) : points_(q), weights_(q) {
    if (q < 1) throw std::invalid_argument("quadrature needs at least one point");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    for (int i = 0; i < (q + 1) / 2; ++i) {
      Scalar z = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(q) + Scalar(0.5)));
      for (int it = 0; it < 100; ++it) {
        const auto [p, dp] = detail::legendre_with_derivative(q, z);
        const Scalar dz = p / dp;
        z -= dz;
        if (std::abs(dz) <= 2 * std::numeric_limits<Scalar>::epsilon()) break;
      }
      const Scalar dp = detail::legendre_with_derivative(q, z).second;
      const Scalar w = 1 / ((1 - z * z) * dp * dp);  // half of the [-1,1] weight
      points_[i] = (1 - z) / 2;
      points_[q - 1 - i] = (1 + z) / 2;
      weights_[i] = w;
      weights_[q - 1 - i] = w;
    }
  }

  int size() const { return static_cast<int>(points_.size()); }
  const Vector& points() const { return points_; }
  const Vector& weights() const { return weights_; }

  /// Integral of fn over [a,b].
  template <typename Fn>
  Scalar integrate(Fn&& fn, Scalar a, Scalar b) const {
    const Scalar h = b - a;
    Scalar sum = 0;
    for (int i = 0; i < size(); ++i) sum += weights_[i] * fn(a + h * points_[i]);
    return sum * h;
  }

 private:
  Vector points_;
  Vector weights_;
};

}  // namespace spfem

#endif  // SPFEM_QUADRATURE_HPP
