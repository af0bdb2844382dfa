#ifndef SPFEM_BANDED_HPP
#define SPFEM_BANDED_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace spfem {

/// Raised when elimination meets a pivot that is zero to working precision.
class SingularPivotError : public std::runtime_error {
 public:
  explicit SingularPivotError(int index)
      : std::runtime_error("singular pivot at index " + std::to_string(index)),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Square band matrix in LAPACK general-band layout. The first `lower`
/// rows of storage are headroom for the fill produced by row interchanges.
template <typename Scalar>
class BandedMatrix {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Storage = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BandedMatrix() = default;
  BandedMatrix(int n, int lower, int upper)
      : n_(n), lower_(lower), upper_(upper),
        storage_(Storage::Zero(2 * lower + upper + 1, n)) {
    if (n < 0 || lower < 0 || upper < 0)
      throw std::invalid_argument("invalid band matrix shape");
  }

  int rows() const { return n_; }
  int cols() const { return n_; }
  int lower() const { return lower_; }
  int upper() const { return upper_; }

  bool in_band(int i, int j) const { return j - i <= upper_ && i - j <= lower_; }

  Scalar& operator()(int i, int j) {
    assert(in_band(i, j));
    return storage_(lower_ + upper_ + i - j, j);
  }
  Scalar operator()(int i, int j) const {
    return in_band(i, j) ? storage_(lower_ + upper_ + i - j, j) : Scalar(0);
  }

  Storage to_dense() const {
    Storage dense = Storage::Zero(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - upper_); i <= std::min(n_ - 1, j + lower_); ++i)
        dense(i, j) = (*this)(i, j);
    return dense;
  }

  Vector operator*(const Vector& x) const {
    assert(x.size() == n_);
    Vector y = Vector::Zero(n_);
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - upper_); i <= std::min(n_ - 1, j + lower_); ++i)
        y[i] += (*this)(i, j) * x[j];
    return y;
  }

  /// Maximum absolute row sum.
  Scalar norm_inf() const {
    Vector rowsum = Vector::Zero(n_);
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - upper_); i <= std::min(n_ - 1, j + lower_); ++i)
        rowsum[i] += std::abs((*this)(i, j));
    return n_ == 0 ? Scalar(0) : rowsum.maxCoeff();
  }

  Storage& storage() { return storage_; }
  const Storage& storage() const { return storage_; }

 private:
  int n_ = 0;
  int lower_ = 0;
  int upper_ = 0;
  Storage storage_;
};

/// LU factorization with partial pivoting of a band matrix (the gbtf2
/// algorithm). Usage mirrors Eigen's decompositions:
///   BandedLU<double> lu(A);  x = lu.solve(b);
template <typename Scalar>
class BandedLU {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BandedLU() = default;
  explicit BandedLU(BandedMatrix<Scalar> matrix) { compute(std::move(matrix)); }

  /// Throws SingularPivotError if a pivot is negligible relative to the
  /// largest entry of the matrix.
  BandedLU& compute(BandedMatrix<Scalar> matrix) {
    lu_ = std::move(matrix);
    const int n = lu_.rows();
    const int kl = lu_.lower();
    const int ku = lu_.upper();
    pivots_.assign(static_cast<std::size_t>(n), 0);
    const Scalar scale = n == 0 ? Scalar(0) : lu_.storage().cwiseAbs().maxCoeff();
    const Scalar tiny = std::numeric_limits<Scalar>::epsilon() * scale;

    auto at = [&](int i, int j) -> Scalar& {
      return lu_.storage()(kl + ku + i - j, j);
    };

    int last_col = 0;  // rightmost column touched by U so far
    for (int j = 0; j < n; ++j) {
      const int below = std::min(kl, n - 1 - j);
      int p = 0;
      Scalar best = std::abs(at(j, j));
      for (int r = 1; r <= below; ++r) {
        if (std::abs(at(j + r, j)) > best) {
          best = std::abs(at(j + r, j));
          p = r;
        }
      }
      pivots_[static_cast<std::size_t>(j)] = j + p;
      if (!(best > tiny)) throw SingularPivotError(j);

      last_col = std::max(last_col, std::min(j + ku + p, n - 1));
      if (p != 0)
        for (int c = j; c <= last_col; ++c) std::swap(at(j, c), at(j + p, c));

      const Scalar pivot = at(j, j);
      for (int r = 1; r <= below; ++r) at(j + r, j) /= pivot;
      for (int c = j + 1; c <= last_col; ++c) {
        const Scalar u = at(j, c);
        if (u == Scalar(0)) continue;
        for (int r = 1; r <= below; ++r) at(j + r, c) -= at(j + r, j) * u;
      }
    }
    return *this;
  }

  Vector solve(const Vector& rhs) const {
    const int n = lu_.rows();
    const int kl = lu_.lower();
    const int kv = kl + lu_.upper();
    if (rhs.size() != n) throw std::invalid_argument("rhs size mismatch");
    const auto& ab = lu_.storage();
    Vector x = rhs;
    for (int j = 0; j < n; ++j) {
      const int p = pivots_[static_cast<std::size_t>(j)];
      if (p != j) std::swap(x[j], x[p]);
      const int below = std::min(kl, n - 1 - j);
      for (int r = 1; r <= below; ++r) x[j + r] -= ab(kv + r, j) * x[j];
    }
    for (int j = n - 1; j >= 0; --j) {
      x[j] /= ab(kv, j);
      for (int i = std::max(0, j - kv); i < j; ++i) x[i] -= ab(kv + i - j, j) * x[j];
    }
    return x;
  }

  const std::vector<int>& pivots() const { return pivots_; }

 private:
  BandedMatrix<Scalar> lu_;
  std::vector<int> pivots_;
};

}  // namespace spfem

#endif  // SPFEM_BANDED_HPP
