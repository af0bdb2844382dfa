#include "spfem/interpolants.hpp"

#include <stdexcept>

namespace spfem {

PiecewisePolynomial lagrange_interp(const ScalarFn& fn, const Mesh1D& mesh, int k) {
  PiecewisePolynomial out(mesh, k);
  auto& c = out.coefficients();
  for (Eigen::Index m = 0; m < c.size(); ++m) c[m] = fn(out.node_position(m));
  return out;
}

InterpolantBundle build_bundle(const ExactSolution& exact, const Mesh1D& mesh, int k) {
  if (!exact.has_decomposition())
    throw std::invalid_argument("interpolant bundle needs an S/E decomposition");
  const int N = mesh.intervals();
  if (N < 4 || N % 2 != 0) throw std::invalid_argument("N must be even and >= 4");

  PiecewisePolynomial uI = lagrange_interp(exact.u, mesh, k);
  PiecewisePolynomial SI = lagrange_interp(exact.S, mesh, k);
  PiecewisePolynomial EI = lagrange_interp(exact.E, mesh, k);

  PiecewisePolynomial PE(mesh, k);
  const Eigen::Index first = static_cast<Eigen::Index>(N / 2 - 1) * k;
  PE.coefficients().segment(first, k) = EI.coefficients().segment(first, k);

  PiecewisePolynomial piE(mesh, k, EI.coefficients() - PE.coefficients());
  PiecewisePolynomial PiU(mesh, k, SI.coefficients() + piE.coefficients());
  return {std::move(uI), std::move(SI), std::move(EI), std::move(piE), std::move(PE),
          std::move(PiU)};
}

}  // namespace spfem
