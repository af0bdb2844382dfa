#ifndef SPFEM_INTERPOLANTS_HPP
#define SPFEM_INTERPOLANTS_HPP

#include "spfem/piecewise_polynomial.hpp"
#include "spfem/problem.hpp"

namespace spfem {

/// Nodal interpolant: coefficient m is fn(node_position(m)).
PiecewisePolynomial lagrange_interp(const ScalarFn& fn, const Mesh1D& mesh, int k);

/// Lagrange interpolants of u, S, E together with the modified layer
/// interpolant. PE collects the nodal values of E attached to the left end
/// and interior nodes of element N/2-1; piE = EI - PE and PiU = SI + piE
/// (= uI - PE).
struct InterpolantBundle {
  PiecewisePolynomial uI, SI, EI, piE, PE, PiU;
};

/// Throws std::invalid_argument without an S/E split or for odd N.
InterpolantBundle build_bundle(const ExactSolution& exact, const Mesh1D& mesh, int k);

}  // namespace spfem

#endif  // SPFEM_INTERPOLANTS_HPP
