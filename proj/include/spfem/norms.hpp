#ifndef SPFEM_NORMS_HPP
#define SPFEM_NORMS_HPP

#include "spfem/piecewise_polynomial.hpp"
#include "spfem/problem.hpp"

namespace spfem {

struct ErrorTriple {
  double e_inf = 0.0;
  double e_l2 = 0.0;
  double e_energy = 0.0;  // sqrt(eps |e|_1^2 + |e|_0^2)
  double h1_seminorm = 0.0;
};

/// Composite-quadrature controls. Defaults are the production settings.
struct NormOptions {
  int initial_panels = 4;
  int max_panels = 64;
  double rel_tol = 1e-10;
};

/// Errors of `fem` against (u, u'). Integrals use composite Gauss rules
/// with k+3 points per panel, starting at 4 panels per element and doubling
/// until the element contribution settles to 1e-10 relative (at most 64
/// panels). The max norm is sampled at 50 points per element plus the
/// element nodes.
ErrorTriple error_norms(const PiecewisePolynomial& fem, const ScalarFn& exact_u,
                        const ScalarFn& exact_du, double epsilon,
                        const NormOptions& options = {});

/// Distance between two functions on the cells of `mesh`, with the same
/// quadrature as above for degree k.
ErrorTriple error_norms(const Mesh1D& mesh, int k, const ScalarFn& u,
                        const ScalarFn& du, const ScalarFn& v,
                        const ScalarFn& dv, double epsilon,
                        const NormOptions& options = {});

/// Norms of `fem` itself.
ErrorTriple norms_of(const PiecewisePolynomial& fem, double epsilon);

}  // namespace spfem

#endif  // SPFEM_NORMS_HPP
