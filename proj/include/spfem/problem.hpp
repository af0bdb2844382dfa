#ifndef SPFEM_PROBLEM_HPP
#define SPFEM_PROBLEM_HPP

#include <functional>
#include <optional>
#include <string>

#include "spfem/mesh.hpp"

namespace spfem {

using ScalarFn = std::function<double(double)>;

/// Exact solution u together with a smooth/layer split u = S + E.
/// S and E may be left empty when no split is known.
struct ExactSolution {
  ScalarFn u, u_prime;
  ScalarFn S, S_prime;
  ScalarFn E, E_prime;

  bool has_decomposition() const { return S && E && S_prime && E_prime; }
};

/// -eps u'' - b(x) u' + c(x) u = f(x) on (0,1), u(0) = u(1) = 0.
struct TwoPointBVP {
  std::string name;
  double epsilon = 1.0;
  ScalarFn b, c, f;
  ScalarFn b_prime;  // optional; central differences are used when empty
  std::optional<ExactSolution> exact;
};

/// Sampled lower bounds of b and c + b'/2 (1000 uniform points).
struct CoefficientReport {
  double min_b = 0.0;
  double min_reaction = 0.0;  // min of c + b'/2

  bool convection_ok() const { return min_b > 1.0; }
  bool coercive() const { return min_reaction > 0.0; }
};

CoefficientReport check_coefficients(const TwoPointBVP& bvp, int samples = 1000);

/// -eps u'' - (3-x) u' + u = f with u = (1-x)(1 - exp(-2x/eps)),
/// S = 1-x, E = -(1-x) exp(-2x/eps).
TwoPointBVP paper_test_problem(double epsilon);

/// Builds f = -eps u'' - b u' + c u for a user-given exact solution.
TwoPointBVP manufactured_problem(std::string name, double epsilon, ScalarFn b,
                                 ScalarFn c, ScalarFn u, ScalarFn u_prime,
                                 ScalarFn u_second);

/// u = x(1-x) with the coefficients of the paper-test problem. Lies in the
/// discrete space for every degree k >= 2.
TwoPointBVP quadratic_test_problem(double epsilon);

/// Looks up "paper-test" or "quadratic". Throws std::invalid_argument.
TwoPointBVP make_problem(const std::string& name, double epsilon);

struct LayerBoundReport {
  double before_midpoint = 0.0;  // |E(x_{N/2-1})| N^sigma
  double at_midpoint = 0.0;      // |E(x_{N/2})| eps^-sigma
};

/// Throws std::invalid_argument when the problem has no layer part E.
LayerBoundReport check_layer_bounds(const TwoPointBVP& bvp, const Mesh1D& mesh,
                                    double sigma);

}  // namespace spfem

#endif  // SPFEM_PROBLEM_HPP
