#include "spfem/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace spfem {

CoefficientReport check_coefficients(const TwoPointBVP& bvp, int samples) {
  CoefficientReport report;
  report.min_b = std::numeric_limits<double>::infinity();
  report.min_reaction = std::numeric_limits<double>::infinity();
  const double step = 1e-6;
  for (int s = 0; s < samples; ++s) {
    const double x = static_cast<double>(s) / (samples - 1);
    double bp = 0.0;
    if (bvp.b_prime) {
      bp = bvp.b_prime(x);
    } else {
      const double lo = std::max(0.0, x - step);
      const double hi = std::min(1.0, x + step);
      bp = (bvp.b(hi) - bvp.b(lo)) / (hi - lo);
    }
    report.min_b = std::min(report.min_b, bvp.b(x));
    report.min_reaction = std::min(report.min_reaction, bvp.c(x) + 0.5 * bp);
  }
  return report;
}

TwoPointBVP paper_test_problem(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  const double eps = epsilon;

  ExactSolution ex;
  ex.u = [eps](double x) { return (1.0 - x) * (1.0 - std::exp(-2.0 * x / eps)); };
  ex.u_prime = [eps](double x) {
    const double e0 = std::exp(-2.0 * x / eps);
    return -1.0 + e0 * (1.0 + 2.0 * (1.0 - x) / eps);
  };
  ex.S = [](double x) { return 1.0 - x; };
  ex.S_prime = [](double) { return -1.0; };
  ex.E = [eps](double x) { return -(1.0 - x) * std::exp(-2.0 * x / eps); };
  ex.E_prime = [eps](double x) {
    return std::exp(-2.0 * x / eps) * (1.0 + 2.0 * (1.0 - x) / eps);
  };

  TwoPointBVP bvp;
  bvp.name = "paper-test";
  bvp.epsilon = eps;
  bvp.b = [](double x) { return 3.0 - x; };
  bvp.b_prime = [](double) { return -1.0; };
  bvp.c = [](double) { return 1.0; };
  bvp.f = [eps](double x) {
    const double e0 = std::exp(-2.0 * x / eps);
    const double u = (1.0 - x) * (1.0 - e0);
    const double du = -1.0 + e0 * (1.0 + 2.0 * (1.0 - x) / eps);
    const double d2u = -(2.0 / eps) * e0 * (2.0 + 2.0 * (1.0 - x) / eps);
    return -eps * d2u - (3.0 - x) * du + u;
  };
  bvp.exact = std::move(ex);
  return bvp;
}

TwoPointBVP manufactured_problem(std::string name, double epsilon, ScalarFn b,
                                 ScalarFn c, ScalarFn u, ScalarFn u_prime,
                                 ScalarFn u_second) {
  TwoPointBVP bvp;
  bvp.name = std::move(name);
  bvp.epsilon = epsilon;
  bvp.f = [epsilon, b, c, u, u_prime, u_second](double x) {
    return -epsilon * u_second(x) - b(x) * u_prime(x) + c(x) * u(x);
  };
  bvp.b = std::move(b);
  bvp.c = std::move(c);
  ExactSolution ex;
  ex.u = std::move(u);
  ex.u_prime = std::move(u_prime);
  bvp.exact = std::move(ex);
  return bvp;
}

TwoPointBVP quadratic_test_problem(double epsilon) {
  auto bvp = manufactured_problem(
      "quadratic", epsilon, [](double x) { return 3.0 - x; },
      [](double) { return 1.0; }, [](double x) { return x * (1.0 - x); },
      [](double x) { return 1.0 - 2.0 * x; }, [](double) { return -2.0; });
  bvp.b_prime = [](double) { return -1.0; };
  // Trivial split: all smooth, no layer.
  bvp.exact->S = bvp.exact->u;
  bvp.exact->S_prime = bvp.exact->u_prime;
  bvp.exact->E = [](double) { return 0.0; };
  bvp.exact->E_prime = [](double) { return 0.0; };
  return bvp;
}

TwoPointBVP make_problem(const std::string& name, double epsilon) {
  if (name == "paper-test") return paper_test_problem(epsilon);
  if (name == "quadratic") return quadratic_test_problem(epsilon);
  throw std::invalid_argument("unknown problem '" + name + "'");
}

LayerBoundReport check_layer_bounds(const TwoPointBVP& bvp, const Mesh1D& mesh,
                                    double sigma) {
  if (!bvp.exact || !bvp.exact->E)
    throw std::invalid_argument("problem has no layer component E");
  const int N = mesh.intervals();
  const double eps = bvp.epsilon;
  const auto& E = bvp.exact->E;
  LayerBoundReport report;
  report.before_midpoint = std::abs(E(mesh.node(N / 2 - 1))) * std::pow(N, sigma);
  report.at_midpoint = std::abs(E(mesh.node(N / 2))) * std::pow(eps, -sigma);
  return report;
}

}  // namespace spfem
