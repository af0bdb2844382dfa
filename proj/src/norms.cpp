#include "spfem/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spfem/lagrange_basis.hpp"
#include "spfem/quadrature.hpp"

namespace spfem {
namespace {

constexpr int kMaxSamples = 50;

/// Composite-rule points on [0,1] for one panel count, plus shape tables.
struct PanelTable {
  std::vector<double> t, w;
  Eigen::MatrixXd phi, dphi;  // (k+1) x points
};

PanelTable make_table(int panels, const GaussLegendre<double>& rule,
                      const LagrangeBasis<double>& basis) {
  PanelTable tab;
  const int q = rule.size();
  const int total = panels * q;
  tab.t.reserve(static_cast<std::size_t>(total));
  tab.w.reserve(static_cast<std::size_t>(total));
  tab.phi.resize(basis.size(), total);
  tab.dphi.resize(basis.size(), total);
  for (int p = 0; p < panels; ++p) {
    for (int g = 0; g < q; ++g) {
      const double t = (p + rule.points()[g]) / panels;
      const int col = static_cast<int>(tab.t.size());
      tab.t.push_back(t);
      tab.w.push_back(rule.weights()[g] / panels);
      tab.phi.col(col) = basis.values(t);
      tab.dphi.col(col) = basis.derivatives(t);
    }
  }
  return tab;
}

bool settled(double before, double after, double tol) {
  return std::abs(after - before) <= tol * std::abs(after);
}

/// `diff(element, t, phi_col, dphi_col)` returns (e, e') at local point t.
template <typename Diff>
ErrorTriple accumulate(const Mesh1D& mesh, int k, double epsilon,
                       const NormOptions& options, Diff&& diff) {
  if (options.initial_panels < 1 || options.max_panels < options.initial_panels)
    throw std::invalid_argument("invalid panel counts");
  const LagrangeBasis<double> basis(k);
  const GaussLegendre<double> rule(k + 3);
  std::vector<PanelTable> tables;
  for (int panels = options.initial_panels; panels <= options.max_panels; panels *= 2)
    tables.push_back(make_table(panels, rule, basis));

  std::vector<double> samples;
  for (int s = 0; s < kMaxSamples; ++s)
    samples.push_back(static_cast<double>(s) / (kMaxSamples - 1));
  for (int j = 0; j <= k; ++j) samples.push_back(static_cast<double>(j) / k);
  Eigen::MatrixXd sample_phi(basis.size(), static_cast<Eigen::Index>(samples.size()));
  Eigen::MatrixXd sample_dphi(basis.size(), static_cast<Eigen::Index>(samples.size()));
  for (std::size_t s = 0; s < samples.size(); ++s) {
    sample_phi.col(static_cast<Eigen::Index>(s)) = basis.values(samples[s]);
    sample_dphi.col(static_cast<Eigen::Index>(s)) = basis.derivatives(samples[s]);
  }

  double l2_sq = 0.0, h1_sq = 0.0, linf = 0.0;
  for (int e = 0; e < mesh.intervals(); ++e) {
    const double h = mesh.step(e);
    auto integrate = [&](const PanelTable& tab) {
      double i0 = 0.0, i1 = 0.0;
      for (std::size_t g = 0; g < tab.t.size(); ++g) {
        const auto col = static_cast<Eigen::Index>(g);
        const auto [v, dv] = diff(e, tab.t[g], tab.phi.col(col), tab.dphi.col(col));
        i0 += tab.w[g] * v * v;
        i1 += tab.w[g] * dv * dv;
      }
      return std::pair{i0 * h, i1 * h};
    };

    auto [i0, i1] = integrate(tables.front());
    for (std::size_t level = 1; level < tables.size(); ++level) {
      const auto [n0, n1] = integrate(tables[level]);
      const bool done = settled(i0, n0, options.rel_tol) && settled(i1, n1, options.rel_tol);
      i0 = n0;
      i1 = n1;
      if (done) break;
    }
    l2_sq += i0;
    h1_sq += i1;

    for (std::size_t s = 0; s < samples.size(); ++s) {
      const auto col = static_cast<Eigen::Index>(s);
      const double v = diff(e, samples[s], sample_phi.col(col), sample_dphi.col(col)).first;
      linf = std::max(linf, std::abs(v));
    }
  }

  ErrorTriple out;
  out.e_inf = linf;
  out.e_l2 = std::sqrt(l2_sq);
  out.h1_seminorm = std::sqrt(h1_sq);
  out.e_energy = std::sqrt(epsilon * h1_sq + l2_sq);
  return out;
}

}  // namespace

ErrorTriple error_norms(const PiecewisePolynomial& fem, const ScalarFn& exact_u,
                        const ScalarFn& exact_du, double epsilon,
                        const NormOptions& options) {
  const Mesh1D& mesh = fem.mesh();
  return accumulate(mesh, fem.degree(), epsilon, options,
                    [&](int e, double t, const auto& phi, const auto& dphi) {
                      const double x0 = mesh.node(e);
                      const double h = mesh.step(e);
                      const double x = x0 + h * t;
                      const auto c = fem.element_coefficients(e);
                      // shape derivatives sum to zero; offsetting by c[0]
                      // avoids cancellation between O(1) nodal values
                      const double duh = dphi.dot((c.array() - c[0]).matrix()) / h;
                      return std::pair{exact_u(x) - phi.dot(c), exact_du(x) - duh};
                    });
}

ErrorTriple error_norms(const Mesh1D& mesh, int k, const ScalarFn& u,
                        const ScalarFn& du, const ScalarFn& v,
                        const ScalarFn& dv, double epsilon,
                        const NormOptions& options) {
  return accumulate(mesh, k, epsilon, options,
                    [&](int e, double t, const auto&, const auto&) {
                      const double x = mesh.node(e) + mesh.step(e) * t;
                      return std::pair{u(x) - v(x), du(x) - dv(x)};
                    });
}

ErrorTriple norms_of(const PiecewisePolynomial& fem, double epsilon) {
  const auto zero = [](double) { return 0.0; };
  return error_norms(fem, zero, zero, epsilon);
}

}  // namespace spfem
