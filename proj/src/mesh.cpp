#include "spfem/mesh.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace spfem {

std::string_view to_string(MeshFamily family) {
  switch (family) {
    case MeshFamily::RoosB: return "RoosB";
    case MeshFamily::KoptevaB: return "KoptevaB";
    case MeshFamily::OriginalB: return "OriginalB";
    case MeshFamily::Uniform: return "Uniform";
  }
  return "?";
}

std::optional<MeshFamily> parse_mesh_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "roos" || lower == "roosb") return MeshFamily::RoosB;
  if (lower == "kopteva" || lower == "koptevab") return MeshFamily::KoptevaB;
  if (lower == "original" || lower == "originalb" || lower == "bakhvalov")
    return MeshFamily::OriginalB;
  if (lower == "uniform") return MeshFamily::Uniform;
  return std::nullopt;
}

Mesh1D::Mesh1D(std::vector<double> nodes, MeshSpec spec,
               MeshFamily effective_family, std::vector<std::string> warnings)
    : nodes_(std::move(nodes)),
      spec_(spec),
      effective_family_(effective_family),
      warnings_(std::move(warnings)) {
  if (nodes_.size() < 2) throw std::invalid_argument("mesh needs two nodes");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!(nodes_[i + 1] > nodes_[i]))
      throw std::invalid_argument("mesh nodes must be strictly increasing");
  }
}

int Mesh1D::locate(double x) const {
  auto it = std::lower_bound(nodes_.begin() + 1, nodes_.end() - 1, x);
  return static_cast<int>(it - nodes_.begin()) - 1;
}

double kopteva_breakpoint(double epsilon, double constant) {
  return 0.5 - constant * epsilon;
}

double roos_linear_slope(double sigma, double epsilon) {
  return 2.0 * (1.0 + sigma * epsilon * std::log(epsilon));
}

double kopteva_linear_slope(double sigma, double epsilon, double constant) {
  return (1.0 + sigma * epsilon * std::log(2.0 * constant * epsilon)) /
         (0.5 + constant * epsilon);
}

double roos_generating_function(double t, double sigma, double epsilon) {
  // 1 - 2(1-eps)t regrouped so that t = 1/2 yields exactly eps.
  if (t <= 0.5)
    return -sigma * epsilon * std::log((1.0 - 2.0 * t) + 2.0 * epsilon * t);
  return 1.0 - roos_linear_slope(sigma, epsilon) * (1.0 - t);
}

double kopteva_generating_function(double t, double sigma, double epsilon,
                                   double constant) {
  if (t <= kopteva_breakpoint(epsilon, constant))
    return -sigma * epsilon * std::log(1.0 - 2.0 * t);
  return 1.0 - kopteva_linear_slope(sigma, epsilon, constant) * (1.0 - t);
}

Mesh1D generate(const MeshSpec& spec) {
  if (spec.N < 4 || spec.N % 2 != 0) {
    throw std::invalid_argument("N must be an even integer >= 4, got " +
                                std::to_string(spec.N));
  }
  if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  if (spec.family != MeshFamily::Uniform && !(spec.sigma >= 1.0))
    throw std::invalid_argument("sigma must be >= 1");

  const int N = spec.N;
  std::vector<std::string> warnings;
  MeshFamily family = spec.family;
  if (family != MeshFamily::Uniform && spec.epsilon > 1.0 / N) {
    std::ostringstream msg;
    msg << "epsilon=" << spec.epsilon << " > 1/N; using a uniform mesh";
    warnings.push_back(msg.str());
    family = MeshFamily::Uniform;
  }

  double constant = 0.0;
  if (family == MeshFamily::KoptevaB || family == MeshFamily::OriginalB) {
    constant = family == MeshFamily::KoptevaB ? spec.c1 : spec.c_eps;
    if (!(constant > 0.0))
      throw std::invalid_argument("breakpoint constant must be positive");
    const double theta = kopteva_breakpoint(spec.epsilon, constant);
    if (!(theta > 0.0 && theta < 0.5))
      throw std::invalid_argument("breakpoint 1/2 - C*eps must lie in (0,1/2)");
    if (constant > 1.0 / (spec.epsilon * N)) {
      std::ostringstream msg;
      msg << "C1=" << constant << " exceeds 1/(eps*N)=" << 1.0 / (spec.epsilon * N);
      warnings.push_back(msg.str());
    }
  }

  std::vector<double> x(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    const double t = static_cast<double>(i) / N;
    double xi = t;
    switch (family) {
      case MeshFamily::RoosB:
        xi = roos_generating_function(t, spec.sigma, spec.epsilon);
        break;
      case MeshFamily::KoptevaB:
      case MeshFamily::OriginalB:
        xi = kopteva_generating_function(t, spec.sigma, spec.epsilon, constant);
        break;
      case MeshFamily::Uniform:
        break;
    }
    x[static_cast<std::size_t>(i)] = xi;
  }
  x.front() = 0.0;
  x.back() = 1.0;
  return Mesh1D(std::move(x), spec, family, std::move(warnings));
}

Lemma2Report check_lemma2(const Mesh1D& mesh) {
  const int N = mesh.intervals();
  const int half = N / 2;
  const double se = mesh.spec().sigma * mesh.spec().epsilon;
  const double sigma = mesh.spec().sigma;
  const double invN = 1.0 / N;

  Lemma2Report report;
  report.monotone_layer_steps = true;
  for (int i = 0; i + 1 <= half - 2; ++i) {
    if (mesh.step(i) > mesh.step(i + 1)) report.monotone_layer_steps = false;
  }
  const double h_last = mesh.step(half - 2);
  report.last_layer_step = 0.25 * se <= h_last && h_last <= se;
  const double h_tr = mesh.step(half - 1);
  report.transition_step = 0.5 * se <= h_tr && h_tr <= 2.0 * sigma * invN;
  report.coarse_steps = true;
  for (int i = half; i < N; ++i) {
    const double h = mesh.step(i);
    if (h < invN || h > 2.0 * invN) report.coarse_steps = false;
  }
  report.midpoint_below_half = mesh.node(half) <= 0.5;
  return report;
}

double layer_decay_ratio(const Mesh1D& mesh, double mu) {
  const int N = mesh.intervals();
  const double eps = mesh.spec().epsilon;
  double worst = 0.0;
  for (int i = 0; i <= N / 2 - 2; ++i) {
    const double log_ratio = mu * std::log(mesh.step(i)) - mesh.node(i) / eps -
                             mu * std::log(eps) + mu * std::log(static_cast<double>(N));
    worst = std::max(worst, std::exp(log_ratio));
  }
  return worst;
}

void write_mesh_csv(const Mesh1D& mesh, std::ostream& out) {
  out << "i,x_i,h_i\n";
  char buf[96];
  const int N = mesh.intervals();
  for (int i = 0; i < N; ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", i, mesh.node(i), mesh.step(i));
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%d,%.17g,\n", N, mesh.node(N));
  out << buf;
}

}  // namespace spfem
