#ifndef SPFEM_MESH_HPP
#define SPFEM_MESH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spfem {

/// Families of one-dimensional meshes on [0,1].
///
/// RoosB and KoptevaB are the two Bakhvalov-type meshes with explicit
/// breakpoints; OriginalB is KoptevaB with the breakpoint constant supplied
/// as C(eps); Uniform is the equidistant fallback.
enum class MeshFamily { RoosB, KoptevaB, OriginalB, Uniform };

std::string_view to_string(MeshFamily family);

/// Parses "roos", "kopteva", "original", "uniform" (case-insensitive, the
/// enum spellings are accepted too).
std::optional<MeshFamily> parse_mesh_family(std::string_view name);

struct MeshSpec {
  MeshFamily family = MeshFamily::RoosB;
  int N = 8;              // number of intervals, even
  double sigma = 2.0;     // grading parameter
  double epsilon = 1e-2;  // perturbation parameter
  double c1 = 1.0;        // breakpoint constant, KoptevaB
  double c_eps = 1.0;     // C(eps), OriginalB
};

class Mesh1D {
 public:
  Mesh1D(std::vector<double> nodes, MeshSpec spec, MeshFamily effective_family,
         std::vector<std::string> warnings = {});

  const std::vector<double>& nodes() const { return nodes_; }
  double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  double step(int i) const { return node(i + 1) - node(i); }
  int intervals() const { return static_cast<int>(nodes_.size()) - 1; }

  /// The spec the mesh was requested with.
  const MeshSpec& spec() const { return spec_; }

  /// Family actually used. Differs from spec().family when eps > 1/N
  /// forced the uniform fallback.
  MeshFamily effective_family() const { return effective_family_; }

  /// Non-fatal diagnostics raised during generation.
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Index of the element containing x (the left one at interior nodes).
  int locate(double x) const;

 private:
  std::vector<double> nodes_;
  MeshSpec spec_;
  MeshFamily effective_family_;
  std::vector<std::string> warnings_;
};

/// Breakpoint t = 1/2 - C eps of the Kopteva/original generating function.
double kopteva_breakpoint(double epsilon, double constant);

/// Mesh generating functions, evaluated on the parameter t in [0,1].
double roos_generating_function(double t, double sigma, double epsilon);
double kopteva_generating_function(double t, double sigma, double epsilon,
                                   double constant);

/// Slope of the linear branch of the Roos map: 2(1 + sigma eps ln eps).
double roos_linear_slope(double sigma, double epsilon);
/// Slope of the linear branch of the Kopteva map:
/// (1 + sigma eps ln(2 C eps)) / (1/2 + C eps).
double kopteva_linear_slope(double sigma, double epsilon, double constant);

/// Builds x_i = map(i/N). Throws std::invalid_argument on odd N, N < 4,
/// eps outside (0,1), sigma < 1, or a breakpoint outside (0,1/2).
Mesh1D generate(const MeshSpec& spec);

/// Step-size inequalities for Bakhvalov meshes, evaluated verbatim.
struct Lemma2Report {
  bool monotone_layer_steps = false;   // h_0 <= ... <= h_{N/2-2}
  bool last_layer_step = false;        // sigma eps/4 <= h_{N/2-2} <= sigma eps
  bool transition_step = false;        // sigma eps/2 <= h_{N/2-1} <= 2 sigma/N
  bool coarse_steps = false;           // 1/N <= h_i <= 2/N, i >= N/2
  bool midpoint_below_half = false;    // x_{N/2} <= 1/2, diagnostic only

  bool all() const {
    return monotone_layer_steps && last_layer_step && transition_step &&
           coarse_steps;
  }
};

Lemma2Report check_lemma2(const Mesh1D& mesh);

/// max over 0 <= i <= N/2-2 of h_i^mu exp(-x_i/eps) / (eps^mu N^-mu).
/// Bounded by (4 sigma)^mu on Bakhvalov meshes.
double layer_decay_ratio(const Mesh1D& mesh, double mu);

/// CSV with header i,x_i,h_i; the last row leaves h_i empty.
void write_mesh_csv(const Mesh1D& mesh, std::ostream& out);

}  // namespace spfem

#endif  // SPFEM_MESH_HPP
