// spfem: mesh export, single solves, convergence studies and mesh /
// interpolation checks for -eps u'' - b u' + c u = f on (0,1).
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spfem/banded.hpp"
#include "spfem/galerkin.hpp"
#include "spfem/interpolants.hpp"
#include "spfem/norms.hpp"
#include "spfem/study.hpp"

namespace {

using namespace spfem;

enum Exit { kOk = 0, kInvalid = 1, kNumerical = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> mesh_types;
  std::vector<int> k;
  std::optional<double> sigma, c1;
  double c_eps = 1.0;
  std::vector<int> N;
  std::vector<double> epsilon;
  std::string problem = "paper-test";
  std::string out;
  std::string format;  // study: csv, verify: table
  std::string config;
  int samples = 10;
  int threads = 1;
};

std::vector<MeshFamily> families_of(const Options& o, std::vector<MeshFamily> fallback) {
  if (o.mesh_types.empty()) return fallback;
  std::vector<MeshFamily> out;
  for (const auto& name : o.mesh_types) {
    const auto f = parse_mesh_family(name);
    if (!f) throw std::invalid_argument("unknown mesh type '" + name + "'");
    out.push_back(*f);
  }
  return out;
}

template <class T>
T single(const std::vector<T>& values, T fallback, const char* flag) {
  if (values.empty()) return fallback;
  if (values.size() > 1)
    throw std::invalid_argument(std::string(flag) + " takes one value for this subcommand");
  return values.front();
}

MeshSpec single_spec(const Options& o) {
  const auto families = families_of(o, {MeshFamily::RoosB});
  if (families.size() > 1) throw std::invalid_argument("--mesh-type takes one value for this subcommand");
  const int k = single(o.k, 1, "--k");
  return MeshSpec{families.front(),
                  single(o.N, 64, "--N"),
                  o.sigma.value_or(k + 1.0),
                  single(o.epsilon, 1e-6, "--epsilon"),
                  o.c1.value_or(5.0 * (k + 1) / 4.0),
                  o.c_eps};
}

Mesh1D make_mesh(const MeshSpec& spec) {
  Mesh1D mesh = generate(spec);
  for (const auto& w : mesh.warnings()) std::cerr << "warning: " << w << "\n";
  return mesh;
}

std::string line(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string line(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

int run_mesh(const Options& o, std::ostream& out) {
  write_mesh_csv(make_mesh(single_spec(o)), out);
  return kOk;
}

int run_solve(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const MeshSpec spec = single_spec(o);
  const int k = single(o.k, 1, "--k");
  const auto bvp = make_problem(o.problem, spec.epsilon);
  const Mesh1D mesh = make_mesh(spec);
  const PiecewisePolynomial uh = galerkin_solve(bvp, mesh, k);
  const bool exact = bvp.exact.has_value();

  out << "x,u_N,u_exact,error\n";
  auto row = [&](int i, double t) {
    const double x = i == mesh.intervals() ? 1.0 : mesh.node(i) + t * mesh.step(i);
    const double v = i == mesh.intervals() ? uh.coefficients()[uh.num_nodes() - 1]
                                           : uh.value_on_element(i, t);
    if (exact) {
      const double u = bvp.exact->u(x);
      out << line("%.17g,%.17g,%.17g,%.17g\n", x, v, u, u - v);
    } else {
      out << line("%.17g,%.17g,,\n", x, v);
    }
  };
  for (int i = 0; i < mesh.intervals(); ++i)
    for (int s = 0; s < o.samples; ++s) row(i, static_cast<double>(s) / o.samples);
  row(mesh.intervals(), 0.0);

  if (exact) {
    const ErrorTriple e = error_norms(uh, bvp.exact->u, bvp.exact->u_prime, spec.epsilon);
    std::cerr << line("%s k=%d N=%d eps=%g: e_inf=%.6e e_l2=%.6e e_energy=%.6e\n",
                      std::string(to_string(mesh.effective_family())).c_str(), k, spec.N,
                      spec.epsilon, e.e_inf, e.e_l2, e.e_energy);
    if (!std::isfinite(e.e_energy)) return kNumerical;
  }
  return kOk;
}

StudyConfig study_config(const Options& o) {
  StudyConfig cfg;
  cfg.families = families_of(o, cfg.families);
  if (!o.k.empty()) cfg.k_list = o.k;
  cfg.sigma = o.sigma;
  cfg.c1 = o.c1;
  cfg.c_eps = o.c_eps;
  cfg.N_list = o.N;
  if (!o.epsilon.empty()) cfg.epsilon_list = o.epsilon;
  cfg.problem = o.problem;
  cfg.threads = o.threads;
  cfg.validate();
  return cfg;
}

int run_study_cmd(const Options& o, std::ostream& out) {
  const StudyResult result = run_study(study_config(o));
  if (o.format == "table") emit_table(result.table, out);
  else emit_csv(result.records, out);
  int failed = 0;
  for (const auto& r : result.records)
    if (!r.ok()) {
      ++failed;
      std::cerr << line("error: %s k=%d N=%d eps=%g: %s\n", std::string(to_string(r.family)).c_str(),
                        r.k, r.N, r.epsilon, r.error.c_str());
    }
  return failed ? kNumerical : kOk;
}

// Step-size chains on every mesh of the sweep, then per (family, k, N) the
// max over eps of |u-u^I|_inf, ||u-u^I||_eps and ||PE||_eps with rates.
int run_verify(const Options& o, std::ostream& out) {
  const StudyConfig cfg = study_config(o);
  const bool csv = o.format == "csv";  // table unless asked
  int violations = 0;
  std::ostringstream chain_log;
  if (!csv) out << "# step-size chains (monotone, last layer, transition, coarse; x_{N/2}<=1/2)\n";
  if (csv) out << "family,k,sigma,N,e_inf_interp,e_energy_interp,e_energy_PE,chains_ok\n";

  for (MeshFamily family : cfg.families) {
    for (int k : cfg.k_list) {
      const double sigma = cfg.sigma_for(k);
      std::vector<int> Ns = cfg.N_for(k);
      std::vector<double> inf, energy, pe;
      std::vector<bool> chains;
      for (int N : Ns) {
        double a = 0, b = 0, c = 0;
        bool ok = true;
        for (double eps : cfg.epsilon_list) {
          const auto bvp = make_problem(cfg.problem, eps);
          const Mesh1D mesh = generate({family, N, sigma, eps, cfg.c1_for(k), cfg.c_eps});
          const Lemma2Report r = check_lemma2(mesh);
          if (!r.all()) {
            ok = false;
            ++violations;
          }
          if (!csv && !r.all())
            chain_log << line("%s k=%d N=%d eps=%g: %d%d%d%d %d\n", std::string(to_string(family)).c_str(),
                          k, N, eps, r.monotone_layer_steps, r.last_layer_step, r.transition_step,
                          r.coarse_steps, r.midpoint_below_half);
          if (!bvp.exact || !bvp.exact->has_decomposition())
            throw std::invalid_argument("verify needs a problem with a known S/E split");
          const InterpolantBundle bundle = build_bundle(*bvp.exact, mesh, k);
          const ErrorTriple e = error_norms(bundle.uI, bvp.exact->u, bvp.exact->u_prime, eps);
          a = std::max(a, e.e_inf);
          b = std::max(b, e.e_energy);
          c = std::max(c, norms_of(bundle.PE, eps).e_energy);
        }
        inf.push_back(a);
        energy.push_back(b);
        pe.push_back(c);
        chains.push_back(ok);
      }
      const auto ri = consecutive_rates(inf), re = consecutive_rates(energy), rp = consecutive_rates(pe);
      if (!csv)
        out << line("\n%s k=%d sigma=%g\n%6s %10s %6s %10s %6s %10s %6s %s\n",
                    std::string(to_string(family)).c_str(), k, sigma, "N", "|u-uI|inf", "rate",
                    "||u-uI||", "rate", "||PE||", "rate", "chains");
      for (std::size_t i = 0; i < Ns.size(); ++i) {
        if (csv) {
          out << line("%s,%d,%g,%d,%.12e,%.12e,%.12e,%d\n", std::string(to_string(family)).c_str(),
                      k, sigma, Ns[i], inf[i], energy[i], pe[i], chains[i] ? 1 : 0);
          continue;
        }
        auto rate = [&](const std::vector<double>& r) {
          return i < r.size() ? line("%.2f", r[i]) : std::string("---");
        };
        out << line("%6d %10s %6s %10s %6s %10s %6s %s\n", Ns[i], format_fortran_e(inf[i]).c_str(),
                    rate(ri).c_str(), format_fortran_e(energy[i]).c_str(), rate(re).c_str(),
                    format_fortran_e(pe[i]).c_str(), rate(rp).c_str(), chains[i] ? "ok" : "FAIL");
      }
    }
  }
  if (!csv) {
    out << "\n" << chain_log.str();
    out << line("# %d mesh(es) violate the step-size chains\n", violations);
  }
  return violations ? kNumerical : kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Config entries only fill options not given on the command line.
void apply_config(CLI::App& app, const std::string& path) {
  for (const auto& [key, values] : parse_config_text(read_file(path))) {
    CLI::Option* opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") throw std::invalid_argument("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    for (const auto& v : values) opt->add_result(v);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galerkin FEM for singularly perturbed convection-diffusion on Bakhvalov-type meshes"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;

  app.add_option("--mesh-type", o.mesh_types, "roos, kopteva, original, uniform (repeatable for study/verify)")
      ->delimiter(',');
  app.add_option("-k,--k", o.k, "polynomial degree (repeatable for study/verify)")->delimiter(',');
  app.add_option("--sigma", o.sigma, "mesh grading parameter (default k+1)");
  app.add_option("--c1", o.c1, "Kopteva breakpoint constant (default 5(k+1)/4)");
  app.add_option("--c-eps", o.c_eps, "original Bakhvalov constant");
  app.add_option("-N,--N", o.N, "number of mesh intervals (repeatable)")->delimiter(',');
  app.add_option("--epsilon", o.epsilon, "perturbation parameter (repeatable)")->delimiter(',');
  app.add_option("--problem", o.problem, "paper-test or quadratic");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "csv or table (study default csv, verify default table)")->check(CLI::IsMember({"csv", "table"}));
  app.add_option("--config", o.config, "key=value file; command-line flags take precedence");
  app.add_option("--samples", o.samples, "solve: sample points per element");
  app.add_option("--threads", o.threads, "study: worker threads");

  auto* mesh_cmd = app.add_subcommand("mesh", "write mesh nodes as CSV");
  auto* solve_cmd = app.add_subcommand("solve", "solve once; CSV samples on stdout, error norms on stderr");
  auto* study_cmd = app.add_subcommand("study", "convergence sweep over family, k, N, eps");
  auto* verify_cmd = app.add_subcommand("verify", "step-size chains and interpolation rates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (!o.config.empty()) apply_config(app, o.config);

    std::ostringstream buffer;
    int code = kOk;
    if (mesh_cmd->parsed()) code = run_mesh(o, buffer);
    else if (solve_cmd->parsed()) code = run_solve(o, buffer);
    else if (study_cmd->parsed()) code = run_study_cmd(o, buffer);
    else if (verify_cmd->parsed()) code = run_verify(o, buffer);

    if (o.out.empty()) {
      std::cout << buffer.str() << std::flush;
      if (!std::cout) throw IoError("write to stdout failed");
    } else {
      std::ofstream file(o.out);
      if (!file) throw IoError("cannot open " + o.out);
      file << buffer.str();
      file.close();
      if (!file) throw IoError("write to " + o.out + " failed");
    }
    return code;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const SingularPivotError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
}
