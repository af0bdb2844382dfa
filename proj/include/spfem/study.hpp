#ifndef SPFEM_STUDY_HPP
#define SPFEM_STUDY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spfem/mesh.hpp"

namespace spfem {

struct StudyConfig {
  std::vector<MeshFamily> families{MeshFamily::RoosB, MeshFamily::KoptevaB};
  std::vector<int> k_list{1, 2, 3, 4};
  std::optional<double> sigma;  // k+1 when unset
  std::optional<double> c1;     // 5(k+1)/4 when unset
  double c_eps = 1.0;
  std::vector<int> N_list;      // default_N_list(k) when empty
  std::vector<double> epsilon_list{1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9};
  std::string problem = "paper-test";
  int threads = 1;

  double sigma_for(int k) const { return sigma.value_or(k + 1.0); }
  double c1_for(int k) const { return c1.value_or(5.0 * (k + 1) / 4.0); }
  std::vector<int> N_for(int k) const;

  /// Throws std::invalid_argument.
  void validate() const;
};

/// 8, 16, ..., 2048 for k <= 2 and 8, ..., 1024 for k >= 3.
std::vector<int> default_N_list(int k);

struct ConvergenceRecord {
  MeshFamily family = MeshFamily::RoosB;
  int k = 1;
  double sigma = 2.0;
  int N = 8;
  double epsilon = 1e-4;
  double e_inf = 0.0;
  double e_l2 = 0.0;
  double e_energy = 0.0;
  std::string error;  // non-empty when the run failed

  bool ok() const { return error.empty(); }
};

/// One (family, k, N) row: e^N = max over eps of the energy error and
/// r^N = log2(e^N / e^{2N}) when the next N is present.
struct AggregateRow {
  MeshFamily family = MeshFamily::RoosB;
  int k = 1;
  int N = 8;
  double e_max = 0.0;
  double e_min = 0.0;
  std::optional<double> rate;
  bool failed = false;
};

struct StudyResult {
  std::vector<ConvergenceRecord> records;
  std::vector<AggregateRow> table;
};

/// Energy errors below this are treated as round-off; rates involving them
/// are not reported.
inline constexpr double kRoundoffFloor = 1e-12;

/// Solves every (family, k, N, eps) tuple. Failed runs are recorded.
StudyResult run_study(const StudyConfig& config);

ConvergenceRecord run_single(MeshFamily family, int k, double sigma, double c1,
                             double c_eps, int N, double epsilon,
                             const std::string& problem);

std::vector<AggregateRow> aggregate(const std::vector<ConvergenceRecord>& records);

/// log2(e[i]/e[i+1]) for consecutive entries.
std::vector<double> consecutive_rates(std::span<const double> errors);

/// Mean of the last three consecutive rates (fewer when not available).
double fitted_rate(std::span<const double> errors);

/// Fortran-style E format with a leading "0.": 0.00642 -> "0.642E-02".
std::string format_fortran_e(double value, int digits = 3);

void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out);
void emit_table(const std::vector<AggregateRow>& rows, std::ostream& out);

/// `key=value` lines; '#' starts a comment; values split on commas and
/// whitespace. Throws std::invalid_argument on a line without '='.
std::map<std::string, std::vector<std::string>> parse_config_text(const std::string& text);

}  // namespace spfem

#endif  // SPFEM_STUDY_HPP
