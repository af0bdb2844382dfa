#include "spfem/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "spfem/galerkin.hpp"
#include "spfem/norms.hpp"
#include "spfem/problem.hpp"

namespace spfem {

std::vector<int> default_N_list(int k) {
  const int top = k <= 2 ? 2048 : 1024;
  std::vector<int> out;
  for (int N = 8; N <= top; N *= 2) out.push_back(N);
  return out;
}

std::vector<int> StudyConfig::N_for(int k) const {
  return N_list.empty() ? default_N_list(k) : N_list;
}

void StudyConfig::validate() const {
  if (families.empty()) throw std::invalid_argument("no mesh families selected");
  if (k_list.empty()) throw std::invalid_argument("no degrees selected");
  for (int k : k_list)
    if (k < 1 || k > 10) throw std::invalid_argument("k must lie in 1..10");
  for (int N : N_list)
    if (N < 4 || N % 2 != 0) throw std::invalid_argument("N values must be even and >= 4");
  if (epsilon_list.empty()) throw std::invalid_argument("no epsilon values");
  for (double eps : epsilon_list)
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  if (sigma && !(*sigma >= 1.0)) throw std::invalid_argument("sigma must be >= 1");
  if (c1 && !(*c1 > 0.0)) throw std::invalid_argument("C1 must be positive");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  (void)make_problem(problem, epsilon_list.front());
}

ConvergenceRecord run_single(MeshFamily family, int k, double sigma, double c1,
                             double c_eps, int N, double epsilon,
                             const std::string& problem) {
  ConvergenceRecord rec;
  rec.family = family;
  rec.k = k;
  rec.sigma = sigma;
  rec.N = N;
  rec.epsilon = epsilon;
  try {
    const TwoPointBVP bvp = make_problem(problem, epsilon);
    const Mesh1D mesh = generate({family, N, sigma, epsilon, c1, c_eps});
    const PiecewisePolynomial uh = galerkin_solve(bvp, mesh, k);
    const ErrorTriple err = error_norms(uh, bvp.exact->u, bvp.exact->u_prime, epsilon);
    rec.e_inf = err.e_inf;
    rec.e_l2 = err.e_l2;
    rec.e_energy = err.e_energy;
    if (!std::isfinite(rec.e_energy)) rec.error = "non-finite error";
  } catch (const std::exception& ex) {
    rec.error = ex.what();
  }
  if (!rec.ok()) {
    rec.e_inf = rec.e_l2 = rec.e_energy = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

StudyResult run_study(const StudyConfig& config) {
  config.validate();
  struct Task {
    MeshFamily family;
    int k, N;
    double epsilon;
  };
  std::vector<Task> tasks;
  for (MeshFamily family : config.families)
    for (int k : config.k_list)
      for (int N : config.N_for(k))
        for (double eps : config.epsilon_list) tasks.push_back({family, k, N, eps});

  StudyResult result;
  result.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      result.records[i] = run_single(t.family, t.k, config.sigma_for(t.k),
                                     config.c1_for(t.k), config.c_eps, t.N,
                                     t.epsilon, config.problem);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < config.threads; ++w) pool.emplace_back(worker);
    worker();
  }
  result.table = aggregate(result.records);
  return result;
}

std::vector<AggregateRow> aggregate(const std::vector<ConvergenceRecord>& records) {
  using Key = std::tuple<int, int, int>;  // family, k, N
  std::map<Key, AggregateRow> rows;
  for (const auto& rec : records) {
    const Key key{static_cast<int>(rec.family), rec.k, rec.N};
    auto [it, inserted] = rows.try_emplace(key);
    AggregateRow& row = it->second;
    if (inserted) {
      row.family = rec.family;
      row.k = rec.k;
      row.N = rec.N;
      row.e_max = 0.0;
      row.e_min = std::numeric_limits<double>::infinity();
    }
    if (!rec.ok()) {
      row.failed = true;
      continue;
    }
    row.e_max = std::max(row.e_max, rec.e_energy);
    row.e_min = std::min(row.e_min, rec.e_energy);
  }

  std::vector<AggregateRow> out;
  for (auto& [key, row] : rows) out.push_back(row);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    AggregateRow& cur = out[i];
    const AggregateRow& nxt = out[i + 1];
    if (cur.family != nxt.family || cur.k != nxt.k || nxt.N != 2 * cur.N) continue;
    if (cur.failed || nxt.failed) continue;
    if (cur.e_max < kRoundoffFloor || nxt.e_max < kRoundoffFloor) continue;
    cur.rate = std::log2(cur.e_max / nxt.e_max);
  }
  return out;
}

std::vector<double> consecutive_rates(std::span<const double> errors) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i)
    out.push_back(std::log2(errors[i] / errors[i + 1]));
  return out;
}

double fitted_rate(std::span<const double> errors) {
  const auto rates = consecutive_rates(errors);
  if (rates.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t used = std::min<std::size_t>(3, rates.size());
  double sum = 0.0;
  for (std::size_t i = rates.size() - used; i < rates.size(); ++i) sum += rates[i];
  return sum / static_cast<double>(used);
}

std::string format_fortran_e(double value, int digits) {
  if (!std::isfinite(value)) return value != value ? "NaN" : (value > 0 ? "Inf" : "-Inf");
  if (value == 0.0) return "0." + std::string(static_cast<std::size_t>(digits), '0') + "E+00";
  char buf[64];
  // d.ddE+xx -> 0.dddE+(xx+1)
  std::snprintf(buf, sizeof buf, "%.*E", digits - 1, std::abs(value));
  const std::string s(buf);
  const auto epos = s.find('E');
  std::string mantissa;
  for (char ch : s.substr(0, epos))
    if (ch != '.') mantissa += ch;
  const int exponent = std::stoi(s.substr(epos + 1)) + 1;
  std::snprintf(buf, sizeof buf, "%s0.%sE%c%02d", value < 0 ? "-" : "", mantissa.c_str(),
                exponent < 0 ? '-' : '+', std::abs(exponent));
  return buf;
}

void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out) {
  out << "family,k,sigma,N,epsilon,e_inf,e_l2,e_energy\n";
  char buf[256];
  for (const auto& r : records) {
    if (r.ok()) {
      std::snprintf(buf, sizeof buf, "%s,%d,%.6g,%d,%.6e,%.12e,%.12e,%.12e\n",
                    std::string(to_string(r.family)).c_str(), r.k, r.sigma, r.N,
                    r.epsilon, r.e_inf, r.e_l2, r.e_energy);
    } else {
      std::snprintf(buf, sizeof buf, "%s,%d,%.6g,%d,%.6e,ERROR,ERROR,ERROR\n",
                    std::string(to_string(r.family)).c_str(), r.k, r.sigma, r.N,
                    r.epsilon);
    }
    out << buf;
  }
}

void emit_table(const std::vector<AggregateRow>& rows, std::ostream& out) {
  // Column groups ordered by k, then family, as in a convergence table.
  using Group = std::pair<int, MeshFamily>;
  std::vector<Group> groups;
  std::set<int> Ns;
  std::map<std::tuple<int, int, int>, const AggregateRow*> cell;
  for (const auto& r : rows) {
    const Group g{r.k, r.family};
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
    Ns.insert(r.N);
    cell[{r.k, static_cast<int>(r.family), r.N}] = &r;
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Group& a, const Group& b) { return a.first < b.first; });

  char buf[128];
  std::ostringstream head1, head2;
  head1 << "      ";
  head2 << "     N";
  for (const auto& [k, family] : groups) {
    std::snprintf(buf, sizeof buf, " | k=%-2d %-12s", k, std::string(to_string(family)).c_str());
    head1 << buf;
    std::snprintf(buf, sizeof buf, " | %10s %6s", "e^N", "r^N");
    head2 << buf;
  }
  out << head1.str() << "\n" << head2.str() << "\n";
  for (int N : Ns) {
    std::snprintf(buf, sizeof buf, "%6d", N);
    out << buf;
    for (const auto& [k, family] : groups) {
      auto it = cell.find({k, static_cast<int>(family), N});
      if (it == cell.end()) {
        std::snprintf(buf, sizeof buf, " | %10s %6s", "", "");
      } else if (it->second->failed) {
        std::snprintf(buf, sizeof buf, " | %10s %6s", "ERROR", "");
      } else {
        const AggregateRow& r = *it->second;
        char rate[16];
        if (r.rate) std::snprintf(rate, sizeof rate, "%.2f", *r.rate);
        else std::snprintf(rate, sizeof rate, "---");
        std::snprintf(buf, sizeof buf, " | %10s %6s", format_fortran_e(r.e_max).c_str(), rate);
      }
      out << buf;
    }
    out << "\n";
  }
}

std::map<std::string, std::vector<std::string>> parse_config_text(const std::string& text) {
  std::map<std::string, std::vector<std::string>> out;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(lines, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    std::string value = line.substr(eq + 1);
    std::replace(value.begin(), value.end(), ',', ' ');
    std::istringstream tokens(value);
    std::vector<std::string> values;
    for (std::string tok; tokens >> tok;) values.push_back(tok);
    out[key] = std::move(values);
  }
  return out;
}

}  // namespace spfem
