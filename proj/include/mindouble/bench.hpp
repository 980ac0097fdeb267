#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "deadline.hpp"
#include "dfs_solver.hpp"
#include "graph.hpp"
#include "naive_decomp.hpp"
#include "oracle.hpp"
#include "solution.hpp"
#include "witness_decomp.hpp"

namespace mindouble {

enum class Method { kOracle, kDfs, kNaive, kWitness };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::kOracle:
      return "oracle";
    case Method::kDfs:
      return "dfs";
    case Method::kNaive:
      return "naive";
    case Method::kWitness:
      return "witness";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m :
       {Method::kOracle, Method::kDfs, Method::kNaive, Method::kWitness}) {
    if (s == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown method '" + s + "'");
}

struct SolveConfig {
  Objective objective = Objective::kMinDouble;
  double time_limit_s = 0.0;
  bool use_presolve = true;
  PreBreak pre_break = PreBreak::kNone;
  bool nogood = false;
  int oracle_cap = kDefaultOracleCap;
};

inline Solution solve_oracle(const Instance& inst, Objective obj,
                             int cap = kDefaultOracleCap) {
  Stopwatch clock;
  Solution sol;
  sol.objective_kind = obj;
  auto best = brute_optimum(inst, obj, cap);
  if (best) {
    sol.status = Status::kOptimal;
    sol.order = best->order;
    OrderReport rep = check_order(inst, best->order);
    sol.doubles = rep.doubles;
    sol.objective = objective_of(rep, obj);
  } else {
    sol.status = Status::kInfeasible;
  }
  sol.stats.time_ms = clock.elapsed_ms();
  return sol;
}

// The decompositions only handle the double count.
inline Solution solve_with(const Instance& inst, Method method,
                           const SolveConfig& cfg) {
  switch (method) {
    case Method::kOracle:
      return solve_oracle(inst, cfg.objective, cfg.oracle_cap);
    case Method::kDfs:
      return solve_dfs(inst, cfg.objective,
                       DfsOptions{cfg.time_limit_s, cfg.use_presolve, true});
    case Method::kNaive:
    case Method::kWitness:
      if (cfg.objective != Objective::kMinDouble) {
        throw std::invalid_argument(std::string(to_string(method)) +
                                    " supports only the double objective");
      }
      if (method == Method::kNaive) {
        return solve_naive(inst,
                           NaiveOptions{cfg.time_limit_s, cfg.use_presolve,
                                        cfg.nogood});
      } else {
        WitnessOptions w;
        w.time_limit_s = cfg.time_limit_s;
        w.pre_break = cfg.pre_break;
        w.use_presolve = cfg.use_presolve;
        return solve_witness(inst, w);
      }
  }
  throw std::invalid_argument("unknown method");
}

inline constexpr const char* kBenchHeader =
    "instance,n,density,K,method,status,objective,time_ms,"
    "choice_points_or_bb_nodes,cuts,cliques_considered";

struct BenchRow {
  std::string instance;
  int n = 0;
  double density = 0.0;
  int K = 0;
  std::string method;
  std::string status;     // OPTIMAL, INFEASIBLE, TIMEOUT or ERROR
  std::string objective;  // empty iff no value is known
  double time_ms = 0.0;
  std::uint64_t choice_points_or_bb_nodes = 0;
  int cuts = 0;
  int cliques_considered = 0;
  std::string error;  // not part of the CSV
};

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string fixed3(double x) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << x;
  return s.str();
}
}  // namespace detail

inline std::string render_row(const BenchRow& r) {
  std::ostringstream s;
  s << detail::csv_field(r.instance) << ',' << r.n << ','
    << detail::fixed3(r.density) << ',' << r.K << ',' << r.method << ','
    << r.status << ',' << r.objective << ',' << detail::fixed3(r.time_ms)
    << ',' << r.choice_points_or_bb_nodes << ',' << r.cuts << ','
    << r.cliques_considered;
  return s.str();
}

inline std::string render_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kBenchHeader) + "\n";
  for (const auto& r : rows) out += render_row(r) + "\n";
  return out;
}

inline BenchRow bench_one(const Instance& inst, Method method,
                          const SolveConfig& cfg) {
  BenchRow row;
  row.instance = inst.name();
  row.n = inst.n();
  row.density = inst.density();
  row.K = inst.dimension();
  row.method = to_string(method);
  Stopwatch clock;
  try {
    Solution sol = solve_with(inst, method, cfg);
    row.status = to_string(sol.status);
    if (sol.order) {
      row.objective = std::to_string(sol.objective);
    } else if (sol.status == Status::kInfeasible) {
      row.objective = "inf";
    }
    row.time_ms = sol.stats.time_ms;
    row.choice_points_or_bb_nodes = sol.stats.choice_points;
    row.cuts = sol.stats.cuts;
    row.cliques_considered = sol.stats.cliques_considered;
  } catch (const std::exception& e) {
    row.status = "ERROR";
    row.error = e.what();
    row.time_ms = clock.elapsed_ms();
  }
  return row;
}

struct BenchTask {
  std::string label;  // instance name, or the path when it failed to load
  std::optional<Instance> instance;
  std::string load_error;
};

inline BenchTask load_task(const std::string& path) {
  BenchTask t;
  t.label = path;
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    t.instance = parse_instance(buf.str());
    if (!t.instance->name().empty()) t.label = t.instance->name();
  } catch (const std::exception& e) {
    t.load_error = e.what();
  }
  return t;
}

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> disagreements;
};

// Rows with OPTIMAL must share one objective per instance, and OPTIMAL and
// INFEASIBLE may not both appear.
inline std::vector<std::string> find_disagreements(
    const std::vector<BenchRow>& rows) {
  std::map<std::string, std::set<std::string>> optimal;
  std::map<std::string, bool> infeasible;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    if (!optimal.count(r.instance) && !infeasible.count(r.instance)) {
      order.push_back(r.instance);
    }
    optimal[r.instance];
    infeasible[r.instance] = infeasible[r.instance] || r.status == "INFEASIBLE";
    if (r.status == "OPTIMAL") optimal[r.instance].insert(r.objective);
  }
  std::vector<std::string> out;
  for (const auto& name : order) {
    const auto& vals = optimal[name];
    if (vals.size() > 1 || (!vals.empty() && infeasible[name])) {
      std::string msg = name + ":";
      for (const auto& v : vals) msg += " " + v;
      if (infeasible[name]) msg += " INFEASIBLE";
      out.push_back(msg);
    }
  }
  return out;
}

// One row per (task, method) in input order; tasks are spread over `workers`
// threads and every solver runs single-threaded.
inline BenchReport run_bench(const std::vector<BenchTask>& tasks,
                             const std::vector<Method>& methods,
                             const SolveConfig& cfg, int workers = 1) {
  if (methods.empty()) throw std::invalid_argument("no methods given");
  const std::size_t total = tasks.size() * methods.size();
  BenchReport rep;
  rep.rows.resize(total);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < total; i = next++) {
      const BenchTask& t = tasks[i / methods.size()];
      Method m = methods[i % methods.size()];
      if (t.instance) {
        rep.rows[i] = bench_one(*t.instance, m, cfg);
      } else {
        BenchRow& r = rep.rows[i];
        r.instance = t.label;
        r.method = to_string(m);
        r.status = "ERROR";
        r.error = t.load_error;
      }
    }
  };
  int w = std::max(1, workers);
  if (w == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  rep.disagreements = find_disagreements(rep.rows);
  return rep;
}

inline BenchReport run_bench(const std::vector<std::string>& paths,
                             const std::vector<Method>& methods,
                             const SolveConfig& cfg, int workers = 1) {
  if (methods.empty()) throw std::invalid_argument("no methods given");
  std::vector<BenchTask> tasks;
  for (const auto& p : paths) tasks.push_back(load_task(p));
  return run_bench(tasks, methods, cfg, workers);
}

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw CsvError("unterminated quote");
  return out;
}
}  // namespace detail

inline std::vector<BenchRow> parse_bench_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kBenchHeader) throw CsvError("unexpected header: " + line);
  std::vector<BenchRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != 11) {
      throw CsvError("line " + std::to_string(lineno) + ": expected 11 fields");
    }
    BenchRow r;
    try {
      r.instance = f[0];
      r.n = std::stoi(f[1]);
      r.density = std::stod(f[2]);
      r.K = std::stoi(f[3]);
      r.method = f[4];
      r.status = f[5];
      r.objective = f[6];
      r.time_ms = std::stod(f[7]);
      r.choice_points_or_bb_nodes = std::stoull(f[8]);
      r.cuts = std::stoi(f[9]);
      r.cliques_considered = std::stoi(f[10]);
    } catch (const std::logic_error&) {
      throw CsvError("line " + std::to_string(lineno) + ": bad number");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

struct ProfilePoint {
  std::string method;
  double tau = 1.0;
  double fraction = 0.0;
};

// Fraction of instances each method solves within tau times the fastest
// method on that instance. Every method is sampled at the same tau values.
inline std::vector<ProfilePoint> perf_profile(const std::vector<BenchRow>& rows) {
  constexpr double kFloorMs = 1e-3;
  std::vector<std::string> methods;
  std::vector<std::string> instances;
  std::map<std::string, double> best;
  for (const auto& r : rows) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
    if (std::find(instances.begin(), instances.end(), r.instance) ==
        instances.end()) {
      instances.push_back(r.instance);
    }
    if (r.status == "OPTIMAL" || r.status == "INFEASIBLE") {
      double t = std::max(r.time_ms, kFloorMs);
      auto it = best.find(r.instance);
      if (it == best.end() || t < it->second) best[r.instance] = t;
    }
  }
  std::map<std::string, std::vector<double>> ratios;
  std::set<double> taus = {1.0};
  for (const auto& r : rows) {
    if (r.status != "OPTIMAL" && r.status != "INFEASIBLE") continue;
    double ratio = std::max(r.time_ms, kFloorMs) / best[r.instance];
    ratios[r.method].push_back(ratio);
    taus.insert(ratio);
  }
  std::vector<ProfilePoint> out;
  const double total = static_cast<double>(instances.size());
  for (const auto& m : methods) {
    auto& rs = ratios[m];
    std::sort(rs.begin(), rs.end());
    for (double tau : taus) {
      auto solved = std::upper_bound(rs.begin(), rs.end(), tau) - rs.begin();
      out.push_back({m, tau, total > 0 ? static_cast<double>(solved) / total
                                       : 0.0});
    }
  }
  return out;
}

inline std::vector<ProfilePoint> perf_profile(const std::string& csv) {
  return perf_profile(parse_bench_csv(csv));
}

inline std::string render_profile_csv(const std::vector<ProfilePoint>& pts) {
  std::ostringstream s;
  s << "method,tau,fraction\n";
  s.precision(6);
  for (const auto& p : pts) {
    s << p.method << ',' << p.tau << ',' << p.fraction << '\n';
  }
  return s.str();
}

}  // namespace mindouble
