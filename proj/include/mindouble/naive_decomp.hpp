#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deadline.hpp"
#include "dfs_solver.hpp"
#include "graph.hpp"
#include "order.hpp"
#include "presolve.hpp"
#include "solution.hpp"

namespace mindouble {

// sum_{r in ranks} y_r >= 1
struct BendersCut {
  std::vector<int> ranks;
  friend bool operator==(const BendersCut&, const BendersCut&) = default;

  bool satisfied_by(const DoublePattern& d) const {
    for (int r : ranks) {
      if (d.bits[r] == 1) return true;
    }
    return false;
  }
};

// Master over rank patterns: minimise the number of ones subject to the
// fixings, the covering cuts, and "differ from each listed pattern".
// Iterative deepening on the number of ones with 0 tried before 1 returns the
// lexicographically smallest optimum.
inline std::optional<DoublePattern> mp1_solve(
    int n, [[maybe_unused]] int dimension, const PresolveResult& fixings,
    const std::vector<BendersCut>& cuts,
    const std::vector<DoublePattern>& nogoods = {}) {
  std::vector<int> forced(n, -1);
  for (int r : fixings.fixed_zero) {
    if (r < n) forced[r] = 0;
  }
  for (int r : fixings.fixed_one) {
    if (r < n) {
      if (forced[r] == 0) return std::nullopt;
      forced[r] = 1;
    }
  }
  std::vector<std::vector<int>> covers;
  for (const auto& s : fixings.cover_inequalities) covers.push_back(s);
  for (const auto& c : cuts) covers.push_back(c.ranks);

  std::vector<int> bits(n, 0);
  int forced_ones = 0;
  for (int r = 0; r < n; ++r) forced_ones += forced[r] == 1 ? 1 : 0;

  // Greedy packing of open covers over the undecided ranks; each packed
  // cover needs its own one.
  auto packing_bound = [&](int next) {
    std::vector<char> used(n, 0);
    int need = 0;
    for (const auto& s : covers) {
      bool satisfied = false;
      bool clash = false;
      bool any_free = false;
      for (int r : s) {
        if (r < next) {
          satisfied = satisfied || bits[r] == 1;
        } else if (forced[r] == 1) {
          satisfied = true;
        } else if (forced[r] == -1) {
          any_free = true;
          clash = clash || used[r];
        }
      }
      if (satisfied) continue;
      if (!any_free) return n + 1;
      if (clash) continue;
      for (int r : s) {
        if (r >= next && forced[r] == -1) used[r] = 1;
      }
      ++need;
    }
    return need;
  };

  auto differs_from_all = [&]() {
    for (const auto& g : nogoods) {
      if (g.bits == bits) return false;
    }
    return true;
  };

  std::vector<int> forced_suffix(n + 1, 0);
  for (int r = n - 1; r >= 0; --r) {
    forced_suffix[r] = forced_suffix[r + 1] + (forced[r] == 1 ? 1 : 0);
  }

  auto descend = [&](auto&& self, int r, int budget) -> bool {
    if (budget < forced_suffix[r]) return false;
    if (r == n) return budget == 0 && differs_from_all();
    int free_budget = budget - forced_suffix[r];
    if (packing_bound(r) > free_budget) return false;
    if (forced[r] != -1) {
      bits[r] = forced[r];
      bool ok = self(self, r + 1, budget - forced[r]);
      if (!ok) bits[r] = 0;
      return ok;
    }
    bits[r] = 0;
    if (self(self, r + 1, budget)) return true;
    if (budget > forced_suffix[r + 1]) {
      bits[r] = 1;
      if (self(self, r + 1, budget - 1)) return true;
    }
    bits[r] = 0;
    return false;
  };

  for (int t = forced_ones; t <= n; ++t) {
    std::fill(bits.begin(), bits.end(), 0);
    if (descend(descend, 0, t)) return DoublePattern(bits);
  }
  return std::nullopt;
}

inline std::vector<int> pattern_thresholds(const DoublePattern& d,
                                           int dimension) {
  std::vector<int> t(d.size(), 0);
  for (int r = dimension + 1; r < d.size(); ++r) {
    t[r] = d.bits[r] ? dimension : dimension + 1;
  }
  return t;
}

inline ThresholdResult sp1_solve(const Instance& inst,
                                 const DoublePattern& pattern,
                                 Deadline& deadline,
                                 std::uint64_t* choice_points = nullptr) {
  return threshold_search(inst, pattern_thresholds(pattern, inst.dimension()),
                          deadline, choice_points);
}

inline std::optional<VertexOrder> sp1_solve(const Instance& inst,
                                            const DoublePattern& pattern) {
  Deadline none;
  return sp1_solve(inst, pattern, none).order;
}

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit reached") {}
};

// Deletion filter over the strict ranks {r > K : pattern[r] = 0}, scanned from
// the highest rank down. A rank stays relaxed (treated as a double slot) when
// the subproblem remains infeasible without it.
inline BendersCut find_iis(const Instance& inst, const DoublePattern& pattern,
                           Deadline& deadline,
                           std::uint64_t* choice_points = nullptr) {
  const int k = inst.dimension();
  auto first = sp1_solve(inst, pattern, deadline, choice_points);
  if (first.outcome == SearchOutcome::kTimeout) throw TimeoutError();
  if (first.outcome == SearchOutcome::kFound) {
    throw std::logic_error("find_iis called on a feasible pattern");
  }
  DoublePattern cur = pattern;
  for (int r = cur.size() - 1; r > k; --r) {
    if (cur.bits[r] != 0) continue;
    cur.bits[r] = 1;
    auto res = sp1_solve(inst, cur, deadline, choice_points);
    if (res.outcome == SearchOutcome::kTimeout) throw TimeoutError();
    if (res.outcome == SearchOutcome::kFound) cur.bits[r] = 0;
  }
  BendersCut cut;
  for (int r = k + 1; r < cur.size(); ++r) {
    if (cur.bits[r] == 0) cut.ranks.push_back(r);
  }
  if (cut.ranks.empty()) {
    throw std::logic_error("pattern infeasible with every rank relaxed");
  }
  return cut;
}

inline BendersCut find_iis(const Instance& inst, const DoublePattern& pattern) {
  Deadline none;
  return find_iis(inst, pattern, none);
}

struct NaiveOptions {
  double time_limit_s = 0.0;
  bool use_presolve = true;
  bool nogood = false;  // weak cut that removes only the master solution
};

struct NaiveCutRecord {
  BendersCut cut;          // empty when the no-good variant is used
  DoublePattern pattern;   // master solution that produced the cut
};

struct NaiveOutcome {
  Solution solution;
  std::vector<NaiveCutRecord> log;
};

inline NaiveOutcome solve_naive_traced(const Instance& inst,
                                       const NaiveOptions& opts = {}) {
  require_solver_size(inst.n(), "naive decomposition");
  Stopwatch clock;
  Deadline deadline(opts.time_limit_s);
  NaiveOutcome out;
  Solution& sol = out.solution;
  sol.objective_kind = Objective::kMinDouble;
  const int n = inst.n();
  const int k = inst.dimension();

  auto finish = [&](Status s) {
    sol.status = s;
    sol.stats.time_ms = clock.elapsed_ms();
    return out;
  };

  bool has_clique = false;
  for_each_clique(inst, k + 1, [&](const Clique&) {
    has_clique = true;
    return false;
  });
  if (!has_clique) return finish(Status::kInfeasible);

  // With every rank relaxed the subproblem is plain DVOP feasibility.
  DoublePattern all_relaxed(std::vector<int>(n, 0));
  for (int r = k; r < n; ++r) all_relaxed.bits[r] = 1;
  auto feas = sp1_solve(inst, all_relaxed, deadline, &sol.stats.choice_points);
  if (feas.outcome == SearchOutcome::kTimeout) return finish(Status::kTimeout);
  if (feas.outcome == SearchOutcome::kExhausted) {
    return finish(Status::kInfeasible);
  }

  PresolveResult fixings = opts.use_presolve ? presolve(inst) : base_fixings(inst);
  std::vector<BendersCut> cuts;
  std::vector<DoublePattern> nogoods;
  while (true) {
    if (deadline.expired()) return finish(Status::kTimeout);
    ++sol.stats.iterations;
    auto pattern = mp1_solve(n, k, fixings, cuts, nogoods);
    if (!pattern) return finish(Status::kInfeasible);
    auto sub = sp1_solve(inst, *pattern, deadline, &sol.stats.choice_points);
    if (sub.outcome == SearchOutcome::kTimeout) return finish(Status::kTimeout);
    if (sub.outcome == SearchOutcome::kFound) {
      sol.order = sub.order;
      OrderReport rep = check_order(inst, *sol.order);
      sol.doubles = rep.doubles;
      sol.objective = static_cast<std::uint64_t>(rep.double_count);
      return finish(Status::kOptimal);
    }
    if (opts.nogood) {
      nogoods.push_back(*pattern);
      out.log.push_back({BendersCut{}, *pattern});
    } else {
      Stopwatch iis_clock;
      try {
        BendersCut cut =
            find_iis(inst, *pattern, deadline, &sol.stats.choice_points);
        cuts.push_back(cut);
        out.log.push_back({cut, *pattern});
      } catch (const TimeoutError&) {
        sol.stats.iis_time_ms += iis_clock.elapsed_ms();
        return finish(Status::kTimeout);
      }
      sol.stats.iis_time_ms += iis_clock.elapsed_ms();
    }
    ++sol.stats.cuts;
  }
}

inline Solution solve_naive(const Instance& inst, const NaiveOptions& opts = {}) {
  return solve_naive_traced(inst, opts).solution;
}

}  // namespace mindouble
