#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "order.hpp"
#include "presolve.hpp"
#include "solution.hpp"
#include "vertex_set.hpp"

namespace mindouble {

struct DfsOptions {
  double time_limit_s = 0.0;  // <= 0: unlimited
  bool use_presolve = true;
  bool warm_start = true;
};

namespace detail {

inline constexpr std::size_t kMemoLimit = std::size_t{1} << 21;
inline constexpr std::uint64_t kInfinity =
    std::numeric_limits<std::uint64_t>::max();

// Unplaced vertices that may go to rank p, in branching order: more placed
// neighbours first, then lower index. Inside the clique prefix the vertex
// must see every placed vertex and exceed the previous clique vertex.
inline void collect_candidates(const Instance& inst, int p,
                               const std::vector<int>& perm,
                               const std::vector<int>& preds,
                               const VertexSet& placed,
                               std::vector<int>& out) {
  const int k = inst.dimension();
  out.clear();
  if (p <= k) {
    int start = p == 0 ? 0 : perm[p - 1] + 1;
    for (int v = start; v < inst.n(); ++v) {
      if (!placed[v] && preds[v] == p) out.push_back(v);
    }
    return;
  }
  for (int v = 0; v < inst.n(); ++v) {
    if (!placed[v] && preds[v] >= k) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](int a, int b) { return preds[a] > preds[b]; });
}

class DfsSearch {
 public:
  DfsSearch(const Instance& inst, Objective objective,
            const PresolveResult& pre, Deadline& deadline)
      : inst_(inst),
        n_(inst.n()),
        k_(inst.dimension()),
        objective_(objective),
        deadline_(deadline),
        preds_(n_, 0),
        ybits_(n_, 0),
        fixed_zero_(n_, 0),
        fixed_one_(n_, 0),
        forced_after_(n_ + 1, 0) {
    for (int r : pre.fixed_zero) {
      if (r < n_) fixed_zero_[r] = 1;
    }
    for (int r : pre.fixed_one) {
      if (r < n_) fixed_one_[r] = 1;
    }
    for (int r = n_ - 1; r >= 0; --r) {
      forced_after_[r] = forced_after_[r + 1] + fixed_one_[r];
    }
    covers_ = pre.cover_inequalities;
    memo_from_ = k_ + 1;
    for (const auto& s : covers_) {
      for (int r : s) memo_from_ = std::max(memo_from_, r + 1);
    }
    perm_.reserve(n_);
  }

  void set_incumbent(const VertexOrder& ord, std::uint64_t value) {
    best_perm_ = ord.perm();
    incumbent_ = value;
  }

  void run() { descend(0, 0, 0, 1); }

  bool has_incumbent() const { return incumbent_ != kInfinity; }
  std::uint64_t incumbent() const { return incumbent_; }
  const std::vector<int>& best_perm() const { return best_perm_; }
  std::uint64_t choice_points() const { return choice_points_; }

 private:
  std::uint64_t future_bound(int next_rank, int doubles, NodeCount total,
                             NodeCount level) const {
    if (objective_ == Objective::kMinDouble) {
      std::uint64_t b = static_cast<std::uint64_t>(doubles) +
                        static_cast<std::uint64_t>(forced_after_[next_rank]);
      for (const auto& s : covers_) {
        if (s.front() >= next_rank) return b + 1;  // untouched cover
      }
      return b;
    }
    NodeCount sum = total;
    NodeCount lvl = level;
    for (int r = next_rank; r < n_; ++r) {
      if (r >= k_ && fixed_one_[r]) lvl = saturating_mul(lvl, 2);
      sum = saturating_add(sum, lvl);
    }
    return sum;
  }

  bool covers_ok(int rank) const {
    for (const auto& s : covers_) {
      if (s.back() != rank) continue;
      bool hit = false;
      for (int r : s) hit = hit || ybits_[r] == 1;
      if (!hit) return false;
    }
    return true;
  }

  // Lower bound on the cost still to come from placed set `placed_`, kept
  // as a plain count for min-double and as a multiple of the current level
  // for min-nodes.
  bool memo_prunes(int doubles, NodeCount total, NodeCount level) const {
    auto it = memo_.find(placed_);
    if (it == memo_.end()) return false;
    if (it->second == kInfinity) return true;
    std::uint64_t bound =
        objective_ == Objective::kMinDouble
            ? doubles + it->second
            : saturating_add(total, saturating_mul(level, it->second));
    return bound >= incumbent_;
  }

  void memo_store(int doubles, NodeCount total, NodeCount level) {
    if (deadline_.hit()) return;
    std::uint64_t lb;
    if (incumbent_ == kInfinity) {
      lb = kInfinity;
    } else if (objective_ == Objective::kMinDouble) {
      lb = incumbent_ - static_cast<std::uint64_t>(doubles);
    } else {
      std::uint64_t gap = incumbent_ > total ? incumbent_ - total : 0;
      lb = (gap + level - 1) / level;
    }
    auto it = memo_.find(placed_);
    if (it != memo_.end()) {
      it->second = std::max(it->second, lb);
    } else if (memo_.size() < kMemoLimit) {
      memo_.emplace(placed_, lb);
    }
  }

  // p = next rank to fill; `level` is nodes(p-1) (1 before the first double).
  void descend(int p, int doubles, NodeCount total, NodeCount level) {
    if (deadline_.expired()) return;
    if (p == n_) {
      std::uint64_t value = objective_ == Objective::kMinDouble
                                ? static_cast<std::uint64_t>(doubles)
                                : total;
      if (value < incumbent_) {
        incumbent_ = value;
        best_perm_ = perm_;
      }
      return;
    }
    std::vector<int> cands;
    collect_candidates(inst_, p, perm_, preds_, placed_, cands);
    for (int v : cands) {
      bool dbl = p >= k_ && preds_[v] == k_;
      if (dbl && fixed_zero_[p]) continue;
      if (!dbl && fixed_one_[p]) continue;
      NodeCount here = p < k_ ? 1 : saturating_mul(level, dbl ? 2 : 1);
      int nd = doubles + (dbl ? 1 : 0);
      NodeCount nt = saturating_add(total, here);
      ybits_[p] = dbl ? 1 : 0;
      if (!covers_ok(p)) continue;
      if (future_bound(p + 1, nd, nt, here) >= incumbent_) continue;
      ++choice_points_;
      place(v);
      bool memo = p + 1 >= memo_from_ && p + 1 < n_;
      if (!(memo && memo_prunes(nd, nt, here))) {
        descend(p + 1, nd, nt, here);
        if (memo) memo_store(nd, nt, here);
      }
      unplace(v);
      if (deadline_.hit()) return;
    }
    ybits_[p] = 0;
  }

  void place(int v) {
    placed_.set(v);
    perm_.push_back(v);
    for (int u : inst_.neighbors(v)) ++preds_[u];
  }
  void unplace(int v) {
    placed_.reset(v);
    perm_.pop_back();
    for (int u : inst_.neighbors(v)) --preds_[u];
  }

  const Instance& inst_;
  int n_;
  int k_;
  Objective objective_;
  Deadline& deadline_;
  std::vector<int> preds_;
  std::vector<int> ybits_;
  std::vector<char> fixed_zero_;
  std::vector<char> fixed_one_;
  std::vector<int> forced_after_;
  std::vector<std::vector<int>> covers_;
  int memo_from_ = 0;
  VertexSet placed_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  std::uint64_t incumbent_ = kInfinity;
  std::uint64_t choice_points_ = 0;
  std::unordered_map<VertexSet, std::uint64_t> memo_;
};

}  // namespace detail

inline Solution solve_dfs(const Instance& inst, Objective objective,
                          const DfsOptions& opts = {}) {
  require_solver_size(inst.n(), "dfs solver");
  Stopwatch clock;
  Deadline deadline(opts.time_limit_s);
  PresolveResult pre =
      opts.use_presolve ? presolve(inst) : base_fixings(inst);

  detail::DfsSearch search(inst, objective, pre, deadline);
  if (opts.warm_start) {
    if (auto g = greedy_dvop(inst)) {
      search.set_incumbent(g->first, objective_of(g->second, objective));
    }
  }
  search.run();

  Solution sol;
  sol.objective_kind = objective;
  sol.stats.choice_points = search.choice_points();
  if (search.has_incumbent()) {
    sol.order = VertexOrder(search.best_perm());
    OrderReport rep = check_order(inst, *sol.order);
    sol.doubles = rep.doubles;
    sol.objective = objective_of(rep, objective);
  }
  if (deadline.hit()) {
    sol.status = Status::kTimeout;
  } else {
    sol.status = sol.order ? Status::kOptimal : Status::kInfeasible;
  }
  sol.stats.time_ms = clock.elapsed_ms();
  return sol;
}

enum class SearchOutcome { kFound, kExhausted, kTimeout };

struct ThresholdResult {
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::optional<VertexOrder> order;
};

// Feasibility: the first K+1 ranks form a clique and the vertex at each rank
// r > K has at least min_preds[r] placed neighbours. Subsets proven dead are
// remembered; whether a subset can be completed depends only on the subset.
inline ThresholdResult threshold_search(const Instance& inst,
                                        const std::vector<int>& min_preds,
                                        Deadline& deadline,
                                        std::uint64_t* choice_points = nullptr) {
  require_solver_size(inst.n(), "threshold search");
  const int n = inst.n();
  const int k = inst.dimension();
  std::vector<int> preds(n, 0);
  std::vector<int> perm;
  perm.reserve(n);
  VertexSet placed;
  std::unordered_set<VertexSet> dead;
  std::uint64_t cp = 0;

  auto descend = [&](auto&& self, int p) -> bool {
    if (p == n) return true;
    if (deadline.expired()) return false;
    std::vector<int> cands;
    detail::collect_candidates(inst, p, perm, preds, placed, cands);
    for (int v : cands) {
      if (p > k && preds[v] < min_preds[p]) continue;
      ++cp;
      placed.set(v);
      perm.push_back(v);
      for (int u : inst.neighbors(v)) ++preds[u];
      bool ok = false;
      if (p + 1 <= k || !dead.count(placed)) {
        ok = self(self, p + 1);
        if (!ok && p + 1 > k && !deadline.hit() &&
            dead.size() < detail::kMemoLimit) {
          dead.insert(placed);
        }
      }
      if (ok) return true;
      for (int u : inst.neighbors(v)) --preds[u];
      perm.pop_back();
      placed.reset(v);
      if (deadline.hit()) return false;
    }
    return false;
  };

  ThresholdResult res;
  bool found = descend(descend, 0);
  if (choice_points) *choice_points += cp;
  if (found) {
    res.outcome = SearchOutcome::kFound;
    res.order = VertexOrder(perm);
  } else {
    res.outcome = deadline.hit() ? SearchOutcome::kTimeout
                                 : SearchOutcome::kExhausted;
  }
  return res;
}

enum class Formulation { kIp, kCpRank, kCpVertex, kCpCombined };

namespace detail {

// sum over u in N(v) of [rank(u) < r]
inline int preds_before(const Instance& inst, const VertexOrder& ord, int v,
                        int r) {
  int c = 0;
  for (int u : inst.neighbors(v)) c += ord.rank_of(u) < r ? 1 : 0;
  return c;
}

inline bool fixed_bits_ok(const DoublePattern& d, int k) {
  for (int r = 0; r < k; ++r) {
    if (d.bits[r] != 0) return false;
  }
  return d.bits[k] == 1;
}

inline bool all_binary(const DoublePattern& d) {
  for (int b : d.bits) {
    if (b != 0 && b != 1) return false;
  }
  return true;
}

inline bool ip_feasible(const Instance& inst, const VertexOrder& ord,
                        const DoublePattern& d) {
  const int n = inst.n();
  const int k = inst.dimension();
  // x_{vr} = [ord.at(r) == v]; z_{vr} = x_{vr} (1 - y_r) is the smallest
  // value the x - y <= z rows allow, so it is the one to test.
  for (int v = 0; v < n; ++v) {
    int rv = ord.rank_of(v);
    for (int r = 1; r <= k; ++r) {
      int x = rv == r ? 1 : 0;
      if (preds_before(inst, ord, v, r) < r * x) return false;
    }
    for (int r = k + 1; r < n; ++r) {
      int x = rv == r ? 1 : 0;
      if (preds_before(inst, ord, v, r) < k * x) return false;
    }
    for (int r = k; r < n; ++r) {
      int x = rv == r ? 1 : 0;
      int z = x * (1 - d.bits[r]);
      if (x - d.bits[r] > z) return false;
      if (preds_before(inst, ord, v, r) < (k + 1) * z) return false;
    }
  }
  return true;
}

inline bool rank_clique_ok(const Instance& inst, const VertexOrder& ord) {
  const int k = inst.dimension();
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = i + 1; j < inst.n(); ++j) {
      if (inst.adjacent(i, j)) continue;
      if (!(ord.rank_of(i) >= k + 1 || ord.rank_of(j) >= k + 1)) return false;
    }
  }
  return true;
}

inline bool vertex_clique_ok(const Instance& inst, const VertexOrder& ord) {
  const int k = inst.dimension();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (!inst.adjacent(ord.at(i), ord.at(j))) return false;
    }
  }
  return true;
}

}  // namespace detail

// Does (order, doubles) satisfy every constraint of the chosen model? The
// rank-indexed pattern is read as y_r directly, or as y_v = y_{rank(v)} for
// the vertex-indexed rank model.
inline bool validate_formulation(const Instance& inst, const VertexOrder& ord,
                                 const DoublePattern& d, Formulation model) {
  const int n = inst.n();
  const int k = inst.dimension();
  if (ord.size() != n || d.size() != n) return false;
  if (!detail::all_binary(d) || !detail::fixed_bits_ok(d, k)) return false;

  switch (model) {
    case Formulation::kIp:
      return detail::ip_feasible(inst, ord, d);
    case Formulation::kCpRank: {
      if (!detail::rank_clique_ok(inst, ord)) return false;
      for (int v = 0; v < n; ++v) {
        int rv = ord.rank_of(v);
        if (rv < k + 1) continue;
        int yv = d.bits[rv];
        if (detail::preds_before(inst, ord, v, rv) < k + (1 - yv)) return false;
      }
      return true;
    }
    case Formulation::kCpVertex: {
      if (!detail::vertex_clique_ok(inst, ord)) return false;
      for (int r = k + 1; r < n; ++r) {
        int v = ord.at(r);
        if (detail::preds_before(inst, ord, v, r) < k + (1 - d.bits[r])) {
          return false;
        }
      }
      return true;
    }
    case Formulation::kCpCombined: {
      // inverse(v, r) holds by construction of VertexOrder.
      if (!detail::vertex_clique_ok(inst, ord)) return false;
      if (!detail::rank_clique_ok(inst, ord)) return false;
      for (int r = k + 1; r < n; ++r) {
        int v = ord.at(r);
        if (detail::preds_before(inst, ord, v, r) < k + (1 - d.bits[r])) {
          return false;
        }
      }
      for (int v = 0; v < n; ++v) {
        int rv = ord.rank_of(v);
        if (rv >= k + 1 && detail::preds_before(inst, ord, v, rv) < k) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

inline const char* to_string(Formulation f) {
  switch (f) {
    case Formulation::kIp: return "IP";
    case Formulation::kCpRank: return "CP-RANK";
    case Formulation::kCpVertex: return "CP-VERTEX";
    case Formulation::kCpCombined: return "CP-COMBINED";
  }
  return "?";
}

}  // namespace mindouble
