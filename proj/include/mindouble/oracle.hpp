#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "order.hpp"
#include "solution.hpp"

namespace mindouble {

inline constexpr int kDefaultOracleCap = 12;

class OracleCapExceeded : public std::invalid_argument {
 public:
  OracleCapExceeded(int n, int cap)
      : std::invalid_argument("oracle limited to n <= " + std::to_string(cap) +
                              ", instance has n=" + std::to_string(n)) {}
};

struct ParetoPoint {
  NodeCount nodes_obj = 0;
  int doubles_obj = 0;
  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
  friend auto operator<=>(const ParetoPoint&, const ParetoPoint&) = default;
};

inline bool dominates(const ParetoPoint& a, const ParetoPoint& b) {
  return a.nodes_obj <= b.nodes_obj && a.doubles_obj <= b.doubles_obj && !(a == b);
}

namespace detail {

// Depth-first over ranks in increasing vertex order, so valid orders come out
// lexicographically. A prefix that already breaks the clique or predecessor
// rule is never extended. With ascending_clique set, only orders whose first
// K+1 entries increase are produced; every other valid order is a permutation
// of that prefix and has identical counts.
class OrderEnumerator {
 public:
  using Visit = std::function<void(const std::vector<int>& perm, int doubles,
                                   NodeCount nodes)>;

  OrderEnumerator(const Instance& inst, bool ascending_clique)
      : inst_(inst),
        n_(inst.n()),
        k_(inst.dimension()),
        ascending_clique_(ascending_clique),
        preds_(n_, 0),
        placed_(n_, 0) {
    perm_.reserve(n_);
  }

  void run(const Visit& visit) {
    visit_ = &visit;
    descend(0, 0, 0, 1);
  }

 private:
  void descend(int r, int doubles, NodeCount total, NodeCount level) {
    if (r == n_) {
      (*visit_)(perm_, doubles, total);
      return;
    }
    int start = 0;
    if (ascending_clique_ && r > 0 && r <= k_) start = perm_.back() + 1;
    for (int v = start; v < n_; ++v) {
      if (placed_[v]) continue;
      int p = preds_[v];
      if (r <= k_ ? p != r : p < k_) continue;
      bool dbl = r >= k_ && p == k_;
      NodeCount here = r < k_ ? 1 : saturating_mul(level, dbl ? 2 : 1);
      place(v);
      descend(r + 1, doubles + (dbl ? 1 : 0), saturating_add(total, here),
              here);
      unplace(v);
    }
  }

  void place(int v) {
    placed_[v] = 1;
    perm_.push_back(v);
    for (int u : inst_.neighbors(v)) ++preds_[u];
  }
  void unplace(int v) {
    placed_[v] = 0;
    perm_.pop_back();
    for (int u : inst_.neighbors(v)) --preds_[u];
  }

  const Instance& inst_;
  int n_;
  int k_;
  bool ascending_clique_;
  std::vector<int> preds_;
  std::vector<char> placed_;
  std::vector<int> perm_;
  const Visit* visit_ = nullptr;
};

inline void check_cap(const Instance& inst, int cap) {
  if (inst.n() > cap) throw OracleCapExceeded(inst.n(), cap);
}

inline std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace detail

// Every valid order, lexicographic by perm.
inline void for_each_valid_order(
    const Instance& inst,
    const std::function<void(const VertexOrder&, int doubles, NodeCount nodes)>&
        visit,
    int cap = kDefaultOracleCap) {
  detail::check_cap(inst, cap);
  detail::OrderEnumerator e(inst, false);
  e.run([&](const std::vector<int>& perm, int d, NodeCount nodes) {
    visit(VertexOrder(perm), d, nodes);
  });
}

inline std::uint64_t count_valid_orders(const Instance& inst,
                                        int cap = kDefaultOracleCap) {
  detail::check_cap(inst, cap);
  std::uint64_t reduced = 0;
  detail::OrderEnumerator e(inst, true);
  e.run([&](const std::vector<int>&, int, NodeCount) { ++reduced; });
  return reduced * detail::factorial(inst.dimension() + 1);
}

struct OracleOptimum {
  std::uint64_t value = 0;
  VertexOrder order;  // lexicographically first optimal order
};

inline std::optional<OracleOptimum> brute_optimum(const Instance& inst,
                                                  Objective objective,
                                                  int cap = kDefaultOracleCap) {
  detail::check_cap(inst, cap);
  std::optional<OracleOptimum> best;
  std::vector<int> best_perm;
  // The lexicographically first optimum always has an increasing clique
  // prefix, so the reduced enumeration finds it.
  detail::OrderEnumerator e(inst, true);
  e.run([&](const std::vector<int>& perm, int d, NodeCount nodes) {
    std::uint64_t val = objective == Objective::kMinDouble
                            ? static_cast<std::uint64_t>(d)
                            : nodes;
    if (!best || val < best->value) {
      best.emplace();
      best->value = val;
      best_perm = perm;
    }
  });
  if (best) best->order = VertexOrder(best_perm);
  return best;
}

struct ObjectiveImage {
  std::uint64_t valid_orders = 0;
  std::set<ParetoPoint> image;
  std::set<ParetoPoint> pareto;
};

inline std::set<ParetoPoint> pareto_filter(const std::set<ParetoPoint>& pts) {
  std::set<ParetoPoint> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (dominates(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(p);
  }
  return out;
}

inline ObjectiveImage objective_image_and_pareto(const Instance& inst,
                                                 int cap = kDefaultOracleCap) {
  detail::check_cap(inst, cap);
  ObjectiveImage res;
  std::uint64_t reduced = 0;
  detail::OrderEnumerator e(inst, true);
  e.run([&](const std::vector<int>&, int d, NodeCount nodes) {
    ++reduced;
    res.image.insert({nodes, d});
  });
  res.valid_orders = reduced * detail::factorial(inst.dimension() + 1);
  res.pareto = pareto_filter(res.image);
  return res;
}

// Everything the test suites want from one enumeration pass: both optima,
// the image, and every optimal double pattern / order for min-double.
struct OracleSummary {
  bool feasible = false;
  std::uint64_t valid_orders = 0;
  int min_double = 0;
  NodeCount min_nodes = 0;
  std::set<ParetoPoint> image;
  std::set<ParetoPoint> pareto;
  std::vector<VertexOrder> double_optimal_orders;  // increasing clique prefix
};

inline OracleSummary oracle_summary(const Instance& inst,
                                    int cap = kDefaultOracleCap) {
  detail::check_cap(inst, cap);
  OracleSummary s;
  std::uint64_t reduced = 0;
  std::vector<std::vector<int>> best;
  detail::OrderEnumerator e(inst, true);
  e.run([&](const std::vector<int>& perm, int d, NodeCount nodes) {
    ++reduced;
    s.image.insert({nodes, d});
    if (!s.feasible || d < s.min_double) {
      s.feasible = true;
      s.min_double = d;
      best.clear();
    }
    if (d == s.min_double) best.push_back(perm);
  });
  s.valid_orders = reduced * detail::factorial(inst.dimension() + 1);
  s.pareto = pareto_filter(s.image);
  if (s.feasible) {
    s.min_nodes = s.image.begin()->nodes_obj;
    for (const auto& p : s.image) s.min_nodes = std::min(s.min_nodes, p.nodes_obj);
  }
  for (auto& p : best) s.double_optimal_orders.emplace_back(std::move(p));
  return s;
}

}  // namespace mindouble
