#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace mindouble {

using NodeCount = std::uint64_t;

// Saturates instead of wrapping; node counts grow like 2^(n-K).
inline NodeCount saturating_add(NodeCount a, NodeCount b) {
  NodeCount max = std::numeric_limits<NodeCount>::max();
  return a > max - b ? max : a + b;
}

inline NodeCount saturating_mul(NodeCount a, NodeCount b) {
  NodeCount max = std::numeric_limits<NodeCount>::max();
  if (a != 0 && b > max / a) return max;
  return a * b;
}

class VertexOrder {
 public:
  VertexOrder() = default;

  explicit VertexOrder(std::vector<int> perm) : perm_(std::move(perm)) {
    int n = static_cast<int>(perm_.size());
    inverse_.assign(n, -1);
    for (int r = 0; r < n; ++r) {
      int v = perm_[r];
      if (v < 0 || v >= n || inverse_[v] != -1) {
        throw std::invalid_argument("not a permutation of 0.." +
                                    std::to_string(n - 1));
      }
      inverse_[v] = r;
    }
  }

  static VertexOrder identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return VertexOrder(std::move(p));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int at(int rank) const { return perm_[rank]; }      // v_r
  int rank_of(int v) const { return inverse_[v]; }    // r_v
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& inverse() const { return inverse_; }

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
    return a.perm_ == b.perm_;
  }
  friend bool operator<(const VertexOrder& a, const VertexOrder& b) {
    return a.perm_ < b.perm_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> inverse_;
};

struct DoublePattern {
  std::vector<int> bits;  // bits[r] in {0,1}

  DoublePattern() = default;
  explicit DoublePattern(std::vector<int> b) : bits(std::move(b)) {}

  int size() const { return static_cast<int>(bits.size()); }
  int count() const {
    int c = 0;
    for (int b : bits) c += b;
    return c;
  }
  friend bool operator==(const DoublePattern&, const DoublePattern&) = default;
  friend auto operator<=>(const DoublePattern&, const DoublePattern&) = default;
};

struct OrderReport {
  bool is_dvop = false;
  DoublePattern doubles;
  int double_count = 0;
  std::vector<NodeCount> node_counts;
  NodeCount total_nodes = 0;
  std::vector<int> pred_counts;  // adjacent predecessors of the vertex at rank r
};

// nodes(r) = 1 for r < K, (y_r + 1) * nodes(r-1) otherwise.
inline std::vector<NodeCount> node_counts_from_pattern(const DoublePattern& d,
                                                       int dimension) {
  std::vector<NodeCount> out(d.size(), 1);
  for (int r = dimension; r < d.size(); ++r) {
    NodeCount prev = r > 0 ? out[r - 1] : 1;
    out[r] = saturating_mul(prev, static_cast<NodeCount>(d.bits[r] + 1));
  }
  return out;
}

inline NodeCount total_nodes_from_pattern(const DoublePattern& d,
                                          int dimension) {
  NodeCount total = 0;
  for (NodeCount c : node_counts_from_pattern(d, dimension)) {
    total = saturating_add(total, c);
  }
  return total;
}

// Counts are filled in even when the permutation is not a DVOP order; callers
// must look at is_dvop before trusting them.
inline OrderReport check_order(const Instance& inst, const VertexOrder& ord) {
  int n = inst.n();
  int k = inst.dimension();
  if (ord.size() != n) {
    throw std::invalid_argument("order length " + std::to_string(ord.size()) +
                                " does not match n=" + std::to_string(n));
  }
  OrderReport rep;
  rep.pred_counts.assign(n, 0);
  rep.doubles.bits.assign(n, 0);
  bool ok = true;
  for (int r = 0; r < n; ++r) {
    int v = ord.at(r);
    int preds = 0;
    for (int u : inst.neighbors(v)) {
      if (ord.rank_of(u) < r) ++preds;
    }
    rep.pred_counts[r] = preds;
    if (r <= k) {
      if (preds != r) ok = false;
    } else if (preds < k) {
      ok = false;
    }
    if (r >= k && preds == k) rep.doubles.bits[r] = 1;
  }
  rep.is_dvop = ok;
  rep.double_count = rep.doubles.count();
  rep.node_counts = node_counts_from_pattern(rep.doubles, k);
  for (NodeCount c : rep.node_counts) {
    rep.total_nodes = saturating_add(rep.total_nodes, c);
  }
  return rep;
}

// Extends a fixed starting clique greedily. Returns nullopt when some step
// finds no vertex with at least K placed neighbours.
inline std::optional<VertexOrder> greedy_from_clique(
    const Instance& inst, const std::vector<int>& clique) {
  int n = inst.n();
  int k = inst.dimension();
  std::vector<int> perm = clique;
  std::vector<int> preds(n, 0);
  std::vector<char> placed(n, 0);
  for (int v : clique) {
    placed[v] = 1;
    for (int u : inst.neighbors(v)) ++preds[u];
  }
  while (static_cast<int>(perm.size()) < n) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!placed[v] && (best < 0 || preds[v] > preds[best])) best = v;
    }
    if (preds[best] < k) return std::nullopt;
    placed[best] = 1;
    perm.push_back(best);
    for (int u : inst.neighbors(best)) ++preds[u];
  }
  return VertexOrder(std::move(perm));
}

inline std::optional<std::pair<VertexOrder, OrderReport>> greedy_dvop(
    const Instance& inst) {
  std::optional<std::pair<VertexOrder, OrderReport>> best;
  for_each_clique(inst, inst.dimension() + 1, [&](const Clique& c) {
    auto ord = greedy_from_clique(inst, c.members);
    if (ord) {
      OrderReport rep = check_order(inst, *ord);
      if (!best || rep.double_count < best->second.double_count) {
        best.emplace(std::move(*ord), std::move(rep));
      }
    }
    return true;
  });
  return best;
}

}  // namespace mindouble
