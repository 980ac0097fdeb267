#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "naive_decomp.hpp"
#include "order.hpp"
#include "presolve.hpp"
#include "solution.hpp"
#include "vertex_set.hpp"

namespace mindouble {

// Witness arc (v, u): u witnesses v, i.e. w_{vu} = 1.
struct WitnessArc {
  int v = 0;
  int u = 0;
  friend bool operator==(const WitnessArc&, const WitnessArc&) = default;
  friend auto operator<=>(const WitnessArc&, const WitnessArc&) = default;
};

struct WitnessState {
  std::vector<int> clique;                  // sorted, K+1 vertices
  std::vector<std::vector<int>> witnesses;  // witnesses[v], sorted
  std::vector<int> doubles;                 // y_v

  bool in_clique(int v) const {
    return std::binary_search(clique.begin(), clique.end(), v);
  }
  bool has_arc(int v, int u) const {
    return std::binary_search(witnesses[v].begin(), witnesses[v].end(), u);
  }
  int objective() const {
    int s = 1;
    for (int y : doubles) s += y;
    return s;
  }
  std::vector<WitnessArc> arcs() const {
    std::vector<WitnessArc> out;
    for (int v = 0; v < static_cast<int>(witnesses.size()); ++v) {
      for (int u : witnesses[v]) out.push_back({v, u});
    }
    return out;
  }
  friend bool operator==(const WitnessState&, const WitnessState&) = default;
  friend auto operator<=>(const WitnessState&, const WitnessState&) = default;
};

// Empty string when the state meets the master constraints, otherwise the
// first violation found.
inline std::string check_state_invariants(const Instance& inst,
                                          const WitnessState& s) {
  const int n = inst.n();
  const int k = inst.dimension();
  if (static_cast<int>(s.witnesses.size()) != n ||
      static_cast<int>(s.doubles.size()) != n) {
    return "state has wrong shape";
  }
  if (static_cast<int>(s.clique.size()) != k + 1) return "clique size != K+1";
  if (!std::is_sorted(s.clique.begin(), s.clique.end())) {
    return "clique not sorted";
  }
  for (int v : s.clique) {
    if (v < 0 || v >= n) return "clique vertex out of range";
  }
  if (!is_clique(inst, s.clique)) return "clique members not pairwise adjacent";
  for (int v = 0; v < n; ++v) {
    if (s.doubles[v] != 0 && s.doubles[v] != 1) return "y not binary";
    const auto& w = s.witnesses[v];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!inst.adjacent(v, w[i])) {
        return "vertex " + std::to_string(v) + " witnessed by non-neighbour";
      }
      if (i && w[i - 1] >= w[i]) return "witness list not strictly sorted";
    }
    int kappa = s.in_clique(v) ? 1 : 0;
    int need = (k + 1) * (1 - kappa) - s.doubles[v] + k * kappa;
    if (static_cast<int>(w.size()) != need) {
      return "vertex " + std::to_string(v) + " has " +
             std::to_string(w.size()) + " witnesses, needs " +
             std::to_string(need);
    }
    if (kappa && s.doubles[v]) {
      return "clique vertex " + std::to_string(v) + " marked double";
    }
  }
  for (int c : s.clique) {
    for (int u : inst.neighbors(c)) {
      if (!s.has_arc(u, c)) {
        return "clique vertex " + std::to_string(c) + " does not witness " +
               std::to_string(u);
      }
    }
  }
  return {};
}

// Clique = first K+1 ranks; witnesses = clique vertices witness each other,
// every other vertex takes its first K or K+1 adjacent predecessors by rank.
inline WitnessState induced_state(const Instance& inst, const VertexOrder& ord) {
  const int n = inst.n();
  const int k = inst.dimension();
  OrderReport rep = check_order(inst, ord);
  if (!rep.is_dvop) throw std::invalid_argument("order is not a DVOP order");
  WitnessState s;
  s.witnesses.assign(n, {});
  s.doubles.assign(n, 0);
  for (int r = 0; r <= k; ++r) s.clique.push_back(ord.at(r));
  std::sort(s.clique.begin(), s.clique.end());
  for (int r = 0; r < n; ++r) {
    int v = ord.at(r);
    std::vector<std::pair<int, int>> preds;  // (rank, vertex)
    for (int u : inst.neighbors(v)) {
      if (ord.rank_of(u) < r) preds.push_back({ord.rank_of(u), u});
    }
    std::sort(preds.begin(), preds.end());
    int take;
    if (r <= k) {
      take = k;  // the other clique members; r of them precede, the rest follow
      for (int c : s.clique) {
        if (c != v) s.witnesses[v].push_back(c);
      }
    } else {
      int y = rep.doubles.bits[r];
      s.doubles[v] = y;
      take = k + 1 - y;
      for (int i = 0; i < take; ++i) s.witnesses[v].push_back(preds[i].second);
    }
    std::sort(s.witnesses[v].begin(), s.witnesses[v].end());
  }
  return s;
}

// sum_{(v,u) in arcs} w_{vu} <= |V^C| - 1 + [|V^C| <= K+1] kappa_iota
struct CycleCut {
  std::vector<WitnessArc> arcs;
  int lift_vertex = 0;
  bool lifted = false;

  int size() const { return static_cast<int>(arcs.size()); }

  int lhs(const WitnessState& s) const {
    int c = 0;
    for (const auto& a : arcs) c += s.has_arc(a.v, a.u) ? 1 : 0;
    return c;
  }
  int rhs(const WitnessState& s) const {
    return size() - 1 + (lifted && s.in_clique(lift_vertex) ? 1 : 0);
  }
  bool satisfied_by(const WitnessState& s) const { return lhs(s) <= rhs(s); }

  friend bool operator==(const CycleCut&, const CycleCut&) = default;
};

// `cycle` lists witness arcs (v, u) around a simple directed cycle.
inline CycleCut make_cycle_cut(const std::vector<WitnessArc>& cycle,
                               int dimension) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& next = cycle[(i + 1) % cycle.size()];
    if (cycle[i].u != next.v) throw std::invalid_argument("arcs do not chain");
  }
  std::set<int> verts;
  for (const auto& a : cycle) verts.insert(a.v);
  if (verts.size() != cycle.size()) {
    throw std::invalid_argument("cycle is not simple");
  }
  CycleCut cut;
  cut.arcs = cycle;
  cut.lift_vertex = *verts.begin();
  cut.lifted = static_cast<int>(verts.size()) <= dimension + 1;
  return cut;
}

inline std::vector<int> cycle_vertices(const CycleCut& c) {
  std::vector<int> out;
  for (const auto& a : c.arcs) out.push_back(a.v);
  std::sort(out.begin(), out.end());
  return out;
}

struct Sp2Result {
  std::optional<VertexOrder> order;
  std::vector<std::vector<WitnessArc>> cycles;  // set when no order exists
};

namespace detail {

// Precedence digraph on the non-clique vertices: u -> v whenever u witnesses
// v and neither is in the clique.
inline std::vector<std::vector<int>> precedence_graph(const Instance& inst,
                                                      const WitnessState& s) {
  std::vector<std::vector<int>> succ(inst.n());
  for (int v = 0; v < inst.n(); ++v) {
    if (s.in_clique(v)) continue;
    for (int u : s.witnesses[v]) {
      if (!s.in_clique(u)) succ[u].push_back(v);
    }
  }
  for (auto& l : succ) std::sort(l.begin(), l.end());
  return succ;
}

// First back arc x -> y met by a DFS started from vertices in index order,
// closed by a BFS shortest path y ~> x. Returned as witness arcs.
inline std::optional<std::vector<WitnessArc>> find_cycle(
    const std::vector<std::vector<int>>& succ, const std::vector<char>& active) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  int bx = -1, by = -1;
  std::function<bool(int)> dfs = [&](int x) {
    color[x] = 1;
    for (int y : succ[x]) {
      if (!active[y]) continue;
      if (color[y] == 1) {
        bx = x;
        by = y;
        return true;
      }
      if (color[y] == 0 && dfs(y)) return true;
    }
    color[x] = 2;
    return false;
  };
  bool found = false;
  for (int v = 0; v < n && !found; ++v) {
    if (active[v] && color[v] == 0) found = dfs(v);
  }
  if (!found) return std::nullopt;

  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(by);
  seen[by] = 1;
  while (!q.empty() && !seen[bx]) {
    int a = q.front();
    q.pop();
    for (int b : succ[a]) {
      if (active[b] && !seen[b]) {
        seen[b] = 1;
        parent[b] = a;
        q.push(b);
      }
    }
  }
  std::vector<int> path;  // by ... bx
  for (int c = bx; c != -1; c = parent[c]) path.push_back(c);
  std::reverse(path.begin(), path.end());
  // Precedence arc a -> b is witness arc (b, a).
  std::vector<WitnessArc> cyc;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    cyc.push_back({path[i + 1], path[i]});
  }
  cyc.push_back({by, bx});
  // Rotate so the smallest witnessed vertex leads; keeps output canonical.
  auto lead = std::min_element(cyc.begin(), cyc.end(),
                               [](const WitnessArc& a, const WitnessArc& b) {
                                 return a.v < b.v;
                               });
  std::rotate(cyc.begin(), lead, cyc.end());
  // Chain as (v0,u0),(u0,...): reverse orientation so arc i ends where arc
  // i+1 starts.
  std::vector<WitnessArc> chained;
  int start = cyc.front().v;
  int cur = start;
  do {
    auto it = std::find_if(cyc.begin(), cyc.end(),
                           [&](const WitnessArc& a) { return a.v == cur; });
    chained.push_back(*it);
    cur = it->u;
  } while (cur != start);
  return chained;
}

}  // namespace detail

// Sorted clique first, then the non-clique vertices in topological order of
// the precedence digraph, smallest index first among the ready ones.
inline Sp2Result sp2_check(const Instance& inst, const WitnessState& s,
                           bool all_disjoint_cycles = false) {
  std::string err = check_state_invariants(inst, s);
  if (!err.empty()) throw std::invalid_argument("invalid witness state: " + err);
  const int n = inst.n();
  auto succ = detail::precedence_graph(inst, s);
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : succ[u]) ++indeg[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v) {
    if (!s.in_clique(v) && indeg[v] == 0) ready.push(v);
  }
  std::vector<int> perm = s.clique;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    perm.push_back(u);
    for (int v : succ[u]) {
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  Sp2Result res;
  if (static_cast<int>(perm.size()) == n) {
    res.order = VertexOrder(std::move(perm));
    return res;
  }
  std::vector<char> active(n, 0);
  for (int v = 0; v < n; ++v) active[v] = s.in_clique(v) ? 0 : 1;
  while (auto cyc = detail::find_cycle(succ, active)) {
    for (const auto& a : *cyc) active[a.v] = 0;
    res.cycles.push_back(std::move(*cyc));
    if (!all_disjoint_cycles) break;
  }
  return res;
}

// Every constraint of the extended formulation: clique size and adjacency,
// clique witnessing, the witness-count linking rows, y_v <= 1 - kappa_v, a
// permutation with the clique in ranks 0..K, and witnesses before the
// vertices they witness outside the clique.
inline bool ef_validate(const Instance& inst, const WitnessState& s,
                        const VertexOrder& ord) {
  const int n = inst.n();
  const int k = inst.dimension();
  if (ord.size() != n) return false;
  if (!check_state_invariants(inst, s).empty()) return false;
  for (int v = 0; v < n; ++v) {
    bool kv = s.in_clique(v);
    if (kv && s.doubles[v] > 0) return false;
    if (kv && ord.rank_of(v) > k) return false;
    if (kv) continue;
    for (int u : s.witnesses[v]) {
      if (!s.in_clique(u) && ord.rank_of(u) >= ord.rank_of(v)) return false;
    }
  }
  return true;
}

enum class PreBreak { kNone, kTwo, kTwoThree };

inline PreBreak parse_pre_break(const std::string& s) {
  if (s == "none") return PreBreak::kNone;
  if (s == "2") return PreBreak::kTwo;
  if (s == "23") return PreBreak::kTwoThree;
  throw std::invalid_argument("pre-break must be none, 2 or 23");
}

// Cuts for every 2-cycle (each edge) and, optionally, every directed
// 3-cycle (each triangle in both orientations) of the arc digraph.
inline std::vector<CycleCut> short_cycle_cuts(const Instance& inst,
                                              PreBreak mode) {
  std::vector<CycleCut> out;
  if (mode == PreBreak::kNone) return out;
  const int k = inst.dimension();
  for (const Edge& e : inst.edges()) {
    out.push_back(make_cycle_cut({{e.u, e.v}, {e.v, e.u}}, k));
  }
  if (mode == PreBreak::kTwoThree) {
    for (const Clique& t : enumerate_cliques(inst, 3)) {
      int a = t.members[0], b = t.members[1], c = t.members[2];
      out.push_back(make_cycle_cut({{a, b}, {b, c}, {c, a}}, k));
      out.push_back(make_cycle_cut({{a, c}, {c, b}, {b, a}}, k));
    }
  }
  return out;
}

struct Mp2Stats {
  std::uint64_t nodes = 0;
  int cliques_searched = 0;
};

namespace detail {

struct WitnessOption {
  int y = 0;
  std::vector<int> set;                 // full witness set, sorted
  std::vector<int> cut_hits;            // one entry per cut arc it selects
};

// Searches one fixed clique for the cheapest witness assignment strictly
// below `bound` that satisfies every cut.
class Mp2CliqueSearch {
 public:
  Mp2CliqueSearch(const Instance& inst, const std::vector<CycleCut>& cuts,
                  const std::vector<int>& clique, Deadline& deadline,
                  Mp2Stats& stats)
      : inst_(inst),
        cuts_(cuts),
        clique_(clique),
        deadline_(deadline),
        stats_(stats),
        n_(inst.n()),
        k_(inst.dimension()),
        in_clique_(n_, 0) {
    for (int c : clique_) in_clique_[c] = 1;
  }

  // Returns false when the clique cannot satisfy some cut whatever the
  // witness choice, or a vertex has no admissible witness set.
  bool prepare() {
    const int m = static_cast<int>(cuts_.size());
    count_.assign(m, 0);
    rhs_.assign(m, 0);
    // arc_cuts[v] maps a free neighbour u of v to the cuts containing (v,u).
    std::vector<std::vector<std::pair<int, int>>> arc_cuts(n_);
    for (int i = 0; i < m; ++i) {
      const CycleCut& c = cuts_[i];
      rhs_[i] = c.size() - 1 + (c.lifted && in_clique_[c.lift_vertex] ? 1 : 0);
      for (const auto& a : c.arcs) {
        if (in_clique_[a.v]) {
          count_[i] += in_clique_[a.u] ? 1 : 0;
        } else if (in_clique_[a.u]) {
          count_[i] += 1;
        } else {
          arc_cuts[a.v].push_back({a.u, i});
        }
      }
      if (count_[i] > rhs_[i]) return false;
    }

    for (int v = 0; v < n_; ++v) {
      if (!in_clique_[v]) free_.push_back(v);
    }
    std::vector<int> clique_deg(n_, 0);
    for (int v : free_) {
      for (int u : inst_.neighbors(v)) clique_deg[v] += in_clique_[u];
    }
    std::stable_sort(free_.begin(), free_.end(), [&](int a, int b) {
      return clique_deg[a] > clique_deg[b];
    });

    options_.assign(n_, {});
    for (int v : free_) {
      std::vector<int> fixed, relevant, plain;
      std::set<int> rel_set;
      for (const auto& [u, ci] : arc_cuts[v]) rel_set.insert(u);
      for (int u : inst_.neighbors(v)) {
        if (in_clique_[u]) {
          fixed.push_back(u);
        } else if (rel_set.count(u)) {
          relevant.push_back(u);
        } else {
          plain.push_back(u);
        }
      }
      for (int y = 0; y <= 1; ++y) {
        int need = k_ + 1 - y - static_cast<int>(fixed.size());
        if (need < 0) continue;
        add_options(v, y, need, fixed, relevant, plain, arc_cuts[v]);
      }
      if (options_[v].empty()) return false;
    }

    forced_after_.assign(free_.size() + 1, 0);
    for (int i = static_cast<int>(free_.size()) - 1; i >= 0; --i) {
      bool must_double = options_[free_[i]].front().y == 1;
      forced_after_[i] = forced_after_[i + 1] + (must_double ? 1 : 0);
    }
    return true;
  }

  // Best total (sum of y, without the +1) strictly below bound, if any.
  std::optional<WitnessState> run(int bound) {
    bound_ = bound;
    chosen_.assign(n_, -1);
    descend(0, 0);
    return best_;
  }

  int bound() const { return bound_; }

 private:
  void add_options(int v, int y, int need, const std::vector<int>& fixed,
                   const std::vector<int>& relevant,
                   const std::vector<int>& plain,
                   const std::vector<std::pair<int, int>>& arc_cuts) {
    // Choose s relevant neighbours; the rest come from the lowest-index
    // plain neighbours. Only the relevant part can touch a cut, so each
    // subset is one equivalence class.
    const int r = static_cast<int>(relevant.size());
    const int p = static_cast<int>(plain.size());
    std::vector<WitnessOption> opts;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      int s = static_cast<int>(pick.size());
      if (need - s <= p) {
        WitnessOption o;
        o.y = y;
        o.set = fixed;
        for (int idx : pick) o.set.push_back(relevant[idx]);
        for (int i = 0; i < need - s; ++i) o.set.push_back(plain[i]);
        std::sort(o.set.begin(), o.set.end());
        for (int idx : pick) {
          for (const auto& [u, ci] : arc_cuts) {
            if (u == relevant[idx]) o.cut_hits.push_back(ci);
          }
        }
        opts.push_back(std::move(o));
      }
      if (s == need) return;
      for (int i = from; i < r; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    std::sort(opts.begin(), opts.end(),
              [](const WitnessOption& a, const WitnessOption& b) {
                return a.set < b.set;
              });
    for (auto& o : opts) options_[v].push_back(std::move(o));
  }

  void descend(std::size_t i, int ysum) {
    if (deadline_.expired()) return;
    if (ysum + forced_after_[i] >= bound_) return;
    if (i == free_.size()) {
      record(ysum);
      return;
    }
    int v = free_[i];
    for (std::size_t oi = 0; oi < options_[v].size(); ++oi) {
      const WitnessOption& o = options_[v][oi];
      if (ysum + o.y + forced_after_[i + 1] >= bound_) continue;
      bool ok = true;
      std::size_t applied = 0;
      for (; applied < o.cut_hits.size(); ++applied) {
        int ci = o.cut_hits[applied];
        if (++count_[ci] > rhs_[ci]) {
          ok = false;
          ++applied;
          break;
        }
      }
      ++stats_.nodes;
      if (ok) {
        chosen_[v] = static_cast<int>(oi);
        descend(i + 1, ysum + o.y);
        chosen_[v] = -1;
      }
      for (std::size_t j = 0; j < applied; ++j) --count_[o.cut_hits[j]];
      if (deadline_.hit()) return;
    }
  }

  void record(int ysum) {
    WitnessState s;
    s.clique = clique_;
    s.witnesses.assign(n_, {});
    s.doubles.assign(n_, 0);
    for (int c : clique_) {
      for (int d : clique_) {
        if (d != c) s.witnesses[c].push_back(d);
      }
    }
    for (int v : free_) {
      const WitnessOption& o = options_[v][chosen_[v]];
      s.witnesses[v] = o.set;
      s.doubles[v] = o.y;
    }
    best_ = std::move(s);
    bound_ = ysum;
  }

  const Instance& inst_;
  const std::vector<CycleCut>& cuts_;
  std::vector<int> clique_;
  Deadline& deadline_;
  Mp2Stats& stats_;
  int n_;
  int k_;
  std::vector<char> in_clique_;
  std::vector<int> free_;
  std::vector<std::vector<WitnessOption>> options_;
  std::vector<int> forced_after_;
  std::vector<int> count_;
  std::vector<int> rhs_;
  std::vector<int> chosen_;
  int bound_ = 0;
  std::optional<WitnessState> best_;
};

}  // namespace detail

// (K+1)-cliques from which the greedy completes an order, best greedy
// double count first, then lexicographic. A clique from which the greedy gets
// stuck starts no DVOP order at all, so it is left out.
inline std::vector<std::vector<int>> mp2_clique_order(const Instance& inst) {
  std::vector<std::pair<int, std::vector<int>>> scored;
  for_each_clique(inst, inst.dimension() + 1, [&](const Clique& c) {
    if (auto ord = greedy_from_clique(inst, c.members)) {
      scored.push_back({check_order(inst, *ord).double_count, c.members});
    }
    return true;
  });
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> out;
  for (auto& p : scored) out.push_back(std::move(p.second));
  return out;
}

// Cheapest master solution with objective (sum y + 1) strictly below
// `objective_bound`; nullopt when there is none.
inline std::optional<WitnessState> mp2_solve(
    const Instance& inst, const std::vector<CycleCut>& cuts,
    std::uint64_t objective_bound, const std::vector<std::vector<int>>& cliques,
    Deadline& deadline, Mp2Stats* stats = nullptr) {
  Mp2Stats local;
  Mp2Stats& st = stats ? *stats : local;
  std::uint64_t cap = std::min<std::uint64_t>(objective_bound,
                                              static_cast<std::uint64_t>(inst.n()) + 2);
  int bound = static_cast<int>(cap) - 1;  // on sum y
  std::optional<WitnessState> best;
  for (const auto& c : cliques) {
    if (deadline.expired()) break;
    if (bound <= 0) break;
    detail::Mp2CliqueSearch search(inst, cuts, c, deadline, st);
    ++st.cliques_searched;
    if (!search.prepare()) continue;
    if (auto s = search.run(bound)) {
      bound = search.bound();
      best = std::move(s);
    }
  }
  return best;
}

inline std::optional<WitnessState> mp2_solve(
    const Instance& inst, const std::vector<CycleCut>& cuts,
    std::uint64_t objective_bound = std::numeric_limits<std::uint64_t>::max()) {
  Deadline none;
  return mp2_solve(inst, cuts, objective_bound, mp2_clique_order(inst), none);
}

struct WitnessOptions {
  double time_limit_s = 0.0;
  PreBreak pre_break = PreBreak::kNone;
  bool use_presolve = true;
  bool separate_all = false;  // one cut per vertex-disjoint cycle
  bool warm_start = true;
};

struct WitnessIteration {
  WitnessState state;
  std::vector<CycleCut> cuts;  // empty on the accepting iteration
};

struct WitnessOutcome {
  Solution solution;
  std::vector<CycleCut> seed_cuts;
  std::vector<WitnessIteration> trace;
  std::optional<WitnessState> accepted;
};

inline WitnessOutcome solve_witness_traced(const Instance& inst,
                                           const WitnessOptions& opts = {}) {
  require_solver_size(inst.n(), "witness decomposition");
  Stopwatch clock;
  Deadline deadline(opts.time_limit_s);
  WitnessOutcome out;
  Solution& sol = out.solution;
  sol.objective_kind = Objective::kMinDouble;

  auto finish = [&](Status s) {
    sol.status = s;
    sol.stats.time_ms = clock.elapsed_ms();
    return out;
  };
  auto adopt = [&](const VertexOrder& ord) {
    OrderReport rep = check_order(inst, ord);
    sol.order = ord;
    sol.doubles = rep.doubles;
    sol.objective = static_cast<std::uint64_t>(rep.double_count);
  };

  std::vector<std::vector<int>> cliques = mp2_clique_order(inst);
  if (cliques.empty()) return finish(Status::kInfeasible);

  std::uint64_t incumbent = std::numeric_limits<std::uint64_t>::max();
  if (opts.warm_start) {
    if (auto g = greedy_dvop(inst)) {
      adopt(g->first);
      incumbent = sol.objective;
    }
  }
  // Rank presolve gives a lower bound; reaching it ends the search early.
  std::uint64_t lower = 1;
  if (opts.use_presolve) {
    if (auto p = mp1_solve(inst.n(), inst.dimension(), presolve(inst), {})) {
      lower = static_cast<std::uint64_t>(p->count());
    }
  }

  std::vector<CycleCut> cuts = short_cycle_cuts(inst, opts.pre_break);
  out.seed_cuts = cuts;
  std::set<std::vector<int>> seen_cliques;
  while (true) {
    if (sol.order && incumbent <= lower) return finish(Status::kOptimal);
    if (deadline.expired()) return finish(Status::kTimeout);
    ++sol.stats.iterations;
    Mp2Stats st;
    auto state = mp2_solve(inst, cuts, incumbent, cliques, deadline, &st);
    sol.stats.choice_points += st.nodes;
    if (deadline.hit()) return finish(Status::kTimeout);
    if (!state) {
      return finish(sol.order ? Status::kOptimal : Status::kInfeasible);
    }
    if (seen_cliques.insert(state->clique).second) {
      ++sol.stats.cliques_considered;
    }
    Sp2Result sub = sp2_check(inst, *state, opts.separate_all);
    WitnessIteration it;
    it.state = *state;
    if (sub.order) {
      adopt(*sub.order);
      out.accepted = *state;
      out.trace.push_back(std::move(it));
      return finish(Status::kOptimal);
    }
    for (const auto& cyc : sub.cycles) {
      CycleCut cut = make_cycle_cut(cyc, inst.dimension());
      it.cuts.push_back(cut);
      cuts.push_back(std::move(cut));
      ++sol.stats.cuts;
    }
    out.trace.push_back(std::move(it));
  }
}

inline Solution solve_witness(const Instance& inst,
                              const WitnessOptions& opts = {}) {
  return solve_witness_traced(inst, opts).solution;
}

}  // namespace mindouble
