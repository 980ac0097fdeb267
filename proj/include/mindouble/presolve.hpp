#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "order.hpp"

namespace mindouble {

inline constexpr std::size_t kDefaultCliqueBudget = 100000;

// Rank-indexed fixings and covering inequalities sum_{r in S} y_r >= 1.
struct PresolveResult {
  std::set<int> fixed_zero;
  std::set<int> fixed_one;
  std::vector<std::vector<int>> cover_inequalities;
  bool head_skipped = false;
  bool infeasible = false;  // some rank is fixed both ways

  bool satisfied_by(const DoublePattern& d) const {
    for (int r : fixed_zero) {
      if (r < d.size() && d.bits[r] != 0) return false;
    }
    for (int r : fixed_one) {
      if (r < d.size() && d.bits[r] != 1) return false;
    }
    for (const auto& s : cover_inequalities) {
      bool hit = false;
      for (int r : s) hit = hit || (r < d.size() && d.bits[r] == 1);
      if (!hit) return false;
    }
    return true;
  }
};

inline PresolveResult base_fixings(const Instance& inst) {
  PresolveResult res;
  for (int r = 0; r < inst.dimension(); ++r) res.fixed_zero.insert(r);
  res.fixed_one.insert(inst.dimension());
  return res;
}

// y_{n-i} = 0 for i = 1..(m-K): the last m-K vertices see at least K+1 of
// their neighbours before them.
inline std::set<int> tail_fixings(const Instance& inst) {
  std::set<int> out;
  int m = min_degree(inst);
  for (int i = 1; i <= m - inst.dimension(); ++i) out.insert(inst.n() - i);
  return out;
}

namespace detail {

inline int count_adjacent_in(const Instance& inst, int v,
                             const std::vector<int>& set) {
  int c = 0;
  for (int u : set) c += inst.adjacent(u, v) ? 1 : 0;
  return c;
}

inline bool contains(const std::vector<int>& set, int v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

// Vertices outside `base` with at least K+1 neighbours inside it.
inline std::vector<int> extenders(const Instance& inst,
                                  const std::vector<int>& base) {
  std::vector<int> out;
  for (int v = 0; v < inst.n(); ++v) {
    if (!contains(base, v) &&
        count_adjacent_in(inst, v, base) >= inst.dimension() + 1) {
      out.push_back(v);
    }
  }
  return out;
}

struct Structure {
  std::vector<int> base;
  int extension;
};

inline bool any_second_extension(const Instance& inst,
                                 const std::vector<Structure>& candidates) {
  for (const auto& c : candidates) {
    std::vector<int> grown = c.base;
    grown.push_back(c.extension);
    if (!extenders(inst, grown).empty()) return true;
  }
  return false;
}

}  // namespace detail

// Head analysis on ranks K+1..K+3. Every structure that could occupy the
// first K+2 ranks is paired with every vertex that extends it as a
// non-double; keeping only one extension per structure would make the last
// inequality unsound.
inline PresolveResult head_analysis(
    const Instance& inst, std::size_t clique_budget = kDefaultCliqueBudget) {
  PresolveResult res;
  const int k = inst.dimension();
  const int n = inst.n();

  std::vector<Clique> base_cliques;
  bool over_budget = false;
  for_each_clique(inst, k + 1, [&](const Clique& c) {
    if (base_cliques.size() >= clique_budget) {
      over_budget = true;
      return false;
    }
    base_cliques.push_back(c);
    return true;
  });
  if (over_budget) {
    res.head_skipped = true;
    return res;
  }

  std::vector<Clique> big = enumerate_cliques(inst, k + 2);
  std::vector<detail::Structure> candidates;

  auto fix_one = [&](int r) {
    if (r < n) res.fixed_one.insert(r);
  };
  auto cover = [&](std::vector<int> s) {
    for (int r : s) {
      if (r >= n) return;  // the argument needs every listed rank to exist
    }
    res.cover_inequalities.push_back(std::move(s));
  };

  if (big.empty()) {
    fix_one(k + 1);
    // Unions of two (K+1)-cliques meeting in K vertices: C1 plus an outside
    // vertex x adjacent to all of C1 except d. Each union arises from both
    // (d, x) and (x, d); keep d < x.
    for (const Clique& c1 : base_cliques) {
      for (int drop = 0; drop <= k; ++drop) {
        int d = c1.members[drop];
        for (int x = d + 1; x < n; ++x) {
          if (detail::contains(c1.members, x)) continue;
          bool ok = true;
          for (int j = 0; j <= k && ok; ++j) {
            if (j != drop && !inst.adjacent(x, c1.members[j])) ok = false;
          }
          if (!ok) continue;
          std::vector<int> uni = c1.members;
          uni.push_back(x);
          std::sort(uni.begin(), uni.end());
          for (int v : detail::extenders(inst, uni)) {
            candidates.push_back({uni, v});
          }
        }
      }
    }
    if (candidates.empty()) {
      fix_one(k + 2);
    } else if (!detail::any_second_extension(inst, candidates)) {
      cover({k + 2, k + 3});
    }
  } else {
    for (const Clique& c : big) {
      for (int v : detail::extenders(inst, c.members)) {
        candidates.push_back({c.members, v});
      }
    }
    if (candidates.empty()) {
      cover({k + 1, k + 2});
    } else if (!detail::any_second_extension(inst, candidates)) {
      cover({k + 1, k + 2, k + 3});
    }
  }
  return res;
}

inline PresolveResult merge(const PresolveResult& a, const PresolveResult& b) {
  PresolveResult out = a;
  out.fixed_zero.insert(b.fixed_zero.begin(), b.fixed_zero.end());
  out.fixed_one.insert(b.fixed_one.begin(), b.fixed_one.end());
  out.cover_inequalities.insert(out.cover_inequalities.end(),
                                b.cover_inequalities.begin(),
                                b.cover_inequalities.end());
  out.head_skipped = a.head_skipped || b.head_skipped;
  out.infeasible = a.infeasible || b.infeasible;
  return out;
}

// Drops covers already implied by a fixed_one rank, shrinks covers by the
// fixed_zero ranks, and flags contradictions.
inline void normalize(PresolveResult& res) {
  for (int r : res.fixed_one) {
    if (res.fixed_zero.count(r)) res.infeasible = true;
  }
  std::vector<std::vector<int>> kept;
  for (auto s : res.cover_inequalities) {
    bool redundant = false;
    for (int r : s) redundant = redundant || res.fixed_one.count(r) > 0;
    if (redundant) continue;
    std::erase_if(s, [&](int r) { return res.fixed_zero.count(r) > 0; });
    if (s.empty()) {
      res.infeasible = true;
      continue;
    }
    if (s.size() == 1) {
      res.fixed_one.insert(s.front());
      continue;
    }
    std::sort(s.begin(), s.end());
    if (std::find(kept.begin(), kept.end(), s) == kept.end()) {
      kept.push_back(std::move(s));
    }
  }
  res.cover_inequalities = std::move(kept);
}

// Base fixings, the tail rule, and head analysis combined.
inline PresolveResult presolve(const Instance& inst,
                               std::size_t clique_budget = kDefaultCliqueBudget) {
  PresolveResult res = base_fixings(inst);
  std::set<int> tail = tail_fixings(inst);
  res.fixed_zero.insert(tail.begin(), tail.end());
  res = merge(res, head_analysis(inst, clique_budget));
  normalize(res);
  return res;
}

inline std::vector<std::string> render_presolve(const PresolveResult& res) {
  std::vector<std::string> lines;
  std::set<int> all(res.fixed_zero);
  all.insert(res.fixed_one.begin(), res.fixed_one.end());
  for (int r : all) {
    if (res.fixed_zero.count(r)) {
      lines.push_back("fix y[" + std::to_string(r) + "]=0");
    }
    if (res.fixed_one.count(r)) {
      lines.push_back("fix y[" + std::to_string(r) + "]=1");
    }
  }
  for (const auto& s : res.cover_inequalities) {
    std::string line = "cut ";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) line += '+';
      line += "y[" + std::to_string(s[i]) + "]";
    }
    lines.push_back(line + ">=1");
  }
  if (res.head_skipped) lines.push_back("c presolve skipped");
  if (res.infeasible) lines.push_back("c presolve infeasible");
  return lines;
}

}  // namespace mindouble
