#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindouble/mindouble.hpp"

namespace fixtures {

using mindouble::Edge;
using mindouble::Instance;

inline Instance six_vertex(int k = 2) {
  return Instance::create(6, k,
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {0, 2},
                           {0, 5}, {3, 5}, {1, 3}, {1, 5}, {2, 5}},
                          "six_vertex");
}

inline Instance witness_graph() {
  return Instance::create(6, 2,
                          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                           {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}},
                          "witness_graph");
}

// Clique {0,1,2,3} plus v4 on {1,2,3}; with `with_v5`, v5 on {0,1,2}.
inline Instance head_graph(bool with_v5) {
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) e.push_back({i, j});
  }
  for (int u : {1, 2, 3}) e.push_back({u, 4});
  if (with_v5) {
    for (int u : {0, 1, 2}) e.push_back({u, 5});
  }
  return Instance::create(with_v5 ? 6 : 5, 3, e, with_v5 ? "head_graph_wide" : "head_graph");
}

// Straight from the definitions, independent of the library's order code.
struct Eval {
  bool valid = false;
  int doubles = 0;
  std::uint64_t nodes = 0;
  std::vector<int> pattern;
};

inline Eval evaluate(const Instance& g, const std::vector<int>& perm) {
  const int n = g.n();
  const int k = g.dimension();
  Eval ev;
  ev.pattern.assign(n, 0);
  std::vector<int> pos(n);
  for (int r = 0; r < n; ++r) pos[perm[r]] = r;
  std::uint64_t level = 1;
  for (int r = 0; r < n; ++r) {
    int v = perm[r];
    int preds = 0;
    for (int u = 0; u < n; ++u) {
      if (u != v && g.adjacent(u, v) && pos[u] < r) ++preds;
    }
    if (r <= k && preds != r) return ev;
    if (r > k && preds < k) return ev;
    if (r >= k && preds == k) {
      ev.pattern[r] = 1;
      ++ev.doubles;
      level *= 2;
    }
    ev.nodes += level;
  }
  ev.valid = true;
  return ev;
}

struct Brute {
  std::uint64_t valid = 0;
  int min_double = -1;
  std::uint64_t min_nodes = 0;
  std::set<std::pair<std::uint64_t, int>> image;  // (nodes, doubles)
  std::vector<std::vector<int>> double_optimal;
  std::vector<std::vector<int>> nodes_optimal;
};

// Full n! scan; meant for n <= 9.
inline Brute brute_force(const Instance& g) {
  if (g.n() > 9) throw std::invalid_argument("brute force limited to n <= 9");
  Brute b;
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Eval ev = evaluate(g, perm);
    if (!ev.valid) continue;
    ++b.valid;
    b.image.insert({ev.nodes, ev.doubles});
    if (b.min_double < 0 || ev.doubles < b.min_double) {
      b.min_double = ev.doubles;
      b.double_optimal.clear();
    }
    if (ev.doubles == b.min_double) b.double_optimal.push_back(perm);
    if (b.nodes_optimal.empty() || ev.nodes < b.min_nodes) {
      b.min_nodes = ev.nodes;
      b.nodes_optimal.clear();
    }
    if (ev.nodes == b.min_nodes) b.nodes_optimal.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return b;
}

// Minimal reader for the LP files the exporter writes: enough to evaluate
// every row at a point.
struct LpRowView {
  std::string name;
  std::vector<std::pair<std::int64_t, std::string>> terms;
  std::string sense;
  std::int64_t rhs = 0;
};

struct LpView {
  std::vector<std::pair<std::int64_t, std::string>> objective;
  std::int64_t objective_constant = 0;
  std::vector<LpRowView> rows;
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> bounds;
  std::set<std::string> binaries;
  std::set<std::string> generals;
};

inline bool is_number(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c));
         });
}

// Parses "+ 3 x - y + 7" style token runs; a trailing bare number is a
// constant.
inline void parse_terms(const std::vector<std::string>& tok, std::size_t& i,
                        std::vector<std::pair<std::int64_t, std::string>>& out,
                        std::int64_t* constant, std::size_t end) {
  while (i < end) {
    std::int64_t sign = 1;
    if (tok[i] == "+" || tok[i] == "-") {
      sign = tok[i] == "-" ? -1 : 1;
      ++i;
    }
    if (i >= end) throw std::runtime_error("dangling sign");
    std::int64_t coef = 1;
    if (is_number(tok[i])) {
      coef = std::stoll(tok[i]);
      ++i;
      if (i >= end || tok[i] == "+" || tok[i] == "-") {
        if (!constant) throw std::runtime_error("constant in a row");
        *constant += sign * coef;
        continue;
      }
    }
    out.push_back({sign * coef, tok[i]});
    ++i;
  }
}

inline LpView read_lp(const std::string& text) {
  LpView lp;
  std::istringstream in(text);
  std::string line, section;
  std::vector<std::string> obj_tok, row_tok;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line[0] != ' ') {
      section = line;
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (section == "Minimize") {
      obj_tok.insert(obj_tok.end(), tok.begin(), tok.end());
    } else if (section == "Subject To") {
      row_tok.insert(row_tok.end(), tok.begin(), tok.end());
    } else if (section == "Bounds") {
      if (tok.size() != 5) throw std::runtime_error("bad bound: " + line);
      lp.bounds[tok[2]] = {std::stoll(tok[0]), std::stoll(tok[4])};
    } else if (section == "Binaries") {
      lp.binaries.insert(tok[0]);
    } else if (section == "Generals") {
      lp.generals.insert(tok[0]);
    } else if (section != "End") {
      throw std::runtime_error("unknown section " + section);
    }
  }
  if (obj_tok.empty() || obj_tok[0] != "obj:") {
    throw std::runtime_error("missing objective");
  }
  std::size_t i = 1;
  parse_terms(obj_tok, i, lp.objective, &lp.objective_constant, obj_tok.size());
  i = 0;
  while (i < row_tok.size()) {
    LpRowView r;
    r.name = row_tok[i];
    if (r.name.back() != ':') throw std::runtime_error("expected row name");
    r.name.pop_back();
    ++i;
    std::size_t end = i;
    while (end < row_tok.size() && row_tok[end] != "<=" &&
           row_tok[end] != ">=" && row_tok[end] != "=") {
      ++end;
    }
    if (end + 1 >= row_tok.size()) throw std::runtime_error("row without rhs");
    parse_terms(row_tok, i, r.terms, nullptr, end);
    r.sense = row_tok[end];
    r.rhs = std::stoll(row_tok[end + 1]);
    i = end + 2;
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

// Returns the violated rows (empty when the point is feasible) and the
// objective through `objective`.
inline std::vector<std::string> check_point(
    const LpView& lp, const std::map<std::string, std::int64_t>& x,
    std::int64_t* objective = nullptr) {
  std::vector<std::string> bad;
  auto val = [&](const std::string& v) -> std::int64_t {
    auto it = x.find(v);
    if (it == x.end()) throw std::runtime_error("no value for " + v);
    return it->second;
  };
  for (const auto& b : lp.binaries) {
    std::int64_t v = val(b);
    if (v != 0 && v != 1) bad.push_back("binary " + b);
  }
  for (const auto& [name, lohi] : lp.bounds) {
    std::int64_t v = val(name);
    if (v < lohi.first || v > lohi.second) bad.push_back("bound " + name);
  }
  for (const auto& r : lp.rows) {
    std::int64_t lhs = 0;
    for (const auto& [c, v] : r.terms) lhs += c * val(v);
    bool ok = r.sense == "<=" ? lhs <= r.rhs
              : r.sense == ">=" ? lhs >= r.rhs
                                : lhs == r.rhs;
    if (!ok) bad.push_back(r.name);
  }
  if (objective) {
    std::int64_t o = lp.objective_constant;
    for (const auto& [c, v] : lp.objective) o += c * val(v);
    *objective = o;
  }
  return bad;
}

inline std::string nm(const char* base, int a) {
  return std::string(base) + "_" + std::to_string(a);
}
inline std::string nm(const char* base, int a, int b) {
  return std::string(base) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

// Mechanical assignments of one DVOP order to each model's variables.
inline std::map<std::string, std::int64_t> ip_point(const Instance& g,
                                                    const std::vector<int>& perm,
                                                    bool with_nodes) {
  const int n = g.n();
  const int k = g.dimension();
  Eval ev = evaluate(g, perm);
  std::map<std::string, std::int64_t> x;
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < n; ++r) x[nm("x", v, r)] = perm[r] == v ? 1 : 0;
  }
  for (int r = 0; r < n; ++r) x[nm("y", r)] = ev.pattern[r];
  for (int v = 0; v < n; ++v) {
    for (int r = k + 1; r < n; ++r) {
      x[nm("z", v, r)] = (perm[r] == v ? 1 : 0) * (1 - ev.pattern[r]);
    }
  }
  if (with_nodes) {
    std::int64_t level = 1;
    for (int r = 0; r < n; ++r) {
      if (ev.pattern[r]) level *= 2;
      x[nm("m", r)] = level;
    }
  }
  return x;
}

// y_v = 1 on the first K vertices and on every double; kappa on the labelling
// that lists the first K vertices in order; p from the order.
inline std::map<std::string, std::int64_t> literature_point(
    const Instance& g, const std::vector<int>& perm,
    const std::vector<std::vector<int>>& labellings, bool all_pairs,
    bool with_ranks) {
  const int n = g.n();
  const int k = g.dimension();
  Eval ev = evaluate(g, perm);
  std::vector<int> pos(n);
  for (int r = 0; r < n; ++r) pos[perm[r]] = r;
  std::map<std::string, std::int64_t> x;
  for (int r = 0; r < n; ++r) {
    x[nm("y", perm[r])] = (r < k || ev.pattern[r]) ? 1 : 0;
  }
  std::vector<int> head(perm.begin(), perm.begin() + k);
  for (std::size_t c = 0; c < labellings.size(); ++c) {
    x[nm("kappa", static_cast<int>(c))] = labellings[c] == head ? 1 : 0;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || (!all_pairs && !g.adjacent(i, j))) continue;
      x[nm("p", i, j)] = pos[i] < pos[j] ? 1 : 0;
    }
  }
  if (with_ranks) {
    for (int v = 0; v < n; ++v) x[nm("r", v)] = pos[v];
  }
  return x;
}

inline std::map<std::string, std::int64_t> mp2_point(
    const Instance& g, const mindouble::WitnessState& s) {
  std::map<std::string, std::int64_t> x;
  for (int v = 0; v < g.n(); ++v) {
    x[nm("y", v)] = s.doubles[v];
    x[nm("kappa", v)] = s.in_clique(v) ? 1 : 0;
    for (int u : g.neighbors(v)) x[nm("w", v, u)] = s.has_arc(v, u) ? 1 : 0;
  }
  return x;
}

}  // namespace fixtures
