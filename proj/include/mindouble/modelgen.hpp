#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lp_model.hpp"

namespace mindouble {

enum class ModelKind { kIp, kMinNodes, kCycles, kRanks, kCcg, kMp2 };

inline const char* to_string(ModelKind m) {
  switch (m) {
    case ModelKind::kIp:
      return "ip";
    case ModelKind::kMinNodes:
      return "minnodes";
    case ModelKind::kCycles:
      return "cycles";
    case ModelKind::kRanks:
      return "ranks";
    case ModelKind::kCcg:
      return "ccg";
    case ModelKind::kMp2:
      return "mp2";
  }
  return "?";
}

inline ModelKind parse_model(const std::string& s) {
  for (ModelKind m : {ModelKind::kIp, ModelKind::kMinNodes, ModelKind::kCycles,
                      ModelKind::kRanks, ModelKind::kCcg, ModelKind::kMp2}) {
    if (s == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown model '" + s + "'");
}

struct ExportOptions {
  bool unordered_cliques = false;  // one labelling per K-clique instead of K!
  int ccg_q = 2;                   // seed cycles of length <= q (2 or 3)
  bool clique_not_double = false;  // add y_v + kappa_v <= 1 to mp2
};

// How an emitted family count relates to the summary table's expression.
enum class TableRelation {
  kNone,        // family not listed
  kEqual,
  kOffDiagonal, // table counts |V|^2 names, diagonal never emitted
  kPerArc,      // table counts edges, one row is emitted per arc
  kUpperBound,
  kUnrelated,   // table row describes a different variable set
};

inline const char* to_string(TableRelation r) {
  switch (r) {
    case TableRelation::kNone:
      return "none";
    case TableRelation::kEqual:
      return "equal";
    case TableRelation::kOffDiagonal:
      return "off-diagonal";
    case TableRelation::kPerArc:
      return "per-arc";
    case TableRelation::kUpperBound:
      return "upper-bound";
    case TableRelation::kUnrelated:
      return "unrelated";
  }
  return "?";
}

struct FamilyCount {
  std::string family;
  bool variable = false;
  std::int64_t emitted = 0;
  std::int64_t closed_form = 0;
  std::string formula;
  TableRelation relation = TableRelation::kNone;
  std::int64_t table_value = 0;
  std::string table_formula;
};

struct ModelSummary {
  std::string model;
  ExportOptions options;
  std::vector<FamilyCount> families;
  bool no_cliques_warning = false;

  const FamilyCount* find(const std::string& family, bool variable) const {
    for (const auto& f : families) {
      if (f.family == family && f.variable == variable) return &f;
    }
    return nullptr;
  }
};

struct ExportResult {
  std::string text;
  ModelSummary summary;
  LpModel model;
};

// Ordered K-cliques that extend to a (K+1)-clique; members are listed in rank
// order, rank R = position + 1.
inline std::vector<std::vector<int>> extendable_cliques(const Instance& inst,
                                                        bool ordered) {
  const int k = inst.dimension();
  std::vector<std::vector<int>> out;
  for_each_clique(inst, k, [&](const Clique& c) {
    bool extends = false;
    for (int x = 0; x < inst.n() && !extends; ++x) {
      if (std::find(c.members.begin(), c.members.end(), x) != c.members.end()) {
        continue;
      }
      bool all = true;
      for (int m : c.members) all = all && inst.adjacent(x, m);
      extends = all;
    }
    if (!extends) return true;
    std::vector<int> lab = c.members;
    do {
      out.push_back(lab);
    } while (ordered && std::next_permutation(lab.begin(), lab.end()));
    return true;
  });
  return out;
}

inline std::int64_t triangle_count(const Instance& inst) {
  std::int64_t t = 0;
  for_each_clique(inst, 3, [&](const Clique&) {
    ++t;
    return true;
  });
  return t;
}

namespace detail {

inline std::string vname(const char* base, int a) {
  return std::string(base) + "_" + std::to_string(a);
}
inline std::string vname(const char* base, int a, int b) {
  return std::string(base) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

inline void ip_core(const Instance& inst, LpModel& m) {
  const int n = inst.n();
  const int k = inst.dimension();
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < n; ++r) m.add_var(vname("x", v, r), "x");
  }
  for (int r = 0; r < n; ++r) m.add_var(vname("y", r), "y");
  for (int v = 0; v < n; ++v) {
    for (int r = k + 1; r < n; ++r) m.add_var(vname("z", v, r), "z");
  }
  for (int v = 0; v < n; ++v) {
    LpTerms t;
    for (int r = 0; r < n; ++r) t.push_back({1, vname("x", v, r)});
    m.add_row(vname("vrank", v), "assign", t, Sense::kEq, 1);
  }
  for (int r = 0; r < n; ++r) {
    LpTerms t;
    for (int v = 0; v < n; ++v) t.push_back({1, vname("x", v, r)});
    m.add_row(vname("rvert", r), "assign", t, Sense::kEq, 1);
  }
  auto preds = [&](int v, int r) {
    LpTerms t;
    for (int u : inst.neighbors(v)) {
      for (int j = 0; j < r; ++j) t.push_back({1, vname("x", u, j)});
    }
    return t;
  };
  // r = 0 rows are vacuous but complete the n^2 clique family.
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < n; ++r) {
      LpTerms t = preds(v, r);
      t.push_back({-(r <= k ? r : k), vname("x", v, r)});
      m.add_row(vname("kpred", v, r), "clique", t, Sense::kGe, 0);
    }
  }
  for (int r = 0; r < k; ++r) {
    m.add_row(vname("fixy", r), "fixing", {{1, vname("y", r)}}, Sense::kEq, 0);
  }
  m.add_row(vname("fixy", k), "fixing", {{1, vname("y", k)}}, Sense::kEq, 1);
  // Rank K is fixed double, so its linking rows hold trivially and are left
  // out.
  for (int v = 0; v < n; ++v) {
    for (int r = k + 1; r < n; ++r) {
      LpTerms t = preds(v, r);
      t.push_back({-(k + 1), vname("z", v, r)});
      m.add_row(vname("nd", v, r), "linking", t, Sense::kGe, 0);
      m.add_row(vname("ind", v, r), "linking",
                {{1, vname("x", v, r)}, {-1, vname("y", r)},
                 {-1, vname("z", v, r)}},
                Sense::kLe, 0);
    }
  }
}

// y_v, kappa_c and the rows shared by the literature models.
inline void clique_selection_core(const Instance& inst, LpModel& m,
                                  const std::vector<std::vector<int>>& cl) {
  const int n = inst.n();
  const int k = inst.dimension();
  for (int v = 0; v < n; ++v) m.add_var(vname("y", v), "y");
  for (std::size_t c = 0; c < cl.size(); ++c) {
    m.add_var(vname("kappa", static_cast<int>(c)), "kappa");
    std::string note = "kappa_" + std::to_string(c) + " =";
    for (int v : cl[c]) note += " " + std::to_string(v);
    m.notes.push_back(note);
  }
  for (int v = 0; v < n; ++v) m.objective.push_back({1, vname("y", v)});
  m.objective_constant = -k;
}

inline void clique_selection_rows(const Instance& inst, LpModel& m,
                                  const std::vector<std::vector<int>>& cl) {
  const int n = inst.n();
  const int k = inst.dimension();
  LpTerms sel;
  for (std::size_t c = 0; c < cl.size(); ++c) {
    sel.push_back({1, vname("kappa", static_cast<int>(c))});
  }
  m.add_row("select", "clique_selection", sel, Sense::kEq, 1);
  // sum_j p_ji + sum_{c : i in c} (K - R + 1) kappa_c + y_i >= K + 1
  for (int i = 0; i < n; ++i) {
    LpTerms t;
    for (int j : inst.neighbors(i)) t.push_back({1, vname("p", j, i)});
    for (std::size_t c = 0; c < cl.size(); ++c) {
      auto it = std::find(cl[c].begin(), cl[c].end(), i);
      if (it == cl[c].end()) continue;
      int rank = static_cast<int>(it - cl[c].begin()) + 1;
      t.push_back({k - rank + 1, vname("kappa", static_cast<int>(c))});
    }
    t.push_back({1, vname("y", i)});
    m.add_row(vname("link", i), "linking", t, Sense::kGe, k + 1);
  }
}

inline void arc_p_vars(const Instance& inst, LpModel& m) {
  for (const Edge& e : inst.edges()) {
    m.add_var(vname("p", e.u, e.v), "p");
    m.add_var(vname("p", e.v, e.u), "p");
  }
}

inline LpModel build_ip(const Instance& inst) {
  LpModel m;
  m.title = "ip " + inst.name();
  ip_core(inst, m);
  for (int r = 0; r < inst.n(); ++r) m.objective.push_back({1, vname("y", r)});
  return m;
}

inline LpModel build_minnodes(const Instance& inst) {
  const int n = inst.n();
  const int k = inst.dimension();
  LpModel m;
  m.title = "minnodes " + inst.name();
  ip_core(inst, m);
  std::int64_t cap = k < 62 && n - k < 62 ? (std::int64_t{1} << (n - k)) : 0;
  if (cap == 0) throw std::invalid_argument("node counts overflow the model");
  for (int r = 0; r < n; ++r) {
    m.add_var(vname("m", r), "m", VarType::kInteger, 0, cap);
    m.objective.push_back({1, vname("m", r)});
  }
  for (int r = 0; r < k; ++r) {
    m.add_row(vname("mfix", r), "node_fix", {{1, vname("m", r)}}, Sense::kEq, 1);
  }
  for (int r = k; r < n; ++r) {
    m.add_row(vname("mmono", r), "node_monotone",
              {{1, vname("m", r)}, {-1, vname("m", r - 1)}}, Sense::kGe, 0);
  }
  // m_r - 2 m_{r-1} >= -2^{r-K} (1 - y_r), indexed by the rank that doubles
  for (int r = k; r < n; ++r) {
    std::int64_t big = std::int64_t{1} << (r - k);
    m.add_row(vname("mdbl", r), "node_double",
              {{1, vname("m", r)}, {-2, vname("m", r - 1)},
               {-big, vname("y", r)}},
              Sense::kGe, -big);
  }
  return m;
}

inline LpModel build_cycles(const Instance& inst,
                            const std::vector<std::vector<int>>& cl) {
  const int n = inst.n();
  LpModel m;
  m.title = "cycles " + inst.name();
  clique_selection_core(inst, m, cl);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) m.add_var(vname("p", i, j), "p");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m.add_row(vname("lo2", i, j), "linear_ordering",
                {{1, vname("p", i, j)}, {1, vname("p", j, i)}}, Sense::kEq, 1);
    }
  }
  for (const Edge& e : inst.edges()) {
    for (int kk = 0; kk < n; ++kk) {
      if (kk == e.u || kk == e.v) continue;
      for (auto [i, j] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        m.add_row("lo3_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                      std::to_string(kk),
                  "linear_ordering",
                  {{1, vname("p", i, j)}, {1, vname("p", j, kk)},
                   {1, vname("p", kk, i)}},
                  Sense::kLe, 2);
      }
    }
  }
  clique_selection_rows(inst, m, cl);
  return m;
}

inline LpModel build_ranks(const Instance& inst,
                           const std::vector<std::vector<int>>& cl) {
  const int n = inst.n();
  LpModel m;
  m.title = "ranks " + inst.name();
  clique_selection_core(inst, m, cl);
  arc_p_vars(inst, m);
  for (int v = 0; v < n; ++v) {
    m.add_var(vname("r", v), "r", VarType::kInteger, 0, n - 1);
  }
  for (const Edge& e : inst.edges()) {
    for (auto [i, j] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      m.add_row(vname("prec", i, j), "precedence",
                {{n, vname("p", i, j)}, {1, vname("r", i)}, {-1, vname("r", j)}},
                Sense::kLe, n - 1);
    }
  }
  clique_selection_rows(inst, m, cl);
  return m;
}

inline LpModel build_ccg(const Instance& inst,
                         const std::vector<std::vector<int>>& cl, int q) {
  if (q != 2 && q != 3) throw std::invalid_argument("ccg seeds need q in {2,3}");
  LpModel m;
  m.title = "ccg q=" + std::to_string(q) + " " + inst.name();
  clique_selection_core(inst, m, cl);
  arc_p_vars(inst, m);
  clique_selection_rows(inst, m, cl);
  for (const Edge& e : inst.edges()) {
    m.add_row(vname("cyc2", e.u, e.v), "cycle_seeds",
              {{1, vname("p", e.u, e.v)}, {1, vname("p", e.v, e.u)}},
              Sense::kLe, 1);
  }
  if (q == 3) {
    for_each_clique(inst, 3, [&](const Clique& t) {
      int a = t.members[0], b = t.members[1], c = t.members[2];
      std::string tag = std::to_string(a) + "_" + std::to_string(b) + "_" +
                        std::to_string(c);
      m.add_row("cyc3f_" + tag, "cycle_seeds",
                {{1, vname("p", a, b)}, {1, vname("p", b, c)},
                 {1, vname("p", c, a)}},
                Sense::kLe, 2);
      m.add_row("cyc3b_" + tag, "cycle_seeds",
                {{1, vname("p", b, a)}, {1, vname("p", c, b)},
                 {1, vname("p", a, c)}},
                Sense::kLe, 2);
      return true;
    });
  }
  return m;
}

inline LpModel build_mp2(const Instance& inst, bool clique_not_double) {
  const int n = inst.n();
  const int k = inst.dimension();
  LpModel m;
  m.title = "mp2 " + inst.name();
  for (int v = 0; v < n; ++v) m.add_var(vname("y", v), "y");
  for (int v = 0; v < n; ++v) m.add_var(vname("kappa", v), "kappa");
  for (int v = 0; v < n; ++v) {
    for (int u : inst.neighbors(v)) m.add_var(vname("w", v, u), "w");
  }
  for (int v = 0; v < n; ++v) m.objective.push_back({1, vname("y", v)});
  m.objective_constant = 1;
  LpTerms sel;
  for (int v = 0; v < n; ++v) sel.push_back({1, vname("kappa", v)});
  m.add_row("select", "clique_selection", sel, Sense::kEq, k + 1);
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      if (inst.adjacent(u, v)) continue;
      m.add_row(vname("nadj", v, u), "clique_witness",
                {{1, vname("kappa", v)}, {1, vname("kappa", u)}}, Sense::kLe, 1);
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int u : inst.neighbors(v)) {
      m.add_row(vname("cw", v, u), "clique_witness",
                {{1, vname("kappa", v)}, {-1, vname("w", u, v)}}, Sense::kLe, 0);
    }
  }
  // sum_u w_vu = (K+1)(1 - kappa_v) - y_v + K kappa_v
  for (int v = 0; v < n; ++v) {
    LpTerms t;
    for (int u : inst.neighbors(v)) t.push_back({1, vname("w", v, u)});
    t.push_back({1, vname("y", v)});
    t.push_back({1, vname("kappa", v)});
    m.add_row(vname("wit", v), "witness", t, Sense::kEq, k + 1);
  }
  if (clique_not_double) {
    for (int v = 0; v < n; ++v) {
      m.add_row(vname("p1", v), "clique_not_double",
                {{1, vname("y", v)}, {1, vname("kappa", v)}}, Sense::kLe, 1);
    }
  }
  return m;
}

}  // namespace detail

// Closed-form family counts for `model` on this instance, with the summary
// table's expression alongside. Emitted counts are left at zero.
inline std::vector<FamilyCount> closed_form_counts(const Instance& inst,
                                                   ModelKind model,
                                                   const ExportOptions& opts) {
  const std::int64_t n = inst.n();
  const std::int64_t e = inst.edge_count();
  const std::int64_t k = inst.dimension();
  std::vector<FamilyCount> f;
  auto add = [&](std::string fam, bool var, std::int64_t val, std::string form,
                 TableRelation rel = TableRelation::kNone, std::int64_t tv = 0,
                 std::string tf = {}) {
    f.push_back({std::move(fam), var, 0, val, std::move(form), rel, tv,
                 std::move(tf)});
  };
  auto ip_like = [&]() {
    add("x", true, n * n, "|V|n", TableRelation::kEqual, n * n, "|V|^2");
    add("y", true, n, "n", TableRelation::kEqual, n, "n");
    add("z", true, n * (n - k - 1), "|V|(n-K-1)");
    add("assign", false, 2 * n, "2n", TableRelation::kEqual, 2 * n, "2n");
    add("clique", false, n * n, "|V|n", TableRelation::kEqual, n * n, "n^2");
    add("fixing", false, k + 1, "K+1", TableRelation::kEqual, k + 1, "K+1");
    add("linking", false, 2 * n * (n - k - 1), "2|V|(n-K-1)",
        TableRelation::kEqual, 2 * n * (n - k - 1), "2(|V| x (n-K-1))");
  };
  auto literature = [&](std::int64_t labels) {
    add("y", true, n, "|V|", TableRelation::kEqual, n, "|V|");
    add("kappa", true, labels, "|K-cliques extendable| x labellings",
        TableRelation::kUnrelated, n, "|V|");
  };
  switch (model) {
    case ModelKind::kIp:
      ip_like();
      break;
    case ModelKind::kMinNodes:
      ip_like();
      add("m", true, n, "n");
      add("node_fix", false, k, "K");
      add("node_monotone", false, n - k, "n-K");
      add("node_double", false, n - k, "n-K");
      break;
    case ModelKind::kCycles: {
      auto labels = static_cast<std::int64_t>(
          extendable_cliques(inst, !opts.unordered_cliques).size());
      literature(labels);
      add("p", true, n * (n - 1), "|V|(|V|-1)", TableRelation::kOffDiagonal,
          n * n, "|V|^2");
      add("linear_ordering", false, n * (n - 1) / 2 + 2 * e * (n - 2),
          "|V|(|V|-1)/2 + 2|E|(|V|-2)", TableRelation::kUpperBound,
          n * n + n * n * e, "|V|^2 + |V|^2 x |E|");
      add("clique_selection", false, 1, "1", TableRelation::kEqual, 1, "1");
      add("linking", false, n, "|V|", TableRelation::kEqual, n, "|V|");
      break;
    }
    case ModelKind::kRanks: {
      auto labels = static_cast<std::int64_t>(
          extendable_cliques(inst, !opts.unordered_cliques).size());
      literature(labels);
      add("p", true, 2 * e, "2|E|", TableRelation::kEqual, 2 * e, "2|E|");
      add("r", true, n, "n", TableRelation::kEqual, n, "n");
      add("precedence", false, 2 * e, "2|E|", TableRelation::kPerArc, e, "|E|");
      add("clique_selection", false, 1, "1", TableRelation::kEqual, 1, "1");
      add("linking", false, n, "|V|", TableRelation::kEqual, n, "|V|");
      break;
    }
    case ModelKind::kCcg: {
      auto labels = static_cast<std::int64_t>(
          extendable_cliques(inst, !opts.unordered_cliques).size());
      literature(labels);
      add("p", true, 2 * e, "2|E|", TableRelation::kEqual, 2 * e, "2|E|");
      add("clique_selection", false, 1, "1", TableRelation::kEqual, 1, "1");
      add("linking", false, n, "|V|", TableRelation::kEqual, n, "|V|");
      if (opts.ccg_q == 3) {
        add("cycle_seeds", false, e + 2 * triangle_count(inst),
            "|E| + 2|triangles|");
      } else {
        add("cycle_seeds", false, e, "|E|");
      }
      break;
    }
    case ModelKind::kMp2:
      add("y", true, n, "n", TableRelation::kEqual, n, "n");
      add("kappa", true, n, "|V|", TableRelation::kEqual, n, "|V|");
      add("w", true, 2 * e, "2|E|", TableRelation::kEqual, 2 * e, "2|E|");
      add("clique_selection", false, 1, "1", TableRelation::kEqual, 1, "1");
      add("clique_witness", false, n * (n - 1) / 2 + e, "|V|(|V|-1)/2+|E|",
          TableRelation::kEqual, n * (n - 1) / 2 + e, "|V|(|V|-1)/2+|E|");
      add("witness", false, n, "|V|", TableRelation::kEqual, n, "|V|");
      if (opts.clique_not_double) add("clique_not_double", false, n, "|V|");
      break;
  }
  return f;
}

inline ExportResult export_model(const Instance& inst, ModelKind model,
                                 const ExportOptions& opts = {}) {
  ExportResult res;
  bool needs_cliques = model == ModelKind::kCycles ||
                       model == ModelKind::kRanks || model == ModelKind::kCcg;
  std::vector<std::vector<int>> cl;
  if (needs_cliques) cl = extendable_cliques(inst, !opts.unordered_cliques);
  switch (model) {
    case ModelKind::kIp:
      res.model = detail::build_ip(inst);
      break;
    case ModelKind::kMinNodes:
      res.model = detail::build_minnodes(inst);
      break;
    case ModelKind::kCycles:
      res.model = detail::build_cycles(inst, cl);
      break;
    case ModelKind::kRanks:
      res.model = detail::build_ranks(inst, cl);
      break;
    case ModelKind::kCcg:
      res.model = detail::build_ccg(inst, cl, opts.ccg_q);
      break;
    case ModelKind::kMp2:
      res.model = detail::build_mp2(inst, opts.clique_not_double);
      break;
  }
  ModelSummary& s = res.summary;
  s.model = to_string(model);
  s.options = opts;
  s.no_cliques_warning = needs_cliques && cl.empty();
  if (s.no_cliques_warning) {
    res.model.notes.push_back(
        "warning: no extendable K-clique, the clique selection row is "
        "infeasible");
  }
  s.families = closed_form_counts(inst, model, opts);
  auto vc = res.model.var_counts();
  auto rc = res.model.row_counts();
  for (auto& f : s.families) {
    const auto& src = f.variable ? vc : rc;
    auto it = src.find(f.family);
    f.emitted = it == src.end() ? 0 : it->second;
  }
  // Families the closed forms do not know about would go unchecked.
  for (const auto* src : {&vc, &rc}) {
    for (const auto& [fam, cnt] : *src) {
      if (!s.find(fam, src == &vc)) {
        throw std::logic_error("unlisted family " + fam + " in " + s.model);
      }
    }
  }
  res.text = write_lp(res.model);
  return res;
}

// True iff every emitted count equals its closed form and agrees with the
// summary table under the recorded relation.
inline bool verify_counts(const ModelSummary& summary, const Instance& inst,
                          std::vector<std::string>* problems = nullptr) {
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (problems) problems->push_back(msg);
  };
  const std::int64_t n = inst.n();
  auto expected =
      closed_form_counts(inst, parse_model(summary.model), summary.options);
  if (expected.size() != summary.families.size()) {
    fail(summary.model + ": family list differs");
  }
  for (const auto& want : expected) {
    const FamilyCount* got = summary.find(want.family, want.variable);
    if (!got) {
      fail(summary.model + ": missing family " + want.family);
      continue;
    }
    if (got->emitted != want.closed_form) {
      fail(summary.model + ": " + want.family + " emitted " +
           std::to_string(got->emitted) + ", closed form " + want.formula +
           " = " + std::to_string(want.closed_form));
    }
    bool table_ok = true;
    switch (want.relation) {
      case TableRelation::kEqual:
        table_ok = got->emitted == want.table_value;
        break;
      case TableRelation::kOffDiagonal:
        table_ok = got->emitted == want.table_value - n;
        break;
      case TableRelation::kPerArc:
        table_ok = got->emitted == 2 * want.table_value;
        break;
      case TableRelation::kUpperBound:
        table_ok = got->emitted <= want.table_value;
        break;
      case TableRelation::kNone:
      case TableRelation::kUnrelated:
        break;
    }
    if (!table_ok) {
      fail(summary.model + ": " + want.family + " emitted " +
           std::to_string(got->emitted) + " vs table " + want.table_formula +
           " = " + std::to_string(want.table_value) + " (" +
           to_string(want.relation) + ")");
    }
  }
  return ok;
}

// Constraint counts of the three CP models, counted directly from the graph
// and paired with the table expressions. These models are never exported.
struct CpFamilyReport {
  std::string model;
  std::string family;
  std::int64_t counted = 0;
  std::int64_t table_value = 0;
  std::string table_formula;
};

inline std::vector<CpFamilyReport> cp_family_report(const Instance& inst) {
  const std::int64_t n = inst.n();
  const std::int64_t e = inst.edge_count();
  const std::int64_t k = inst.dimension();
  std::int64_t non_edges = 0;
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = i + 1; j < inst.n(); ++j) {
      non_edges += inst.adjacent(i, j) ? 0 : 1;
    }
  }
  std::int64_t head_pairs = 0;  // pairs (i, j), i < j <= K of the clique rows
  for (std::int64_t i = 0; i < k; ++i) head_pairs += k - i;
  std::int64_t logical_vertex = 0;
  for (std::int64_t r = k + 1; r < n; ++r) ++logical_vertex;
  return {
      {"cp-rank", "alldifferent", 1, 1, "1"},
      {"cp-rank", "clique", non_edges, n * (n - 1) / 2 - e, "|V|(|V|-1)/2-|E|"},
      {"cp-rank", "logical", n, n, "|V|"},
      {"cp-vertex", "alldifferent", 1, 1, "1"},
      {"cp-vertex", "clique", head_pairs, k * (k + 1) / 2, "K(K+1)/2"},
      {"cp-vertex", "fixing", k + 1, k + 1, "K+1"},
      {"cp-vertex", "logical", logical_vertex, n - k - 1, "n-K-1"},
      {"cp-combined", "inverse", 1, 1, "1"},
      {"cp-combined", "clique", non_edges + head_pairs,
       (n * (n - 1) + k * (k + 1)) / 2 - e, "(|V|(|V|-1)+K(K+1))/2-|E|"},
      {"cp-combined", "logical", n + logical_vertex, n + n - k - 1,
       "|V|+n-K-1"},
      {"cp-combined", "fixing", k + 1, k + 1, "K+1"},
  };
}

inline std::string render_summary_csv(const ModelSummary& s) {
  std::string out =
      "model,family,kind,emitted,closed_form,formula,table_value,"
      "table_formula,relation\n";
  for (const auto& f : s.families) {
    out += s.model + "," + f.family + "," + (f.variable ? "var" : "row") + "," +
           std::to_string(f.emitted) + "," + std::to_string(f.closed_form) +
           ",\"" + f.formula + "\",";
    if (f.relation != TableRelation::kNone) {
      out += std::to_string(f.table_value) + ",\"" + f.table_formula + "\"";
    } else {
      out += ",";
    }
    out += std::string(",") + to_string(f.relation) + "\n";
  }
  return out;
}

}  // namespace mindouble
