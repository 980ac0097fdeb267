#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace mindouble;

namespace {

std::int64_t emitted(const ExportResult& r, const std::string& fam, bool var) {
  const FamilyCount* f = r.summary.find(fam, var);
  EXPECT_NE(f, nullptr) << fam;
  return f ? f->emitted : -1;
}

// Substitutes `perm` into the exported model of `kind` and returns the
// violated rows; the objective goes to *obj.
std::vector<std::string> substitute(const Instance& g, ModelKind kind,
                                    const std::vector<int>& perm,
                                    std::int64_t* obj,
                                    const ExportOptions& opts = {}) {
  ExportResult res = export_model(g, kind, opts);
  fixtures::LpView lp = fixtures::read_lp(res.text);
  std::map<std::string, std::int64_t> x;
  switch (kind) {
    case ModelKind::kIp:
      x = fixtures::ip_point(g, perm, false);
      break;
    case ModelKind::kMinNodes:
      x = fixtures::ip_point(g, perm, true);
      break;
    case ModelKind::kCycles:
      x = fixtures::literature_point(
          g, perm, extendable_cliques(g, !opts.unordered_cliques), true, false);
      break;
    case ModelKind::kRanks:
      x = fixtures::literature_point(
          g, perm, extendable_cliques(g, !opts.unordered_cliques), false, true);
      break;
    case ModelKind::kCcg:
      x = fixtures::literature_point(
          g, perm, extendable_cliques(g, !opts.unordered_cliques), false, false);
      break;
    case ModelKind::kMp2:
      x = fixtures::mp2_point(g, induced_state(g, VertexOrder(perm)));
      break;
  }
  return fixtures::check_point(lp, x, obj);
}

}  // namespace

TEST(Counts, SixVertexExamples) {
  Instance g = fixtures::six_vertex();
  ExportResult ranks = export_model(g, ModelKind::kRanks);
  EXPECT_EQ(emitted(ranks, "p", true), 22);

  ExportResult cycles = export_model(g, ModelKind::kCycles);
  const FamilyCount* p = cycles.summary.find("p", true);
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->emitted, 30);
  EXPECT_EQ(p->table_value, 36);
  EXPECT_EQ(p->relation, TableRelation::kOffDiagonal);

  ExportResult ip = export_model(g, ModelKind::kIp);
  EXPECT_EQ(emitted(ip, "clique", false), 36);
  EXPECT_EQ(emitted(ip, "assign", false), 12);
  EXPECT_EQ(emitted(ip, "fixing", false), 3);
  EXPECT_EQ(emitted(ip, "linking", false), 2 * 6 * 3);

  ExportResult mp2 = export_model(g, ModelKind::kMp2);
  EXPECT_EQ(emitted(mp2, "w", true), 22);

  for (const auto& row : cp_family_report(g)) {
    if (row.model == "cp-rank" && row.family == "clique") {
      EXPECT_EQ(row.counted, 4);
      EXPECT_EQ(row.table_value, 4);
    }
    EXPECT_EQ(row.counted, row.table_value) << row.model << " " << row.family;
  }
}

TEST(Counts, VerifyAllModels) {
  const ModelKind kinds[] = {ModelKind::kIp,    ModelKind::kMinNodes,
                             ModelKind::kCycles, ModelKind::kRanks,
                             ModelKind::kCcg,   ModelKind::kMp2};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Instance g = gen_random(8, 0.5, 2 + static_cast<int>(seed % 2), seed);
    for (ModelKind kind : kinds) {
      for (bool unordered : {false, true}) {
        ExportOptions o;
        o.unordered_cliques = unordered;
        o.ccg_q = seed % 2 ? 3 : 2;
        o.clique_not_double = unordered;
        std::vector<std::string> problems;
        ExportResult r = export_model(g, kind, o);
        EXPECT_TRUE(verify_counts(r.summary, g, &problems))
            << to_string(kind) << ": "
            << (problems.empty() ? "" : problems.front());
      }
    }
  }
}

TEST(Counts, VerifyCatchesTampering) {
  Instance g = fixtures::six_vertex();
  ExportResult r = export_model(g, ModelKind::kIp);
  for (auto& f : r.summary.families) {
    if (f.family == "clique") ++f.emitted;
  }
  std::vector<std::string> problems;
  EXPECT_FALSE(verify_counts(r.summary, g, &problems));
  EXPECT_FALSE(problems.empty());
}

TEST(Counts, KappaLabellings) {
  Instance g = fixtures::six_vertex();
  // every edge lies in a triangle
  EXPECT_EQ(extendable_cliques(g, false).size(), 11u);
  EXPECT_EQ(extendable_cliques(g, true).size(), 22u);
  ExportOptions o;
  o.unordered_cliques = true;
  EXPECT_EQ(emitted(export_model(g, ModelKind::kRanks, o), "kappa", true), 11);
  EXPECT_EQ(emitted(export_model(g, ModelKind::kRanks), "kappa", true), 22);
}

TEST(Export, NoCliqueWarning) {
  Instance p5 = Instance::create(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  ExportResult r = export_model(p5, ModelKind::kCycles);
  EXPECT_TRUE(r.summary.no_cliques_warning);
  EXPECT_NE(r.text.find("warning"), std::string::npos);
  // "select: 0 y_0 = 1" can never hold
  fixtures::LpView lp = fixtures::read_lp(r.text);
  auto it = std::find_if(lp.rows.begin(), lp.rows.end(),
                         [](const auto& row) { return row.name == "select"; });
  ASSERT_NE(it, lp.rows.end());
  for (const auto& t : it->terms) EXPECT_EQ(t.first, 0);
  EXPECT_EQ(it->rhs, 1);
  EXPECT_FALSE(export_model(p5, ModelKind::kIp).summary.no_cliques_warning);
}

TEST(Export, ByteStable) {
  Instance g = gen_random(9, 0.5, 2, 4);
  for (ModelKind kind : {ModelKind::kIp, ModelKind::kMinNodes, ModelKind::kCycles,
                         ModelKind::kRanks, ModelKind::kCcg, ModelKind::kMp2}) {
    EXPECT_EQ(export_model(g, kind).text, export_model(g, kind).text);
  }
}

TEST(Export, ParseModelNames) {
  EXPECT_EQ(parse_model("ip"), ModelKind::kIp);
  EXPECT_EQ(parse_model("minnodes"), ModelKind::kMinNodes);
  EXPECT_EQ(parse_model("cycles"), ModelKind::kCycles);
  EXPECT_EQ(parse_model("ranks"), ModelKind::kRanks);
  EXPECT_EQ(parse_model("ccg"), ModelKind::kCcg);
  EXPECT_EQ(parse_model("mp2"), ModelKind::kMp2);
  EXPECT_THROW(parse_model("cp"), std::invalid_argument);
}

TEST(Export, LpLayout) {
  LpModel m;
  m.title = "t";
  m.add_var("a", "a");
  m.add_var("b", "b", VarType::kInteger, 0, 4);
  m.objective = {{1, "a"}, {-3, "b"}};
  m.objective_constant = -2;
  m.add_row("r1", "r", {{2, "a"}, {1, "b"}}, Sense::kLe, 3);
  m.add_row("r2", "r", {}, Sense::kGe, 0);
  EXPECT_EQ(write_lp(m),
            "\\ t\n"
            "Minimize\n obj: a - 3 b - 2\n"
            "Subject To\n r1: 2 a + b <= 3\n r2: 0 a >= 0\n"
            "Bounds\n 0 <= b <= 4\n"
            "Binaries\n a\n"
            "Generals\n b\n"
            "End\n");
}

TEST(Export, SummaryCsv) {
  ExportResult r = export_model(fixtures::six_vertex(), ModelKind::kMp2);
  std::string csv = render_summary_csv(r.summary);
  EXPECT_EQ(csv.rfind("model,family,kind,emitted,closed_form,formula,table_value,"
                      "table_formula,relation\n",
                      0),
            0u);
  EXPECT_NE(csv.find("mp2,w,var,22,22,\"2|E|\",22,\"2|E|\",equal"),
            std::string::npos);
}

// Optimal orders substituted mechanically satisfy every row, and the
// objective equals the optimum.
TEST(RoundTrip, OptimalOrders) {
  std::vector<Instance> pool = {fixtures::six_vertex(), fixtures::witness_graph(),
                                fixtures::head_graph(true)};
  for (std::uint64_t seed = 1; pool.size() < 10; ++seed) {
    Instance g = gen_random(7, 0.55, 2, seed);
    if (count_valid_orders(g) > 0) pool.push_back(g);
  }
  for (const auto& g : pool) {
    auto b = fixtures::brute_force(g);
    ASSERT_GT(b.valid, 0u);
    for (ModelKind kind : {ModelKind::kIp, ModelKind::kCycles, ModelKind::kRanks,
                           ModelKind::kCcg, ModelKind::kMp2}) {
      for (const auto& perm : b.double_optimal) {
        std::int64_t obj = -1;
        auto bad = substitute(g, kind, perm, &obj);
        ASSERT_TRUE(bad.empty()) << to_string(kind) << " " << g.name() << " "
                                 << bad.front();
        EXPECT_EQ(obj, b.min_double) << to_string(kind);
      }
    }
    for (const auto& perm : b.nodes_optimal) {
      std::int64_t obj = -1;
      auto bad = substitute(g, ModelKind::kMinNodes, perm, &obj);
      ASSERT_TRUE(bad.empty()) << bad.front();
      EXPECT_EQ(static_cast<std::uint64_t>(obj), b.min_nodes);
    }
  }
}

// Every valid order is feasible, so no model cuts off a DVOP order.
TEST(RoundTrip, AllValidOrdersFeasible) {
  Instance g = fixtures::six_vertex();
  for (ModelKind kind : {ModelKind::kIp, ModelKind::kMinNodes, ModelKind::kCycles,
                         ModelKind::kRanks, ModelKind::kMp2}) {
    ExportResult res = export_model(g, kind);
    fixtures::LpView lp = fixtures::read_lp(res.text);
    auto labels = extendable_cliques(g, true);
    for_each_valid_order(g, [&](const VertexOrder& o, int d, NodeCount nodes) {
      std::map<std::string, std::int64_t> x;
      if (kind == ModelKind::kIp || kind == ModelKind::kMinNodes) {
        x = fixtures::ip_point(g, o.perm(), kind == ModelKind::kMinNodes);
      } else if (kind == ModelKind::kMp2) {
        x = fixtures::mp2_point(g, induced_state(g, o));
      } else {
        x = fixtures::literature_point(g, o.perm(), labels,
                                       kind == ModelKind::kCycles,
                                       kind == ModelKind::kRanks);
      }
      std::int64_t obj = 0;
      auto bad = fixtures::check_point(lp, x, &obj);
      ASSERT_TRUE(bad.empty()) << to_string(kind) << " " << bad.front();
      if (kind == ModelKind::kMinNodes) {
        EXPECT_EQ(static_cast<NodeCount>(obj), nodes);
      } else {
        EXPECT_EQ(obj, d);
      }
    });
  }
}

// A wrong pattern is cut off: dropping a real double breaks the IP.
TEST(RoundTrip, WrongPatternViolates) {
  Instance g = fixtures::six_vertex();
  fixtures::LpView lp = fixtures::read_lp(export_model(g, ModelKind::kIp).text);
  std::vector<int> perm = {0, 1, 2, 3, 4, 5};
  auto x = fixtures::ip_point(g, perm, false);
  x["y_3"] = 0;
  for (int v = 0; v < 6; ++v) x["z_" + std::to_string(v) + "_3"] = v == 3;
  EXPECT_FALSE(fixtures::check_point(lp, x).empty());
}
