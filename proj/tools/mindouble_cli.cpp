#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mindouble/mindouble.hpp"

using namespace mindouble;

namespace {

struct Globals {
  double time_limit = 0.0;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load(const std::string& path) { return parse_instance(read_file(path)); }

// Writes to --output when given, else stdout.
void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw std::runtime_error("cannot write " + g.output);
  out << text;
}

std::string stats_csv(const std::string& method, const Solution& s) {
  std::ostringstream out;
  out << "method,status,objective,time_ms,choice_points,cuts,iterations,"
         "cliques_considered,iis_time_ms\n";
  out << method << ',' << to_string(s.status) << ',';
  if (s.order) {
    out << s.objective;
  } else if (s.status == Status::kInfeasible) {
    out << "inf";
  }
  out << ',' << detail::fixed3(s.stats.time_ms) << ',' << s.stats.choice_points << ','
      << s.stats.cuts << ',' << s.stats.iterations << ','
      << s.stats.cliques_considered << ',' << detail::fixed3(s.stats.iis_time_ms) << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for minimum-double and minimum-node vertex orders"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--time-limit", g.time_limit, "Wall-clock limit in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Generator seed");
  app.add_option("--workers", g.workers, "Bench worker threads")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "Write output here instead of stdout");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string solve_file, method = "dfs", objective = "double", pre_break = "none";
  bool no_presolve = false, nogood = false;
  solve->add_option("instance", solve_file)->required()->check(CLI::ExistingFile);
  solve->add_option("--method", method)
      ->check(CLI::IsMember({"oracle", "dfs", "naive", "witness"}));
  solve->add_option("--objective", objective)->check(CLI::IsMember({"double", "nodes"}));
  solve->add_flag("--no-presolve", no_presolve);
  solve->add_option("--pre-break", pre_break)->check(CLI::IsMember({"none", "2", "23"}));
  solve->add_flag("--nogood", nogood, "Naive decomposition with no-good cuts only");

  // pareto
  auto* pareto = app.add_subcommand("pareto", "Objective image and Pareto frontier");
  std::string pareto_file;
  pareto->add_option("instance", pareto_file)->required()->check(CLI::ExistingFile);

  // presolve
  auto* pre = app.add_subcommand("presolve", "Print fixings and valid inequalities");
  std::string pre_file;
  std::size_t budget = kDefaultCliqueBudget;
  pre->add_option("instance", pre_file)->required()->check(CLI::ExistingFile);
  pre->add_option("--budget", budget, "Skip head analysis above this many cliques");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  auto* gen_r = gen->add_subcommand("random", "Erdos-Renyi style instance");
  int rn = 0, rk = 0;
  double density = 0;
  gen_r->add_option("--n", rn)->required();
  gen_r->add_option("--density", density)->required();
  gen_r->add_option("--k", rk)->required();
  auto* gen_s = gen->add_subcommand("synthetic", "Instance with planted doubles");
  int sn = 0, sk = 0, sd = 0;
  double noise = 0;
  gen_s->add_option("--n", sn)->required();
  gen_s->add_option("--k", sk)->required();
  gen_s->add_option("--doubles", sd)->required();
  gen_s->add_option("--noise", noise);
  for (auto* sub : {gen_r, gen_s}) sub->fallthrough();

  // export
  auto* exp = app.add_subcommand("export", "Write an LP model and print its summary");
  std::string exp_file, model = "ip", model_out;
  ExportOptions eopts;
  exp->add_option("instance", exp_file)->required()->check(CLI::ExistingFile);
  exp->add_option("--model", model)
      ->check(CLI::IsMember({"ip", "minnodes", "cycles", "ranks", "ccg", "mp2"}));
  exp->add_flag("--unordered-cliques", eopts.unordered_cliques,
                "One clique labelling per K-clique instead of K!");
  exp->add_option("--q", eopts.ccg_q, "Seed cycle length for ccg")
      ->check(CLI::IsMember({2, 3}));
  exp->add_flag("--clique-not-double", eopts.clique_not_double, "Add y_v + kappa_v <= 1 to mp2");
  exp->add_option("-o,--output", model_out, "LP file");

  // bench
  auto* bench = app.add_subcommand("bench", "Run methods over instance files");
  std::vector<std::string> bench_files;
  std::vector<std::string> methods = {"oracle", "dfs", "naive", "witness"};
  std::string bench_obj = "double";
  bench->add_option("instances", bench_files)->required();
  bench->add_option("--methods", methods)->delimiter(',');
  bench->add_option("--objective", bench_obj)->check(CLI::IsMember({"double", "nodes"}));

  // profile
  auto* prof = app.add_subcommand("profile", "Performance profile from a bench CSV");
  std::string prof_file;
  prof->add_option("csv", prof_file)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      Instance inst = load(solve_file);
      SolveConfig cfg;
      cfg.objective = parse_objective(objective);
      cfg.time_limit_s = g.time_limit;
      cfg.use_presolve = !no_presolve;
      cfg.pre_break = parse_pre_break(pre_break);
      cfg.nogood = nogood;
      Solution s = solve_with(inst, parse_method(method), cfg);
      emit(g, render_solution(inst, s) + stats_csv(method, s));
      return 0;
    }
    if (*pareto) {
      ObjectiveImage img = objective_image_and_pareto(load(pareto_file));
      std::ostringstream out;
      out << "nodes,doubles,dominated\n";
      for (const auto& p : img.image) {
        out << p.nodes_obj << ',' << p.doubles_obj << ','
            << (img.pareto.count(p) ? 0 : 1) << '\n';
      }
      emit(g, out.str());
      return 0;
    }
    if (*pre) {
      PresolveResult r = presolve(load(pre_file), budget);
      std::string text;
      for (const auto& line : render_presolve(r)) text += line + "\n";
      emit(g, text);
      return 0;
    }
    if (*gen_r) {
      emit(g, render_instance(gen_random(rn, density, rk, g.seed)));
      return 0;
    }
    if (*gen_s) {
      emit(g, render_instance(gen_synthetic(sk, sd, noise, sn, g.seed).instance));
      return 0;
    }
    if (*exp) {
      Instance inst = load(exp_file);
      ExportResult r = export_model(inst, parse_model(model), eopts);
      if (!model_out.empty()) {
        std::ofstream out(model_out);
        if (!out) throw std::runtime_error("cannot write " + model_out);
        out << r.text;
      }
      if (r.summary.no_cliques_warning) {
        std::cerr << "warning: no extendable K-clique, model is infeasible\n";
      }
      emit(g, render_summary_csv(r.summary));
      return 0;
    }
    if (*bench) {
      std::vector<Method> ms;
      for (const auto& m : methods) ms.push_back(parse_method(m));
      SolveConfig cfg;
      cfg.objective = parse_objective(bench_obj);
      cfg.time_limit_s = g.time_limit;
      BenchReport rep = run_bench(bench_files, ms, cfg, g.workers);
      emit(g, render_bench_csv(rep.rows));
      for (const auto& r : rep.rows) {
        if (r.status == "ERROR") std::cerr << r.instance << " " << r.method << ": " << r.error << "\n";
      }
      for (const auto& d : rep.disagreements) std::cerr << "disagreement " << d << "\n";
      return rep.disagreements.empty() ? 0 : 3;
    }
    if (*prof) {
      emit(g, render_profile_csv(perf_profile(read_file(prof_file))));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
