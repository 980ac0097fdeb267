#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "order.hpp"

namespace mindouble {

enum class Status { kOptimal, kInfeasible, kTimeout };
enum class Objective { kMinDouble, kMinNodes };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "OPTIMAL";
    case Status::kInfeasible: return "INFEASIBLE";
    case Status::kTimeout: return "TIMEOUT";
  }
  return "?";
}

inline const char* to_string(Objective o) {
  return o == Objective::kMinDouble ? "double" : "nodes";
}

inline Objective parse_objective(const std::string& s) {
  if (s == "double") return Objective::kMinDouble;
  if (s == "nodes") return Objective::kMinNodes;
  throw std::invalid_argument("unknown objective '" + s + "'");
}

struct SolveStats {
  std::uint64_t choice_points = 0;
  double time_ms = 0.0;
  int cuts = 0;
  int iterations = 0;
  int cliques_considered = 0;
  double iis_time_ms = 0.0;
};

struct Solution {
  Status status = Status::kInfeasible;
  Objective objective_kind = Objective::kMinDouble;
  // Objective value of the best order found; meaningful iff order is set.
  std::uint64_t objective = 0;
  std::optional<VertexOrder> order;
  DoublePattern doubles;
  SolveStats stats;
};

inline std::uint64_t objective_of(const OrderReport& rep, Objective obj) {
  return obj == Objective::kMinDouble
             ? static_cast<std::uint64_t>(rep.double_count)
             : rep.total_nodes;
}

// s <STATUS> <double_count> <total_nodes>
// o <v_0> ... <v_{n-1}>
// d <y_0> ... <y_{n-1}>
// Without an order only the status word is written.
inline std::string render_solution(const Instance& inst, const Solution& sol) {
  std::ostringstream out;
  out << "s " << to_string(sol.status);
  if (sol.order) {
    OrderReport rep = check_order(inst, *sol.order);
    out << ' ' << rep.double_count << ' ' << rep.total_nodes << "\no";
    for (int v : sol.order->perm()) out << ' ' << v;
    out << "\nd";
    for (int b : rep.doubles.bits) out << ' ' << b;
  }
  out << '\n';
  return out.str();
}

}  // namespace mindouble
