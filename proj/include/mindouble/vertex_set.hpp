#pragma once

#include <bitset>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mindouble {

// Upper bound on n for the solvers that key their search state on vertex
// subsets. Parsing and the order module have no such limit.
inline constexpr int kMaxSolverVertices = 128;

using VertexSet = std::bitset<kMaxSolverVertices>;

inline void require_solver_size(int n, const char* who) {
  if (n > kMaxSolverVertices) {
    throw std::invalid_argument(std::string(who) + ": instance has " +
                                std::to_string(n) + " vertices, limit is " +
                                std::to_string(kMaxSolverVertices));
  }
}

}  // namespace mindouble
