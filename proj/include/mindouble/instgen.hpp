#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "order.hpp"
#include "rng.hpp"

namespace mindouble {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kRandomRetryBudget = 64;

namespace detail {
inline std::string fmt_num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}
}  // namespace detail

// Every pair {u,v}, u < v in lexicographic order, is kept with probability
// `density`. A disconnected draw is thrown away and redrawn from seed+1, seed+2,
// and so on.
inline Instance gen_random(int n, double density, int dimension,
                           std::uint64_t seed) {
  if (!(density > 0.0 && density < 1.0)) {
    throw std::invalid_argument("density must lie in (0,1)");
  }
  if (n < 2 || dimension <= 0 || dimension >= n) {
    throw std::invalid_argument("need n >= 2 and 0 < K < n");
  }
  for (int retry = 0; retry < kRandomRetryBudget; ++retry) {
    Rng rng(seed + static_cast<std::uint64_t>(retry));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(density)) edges.push_back({u, v});
      }
    }
    try {
      std::string name = "random_n" + std::to_string(n) + "_d" +
                         detail::fmt_num(density) + "_k" +
                         std::to_string(dimension) + "_s" +
                         std::to_string(seed);
      std::vector<std::string> comments = {
          "generator random",
          "seed " + std::to_string(seed),
          "retries " + std::to_string(retry),
          "density " + detail::fmt_num(density),
      };
      return Instance::create(n, dimension, std::move(edges), std::move(name),
                              std::move(comments));
    } catch (const InstanceError& e) {
      if (e.kind() != InstanceErrorKind::kDisconnected) throw;
    }
  }
  throw GenerationError("no connected graph after " +
                        std::to_string(kRandomRetryBudget) + " draws");
}

struct SyntheticInstance {
  Instance instance;
  DoublePattern marks;  // y_r chosen by the generator, identity order
};

inline SyntheticInstance gen_synthetic(int dimension, int num_doubles,
                                       double noise, int n,
                                       std::uint64_t seed) {
  const int k = dimension;
  if (k <= 0 || k + 1 > n) throw std::invalid_argument("need 0 < K and K+1 <= n");
  if (num_doubles < 1 || num_doubles > n - k - 1) {
    throw std::invalid_argument("number of doubles must lie in [1, n-K-1]");
  }
  if (noise < 0.0) throw std::invalid_argument("noise must be non-negative");
  Rng rng(seed);
  std::vector<int> y(n, 0);
  y[k] = 1;
  int marked = 1;
  while (marked < num_doubles) {
    int r = k + 1 + static_cast<int>(rng.uniform_int(n - 1 - k));
    if (y[r] == 0) {
      y[r] = 1;
      ++marked;
    }
  }

  std::set<Edge> edges;
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.insert({i, j});
  }
  std::vector<int> pool;
  for (int v = k + 1; v < n; ++v) {
    int take = y[v] ? k : k + 1;
    pool.resize(v);
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: the first `take` slots become a uniform subset.
    for (int i = 0; i < take; ++i) {
      int j = i + static_cast<int>(rng.uniform_int(v - i));
      std::swap(pool[i], pool[j]);
      edges.insert({pool[i], v});
    }
  }

  std::vector<int> unmarked;
  for (int v = k + 1; v < n; ++v) {
    if (!y[v]) unmarked.push_back(v);
  }
  const int wanted = static_cast<int>(std::ceil(noise * n - 1e-9));
  // A pair drawn uniformly from the unmarked non-edges has the same law as
  // drawing u, v until a fresh pair appears, and cannot cycle on the low
  // bits of the generator.
  std::vector<Edge> free_pairs;
  for (std::size_t a = 0; a < unmarked.size(); ++a) {
    for (std::size_t b = a + 1; b < unmarked.size(); ++b) {
      Edge e{unmarked[a], unmarked[b]};
      if (!edges.count(e)) free_pairs.push_back(e);
    }
  }
  if (static_cast<long long>(free_pairs.size()) < wanted) {
    throw GenerationError(
        "cannot place " + std::to_string(wanted) + " noise edges: only " +
        std::to_string(free_pairs.size()) + " free pairs among " +
        std::to_string(unmarked.size()) + " unmarked non-clique vertices");
  }
  for (int placed = 0; placed < wanted; ++placed) {
    std::size_t i = rng.uniform_int(free_pairs.size());
    edges.insert(free_pairs[i]);
    free_pairs.erase(free_pairs.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::ostringstream mark_list;
  for (int r = 0; r < n; ++r) {
    if (y[r]) mark_list << ' ' << r;
  }
  std::string name = "synthetic_n" + std::to_string(n) + "_k" +
                     std::to_string(k) + "_d" + std::to_string(num_doubles) +
                     "_noise" + detail::fmt_num(noise) + "_s" +
                     std::to_string(seed);
  std::vector<std::string> comments = {
      "generator synthetic",
      "seed " + std::to_string(seed),
      "noise " + detail::fmt_num(noise),
      "marks" + mark_list.str(),
  };
  return {Instance::create(n, k, {edges.begin(), edges.end()}, std::move(name),
                           std::move(comments)),
          DoublePattern(std::move(y))};
}

}  // namespace mindouble
