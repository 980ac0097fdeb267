#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mindouble {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class InstanceErrorKind {
  kMissingHeader,
  kMalformedHeader,
  kMalformedLine,
  kEdgeCountMismatch,
  kVertexOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
  kDisconnected,
  kBadDimension,
};

inline const char* to_string(InstanceErrorKind kind) {
  switch (kind) {
    case InstanceErrorKind::kMissingHeader: return "missing header";
    case InstanceErrorKind::kMalformedHeader: return "malformed header";
    case InstanceErrorKind::kMalformedLine: return "malformed line";
    case InstanceErrorKind::kEdgeCountMismatch: return "edge count mismatch";
    case InstanceErrorKind::kVertexOutOfRange: return "vertex out of range";
    case InstanceErrorKind::kDuplicateEdge: return "duplicate edge";
    case InstanceErrorKind::kSelfLoop: return "self-loop";
    case InstanceErrorKind::kDisconnected: return "disconnected graph";
    case InstanceErrorKind::kBadDimension: return "bad dimension";
  }
  return "unknown";
}

class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}
  InstanceErrorKind kind() const { return kind_; }

 private:
  InstanceErrorKind kind_;
};

// A connected simple graph on vertices 0..n-1 together with the embedding
// dimension K. Immutable once built; every constructor path validates.
class Instance {
 public:
  static Instance create(int n, int dimension, std::vector<Edge> edges,
                         std::string name = {},
                         std::vector<std::string> comments = {}) {
    if (n <= 0) {
      throw InstanceError(InstanceErrorKind::kMalformedHeader,
                          "vertex count must be positive");
    }
    if (dimension <= 0 || dimension >= n) {
      throw InstanceError(InstanceErrorKind::kBadDimension,
                          "need 0 < K < n, got K=" + std::to_string(dimension) +
                              " n=" + std::to_string(n));
    }
    Instance inst;
    inst.n_ = n;
    inst.dimension_ = dimension;
    inst.name_ = std::move(name);
    inst.comments_ = std::move(comments);
    inst.adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
    inst.neighbors_.assign(n, {});
    for (Edge e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw InstanceError(InstanceErrorKind::kVertexOutOfRange,
                            "edge " + std::to_string(e.u) + " " +
                                std::to_string(e.v));
      }
      if (e.u == e.v) {
        throw InstanceError(InstanceErrorKind::kSelfLoop,
                            "vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      auto& cell = inst.adjacency_[static_cast<std::size_t>(e.u) * n + e.v];
      if (cell) {
        throw InstanceError(InstanceErrorKind::kDuplicateEdge,
                            "edge " + std::to_string(e.u) + " " +
                                std::to_string(e.v));
      }
      cell = 1;
      inst.adjacency_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
      inst.edges_.push_back(e);
    }
    std::sort(inst.edges_.begin(), inst.edges_.end());
    for (const Edge& e : inst.edges_) {
      inst.neighbors_[e.u].push_back(e.v);
      inst.neighbors_[e.v].push_back(e.u);
    }
    for (auto& list : inst.neighbors_) std::sort(list.begin(), list.end());
    if (!inst.connected()) {
      throw InstanceError(InstanceErrorKind::kDisconnected,
                          "graph has more than one component");
    }
    return inst;
  }

  int n() const { return n_; }
  int dimension() const { return dimension_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& comments() const { return comments_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

  // D = 2|E| / (n(n-1)).
  double density() const {
    if (n_ < 2) return 0.0;
    return 2.0 * edge_count() / (static_cast<double>(n_) * (n_ - 1));
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.dimension_ == b.dimension_ &&
           a.edges_ == b.edges_ && a.name_ == b.name_ &&
           a.comments_ == b.comments_;
  }

 private:
  Instance() = default;

  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : neighbors_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    return reached == n_;
  }

  int n_ = 0;
  int dimension_ = 0;
  std::string name_;
  std::vector<std::string> comments_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

// Reads the line-oriented instance format:
//   c <comment>          (a "c name <label>" line sets the instance name)
//   p dvop <n> <m> <K>   exactly once, before any edge
//   e <u> <v>            m lines, 0-based
inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0, m = 0, dimension = 0;
  int line_no = 0;
  std::string name;
  std::vector<std::string> comments;
  std::vector<Edge> edges;
  auto where = [&] { return "line " + std::to_string(line_no); };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::istringstream ls(line.substr(first));
    std::string tag;
    ls >> tag;
    if (tag == "c") {
      std::string rest;
      std::getline(ls, rest);
      auto start = rest.find_first_not_of(" \t");
      rest = start == std::string::npos ? std::string() : rest.substr(start);
      if (rest.rfind("name ", 0) == 0) {
        name = rest.substr(5);
      } else {
        comments.push_back(rest);
      }
      continue;
    }
    if (tag == "p") {
      std::string kind;
      if (have_header) {
        throw InstanceError(InstanceErrorKind::kMalformedHeader,
                            where() + ": second header");
      }
      if (!(ls >> kind >> n >> m >> dimension) || kind != "dvop") {
        throw InstanceError(InstanceErrorKind::kMalformedHeader, where());
      }
      std::string extra;
      if (ls >> extra || n <= 0 || m < 0) {
        throw InstanceError(InstanceErrorKind::kMalformedHeader, where());
      }
      if (dimension <= 0 || dimension >= n) {
        throw InstanceError(InstanceErrorKind::kBadDimension,
                            where() + ": K=" + std::to_string(dimension));
      }
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) {
        throw InstanceError(InstanceErrorKind::kMissingHeader,
                            where() + ": edge before header");
      }
      long long u = 0, v = 0;
      std::string extra;
      if (!(ls >> u >> v) || (ls >> extra)) {
        throw InstanceError(InstanceErrorKind::kMalformedLine, where());
      }
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw InstanceError(InstanceErrorKind::kVertexOutOfRange,
                            where() + ": " + std::to_string(u) + " " +
                                std::to_string(v));
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      continue;
    }
    throw InstanceError(InstanceErrorKind::kMalformedLine,
                        where() + ": unknown tag '" + tag + "'");
  }
  if (!have_header) {
    throw InstanceError(InstanceErrorKind::kMissingHeader, "no 'p dvop' line");
  }
  if (static_cast<int>(edges.size()) != m) {
    throw InstanceError(InstanceErrorKind::kEdgeCountMismatch,
                        "header says " + std::to_string(m) + ", found " +
                            std::to_string(edges.size()));
  }
  return Instance::create(n, dimension, std::move(edges), std::move(name),
                          std::move(comments));
}

inline std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  if (!inst.name().empty()) out << "c name " << inst.name() << '\n';
  for (const auto& c : inst.comments()) out << "c " << c << '\n';
  out << "p dvop " << inst.n() << ' ' << inst.edge_count() << ' '
      << inst.dimension() << '\n';
  for (const Edge& e : inst.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline int min_degree(const Instance& inst) {
  int m = inst.n();
  for (int v = 0; v < inst.n(); ++v) m = std::min(m, inst.degree(v));
  return m;
}

struct Clique {
  std::vector<int> members;  // sorted ascending
  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique&, const Clique&) = default;
};

// Visits every clique of exactly `size` vertices in lexicographic order of the
// sorted member list. Each clique is grown from its smallest member through
// common higher-indexed neighbours. The visitor returns false to stop early.
inline void for_each_clique(const Instance& inst, int size,
                            const std::function<bool(const Clique&)>& visit) {
  if (size <= 0 || size > inst.n()) return;
  std::vector<int> current;
  current.reserve(size);
  bool stop = false;

  std::function<void(const std::vector<int>&)> grow =
      [&](const std::vector<int>& candidates) {
        if (static_cast<int>(current.size()) == size) {
          if (!visit(Clique{current})) stop = true;
          return;
        }
        int needed = size - static_cast<int>(current.size());
        for (std::size_t i = 0; i < candidates.size() && !stop; ++i) {
          if (static_cast<int>(candidates.size() - i) < needed) break;
          int v = candidates[i];
          std::vector<int> next;
          for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (inst.adjacent(v, candidates[j])) next.push_back(candidates[j]);
          }
          if (static_cast<int>(next.size()) + 1 < needed) continue;
          current.push_back(v);
          grow(next);
          current.pop_back();
        }
      };

  std::vector<int> all(inst.n());
  for (int v = 0; v < inst.n(); ++v) all[v] = v;
  grow(all);
}

inline std::vector<Clique> enumerate_cliques(const Instance& inst, int size) {
  std::vector<Clique> out;
  for_each_clique(inst, size, [&](const Clique& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

inline bool is_clique(const Instance& inst, const std::vector<int>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j] || !inst.adjacent(members[i], members[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace mindouble
