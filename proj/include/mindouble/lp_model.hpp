#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mindouble {

enum class VarType { kBinary, kInteger };
enum class Sense { kLe, kGe, kEq };

struct LpVar {
  std::string name;
  std::string family;
  VarType type = VarType::kBinary;
  std::int64_t lo = 0;
  std::int64_t hi = 1;
};

using LpTerms = std::vector<std::pair<std::int64_t, std::string>>;

struct LpRow {
  std::string name;
  std::string family;
  LpTerms terms;
  Sense sense = Sense::kGe;
  std::int64_t rhs = 0;
};

// Minimisation model in the common LP-file subset.
struct LpModel {
  std::string title;
  std::vector<std::string> notes;  // written as backslash comments
  LpTerms objective;
  std::int64_t objective_constant = 0;
  std::vector<LpVar> vars;
  std::vector<LpRow> rows;

  void add_var(std::string name, std::string family,
               VarType type = VarType::kBinary, std::int64_t lo = 0,
               std::int64_t hi = 1) {
    vars.push_back({std::move(name), std::move(family), type, lo, hi});
  }
  void add_row(std::string name, std::string family, LpTerms terms, Sense s,
               std::int64_t rhs) {
    rows.push_back({std::move(name), std::move(family), std::move(terms), s,
                    rhs});
  }

  std::map<std::string, std::int64_t> var_counts() const {
    std::map<std::string, std::int64_t> out;
    for (const auto& v : vars) ++out[v.family];
    return out;
  }
  std::map<std::string, std::int64_t> row_counts() const {
    std::map<std::string, std::int64_t> out;
    for (const auto& r : rows) ++out[r.family];
    return out;
  }
};

namespace detail {

// Appends "+ 3 x" style terms, breaking lines before they grow past ~200
// characters (some readers stop at 255).
inline void write_terms(std::ostringstream& out, const LpTerms& terms,
                        std::size_t& col) {
  bool first = true;
  for (const auto& [c, name] : terms) {
    std::string piece;
    if (c < 0) {
      piece = "- ";
    } else if (!first) {
      piece = "+ ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) piece += std::to_string(mag) + " ";
    piece += name;
    if (col + piece.size() + 1 > 200) {
      out << "\n   ";
      col = 3;
    }
    out << ' ' << piece;
    col += piece.size() + 1;
    first = false;
  }
}

inline const char* sense_text(Sense s) {
  switch (s) {
    case Sense::kLe:
      return "<=";
    case Sense::kGe:
      return ">=";
    case Sense::kEq:
      return "=";
  }
  return "=";
}

}  // namespace detail

// Rows with no terms are written as "0 <first variable>" so every reader
// accepts them.
inline std::string write_lp(const LpModel& m) {
  if (m.vars.empty()) throw std::invalid_argument("model has no variables");
  std::ostringstream out;
  out << "\\ " << m.title << '\n';
  for (const auto& note : m.notes) out << "\\ " << note << '\n';
  out << "Minimize\n obj:";
  std::size_t col = 5;
  LpTerms obj = m.objective;
  if (obj.empty()) obj.push_back({0, m.vars.front().name});
  detail::write_terms(out, obj, col);
  if (m.objective_constant > 0) out << " + " << m.objective_constant;
  if (m.objective_constant < 0) out << " - " << -m.objective_constant;
  out << "\nSubject To\n";
  for (const auto& r : m.rows) {
    out << ' ' << r.name << ':';
    col = r.name.size() + 2;
    LpTerms t = r.terms;
    if (t.empty()) t.push_back({0, m.vars.front().name});
    detail::write_terms(out, t, col);
    out << ' ' << detail::sense_text(r.sense) << ' ' << r.rhs << '\n';
  }
  bool any_int = false;
  for (const auto& v : m.vars) any_int = any_int || v.type == VarType::kInteger;
  if (any_int) {
    out << "Bounds\n";
    for (const auto& v : m.vars) {
      if (v.type == VarType::kInteger) {
        out << ' ' << v.lo << " <= " << v.name << " <= " << v.hi << '\n';
      }
    }
  }
  out << "Binaries\n";
  for (const auto& v : m.vars) {
    if (v.type == VarType::kBinary) out << ' ' << v.name << '\n';
  }
  if (any_int) {
    out << "Generals\n";
    for (const auto& v : m.vars) {
      if (v.type == VarType::kInteger) out << ' ' << v.name << '\n';
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace mindouble
