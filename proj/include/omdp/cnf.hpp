#pragma once

// Propositional formulas in conjunctive normal form, DIMACS text, and solver
// output parsing.

#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "omdp/errors.hpp"

namespace omdp {

class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(int variable, bool positive) : code_(positive ? variable : -variable) {}
  static constexpr Literal from_dimacs(int code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr int variable() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr int dimacs() const { return code_; }
  constexpr Literal operator~() const { return from_dimacs(-code_); }
  constexpr bool operator==(const Literal&) const = default;
  constexpr auto operator<=>(const Literal&) const = default;

 private:
  int code_ = 0;
};

using Clause = std::vector<Literal>;

// Values indexed by variable; index 0 unused.
using Assignment = std::vector<bool>;

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int variable_count) : variable_count_(variable_count) {}

  int variable_count() const { return variable_count_; }
  void reserve_variables(int count) {
    if (count > variable_count_) variable_count_ = count;
  }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  const std::vector<std::string>& comments() const { return comments_; }

  void add_comment(std::string line) { comments_.push_back(std::move(line)); }

  void add(Clause clause) {
    if (clause.empty()) throw DomainError("empty clause");
    for (auto l : clause) {
      if (l.variable() < 1) throw DomainError("literal on variable 0");
      reserve_variables(l.variable());
    }
    clauses_.push_back(std::move(clause));
  }

  void append(const CnfFormula& other) {
    reserve_variables(other.variable_count_);
    clauses_.insert(clauses_.end(), other.clauses_.begin(), other.clauses_.end());
  }

 private:
  int variable_count_ = 0;
  std::vector<Clause> clauses_;
  std::vector<std::string> comments_;
};

inline bool satisfies(const Clause& c, const Assignment& a) {
  for (auto l : c)
    if (a[static_cast<std::size_t>(l.variable())] == l.positive()) return true;
  return false;
}

// Index of the first falsified clause, or nullopt when every clause holds.
inline std::optional<std::size_t> first_falsified(const CnfFormula& f, const Assignment& a) {
  if (a.size() < static_cast<std::size_t>(f.variable_count()) + 1) return 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!satisfies(f.clauses()[i], a)) return i;
  return std::nullopt;
}

inline void write_dimacs(std::ostream& os, const CnfFormula& f) {
  for (const auto& c : f.comments()) os << "c " << c << '\n';
  os << "p cnf " << f.variable_count() << ' ' << f.size() << '\n';
  std::string line;
  for (const auto& c : f.clauses()) {
    line.clear();
    for (auto l : c) {
      line += std::to_string(l.dimacs());
      line += ' ';
    }
    line += "0\n";
    os << line;
  }
}

inline std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  write_dimacs(os, f);
  return os.str();
}

inline CnfFormula parse_dimacs(std::istream& is) {
  CnfFormula f;
  std::string line;
  bool header = false;
  long declared_clauses = 0;
  Clause cur;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty()) continue;
    if (sv.front() == 'c') {
      auto rest = sv.substr(1);
      if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      f.add_comment(std::string(rest));
      continue;
    }
    if (sv.front() == 'p') {
      std::istringstream ps{std::string(sv)};
      std::string p, cnf;
      long vars = -1;
      if (!(ps >> p >> cnf >> vars >> declared_clauses) || cnf != "cnf" || vars < 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad problem line: " + line);
      f.reserve_variables(static_cast<int>(vars));
      header = true;
      continue;
    }
    if (!header) throw ParseError("line " + std::to_string(lineno) + ": clause before problem line: " + line);
    std::istringstream ls{std::string(sv)};
    long x;
    while (ls >> x) {
      if (x == 0) {
        f.add(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(Literal::from_dimacs(static_cast<int>(x)));
      }
    }
    if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": bad literal: " + line);
  }
  if (!cur.empty()) throw ParseError("unterminated final clause");
  if (static_cast<long>(f.size()) != declared_clauses)
    throw ParseError("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.size()));
  return f;
}

enum class SolutionStatus { sat, unsat, unknown };

struct ParsedSolution {
  SolutionStatus status = SolutionStatus::unknown;
  Assignment assignment;  // filled when sat; index 0 unused
};

// Reads competition-format solver output: an "s" status line and "v" value
// lines. Variables missing from the value lines are set false.
inline ParsedSolution parse_solution(std::istream& is, int variable_count) {
  ParsedSolution out;
  out.assignment.assign(static_cast<std::size_t>(variable_count) + 1, false);
  bool seen_status = false;
  bool seen_terminator = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("s ", 0) == 0) {
      auto s = line.substr(2);
      while (!s.empty() && s.back() == ' ') s.pop_back();
      if (s == "SATISFIABLE") {
        out.status = SolutionStatus::sat;
      } else if (s == "UNSATISFIABLE") {
        out.status = SolutionStatus::unsat;
      } else if (s == "UNKNOWN") {
        out.status = SolutionStatus::unknown;
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unrecognized status: " + line);
      }
      seen_status = true;
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      std::istringstream vs(line.substr(1));
      std::string tok;
      while (vs >> tok) {
        char* end = nullptr;
        long x = std::strtol(tok.c_str(), &end, 10);
        if (*end != '\0') throw ParseError("line " + std::to_string(lineno) + ": bad value token: " + line);
        if (x == 0) {
          seen_terminator = true;
          continue;
        }
        const long v = x < 0 ? -x : x;
        if (v > variable_count) continue;  // solvers may report eliminated extras
        out.assignment[static_cast<std::size_t>(v)] = x > 0;
      }
    }
  }
  if (!seen_status) throw ParseError("no status line in solver output");
  if (out.status == SolutionStatus::sat && !seen_terminator)
    throw ParseError("satisfiable output without a terminated value list");
  if (out.status != SolutionStatus::sat) out.assignment.clear();
  return out;
}

inline ParsedSolution parse_solution(const std::string& text, int variable_count) {
  std::istringstream is(text);
  return parse_solution(is, variable_count);
}

// Competition-format output for an assignment.
inline std::string format_solution(SolutionStatus status, const Assignment& a) {
  std::ostringstream os;
  switch (status) {
    case SolutionStatus::sat: os << "s SATISFIABLE\n"; break;
    case SolutionStatus::unsat: os << "s UNSATISFIABLE\n"; break;
    case SolutionStatus::unknown: os << "s UNKNOWN\n"; break;
  }
  if (status == SolutionStatus::sat) {
    std::string line = "v";
    for (std::size_t v = 1; v < a.size(); ++v) {
      line += ' ';
      line += a[v] ? std::to_string(v) : "-" + std::to_string(v);
      if (line.size() > 70) {
        os << line << '\n';
        line = "v";
      }
    }
    os << line << " 0\n";
  }
  return os.str();
}

}  // namespace omdp
