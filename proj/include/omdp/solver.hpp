#pragma once

// Solving CNF instances with the embedded CDCL solver or an external solver
// process, and decoding models into chirotopes.

#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "omdp/cdcl.hpp"
#include "omdp/chirotope.hpp"
#include "omdp/cnf.hpp"
#include "omdp/encoder.hpp"
#include "omdp/errors.hpp"

extern char** environ;

namespace omdp {

enum class Backend { embedded, external };

inline constexpr std::string_view kCnfPlaceholder = "{cnf}";

struct SolverConfig {
  Backend backend = Backend::embedded;
  std::string external_command;  // must contain {cnf} exactly once
  double timeout_seconds = 3600;
  int parallel_instances = 1;
  std::uint64_t seed = cdcl::Options{}.seed;

  // Applies OMDP_SOLVER_CMD when set.
  static SolverConfig with_environment(SolverConfig base) {
    if (const char* cmd = std::getenv("OMDP_SOLVER_CMD"); cmd && *cmd) {
      base.external_command = cmd;
      base.backend = Backend::external;
    }
    return base;
  }

  void validate() const {
    if (!(timeout_seconds > 0)) throw DomainError("solver timeout must be positive");
    if (parallel_instances < 1) throw DomainError("parallel_instances must be at least 1");
    if (backend == Backend::external) {
      const auto first = external_command.find(kCnfPlaceholder);
      if (first == std::string::npos || external_command.find(kCnfPlaceholder, first + 1) != std::string::npos)
        throw DomainError("external solver command must contain {cnf} exactly once");
    }
  }
};

enum class SolveStatus { sat, unsat, timeout, error };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::sat: return "sat";
    case SolveStatus::unsat: return "unsat";
    case SolveStatus::timeout: return "timeout";
    case SolveStatus::error: return "error";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::error;
  std::optional<Assignment> assignment;  // present iff sat; index 0 unused
  double wall_seconds = 0;
  std::string backend;  // "embedded" or the external command
  std::string diagnostics;
  std::string raw_output;  // external solver stdout+stderr
  cdcl::Stats stats;       // embedded backend only
};

inline SolveResult solve_embedded(const CnfFormula& formula, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult out;
  out.backend = "embedded";
  cdcl::Options opts;
  opts.seed = config.seed;
  cdcl::Solver s(opts);
  s.load(formula);
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(config.timeout_seconds));
  const auto r = s.solve(deadline);
  out.stats = s.stats();
  switch (r) {
    case cdcl::Result::sat: {
      out.status = SolveStatus::sat;
      Assignment a = s.model();
      a.resize(static_cast<std::size_t>(formula.variable_count()) + 1, false);
      out.assignment = std::move(a);
      break;
    }
    case cdcl::Result::unsat: out.status = SolveStatus::unsat; break;
    case cdcl::Result::unknown: out.status = SolveStatus::timeout; break;
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

namespace detail {

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace detail

// Writes the CNF to `work_dir/instance.cnf`, runs the command with its output
// captured in `work_dir/solver.out`, and parses the status and value lines.
// Exit codes are ignored.
inline SolveResult solve_external(const CnfFormula& formula, const SolverConfig& config,
                                  const std::filesystem::path& work_dir) {
  namespace fs = std::filesystem;
  const auto start = std::chrono::steady_clock::now();
  SolveResult out;
  out.backend = config.external_command;
  try {
    config.validate();
  } catch (const DomainError& e) {
    out.status = SolveStatus::error;
    out.diagnostics = e.what();
    return out;
  }
  fs::create_directories(work_dir);
  const auto cnf_path = work_dir / "instance.cnf";
  const auto out_path = work_dir / "solver.out";
  if (!fs::exists(cnf_path)) {
    std::ofstream os(cnf_path, std::ios::binary);
    write_dimacs(os, formula);
  }
  std::string cmd = config.external_command;
  cmd.replace(cmd.find(kCnfPlaceholder), kCnfPlaceholder.size(), detail::shell_quote(cnf_path.string()));
  const std::string shell = "exec " + cmd + " > " + detail::shell_quote(out_path.string()) + " 2>&1";

  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);
  pid_t pid = 0;
  const char* argv[] = {"/bin/sh", "-c", shell.c_str(), nullptr};
  const int rc = posix_spawn(&pid, "/bin/sh", nullptr, &attr, const_cast<char* const*>(argv), environ);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) {
    out.status = SolveStatus::error;
    out.diagnostics = "failed to spawn solver: " + std::string(std::strerror(rc));
    return out;
  }
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(config.timeout_seconds));
  bool timed_out = false;
  int wstatus = 0;
  for (;;) {
    const pid_t w = waitpid(pid, &wstatus, WNOHANG);
    if (w == pid) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &wstatus, 0);
      timed_out = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.raw_output = detail::read_file(out_path);
  if (timed_out) {
    out.status = SolveStatus::timeout;
    return out;
  }
  try {
    auto sol = parse_solution(out.raw_output, formula.variable_count());
    switch (sol.status) {
      case SolutionStatus::sat:
        out.status = SolveStatus::sat;
        out.assignment = std::move(sol.assignment);
        break;
      case SolutionStatus::unsat: out.status = SolveStatus::unsat; break;
      case SolutionStatus::unknown:
        out.status = SolveStatus::error;
        out.diagnostics = "solver reported UNKNOWN";
        break;
    }
  } catch (const ParseError& e) {
    out.status = SolveStatus::error;
    out.diagnostics = std::string("unparsable solver output: ") + e.what();
  }
  return out;
}

// External runs without a work directory use a private temporary directory
// that is removed afterwards.
inline SolveResult solve(const CnfFormula& formula, const SolverConfig& config,
                         std::optional<std::filesystem::path> work_dir = std::nullopt) {
  namespace fs = std::filesystem;
  if (config.backend == Backend::embedded) return solve_embedded(formula, config);
  if (work_dir) return solve_external(formula, config, *work_dir);
  auto tmpl = (fs::temp_directory_path() / "omdp-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) {
    SolveResult r;
    r.status = SolveStatus::error;
    r.diagnostics = "cannot create temporary directory";
    return r;
  }
  const fs::path dir(tmpl);
  auto r = solve_external(formula, config, dir);
  std::error_code ec;
  fs::remove_all(dir, ec);
  return r;
}

// Basis variable i true means chi = +1 on the i-th colex basis. The decoded
// chirotope must satisfy the Grassmann-Pluecker condition.
inline Chirotope decode_model(const SolveResult& result, const VarMap& vm) {
  if (result.status != SolveStatus::sat || !result.assignment)
    throw StateError("cannot decode a model from a " + std::string(to_string(result.status)) + " result");
  const auto& a = *result.assignment;
  if (a.size() < static_cast<std::size_t>(vm.basis_count()) + 1) throw StateError("assignment does not cover every basis variable");
  std::vector<std::int8_t> signs(static_cast<std::size_t>(vm.basis_count()));
  for (int v = 1; v <= vm.basis_count(); ++v) signs[static_cast<std::size_t>(v - 1)] = a[static_cast<std::size_t>(v)] ? 1 : -1;
  Chirotope chi(vm.ground(), std::move(signs));
  if (auto viol = check_gp3(chi); !viol.empty())
    throw InternalConsistencyError("decoded model violates the chirotope condition at context " + format_tuple(viol.front().context) +
                                   " quadruple " + format_tuple(viol.front().quadruple));
  return chi;
}

}  // namespace omdp
