#pragma once

// Named, resumable theorem campaigns: instance construction, concurrent
// solving, soundness re-verification of models, and on-disk verdict manifests.

#include <openssl/evp.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "omdp/analysis.hpp"
#include "omdp/encoder.hpp"
#include "omdp/errors.hpp"
#include "omdp/fixtures.hpp"
#include "omdp/paths.hpp"
#include "omdp/program.hpp"
#include "omdp/solver.hpp"

namespace omdp {

enum class Tier { fast, extended, opt_in };

inline std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::fast: return "fast";
    case Tier::extended: return "extended";
    case Tier::opt_in: return "opt-in";
  }
  return "?";
}

inline Tier parse_tier(std::string_view s) {
  if (s == "fast") return Tier::fast;
  if (s == "extended") return Tier::extended;
  if (s == "opt-in") return Tier::opt_in;
  throw DomainError("unknown tier '" + std::string(s) + "'");
}

inline EncodingMode parse_mode(std::string_view s) {
  if (s == "paper-exact") return EncodingMode::paper_exact;
  if (s == "extended") return EncodingMode::extended;
  throw DomainError("unknown mode '" + std::string(s) + "'");
}

inline SolveStatus parse_status(std::string_view s) {
  for (auto st : {SolveStatus::sat, SolveStatus::unsat, SolveStatus::timeout, SolveStatus::error})
    if (to_string(st) == s) return st;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

// One path catalog excluded from every instance of a case.
struct PathCatalog {
  std::string name;
  std::vector<PathType> paths;
};

struct CampaignInstance {
  std::string id;
  std::optional<PathType> enforced;
  std::optional<FacetVertexMatrix> matrix;  // digraph checks: one column block per vertex
  SolveStatus expected = SolveStatus::unsat;
};

// Extra property checks on a decoded model; returns failure messages.
using ModelCheck = std::function<std::vector<std::string>(const Chirotope&, const OmpDigraph&)>;

struct CampaignCase {
  std::string name;
  std::string description;
  int d = 0;
  int n = 0;
  Tier tier = Tier::fast;
  EncodingMode mode = EncodingMode::extended;
  std::optional<EndpointConstraints> endpoints;  // none for matrix checks
  bool anchor = true;
  std::vector<PathCatalog> exclusions;
  PathConditionOptions path_options;
  std::vector<CampaignInstance> instances;
  ModelCheck model_check;

  void validate() const {
    if (instances.empty()) throw DomainError("case " + name + " has no instances");
    GroundSet(d, n);
    for (const auto& c : exclusions)
      if (c.paths.empty()) throw DomainError("case " + name + " references empty catalog " + c.name);
  }
};

// Builds the CNF of one instance in the case's current mode.
inline InstanceBuilder build_instance(const CampaignCase& c, const CampaignInstance& inst) {
  InstanceBuilder b(GroundSet(c.d, c.n));
  b.comment("case " + c.name).comment("instance " + inst.id).comment("mode " + std::string(to_string(c.mode)));
  b.axioms();
  if (c.anchor) b.anchor();
  if (c.endpoints) {
    auto ec = *c.endpoints;
    ec.mode = c.mode;
    b.endpoints(ec);
  }
  if (inst.matrix)
    for (std::size_t j = 0; j < inst.matrix->columns(); ++j) b.column(inst.matrix->column(j));
  for (const auto& cat : c.exclusions) {
    b.comment("exclude " + cat.name + " " + std::to_string(cat.paths.size()));
    b.exclude(cat.paths, c.path_options);
  }
  if (inst.enforced) {
    b.comment("enforce " + inst.id);
    b.enforce(*inst.enforced, c.path_options);
  }
  return b;
}

struct InstanceRecord {
  std::string id;
  SolveStatus expected = SolveStatus::unsat;
  SolveStatus status = SolveStatus::error;
  int variables = 0;
  std::size_t clauses = 0;
  std::string cnf_sha256;
  double wall_seconds = 0;
  std::string solver;
  bool cached = false;
  std::vector<std::string> artifacts;
  std::string diagnostics;
  // Present only for sat outcomes.
  std::optional<nlohmann::json> digraph_report;
  std::optional<std::string> facet_vertex_matrix;
  std::vector<std::string> soundness_failures;

  bool matches() const { return status == expected && soundness_failures.empty(); }
};

inline nlohmann::json to_json(const InstanceRecord& r) {
  nlohmann::json j{{"id", r.id},
                   {"expected", to_string(r.expected)},
                   {"status", to_string(r.status)},
                   {"matches", r.matches()},
                   {"variables", r.variables},
                   {"clauses", r.clauses},
                   {"cnf_sha256", r.cnf_sha256},
                   {"wall_seconds", r.wall_seconds},
                   {"solver", r.solver},
                   {"cached", r.cached},
                   {"artifacts", r.artifacts},
                   {"diagnostics", r.diagnostics},
                   {"soundness_failures", r.soundness_failures}};
  j["digraph_report"] = r.digraph_report ? *r.digraph_report : nlohmann::json(nullptr);
  j["facet_vertex_matrix"] = r.facet_vertex_matrix ? nlohmann::json(*r.facet_vertex_matrix) : nlohmann::json(nullptr);
  return j;
}

inline InstanceRecord record_from_json(const nlohmann::json& j) {
  InstanceRecord r;
  r.id = j.at("id").get<std::string>();
  r.expected = parse_status(j.at("expected").get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  r.variables = j.at("variables").get<int>();
  r.clauses = j.at("clauses").get<std::size_t>();
  r.cnf_sha256 = j.at("cnf_sha256").get<std::string>();
  r.wall_seconds = j.at("wall_seconds").get<double>();
  r.solver = j.at("solver").get<std::string>();
  r.artifacts = j.at("artifacts").get<std::vector<std::string>>();
  r.diagnostics = j.at("diagnostics").get<std::string>();
  r.soundness_failures = j.at("soundness_failures").get<std::vector<std::string>>();
  if (!j.at("digraph_report").is_null()) r.digraph_report = j.at("digraph_report");
  if (!j.at("facet_vertex_matrix").is_null()) r.facet_vertex_matrix = j.at("facet_vertex_matrix").get<std::string>();
  return r;
}

struct VerdictManifest {
  std::string case_name;
  std::string mode;
  int d = 0;
  int n = 0;
  std::vector<InstanceRecord> records;
  bool complete = true;  // false when fail-fast skipped instances

  bool theorem_holds() const {
    return complete && !records.empty() && std::all_of(records.begin(), records.end(), [](const auto& r) { return r.matches(); });
  }
};

inline nlohmann::json to_json(const VerdictManifest& m) {
  auto recs = nlohmann::json::array();
  for (const auto& r : m.records) recs.push_back(to_json(r));
  return {{"case", m.case_name}, {"mode", m.mode},         {"d", m.d}, {"n", m.n}, {"complete", m.complete},
          {"instances", recs},   {"verdict", m.theorem_holds() ? "theorem holds" : "theorem not established"}};
}

// Recomputes the verdict from the serialized records alone.
inline bool manifest_verdict(const nlohmann::json& j) {
  if (!j.at("complete").get<bool>()) return false;
  const auto& inst = j.at("instances");
  if (inst.empty()) return false;
  for (const auto& r : inst)
    if (r.at("expected") != r.at("status") || !r.at("soundness_failures").empty()) return false;
  return true;
}

struct CampaignConfig {
  SolverConfig solver;
  std::filesystem::path results_dir = "results";
  int jobs = 1;
  bool keep_artifacts = false;
  bool force = false;
  bool fail_fast = false;
  bool write_results = true;  // false keeps everything in memory
};

// Key = value lines; '#' starts a comment; string values may be quoted.
// Recognized keys: solver_cmd, backend, timeout, jobs, seed, results_dir,
// keep_artifacts, fail_fast.
inline CampaignConfig parse_config(std::istream& in, CampaignConfig base = {}) {
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  auto as_bool = [&](const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ParseError("line " + std::to_string(lineno) + ": expected true or false, got '" + v + "'");
  };
  auto as_number = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      const double x = std::stod(v, &used);
      if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw ParseError("line " + std::to_string(lineno) + ": expected a number, got '" + v + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "solver_cmd") {
      base.solver.external_command = value;
      base.solver.backend = Backend::external;
    } else if (key == "backend") {
      if (value == "embedded") base.solver.backend = Backend::embedded;
      else if (value == "external") base.solver.backend = Backend::external;
      else throw ParseError("line " + std::to_string(lineno) + ": unknown backend '" + value + "'");
    } else if (key == "timeout") {
      base.solver.timeout_seconds = as_number(value);
    } else if (key == "jobs") {
      base.jobs = static_cast<int>(as_number(value));
    } else if (key == "seed") {
      base.solver.seed = static_cast<std::uint64_t>(as_number(value));
    } else if (key == "results_dir") {
      base.results_dir = value;
    } else if (key == "keep_artifacts") {
      base.keep_artifacts = as_bool(value);
    } else if (key == "fail_fast") {
      base.fail_fast = as_bool(value);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  base.solver.parallel_instances = base.jobs;
  return base;
}

inline CampaignConfig load_config(const std::filesystem::path& p, CampaignConfig base = {}) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot read config file " + p.string());
  return parse_config(in, std::move(base));
}

namespace detail {

inline std::string safe_dir_name(std::string id) {
  for (char& c : id)
    if (c == '/' || c == ' ') c = '_';
  return id;
}

// Soundness re-verification of a sat outcome, independent of the solver.
inline void analyze_model(const CampaignCase& c, const CampaignInstance& inst, const CnfFormula& f, const VarMap& vm,
                          const SolveResult& res, InstanceRecord& rec) {
  if (auto bad = first_falsified(f, *res.assignment)) {
    rec.soundness_failures.push_back("assignment falsifies clause " + std::to_string(*bad));
    return;
  }
  const Chirotope chi = decode_model(res, vm);
  const auto dg = program_digraph(chi);
  rec.digraph_report = to_json(digraph_checks(dg));
  rec.facet_vertex_matrix = emit(facet_vertex_matrix(dg));

  for (const auto& cat : c.exclusions)
    for (const auto& p : cat.paths) {
      // Exclusions only speak about paths whose start edge is oriented by
      // the source constraints or by the condition itself.
      if (digraph_contains_path(dg, p)) {
        rec.soundness_failures.push_back("excluded path present: " + format_tuple(p.sorted_labels().front()) + " ... in " + cat.name);
        break;
      }
    }
  if (inst.enforced) {
    const auto L = inst.enforced->sorted_labels();
    const std::size_t first = c.path_options.include_start_edge ? 0 : 1;
    for (std::size_t i = 1; i + 1 < L.size(); ++i)
      if (!dg.index_of(L[i])) rec.soundness_failures.push_back("enforced label " + format_tuple(L[i]) + " is not a vertex");
    for (std::size_t i = first; i + 1 < L.size(); ++i) {
      const auto a = dg.index_of(L[i]);
      const auto b = dg.index_of(L[i + 1]);
      if (a && b && !dg.has_arc(*a, *b))
        rec.soundness_failures.push_back("enforced arc " + format_tuple(L[i]) + " -> " + format_tuple(L[i + 1]) + " missing");
    }
  }
  if (inst.matrix) {
    const auto back = facet_vertex_matrix(dg);
    if (back.column_set() != inst.matrix->column_set())
      rec.soundness_failures.push_back("decoded facet-vertex matrix differs from the input matrix");
  }
  if (c.model_check)
    for (auto& msg : c.model_check(chi, dg)) rec.soundness_failures.push_back(std::move(msg));
}

}  // namespace detail

// Builds, solves and checks one instance. When `dir` is set, artifacts and
// record.json go there and a previous record with the same CNF hash is reused.
inline InstanceRecord run_instance(const CampaignCase& c, const CampaignInstance& inst, const CampaignConfig& config,
                                   std::optional<std::filesystem::path> dir) {
  namespace fs = std::filesystem;
  auto builder = build_instance(c, inst);
  const auto formula = builder.build();
  const auto text = emit_dimacs(formula);
  InstanceRecord rec;
  rec.id = inst.id;
  rec.expected = inst.expected;
  rec.variables = formula.variable_count();
  rec.clauses = formula.size();
  rec.cnf_sha256 = sha256_hex(text);

  if (dir && !config.force && fs::exists(*dir / "record.json")) {
    try {
      std::ifstream in(*dir / "record.json");
      auto old = record_from_json(nlohmann::json::parse(in));
      if (old.cnf_sha256 == rec.cnf_sha256 && (old.status == SolveStatus::sat || old.status == SolveStatus::unsat)) {
        old.cached = true;
        old.expected = inst.expected;
        return old;
      }
    } catch (const std::exception&) {
      // unreadable record: solve again
    }
  }

  SolveResult res;
  if (dir) {
    fs::create_directories(*dir);
    {
      std::ofstream os(*dir / "instance.cnf", std::ios::binary);
      os << text;
    }
    res = solve(formula, config.solver, *dir);
    if (config.solver.backend == Backend::embedded) {
      std::ofstream os(*dir / "solver.out");
      os << "c embedded solver, conflicts " << res.stats.conflicts << "\n";
      if (res.status == SolveStatus::sat) os << format_solution(SolutionStatus::sat, *res.assignment);
      else if (res.status == SolveStatus::unsat) os << format_solution(SolutionStatus::unsat, {});
      else os << format_solution(SolutionStatus::unknown, {});
    }
  } else {
    res = solve(formula, config.solver);
  }
  rec.status = res.status;
  rec.wall_seconds = res.wall_seconds;
  rec.solver = res.backend;
  rec.diagnostics = res.diagnostics;

  if (res.status == SolveStatus::sat) {
    try {
      detail::analyze_model(c, inst, formula, builder.vars(), res, rec);
    } catch (const std::exception& e) {
      if (rec.soundness_failures.empty()) rec.soundness_failures.push_back(std::string("model analysis failed: ") + e.what());
    }
  }

  if (dir) {
    if (config.keep_artifacts) {
      rec.artifacts = {(*dir / "instance.cnf").string(), (*dir / "solver.out").string()};
    } else {
      std::error_code ec;
      fs::remove(*dir / "instance.cnf", ec);
      fs::remove(*dir / "solver.out", ec);
    }
    std::ofstream os(*dir / "record.json");
    os << to_json(rec).dump(2) << "\n";
  }
  return rec;
}

// Runs every instance of the case with up to config.jobs concurrent solves.
// Records keep the case's instance order regardless of completion order.
inline VerdictManifest run_theorem(const CampaignCase& c, const CampaignConfig& config,
                                   const std::function<void(const InstanceRecord&)>& progress = {}) {
  namespace fs = std::filesystem;
  c.validate();
  config.solver.validate();
  if (config.jobs < 1) throw DomainError("jobs must be at least 1");
  VerdictManifest m;
  m.case_name = c.name;
  m.mode = std::string(to_string(c.mode));
  m.d = c.d;
  m.n = c.n;
  const fs::path case_dir = config.results_dir / c.name;
  std::vector<std::optional<InstanceRecord>> slots(c.instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex io;
  auto worker = [&] {
    for (;;) {
      if (stop) return;
      const auto i = next++;
      if (i >= c.instances.size()) return;
      const auto& inst = c.instances[i];
      std::optional<fs::path> dir;
      if (config.write_results) dir = case_dir / detail::safe_dir_name(inst.id);
      InstanceRecord rec;
      try {
        rec = run_instance(c, inst, config, dir);
      } catch (const std::exception& e) {
        rec.id = inst.id;
        rec.expected = inst.expected;
        rec.status = SolveStatus::error;
        rec.diagnostics = e.what();
      }
      if (config.fail_fast && !rec.matches()) stop = true;
      std::lock_guard lock(io);
      if (progress) progress(rec);
      slots[i] = std::move(rec);
    }
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(c.instances.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& s : slots) {
    if (s) m.records.push_back(std::move(*s));
    else m.complete = false;
  }
  if (config.write_results) {
    fs::create_directories(case_dir);
    std::ofstream os(case_dir / "manifest.json");
    os << to_json(m).dump(2) << "\n";
  }
  return m;
}

// ---------------------------------------------------------------------------
// Case registry

namespace cases {

inline EndpointConstraints strict_endpoints(int d, int n) {
  return EndpointConstraints{source_label(d), true, sink_label(d, n), false, EncodingMode::extended};
}

inline std::vector<CampaignInstance> enforce_each(const std::vector<PathFamily>& fams) {
  std::vector<CampaignInstance> out;
  for (const auto& f : fams) out.push_back(CampaignInstance{f.id, f.templ, std::nullopt, SolveStatus::unsat});
  return out;
}

inline CampaignCase sm_4_8() {
  CampaignCase c{"sm-4-8", "no strictly monotone (4,8) program has source-to-sink distance 5 or more", 4, 8, Tier::fast};
  c.endpoints = strict_endpoints(4, 8);
  c.exclusions = {{"direct-4-8", direct_path_types(4, 8)}};
  c.instances = {CampaignInstance{"sm-4-8"}};
  return c;
}

inline CampaignCase sm_4_9() {
  CampaignCase c{"sm-4-9", "strict (4,9): every shortest path of length 6 is impossible", 4, 9, Tier::fast};
  c.endpoints = strict_endpoints(4, 9);
  const auto len5 = revisit_families("sm-4-9-len5");
  c.exclusions = {{"direct-4-9", direct_path_types(4, 9)}, {"sm-4-9-len5", expand_relabelings(len5)}};
  c.instances = enforce_each(revisit_families("sm-4-9-len6"));
  return c;
}

inline CampaignCase sm_5_10() {
  CampaignCase c{"sm-5-10", "strict (5,10): every one-revisit path of length 6 is impossible", 5, 10, Tier::extended};
  c.endpoints = strict_endpoints(5, 10);
  c.exclusions = {{"direct-5-10", direct_path_types(5, 10)}};
  c.instances = enforce_each(revisit_families("sm-5-10-len6"));
  return c;
}

inline CampaignCase sm_5_10_len7() {
  CampaignCase c{"sm-5-10-len7", "strict (5,10): the nonrevisiting length-7 paths on facets 6,7 are impossible", 5, 10,
                 Tier::extended};
  c.endpoints = strict_endpoints(5, 10);
  c.exclusions = {{"direct-5-10", direct_path_types(5, 10)}};
  c.instances = enforce_each(revisit_families("m-5-10-len7"));
  return c;
}

// The start vertex is only required to be a vertex, so every path condition
// also orients the first edge.
inline CampaignCase m_5_10() {
  CampaignCase c{"m-5-10", "monotone (5,10): no shortest path of length 7 from [1..5] to the sink", 5, 10, Tier::opt_in};
  c.endpoints = EndpointConstraints{source_label(5), false, sink_label(5, 10), false, EncodingMode::extended};
  c.path_options.include_start_edge = true;
  c.exclusions = {{"direct-5-10", direct_path_types(5, 10)}, {"sm-5-10-len6", expand_relabelings(revisit_families("sm-5-10-len6"))}};
  c.instances = enforce_each(revisit_families("m-5-10-len7"));
  return c;
}

inline CampaignCase matrix_case(std::string name, std::string description, int d, std::string_view text, SolveStatus expected,
                                Tier tier, ModelCheck check = {}) {
  auto m = parse_facet_vertex_matrix(std::string(text), d);
  CampaignCase c{std::move(name), std::move(description), d, m.facets(), tier};
  c.anchor = true;
  c.instances = {CampaignInstance{c.name, std::nullopt, std::move(m), expected}};
  c.model_check = std::move(check);
  return c;
}

inline ModelCheck expect_distance(Tuple from, Tuple to, std::size_t dist) {
  return [=](const Chirotope&, const OmpDigraph& dg) {
    std::vector<std::string> out;
    const auto got = shortest_monotone_distance(dg, from, to);
    if (got != dist)
      out.push_back("distance " + format_tuple(from) + " -> " + format_tuple(to) + " is " + (got ? std::to_string(*got) : "unreachable") +
                    ", expected " + std::to_string(dist));
    return out;
  };
}

inline CampaignCase holt_klee() {
  return matrix_case("holt-klee", "the Holt-Klee (5,10) digraph is not an oriented matroid program", 5, fixtures::kHoltKlee,
                     SolveStatus::unsat, Tier::extended);
}

inline CampaignCase fixture_4_9() {
  return matrix_case("fixture-4-9", "the (4,9) matrix is a program with distance 6 from [1,2,3,4] to [6,7,8,9]", 4,
                     fixtures::kDim4Facets9, SolveStatus::sat, Tier::fast, expect_distance({1, 2, 3, 4}, {6, 7, 8, 9}, 6));
}

inline CampaignCase fixture_5_10_outmap4() {
  auto dist = expect_distance({1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}, 6);
  return matrix_case("fixture-5-10-outmap4", "a (5,10) program with distance 6 and outmap size 4 at [1..5]", 5,
                     fixtures::kDim5Facets10Outmap4, SolveStatus::sat, Tier::fast, [dist](const Chirotope& chi, const OmpDigraph& dg) {
                       auto out = dist(chi, dg);
                       const auto v = dg.index_of(Tuple{1, 2, 3, 4, 5});
                       if (!v || dg.outmap(*v).size() != 4) out.push_back("outmap of [1,2,3,4,5] does not have size 4");
                       return out;
                     });
}

inline CampaignCase fixture_5_10_source_neighbor() {
  auto dist = expect_distance({1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}, 6);
  return matrix_case("fixture-5-10-source-neighbor", "a (5,10) program with distance 6 whose source is a neighbor of [1..5]", 5,
                     fixtures::kDim5Facets10SourceNeighbor, SolveStatus::sat, Tier::fast,
                     [dist](const Chirotope& chi, const OmpDigraph& dg) {
                       auto out = dist(chi, dg);
                       const auto v = dg.index_of(Tuple{1, 2, 3, 4, 5});
                       std::size_t sources = 0;
                       bool neighbor = false;
                       for (std::size_t u = 0; u < dg.size(); ++u) {
                         if (!dg.in(u).empty()) continue;
                         ++sources;
                         neighbor = v && dg.has_arc(u, *v);
                       }
                       if (sources != 1 || !neighbor) out.push_back("the unique source is not a neighbor of [1,2,3,4,5]");
                       return out;
                     });
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"sm-4-8",      "sm-4-9",      "sm-5-10", "sm-5-10-len7", "m-5-10", "holt-klee",
                                          "fixture-4-9", "fixture-5-10-outmap4", "fixture-5-10-source-neighbor"};
  return n;
}

inline CampaignCase by_name(std::string_view name) {
  if (name == "sm-4-8") return sm_4_8();
  if (name == "sm-4-9") return sm_4_9();
  if (name == "sm-5-10") return sm_5_10();
  if (name == "sm-5-10-len7") return sm_5_10_len7();
  if (name == "m-5-10") return m_5_10();
  if (name == "holt-klee") return holt_klee();
  if (name == "fixture-4-9") return fixture_4_9();
  if (name == "fixture-5-10-outmap4") return fixture_5_10_outmap4();
  if (name == "fixture-5-10-source-neighbor") return fixture_5_10_source_neighbor();
  throw DomainError("unknown case '" + std::string(name) + "'");
}

}  // namespace cases

// Matrix check for an arbitrary facet-vertex matrix: the matrix is a program
// digraph iff the instance is sat.
inline VerdictManifest check_digraph(const FacetVertexMatrix& matrix, const CampaignConfig& config, std::string name = "check-digraph",
                                     std::optional<SolveStatus> expected = std::nullopt) {
  CampaignCase c{std::move(name), "facet-vertex matrix check", matrix.d(), matrix.facets(), Tier::fast};
  c.instances = {CampaignInstance{c.name, std::nullopt, matrix, expected.value_or(SolveStatus::sat)}};
  auto cfg = config;
  cfg.write_results = config.write_results && expected.has_value();
  auto m = run_theorem(c, cfg);
  if (!expected) {
    for (auto& r : m.records) r.expected = r.status;  // no claim to compare against
    if (config.write_results) {
      std::filesystem::create_directories(config.results_dir / c.name);
      std::ofstream os(config.results_dir / c.name / "manifest.json");
      os << to_json(m).dump(2) << "\n";
    }
  }
  return m;
}

}  // namespace omdp
