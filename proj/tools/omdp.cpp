// Command-line front end. Every subcommand prints JSON on stdout except
// `encode` (DIMACS) and `extract --format facet-vertex` (matrix text).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "omdp/omdp.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw omdp::ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Common {
  std::string config_file;
  std::string backend;
  double timeout = 0;
  int jobs = 0;
  std::string results_dir;
  bool keep_artifacts = false;
  bool force = false;
  bool fail_fast = false;

  // config file < command-line flags < OMDP_SOLVER_CMD
  omdp::CampaignConfig resolve() const {
    omdp::CampaignConfig c;
    if (!config_file.empty()) c = omdp::load_config(config_file, c);
    if (backend == "embedded") c.solver.backend = omdp::Backend::embedded;
    else if (backend == "external") c.solver.backend = omdp::Backend::external;
    else if (!backend.empty()) throw omdp::DomainError("unknown backend '" + backend + "'");
    if (timeout > 0) c.solver.timeout_seconds = timeout;
    if (jobs > 0) c.jobs = jobs;
    if (!results_dir.empty()) c.results_dir = results_dir;
    c.keep_artifacts = c.keep_artifacts || keep_artifacts;
    c.force = force;
    c.fail_fast = c.fail_fast || fail_fast;
    c.solver = omdp::SolverConfig::with_environment(c.solver);
    c.solver.parallel_instances = c.jobs;
    return c;
  }

  void attach(CLI::App* app, bool campaign_flags) {
    app->add_option("--config", config_file, "key = value configuration file");
    app->add_option("--backend", backend, "embedded or external");
    app->add_option("--timeout", timeout, "per-instance solver timeout in seconds");
    if (campaign_flags) {
      app->add_option("--jobs", jobs, "concurrent instances");
      app->add_option("--results", results_dir, "results directory (default: results)");
      app->add_flag("--keep-artifacts", keep_artifacts, "keep instance.cnf and solver.out");
      app->add_flag("--force", force, "ignore cached instance records");
      app->add_flag("--fail-fast", fail_fast, "stop after the first unexpected outcome");
    }
  }
};

json family_json(const omdp::PathFamily& f) {
  json labels = json::array();
  for (const auto& l : f.templ.labels) labels.push_back(l);
  const auto viol = omdp::validate_path_type(f.templ, true);
  return {{"id", f.id},
          {"labels", labels},
          {"length", f.templ.length()},
          {"valid", !viol.has_value()},
          {"violation", viol ? json(viol->message) : json(nullptr)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented matroid program diameter certification"};
  app.require_subcommand(1);

  // encode
  auto* enc = app.add_subcommand("encode", "emit the CNF of a campaign instance or a facet-vertex matrix");
  std::string enc_case, enc_instance, enc_matrix, enc_out, enc_mode;
  int enc_dim = 0;
  enc->add_option("--case", enc_case, "campaign case name");
  enc->add_option("--instance", enc_instance, "instance id (default: first)");
  enc->add_option("--matrix", enc_matrix, "facet-vertex matrix file")->excludes("--case");
  enc->add_option("--dim", enc_dim, "dimension d for --matrix");
  enc->add_option("--mode", enc_mode, "paper-exact or extended");
  enc->add_option("-o,--output", enc_out, "output file (default: stdout)");

  // solve
  auto* sol = app.add_subcommand("solve", "solve one DIMACS file");
  std::string sol_cnf, sol_out;
  Common sol_common;
  sol->add_option("cnf", sol_cnf, "DIMACS CNF file")->required();
  sol->add_option("--model-out", sol_out, "write s/v solver output here");
  sol_common.attach(sol, false);

  // check-digraph
  auto* chk = app.add_subcommand("check-digraph", "decide whether a facet-vertex matrix is an oriented matroid program digraph");
  std::string chk_file;
  int chk_dim = 0;
  Common chk_common;
  chk->add_option("file", chk_file, "facet-vertex matrix file")->required();
  chk->add_option("--dim", chk_dim, "dimension d")->required();
  chk_common.attach(chk, true);

  // paths
  auto* pth = app.add_subcommand("paths", "list a path catalog");
  std::string pth_case;
  bool pth_expand = false;
  pth->add_option("--case", pth_case, "revisit family id, or direct-<d>-<n>")->required();
  pth->add_flag("--expand", pth_expand, "also list every relabeled path type");

  // prove
  auto* prv = app.add_subcommand("prove", "run a named campaign");
  std::string prv_case, prv_mode = "extended", prv_tier;
  Common prv_common;
  prv->add_option("case", prv_case, "case name, or 'all' for every case of the tier")->required();
  prv->add_option("--mode", prv_mode, "paper-exact or extended");
  prv->add_option("--tier", prv_tier, "fast or extended (with 'all')");
  prv_common.attach(prv, true);

  // extract
  auto* ext = app.add_subcommand("extract", "decode solver output into a digraph");
  std::string ext_file, ext_format = "json";
  int ext_dim = 0, ext_facets = 0;
  ext->add_option("solver-output", ext_file, "solver output with s/v lines")->required();
  ext->add_option("--dim", ext_dim, "dimension d")->required();
  ext->add_option("--facets", ext_facets, "number of facets n")->required();
  ext->add_option("--format", ext_format, "facet-vertex or json")->check(CLI::IsMember({"facet-vertex", "json"}));

  // cases
  auto* lst = app.add_subcommand("cases", "list campaign cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enc->parsed()) {
      omdp::CnfFormula f;
      if (!enc_matrix.empty()) {
        if (enc_dim <= 0) throw omdp::DomainError("--matrix needs --dim");
        auto m = omdp::parse_facet_vertex_matrix(slurp(enc_matrix), enc_dim);
        omdp::CampaignCase c{"matrix", "", enc_dim, m.facets()};
        c.instances = {omdp::CampaignInstance{fs::path(enc_matrix).filename().string(), std::nullopt, m, omdp::SolveStatus::sat}};
        f = omdp::build_instance(c, c.instances.front()).build();
      } else {
        if (enc_case.empty()) throw omdp::DomainError("encode needs --case or --matrix");
        auto c = omdp::cases::by_name(enc_case);
        if (!enc_mode.empty()) c.mode = omdp::parse_mode(enc_mode);
        const omdp::CampaignInstance* inst = &c.instances.front();
        if (!enc_instance.empty()) {
          inst = nullptr;
          for (const auto& i : c.instances)
            if (i.id == enc_instance) inst = &i;
          if (!inst) throw omdp::DomainError("case " + enc_case + " has no instance " + enc_instance);
        }
        f = omdp::build_instance(c, *inst).build();
      }
      if (enc_out.empty()) {
        omdp::write_dimacs(std::cout, f);
      } else {
        std::ofstream os(enc_out, std::ios::binary);
        omdp::write_dimacs(os, f);
      }
      return 0;
    }

    if (sol->parsed()) {
      const auto cfg = sol_common.resolve();
      std::ifstream cnf_in(sol_cnf, std::ios::binary);
      if (!cnf_in) throw omdp::ParseError("cannot read " + sol_cnf);
      const auto f = omdp::parse_dimacs(cnf_in);
      const auto r = omdp::solve(f, cfg.solver);
      json j{{"file", sol_cnf},
             {"status", std::string(omdp::to_string(r.status))},
             {"variables", f.variable_count()},
             {"clauses", f.size()},
             {"wall_seconds", r.wall_seconds},
             {"solver", r.backend},
             {"diagnostics", r.diagnostics}};
      if (r.status == omdp::SolveStatus::sat) {
        const auto bad = omdp::first_falsified(f, *r.assignment);
        j["model_verified"] = !bad.has_value();
      }
      if (!sol_out.empty()) {
        std::ofstream os(sol_out);
        const auto st = r.status == omdp::SolveStatus::sat     ? omdp::SolutionStatus::sat
                        : r.status == omdp::SolveStatus::unsat ? omdp::SolutionStatus::unsat
                                                               : omdp::SolutionStatus::unknown;
        os << omdp::format_solution(st, r.assignment.value_or(omdp::Assignment{}));
      }
      std::cout << j.dump(2) << "\n";
      return r.status == omdp::SolveStatus::error ? 1 : 0;
    }

    if (chk->parsed()) {
      auto cfg = chk_common.resolve();
      const auto m = omdp::parse_facet_vertex_matrix(slurp(chk_file), chk_dim);
      json j;
      const auto dg = omdp::digraph_from_matrix(m);
      j["matrix"] = {{"facets", m.facets()}, {"vertices", m.columns()}, {"report", omdp::to_json(omdp::digraph_checks(dg))}};
      const auto man = omdp::check_digraph(m, cfg, "check-" + fs::path(chk_file).stem().string());
      j["manifest"] = omdp::to_json(man);
      j["is_program"] = !man.records.empty() && man.records.front().status == omdp::SolveStatus::sat &&
                        man.records.front().soundness_failures.empty();
      std::cout << j.dump(2) << "\n";
      return man.records.empty() || man.records.front().status == omdp::SolveStatus::error ||
                     man.records.front().status == omdp::SolveStatus::timeout
                 ? 1
                 : 0;
    }

    if (pth->parsed()) {
      json j{{"case", pth_case}};
      std::vector<omdp::PathType> expanded;
      if (pth_case.rfind("direct-", 0) == 0) {
        int d = 0, n = 0;
        if (std::sscanf(pth_case.c_str(), "direct-%d-%d", &d, &n) != 2) throw omdp::DomainError("expected direct-<d>-<n>");
        expanded = omdp::direct_path_types(d, n);
        j["families"] = json::array();
      } else {
        const auto fams = omdp::revisit_families(pth_case);
        json fj = json::array();
        for (const auto& f : fams) fj.push_back(family_json(f));
        j["families"] = fj;
        expanded = omdp::expand_relabelings(fams);
      }
      j["path_types"] = expanded.size();
      if (pth_expand) {
        json pj = json::array();
        for (const auto& p : expanded) pj.push_back(p.labels);
        j["paths"] = pj;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (prv->parsed()) {
      auto cfg = prv_common.resolve();
      const auto mode = omdp::parse_mode(prv_mode);
      std::vector<omdp::CampaignCase> todo;
      if (prv_case == "all") {
        const auto tier = prv_tier.empty() ? omdp::Tier::fast : omdp::parse_tier(prv_tier);
        for (const auto& name : omdp::cases::names()) {
          auto c = omdp::cases::by_name(name);
          if (c.tier == omdp::Tier::opt_in || (tier == omdp::Tier::fast && c.tier != omdp::Tier::fast)) continue;
          todo.push_back(std::move(c));
        }
      } else {
        todo.push_back(omdp::cases::by_name(prv_case));
        if (!prv_tier.empty() && omdp::parse_tier(prv_tier) == omdp::Tier::fast && todo.front().tier != omdp::Tier::fast)
          throw omdp::DomainError("case " + prv_case + " belongs to the " + std::string(omdp::to_string(todo.front().tier)) +
                                  " tier");
      }
      json out = json::array();
      bool all_hold = true;
      for (auto& c : todo) {
        c.mode = mode;
        std::cerr << "case " << c.name << " (" << c.instances.size() << " instances, mode " << omdp::to_string(mode) << ")\n";
        const auto man = omdp::run_theorem(c, cfg, [](const omdp::InstanceRecord& r) {
          std::cerr << "  " << r.id << ": " << omdp::to_string(r.status) << (r.cached ? " (cached)" : "") << " in "
                    << r.wall_seconds << "s" << (r.matches() ? "" : "  UNEXPECTED") << "\n";
        });
        all_hold = all_hold && man.theorem_holds();
        auto mj = omdp::to_json(man);
        mj["tier"] = omdp::to_string(c.tier);
        mj["description"] = c.description;
        out.push_back(mj);
        if (cfg.fail_fast && !man.theorem_holds()) break;
      }
      std::cout << (out.size() == 1 ? out.front() : out).dump(2) << "\n";
      return all_hold ? 0 : 1;
    }

    if (ext->parsed()) {
      const omdp::GroundSet gs(ext_dim, ext_facets);
      omdp::SolveResult r;
      const auto parsed = omdp::parse_solution(slurp(ext_file), static_cast<int>(gs.basis_count()));
      if (parsed.status != omdp::SolutionStatus::sat) throw omdp::StateError("solver output is not satisfiable");
      r.status = omdp::SolveStatus::sat;
      r.assignment = parsed.assignment;
      const omdp::VarMap vm(gs);
      const auto chi = omdp::decode_model(r, vm);
      const auto dg = omdp::program_digraph(chi);
      if (ext_format == "facet-vertex") {
        std::cout << omdp::emit(omdp::facet_vertex_matrix(dg));
      } else {
        std::cout << json{{"d", ext_dim},
                          {"n", ext_facets},
                          {"vertices", dg.vertices()},
                          {"facet_vertex_matrix", omdp::emit(omdp::facet_vertex_matrix(dg))},
                          {"report", omdp::to_json(omdp::digraph_checks(dg))}}
                         .dump(2)
                  << "\n";
      }
      return 0;
    }

    if (lst->parsed()) {
      json j = json::array();
      for (const auto& name : omdp::cases::names()) {
        const auto c = omdp::cases::by_name(name);
        j.push_back({{"name", c.name},
                     {"description", c.description},
                     {"d", c.d},
                     {"n", c.n},
                     {"tier", omdp::to_string(c.tier)},
                     {"instances", c.instances.size()}});
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
