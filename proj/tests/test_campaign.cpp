#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "omdp/campaign.hpp"

using namespace omdp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    auto t = (fs::temp_directory_path() / "omdp-campaign-XXXXXX").string();
    path = mkdtemp(t.data());
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

CampaignConfig in_dir(const fs::path& dir) {
  CampaignConfig c;
  c.results_dir = dir;
  return c;
}

// The weaker encoding of the (4,8) case is satisfiable in well under a second,
// which makes it a convenient fast instance for the campaign machinery.
CampaignCase quick_sat_case() {
  auto c = cases::sm_4_8();
  c.mode = EncodingMode::paper_exact;
  return c;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Config, ParsesKeys) {
  std::istringstream in(R"(# campaign settings
solver_cmd = "kissat -q {cnf}"   # external
timeout = 12.5
jobs = 3
seed = 7
results_dir = out/results
keep_artifacts = true
fail_fast = false
)");
  const auto c = parse_config(in);
  EXPECT_EQ(c.solver.backend, Backend::external);
  EXPECT_EQ(c.solver.external_command, "kissat -q {cnf}");
  EXPECT_DOUBLE_EQ(c.solver.timeout_seconds, 12.5);
  EXPECT_EQ(c.jobs, 3);
  EXPECT_EQ(c.solver.parallel_instances, 3);
  EXPECT_EQ(c.solver.seed, 7u);
  EXPECT_EQ(c.results_dir, fs::path("out/results"));
  EXPECT_TRUE(c.keep_artifacts);
  EXPECT_FALSE(c.fail_fast);
  std::istringstream hash(R"(solver_cmd = "sh -c 'x # y' {cnf}")");
  EXPECT_EQ(parse_config(hash).solver.external_command, "sh -c 'x # y' {cnf}");
  std::istringstream back("solver_cmd = a {cnf}\nbackend = embedded\n");
  EXPECT_EQ(parse_config(back).solver.backend, Backend::embedded);
}

TEST(Config, RejectsBadInput) {
  for (const char* text : {"jobs\n", "colour = red\n", "timeout = soon\n", "keep_artifacts = yes\n", "backend = gpu\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_config(in), ParseError) << text;
  }
  EXPECT_THROW(load_config("/nonexistent/omdp.toml"), ParseError);
}

TEST(Hash, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Manifest, JsonRoundTripAndVerdict) {
  InstanceRecord r;
  r.id = "a/1";
  r.expected = SolveStatus::unsat;
  r.status = SolveStatus::unsat;
  r.variables = 10;
  r.clauses = 20;
  r.cnf_sha256 = "00";
  r.solver = "embedded";
  r.digraph_report = nlohmann::json{{"vertices", 3}};
  const auto back = record_from_json(to_json(r));
  EXPECT_EQ(to_json(back), to_json(r));
  VerdictManifest m{"case", "extended", 4, 8, {r, r}};
  EXPECT_TRUE(m.theorem_holds());
  auto j = to_json(m);
  EXPECT_EQ(j["verdict"], "theorem holds");
  EXPECT_TRUE(manifest_verdict(j));
  j["instances"][1]["status"] = "timeout";
  EXPECT_FALSE(manifest_verdict(j));
  m.records[1].status = SolveStatus::sat;
  EXPECT_FALSE(m.theorem_holds());
  EXPECT_EQ(to_json(m)["verdict"], "theorem not established");
  m.records[1].status = SolveStatus::unsat;
  m.records[1].soundness_failures = {"x"};
  EXPECT_FALSE(manifest_verdict(to_json(m)));
  m.records[1].soundness_failures.clear();
  m.complete = false;
  EXPECT_FALSE(manifest_verdict(to_json(m)));
  m.records.clear();
  m.complete = true;
  EXPECT_FALSE(m.theorem_holds());
}

TEST(Registry, CasesBuild) {
  for (const auto& name : cases::names()) {
    const auto c = cases::by_name(name);
    EXPECT_EQ(c.name, name);
    EXPECT_NO_THROW(c.validate());
  }
  EXPECT_EQ(cases::sm_4_8().instances.size(), 1u);
  EXPECT_EQ(cases::sm_4_9().instances.size(), 8u);
  EXPECT_EQ(cases::sm_5_10().instances.size(), 8u);
  EXPECT_EQ(cases::sm_5_10_len7().instances.size(), 8u);
  EXPECT_EQ(cases::m_5_10().instances.size(), 8u);
  EXPECT_EQ(cases::m_5_10().tier, Tier::opt_in);
  EXPECT_EQ(cases::sm_4_8().mode, EncodingMode::extended);
  EXPECT_THROW(cases::by_name("sm-9-9"), DomainError);
}

TEST(Registry, InstancesAreReproducible) {
  const auto c = cases::sm_4_9();
  const auto a = emit_dimacs(build_instance(c, c.instances[3]).build());
  const auto b = emit_dimacs(build_instance(cases::sm_4_9(), cases::sm_4_9().instances[3]).build());
  EXPECT_EQ(sha256_hex(a), sha256_hex(b));
  EXPECT_NE(sha256_hex(a), sha256_hex(emit_dimacs(build_instance(c, c.instances[4]).build())));
  auto p = c;
  p.mode = EncodingMode::paper_exact;
  EXPECT_NE(sha256_hex(a), sha256_hex(emit_dimacs(build_instance(p, p.instances[3]).build())));
}

TEST(Run, CachingForceAndArtifacts) {
  TempDir tmp;
  auto cfg = in_dir(tmp.path);
  const auto c = quick_sat_case();
  const auto first = run_theorem(c, cfg);
  ASSERT_EQ(first.records.size(), 1u);
  EXPECT_FALSE(first.records[0].cached);
  EXPECT_EQ(first.records[0].status, SolveStatus::sat);
  const auto inst_dir = tmp.path / "sm-4-8" / "sm-4-8";
  EXPECT_TRUE(fs::exists(inst_dir / "record.json"));
  EXPECT_FALSE(fs::exists(inst_dir / "instance.cnf"));
  const auto manifest = read_json(tmp.path / "sm-4-8" / "manifest.json");
  EXPECT_EQ(manifest["mode"], "paper-exact");
  EXPECT_FALSE(manifest_verdict(manifest));

  const auto second = run_theorem(c, cfg);
  EXPECT_TRUE(second.records[0].cached);
  EXPECT_EQ(second.records[0].cnf_sha256, first.records[0].cnf_sha256);

  cfg.force = true;
  cfg.keep_artifacts = true;
  const auto third = run_theorem(c, cfg);
  EXPECT_FALSE(third.records[0].cached);
  EXPECT_TRUE(fs::exists(inst_dir / "instance.cnf"));
  EXPECT_TRUE(fs::exists(inst_dir / "solver.out"));
  std::ifstream cnf(inst_dir / "instance.cnf");
  std::stringstream text;
  text << cnf.rdbuf();
  EXPECT_EQ(sha256_hex(text.str()), third.records[0].cnf_sha256);
  std::ifstream out(inst_dir / "solver.out");
  std::stringstream sol;
  sol << out.rdbuf();
  EXPECT_EQ(parse_solution(sol.str(), third.records[0].variables).status, SolutionStatus::sat);

  // a different encoding of the same instance is not served from the cache
  cfg.force = false;
  auto strict = c;
  strict.mode = EncodingMode::extended;
  strict.instances[0].expected = SolveStatus::sat;  // any status; only the cache key matters
  cfg.solver.timeout_seconds = 0.2;
  const auto other = run_theorem(strict, cfg);
  EXPECT_FALSE(other.records[0].cached);
}

// A sat model of the weaker encoding passes every independent re-check: the
// decoded chirotope satisfies the clauses and none of the excluded paths is
// present in its digraph.
TEST(Run, SatModelsAreReverified) {
  CampaignConfig cfg;
  cfg.write_results = false;
  const auto m = run_theorem(quick_sat_case(), cfg);
  ASSERT_EQ(m.records.size(), 1u);
  const auto& r = m.records[0];
  ASSERT_EQ(r.status, SolveStatus::sat);
  EXPECT_TRUE(r.soundness_failures.empty());
  ASSERT_TRUE(r.digraph_report);
  ASSERT_TRUE(r.facet_vertex_matrix);
  EXPECT_FALSE(r.matches());
}

TEST(Run, FailFastStopsEarly) {
  auto c = quick_sat_case();
  c.instances = {CampaignInstance{"a"}, CampaignInstance{"b"}, CampaignInstance{"c"}};
  CampaignConfig cfg;
  cfg.write_results = false;
  cfg.fail_fast = true;
  const auto m = run_theorem(c, cfg);
  EXPECT_FALSE(m.complete);
  EXPECT_EQ(m.records.size(), 1u);
  EXPECT_FALSE(m.theorem_holds());
  cfg.fail_fast = false;
  cfg.jobs = 2;
  const auto all = run_theorem(c, cfg);
  EXPECT_TRUE(all.complete);
  ASSERT_EQ(all.records.size(), 3u);
  EXPECT_EQ(all.records[2].id, "c");
}

TEST(Run, RejectsBadSettings) {
  CampaignConfig cfg;
  cfg.write_results = false;
  cfg.jobs = 0;
  EXPECT_THROW(run_theorem(quick_sat_case(), cfg), DomainError);
  CampaignCase empty{"empty", "", 4, 8};
  EXPECT_THROW(run_theorem(empty, CampaignConfig{}), DomainError);
}

TEST(CheckDigraph, PublishedMatrices) {
  TempDir tmp;
  auto cfg = in_dir(tmp.path);
  for (const auto& name : {"fixture-4-9", "fixture-5-10-outmap4", "fixture-5-10-source-neighbor"}) {
    const auto m = run_theorem(cases::by_name(name), cfg);
    ASSERT_EQ(m.records.size(), 1u);
    const auto& r = m.records[0];
    EXPECT_EQ(r.status, SolveStatus::sat) << name;
    EXPECT_TRUE(r.soundness_failures.empty()) << name << ": " << (r.soundness_failures.empty() ? "" : r.soundness_failures[0]);
    EXPECT_TRUE(manifest_verdict(read_json(tmp.path / name / "manifest.json"))) << name;
  }
  const auto hk = run_theorem(cases::holt_klee(), cfg);
  EXPECT_TRUE(hk.theorem_holds());
  EXPECT_EQ(hk.records[0].status, SolveStatus::unsat);
}

TEST(CheckDigraph, ArbitraryMatrix) {
  TempDir tmp;
  auto cfg = in_dir(tmp.path);
  const auto text = std::string(fixtures::kDim4Facets9);
  const auto m = check_digraph(parse_facet_vertex_matrix(text, 4), cfg, "mine");
  ASSERT_EQ(m.records.size(), 1u);
  EXPECT_EQ(m.records[0].status, SolveStatus::sat);
  EXPECT_TRUE(fs::exists(tmp.path / "mine" / "manifest.json"));
  // reversing every arc of a program digraph gives a program digraph
  auto rows = parse_facet_vertex_matrix(text, 4).rows();
  for (auto& r : rows)
    for (int& x : r) x = -x;
  const auto rev = check_digraph(FacetVertexMatrix(4, rows), cfg, "reversed", SolveStatus::sat);
  EXPECT_TRUE(rev.theorem_holds());
}
