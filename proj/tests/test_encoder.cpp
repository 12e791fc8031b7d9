#include <gtest/gtest.h>

#include <set>

#include "omdp/encoder.hpp"
#include "oracles.hpp"

using namespace omdp;

namespace {

// Independent colex index and sorting sign.
int colex_var(std::vector<int> t) {
  std::sort(t.begin(), t.end());
  auto C = [](int n, int k) {
    long long r = 1;
    if (k < 0 || k > n) return 0LL;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  long long rank = 1;
  for (std::size_t i = 0; i < t.size(); ++i) rank += C(t[i] - 1, static_cast<int>(i) + 1);
  return static_cast<int>(rank);
}

int inversion_sign(const std::vector<int>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) inv += t[i] > t[j];
  return inv % 2 ? -1 : 1;
}

// DIMACS clauses for chi(A) = s * chi(B).
std::set<std::vector<int>> expected_relation(const std::vector<int>& A, int s, const std::vector<int>& B) {
  const int la = colex_var(A) * inversion_sign(A);
  const int lb = colex_var(B) * inversion_sign(B) * s;
  auto sorted = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  return {sorted({-la, lb}), sorted({la, -lb})};
}

std::set<std::vector<int>> clause_set(const CnfFormula& f) {
  std::set<std::vector<int>> out;
  for (const auto& c : f.clauses()) {
    std::vector<int> v;
    for (auto l : c) v.push_back(l.dimacs());
    std::sort(v.begin(), v.end());
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST(VarMap, ColexIndices) {
  VarMap vm(GroundSet(4, 8));   // m=10, r=5
  EXPECT_EQ(vm.var_index(Tuple{1, 2, 3, 4, 5}), 1);
  EXPECT_EQ(vm.var_index(Tuple{6, 7, 8, 9, 10}), 252);
  EXPECT_EQ(vm.basis_count(), 252);
  EXPECT_EQ(VarMap(GroundSet(5, 10)).basis_count(), 924);
  EXPECT_EQ(VarMap(GroundSet(4, 9)).basis_count(), 462);
  for (int v = 1; v <= 252; ++v) {
    const auto b = vm.basis_of(v);
    EXPECT_EQ(vm.var_index(b), v);
    EXPECT_EQ(colex_var(b), v);
  }
  EXPECT_THROW(vm.basis_of(0), DomainError);
  EXPECT_THROW(vm.basis_of(253), DomainError);
  EXPECT_THROW(vm.var_index(Tuple{1, 2, 3, 4}), MalformedTuple);
  EXPECT_THROW(vm.var_index(Tuple{5, 4, 3, 2, 1}), MalformedTuple);
}

TEST(Literal, FoldsParityIntoPolarity) {
  VarMap vm6(GroundSet(5, 10));
  EXPECT_EQ(literal_for(vm6, Tuple{1, 2, 3, 4, 5, 6}, +1).dimacs(), 1);
  EXPECT_EQ(literal_for(vm6, Tuple{2, 1, 3, 4, 5, 6}, +1).dimacs(), -1);
  EXPECT_EQ(literal_for(vm6, Tuple{2, 1, 3, 4, 5, 6}, -1).dimacs(), 1);
  const Tuple t{12, 2, 3, 4, 5, 11};
  EXPECT_EQ(literal_for(vm6, t, +1).dimacs(), colex_var(t) * inversion_sign(t));
  EXPECT_THROW(literal_for(vm6, Tuple{3, 3, 1, 2, 4, 5}, 1), MalformedTuple);
}

TEST(Relation, TwoClausesEach) {
  const Literal x(3, true), y(7, true);
  auto eq = relation_clauses({x, y, Relation::equal});
  ASSERT_EQ(eq.size(), 2u);
  EXPECT_EQ(eq[0], (Clause{~x, y}));
  EXPECT_EQ(eq[1], (Clause{x, ~y}));
  auto op = relation_clauses({x, y, Relation::opposite});
  ASSERT_EQ(op.size(), 2u);
  EXPECT_EQ(op[0], (Clause{~x, ~y}));
  EXPECT_EQ(op[1], (Clause{x, y}));
  // degenerate relations fold but are never dropped silently when false
  EXPECT_TRUE(relation_clauses({x, x, Relation::equal}).empty());
  const auto contra = relation_clauses({x, x, Relation::opposite});
  ASSERT_EQ(contra.size(), 2u);
  EXPECT_EQ(contra[0].size(), 1u);
  EXPECT_EQ(contra[0][0], ~contra[1][0]);
}

TEST(Relation, PrintedEqualityFromTheWorkedExample) {
  VarMap vm(GroundSet(5, 10));
  const auto bic = chi_relation(vm, Tuple{2, 3, 4, 5, 9, 1}, +1, Tuple{2, 3, 4, 5, 9, 12});
  EXPECT_EQ(bic.a.variable(), colex_var({1, 2, 3, 4, 5, 9}));
  EXPECT_EQ(bic.b.variable(), colex_var({2, 3, 4, 5, 9, 12}));
  CnfFormula f(vm.basis_count());
  append_relations(f, std::vector<Biconditional>{bic});
  EXPECT_EQ(clause_set(f), expected_relation({2, 3, 4, 5, 9, 1}, +1, {2, 3, 4, 5, 9, 12}));
}

TEST(Gp3, ClauseCounts) {
  EXPECT_EQ(gp3_clauses(VarMap(GroundSet(4, 8))).size(), 67200u);
  EXPECT_EQ(gp3_clause_count(GroundSet(4, 9)), 184800u);
  EXPECT_EQ(gp3_clauses(VarMap(GroundSet(4, 9))).size(), 184800u);
  EXPECT_EQ(gp3_clause_count(GroundSet(5, 10)), 554400u);
  const auto f = gp3_clauses(VarMap(GroundSet(4, 8)));
  EXPECT_EQ(f.variable_count(), 252);
  for (const auto& c : f.clauses()) {
    ASSERT_EQ(c.size(), 6u);
    std::set<int> vars;
    for (auto l : c) vars.insert(l.variable());
    EXPECT_EQ(vars.size(), 6u);
  }
}

// Smaller exhaustive check (m=5, r=2; 2^10); the full m=6, r=3 version runs
// in the acceptance binary.
TEST(Gp3, ExhaustiveOracleSmall) {
  const GroundSet gs(1, 3);
  const VarMap vm(gs);
  const auto masks = test::to_masks(gp3_clauses(vm));
  const int nb = vm.basis_count();
  ASSERT_EQ(nb, 10);
  int sat = 0;
  for (std::uint64_t a = 0; a < (1u << nb); ++a) {
    const bool by_clauses = std::all_of(masks.begin(), masks.end(), [&](const auto& m) { return m.satisfied(a); });
    std::vector<std::int8_t> s(static_cast<std::size_t>(nb));
    for (int v = 0; v < nb; ++v) s[static_cast<std::size_t>(v)] = (a >> v) & 1 ? 1 : -1;
    const bool by_oracle = check_gp3(Chirotope(gs, s)).empty();
    ASSERT_EQ(by_clauses, by_oracle) << a;
    sat += by_clauses;
  }
  EXPECT_GT(sat, 0);
}

TEST(Gp3, SignSymmetric) {
  const VarMap vm(GroundSet(2, 4));
  const auto masks = test::to_masks(gp3_clauses(vm));
  const std::uint64_t all = (std::uint64_t{1} << 20) - 1;
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    const auto chi = test::random_realizable(2, 4, seed).chi;
    std::uint64_t a = 0;
    for (int v = 0; v < 20; ++v)
      if (chi.signs()[static_cast<std::size_t>(v)] > 0) a |= std::uint64_t{1} << v;
    for (auto x : {a, a ^ all})
      EXPECT_TRUE(std::all_of(masks.begin(), masks.end(), [&](const auto& m) { return m.satisfied(x); }));
  }
}

TEST(Column, WorkedExampleColumnThree) {
  const VarMap vm(GroundSet(5, 10));
  const FacetColumn col{{0, 1, -1, -1, 1, 0, 0, 0, -1, 0}};
  const auto f = column_clauses(col, vm);
  EXPECT_EQ(f.size(), 20u);
  for (const auto& c : f.clauses()) EXPECT_EQ(c.size(), 2u);
  std::set<std::vector<int>> expect;
  auto add = [&](std::vector<int> A, int s, std::vector<int> B) {
    for (auto c : expected_relation(A, s, B)) expect.insert(c);
  };
  add({2, 3, 4, 5, 9, 1}, +1, {2, 3, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 6}, +1, {2, 3, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 7}, +1, {2, 3, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 8}, +1, {2, 3, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 10}, +1, {2, 3, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 12}, -1, {11, 3, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 12}, +1, {2, 11, 4, 5, 9, 12});
  add({2, 3, 4, 5, 9, 12}, +1, {2, 3, 11, 5, 9, 12});
  add({2, 3, 4, 5, 9, 12}, -1, {2, 3, 4, 11, 9, 12});
  add({2, 3, 4, 5, 9, 12}, +1, {2, 3, 4, 5, 11, 12});
  EXPECT_EQ(clause_set(f), expect);
  std::set<int> vars;
  for (const auto& c : f.clauses())
    for (auto l : c) vars.insert(l.variable());
  EXPECT_EQ(vars.size(), 11u);
}

TEST(Column, CountsAndErrors) {
  const VarMap vm(GroundSet(4, 9));
  EXPECT_EQ(column_clauses(FacetColumn{{-1, -1, 1, 1, 0, 0, 0, 0, 0}}, vm).size(), 18u);
  EXPECT_THROW(column_clauses(FacetColumn{{-1, -1, 1, 0, 0, 0, 0, 0, 0}}, vm), DomainError);
  EXPECT_THROW(column_clauses(FacetColumn{{-1, -1, 1, 1, 0, 0, 0, 0}}, vm), DomainError);
  EXPECT_THROW(column_clauses(FacetColumn{{-1, -1, 1, 2, 0, 0, 0, 0, 0}}, vm), DomainError);
}

// A source column in a realizable program: the column clauses hold exactly
// when the vertex is the source.
TEST(Column, SourcePatternMatchesRealizablePrograms) {
  int sources = 0;
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    const auto cfg = test::random_polytope_program(3, 6, seed);
    const VarMap vm(GroundSet(3, 6));
    Assignment a(static_cast<std::size_t>(vm.basis_count()) + 1);
    for (int v = 1; v <= vm.basis_count(); ++v) a[static_cast<std::size_t>(v)] = cfg.chi.signs()[static_cast<std::size_t>(v - 1)] > 0;
    for (const auto& V : test::feasible_vertices(cfg)) {
      bool is_source = true;
      int neighbors = 0;
      for (const auto& W : test::feasible_vertices(cfg)) {
        if (intersection_size(V, W) != 2) continue;
        ++neighbors;
        if (test::objective_at(cfg, W) < test::objective_at(cfg, V)) is_source = false;
      }
      if (neighbors != 3) continue;  // an edge runs off to infinity
      FacetColumn col{std::vector<int>(6, 0)};
      for (int e : V) col.entries[static_cast<std::size_t>(e - 1)] = -1;
      const auto f = column_clauses(col, vm);
      EXPECT_EQ(!first_falsified(f, a).has_value(), is_source) << seed << " " << format_tuple(V);
      sources += is_source;
    }
  }
  EXPECT_GT(sources, 10);
}

TEST(SourceSink, ConditionCounts) {
  const VarMap vm(GroundSet(5, 10));
  EndpointConstraints ec{source_label(5), true, sink_label(5, 10), true, EncodingMode::paper_exact};
  EXPECT_EQ(source_sink_conditions(vm, ec).size(), 20u);
  const auto f = source_sink_clauses(vm, ec);
  EXPECT_EQ(f.size(), 41u);
  EXPECT_EQ(f.clauses().front(), (Clause{Literal(1, true)}));
  ec.orient_source = false;
  EXPECT_EQ(source_sink_conditions(vm, ec).size(), 15u);
  ec.mode = EncodingMode::extended;
  EXPECT_EQ(source_sink_conditions(vm, ec).size(), 15u + 10u);
  const VarMap vm4(GroundSet(4, 8));
  EXPECT_EQ(source_sink_conditions(vm4, {source_label(4), true, sink_label(4, 8), false, EncodingMode::paper_exact}).size(), 16u);
  EXPECT_THROW(source_sink_conditions(vm4, {Tuple{1, 2, 3, 5}, true, sink_label(4, 8), false}), DomainError);
}

TEST(SourceSink, PrintedSourceConditions) {
  const VarMap vm(GroundSet(5, 10));
  const auto conds = source_sink_conditions(vm, {source_label(5), true, sink_label(5, 10), false, EncodingMode::paper_exact});
  CnfFormula f(vm.basis_count());
  append_relations(f, conds);
  const auto got = clause_set(f);
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> V{1, 2, 3, 4, 5};
    auto Vg = V;
    Vg[static_cast<std::size_t>(k - 1)] = 12;
    auto Vf = V;
    Vf[static_cast<std::size_t>(k - 1)] = 11;
    auto with = [](std::vector<int> t, int x) {
      t.push_back(x);
      return t;
    };
    for (auto c : expected_relation(with(V, 11), +1, with(Vg, 11))) EXPECT_TRUE(got.count(c)) << k;
    for (auto c : expected_relation(with(V, 12), +1, with(Vf, 12))) EXPECT_TRUE(got.count(c)) << k;
    std::vector<int> S{6, 7, 8, 9, 10};
    auto Sf = S;
    Sf[static_cast<std::size_t>(k - 1)] = 11;
    for (auto c : expected_relation(with(S, 12), -1, with(Sf, 12))) EXPECT_TRUE(got.count(c)) << k;
  }
}

TEST(PathConditions, Counts) {
  const VarMap vm(GroundSet(5, 10));
  const auto direct = direct_path_types(5, 10);
  EXPECT_EQ(path_conditions(direct.front(), vm).size(), 24u);
  const auto len6 = revisit_families("sm-5-10-len6");
  for (const auto& f : len6) EXPECT_EQ(path_conditions(f.templ, vm).size(), 30u);
  const auto len7 = revisit_families("m-5-10-len7");
  for (const auto& f : len7) {
    EXPECT_EQ(path_conditions(f.templ, vm).size(), 36u);
    EXPECT_EQ(path_conditions(f.templ, vm, {true}).size(), 37u);
  }
  const VarMap vm49(GroundSet(4, 9));
  for (const auto& f : revisit_families("sm-4-9-len6")) EXPECT_EQ(path_conditions(f.templ, vm49).size(), 30u);
  CnfFormula g(vm.basis_count());
  EXPECT_EQ(enforce_path(g, len6.front().templ, vm), 60u);
}

TEST(PathConditions, RejectsNonAdjacentLabels) {
  const VarMap vm(GroundSet(2, 4));
  PathType p{2, 4, {{1, 2}, {3, 4}}};
  EXPECT_THROW(path_conditions(p, vm), DomainError);
}

TEST(Exclusion, OneClausePerPathAndSharedAuxiliaries) {
  VarMap vm(GroundSet(4, 8));
  TseitinCache aux;
  CnfFormula f(vm.basis_count());
  const auto paths = direct_path_types(4, 8);
  EXPECT_EQ(exclude_paths(f, aux, paths, vm), 576u);
  EXPECT_EQ(f.size(), 576u);
  EXPECT_EQ(aux.definitions().size(), 4 * aux.size());
  EXPECT_LT(aux.size(), 576u * 15u);  // conditions are shared
  for (const auto& c : aux.definitions().clauses()) EXPECT_EQ(c.size(), 3u);
  for (const auto& c : f.clauses()) {
    EXPECT_EQ(c.size(), 15u);  // 3 intermediate vertices x 4 + 3 edges
    for (auto l : c) {
      EXPECT_FALSE(l.positive());
      EXPECT_GT(l.variable(), vm.basis_count());
    }
  }
}

TEST(Exclusion, TseitinDefinitionsAreEquivalences) {
  VarMap vm(GroundSet(1, 3));
  TseitinCache aux;
  const Biconditional bic{Literal(2, true), Literal(5, false), Relation::equal};
  const auto y = aux.define(vm, bic);
  ASSERT_TRUE(y);
  EXPECT_EQ(aux.define(vm, bic), y);
  EXPECT_EQ(aux.define(vm, {Literal(5, false), Literal(2, true), Relation::equal}), y);
  for (int bits = 0; bits < 8; ++bits) {
    Assignment a(12, false);
    a[2] = bits & 1;
    a[5] = bits & 2;
    a[static_cast<std::size_t>(y->variable())] = bits & 4;
    const bool holds = a[2] == !a[5];
    const bool defs_ok = !first_falsified(aux.definitions(), a);
    EXPECT_EQ(defs_ok, (bits & 4 ? true : false) == holds);
  }
  EXPECT_FALSE(aux.define(vm, {Literal(3, true), Literal(3, true), Relation::equal}));
  const auto contra = aux.define(vm, {Literal(3, true), Literal(3, true), Relation::opposite});
  ASSERT_TRUE(contra);
}

TEST(Builder, SectionOrderAndMetadata) {
  InstanceBuilder b(GroundSet(4, 8));
  b.comment("case test").axioms().anchor().endpoints({source_label(4), true, sink_label(4, 8), true});
  const auto paths = direct_path_types(4, 8);
  b.exclude(paths);
  b.enforce(paths.front());
  const auto f = b.build();
  EXPECT_EQ(b.excluded_count(), 576u);
  EXPECT_EQ(f.clauses()[67200], (Clause{Literal(1, true)}));
  EXPECT_EQ(f.size(), 67200u + 1u + 32u + 576u + 2u * 15u + 4u * b.aux_count());
  EXPECT_EQ(f.variable_count(), 252 + static_cast<int>(b.aux_count()));
  EXPECT_EQ(f.comments().front(), "case test");
  // identical construction is byte-identical
  InstanceBuilder b2(GroundSet(4, 8));
  b2.comment("case test").axioms().anchor().endpoints({source_label(4), true, sink_label(4, 8), true});
  b2.exclude(paths);
  b2.enforce(paths.front());
  EXPECT_EQ(emit_dimacs(b2.build()), emit_dimacs(f));
}

TEST(Dimacs, FormatAndParse) {
  CnfFormula empty(3);
  EXPECT_EQ(emit_dimacs(empty), "p cnf 3 0\n");
  CnfFormula f(2);
  f.add({Literal(1, true), Literal(2, false)});
  EXPECT_NE(emit_dimacs(f).find("1 -2 0\n"), std::string::npos);
  std::istringstream in(emit_dimacs(f));
  const auto g = parse_dimacs(in);
  EXPECT_EQ(g.clauses(), f.clauses());
  EXPECT_EQ(g.variable_count(), 2);
  std::istringstream bad("p cnf 2 2\n1 2 0\n");
  EXPECT_THROW(parse_dimacs(bad), ParseError);
  std::istringstream junk("p cnf 2 1\n1 x 0\n");
  EXPECT_THROW(parse_dimacs(junk), ParseError);
  EXPECT_THROW(f.add({}), DomainError);
}

TEST(Dimacs, SolutionRoundTrip) {
  Assignment a(925, false);
  for (std::size_t v = 1; v < a.size(); v += 3) a[v] = true;
  const auto text = format_solution(SolutionStatus::sat, a);
  const auto back = parse_solution(text, 924);
  EXPECT_EQ(back.status, SolutionStatus::sat);
  EXPECT_EQ(back.assignment, a);
  EXPECT_EQ(parse_solution("s UNSATISFIABLE\n", 3).status, SolutionStatus::unsat);
  EXPECT_THROW(parse_solution("s MAYBE\n", 3), ParseError);
  EXPECT_THROW(parse_solution("v 1 2 0\n", 3), ParseError);
  EXPECT_THROW(parse_solution("s SATISFIABLE\nv 1 -2\n", 3), ParseError);
  EXPECT_THROW(parse_solution("s SATISFIABLE\nv 1 two 0\n", 3), ParseError);
  try {
    parse_solution("s SATISFIABLE\nv 1 two 0\n", 3);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("v 1 two 0"), std::string::npos);
  }
}
