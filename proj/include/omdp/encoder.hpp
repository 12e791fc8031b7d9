#pragma once

// Compiles chirotope axioms, vertex and orientation conditions, and monotone
// path exclusions/enforcements into CNF over one variable per sorted basis.
// A basis variable is true iff chi is +1 on the naturally ordered basis.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "omdp/chirotope.hpp"
#include "omdp/cnf.hpp"
#include "omdp/combinatorics.hpp"
#include "omdp/paths.hpp"

namespace omdp {

// Basis variables occupy 1..C(m,r) in colex order; auxiliaries follow.
class VarMap {
 public:
  explicit VarMap(GroundSet ground)
      : ground_(ground), basis_count_(static_cast<int>(ground.basis_count())), next_aux_(basis_count_ + 1) {}

  const GroundSet& ground() const { return ground_; }
  int basis_count() const { return basis_count_; }
  int next_aux() const { return next_aux_; }
  int allocate_aux() { return next_aux_++; }

  int var_index(const Basis& b) const { return static_cast<int>(b.colex()); }
  int var_index(std::span<const int> sorted) const { return var_index(Basis(ground_, Tuple(sorted.begin(), sorted.end()))); }
  Tuple basis_of(int var) const {
    if (var < 1 || var > basis_count_) throw DomainError("variable " + std::to_string(var) + " is not a basis variable");
    return colex_unrank(static_cast<std::uint64_t>(var), ground_.rank());
  }

 private:
  GroundSet ground_;
  int basis_count_;
  int next_aux_;
};

// Literal asserting chi(tuple) = desired_sign.
inline Literal literal_for(const VarMap& vm, std::span<const int> tuple, int desired_sign) {
  auto b = sort_tuple(vm.ground(), tuple);
  if (b.parity == 0) throw MalformedTuple("tuple " + format_tuple(tuple) + " repeats an element; no literal exists");
  return Literal(static_cast<int>(colex_rank(b.sorted)), desired_sign * b.parity > 0);
}

enum class Relation { equal, opposite };

// a <-> b (equal) or a <-> not b (opposite).
struct Biconditional {
  Literal a;
  Literal b;
  Relation relation = Relation::equal;

  bool operator==(const Biconditional&) const = default;
};

// chi(lhs) = sign * chi(rhs).
inline Biconditional chi_relation(const VarMap& vm, std::span<const int> lhs, int sign, std::span<const int> rhs) {
  return {literal_for(vm, lhs, +1), literal_for(vm, rhs, +1), sign > 0 ? Relation::equal : Relation::opposite};
}

// Two two-literal clauses. A relation on a single variable folds: equal on the
// same literal needs nothing, opposite becomes two contradictory units.
inline std::vector<Clause> relation_clauses(const Biconditional& bic) {
  const Literal b = bic.relation == Relation::equal ? bic.b : ~bic.b;
  if (bic.a.variable() == b.variable()) {
    if (bic.a == b) return {};
    return {Clause{bic.a}, Clause{~bic.a}};
  }
  return {Clause{~bic.a, b}, Clause{bic.a, ~b}};
}

namespace detail {

inline Tuple with(std::span<const int> base, std::initializer_list<int> extra) {
  Tuple t(base.begin(), base.end());
  t.insert(t.end(), extra);
  return t;
}

inline Tuple replaced(std::span<const int> base, int old_element, int new_element) {
  Tuple t(base.begin(), base.end());
  for (int& x : t)
    if (x == old_element) x = new_element;
  return t;
}

}  // namespace detail

// Sixteen six-literal clauses per (context, quadruple) forbidding the two
// all-equal patterns of the three Grassmann-Pluecker products.
inline CnfFormula gp3_clauses(const VarMap& vm) {
  const auto& gs = vm.ground();
  CnfFormula f(vm.basis_count());
  Tuple scratch;
  for_each_subset(1, gs.size(), gs.rank() - 2, [&](std::span<const int> ctx) {
    const Tuple rest = sorted_minus(range_tuple(1, gs.size()), ctx);
    for_each_subset_of(rest, 4, [&](std::span<const int> q) {
      // (variable, parity) for chi(ctx, a, b)
      auto lit = [&](int a, int b) {
        scratch.assign(ctx.begin(), ctx.end());
        scratch.push_back(a);
        scratch.push_back(b);
        auto s = sort_with_parity(scratch);
        return std::pair<int, int>{static_cast<int>(colex_rank(s.sorted)), s.parity};
      };
      // product k = coef_k * x_first * x_second in the +-1 encoding
      const std::array<std::pair<int, int>, 6> v{lit(q[0], q[1]), lit(q[2], q[3]), lit(q[0], q[2]),
                                                 lit(q[1], q[3]), lit(q[0], q[3]), lit(q[1], q[2])};
      const std::array<int, 3> coef{v[0].second * v[1].second, -v[2].second * v[3].second, v[4].second * v[5].second};
      for (int s : {+1, -1}) {
        for (int bits = 0; bits < 8; ++bits) {
          Clause c;
          c.reserve(6);
          for (int k = 0; k < 3; ++k) {
            const int first = (bits >> k) & 1 ? 1 : -1;
            const int second = s * coef[static_cast<std::size_t>(k)] * first;
            // forbid this assignment: assert the opposite value
            c.emplace_back(v[static_cast<std::size_t>(2 * k)].first, first < 0);
            c.emplace_back(v[static_cast<std::size_t>(2 * k + 1)].first, second < 0);
          }
          f.add(std::move(c));
        }
      }
    });
  });
  return f;
}

inline std::uint64_t gp3_clause_count(const GroundSet& gs) {
  return binomial(gs.size(), gs.rank() - 2) * binomial(gs.size() - gs.rank() + 2, 4) * 16;
}

inline void append_relations(CnfFormula& f, std::span<const Biconditional> bics) {
  for (const auto& b : bics)
    for (auto& c : relation_clauses(b)) f.add(std::move(c));
}

// chi(V, k) = chi(V, g) for every facet k off the vertex V: the cocircuit
// vanishing on V and positive on g is positive on all other facets.
inline std::vector<Biconditional> vertex_conditions(const VarMap& vm, std::span<const int> vertex) {
  const auto& gs = vm.ground();
  std::vector<Biconditional> out;
  const Tuple at_g = detail::with(vertex, {gs.g()});
  for (int k = 1; k <= gs.n(); ++k) {
    if (contains(vertex, k)) continue;
    out.push_back(chi_relation(vm, detail::with(vertex, {k}), +1, at_g));
  }
  return out;
}

// The circuit on V + {f, g}, positive on f, has sign `circuit_sign` on e:
// chi(V, g) = -C(e) chi(V with e replaced by f, g).
inline Biconditional edge_condition(const VarMap& vm, std::span<const int> vertex, int e, int circuit_sign) {
  const auto& gs = vm.ground();
  return chi_relation(vm, detail::with(vertex, {gs.g()}), -circuit_sign,
                      detail::with(detail::replaced(vertex, e, gs.f()), {gs.g()}));
}

struct FacetColumn {
  std::vector<int> entries;  // one sign per facet 1..n
};

// Cocircuit conditions for the facets off the vertex followed by circuit
// conditions for the facets on it, in the order the worked example lists them.
inline std::vector<Biconditional> column_conditions(const FacetColumn& column, const VarMap& vm) {
  const auto& gs = vm.ground();
  if (static_cast<int>(column.entries.size()) != gs.n())
    throw DomainError("column has " + std::to_string(column.entries.size()) + " entries, expected " + std::to_string(gs.n()));
  Tuple vertex;
  for (int i = 0; i < gs.n(); ++i) {
    const int s = column.entries[static_cast<std::size_t>(i)];
    if (s < -1 || s > 1) throw DomainError("column entries must be -1, 0 or 1");
    if (s != 0) vertex.push_back(i + 1);
  }
  if (static_cast<int>(vertex.size()) != gs.d())
    throw DomainError("column has " + std::to_string(vertex.size()) + " nonzero entries, expected " + std::to_string(gs.d()));
  auto out = vertex_conditions(vm, vertex);
  for (int e : vertex) out.push_back(edge_condition(vm, vertex, e, column.entries[static_cast<std::size_t>(e - 1)]));
  return out;
}

inline CnfFormula column_clauses(const FacetColumn& column, const VarMap& vm) {
  CnfFormula f(vm.basis_count());
  append_relations(f, column_conditions(column, vm));
  return f;
}

enum class EncodingMode { paper_exact, extended };

inline std::string_view to_string(EncodingMode m) { return m == EncodingMode::paper_exact ? "paper-exact" : "extended"; }

struct EndpointConstraints {
  std::optional<Tuple> source;  // sorted d-subset
  bool orient_source = true;    // all edges leave the source
  Tuple sink;                   // sorted d-subset; all edges enter it
  bool anchor = true;           // chi(1..r) = +1
  EncodingMode mode = EncodingMode::paper_exact;
};

// chi(V, f) = chi(V with k replaced by g, f) for every k in V.
inline std::vector<Biconditional> endpoint_vertex_conditions(const VarMap& vm, std::span<const int> v) {
  const auto& gs = vm.ground();
  std::vector<Biconditional> out;
  for (int k : v)
    out.push_back(chi_relation(vm, detail::with(v, {gs.f()}), +1, detail::with(detail::replaced(v, k, gs.g()), {gs.f()})));
  return out;
}

inline std::vector<Biconditional> source_sink_conditions(const VarMap& vm, const EndpointConstraints& ec) {
  std::vector<Biconditional> out;
  auto add = [&](const std::vector<Biconditional>& b) { out.insert(out.end(), b.begin(), b.end()); };
  if (ec.source) {
    if (intersection_size(*ec.source, ec.sink) != 0) throw DomainError("source and sink labels must be disjoint");
    add(endpoint_vertex_conditions(vm, *ec.source));
    if (ec.orient_source)
      for (int k : *ec.source) out.push_back(edge_condition(vm, *ec.source, k, -1));
    if (ec.mode == EncodingMode::extended) add(vertex_conditions(vm, *ec.source));
  }
  add(endpoint_vertex_conditions(vm, ec.sink));
  for (int k : ec.sink) out.push_back(edge_condition(vm, ec.sink, k, +1));
  if (ec.mode == EncodingMode::extended) add(vertex_conditions(vm, ec.sink));
  return out;
}

inline Clause anchor_clause(const VarMap& vm) { return Clause{literal_for(vm, range_tuple(1, vm.ground().rank()), +1)}; }

inline CnfFormula source_sink_clauses(const VarMap& vm, const EndpointConstraints& ec) {
  CnfFormula f(vm.basis_count());
  if (ec.anchor) f.add(anchor_clause(vm));
  append_relations(f, source_sink_conditions(vm, ec));
  return f;
}

struct PathConditionOptions {
  // Also orient the first edge from the path's own start vertex. Needed when
  // the start is not constrained to be the source.
  bool include_start_edge = false;
};

// Conjunction of conditions under which the labelled path is a monotone path:
// every intermediate label is a vertex and every edge out of an intermediate
// vertex (and the start, if requested) is oriented forward.
inline std::vector<Biconditional> path_conditions(const PathType& path, const VarMap& vm, PathConditionOptions opts = {}) {
  const auto& gs = vm.ground();
  if (path.d != gs.d() || path.n != gs.n()) throw DomainError("path dimensions do not match the ground set");
  const auto L = path.sorted_labels();
  if (L.size() < 2) throw DomainError("a path needs at least two labels");
  for (std::size_t i = 0; i + 1 < L.size(); ++i)
    if (intersection_size(L[i], L[i + 1]) + 1 != static_cast<std::size_t>(gs.d()))
      throw DomainError("labels " + format_tuple(L[i]) + " and " + format_tuple(L[i + 1]) + " are not adjacent");
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      if (L[i] == L[j]) throw DomainError("path revisits label " + format_tuple(L[i]));
  std::vector<Biconditional> out;
  for (std::size_t i = 1; i + 1 < L.size(); ++i) {
    auto v = vertex_conditions(vm, L[i]);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (std::size_t i = opts.include_start_edge ? 0 : 1; i + 1 < L.size(); ++i) {
    const int leaving = sorted_minus(L[i], L[i + 1]).front();
    out.push_back(edge_condition(vm, L[i], leaving, -1));
  }
  return out;
}

// Auxiliary variables y <-> (a <-> b), shared across every path that uses the
// same condition. Definitions are kept apart so they can be emitted last.
class TseitinCache {
 public:
  // Literal equivalent to the biconditional, or nullopt for a tautology.
  // A contradictory biconditional returns the literal `false_literal()`.
  std::optional<Literal> define(VarMap& vm, const Biconditional& bic) {
    const Literal a = bic.a;
    const Literal b = bic.relation == Relation::equal ? bic.b : ~bic.b;
    if (a.variable() == b.variable()) {
      if (a == b) return std::nullopt;
      return false_literal(vm);
    }
    int lo = a.variable();
    int hi = b.variable();
    if (lo > hi) std::swap(lo, hi);
    const bool flipped = a.positive() != b.positive();
    auto key = std::make_tuple(lo, hi, flipped);
    if (auto it = cache_.find(key); it != cache_.end()) return Literal(it->second, true);
    const int y = vm.allocate_aux();
    cache_.emplace(key, y);
    const Literal Y(y, true);
    definitions_.add({~Y, ~a, b});
    definitions_.add({~Y, a, ~b});
    definitions_.add({Y, a, b});
    definitions_.add({Y, ~a, ~b});
    return Y;
  }

  const CnfFormula& definitions() const { return definitions_; }
  std::size_t size() const { return cache_.size(); }

 private:
  Literal false_literal(VarMap& vm) {
    if (!false_var_) {
      false_var_ = vm.allocate_aux();
      definitions_.add({Literal(*false_var_, false)});
    }
    return Literal(*false_var_, true);
  }

  std::map<std::tuple<int, int, bool>, int> cache_;
  std::optional<int> false_var_;
  CnfFormula definitions_;
};

// One clause per path: the negation of its condition conjunction, over
// auxiliaries defined in `aux`. A contradictory condition leaves the clause
// trivially true. Returns the number of clauses added.
inline std::size_t exclude_paths(CnfFormula& formula, TseitinCache& aux, std::span<const PathType> paths, VarMap& vm,
                                 PathConditionOptions opts = {}) {
  std::size_t added = 0;
  for (const auto& p : paths) {
    Clause c;
    for (const auto& b : path_conditions(p, vm, opts)) {
      auto y = aux.define(vm, b);
      if (!y) continue;
      c.push_back(~*y);
    }
    if (c.empty()) throw InternalConsistencyError("path conditions are all tautologies; the path cannot be excluded");
    formula.add(std::move(c));
    ++added;
  }
  formula.reserve_variables(vm.next_aux() - 1);
  return added;
}

inline std::size_t enforce_path(CnfFormula& formula, const PathType& path, const VarMap& vm, PathConditionOptions opts = {}) {
  const auto before = formula.size();
  append_relations(formula, path_conditions(path, vm, opts));
  return formula.size() - before;
}

// Assembles an instance in a fixed section order: axioms, anchor, endpoint
// conditions, facet columns, exclusions, enforcements, auxiliary definitions.
class InstanceBuilder {
 public:
  explicit InstanceBuilder(GroundSet ground) : vm_(ground) {}

  VarMap& vars() { return vm_; }
  const VarMap& vars() const { return vm_; }

  InstanceBuilder& comment(std::string line) {
    comments_.push_back(std::move(line));
    return *this;
  }
  InstanceBuilder& axioms() {
    axioms_ = gp3_clauses(vm_);
    return *this;
  }
  InstanceBuilder& anchor() {
    units_.add(anchor_clause(vm_));
    return *this;
  }
  InstanceBuilder& endpoints(EndpointConstraints ec) {
    ec.anchor = false;
    endpoints_.append(source_sink_clauses(vm_, ec));
    return *this;
  }
  InstanceBuilder& column(const FacetColumn& c) {
    columns_.append(column_clauses(c, vm_));
    return *this;
  }
  InstanceBuilder& exclude(std::span<const PathType> paths, PathConditionOptions opts = {}) {
    excluded_ += exclude_paths(exclusions_, aux_, paths, vm_, opts);
    return *this;
  }
  InstanceBuilder& enforce(const PathType& path, PathConditionOptions opts = {}) {
    enforce_path(enforcements_, path, vm_, opts);
    return *this;
  }

  std::size_t excluded_count() const { return excluded_; }
  std::size_t aux_count() const { return aux_.size(); }

  CnfFormula build() const {
    CnfFormula f(vm_.basis_count());
    for (const auto& c : comments_) f.add_comment(c);
    f.add_comment("bases " + std::to_string(vm_.basis_count()) + " auxiliaries " + std::to_string(vm_.next_aux() - 1 - vm_.basis_count()));
    f.add_comment("sections axioms " + std::to_string(axioms_.size()) + " units " + std::to_string(units_.size()) + " endpoints " +
                  std::to_string(endpoints_.size()) + " columns " + std::to_string(columns_.size()) + " exclusions " +
                  std::to_string(exclusions_.size()) + " enforcements " + std::to_string(enforcements_.size()) +
                  " definitions " + std::to_string(aux_.definitions().size()));
    for (const CnfFormula* part : {&axioms_, &units_, &endpoints_, &columns_, &exclusions_, &enforcements_, &aux_.definitions()})
      f.append(*part);
    f.reserve_variables(vm_.next_aux() - 1);
    return f;
  }

 private:
  VarMap vm_;
  std::vector<std::string> comments_;
  CnfFormula axioms_, units_, endpoints_, columns_, exclusions_, enforcements_;
  TseitinCache aux_;
  std::size_t excluded_ = 0;
};

}  // namespace omdp
