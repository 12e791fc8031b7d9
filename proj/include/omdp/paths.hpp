#pragma once

// Combinatorial types of monotone paths between the complementary vertices
// {1..d} and {n-d+1..n}: direct paths, the transcribed one-revisit families,
// their relabelings, and the shortest-path rules that every type obeys.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omdp/combinatorics.hpp"
#include "omdp/errors.hpp"

namespace omdp {

// Labels are kept in the positional form the families are written in: step
// i overwrites one slot of the previous label.
struct PathType {
  int d = 0;
  int n = 0;
  std::vector<Tuple> labels;

  std::size_t length() const { return labels.empty() ? 0 : labels.size() - 1; }
  Tuple sorted_label(std::size_t i) const {
    Tuple t = labels[i];
    std::sort(t.begin(), t.end());
    return t;
  }
  std::vector<Tuple> sorted_labels() const {
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < labels.size(); ++i) out.push_back(sorted_label(i));
    return out;
  }
};

inline Tuple source_label(int d) { return range_tuple(1, d); }
inline Tuple sink_label(int d, int n) { return range_tuple(n - d + 1, n); }

struct PathFamily {
  std::string id;
  PathType templ;
  Tuple source_facets;  // permuted among themselves by relabeling
  Tuple sink_facets;
};

enum class PathRule { malformed, not_adjacent, repeated_label, rule1_reenter, rule2_return, rule3_neighbor, shortcut, endpoints };

struct PathViolation {
  PathRule rule;
  std::size_t position;
  std::string message;
};

inline std::string_view to_string(PathRule r) {
  switch (r) {
    case PathRule::malformed: return "malformed";
    case PathRule::not_adjacent: return "not-adjacent";
    case PathRule::repeated_label: return "repeated-label";
    case PathRule::rule1_reenter: return "rule-1";
    case PathRule::rule2_return: return "rule-2";
    case PathRule::rule3_neighbor: return "rule-3";
    case PathRule::shortcut: return "shortcut";
    case PathRule::endpoints: return "endpoints";
  }
  return "?";
}

// Checks that consecutive labels differ in one facet, that no label repeats,
// the three path rules, and that no two labels more than one step apart are
// adjacent. With check_endpoints, the path must run from {1..d} to the sink.
inline std::optional<PathViolation> validate_path_type(const PathType& p, bool check_endpoints = false) {
  const auto L = p.sorted_labels();
  for (std::size_t i = 0; i < L.size(); ++i) {
    const auto& l = L[i];
    bool ok = static_cast<int>(l.size()) == p.d;
    for (std::size_t j = 0; ok && j < l.size(); ++j) ok = l[j] >= 1 && l[j] <= p.n && (j == 0 || l[j - 1] < l[j]);
    if (!ok) return PathViolation{PathRule::malformed, i, "label " + format_tuple(p.labels[i]) + " is not a d-subset of [n]"};
  }
  if (L.size() < 2) return PathViolation{PathRule::malformed, 0, "a path needs at least two labels"};
  const auto adjacent = [&](std::size_t i, std::size_t j) {
    return intersection_size(L[i], L[j]) + 1 == static_cast<std::size_t>(p.d);
  };
  for (std::size_t i = 0; i + 1 < L.size(); ++i)
    if (!adjacent(i, i + 1))
      return PathViolation{PathRule::not_adjacent, i + 1,
                           format_tuple(p.labels[i]) + " and " + format_tuple(p.labels[i + 1]) + " do not share d-1 facets"};
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      if (L[i] == L[j]) return PathViolation{PathRule::repeated_label, j, "label " + format_tuple(p.labels[j]) + " repeats"};
  for (std::size_t i = 1; i + 1 < L.size(); ++i) {
    for (int x : sorted_minus(L[i], L[i - 1]))
      if (!contains(L[i + 1], x))
        return PathViolation{PathRule::rule1_reenter, i + 1, "facet " + std::to_string(x) + " entered at step " + std::to_string(i) + " is left immediately"};
    for (int x : sorted_minus(L[i - 1], L[i]))
      if (contains(L[i + 1], x))
        return PathViolation{PathRule::rule2_return, i + 1, "facet " + std::to_string(x) + " left at step " + std::to_string(i) + " returns immediately"};
  }
  const std::size_t last = L.size() - 1;
  for (std::size_t i = 2; i <= last; ++i)
    if (adjacent(0, i)) return PathViolation{PathRule::rule3_neighbor, i, "neighbor of the first vertex at position " + std::to_string(i)};
  for (std::size_t i = 0; i + 2 <= last; ++i)
    if (adjacent(i, last)) return PathViolation{PathRule::rule3_neighbor, i, "neighbor of the last vertex at position " + std::to_string(i)};
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 2; j < L.size(); ++j)
      if (adjacent(i, j)) return PathViolation{PathRule::shortcut, j, "positions " + std::to_string(i) + " and " + std::to_string(j) + " are adjacent"};
  if (check_endpoints && (L.front() != source_label(p.d) || L.back() != sink_label(p.d, p.n)))
    return PathViolation{PathRule::endpoints, 0, "path does not run from the source label to the sink label"};
  return std::nullopt;
}

// All (d!)^2 paths of length d from {1..d} to {n-d+1..n}: p orders the
// facets leaving the source, q the facets entering from the sink.
inline std::vector<PathType> direct_path_types(int d, int n) {
  if (d < 1 || n < 2 * d) throw DomainError("direct paths need d >= 1 and n >= 2d");
  std::vector<PathType> out;
  out.reserve(factorial(d) * factorial(d));
  Tuple p = source_label(d);
  do {
    Tuple q = sink_label(d, n);
    do {
      PathType path{d, n, {}};
      Tuple cur = source_label(d);
      path.labels.push_back(cur);
      for (int i = 0; i < d; ++i) {
        auto slot = std::find(cur.begin(), cur.end(), p[static_cast<std::size_t>(i)]);
        *slot = q[static_cast<std::size_t>(i)];
        path.labels.push_back(cur);
      }
      out.push_back(std::move(path));
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace detail {

inline PathType make_path(int d, int n, std::vector<Tuple> labels) { return PathType{d, n, std::move(labels)}; }

}  // namespace detail

inline const std::vector<std::string>& revisit_case_ids() {
  static const std::vector<std::string> ids{"sm-5-10-len6", "m-5-10-len7", "sm-4-9-len5", "sm-4-9-len6"};
  return ids;
}

// The one-revisit families, transcribed verbatim. m-5-10-len7 carries the
// fixed prefix [1..5],[6,2,3,4,5]; sm-4-9-len6 carries the step into facet 6.
inline std::vector<PathFamily> revisit_families(std::string_view case_id) {
  using T = std::vector<Tuple>;
  std::vector<T> templates;
  int d = 0;
  int n = 0;
  T prefix;
  if (case_id == "sm-5-10-len6") {
    d = 5, n = 10;
    templates = {
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {8, 7, 3, 4, 5}, {8, 7, 9, 4, 5}, {8, 7, 9, 6, 5}, {8, 7, 9, 6, 10}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {8, 7, 3, 4, 5}, {8, 7, 9, 4, 5}, {8, 7, 9, 10, 5}, {8, 7, 9, 10, 6}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {6, 7, 8, 4, 5}, {9, 7, 8, 4, 5}, {9, 7, 8, 10, 5}, {9, 7, 8, 10, 6}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {6, 7, 8, 4, 5}, {6, 9, 8, 4, 5}, {6, 9, 8, 10, 5}, {6, 9, 8, 10, 7}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 8, 5}, {6, 7, 9, 8, 5}, {6, 7, 9, 8, 10}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 8, 5}, {6, 7, 1, 8, 9}, {6, 7, 10, 8, 9}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {6, 7, 8, 4, 5}, {6, 7, 8, 1, 5}, {6, 7, 8, 1, 9}, {6, 7, 8, 10, 9}},
        {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}, {6, 7, 3, 4, 5}, {6, 7, 8, 4, 5}, {6, 7, 8, 2, 5}, {6, 7, 8, 2, 9}, {6, 7, 8, 10, 9}},
    };
  } else if (case_id == "m-5-10-len7") {
    d = 5, n = 10;
    prefix = {{1, 2, 3, 4, 5}, {6, 2, 3, 4, 5}};
    templates = {
        {{6, 7, 3, 4, 5}, {6, 7, 8, 4, 5}, {6, 7, 8, 1, 5}, {6, 7, 8, 1, 2}, {6, 7, 8, 9, 2}, {6, 7, 8, 9, 10}},
        {{6, 7, 3, 4, 5}, {6, 7, 8, 4, 5}, {6, 7, 8, 2, 5}, {6, 7, 8, 2, 1}, {6, 7, 8, 9, 1}, {6, 7, 8, 9, 10}},
        {{6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 8, 5}, {6, 7, 1, 8, 2}, {6, 7, 9, 8, 2}, {6, 7, 9, 8, 10}},
        {{6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 8, 5}, {6, 7, 2, 8, 5}, {6, 7, 2, 8, 9}, {6, 7, 10, 8, 9}},
        {{6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 2, 5}, {6, 7, 1, 2, 8}, {6, 7, 9, 2, 8}, {6, 7, 9, 10, 8}},
        {{6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 2, 5}, {6, 7, 8, 2, 5}, {6, 7, 8, 2, 9}, {6, 7, 8, 10, 9}},
        {{6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 2, 5}, {6, 7, 1, 2, 8}, {6, 7, 1, 9, 8}, {6, 7, 10, 9, 8}},
        {{6, 7, 3, 4, 5}, {6, 7, 1, 4, 5}, {6, 7, 1, 2, 5}, {6, 7, 8, 2, 5}, {6, 7, 8, 9, 5}, {6, 7, 8, 9, 10}},
    };
  } else if (case_id == "sm-4-9-len5") {
    d = 4, n = 9;
    templates = {
        {{1, 2, 3, 4}, {5, 2, 3, 4}, {5, 6, 3, 4}, {5, 6, 7, 4}, {5, 6, 7, 8}, {9, 6, 7, 8}},
        {{1, 2, 3, 4}, {5, 2, 3, 4}, {5, 6, 3, 4}, {5, 6, 7, 4}, {8, 6, 7, 4}, {8, 6, 7, 9}},
        {{1, 2, 3, 4}, {5, 2, 3, 4}, {5, 6, 3, 4}, {7, 6, 3, 4}, {7, 6, 8, 4}, {7, 6, 8, 9}},
        {{1, 2, 3, 4}, {6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 7, 4}, {6, 5, 7, 8}, {6, 9, 7, 8}},
        {{1, 2, 3, 4}, {6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 7, 4}, {6, 8, 7, 4}, {6, 8, 7, 9}},
        {{1, 2, 3, 4}, {6, 2, 3, 4}, {6, 7, 3, 4}, {6, 7, 5, 4}, {6, 7, 5, 8}, {6, 7, 9, 8}},
        {{1, 2, 3, 4}, {6, 2, 3, 4}, {6, 7, 3, 4}, {8, 7, 3, 4}, {8, 7, 9, 4}, {8, 7, 9, 6}},
        {{1, 2, 3, 4}, {6, 2, 3, 4}, {6, 7, 3, 4}, {6, 7, 1, 4}, {6, 7, 1, 8}, {6, 7, 9, 8}},
    };
  } else if (case_id == "sm-4-9-len6") {
    d = 4, n = 9;
    prefix = {{1, 2, 3, 4}};
    templates = {
        {{6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 1, 4}, {6, 5, 1, 7}, {6, 5, 8, 7}, {6, 9, 8, 7}},
        {{6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 1, 4}, {6, 5, 1, 7}, {6, 8, 1, 7}, {6, 8, 9, 7}},
        {{6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 1, 4}, {6, 7, 1, 4}, {6, 7, 8, 4}, {6, 7, 8, 9}},
        {{6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 1, 4}, {6, 7, 1, 4}, {6, 7, 1, 8}, {6, 7, 9, 8}},
        {{6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 7, 4}, {6, 5, 7, 1}, {6, 8, 7, 1}, {6, 8, 7, 9}},
        {{6, 2, 3, 4}, {6, 5, 3, 4}, {6, 5, 7, 4}, {6, 1, 7, 4}, {6, 1, 7, 8}, {6, 9, 7, 8}},
        {{6, 2, 3, 4}, {6, 7, 3, 4}, {6, 7, 1, 4}, {6, 7, 1, 5}, {6, 7, 8, 5}, {6, 7, 8, 9}},
        {{6, 2, 3, 4}, {6, 7, 3, 4}, {6, 7, 5, 4}, {6, 7, 5, 1}, {6, 7, 8, 1}, {6, 7, 8, 9}},
    };
  } else {
    throw DomainError("unknown path family case '" + std::string(case_id) + "'");
  }
  std::vector<PathFamily> out;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    T labels = prefix;
    labels.insert(labels.end(), templates[i].begin(), templates[i].end());
    out.push_back(PathFamily{std::string(case_id) + "/" + std::to_string(i + 1), detail::make_path(d, n, std::move(labels)),
                             source_label(d), sink_label(d, n)});
  }
  return out;
}

inline PathType relabel(const PathType& p, const std::map<int, int>& perm) {
  PathType out{p.d, p.n, p.labels};
  for (auto& l : out.labels)
    for (int& x : l)
      if (auto it = perm.find(x); it != perm.end()) x = it->second;
  return out;
}

// Every relabeling of the template by a permutation of the source facets and
// one of the sink facets, deduplicated on the sorted label sequence.
inline std::vector<PathType> expand_relabelings(const PathFamily& family) {
  std::vector<PathType> out;
  std::set<std::vector<Tuple>> seen;
  Tuple ps = family.source_facets;
  do {
    Tuple qs = family.sink_facets;
    do {
      std::map<int, int> perm;
      for (std::size_t i = 0; i < ps.size(); ++i) perm[family.source_facets[i]] = ps[i];
      for (std::size_t i = 0; i < qs.size(); ++i) perm[family.sink_facets[i]] = qs[i];
      auto p = relabel(family.templ, perm);
      if (auto v = validate_path_type(p)) throw InternalConsistencyError("relabeled path violates " + std::string(to_string(v->rule)));
      if (seen.insert(p.sorted_labels()).second) out.push_back(std::move(p));
    } while (std::next_permutation(qs.begin(), qs.end()));
  } while (std::next_permutation(ps.begin(), ps.end()));
  return out;
}

inline std::vector<PathType> expand_relabelings(std::span<const PathFamily> families) {
  std::vector<PathType> out;
  std::set<std::vector<Tuple>> seen;
  for (const auto& fam : families)
    for (auto& p : expand_relabelings(fam))
      if (seen.insert(p.sorted_labels()).second) out.push_back(std::move(p));
  return out;
}

// Relabels source facets in order of first departure and sink facets in order
// of first arrival, giving one representative per relabeling orbit.
inline std::vector<Tuple> canonical_orbit_key(const PathType& p) {
  const auto L = p.sorted_labels();
  const Tuple src = source_label(p.d);
  const Tuple snk = sink_label(p.d, p.n);
  std::map<int, int> perm;
  int next_src = 1;
  int next_snk = p.n - p.d + 1;
  for (std::size_t i = 1; i < L.size(); ++i) {
    for (int x : sorted_minus(L[i - 1], L[i]))
      if (contains(src, x) && !perm.count(x)) perm[x] = next_src++;
    for (int x : sorted_minus(L[i], L[i - 1]))
      if (contains(snk, x) && !perm.count(x)) perm[x] = next_snk++;
  }
  for (int x : src)
    if (!perm.count(x)) perm[x] = next_src++;
  for (int x : snk)
    if (!perm.count(x)) perm[x] = next_snk++;
  return relabel(p, perm).sorted_labels();
}

// Brute-force enumeration of every label sequence of the given length from
// {1..d} to the sink that passes validate_path_type.
inline std::vector<PathType> enumerate_shortest_label_paths(int d, int n, std::size_t length) {
  std::vector<PathType> out;
  const Tuple target = sink_label(d, n);
  std::vector<Tuple> seq{source_label(d)};
  auto dfs = [&](auto&& self) -> void {
    const Tuple cur = seq.back();
    const std::size_t steps_left = length + 1 - seq.size();
    const std::size_t missing = static_cast<std::size_t>(d) - intersection_size(cur, target);
    if (missing > steps_left) return;
    if (steps_left == 0) {
      if (cur == target) {
        PathType p{d, n, seq};
        if (!validate_path_type(p)) out.push_back(std::move(p));
      }
      return;
    }
    for (std::size_t pos = 0; pos < cur.size(); ++pos) {
      for (int k = 1; k <= n; ++k) {
        if (contains(cur, k)) continue;
        Tuple next = cur;
        next[pos] = k;
        std::sort(next.begin(), next.end());
        bool bad = false;
        // non-consecutive earlier labels must not be adjacent or equal
        for (std::size_t i = 0; i + 1 < seq.size() && !bad; ++i)
          bad = intersection_size(seq[i], next) + 1 >= static_cast<std::size_t>(d);
        if (bad) continue;
        seq.push_back(std::move(next));
        self(self);
        seq.pop_back();
      }
    }
  };
  dfs(dfs);
  return out;
}

}  // namespace omdp
