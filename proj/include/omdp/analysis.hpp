#pragma once

// Facet-vertex matrices, monotone distances and structural checks on
// oriented matroid program digraphs.

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "omdp/combinatorics.hpp"
#include "omdp/encoder.hpp"
#include "omdp/errors.hpp"
#include "omdp/program.hpp"

namespace omdp {

// Rows are facets, columns are vertices. A column's nonzero rows are the
// facets of its vertex; -1 means the edge leaving that facet is an out-arc.
class FacetVertexMatrix {
 public:
  FacetVertexMatrix(int d, std::vector<std::vector<int>> rows) : d_(d), rows_(std::move(rows)) {
    if (rows_.empty()) throw ParseError("matrix has no rows");
    const std::size_t cols = rows_.front().size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != cols)
        throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) + " entries, expected " +
                         std::to_string(cols));
      for (int x : rows_[i])
        if (x < -1 || x > 1) throw ParseError("row " + std::to_string(i + 1) + " has illegal entry " + std::to_string(x));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      int nz = 0;
      for (const auto& r : rows_) nz += r[j] != 0;
      if (nz != d_)
        throw ParseError("column " + std::to_string(j + 1) + " has " + std::to_string(nz) + " nonzero entries, expected " +
                         std::to_string(d_));
    }
    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t j = 0; j < cols; ++j) {
      auto c = column(j).entries;
      if (auto [it, fresh] = seen.emplace(c, j); !fresh)
        throw ParseError("columns " + std::to_string(it->second + 1) + " and " + std::to_string(j + 1) + " are identical");
    }
  }

  int d() const { return d_; }
  int facets() const { return static_cast<int>(rows_.size()); }
  std::size_t columns() const { return rows_.front().size(); }
  int at(int facet, std::size_t col) const { return rows_[static_cast<std::size_t>(facet - 1)][col]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  FacetColumn column(std::size_t j) const {
    FacetColumn c;
    for (const auto& r : rows_) c.entries.push_back(r[j]);
    return c;
  }
  VertexLabel label(std::size_t j) const {
    VertexLabel l;
    for (int i = 1; i <= facets(); ++i)
      if (at(i, j) != 0) l.push_back(i);
    return l;
  }

  // Columns as a sorted multiset, for order-insensitive comparison.
  std::vector<std::vector<int>> column_set() const {
    std::vector<std::vector<int>> cs;
    for (std::size_t j = 0; j < columns(); ++j) cs.push_back(column(j).entries);
    std::sort(cs.begin(), cs.end());
    return cs;
  }

 private:
  int d_;
  std::vector<std::vector<int>> rows_;
};

// Rows are read line by line; brackets, commas and blank lines are ignored so
// matrices printed as nested lists paste directly.
inline FacetVertexMatrix parse_facet_vertex_matrix(const std::string& text, int d) {
  std::vector<std::vector<int>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    for (char& c : line)
      if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("illegal matrix entry '" + tok + "'");
      row.push_back(x);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return FacetVertexMatrix(d, std::move(rows));
}

inline std::string emit(const FacetVertexMatrix& m) {
  std::ostringstream os;
  for (const auto& r : m.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << '\n';
  }
  return os.str();
}

inline OmpDigraph digraph_from_matrix(const FacetVertexMatrix& m) {
  OmpDigraph dg(m.d(), m.facets());
  for (std::size_t j = 0; j < m.columns(); ++j) {
    auto l = m.label(j);
    std::vector<int> s;
    for (int f : l) s.push_back(m.at(f, j));
    dg.add_vertex(std::move(l), std::move(s));
  }
  dg.connect(true);
  return dg;
}

// Columns in vertex order, entries from the per-vertex edge signs.
inline FacetVertexMatrix facet_vertex_matrix(const OmpDigraph& dg) {
  if (dg.size() == 0) throw DomainError("digraph has no vertices");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(dg.n()), std::vector<int>(dg.size(), 0));
  for (std::size_t v = 0; v < dg.size(); ++v)
    for (int f : dg.label(v)) rows[static_cast<std::size_t>(f - 1)][v] = dg.sign(v, f);
  return FacetVertexMatrix(dg.d(), std::move(rows));
}

inline std::optional<std::size_t> shortest_monotone_distance(const OmpDigraph& dg, std::span<const int> from,
                                                             std::span<const int> to) {
  auto sorted = [](std::span<const int> l) {
    Tuple t(l.begin(), l.end());
    std::sort(t.begin(), t.end());
    return t;
  };
  auto u = dg.index_of(sorted(from));
  auto v = dg.index_of(sorted(to));
  if (!u) throw DomainError("unknown vertex " + format_tuple(from));
  if (!v) throw DomainError("unknown vertex " + format_tuple(to));
  std::vector<long> dist(dg.size(), -1);
  std::deque<std::size_t> q{*u};
  dist[*u] = 0;
  while (!q.empty()) {
    const auto x = q.front();
    q.pop_front();
    if (x == *v) return static_cast<std::size_t>(dist[x]);
    for (auto y : dg.out(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  return std::nullopt;
}

// Labels in order of a topological sweep, or nullopt when there is a cycle.
inline std::optional<std::vector<std::size_t>> topological_order(const OmpDigraph& dg) {
  std::vector<std::size_t> indeg(dg.size());
  for (std::size_t v = 0; v < dg.size(); ++v) indeg[v] = dg.in(v).size();
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < dg.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const auto v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto w : dg.out(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != dg.size()) return std::nullopt;
  return order;
}

struct FaceVerdict {
  Tuple facets;  // the face is the intersection of these facets
  std::size_t vertices = 0;
  std::size_t sources = 0;
  std::size_t sinks = 0;
};

struct DigraphReport {
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  bool acyclic = false;
  bool bounded = true;
  std::vector<VertexLabel> sources;
  std::vector<VertexLabel> sinks;
  std::size_t faces_checked = 0;
  std::vector<FaceVerdict> bad_faces;  // faces without a unique source and sink
  std::map<VertexLabel, std::size_t> outmap_sizes;
  std::optional<std::size_t> source_to_sink_distance;  // between the unique source and sink
  std::optional<std::size_t> complementary_distance;   // {1..d} to {n-d+1..n}, when both are vertices
  // Every vertex that can follow the unique source in a topological sweep is
  // the unique source of the facet it entered. Unset when not acyclic or the
  // source is not unique.
  std::optional<bool> sweep_neighbor_property;
  std::vector<VertexLabel> sweep_neighbor_failures;

  bool unique_face_sources_and_sinks() const { return bad_faces.empty(); }
};

// Vertices on every facet of F, with arcs restricted to them.
inline FaceVerdict check_face(const OmpDigraph& dg, std::span<const int> facets) {
  FaceVerdict fv{Tuple(facets.begin(), facets.end())};
  std::vector<char> on(dg.size(), 0);
  for (std::size_t v = 0; v < dg.size(); ++v) {
    bool all = true;
    for (int f : facets) all = all && contains(dg.label(v), f);
    on[v] = all;
    fv.vertices += all;
  }
  for (std::size_t v = 0; v < dg.size(); ++v) {
    if (!on[v]) continue;
    const bool has_in = std::any_of(dg.in(v).begin(), dg.in(v).end(), [&](auto u) { return on[u] != 0; });
    const bool has_out = std::any_of(dg.out(v).begin(), dg.out(v).end(), [&](auto u) { return on[u] != 0; });
    fv.sources += !has_in;
    fv.sinks += !has_out;
  }
  return fv;
}

inline DigraphReport digraph_checks(const OmpDigraph& dg) {
  DigraphReport r;
  r.vertex_count = dg.size();
  r.bounded = dg.bounded();
  for (std::size_t v = 0; v < dg.size(); ++v) {
    r.arc_count += dg.out(v).size();
    if (dg.in(v).empty()) r.sources.push_back(dg.label(v));
    if (dg.out(v).empty()) r.sinks.push_back(dg.label(v));
    r.outmap_sizes[dg.label(v)] = dg.outmap(v).size();
  }
  const auto order = topological_order(dg);
  r.acyclic = order.has_value();

  for (int k = 0; k <= dg.d() - 1; ++k) {
    for_each_subset(1, dg.n(), k, [&](std::span<const int> F) {
      auto fv = check_face(dg, F);
      if (fv.vertices == 0) return;
      ++r.faces_checked;
      if (fv.sources != 1 || fv.sinks != 1) r.bad_faces.push_back(std::move(fv));
    });
  }

  if (r.sources.size() == 1 && r.sinks.size() == 1)
    r.source_to_sink_distance = shortest_monotone_distance(dg, r.sources.front(), r.sinks.front());
  const auto lo = source_label(dg.d());
  const auto hi = sink_label(dg.d(), dg.n());
  if (dg.index_of(lo) && dg.index_of(hi)) r.complementary_distance = shortest_monotone_distance(dg, lo, hi);

  if (r.acyclic && r.sources.size() == 1) {
    const auto src = *dg.index_of(r.sources.front());
    bool ok = true;
    for (auto w : dg.out(src)) {
      // w can directly follow the source in some sweep iff its only in-arc is from the source
      if (dg.in(w).size() != 1) continue;
      const auto entered = sorted_minus(dg.label(w), dg.label(src));
      const Tuple F{entered.front()};
      const auto fv = check_face(dg, F);
      bool is_unique_source = fv.sources == 1;
      for (auto u : dg.in(w)) is_unique_source = is_unique_source && !contains(dg.label(u), F.front());
      if (!is_unique_source) {
        ok = false;
        r.sweep_neighbor_failures.push_back(dg.label(w));
      }
    }
    r.sweep_neighbor_property = ok;
  }
  return r;
}

inline nlohmann::json to_json(const DigraphReport& r) {
  nlohmann::json j;
  j["vertices"] = r.vertex_count;
  j["arcs"] = r.arc_count;
  j["acyclic"] = r.acyclic;
  j["bounded"] = r.bounded;
  j["sources"] = r.sources;
  j["sinks"] = r.sinks;
  j["faces_checked"] = r.faces_checked;
  j["unique_face_sources_and_sinks"] = r.unique_face_sources_and_sinks();
  auto bad = nlohmann::json::array();
  for (const auto& f : r.bad_faces)
    bad.push_back({{"facets", f.facets}, {"vertices", f.vertices}, {"sources", f.sources}, {"sinks", f.sinks}});
  j["bad_faces"] = bad;
  auto om = nlohmann::json::array();
  for (const auto& [label, size] : r.outmap_sizes) om.push_back({{"vertex", label}, {"outmap_size", size}});
  j["outmaps"] = om;
  j["source_to_sink_distance"] = r.source_to_sink_distance ? nlohmann::json(*r.source_to_sink_distance) : nlohmann::json(nullptr);
  j["complementary_distance"] = r.complementary_distance ? nlohmann::json(*r.complementary_distance) : nlohmann::json(nullptr);
  j["sweep_neighbor_property"] = r.sweep_neighbor_property ? nlohmann::json(*r.sweep_neighbor_property) : nlohmann::json(nullptr);
  j["sweep_neighbor_failures"] = r.sweep_neighbor_failures;
  return j;
}

// Whether the labelled path runs along arcs of the digraph.
inline bool digraph_contains_path(const OmpDigraph& dg, const PathType& p) {
  const auto L = p.sorted_labels();
  std::vector<std::size_t> idx;
  for (const auto& l : L) {
    auto i = dg.index_of(l);
    if (!i) return false;
    idx.push_back(*i);
  }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (!dg.has_arc(idx[i], idx[i + 1])) return false;
  return true;
}

}  // namespace omdp
