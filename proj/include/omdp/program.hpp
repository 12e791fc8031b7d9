#pragma once

// The oriented matroid program carried by a chirotope: its vertices (d-subsets
// of facets), the orientation of its graph, and boundedness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omdp/chirotope.hpp"
#include "omdp/combinatorics.hpp"
#include "omdp/errors.hpp"

namespace omdp {

// Sorted d-subset of facets identifying a vertex.
using VertexLabel = Tuple;

// Vertices with a sign per incident facet: -1 when the edge leaving that
// facet is an out-arc of the vertex, +1 when it is an in-arc. Arcs join
// vertices that share d-1 facets.
class OmpDigraph {
 public:
  OmpDigraph(int d, int n) : d_(d), n_(n) {}

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<VertexLabel>& vertices() const { return labels_; }
  const VertexLabel& label(std::size_t v) const { return labels_[v]; }
  const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in(std::size_t v) const { return in_[v]; }
  bool bounded() const { return bounded_; }
  void set_bounded(bool b) { bounded_ = b; }

  std::optional<std::size_t> index_of(std::span<const int> label) const {
    auto it = index_.find(VertexLabel(label.begin(), label.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Sign of the edge through `facet` at vertex v (0 if v is not on facet).
  int sign(std::size_t v, int facet) const {
    const auto& l = labels_[v];
    auto it = std::lower_bound(l.begin(), l.end(), facet);
    if (it == l.end() || *it != facet) return 0;
    return signs_[v][static_cast<std::size_t>(it - l.begin())];
  }
  std::span<const int> signs_of(std::size_t v) const { return signs_[v]; }

  // Facets through which edges leave v.
  Tuple outmap(std::size_t v) const {
    Tuple o;
    for (std::size_t i = 0; i < labels_[v].size(); ++i)
      if (signs_[v][i] < 0) o.push_back(labels_[v][i]);
    return o;
  }

  bool has_arc(std::size_t from, std::size_t to) const {
    return std::find(out_[from].begin(), out_[from].end(), to) != out_[from].end();
  }

  std::size_t add_vertex(VertexLabel label, std::vector<int> signs) {
    if (static_cast<int>(label.size()) != d_ || signs.size() != label.size())
      throw DomainError("vertex " + format_tuple(label) + " must name d facets with one sign each");
    if (index_.count(label)) throw DataError("duplicate vertex " + format_tuple(label));
    index_.emplace(label, labels_.size());
    labels_.push_back(std::move(label));
    signs_.push_back(std::move(signs));
    out_.emplace_back();
    in_.emplace_back();
    return labels_.size() - 1;
  }

  void add_arc(std::size_t from, std::size_t to) {
    out_[from].push_back(to);
    in_[to].push_back(from);
  }

  // Orients every edge between adjacent vertices by the sign at the lower-
  // indexed endpoint. When check_consistency is set, the other endpoint must
  // carry the opposite sign on its entered facet.
  void connect(bool check_consistency) {
    for (auto& o : out_) o.clear();
    for (auto& i : in_) i.clear();
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      const auto& lab = labels_[v];
      for (std::size_t pos = 0; pos < lab.size(); ++pos) {
        for (int k = 1; k <= n_; ++k) {
          if (contains(lab, k)) continue;
          VertexLabel nb = lab;
          nb[pos] = k;
          std::sort(nb.begin(), nb.end());
          auto w = index_of(nb);
          if (!w || *w < v) continue;
          const int s_v = signs_[v][pos];
          const int s_w = sign(*w, k);
          if (check_consistency && s_v != -s_w)
            throw DataError("inconsistent orientation between " + format_tuple(lab) + " and " + format_tuple(nb));
          if (s_v < 0) {
            add_arc(v, *w);
          } else {
            add_arc(*w, v);
          }
        }
      }
    }
  }

 private:
  int d_;
  int n_;
  bool bounded_ = true;
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<int>> signs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::map<VertexLabel, std::size_t> index_;
};

// d-subsets V of [n] whose cocircuit (zero set V, positive on g) is positive
// on every other facet.
inline bool is_program_vertex(const Chirotope& chi, std::span<const int> label) {
  const auto& gs = chi.ground();
  Tuple t(label.begin(), label.end());
  t.push_back(gs.g());
  const int at_g = chi(t);
  for (int k = 1; k <= gs.n(); ++k) {
    if (contains(label, k)) continue;
    t.back() = k;
    if (chi(t) != at_g) return false;
  }
  return true;
}

inline std::vector<VertexLabel> program_vertices(const Chirotope& chi) {
  std::vector<VertexLabel> out;
  for_each_subset(1, chi.ground().n(), chi.ground().d(), [&](std::span<const int> v) {
    if (is_program_vertex(chi, v)) out.emplace_back(v.begin(), v.end());
  });
  return out;
}

// Circuit on V + {f, g}, positive on f, restricted to V.
inline std::vector<int> vertex_circuit_signs(const Chirotope& chi, std::span<const int> label) {
  const auto& gs = chi.ground();
  Tuple support(label.begin(), label.end());
  support.push_back(gs.f());
  support.push_back(gs.g());
  auto c = circuit_on_support(chi, support, gs.f());
  std::vector<int> s;
  for (int e : label) s.push_back(c(e));
  return s;
}

// Every cocircuit vanishing on d facets that has constant sign s on the other
// facets must also have sign s on g.
inline bool program_bounded(const Chirotope& chi) {
  const auto& gs = chi.ground();
  bool bounded = true;
  for_each_subset(1, gs.n(), gs.d(), [&](std::span<const int> z) {
    if (!bounded) return;
    auto D = cocircuit_on_zeroset(chi, z, gs.g());
    int common = 0;
    for (int k = 1; k <= gs.n(); ++k) {
      if (contains(z, k)) continue;
      if (common == 0) {
        common = D(k);
      } else if (D(k) != common) {
        return;
      }
    }
    if (common != D(gs.g())) bounded = false;
  });
  return bounded;
}

inline OmpDigraph program_digraph(const Chirotope& chi) {
  const auto& gs = chi.ground();
  OmpDigraph dg(gs.d(), gs.n());
  for (auto& v : program_vertices(chi)) {
    auto s = vertex_circuit_signs(chi, v);
    dg.add_vertex(std::move(v), std::move(s));
  }
  dg.connect(false);
  dg.set_bounded(program_bounded(chi));
  return dg;
}

}  // namespace omdp
