#pragma once

// Independent oracles for the tests: exact rational linear algebra on small
// integer vector configurations, and brute-force clause evaluation.

#include <boost/rational.hpp>
#include <optional>
#include <random>
#include <vector>

#include "omdp/chirotope.hpp"
#include "omdp/cnf.hpp"

namespace test {

using Q = boost::rational<long long>;
using Matrix = std::vector<std::vector<Q>>;

inline int sign(const Q& q) { return q > Q(0) ? 1 : (q < Q(0) ? -1 : 0); }

inline Q determinant(Matrix a) {
  const std::size_t n = a.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Q(0)) ++p;
    if (p == n) return Q(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q k = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  return det;
}

// A nonzero vector spanning the null space of a rank-deficient-by-one matrix.
inline std::vector<Q> null_vector(Matrix a, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == Q(0)) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Q inv = Q(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == Q(0)) continue;
      const Q k = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] -= k * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  if (free_col == cols) throw std::logic_error("null space is trivial");
  std::vector<Q> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -a[r][free_col];
  return x;
}

struct Config {
  int d = 0;
  int n = 0;
  std::vector<std::vector<long long>> w;  // element e is w[e-1], length d+1
  // For programs: maximize c.x subject to a_i.x <= b_i.
  std::vector<std::vector<long long>> a;
  std::vector<long long> b;
  std::vector<long long> c;
  omdp::Chirotope chi{omdp::GroundSet(1, 2), std::vector<std::int8_t>(6, 1)};
};

inline int det_sign(const Config& cfg, std::span<const int> basis) {
  Matrix m;
  for (int e : basis) {
    std::vector<Q> row;
    for (auto x : cfg.w[static_cast<std::size_t>(e - 1)]) row.emplace_back(x);
    m.push_back(row);
  }
  return sign(determinant(m));
}

inline bool finish(Config& cfg) {
  const omdp::GroundSet gs(cfg.d, cfg.n);
  bool generic = true;
  std::vector<std::int8_t> signs(gs.basis_count());
  omdp::for_each_subset(1, gs.size(), gs.rank(), [&](std::span<const int> b) {
    const int s = det_sign(cfg, b);
    generic = generic && s != 0;
    signs[omdp::colex_rank(b) - 1] = static_cast<std::int8_t>(s);
  });
  if (generic) cfg.chi = omdp::Chirotope(gs, std::move(signs));
  return generic;
}

// Generic random integer vectors; element ordering as in the ground set.
inline Config random_realizable(int d, int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> u(-9, 9);
  for (;;) {
    Config cfg;
    cfg.d = d;
    cfg.n = n;
    for (int e = 0; e < n + 2; ++e) {
      std::vector<long long> v;
      for (int i = 0; i <= d; ++i) v.push_back(u(rng));
      cfg.w.push_back(v);
    }
    if (finish(cfg)) return cfg;
  }
}

// The program max c.x, a_i.x <= b_i as a vector configuration:
// w_i = (-a_i, b_i), w_f = (c, 0), w_g = (0, ..., 0, 1).
inline Config random_polytope_program(int d, int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> u(-9, 9);
  std::uniform_int_distribution<long long> ub(5, 15);
  for (;;) {
    Config cfg;
    cfg.d = d;
    cfg.n = n;
    for (int i = 0; i < n; ++i) {
      std::vector<long long> ai;
      for (int j = 0; j < d; ++j) ai.push_back(u(rng));
      cfg.a.push_back(ai);
      cfg.b.push_back(ub(rng));
      auto wi = ai;
      for (auto& x : wi) x = -x;
      wi.push_back(cfg.b.back());
      cfg.w.push_back(wi);
    }
    for (int j = 0; j < d; ++j) cfg.c.push_back(u(rng));
    auto wf = cfg.c;
    wf.push_back(0);
    cfg.w.push_back(wf);
    std::vector<long long> wg(static_cast<std::size_t>(d), 0);
    wg.push_back(1);
    cfg.w.push_back(wg);
    if (finish(cfg)) return cfg;
  }
}

inline std::vector<Q> solve_vertex(const Config& cfg, std::span<const int> label) {
  Matrix m;
  for (int i : label) {
    std::vector<Q> row;
    for (auto x : cfg.a[static_cast<std::size_t>(i - 1)]) row.emplace_back(x);
    row.emplace_back(-cfg.b[static_cast<std::size_t>(i - 1)]);
    m.push_back(row);
  }
  auto y = null_vector(m, static_cast<std::size_t>(cfg.d) + 1);
  const Q h = y.back();
  std::vector<Q> x;
  for (int j = 0; j < cfg.d; ++j) x.push_back(y[static_cast<std::size_t>(j)] / h);
  return x;
}

inline Q objective_at(const Config& cfg, std::span<const int> label) {
  const auto x = solve_vertex(cfg, label);
  Q s = 0;
  for (int j = 0; j < cfg.d; ++j) s += Q(cfg.c[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
  return s;
}

inline std::vector<omdp::Tuple> feasible_vertices(const Config& cfg) {
  std::vector<omdp::Tuple> out;
  omdp::for_each_subset(1, cfg.n, cfg.d, [&](std::span<const int> v) {
    const auto x = solve_vertex(cfg, v);
    for (int i = 1; i <= cfg.n; ++i) {
      if (omdp::contains(v, i)) continue;
      Q lhs = 0;
      for (int j = 0; j < cfg.d; ++j) lhs += Q(cfg.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
      if (!(lhs < cfg.b[static_cast<std::size_t>(i - 1)])) return;
    }
    out.emplace_back(v.begin(), v.end());
  });
  return out;
}

// Signs of the linear dependency among the vectors of S, positive on S[0].
inline std::vector<int> null_space_signs(const Config& cfg, std::span<const int> S) {
  const std::size_t r = static_cast<std::size_t>(cfg.d) + 1;
  Matrix m(r, std::vector<Q>(S.size(), 0));
  for (std::size_t j = 0; j < S.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) m[i][j] = cfg.w[static_cast<std::size_t>(S[j] - 1)][i];
  auto lambda = null_vector(m, S.size());
  const int flip = sign(lambda[0]);
  std::vector<int> out(cfg.w.size(), 0);
  for (std::size_t j = 0; j < S.size(); ++j) out[static_cast<std::size_t>(S[j] - 1)] = flip * sign(lambda[j]);
  return out;
}

// Signs of the functional vanishing on Z, positive on element pos.
inline std::vector<int> functional_signs(const Config& cfg, std::span<const int> Z, int pos) {
  const std::size_t r = static_cast<std::size_t>(cfg.d) + 1;
  Matrix m;
  for (int z : Z) {
    std::vector<Q> row;
    for (auto x : cfg.w[static_cast<std::size_t>(z - 1)]) row.emplace_back(x);
    m.push_back(row);
  }
  const auto y = null_vector(m, r);
  std::vector<int> out;
  for (const auto& v : cfg.w) {
    Q s = 0;
    for (std::size_t i = 0; i < r; ++i) s += y[i] * Q(v[i]);
    out.push_back(sign(s));
  }
  const int flip = out[static_cast<std::size_t>(pos - 1)];
  for (auto& x : out) x *= flip;
  return out;
}

// Clause evaluation on a bitmask assignment over variables 1..64.
struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  bool satisfied(std::uint64_t a) const { return ((a & pos) | (~a & neg)) != 0; }
};

inline std::vector<MaskClause> to_masks(const omdp::CnfFormula& f) {
  std::vector<MaskClause> out;
  for (const auto& c : f.clauses()) {
    MaskClause m;
    for (auto l : c) {
      if (l.variable() > 64) throw std::logic_error("mask clauses cover 64 variables");
      (l.positive() ? m.pos : m.neg) |= std::uint64_t{1} << (l.variable() - 1);
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace test
