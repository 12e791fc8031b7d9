#pragma once

// Conflict-driven clause-learning SAT solver: two watched literals with
// blockers, first-UIP learning with recursive minimization, VSIDS branching,
// phase saving, Luby restarts and LBD-based learnt clause reduction.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "omdp/cnf.hpp"

namespace omdp::cdcl {

// Literal code 2*v + (negative ? 1 : 0) over 0-based variables.
using Lit = std::uint32_t;
constexpr Lit lit_of(int var, bool negative) { return static_cast<Lit>(2 * var + (negative ? 1 : 0)); }
constexpr int var_of(Lit l) { return static_cast<int>(l >> 1); }
constexpr bool negative(Lit l) { return (l & 1u) != 0; }
constexpr Lit neg(Lit l) { return l ^ 1u; }

using CRef = std::uint32_t;
constexpr CRef kNoReason = UINT32_MAX;

struct Stats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_literals = 0;
  std::uint64_t reductions = 0;

  bool operator==(const Stats&) const = default;
};

struct Options {
  std::uint64_t seed = 91648253;
  double random_decision_freq = 0.0;
  double var_decay = 0.95;
  double clause_decay = 0.999;
  int luby_unit = 100;
  int first_reduce = 2000;
  int reduce_increment = 300;
};

enum class Result { sat, unsat, unknown };

class Solver {
 public:
  explicit Solver(Options opts = {}) : opts_(opts), rng_(opts.seed) {}

  int new_var() {
    const int v = num_vars();
    assigns_.push_back(0);
    level_.push_back(0);
    reason_.push_back(kNoReason);
    activity_.push_back(0.0);
    polarity_.push_back(1);
    seen_.push_back(0);
    heap_pos_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v;
  }

  int num_vars() const { return static_cast<int>(assigns_.size()); }
  std::size_t num_clauses() const { return original_count_; }
  const Stats& stats() const { return stats_; }

  // DIMACS-style literals (1-based, sign is polarity). Returns false once the
  // formula is known to be unsatisfiable at level 0.
  bool add_clause(std::span<const int> dimacs) {
    if (!ok_) return false;
    std::vector<Lit> c;
    c.reserve(dimacs.size());
    for (int x : dimacs) {
      const int v = (x < 0 ? -x : x) - 1;
      while (v >= num_vars()) new_var();
      c.push_back(lit_of(v, x < 0));
    }
    std::sort(c.begin(), c.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i && c[i] == c[i - 1]) continue;
      if (i && c[i] == neg(c[i - 1])) return true;  // tautology
      const int val = value(c[i]);
      if (val > 0) return true;
      if (val < 0) continue;
      kept.push_back(c[i]);
    }
    if (kept.empty()) return ok_ = false;
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      if (propagate() != kNoReason) ok_ = false;
      return ok_;
    }
    const CRef cr = alloc_clause(kept, false);
    attach(cr);
    ++original_count_;
    return true;
  }

  void load(const CnfFormula& f) {
    while (num_vars() < f.variable_count()) new_var();
    std::vector<int> buf;
    for (const auto& c : f.clauses()) {
      buf.clear();
      for (auto l : c) buf.push_back(l.dimacs());
      if (!add_clause(buf)) break;
    }
  }

  // Solves until a verdict or the deadline.
  Result solve(std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
    if (!ok_) return Result::unsat;
    max_learnts_ = opts_.first_reduce;
    for (int restart = 0;; ++restart) {
      const auto budget = static_cast<std::uint64_t>(luby(restart) * opts_.luby_unit);
      Result r = search(budget, deadline);
      if (r != Result::unknown) return r;
      if (timed_out_) return Result::unknown;
      ++stats_.restarts;
    }
  }

  // Value of a 1-based variable in the last model.
  bool model_value(int var) const { return model_[static_cast<std::size_t>(var - 1)] > 0; }
  Assignment model() const {
    Assignment a(model_.size() + 1, false);
    for (std::size_t i = 0; i < model_.size(); ++i) a[i + 1] = model_[i] > 0;
    return a;
  }

 private:
  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  // Clause memory layout: [size, flags, lbd, activity bits, lits...]
  static constexpr std::uint32_t kHeader = 4;
  static constexpr std::uint32_t kLearnt = 1;
  static constexpr std::uint32_t kDeleted = 2;

  std::uint32_t& csize(CRef c) { return arena_[c]; }
  std::uint32_t& cflags(CRef c) { return arena_[c + 1]; }
  std::uint32_t& clbd(CRef c) { return arena_[c + 2]; }
  float cactivity(CRef c) const {
    float f;
    std::memcpy(&f, &arena_[c + 3], sizeof f);
    return f;
  }
  void set_cactivity(CRef c, float f) { std::memcpy(&arena_[c + 3], &f, sizeof f); }
  Lit* clits(CRef c) { return &arena_[c + kHeader]; }

  CRef alloc_clause(const std::vector<Lit>& lits, bool learnt) {
    const CRef cr = static_cast<CRef>(arena_.size());
    arena_.push_back(static_cast<std::uint32_t>(lits.size()));
    arena_.push_back(learnt ? kLearnt : 0);
    arena_.push_back(0);
    arena_.push_back(0);
    arena_.insert(arena_.end(), lits.begin(), lits.end());
    if (learnt) learnts_.push_back(cr);
    return cr;
  }

  void attach(CRef cr) {
    Lit* l = clits(cr);
    watches_[neg(l[0])].push_back({cr, l[1]});
    watches_[neg(l[1])].push_back({cr, l[0]});
  }

  int value(Lit l) const {
    const int a = assigns_[static_cast<std::size_t>(var_of(l))];
    return negative(l) ? -a : a;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(Lit l, CRef reason) {
    const auto v = static_cast<std::size_t>(var_of(l));
    assigns_[v] = negative(l) ? -1 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns the conflicting clause or kNoReason.
  CRef propagate() {
    CRef conflict = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];  // p became true; visit clauses watching ~p
      auto& ws = watches_[p];
      ++stats_.propagations;
      std::size_t i = 0;
      std::size_t j = 0;
      const Lit false_lit = neg(p);
      while (i < ws.size()) {
        const Watcher w = ws[i];
        if (value(w.blocker) > 0) {
          ws[j++] = ws[i++];
          continue;
        }
        const CRef cr = w.cref;
        Lit* c = clits(cr);
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        ++i;
        const Lit first = c[0];
        if (first != w.blocker && value(first) > 0) {
          ws[j++] = {cr, first};
          continue;
        }
        const std::uint32_t sz = csize(cr);
        bool moved = false;
        for (std::uint32_t k = 2; k < sz; ++k) {
          if (value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watches_[neg(c[1])].push_back({cr, first});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {cr, first};
        if (value(first) < 0) {
          conflict = cr;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, cr);
        }
      }
      ws.resize(j);
    }
    return conflict;
  }

  void var_bump(int v) {
    auto& a = activity_[static_cast<std::size_t>(v)];
    a += var_inc_;
    if (a > 1e100) {
      for (auto& x : activity_) x *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_pos_[static_cast<std::size_t>(v)] >= 0) heap_up(heap_pos_[static_cast<std::size_t>(v)]);
  }

  void clause_bump(CRef cr) {
    const float a = cactivity(cr) + static_cast<float>(cla_inc_);
    set_cactivity(cr, a);
    if (a > 1e20f) {
      for (CRef l : learnts_) set_cactivity(l, cactivity(l) * 1e-20f);
      cla_inc_ *= 1e-20;
    }
  }

  std::uint32_t compute_lbd(const std::vector<Lit>& lits) {
    ++lbd_stamp_;
    std::uint32_t n = 0;
    for (Lit l : lits) {
      const auto lv = static_cast<std::size_t>(level_[static_cast<std::size_t>(var_of(l))]);
      if (lv >= lbd_seen_.size()) lbd_seen_.resize(lv + 1, 0);
      if (lbd_seen_[lv] != lbd_stamp_) {
        lbd_seen_[lv] = lbd_stamp_;
        ++n;
      }
    }
    return n;
  }

  std::uint32_t abstract_level(int v) const { return 1u << (level_[static_cast<std::size_t>(v)] & 31); }

  bool lit_redundant(Lit p, std::uint32_t levels) {
    stack_.clear();
    stack_.push_back(p);
    const std::size_t top = to_clear_.size();
    while (!stack_.empty()) {
      const Lit q = stack_.back();
      stack_.pop_back();
      const CRef cr = reason_[static_cast<std::size_t>(var_of(q))];
      Lit* c = clits(cr);
      const std::uint32_t sz = csize(cr);
      for (std::uint32_t k = 1; k < sz; ++k) {
        const Lit l = c[k];
        const int v = var_of(l);
        const auto vi = static_cast<std::size_t>(v);
        if (seen_[vi] || level_[vi] == 0) continue;
        if (reason_[vi] != kNoReason && (abstract_level(v) & levels)) {
          seen_[vi] = 1;
          stack_.push_back(l);
          to_clear_.push_back(l);
        } else {
          for (std::size_t t = top; t < to_clear_.size(); ++t) seen_[static_cast<std::size_t>(var_of(to_clear_[t]))] = 0;
          to_clear_.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  void analyze(CRef confl, std::vector<Lit>& learnt, int& back_level) {
    learnt.clear();
    learnt.push_back(0);
    int path = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    do {
      if (cflags(confl) & kLearnt) clause_bump(confl);
      Lit* c = clits(confl);
      const std::uint32_t sz = csize(confl);
      for (std::uint32_t k = have_p ? 1 : 0; k < sz; ++k) {
        const Lit q = c[k];
        const auto v = static_cast<std::size_t>(var_of(q));
        if (!seen_[v] && level_[v] > 0) {
          var_bump(var_of(q));
          seen_[v] = 1;
          if (level_[v] >= decision_level()) {
            ++path;
          } else {
            learnt.push_back(q);
          }
        }
      }
      while (!seen_[static_cast<std::size_t>(var_of(trail_[--index]))]) {
      }
      p = trail_[index];
      have_p = true;
      confl = reason_[static_cast<std::size_t>(var_of(p))];
      seen_[static_cast<std::size_t>(var_of(p))] = 0;
      --path;
    } while (path > 0);
    learnt[0] = neg(p);

    to_clear_.assign(learnt.begin(), learnt.end());
    std::uint32_t levels = 0;
    for (std::size_t k = 1; k < learnt.size(); ++k) levels |= abstract_level(var_of(learnt[k]));
    std::size_t j = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      const auto v = static_cast<std::size_t>(var_of(learnt[k]));
      if (reason_[v] == kNoReason || !lit_redundant(learnt[k], levels)) learnt[j++] = learnt[k];
    }
    learnt.resize(j);
    stats_.learnt_literals += learnt.size();

    if (learnt.size() == 1) {
      back_level = 0;
    } else {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[static_cast<std::size_t>(var_of(learnt[k]))] > level_[static_cast<std::size_t>(var_of(learnt[max_i]))]) max_i = k;
      std::swap(learnt[1], learnt[max_i]);
      back_level = level_[static_cast<std::size_t>(var_of(learnt[1]))];
    }
    for (Lit l : to_clear_) seen_[static_cast<std::size_t>(var_of(l))] = 0;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t c = trail_.size(); c-- > static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]);) {
      const auto v = static_cast<std::size_t>(var_of(trail_[c]));
      assigns_[v] = 0;
      reason_[v] = kNoReason;
      polarity_[v] = negative(trail_[c]) ? 1 : 0;
      if (heap_pos_[v] < 0) heap_insert(static_cast<int>(v));
    }
    qhead_ = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]);
    trail_.resize(qhead_);
    trail_lim_.resize(static_cast<std::size_t>(lvl));
  }

  std::optional<Lit> pick_branch() {
    int next = -1;
    if (opts_.random_decision_freq > 0 && !heap_.empty() && unit_(rng_) < opts_.random_decision_freq) {
      next = heap_[std::uniform_int_distribution<std::size_t>(0, heap_.size() - 1)(rng_)];
      if (assigns_[static_cast<std::size_t>(next)] != 0) next = -1;
    }
    while (next < 0 || assigns_[static_cast<std::size_t>(next)] != 0) {
      if (heap_.empty()) return std::nullopt;
      next = heap_pop();
    }
    return lit_of(next, polarity_[static_cast<std::size_t>(next)] != 0);
  }

  bool locked(CRef cr) {
    const Lit l = clits(cr)[0];
    const auto v = static_cast<std::size_t>(var_of(l));
    return value(l) > 0 && reason_[v] == cr;
  }

  void reduce_db() {
    ++stats_.reductions;
    std::sort(learnts_.begin(), learnts_.end(), [this](CRef a, CRef b) {
      if (clbd(a) != clbd(b)) return clbd(a) > clbd(b);
      return cactivity(a) < cactivity(b);
    });
    const std::size_t half = learnts_.size() / 2;
    std::size_t j = 0;
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
      const CRef cr = learnts_[i];
      if (i < half && clbd(cr) > 2 && csize(cr) > 2 && !locked(cr)) {
        cflags(cr) |= kDeleted;
      } else {
        learnts_[j++] = cr;
      }
    }
    learnts_.resize(j);
    for (auto& ws : watches_)
      ws.erase(std::remove_if(ws.begin(), ws.end(), [this](const Watcher& w) { return (cflags(w.cref) & kDeleted) != 0; }),
               ws.end());
    ++garbage_rounds_;
    if (garbage_rounds_ % 8 == 0) collect_garbage();
  }

  // Compacts the arena, rewriting watcher and reason references.
  void collect_garbage() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(arena_.size());
    std::vector<std::pair<CRef, CRef>> moved;
    for (CRef c = 0; c < arena_.size(); c += kHeader + arena_[c]) {
      if (arena_[c + 1] & kDeleted) continue;
      moved.emplace_back(c, static_cast<CRef>(fresh.size()));
      fresh.insert(fresh.end(), arena_.begin() + c, arena_.begin() + c + kHeader + arena_[c]);
    }
    auto remap = [&](CRef c) {
      auto it = std::lower_bound(moved.begin(), moved.end(), std::pair<CRef, CRef>{c, 0},
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      return it->second;
    };
    for (auto& ws : watches_)
      for (auto& w : ws) w.cref = remap(w.cref);
    for (std::size_t v = 0; v < reason_.size(); ++v)
      if (reason_[v] != kNoReason && assigns_[v] != 0) reason_[v] = remap(reason_[v]);
    for (auto& l : learnts_) l = remap(l);
    arena_.swap(fresh);
  }

  Result search(std::uint64_t conflict_budget, std::optional<std::chrono::steady_clock::time_point> deadline) {
    std::uint64_t conflicts = 0;
    std::vector<Lit> learnt;
    for (;;) {
      const CRef confl = propagate();
      if (confl != kNoReason) {
        ++stats_.conflicts;
        ++conflicts;
        if (decision_level() == 0) return Result::unsat;
        int back = 0;
        analyze(confl, learnt, back);
        cancel_until(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const CRef cr = alloc_clause(learnt, true);
          clbd(cr) = compute_lbd(learnt);
          attach(cr);
          clause_bump(cr);
          enqueue(learnt[0], cr);
        }
        var_inc_ /= opts_.var_decay;
        cla_inc_ /= opts_.clause_decay;
        if ((stats_.conflicts & 255) == 0 && deadline && std::chrono::steady_clock::now() >= *deadline) {
          timed_out_ = true;
          cancel_until(0);
          return Result::unknown;
        }
      } else {
        if (conflicts >= conflict_budget) {
          cancel_until(0);
          return Result::unknown;
        }
        if (static_cast<long>(learnts_.size()) - static_cast<long>(trail_.size()) >= max_learnts_) {
          reduce_db();
          max_learnts_ += opts_.reduce_increment;
        }
        auto next = pick_branch();
        if (!next) {
          model_ = assigns_;
          cancel_until(0);
          return Result::sat;
        }
        ++stats_.decisions;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(*next, kNoReason);
      }
    }
  }

  static double luby(int x) {
    int size = 1;
    int seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return std::pow(2.0, seq);
  }

  // Max-heap on activity.
  bool heap_less(int a, int b) const { return activity_[static_cast<std::size_t>(a)] > activity_[static_cast<std::size_t>(b)]; }
  void heap_up(int i) {
    const int v = heap_[static_cast<std::size_t>(i)];
    while (i > 0) {
      const int parent = (i - 1) >> 1;
      if (!heap_less(v, heap_[static_cast<std::size_t>(parent)])) break;
      heap_[static_cast<std::size_t>(i)] = heap_[static_cast<std::size_t>(parent)];
      heap_pos_[static_cast<std::size_t>(heap_[static_cast<std::size_t>(i)])] = i;
      i = parent;
    }
    heap_[static_cast<std::size_t>(i)] = v;
    heap_pos_[static_cast<std::size_t>(v)] = i;
  }
  void heap_down(int i) {
    const int v = heap_[static_cast<std::size_t>(i)];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && heap_less(heap_[static_cast<std::size_t>(child + 1)], heap_[static_cast<std::size_t>(child)])) ++child;
      if (!heap_less(heap_[static_cast<std::size_t>(child)], v)) break;
      heap_[static_cast<std::size_t>(i)] = heap_[static_cast<std::size_t>(child)];
      heap_pos_[static_cast<std::size_t>(heap_[static_cast<std::size_t>(i)])] = i;
      i = child;
    }
    heap_[static_cast<std::size_t>(i)] = v;
    heap_pos_[static_cast<std::size_t>(v)] = i;
  }
  void heap_insert(int v) {
    heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_pos_[static_cast<std::size_t>(v)]);
  }
  int heap_pop() {
    const int top = heap_.front();
    heap_pos_[static_cast<std::size_t>(top)] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_pos_[static_cast<std::size_t>(last)] = 0;
      heap_down(0);
    }
    return top;
  }

  Options opts_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  bool ok_ = true;
  bool timed_out_ = false;
  std::size_t original_count_ = 0;

  std::vector<std::uint32_t> arena_;
  std::vector<CRef> learnts_;
  std::vector<std::vector<Watcher>> watches_;

  std::vector<std::int8_t> assigns_;
  std::vector<std::int8_t> model_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<double> activity_;
  std::vector<std::int8_t> polarity_;  // 1 = branch negative
  std::vector<std::int8_t> seen_;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;

  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<Lit> stack_;
  std::vector<Lit> to_clear_;
  std::vector<std::uint32_t> lbd_seen_;
  std::uint32_t lbd_stamp_ = 0;

  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  long max_learnts_ = 0;
  std::uint64_t garbage_rounds_ = 0;
  Stats stats_;
};

}  // namespace omdp::cdcl
