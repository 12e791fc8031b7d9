#pragma once

// Uniform chirotopes on the ground set [n] + {f, g} of an oriented matroid
// program, with circuit/cocircuit extraction and a brute-force check of the
// three-term Grassmann-Pluecker sign condition.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omdp/combinatorics.hpp"
#include "omdp/errors.hpp"

namespace omdp {

// Facets are 1..n, the objective element f is n+1 and the element at
// infinity g is n+2. Rank is d+1.
class GroundSet {
 public:
  GroundSet(int d, int n) : d_(d), n_(n) {
    if (!(0 < d && d < n)) throw DomainError("ground set requires 0 < d < n");
    if (n + 2 > kMaxGround) throw DomainError("ground set too large");
  }

  int d() const { return d_; }
  int n() const { return n_; }
  int rank() const { return d_ + 1; }
  int size() const { return n_ + 2; }
  int f() const { return n_ + 1; }
  int g() const { return n_ + 2; }
  std::uint64_t basis_count() const { return binomial(size(), rank()); }

  bool operator==(const GroundSet&) const = default;

 private:
  int d_;
  int n_;
};

// Sorted r-subset of the ground set.
class Basis {
 public:
  Basis(const GroundSet& ground, Tuple sorted) : elements_(std::move(sorted)) {
    if (static_cast<int>(elements_.size()) != ground.rank())
      throw MalformedTuple("basis " + format_tuple(elements_) + " has wrong length");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] < 1 || elements_[i] > ground.size() || (i && elements_[i - 1] >= elements_[i]))
        throw MalformedTuple("basis " + format_tuple(elements_) + " is not a sorted subset of the ground set");
    }
  }

  std::span<const int> elements() const { return elements_; }
  std::uint64_t colex() const { return colex_rank(elements_); }

 private:
  Tuple elements_;
};

struct BasisWithParity {
  Tuple sorted;
  int parity = 0;
};

// Validates length and range, then sorts. parity is 0 when an element
// repeats (no basis exists in that case and `sorted` is unspecified).
inline BasisWithParity sort_tuple(const GroundSet& ground, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != ground.rank())
    throw MalformedTuple("tuple " + format_tuple(tuple) + " has length " + std::to_string(tuple.size()) +
                         ", expected " + std::to_string(ground.rank()));
  for (int x : tuple)
    if (x < 1 || x > ground.size()) throw MalformedTuple("tuple " + format_tuple(tuple) + " has an out-of-range element");
  auto sp = sort_with_parity(tuple);
  return {std::move(sp.sorted), sp.parity};
}

struct SignVector {
  std::vector<int> entries;  // index e-1 holds the sign on element e

  int operator()(int element) const { return entries[static_cast<std::size_t>(element - 1)]; }
  Tuple support() const {
    Tuple s;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
  }
  Tuple zero_set() const {
    Tuple z;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] == 0) z.push_back(static_cast<int>(i) + 1);
    return z;
  }
  SignVector negated() const {
    SignVector out = *this;
    for (int& s : out.entries) s = -s;
    return out;
  }
  bool operator==(const SignVector&) const = default;
};

struct Gp3Violation {
  Tuple context;    // the (r-2)-subset
  Tuple quadruple;  // x1 < x2 < x3 < x4 outside the context
  int common_sign;  // the value shared by all three products
};

// One sign per sorted basis, indexed by colex rank - 1. Always uniform.
class Chirotope {
 public:
  Chirotope(GroundSet ground, std::vector<std::int8_t> signs) : ground_(ground), signs_(std::move(signs)) {
    if (signs_.size() != ground_.basis_count())
      throw DomainError("chirotope needs " + std::to_string(ground_.basis_count()) + " signs, got " +
                        std::to_string(signs_.size()));
    for (auto s : signs_)
      if (s != 1 && s != -1) throw DomainError("uniform chirotope signs must be +1 or -1");
  }

  // Builds a chirotope from a callback on sorted bases.
  template <typename Fn>
  static Chirotope from_function(GroundSet ground, Fn&& sign_of_sorted) {
    std::vector<std::int8_t> signs(ground.basis_count());
    for_each_subset(1, ground.size(), ground.rank(), [&](std::span<const int> b) {
      signs[colex_rank(b) - 1] = static_cast<std::int8_t>(sign_of_sorted(b));
    });
    return Chirotope(ground, std::move(signs));
  }

  const GroundSet& ground() const { return ground_; }
  std::span<const std::int8_t> signs() const { return signs_; }

  int sign_of_sorted(std::span<const int> sorted) const { return signs_[colex_rank(sorted) - 1]; }

  // Alternating evaluation on an ordered tuple; 0 on a repeated element.
  int operator()(std::span<const int> tuple) const {
    auto b = sort_tuple(ground_, tuple);
    if (b.parity == 0) return 0;
    return b.parity * sign_of_sorted(b.sorted);
  }
  int operator()(std::initializer_list<int> tuple) const {
    return (*this)(std::span<const int>(tuple.begin(), tuple.size()));
  }

  Chirotope negated() const {
    auto s = signs_;
    for (auto& x : s) x = static_cast<std::int8_t>(-x);
    return Chirotope(ground_, std::move(s));
  }

 private:
  GroundSet ground_;
  std::vector<std::int8_t> signs_;
};

inline int chi_of(const Chirotope& chi, std::span<const int> tuple) { return chi(tuple); }

// Evaluates chi on (context..., a, b) with context sorted and a, b outside it.
namespace detail {
inline int chi_context(const Chirotope& chi, std::span<const int> context, int a, int b, Tuple& scratch) {
  scratch.assign(context.begin(), context.end());
  scratch.push_back(a);
  scratch.push_back(b);
  return chi(scratch);
}
}  // namespace detail

// Every (context, quadruple) at which the three Grassmann-Pluecker products
// chi(s,x1,x2)chi(s,x3,x4), -chi(s,x1,x3)chi(s,x2,x4), chi(s,x1,x4)chi(s,x2,x3)
// fail to take both signs. Empty iff chi is a uniform chirotope.
inline std::vector<Gp3Violation> check_gp3(const Chirotope& chi) {
  const auto& gs = chi.ground();
  std::vector<Gp3Violation> out;
  Tuple scratch;
  for_each_subset(1, gs.size(), gs.rank() - 2, [&](std::span<const int> ctx) {
    Tuple rest = sorted_minus(range_tuple(1, gs.size()), ctx);
    for_each_subset_of(rest, 4, [&](std::span<const int> q) {
      const int p1 = detail::chi_context(chi, ctx, q[0], q[1], scratch) * detail::chi_context(chi, ctx, q[2], q[3], scratch);
      const int p2 = -detail::chi_context(chi, ctx, q[0], q[2], scratch) * detail::chi_context(chi, ctx, q[1], q[3], scratch);
      const int p3 = detail::chi_context(chi, ctx, q[0], q[3], scratch) * detail::chi_context(chi, ctx, q[1], q[2], scratch);
      if (p1 == p2 && p2 == p3) out.push_back({Tuple(ctx.begin(), ctx.end()), Tuple(q.begin(), q.end()), p1});
    });
  });
  return out;
}

// Signed circuit with support S (|S| = r+1), C(s_i) = (-1)^i chi(S \ s_i) on
// the sorted support, scaled so that C(positive_on) = +1.
inline SignVector circuit_on_support(const Chirotope& chi, std::span<const int> support, int positive_on) {
  const auto& gs = chi.ground();
  auto sorted = sort_with_parity(support);
  if (static_cast<int>(support.size()) != gs.rank() + 1 || sorted.parity == 0)
    throw MalformedTuple("circuit support " + format_tuple(support) + " must have " + std::to_string(gs.rank() + 1) +
                         " distinct elements");
  if (!contains(sorted.sorted, positive_on))
    throw DomainError("element " + std::to_string(positive_on) + " is not in the circuit support");
  SignVector c{std::vector<int>(static_cast<std::size_t>(gs.size()), 0)};
  Tuple rest;
  for (std::size_t i = 0; i < sorted.sorted.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < sorted.sorted.size(); ++j)
      if (j != i) rest.push_back(sorted.sorted[j]);
    const int alt = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1) for 1-based position i+1
    c.entries[static_cast<std::size_t>(sorted.sorted[i] - 1)] = alt * chi.sign_of_sorted(rest);
  }
  return c(positive_on) > 0 ? c : c.negated();
}

// Signed cocircuit with zero set Z (|Z| = r-1), D(e) = chi(e, Z) for e not in
// Z, scaled so that D(positive_on) = +1.
inline SignVector cocircuit_on_zeroset(const Chirotope& chi, std::span<const int> zero_set, int positive_on) {
  const auto& gs = chi.ground();
  auto sorted = sort_with_parity(zero_set);
  if (static_cast<int>(zero_set.size()) != gs.rank() - 1 || sorted.parity == 0)
    throw MalformedTuple("cocircuit zero set " + format_tuple(zero_set) + " must have " + std::to_string(gs.rank() - 1) +
                         " distinct elements");
  if (contains(sorted.sorted, positive_on) || positive_on < 1 || positive_on > gs.size())
    throw DomainError("element " + std::to_string(positive_on) + " is not in the cocircuit support");
  SignVector d{std::vector<int>(static_cast<std::size_t>(gs.size()), 0)};
  Tuple t;
  for (int e = 1; e <= gs.size(); ++e) {
    if (contains(sorted.sorted, e)) continue;
    t.assign(1, e);
    t.insert(t.end(), sorted.sorted.begin(), sorted.sorted.end());
    d.entries[static_cast<std::size_t>(e - 1)] = chi(t);
  }
  return d(positive_on) > 0 ? d : d.negated();
}

}  // namespace omdp
