#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "omdp/errors.hpp"

namespace omdp {

// Ordered sequence of 1-based ground-set elements.
using Tuple = std::vector<int>;

inline constexpr int kMaxGround = 64;

namespace detail {

struct BinomialTable {
  std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> c{};
  constexpr BinomialTable() {
    for (int i = 0; i <= kMaxGround; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
  }
};

inline constexpr BinomialTable kBinomials{};

}  // namespace detail

constexpr std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return detail::kBinomials.c[n][k];
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// 1-based colexicographic rank of a strictly increasing k-subset of {1..m}.
inline std::uint64_t colex_rank(std::span<const int> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    r += binomial(sorted[i] - 1, static_cast<int>(i) + 1);
  return r + 1;
}

// Inverse of colex_rank for k-subsets.
inline Tuple colex_unrank(std::uint64_t rank, int k) {
  Tuple out(static_cast<std::size_t>(k));
  std::uint64_t rem = rank - 1;
  for (int i = k; i >= 1; --i) {
    int x = i - 1;
    while (binomial(x + 1, i) <= rem) ++x;
    rem -= binomial(x, i);
    out[static_cast<std::size_t>(i - 1)] = x + 1;
  }
  return out;
}

// Calls fn(span) for every k-subset of {first..last} in lexicographic order.
template <typename Fn>
void for_each_subset(int first, int last, int k, Fn&& fn) {
  const int m = last - first + 1;
  if (k < 0 || k > m) return;
  Tuple cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), first);
  while (true) {
    fn(std::span<const int>(cur));
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == last - (k - 1 - i)) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// k-subsets of an arbitrary sorted pool.
template <typename Fn>
void for_each_subset_of(std::span<const int> pool, int k, Fn&& fn) {
  Tuple pick(static_cast<std::size_t>(k));
  for_each_subset(0, static_cast<int>(pool.size()) - 1, k, [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) pick[i] = pool[static_cast<std::size_t>(idx[i])];
    fn(std::span<const int>(pick));
  });
}

struct SortedWithParity {
  Tuple sorted;
  int parity = 0;  // sign of the sorting permutation; 0 on a repeated element
};

// Sorts a short tuple, tracking the sign of the permutation.
inline SortedWithParity sort_with_parity(std::span<const int> tuple) {
  SortedWithParity out{Tuple(tuple.begin(), tuple.end()), 1};
  auto& t = out.sorted;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) {
        out.parity = 0;
        return out;
      }
      std::swap(t[j - 1], t[j]);
      out.parity = -out.parity;
    }
  }
  return out;
}

inline std::string format_tuple(std::span<const int> t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

// Set difference of two sorted tuples.
inline Tuple sorted_minus(std::span<const int> a, std::span<const int> b) {
  Tuple out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Tuple sorted_union(std::span<const int> a, std::span<const int> b) {
  Tuple out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::size_t intersection_size(std::span<const int> a, std::span<const int> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

inline bool contains(std::span<const int> sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline Tuple range_tuple(int first, int last) {
  Tuple t;
  for (int i = first; i <= last; ++i) t.push_back(i);
  return t;
}

}  // namespace omdp
