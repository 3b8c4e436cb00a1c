// Independent reference implementations used by the tests. None of these
// call into the library beyond its plain data types.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Letters = std::vector<int>;

// All words of a given length over 1..strands-1, in lexicographic order.
inline std::vector<Letters> all_words(int strands, int length) {
  std::vector<Letters> out;
  Letters w(static_cast<std::size_t>(length), 1);
  for (;;) {
    out.push_back(w);
    int p = length - 1;
    while (p >= 0 && w[static_cast<std::size_t>(p)] == strands - 1) w[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) break;
    ++w[static_cast<std::size_t>(p)];
  }
  return out;
}

// Positive words reachable by the braid relation and far commutativity.
inline std::set<Letters> rewriting_class(const Letters& start) {
  std::set<Letters> seen{start};
  std::vector<Letters> stack{start};
  while (!stack.empty()) {
    const Letters w = stack.back();
    stack.pop_back();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      Letters v = w;
      if (std::abs(w[p] - w[p + 1]) >= 2) {
        std::swap(v[p], v[p + 1]);
        if (seen.insert(v).second) stack.push_back(v);
      }
      if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
        v = w;
        v[p] = w[p + 1];
        v[p + 1] = w[p];
        v[p + 2] = w[p + 1];
        if (seen.insert(v).second) stack.push_back(v);
      }
    }
  }
  return seen;
}

// As above, plus moving a letter between the two ends.
inline std::set<Letters> conjugation_class(const Letters& start) {
  std::set<Letters> seen{start};
  std::vector<Letters> stack{start};
  auto push = [&](const Letters& v) {
    if (seen.insert(v).second) stack.push_back(v);
  };
  while (!stack.empty()) {
    const Letters w = stack.back();
    stack.pop_back();
    for (const auto& v : rewriting_class(w)) push(v);
    if (!w.empty()) {
      Letters v = w;
      std::rotate(v.begin(), v.begin() + 1, v.end());
      push(v);
      v = w;
      std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
      push(v);
    }
  }
  return seen;
}

// Bricks as (column, lo, hi), zero-based positions, found by a direct scan.
struct RawBrick {
  int column;
  std::size_t lo, hi;
};

inline std::vector<RawBrick> scan_bricks(const Letters& w) {
  std::vector<RawBrick> out;
  for (std::size_t lo = 0; lo < w.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < w.size(); ++hi) {
      if (w[hi] == w[lo]) {
        out.push_back({w[lo], lo, hi});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RawBrick& a, const RawBrick& b) {
    return std::tie(a.column, a.lo) < std::tie(b.column, b.lo);
  });
  return out;
}

// Edge set by the literal linking definitions, as pairs of indices into
// scan_bricks order.
inline std::set<std::pair<int, int>> scan_edges(const Letters& w) {
  const auto b = scan_bricks(w);
  std::set<std::pair<int, int>> edges;
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = x + 1; y < b.size(); ++y) {
      const auto& P = b[x];
      const auto& Q = b[y];
      bool linked = false;
      if (P.column == Q.column) {
        linked = P.hi == Q.lo || Q.hi == P.lo;
      } else if (std::abs(P.column - Q.column) == 1) {
        const std::size_t p = P.lo, q = P.hi, r = Q.lo, s = Q.hi;
        linked = (p < r && r < q && q < s) || (r < p && p < s && s < q);
      }
      if (linked) edges.emplace(static_cast<int>(x), static_cast<int>(y));
    }
  }
  return edges;
}

// Permutations of {0..n-1} composed left to right: (a*b)[k] = b[a[k]].
using Perm = std::vector<int>;

inline std::vector<Perm> symmetric_group(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = b[static_cast<std::size_t>(a[k])];
  return c;
}

inline Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[static_cast<std::size_t>(a[k])] = static_cast<int>(k);
  return c;
}

// Number of assignments of generators to S_n satisfying every relator,
// relators given as signed one-based letter lists. Exhaustive.
inline std::uint64_t brute_hom_count(int n, int generators, const std::vector<std::vector<int>>& relators) {
  const auto group = symmetric_group(n);
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::size_t> pick(static_cast<std::size_t>(generators), 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : relators) {
      Perm v = id;
      for (int x : r) {
        const Perm& g = group[pick[static_cast<std::size_t>(std::abs(x) - 1)]];
        v = compose(v, x > 0 ? g : invert(g));
      }
      if (v != id) {
        ok = false;
        break;
      }
    }
    count += ok;
    int k = generators - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == group.size() - 1) pick[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
  }
  return count;
}

// Hand-rolled generators for property tests.
struct Gen {
  std::mt19937 rng;
  explicit Gen(std::uint32_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Letters word(int strands, int length) {
    Letters w(static_cast<std::size_t>(length));
    for (auto& x : w) x = uniform(1, strands - 1);
    return w;
  }
};

}  // namespace oracle
