#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "permval/exact.hpp"
#include "permval/permdata.hpp"

namespace permval::counter {

using exact::Int;
using permdata::WeightVector;

// level_caps[m-1] = g(m) = dilation * sum_k w_k * min(m,k): the support function
// of the dilated Minkowski sum on coordinate subsets of size m. Concave in m.
struct SymmetricRank {
  int n = 0;
  std::vector<long long> level_caps;

  void check() const {
    if (n < 1 || level_caps.size() != static_cast<size_t>(n) + 1)
      throw std::runtime_error("permval::SymmetricRank: need caps g(1)..g(n+1)");
    long long prev = 0, prev_step = -1;
    for (size_t m = 0; m < level_caps.size(); ++m) {
      long long step = level_caps[m] - prev;
      if (step < 0)
        throw std::runtime_error("permval::SymmetricRank: caps must be nondecreasing");
      if (prev_step >= 0 && step > prev_step)
        throw std::runtime_error("permval::SymmetricRank: caps must be concave");
      prev = level_caps[m];
      prev_step = step;
    }
  }
};

inline SymmetricRank rank_from_weights(const WeightVector& w, long long dilation) {
  w.check();
  if (dilation < 0)
    throw std::runtime_error("permval::rank_from_weights: negative dilation");
  SymmetricRank r{w.n, std::vector<long long>(w.n + 1, 0)};
  for (int m = 1; m <= w.n + 1; ++m) {
    long long g = 0;
    for (int k = 1; k <= w.n; ++k) g += w.weights[k - 1] * std::min(m, k);
    r.level_caps[m - 1] = dilation * g;
  }
  return r;
}

namespace detail {

// DFS over weakly decreasing profiles l_1 >= ... >= l_{n+1} >= 0 with the
// prefix caps, each leaf weighted by the number of distinct permutations.
inline void profile_dfs(const std::vector<long long>& g, int slot, long long prev,
                        long long placed, std::vector<long long>& profile, Int& acc) {
  const int slots = static_cast<int>(g.size());
  const long long total = g.back();
  if (slot == slots - 1) {
    long long x = total - placed;
    if (x < 0 || x > prev) return;
    profile[slot] = x;
    Int ways = exact::factorial(slots);
    int run = 1;
    for (int i = 1; i < slots; ++i) {
      if (profile[i] == profile[i - 1]) ++run;
      else { ways /= exact::factorial(run); run = 1; }
    }
    ways /= exact::factorial(run);
    acc += ways;
    return;
  }
  long long hi = std::min(prev, g[slot] - placed);
  long long remaining_slots = slots - 1 - slot;
  for (long long x = hi; x >= 0; --x) {
    long long rest = total - placed - x;
    if (rest < 0) continue;
    if (rest > x * remaining_slots) break;  // later values can only be <= x
    profile[slot] = x;
    profile_dfs(g, slot + 1, x, placed + x, profile, acc);
  }
}

}  // namespace detail

inline Int count_lattice_points(const SymmetricRank& r) {
  r.check();
  if (r.level_caps[0] == 0) return 1;
  std::vector<long long> profile(r.n + 1, 0);
  Int acc = 0;
  detail::profile_dfs(r.level_caps, 0, r.level_caps[0], 0, profile, acc);
  return acc;
}

// Enumerates the whole box [0, g(1)]^{n+1} and filters; the independent oracle.
inline Int count_brute_force(const SymmetricRank& r, long long budget = 50'000'000) {
  r.check();
  const int dim = r.n + 1;
  const long long side = r.level_caps[0] + 1;
  long long cells = 1;
  for (int i = 0; i < dim; ++i) {
    if (cells > budget / side + 1) cells = budget + 1;
    else cells *= side;
    if (cells > budget)
      throw std::runtime_error(
          "permval::count_brute_force: enumeration budget exceeded, use a smaller instance");
  }
  const long long total = r.level_caps.back();
  Int acc = 0;
  std::vector<long long> x(dim, 0);
  std::vector<long long> sorted(dim);
  while (true) {
    long long sum = 0;
    for (long long v : x) sum += v;
    if (sum == total) {
      sorted = x;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      long long ps = 0;
      bool ok = true;
      for (int m = 0; m < dim; ++m) {
        ps += sorted[m];
        if (ps > r.level_caps[m]) { ok = false; break; }
      }
      if (ok) ++acc;
    }
    int i = 0;
    while (i < dim && x[i] == side - 1) x[i++] = 0;
    if (i == dim) break;
    ++x[i];
  }
  return acc;
}

}  // namespace permval::counter
