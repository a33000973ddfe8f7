#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "permval/ehrhart.hpp"
#include "permval/exact.hpp"
#include "permval/permdata.hpp"

namespace permval::mixedval {

using exact::Rational;
using permdata::WeightVector;

// MLat^k(D_{s_1,n+1}, ..., D_{s_k,n+1}) for a multiset s_1 <= ... <= s_k from [n].
struct MixedLatQuery {
  int n = 0;
  std::vector<int> indices;

  void check() const {
    if (n < 1) throw std::runtime_error("permval::MixedLatQuery: n must be positive");
    for (int s : indices)
      if (s < 1 || s > n)
        throw std::runtime_error("permval::MixedLatQuery: indices must lie in [1,n]");
    if (!std::is_sorted(indices.begin(), indices.end()))
      throw std::runtime_error("permval::MixedLatQuery: indices must be sorted");
  }
  int degree() const { return static_cast<int>(indices.size()); }
};

// Mobius inversion over position subsets: k! MLat^k = sum_J (-1)^{k-|J|} Lat^k(sum_{j in J} P_j).
// The empty J is the origin, whose Ehrhart polynomial is the constant 1.
inline Rational mixed_lat(const MixedLatQuery& q) {
  q.check();
  const int k = q.degree();
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    WeightVector w{q.n, std::vector<long long>(q.n, 0)};
    int bits = 0;
    for (int j = 0; j < k; ++j)
      if (mask >> j & 1u) { w.weights[q.indices[j] - 1] += 1; ++bits; }
    Rational term = ehrhart::lat_r(ehrhart::ehrhart_of_weights(w), k);
    total += ((k - bits) % 2 ? -term : term);
  }
  return total / Rational(exact::factorial(k));
}

namespace detail {

// Fits Lat(t_1 P_1 + ... + t_k P_k) on the grid {0..n}^k by per-axis Newton
// interpolation and reads the coefficient of t_1 t_2 ... t_k.
inline Rational squarefree_coefficient(int n, const std::vector<WeightVector>& args) {
  const int k = static_cast<int>(args.size());
  if (k == 0) return 1;
  if (k > 6)
    throw std::runtime_error("permval::mixed_lat_via_polynomial: grid budget exceeded (degree > 6)");
  for (const auto& a : args) {
    a.check();
    if (a.n != n)
      throw std::runtime_error("permval::mixed_lat_via_polynomial: ambient mismatch");
  }
  const int side = n + 1;
  size_t cells = 1;
  for (int j = 0; j < k; ++j) cells *= side;

  std::vector<Rational> grid(cells);
  std::vector<int> t(k, 0);
  for (size_t idx = 0; idx < cells; ++idx) {
    WeightVector w{n, std::vector<long long>(n, 0)};
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) w.weights[i] += t[j] * args[j].weights[i];
    grid[idx] = Rational(counter::count_lattice_points(counter::rank_from_weights(w, 1)));
    for (int j = 0; j < k; ++j) {
      if (t[j] + 1 < side) { ++t[j]; break; }
      t[j] = 0;
    }
  }

  std::vector<Rational> nodes;
  for (int v = 0; v < side; ++v) nodes.emplace_back(v);
  size_t stride = 1;
  std::vector<Rational> line(side);
  for (int axis = 0; axis < k; ++axis) {
    for (size_t base = 0; base < cells; ++base) {
      if ((base / stride) % side != 0) continue;
      for (int v = 0; v < side; ++v) line[v] = grid[base + stride * v];
      auto coeffs = exact::solve_vandermonde(nodes, line);
      for (int v = 0; v < side; ++v) grid[base + stride * v] = coeffs[v];
    }
    stride *= side;
  }

  size_t target = 0;
  stride = 1;
  for (int j = 0; j < k; ++j) { target += stride; stride *= side; }
  return grid[target];
}

}  // namespace detail

// Independent oracle for mixed_lat; also accepts arbitrary weight-vector
// arguments so multilinearity can be probed on dilated inputs.
inline Rational mixed_lat_via_polynomial_weights(int n, const std::vector<WeightVector>& args) {
  const int k = static_cast<int>(args.size());
  return detail::squarefree_coefficient(n, args) / Rational(exact::factorial(k));
}

inline Rational mixed_lat_via_polynomial(const MixedLatQuery& q) {
  q.check();
  std::vector<WeightVector> args;
  for (int s : q.indices) args.push_back(permdata::hypersimplex(s, q.n));
  return mixed_lat_via_polynomial_weights(q.n, args);
}

}  // namespace permval::mixedval
