#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "permval/counter.hpp"
#include "permval/exact.hpp"
#include "permval/permdata.hpp"

namespace permval::ehrhart {

using exact::Int;
using exact::Rational;
using permdata::SubsetIndex;
using permdata::WeightVector;

struct EhrhartPolynomial {
  std::vector<Rational> coeffs;  // ascending degree

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational leading() const { return coeffs.back(); }
  Rational evaluate(const Rational& t) const { return exact::evaluate_polynomial(coeffs, t); }
  bool operator==(const EhrhartPolynomial&) const = default;
};

inline Rational lat_r(const EhrhartPolynomial& p, int r) {
  if (r < 0 || r >= static_cast<int>(p.coeffs.size())) return 0;
  return p.coeffs[r];
}

namespace detail {

using CacheKey = std::pair<int, std::vector<long long>>;

inline std::map<CacheKey, EhrhartPolynomial>& cache() {
  static std::map<CacheKey, EhrhartPolynomial> c;
  return c;
}

inline std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

inline EhrhartPolynomial interpolate_dilations(const WeightVector& w) {
  if (w.is_point()) return EhrhartPolynomial{{Rational(1)}};  // covers n = 0 factors
  const int d = w.n;
  std::vector<Rational> nodes, values;
  for (int t = 0; t <= d; ++t) {
    nodes.emplace_back(t);
    values.emplace_back(counter::count_lattice_points(counter::rank_from_weights(w, t)));
  }
  return EhrhartPolynomial{exact::solve_vandermonde(nodes, values)};
}

}  // namespace detail

inline EhrhartPolynomial ehrhart_of_weights(const WeightVector& w) {
  w.check();
  detail::CacheKey key{w.n, w.weights};
  {
    std::lock_guard lock(detail::cache_mutex());
    auto it = detail::cache().find(key);
    if (it != detail::cache().end()) return it->second;
  }
  EhrhartPolynomial p = detail::interpolate_dilations(w);
  std::lock_guard lock(detail::cache_mutex());
  return detail::cache().emplace(std::move(key), std::move(p)).first->second;
}

inline EhrhartPolynomial ehrhart_of_subset_sum(int n, const SubsetIndex& j) {
  j.check();
  if (j.n != n) throw std::runtime_error("permval::ehrhart_of_subset_sum: ambient mismatch");
  WeightVector w{n, std::vector<long long>(n, 0)};
  for (int m : j.members) w.weights[m - 1] = 1;
  return ehrhart_of_weights(w);
}

inline Rational nvol(const WeightVector& w) {
  return ehrhart_of_weights(w).leading();
}

inline Rational nvol_face(const SubsetIndex& s, const WeightVector& parent) {
  Rational v = 1;
  for (const auto& factor : permdata::face_factorization(s, parent).factors)
    v *= nvol(factor);
  return v;
}

// Precomputes all 2^n subset-sum polynomials into the cache, fanning the
// distinct keys out over `threads` workers. Results are identical for any
// thread count; only the fill order differs.
inline void warm_subset_sums(int n, int threads) {
  if (threads < 1) threads = 1;
  std::vector<SubsetIndex> keys;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    keys.push_back(SubsetIndex::from_mask(n, mask));
  if (threads == 1) {
    for (const auto& k : keys) ehrhart_of_subset_sum(n, k);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1))
      ehrhart_of_subset_sum(n, keys[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace permval::ehrhart
