#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "permval/exact.hpp"

namespace permval::permdata {

using exact::Int;
using exact::Rational;

// Weights (w_1..w_n) encode the Minkowski sum w_1*D_{1,n+1} + ... + w_n*D_{n,n+1}
// living in R^{n+1}. n = 0 is the one-point polytope (empty weight list).
struct WeightVector {
  int n = 0;
  std::vector<long long> weights;

  void check() const {
    if (n < 0 || weights.size() != static_cast<size_t>(n))
      throw std::runtime_error("permval::WeightVector: weight count must equal n");
    for (long long w : weights)
      if (w < 0) throw std::runtime_error("permval::WeightVector: negative weight");
  }
  bool is_point() const {
    return std::all_of(weights.begin(), weights.end(), [](long long w) { return w == 0; });
  }
};

inline WeightVector hypersimplex(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw std::runtime_error("permval::hypersimplex: need 1 <= k <= n");
  WeightVector w{n, std::vector<long long>(n, 0)};
  w.weights[k - 1] = 1;
  return w;
}

struct Composition {
  std::vector<int> parts;

  int ambient_n() const {
    return std::accumulate(parts.begin(), parts.end(), 0) - 1;
  }
  void check() const {
    if (parts.empty())
      throw std::runtime_error("permval::Composition: no parts");
    for (int p : parts)
      if (p < 1) throw std::runtime_error("permval::Composition: parts must be >= 1");
  }
};

struct SubsetIndex {
  int n = 0;
  std::vector<int> members;  // strictly increasing, within [1, n]

  void check() const {
    if (n < 1) throw std::runtime_error("permval::SubsetIndex: n must be positive");
    int prev = 0;
    for (int m : members) {
      if (m <= prev || m > n)
        throw std::runtime_error("permval::SubsetIndex: members must increase strictly within [1,n]");
      prev = m;
    }
  }
  static SubsetIndex from_mask(int n, unsigned mask) {
    SubsetIndex s{n, {}};
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1u) s.members.push_back(i);
    return s;
  }
  unsigned mask() const {
    unsigned m = 0;
    for (int x : members) m |= 1u << (x - 1);
    return m;
  }
  std::vector<int> complement() const {
    std::vector<int> out;
    size_t j = 0;
    for (int i = 1; i <= n; ++i) {
      if (j < members.size() && members[j] == i) ++j;
      else out.push_back(i);
    }
    return out;
  }
  bool operator==(const SubsetIndex&) const = default;
};

// Orders subsets by size, then lexicographically; the order the tables print in.
struct SubsetLess {
  bool operator()(const SubsetIndex& a, const SubsetIndex& b) const {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

struct FaceFactorization {
  std::vector<WeightVector> factors;
};

inline std::string subset_label(const SubsetIndex& s) {
  if (s.members.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.members[i]);
  }
  return out;
}

inline std::string composition_label(const Composition& m) {
  std::string out;
  for (size_t i = 0; i < m.parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(m.parts[i]);
  }
  return out;
}

// S = [n] minus the partial sums {m_1, m_1+m_2, ...}.
inline SubsetIndex composition_to_subset(const Composition& m) {
  m.check();
  int n = m.ambient_n();
  std::vector<bool> is_sum(n + 2, false);
  int acc = 0;
  for (int p : m.parts) {
    acc += p;
    if (acc <= n) is_sum[acc] = true;
  }
  SubsetIndex s{n, {}};
  for (int i = 1; i <= n; ++i)
    if (!is_sum[i]) s.members.push_back(i);
  return s;
}

// With T = [n+1] \ S = {t_1 < ... < t_l}: (t_1, t_2 - t_1, ..., t_l - t_{l-1}).
inline Composition subset_to_composition(const SubsetIndex& s) {
  s.check();
  Composition m;
  int prev = 0;
  for (int t = 1; t <= s.n + 1; ++t) {
    if (t <= s.n && std::binary_search(s.members.begin(), s.members.end(), t)) continue;
    m.parts.push_back(t - prev);
    prev = t;
  }
  return m;
}

inline Int orbit_size(const SubsetIndex& s) {
  Composition m = subset_to_composition(s);
  Int o = exact::factorial(s.n + 1);
  for (int p : m.parts) o /= exact::factorial(p);
  return o;
}

inline Int c_constant(const SubsetIndex& s) {
  Composition m = subset_to_composition(s);
  Int c = 1;
  for (int p : m.parts) c *= exact::factorial(p - 1);
  return c;
}

// Splits the parent weights into consecutive blocks of sizes m_1..m_l; each
// factor keeps the weights strictly inside its block (a size-1 part is a point).
inline FaceFactorization face_factorization(const SubsetIndex& s, const WeightVector& parent) {
  s.check();
  parent.check();
  if (parent.n != s.n)
    throw std::runtime_error("permval::face_factorization: ambient mismatch");
  Composition m = subset_to_composition(s);
  FaceFactorization f;
  int pos = 0;
  for (int p : m.parts) {
    WeightVector factor{p - 1, {}};
    for (int j = pos + 1; j < pos + p; ++j) factor.weights.push_back(parent.weights[j - 1]);
    f.factors.push_back(std::move(factor));
    pos += p;
  }
  return f;
}

inline bool oc_identity_check(const SubsetIndex& s) {
  Composition m = subset_to_composition(s);
  Int pm = 1;
  for (int p : m.parts) pm *= p;
  Rational lhs = Rational(1) / Rational(orbit_size(s) * c_constant(s));
  Rational rhs = Rational(pm) / Rational(exact::factorial(s.n + 1));
  return lhs == rhs;
}

}  // namespace permval::permdata
