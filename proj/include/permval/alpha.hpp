#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "permval/ehrhart.hpp"
#include "permval/exact.hpp"
#include "permval/mixedval.hpp"
#include "permval/permdata.hpp"

namespace permval::alpha {

using exact::Int;
using exact::Rational;
using permdata::SubsetIndex;
using permdata::SubsetLess;
using permdata::WeightVector;

struct AlphaTable {
  int n = 0;
  std::map<SubsetIndex, Rational, SubsetLess> entries;

  const Rational& at(const SubsetIndex& s) const {
    auto it = s.n == n ? entries.find(s) : entries.end();
    if (it == entries.end())
      throw std::runtime_error("permval::AlphaTable: no entry for subset");
    return it->second;
  }
};

// alpha_n(S) = (m_1 ... m_l)/(n+1)! * k! * MLat^k(D_{s_1,n+1}, ..., D_{s_k,n+1}).
inline Rational alpha_of_subset(const SubsetIndex& s) {
  s.check();
  permdata::Composition m = permdata::subset_to_composition(s);
  Int pm = 1;
  for (int p : m.parts) pm *= p;
  const int k = static_cast<int>(s.members.size());
  Rational scale = Rational(pm) / Rational(exact::factorial(s.n + 1));
  return scale * Rational(exact::factorial(k)) * mixedval::mixed_lat({s.n, s.members});
}

inline AlphaTable alpha_table(int n, int threads = 1) {
  if (n < 1) throw std::runtime_error("permval::alpha_table: n must be positive");
  if (threads > 1) ehrhart::warm_subset_sums(n, threads);
  AlphaTable t{n, {}};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    SubsetIndex s = SubsetIndex::from_mask(n, mask);
    t.entries.emplace(s, alpha_of_subset(s));
  }
  return t;
}

// Closed form for S = [n] \ {i,j}: 1/4 - 1/12 (i/j + (n+1-j)/(n+1-i)).
inline Rational alpha_closed_codim2(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::runtime_error("permval::alpha_closed_codim2: need 1 <= i < j <= n");
  return Rational(1, 4) -
         Rational(1, 12) * (Rational(i, j) + Rational(n + 1 - j, n + 1 - i));
}

// Closed form for S = [n] \ {i,j,k}: 1/8 - 1/24 (i/j + 1 + (n+1-k)/(n+1-j)).
inline Rational alpha_closed_codim3(int n, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= n))
    throw std::runtime_error("permval::alpha_closed_codim3: need 1 <= i < j < k <= n");
  return Rational(1, 8) -
         Rational(1, 24) * (Rational(i, j) + 1 + Rational(n + 1 - k, n + 1 - j));
}

struct IdentityReport {
  bool vertex_sum_ok = false;   // (n+1)! * alpha_n({}) = 1
  bool facets_ok = false;       // alpha_n(S) = 1/2 for every |S| = n-1
  bool top_ok = false;          // alpha_n([n]) = 1
  bool all_ok() const { return vertex_sum_ok && facets_ok && top_ok; }
};

inline IdentityReport verify_identities(const AlphaTable& t) {
  IdentityReport r;
  SubsetIndex empty{t.n, {}};
  r.vertex_sum_ok = Rational(exact::factorial(t.n + 1)) * t.at(empty) == 1;
  r.facets_ok = true;
  for (const auto& [s, a] : t.entries)
    if (static_cast<int>(s.members.size()) == t.n - 1 && a != Rational(1, 2))
      r.facets_ok = false;
  SubsetIndex full = SubsetIndex::from_mask(t.n, (1u << t.n) - 1);
  r.top_ok = t.at(full) == 1;
  return r;
}

struct PositivityReport {
  std::vector<SubsetIndex> nonpositive;
  bool all_positive() const { return nonpositive.empty(); }
};

inline PositivityReport verify_positivity(const AlphaTable& t) {
  PositivityReport r;
  for (const auto& [s, a] : t.entries)
    if (a <= 0) r.nonpositive.push_back(s);
  return r;
}

struct McMullenResult {
  Int lhs;       // direct lattice-point count at dilation 1
  Rational rhs;  // sum over orbits of |O_n(S)| * alpha_n(S) * nvol(F_S)
  bool equal = false;
};

inline McMullenResult mcmullen_reconstruct(const WeightVector& w) {
  w.check();
  for (long long x : w.weights)
    if (x == 0)
      throw std::runtime_error("permval::mcmullen_reconstruct: weights must all be >= 1");
  McMullenResult res;
  res.lhs = counter::count_lattice_points(counter::rank_from_weights(w, 1));
  res.rhs = 0;
  for (unsigned mask = 0; mask < (1u << w.n); ++mask) {
    SubsetIndex s = SubsetIndex::from_mask(w.n, mask);
    res.rhs += Rational(permdata::orbit_size(s)) * alpha_of_subset(s) *
               ehrhart::nvol_face(s, w);
  }
  res.equal = Rational(res.lhs) == res.rhs;
  return res;
}

}  // namespace permval::alpha
