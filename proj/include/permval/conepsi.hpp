#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permval/exact.hpp"
#include "permval/permdata.hpp"

namespace permval::conepsi {

using exact::Int;
using exact::RatVector;
using exact::Rational;
using permdata::SubsetIndex;

// Generators of a pointed cone together with a declared basis of the reference
// lattice. Inner products are always taken in the ambient Euclidean metric.
// An empty lattice_basis means the standard basis of the ambient space.
struct ConeSpec {
  std::vector<RatVector> generators;
  std::vector<RatVector> lattice_basis;
};

struct Polygon {
  std::vector<std::array<long long, 2>> vertices;  // counterclockwise
};

namespace detail {

inline Rational det(const std::vector<std::vector<Rational>>& m) {
  switch (m.size()) {
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default:
      throw std::runtime_error("permval::conepsi: determinant only implemented up to 3x3");
  }
}

inline std::vector<RatVector> effective_lattice(const ConeSpec& c) {
  if (!c.lattice_basis.empty()) return c.lattice_basis;
  if (c.generators.empty())
    throw std::runtime_error("permval::conepsi: cannot infer lattice for the zero cone");
  size_t dim = c.generators.front().size();
  std::vector<RatVector> std_basis(dim, RatVector(dim, Rational(0)));
  for (size_t i = 0; i < dim; ++i) std_basis[i][i] = 1;
  return std_basis;
}

// Coordinates of v in the given lattice basis, solved through the Gram matrix
// (Cramer, k <= 3); errors if the basis is dependent or v lies outside its span.
inline std::vector<Rational> lattice_coordinates(const RatVector& v,
                                                 const std::vector<RatVector>& basis) {
  const size_t k = basis.size();
  if (k == 0 || k > 3)
    throw std::runtime_error("permval::conepsi: lattice basis must have 1..3 vectors");
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) gram[a][b] = exact::inner_product(basis[a], basis[b]);
    rhs[a] = exact::inner_product(basis[a], v);
  }
  Rational g = det(gram);
  if (g == 0)
    throw std::runtime_error("permval::conepsi: lattice basis is degenerate");
  std::vector<Rational> coords(k);
  for (size_t col = 0; col < k; ++col) {
    auto m = gram;
    for (size_t row = 0; row < k; ++row) m[row][col] = rhs[row];
    coords[col] = det(m) / g;
  }
  RatVector recon(v.size(), Rational(0));
  for (size_t a = 0; a < k; ++a)
    for (size_t i = 0; i < v.size(); ++i) recon[i] += coords[a] * basis[a][i];
  if (recon != v)
    throw std::runtime_error("permval::conepsi: vector lies outside the lattice span");
  return coords;
}

inline bool all_integral(const std::vector<Rational>& coords) {
  for (const auto& c : coords)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

inline Rational psi2_formula(const RatVector& u1, const RatVector& u2) {
  Rational dot = exact::inner_product(u1, u2);
  return Rational(1, 4) + Rational(1, 12) * (dot / exact::inner_product(u1, u1) +
                                             dot / exact::inner_product(u2, u2));
}

inline Rational psi3_formula(const RatVector& u1, const RatVector& u2, const RatVector& u3) {
  Rational n1 = exact::inner_product(u1, u1);
  Rational n2 = exact::inner_product(u2, u2);
  Rational n3 = exact::inner_product(u3, u3);
  Rational d12 = exact::inner_product(u1, u2);
  Rational d13 = exact::inner_product(u1, u3);
  Rational d32 = exact::inner_product(u3, u2);
  return Rational(1, 8) + Rational(1, 24) * (d12 / n1 + d12 / n2 + d13 / n1 + d13 / n3 +
                                             d32 / n2 + d32 / n3);
}

// Coordinates-in-lattice of every generator, with the unimodularity verdict.
struct LatticeView {
  std::vector<std::vector<Rational>> coords;
  bool integral = false;
  bool unimodular = false;
};

inline LatticeView view_in_lattice(const ConeSpec& c) {
  auto basis = effective_lattice(c);
  LatticeView v;
  for (const auto& g : c.generators) v.coords.push_back(lattice_coordinates(g, basis));
  v.integral = true;
  for (const auto& row : v.coords)
    if (!all_integral(row)) v.integral = false;
  if (v.coords.size() == basis.size() && v.integral) {
    Rational d = det(v.coords);
    v.unimodular = (d == 1 || d == -1);
  }
  return v;
}

struct V2 {
  Int x, y;
};

inline Int det2(const V2& a, const V2& b) { return a.x * b.y - a.y * b.x; }

inline void ext_gcd(Int a, Int b, Int& g, Int& u, Int& v) {
  Int u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b; b = r;
    Int u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = u1; v0 = v1; u1 = u2; v1 = v2;
  }
  g = a; u = u0; v = v0;
  if (g < 0) { g = -g; u = -u; v = -v; }  // canonical: g = gcd >= 0
}

}  // namespace detail

inline Rational psi_dim01(const ConeSpec& c) {
  if (c.generators.empty()) return 1;
  if (c.generators.size() != 1)
    throw std::runtime_error("permval::psi_dim01: expected 0 or 1 generators");
  const auto& g = c.generators.front();
  if (exact::inner_product(g, g) == 0)
    throw std::runtime_error("permval::psi_dim01: zero generator");
  auto coords = detail::lattice_coordinates(g, detail::effective_lattice(c));
  if (!detail::all_integral(coords))
    throw std::runtime_error("permval::psi_dim01: generator is not a lattice vector");
  return Rational(1, 2);
}

inline Rational psi_dim2_unimodular(const ConeSpec& c) {
  if (c.generators.size() != 2)
    throw std::runtime_error("permval::psi_dim2_unimodular: expected 2 generators");
  auto view = detail::view_in_lattice(c);
  if (!view.unimodular)
    throw std::runtime_error(
        "permval::psi_dim2_unimodular: generators are not a lattice basis, use psi_dim2_general");
  return detail::psi2_formula(c.generators[0], c.generators[1]);
}

inline Rational psi_dim3_unimodular(const ConeSpec& c) {
  if (c.generators.size() != 3)
    throw std::runtime_error("permval::psi_dim3_unimodular: expected 3 generators");
  auto view = detail::view_in_lattice(c);
  if (!view.unimodular)
    throw std::runtime_error(
        "permval::psi_dim3_unimodular: generators are not a lattice basis; "
        "3-dim decomposition is not supported");
  return detail::psi3_formula(c.generators[0], c.generators[1], c.generators[2]);
}

// Hirzebruch-Jung subdivision: repeatedly insert the primitive vector c with
// det(cur, c) = 1 and det(c, b) minimal positive, which strictly decreases the
// index. Psi = sum over unimodular pieces minus 1/2 per inserted interior ray.
inline Rational psi_dim2_general(const ConeSpec& c) {
  if (c.generators.size() != 2)
    throw std::runtime_error("permval::psi_dim2_general: expected 2 generators");
  auto basis = detail::effective_lattice(c);
  if (basis.size() != 2)
    throw std::runtime_error("permval::psi_dim2_general: lattice basis must have 2 vectors");
  std::vector<detail::V2> gens;
  for (const auto& g : c.generators) {
    auto coords = detail::lattice_coordinates(g, basis);
    if (!detail::all_integral(coords))
      throw std::runtime_error("permval::psi_dim2_general: generators must be lattice vectors");
    detail::V2 v{boost::multiprecision::numerator(coords[0]),
                 boost::multiprecision::numerator(coords[1])};
    if (boost::multiprecision::gcd(v.x, v.y) != 1)
      throw std::runtime_error("permval::psi_dim2_general: generators must be primitive");
    gens.push_back(v);
  }
  auto ambient = [&](const detail::V2& v) {
    RatVector out(basis[0].size(), Rational(0));
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = Rational(v.x) * basis[0][i] + Rational(v.y) * basis[1][i];
    return out;
  };
  detail::V2 a = gens[0], b = gens[1];
  Int d = detail::det2(a, b);
  if (d == 0)
    throw std::runtime_error("permval::psi_dim2_general: generators are collinear, cone not pointed");
  if (d < 0) std::swap(a, b), d = -d;
  Rational total = 0;
  while (d > 1) {
    Int g, u, v;
    detail::ext_gcd(a.x, a.y, g, u, v);
    detail::V2 ins{-v, u};  // det(a, ins) = a.x*u + a.y*v = 1
    Int r = detail::det2(ins, b) % d;
    if (r < 0) r += d;
    if (r == 0)  // would force ins parallel to b; impossible for primitive b with d > 1
      throw std::runtime_error("permval::psi_dim2_general: subdivision invariant violated");
    Int t = (r - detail::det2(ins, b)) / d;
    ins.x += t * a.x;
    ins.y += t * a.y;
    total += detail::psi2_formula(ambient(a), ambient(ins)) - Rational(1, 2);
    a = ins;
    d = r;
  }
  total += detail::psi2_formula(ambient(a), ambient(b));
  return total;
}

// Projections of {e_l - e_{l+1} : l in [n] \ S} onto the orthogonal complement
// of the face span L_S = span{e_m - e_{m+1} : m in S}. The returned vectors
// both generate the pointed feasible cone of F_S and form a basis of its
// quotient lattice, so they double as the lattice basis.
inline std::pair<std::vector<RatVector>, std::vector<RatVector>> fcone_generators(
    int n, const SubsetIndex& s) {
  s.check();
  if (s.n != n) throw std::runtime_error("permval::fcone_generators: ambient mismatch");
  auto simple_root = [n](int l) {
    RatVector e(n + 1, Rational(0));
    e[l - 1] = 1;
    e[l] = -1;
    return e;
  };
  std::vector<RatVector> span_basis;
  for (int m : s.members) span_basis.push_back(simple_root(m));
  std::vector<RatVector> gens;
  for (int l : s.complement())
    gens.push_back(exact::project_orthogonal(simple_root(l), span_basis));
  return {gens, gens};
}

inline Rational alpha_via_psi(int n, const SubsetIndex& s) {
  auto [gens, lattice] = fcone_generators(n, s);
  switch (gens.size()) {
    case 0: return 1;
    case 1: return psi_dim01({gens, lattice});
    case 2: return psi_dim2_unimodular({gens, lattice});
    case 3: return psi_dim3_unimodular({gens, lattice});
    default:
      throw std::runtime_error("permval::alpha_via_psi: codimension > 3 is unsupported");
  }
}

struct PickResult {
  Int lat;
  Rational area;
  Int boundary;
  Rational mcmullen_sum;
  std::vector<Rational> vertex_psi;
  bool all_equal = false;
};

inline PickResult pick_check(const Polygon& p) {
  const auto& vs = p.vertices;
  const size_t m = vs.size();
  if (m < 3)
    throw std::runtime_error("permval::pick_check: need at least 3 vertices");
  for (size_t i = 0; i < m; ++i) {
    auto [ax, ay] = vs[i];
    auto [bx, by] = vs[(i + 1) % m];
    auto [cx, cy] = vs[(i + 2) % m];
    long long cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx);
    if (cross <= 0)
      throw std::runtime_error(
          "permval::pick_check: degenerate polygon (vertices must be strictly convex, counterclockwise)");
  }
  PickResult res;
  Int twice_area = 0;
  long long xmin = vs[0][0], xmax = vs[0][0], ymin = vs[0][1], ymax = vs[0][1];
  res.boundary = 0;
  for (size_t i = 0; i < m; ++i) {
    auto [ax, ay] = vs[i];
    auto [bx, by] = vs[(i + 1) % m];
    twice_area += Int(ax) * by - Int(ay) * bx;
    res.boundary += std::gcd(std::abs(bx - ax), std::abs(by - ay));
    xmin = std::min(xmin, ax); xmax = std::max(xmax, ax);
    ymin = std::min(ymin, ay); ymax = std::max(ymax, ay);
  }
  res.area = Rational(twice_area) / 2;
  res.lat = 0;
  for (long long x = xmin; x <= xmax; ++x)
    for (long long y = ymin; y <= ymax; ++y) {
      bool inside = true;
      for (size_t i = 0; i < m && inside; ++i) {
        auto [ax, ay] = vs[i];
        auto [bx, by] = vs[(i + 1) % m];
        if ((bx - ax) * (y - ay) - (by - ay) * (x - ax) < 0) inside = false;
      }
      if (inside) ++res.lat;
    }
  for (size_t i = 0; i < m; ++i) {
    auto [vx, vy] = vs[i];
    auto [nx, ny] = vs[(i + 1) % m];
    auto [px, py] = vs[(i + m - 1) % m];
    long long d1x = nx - vx, d1y = ny - vy;
    long long d2x = px - vx, d2y = py - vy;
    long long g1 = std::gcd(std::abs(d1x), std::abs(d1y));
    long long g2 = std::gcd(std::abs(d2x), std::abs(d2y));
    ConeSpec cone{{RatVector{Rational(d1x / g1), Rational(d1y / g1)},
                   RatVector{Rational(d2x / g2), Rational(d2y / g2)}},
                  {}};
    res.vertex_psi.push_back(psi_dim2_general(cone));
  }
  res.mcmullen_sum = std::accumulate(res.vertex_psi.begin(), res.vertex_psi.end(), Rational(0)) +
                     Rational(res.boundary) / 2 + res.area;
  Rational pick = res.area + Rational(res.boundary) / 2 + 1;
  res.all_equal = Rational(res.lat) == pick && Rational(res.lat) == res.mcmullen_sum;
  return res;
}

}  // namespace permval::conepsi
