#pragma once

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permval/alpha.hpp"
#include "permval/conepsi.hpp"
#include "permval/counter.hpp"
#include "permval/ehrhart.hpp"
#include "permval/exact.hpp"
#include "permval/mixedval.hpp"
#include "permval/permdata.hpp"
#include "permval/reference_tables.hpp"

namespace permval::battery {

using exact::Int;
using exact::RatVector;
using exact::Rational;
using permdata::SubsetIndex;
using permdata::WeightVector;

struct Outcome {
  bool pass = true;
  std::string detail;  // mismatch description, empty when passing
};

struct Check {
  std::string tag;
  int criterion;  // 1..9 acceptance groups, 0 for supplementary reference examples
  std::string what;
  std::function<Outcome()> run;
};

namespace detail {

template <typename T, typename U>
void expect_eq(Outcome& o, const T& expected, const U& got, const std::string& label) {
  if (!(expected == got)) {
    o.pass = false;
    std::ostringstream os;
    if (!o.detail.empty()) os << o.detail << "; ";
    os << label << ": expected " << expected << ", got " << got;
    o.detail = os.str();
  }
}

inline void expect(Outcome& o, bool cond, const std::string& label) {
  if (!cond) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += label;
  }
}

inline RatVector rv(std::vector<long long> xs) {
  RatVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline Outcome check_alpha_table(int n) {
  Outcome o;
  auto table = alpha::alpha_table(n);
  const auto& rows = reference::alpha_rows(n);
  expect_eq(o, rows.size(), table.entries.size(), "entry count");
  for (const auto& [members, value] : rows) {
    SubsetIndex s{n, members};
    expect_eq(o, exact::parse_rational(value), table.at(s),
              "alpha_" + std::to_string(n) + "(" + permdata::subset_label(s) + ")");
  }
  return o;
}

inline Outcome check_ehrhart_row(const reference::EhrhartRow& row) {
  Outcome o;
  auto p = ehrhart::ehrhart_of_weights({row.n, row.weights});
  expect_eq(o, row.coeffs.size(), p.coeffs.size(), "coefficient count");
  for (size_t i = 0; i < row.coeffs.size() && i < p.coeffs.size(); ++i)
    expect_eq(o, exact::parse_rational(row.coeffs[i]), p.coeffs[i],
              "coefficient of t^" + std::to_string(i));
  return o;
}

// Convex hull (monotone chain), strictly convex vertices, counterclockwise.
inline std::vector<std::array<long long, 2>> convex_hull(
    std::vector<std::array<long long, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<long long, 2>> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace detail

inline std::vector<Check> all_checks() {
  using detail::expect;
  using detail::expect_eq;
  using detail::rv;
  std::vector<Check> checks;

  // --- supplementary reference examples -------------------------------------
  checks.push_back({"inner-product-example", 0, "inner product of (-2,1) with itself is 5", [] {
    Outcome o;
    expect_eq(o, Rational(5), exact::inner_product(rv({-2, 1}), rv({-2, 1})), "<(-2,1),(-2,1)>");
    return o;
  }});
  checks.push_back({"vandermonde-d16", 0, "interpolating (0..5) -> (1,6,21,56,126,252)", [] {
    Outcome o;
    std::vector<Rational> nodes, values;
    for (long long t : {0, 1, 2, 3, 4, 5}) nodes.emplace_back(t);
    for (long long v : {1, 6, 21, 56, 126, 252}) values.emplace_back(v);
    auto coeffs = exact::solve_vandermonde(nodes, values);
    std::vector<std::string> want = {"1", "137/60", "15/8", "17/24", "1/8", "1/120"};
    for (size_t i = 0; i < want.size(); ++i)
      expect_eq(o, exact::parse_rational(want[i]), coeffs[i], "coefficient " + std::to_string(i));
    return o;
  }});
  checks.push_back({"projection-u-vectors", 0, "projected generators for n=4, complement {1,3}", [] {
    Outcome o;
    auto [gens, lattice] = conepsi::fcone_generators(4, SubsetIndex{4, {2, 4}});
    expect_eq(o, size_t{2}, gens.size(), "generator count");
    RatVector u1 = {1, Rational(-1, 2), Rational(-1, 2), 0, 0};
    RatVector u3 = {0, Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)};
    expect(o, gens[0] == u1, "u_1 mismatch");
    expect(o, gens[1] == u3, "u_3 mismatch");
    expect(o, gens == lattice, "generators should double as the lattice basis");
    return o;
  }});
  checks.push_back({"composition-bijection", 0, "n=5: (3,2,1) <-> {1,2,4}, orbit 60, C = 2", [] {
    Outcome o;
    auto s = permdata::composition_to_subset({{3, 2, 1}});
    expect_eq(o, std::string("1,2,4"), permdata::subset_label(s), "subset of (3,2,1)");
    auto m = permdata::subset_to_composition(SubsetIndex{5, {1, 2, 4}});
    expect_eq(o, std::string("3+2+1"), permdata::composition_label(m), "composition of {1,2,4}");
    expect_eq(o, Int(60), permdata::orbit_size(s), "orbit size");
    expect_eq(o, Int(2), permdata::c_constant(s), "C_5({1,2,4})");
    expect(o, permdata::oc_identity_check(s), "orbit-C identity");
    return o;
  }});
  checks.push_back({"count-examples", 0, "frozen lattice-point counts", [] {
    Outcome o;
    auto count = [](int n, std::vector<long long> w, long long t) {
      return counter::count_lattice_points(counter::rank_from_weights({n, std::move(w)}, t));
    };
    expect_eq(o, Int(56), count(5, {1, 0, 0, 0, 0}, 3), "D_{1,6} at t=3");
    expect_eq(o, Int(13), count(3, {1, 0, 1}, 1), "D_{1,4}+D_{3,4} at t=1");
    expect_eq(o, Int(7), count(2, {1, 1}, 1), "hexagon at t=1");
    expect_eq(o, Int(19), count(2, {1, 1}, 2), "hexagon at t=2");
    expect_eq(o, Int(38), count(3, {1, 1, 1}, 1), "Pi_3 at t=1");
    expect_eq(o, Int(586), count(3, {1, 1, 1}, 3), "Pi_3 at t=3");
    expect_eq(o, Int(176), count(3, {2, 1, 3}, 1), "Perm weights (2,1,3) at t=1");
    expect_eq(o, Int(291), count(4, {1, 1, 1, 1}, 1), "Pi_4 at t=1");
    return o;
  }});
  checks.push_back({"lat-components", 0, "Lat^1(D_{1,6}) = 137/60 and Lat^2(D_{1,4}+D_{3,4}) = 5", [] {
    Outcome o;
    auto d16 = ehrhart::ehrhart_of_weights({5, {1, 0, 0, 0, 0}});
    expect_eq(o, Rational(137, 60), ehrhart::lat_r(d16, 1), "Lat^1(D_{1,6})");
    auto dd = ehrhart::ehrhart_of_subset_sum(3, SubsetIndex{3, {1, 3}});
    expect_eq(o, Rational(5), ehrhart::lat_r(dd, 2), "Lat^2(D_{1,4}+D_{3,4})");
    return o;
  }});
  checks.push_back({"nvol-hexagon", 0, "normalized volume of Pi_2 is 3", [] {
    Outcome o;
    expect_eq(o, Rational(3), ehrhart::nvol({2, {1, 1}}), "nvol(Pi_2)");
    expect_eq(o, Rational(3), ehrhart::nvol_face(SubsetIndex{2, {1, 2}}, {2, {1, 1}}),
              "nvol of the top face");
    return o;
  }});
  checks.push_back({"alpha5-edges", 0, "alpha_5 on singletons from Lat^1 values", [] {
    Outcome o;
    expect_eq(o, Rational(137, 21600), alpha::alpha_of_subset(SubsetIndex{5, {1}}), "alpha_5({1})");
    expect_eq(o, Rational(101, 10800), alpha::alpha_of_subset(SubsetIndex{5, {2}}), "alpha_5({2})");
    expect_eq(o, Rational(37, 3600), alpha::alpha_of_subset(SubsetIndex{5, {3}}), "alpha_5({3})");
    return o;
  }});
  checks.push_back({"mixed-repeated", 0, "repeated arguments: MLat^2(D_{1,3}, D_{1,3}) = 1/2", [] {
    Outcome o;
    expect_eq(o, Rational(1, 2), mixedval::mixed_lat({2, {1, 1}}), "Mobius route");
    expect_eq(o, Rational(1, 2), mixedval::mixed_lat_via_polynomial({2, {1, 1}}), "grid route");
    return o;
  }});
  checks.push_back({"mixed-multilinearity", 0, "MLat^2(2 D_1, D_3) = 2 MLat^2(D_1, D_3) for n=3", [] {
    Outcome o;
    WeightVector doubled{3, {2, 0, 0}};
    WeightVector d3 = permdata::hypersimplex(3, 3);
    Rational lhs = mixedval::mixed_lat_via_polynomial_weights(3, {doubled, d3});
    Rational rhs = mixedval::mixed_lat({3, {1, 3}});
    expect_eq(o, rhs * 2, lhs, "scaling in the first argument");
    return o;
  }});
  checks.push_back({"psi-dim3-example", 0, "Psi of Cone((1,0,0),(1,1,0),(0,0,1)) is 3/16", [] {
    Outcome o;
    conepsi::ConeSpec c{{rv({1, 0, 0}), rv({1, 1, 0}), rv({0, 0, 1})}, {}};
    expect_eq(o, Rational(3, 16), conepsi::psi_dim3_unimodular(c), "Psi");
    return o;
  }});
  checks.push_back({"psi-steep-cone", 0, "Psi of Cone((1,0),(1,3)) is 9/40", [] {
    Outcome o;
    conepsi::ConeSpec c{{rv({1, 0}), rv({1, 3})}, {}};
    expect_eq(o, Rational(9, 40), conepsi::psi_dim2_general(c), "Psi");
    return o;
  }});

  // --- criterion 1: alpha tables --------------------------------------------
  for (int n = 3; n <= 6; ++n)
    checks.push_back({"alpha-n" + std::to_string(n), 1,
                      "alpha table n=" + std::to_string(n) + " matches the reference",
                      [n] { return detail::check_alpha_table(n); }});

  // --- criterion 2: Ehrhart polynomials --------------------------------------
  {
    const std::vector<std::string> tags = {"ehrhart-d16", "ehrhart-d26", "ehrhart-d36",
                                           "ehrhart-d14-d34", "ehrhart-d14"};
    const auto& rows = reference::ehrhart_rows();
    for (size_t i = 0; i < rows.size(); ++i)
      checks.push_back({tags[i], 2, "Ehrhart coefficients match the reference",
                        [row = rows[i]] { return detail::check_ehrhart_row(row); }});
  }

  // --- criterion 3: mixed-valuation identities --------------------------------
  checks.push_back({"mixed-2mlat", 3, "2! MLat^2(D_{1,4}, D_{3,4}) = 3", [] {
    Outcome o;
    expect_eq(o, Rational(3), Rational(2) * mixedval::mixed_lat({3, {1, 3}}), "2! MLat^2");
    expect_eq(o, Rational(3, 2), mixedval::mixed_lat_via_polynomial({3, {1, 3}}), "grid oracle");
    return o;
  }});
  checks.push_back({"mixed-squarefree", 3, "MLat^n(D_1, ..., D_n) = 1 for n <= 6", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i + 1;
      expect_eq(o, Rational(1), mixedval::mixed_lat({n, idx}), "n=" + std::to_string(n));
    }
    return o;
  }});
  checks.push_back({"alpha-n3-13", 3, "alpha_3({1,3}) = (2*2)/24 * 3 = 1/2", [] {
    Outcome o;
    expect_eq(o, Rational(1, 2), alpha::alpha_of_subset(SubsetIndex{3, {1, 3}}), "alpha_3({1,3})");
    return o;
  }});

  // --- criterion 4: Psi worked examples ---------------------------------------
  checks.push_back({"psi-quadrant", 4, "Psi of the first quadrant is 1/4", [] {
    Outcome o;
    conepsi::ConeSpec c{{rv({1, 0}), rv({0, 1})}, {}};
    expect_eq(o, Rational(1, 4), conepsi::psi_dim2_unimodular(c), "Psi");
    return o;
  }});
  checks.push_back({"psi-c2", 4, "Psi of Cone((-2,1),(-1,0)) is 9/20", [] {
    Outcome o;
    conepsi::ConeSpec c{{rv({-2, 1}), rv({-1, 0})}, {}};
    expect_eq(o, Rational(9, 20), conepsi::psi_dim2_unimodular(c), "Psi");
    return o;
  }});
  checks.push_back({"psi-c3-decomposition", 4,
                    "Cone((0,-1),(2,-1)) decomposes into pieces 3/8 and 17/40 minus a ray", [] {
    Outcome o;
    expect_eq(o, Rational(3, 8),
              conepsi::psi_dim2_unimodular({{rv({0, -1}), rv({1, -1})}, {}}), "first piece");
    expect_eq(o, Rational(17, 40),
              conepsi::psi_dim2_unimodular({{rv({1, -1}), rv({2, -1})}, {}}), "second piece");
    Rational whole = conepsi::psi_dim2_general({{rv({0, -1}), rv({2, -1})}, {}});
    expect_eq(o, Rational(3, 10), whole, "decomposed value");
    expect_eq(o, Rational(3, 8) + Rational(17, 40) - Rational(1, 2), whole, "piece arithmetic");
    return o;
  }});
  checks.push_back({"psi-triangle-sum", 4, "triangle (0,0),(2,0),(0,1): vertex values sum to 1", [] {
    Outcome o;
    auto res = conepsi::pick_check({{{0, 0}, {2, 0}, {0, 1}}});
    expect_eq(o, Int(4), res.lat, "lattice points");
    expect_eq(o, Rational(1, 4), res.vertex_psi[0], "Psi at (0,0)");
    expect_eq(o, Rational(9, 20), res.vertex_psi[1], "Psi at (2,0)");
    expect_eq(o, Rational(3, 10), res.vertex_psi[2], "Psi at (0,1)");
    Rational sum = res.vertex_psi[0] + res.vertex_psi[1] + res.vertex_psi[2];
    expect_eq(o, Rational(1), sum, "vertex sum");
    expect(o, res.all_equal, "count, Pick form and McMullen sum agree");
    return o;
  }});
  checks.push_back({"psi-square", 4, "unit square: four corners of 1/4 each, 4 lattice points", [] {
    Outcome o;
    auto res = conepsi::pick_check({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
    expect_eq(o, Int(4), res.lat, "lattice points");
    for (int i = 0; i < 4; ++i)
      expect_eq(o, Rational(1, 4), res.vertex_psi[i], "corner " + std::to_string(i));
    expect(o, res.all_equal, "count, Pick form and McMullen sum agree");
    return o;
  }});

  // --- criterion 5: cross-pipeline agreement ----------------------------------
  checks.push_back({"cross-psi-table", 5,
                    "alpha via Psi equals the table for codim <= 3, n <= 6", [] {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
      auto table = alpha::alpha_table(n);
      for (const auto& [s, value] : table.entries) {
        int codim = n - static_cast<int>(s.members.size());
        if (codim > 3) continue;
        expect_eq(o, value, conepsi::alpha_via_psi(n, s),
                  "n=" + std::to_string(n) + " S={" + permdata::subset_label(s) + "}");
      }
    }
    return o;
  }});
  checks.push_back({"cross-closed-forms", 5,
                    "closed forms equal the Psi route for n <= 10 and the table for n <= 6", [] {
    Outcome o;
    for (int n = 2; n <= 10; ++n)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          SubsetIndex s{n, {}};
          for (int x = 1; x <= n; ++x)
            if (x != i && x != j) s.members.push_back(x);
          expect_eq(o, conepsi::alpha_via_psi(n, s), alpha::alpha_closed_codim2(n, i, j),
                    "codim2 n=" + std::to_string(n));
        }
    for (int n = 3; n <= 10; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            SubsetIndex s{n, {}};
            for (int x = 1; x <= n; ++x)
              if (x != i && x != j && x != k) s.members.push_back(x);
            expect_eq(o, conepsi::alpha_via_psi(n, s), alpha::alpha_closed_codim3(n, i, j, k),
                      "codim3 n=" + std::to_string(n));
          }
    for (int n = 3; n <= 6; ++n) {
      auto table = alpha::alpha_table(n);
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          SubsetIndex s{n, {}};
          for (int x = 1; x <= n; ++x)
            if (x != i && x != j) s.members.push_back(x);
          expect_eq(o, table.at(s), alpha::alpha_closed_codim2(n, i, j),
                    "table codim2 n=" + std::to_string(n));
        }
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            SubsetIndex s{n, {}};
            for (int x = 1; x <= n; ++x)
              if (x != i && x != j && x != k) s.members.push_back(x);
            expect_eq(o, table.at(s), alpha::alpha_closed_codim3(n, i, j, k),
                      "table codim3 n=" + std::to_string(n));
          }
    }
    return o;
  }});

  // --- criterion 6: closed-form positivity at scale ----------------------------
  checks.push_back({"positivity-closed", 6, "closed forms stay positive for all n <= 50", [] {
    Outcome o;
    for (int n = 2; n <= 50; ++n)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          expect(o, alpha::alpha_closed_codim2(n, i, j) > 0,
                 "codim2 n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
    for (int n = 3; n <= 50; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            expect(o, alpha::alpha_closed_codim3(n, i, j, k) > 0,
                   "codim3 n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")");
    return o;
  }});

  // --- criterion 7: identity suite ---------------------------------------------
  checks.push_back({"identities", 7,
                    "vertex, facet and top identities hold for n <= 6", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      auto rep = alpha::verify_identities(alpha::alpha_table(n));
      expect(o, rep.vertex_sum_ok, "vertex identity n=" + std::to_string(n));
      expect(o, rep.facets_ok, "facet identity n=" + std::to_string(n));
      expect(o, rep.top_ok, "top identity n=" + std::to_string(n));
      auto pos = alpha::verify_positivity(alpha::alpha_table(n));
      expect(o, pos.all_positive(), "positivity n=" + std::to_string(n));
    }
    return o;
  }});

  // --- criterion 8: oracle equivalence -------------------------------------------
  checks.push_back({"oracle-counts", 8,
                    "profile counter equals brute force on the n <= 3 grid", [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      std::vector<long long> w(n, 0);
      while (true) {
        for (long long t = 0; t <= 3; ++t) {
          auto r = counter::rank_from_weights({n, w}, t);
          expect_eq(o, counter::count_brute_force(r), counter::count_lattice_points(r),
                    "n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
        int i = 0;
        while (i < n && w[i] == 2) w[i++] = 0;
        if (i == n) break;
        ++w[i];
      }
    }
    return o;
  }});
  checks.push_back({"oracle-mcmullen", 8,
                    "McMullen reconstruction on n <= 4, weights in {1,2,3}", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      std::vector<long long> w(n, 1);
      while (true) {
        auto res = alpha::mcmullen_reconstruct({n, w});
        std::string lbl = "weights";
        for (long long x : w) lbl += " " + std::to_string(x);
        expect(o, res.equal, lbl + ": " + exact::str(res.lhs) + " vs " + exact::str(res.rhs));
        int i = 0;
        while (i < n && w[i] == 3) w[i++] = 1;
        if (i == n) break;
        ++w[i];
      }
    }
    return o;
  }});

  // --- criterion 9: property suite --------------------------------------------------
  checks.push_back({"property-vertex-sum", 9,
                    "vertex Psi values of 50 random polygons sum to 1", [] {
    Outcome o;
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> coord(-5, 5);
    int made = 0, attempts = 0;
    while (made < 50 && attempts < 100000) {
      ++attempts;
      size_t want = made % 2 == 0 ? 3 : 4;
      std::vector<std::array<long long, 2>> pts(want);
      for (auto& p : pts) p = {coord(rng), coord(rng)};
      auto hull = detail::convex_hull(pts);
      if (hull.size() != want) continue;
      auto res = conepsi::pick_check({hull});
      Rational sum = 0;
      for (const auto& v : res.vertex_psi) sum += v;
      expect_eq(o, Rational(1), sum, "polygon " + std::to_string(made));
      expect(o, res.all_equal, "Pick/McMullen agreement, polygon " + std::to_string(made));
      ++made;
    }
    expect(o, made == 50, "generated 50 polygons");
    return o;
  }});
  checks.push_back({"property-psi-symmetry", 9,
                    "Psi is invariant under negation and coordinate swap", [] {
    Outcome o;
    std::mt19937 rng(907);
    std::uniform_int_distribution<long long> coord(-9, 9);
    int made = 0, attempts = 0;
    while (made < 50 && attempts < 100000) {
      ++attempts;
      long long ax = coord(rng), ay = coord(rng), bx = coord(rng), by = coord(rng);
      long long ga = std::gcd(std::abs(ax), std::abs(ay));
      long long gb = std::gcd(std::abs(bx), std::abs(by));
      if (ga == 0 || gb == 0) continue;
      ax /= ga; ay /= ga; bx /= gb; by /= gb;
      if (ax * by - ay * bx == 0) continue;
      auto psi = [&](long long px, long long py, long long qx, long long qy) {
        return conepsi::psi_dim2_general({{rv({px, py}), rv({qx, qy})}, {}});
      };
      Rational base = psi(ax, ay, bx, by);
      expect_eq(o, base, psi(-ax, -ay, -bx, -by), "negation, sample " + std::to_string(made));
      expect_eq(o, base, psi(ay, ax, by, bx), "coordinate swap, sample " + std::to_string(made));
      ++made;
    }
    expect(o, made == 50, "generated 50 cones");
    return o;
  }});
  checks.push_back({"property-vandermonde", 9, "interpolation round-trips on random data", [] {
    Outcome o;
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 10);
    for (int rep = 0; rep < 20; ++rep) {
      size_t size = 1 + rep % 6;
      std::set<Rational> node_set;
      while (node_set.size() < size) node_set.insert(Rational(num(rng), den(rng)));
      std::vector<Rational> nodes(node_set.begin(), node_set.end());
      std::vector<Rational> values;
      for (size_t i = 0; i < size; ++i) values.emplace_back(Rational(num(rng), den(rng)));
      auto coeffs = exact::solve_vandermonde(nodes, values);
      for (size_t i = 0; i < size; ++i)
        expect_eq(o, values[i], exact::evaluate_polynomial(coeffs, nodes[i]),
                  "node " + std::to_string(i) + " rep " + std::to_string(rep));
    }
    bool threw = false;
    try {
      exact::solve_vandermonde({Rational(1), Rational(1)}, {Rational(0), Rational(1)});
    } catch (const std::runtime_error&) {
      threw = true;
    }
    expect(o, threw, "repeated nodes must be rejected");
    return o;
  }});
  checks.push_back({"property-reinterpolation", 9,
                    "one extra dilation leaves the coefficients unchanged", [] {
    Outcome o;
    const std::vector<WeightVector> cases = {
        {2, {1, 1}}, {3, {0, 1, 0}}, {3, {1, 0, 1}}, {3, {1, 1, 1}}};
    for (const auto& w : cases) {
      auto p = ehrhart::ehrhart_of_weights(w);
      int d = p.degree();
      std::vector<Rational> nodes, values;
      for (int t = 0; t <= d + 1; ++t) {
        nodes.emplace_back(t);
        values.emplace_back(counter::count_lattice_points(counter::rank_from_weights(w, t)));
      }
      auto refit = exact::solve_vandermonde(nodes, values);
      expect_eq(o, Rational(0), refit.back(), "degree-" + std::to_string(d + 1) + " coefficient");
      for (int i = 0; i <= d; ++i)
        expect_eq(o, p.coeffs[i], refit[i], "coefficient " + std::to_string(i));
    }
    return o;
  }});

  return checks;
}

}  // namespace permval::battery
