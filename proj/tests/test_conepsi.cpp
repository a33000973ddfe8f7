#include <gtest/gtest.h>

#include <stdexcept>

#include "permval/alpha.hpp"
#include "permval/conepsi.hpp"

namespace {

using permval::conepsi::ConeSpec;
using permval::conepsi::Polygon;
using permval::exact::RatVector;
using permval::exact::Rational;
using permval::permdata::SubsetIndex;

RatVector rv(std::vector<long long> xs) {
  RatVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

TEST(Conepsi, LowDimensional) {
  EXPECT_EQ(Rational(1), permval::conepsi::psi_dim01({{}, {}}));
  EXPECT_EQ(Rational(1, 2), permval::conepsi::psi_dim01({{rv({1, 0})}, {}}));
  EXPECT_EQ(Rational(1, 2), permval::conepsi::psi_dim01({{rv({2, 4})}, {}}));  // own lattice
  RatVector half{Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(Rational(1, 2),
            permval::conepsi::psi_dim01({{half}, {half}}));  // lattice vector of its own lattice
  EXPECT_THROW(permval::conepsi::psi_dim01({{rv({0, 0})}, {}}), std::runtime_error);
  EXPECT_THROW(permval::conepsi::psi_dim01({{half}, {rv({1, 0}), rv({0, 1})}}),
               std::runtime_error);
}

TEST(Conepsi, RayInSumZeroLattice) {
  // the sum-zero lattice of R^2 is spanned by (1,-1)
  EXPECT_EQ(Rational(1, 2), permval::conepsi::psi_dim01({{rv({1, -1})}, {rv({1, -1})}}));
  // same ray inside the sum-zero lattice of R^3
  EXPECT_EQ(Rational(1, 2), permval::conepsi::psi_dim01(
                                {{rv({1, -1, 0})}, {rv({1, -1, 0}), rv({0, 1, -1})}}));
}

TEST(Conepsi, QuadrantAndRotations) {
  EXPECT_EQ(Rational(1, 4), permval::conepsi::psi_dim2_unimodular({{rv({1, 0}), rv({0, 1})}, {}}));
  EXPECT_EQ(Rational(1, 4), permval::conepsi::psi_dim2_unimodular({{rv({0, -1}), rv({1, 0})}, {}}));
}

TEST(Conepsi, WorkedUnimodularCone) {
  EXPECT_EQ(Rational(9, 20),
            permval::conepsi::psi_dim2_unimodular({{rv({-2, 1}), rv({-1, 0})}, {}}));
  // the same cone through the general routine
  EXPECT_EQ(Rational(9, 20),
            permval::conepsi::psi_dim2_general({{rv({-2, 1}), rv({-1, 0})}, {}}));
}

TEST(Conepsi, UnimodularValidation) {
  // index-2 cone must be rejected by the unimodular routine
  EXPECT_THROW(permval::conepsi::psi_dim2_unimodular({{rv({0, -1}), rv({2, -1})}, {}}),
               std::runtime_error);
  EXPECT_THROW(permval::conepsi::psi_dim2_unimodular({{rv({1, 0})}, {}}), std::runtime_error);
}

TEST(Conepsi, HirzebruchJungDecomposition) {
  // pieces 3/8 and 17/40, minus the inserted ray worth 1/2
  EXPECT_EQ(Rational(3, 8),
            permval::conepsi::psi_dim2_unimodular({{rv({0, -1}), rv({1, -1})}, {}}));
  EXPECT_EQ(Rational(17, 40),
            permval::conepsi::psi_dim2_unimodular({{rv({1, -1}), rv({2, -1})}, {}}));
  EXPECT_EQ(Rational(3, 10),
            permval::conepsi::psi_dim2_general({{rv({0, -1}), rv({2, -1})}, {}}));
}

TEST(Conepsi, GeneralConeProperties) {
  // generator order cannot matter
  EXPECT_EQ(permval::conepsi::psi_dim2_general({{rv({2, -1}), rv({0, -1})}, {}}),
            permval::conepsi::psi_dim2_general({{rv({0, -1}), rv({2, -1})}, {}}));
  // a steeper singular cone
  EXPECT_EQ(Rational(9, 40),
            permval::conepsi::psi_dim2_general({{rv({1, 0}), rv({1, 3})}, {}}));
  EXPECT_THROW(permval::conepsi::psi_dim2_general({{rv({1, 1}), rv({-1, -1})}, {}}),
               std::runtime_error);  // collinear
  EXPECT_THROW(permval::conepsi::psi_dim2_general({{rv({2, 0}), rv({0, 1})}, {}}),
               std::runtime_error);  // non-primitive generator
}

TEST(Conepsi, Dim3Worked) {
  EXPECT_EQ(Rational(3, 16), permval::conepsi::psi_dim3_unimodular(
                                 {{rv({1, 0, 0}), rv({1, 1, 0}), rv({0, 0, 1})}, {}}));
  EXPECT_EQ(Rational(1, 8), permval::conepsi::psi_dim3_unimodular(
                                {{rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}, {}}));
  EXPECT_THROW(permval::conepsi::psi_dim3_unimodular(
                   {{rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 2})}, {}}),
               std::runtime_error);
  // any orthogonal unimodular basis gives the orthant value
  EXPECT_EQ(Rational(1, 8), permval::conepsi::psi_dim3_unimodular(
                                {{rv({0, 0, -1}), rv({0, 1, 0}), rv({1, 0, 0})}, {}}));
}

TEST(Conepsi, FconeGenerators) {
  auto [gens, lattice] = permval::conepsi::fcone_generators(4, SubsetIndex{4, {2, 4}});
  ASSERT_EQ(2u, gens.size());
  RatVector u1{1, Rational(-1, 2), Rational(-1, 2), 0, 0};
  RatVector u3{0, Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)};
  EXPECT_EQ(u1, gens[0]);
  EXPECT_EQ(u3, gens[1]);
  EXPECT_EQ(gens, lattice);

  // generators are orthogonal to the face span
  RatVector root2{0, 1, -1, 0, 0};
  RatVector root4{0, 0, 0, 1, -1};
  for (const auto& g : gens) {
    EXPECT_EQ(Rational(0), permval::exact::inner_product(g, root2));
    EXPECT_EQ(Rational(0), permval::exact::inner_product(g, root4));
  }
  EXPECT_THROW(permval::conepsi::fcone_generators(3, SubsetIndex{4, {1}}), std::runtime_error);
}

TEST(Conepsi, FconeGeneratorsCodim3) {
  // n=4, S={2}: complement {1,3,4} gives three projected root vectors
  auto [gens, lattice] = permval::conepsi::fcone_generators(4, SubsetIndex{4, {2}});
  ASSERT_EQ(3u, gens.size());
  EXPECT_EQ((RatVector{1, Rational(-1, 2), Rational(-1, 2), 0, 0}), gens[0]);
  EXPECT_EQ((RatVector{0, Rational(1, 2), Rational(1, 2), -1, 0}), gens[1]);
  EXPECT_EQ((RatVector{0, 0, 0, 1, -1}), gens[2]);
  EXPECT_EQ(gens, lattice);

  // the full subset leaves the zero cone
  auto [none, trivial] = permval::conepsi::fcone_generators(3, SubsetIndex{3, {1, 2, 3}});
  EXPECT_TRUE(none.empty());
  EXPECT_TRUE(trivial.empty());
}

TEST(Conepsi, AlphaViaPsiMatchesTables) {
  EXPECT_EQ(Rational(1), permval::conepsi::alpha_via_psi(3, SubsetIndex{3, {1, 2, 3}}));
  EXPECT_EQ(Rational(1, 2), permval::conepsi::alpha_via_psi(3, SubsetIndex{3, {1, 2}}));
  EXPECT_EQ(Rational(7, 36), permval::conepsi::alpha_via_psi(3, SubsetIndex{3, {2}}));
  EXPECT_EQ(Rational(11, 72), permval::conepsi::alpha_via_psi(3, SubsetIndex{3, {1}}));
  EXPECT_EQ(Rational(1, 24), permval::conepsi::alpha_via_psi(3, SubsetIndex{3, {}}));
  // codim 3 face orbits
  EXPECT_EQ(Rational(5, 144), permval::conepsi::alpha_via_psi(4, SubsetIndex{4, {4}}));
  EXPECT_EQ(Rational(1, 32), permval::conepsi::alpha_via_psi(5, SubsetIndex{5, {4, 5}}));
  EXPECT_THROW(permval::conepsi::alpha_via_psi(5, SubsetIndex{5, {5}}), std::runtime_error);
}

TEST(Conepsi, PickTriangle) {
  auto res = permval::conepsi::pick_check(Polygon{{{0, 0}, {2, 0}, {0, 1}}});
  EXPECT_EQ(permval::exact::Int(4), res.lat);
  EXPECT_EQ(Rational(1), res.area);
  EXPECT_EQ(permval::exact::Int(4), res.boundary);
  ASSERT_EQ(3u, res.vertex_psi.size());
  EXPECT_EQ(Rational(1, 4), res.vertex_psi[0]);
  EXPECT_EQ(Rational(9, 20), res.vertex_psi[1]);
  EXPECT_EQ(Rational(3, 10), res.vertex_psi[2]);
  EXPECT_EQ(Rational(4), res.mcmullen_sum);
  EXPECT_TRUE(res.all_equal);
}

TEST(Conepsi, PickSquareAndBigTriangle) {
  auto square = permval::conepsi::pick_check(Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
  EXPECT_EQ(permval::exact::Int(4), square.lat);
  for (const auto& v : square.vertex_psi) EXPECT_EQ(Rational(1, 4), v);
  EXPECT_TRUE(square.all_equal);

  auto skew = permval::conepsi::pick_check(Polygon{{{0, 0}, {5, 1}, {1, 4}}});
  Rational sum = 0;
  for (const auto& v : skew.vertex_psi) sum += v;
  EXPECT_EQ(Rational(1), sum);
  EXPECT_TRUE(skew.all_equal);

  auto big = permval::conepsi::pick_check(Polygon{{{0, 0}, {3, 0}, {0, 3}}});
  EXPECT_EQ(permval::exact::Int(10), big.lat);
  EXPECT_TRUE(big.all_equal);
}

TEST(Conepsi, VertexSumChecksSteepCone) {
  // the cone Cone((1,0),(1,3)) sits at the origin of this triangle, so the
  // vertex-sum identity independently confirms its psi value
  auto tri = permval::conepsi::pick_check(Polygon{{{0, 0}, {1, 0}, {1, 3}}});
  ASSERT_EQ(3u, tri.vertex_psi.size());
  EXPECT_EQ(Rational(9, 40), tri.vertex_psi[0]);
  Rational sum = 0;
  for (const auto& v : tri.vertex_psi) sum += v;
  EXPECT_EQ(Rational(1), sum);
  EXPECT_TRUE(tri.all_equal);
}

TEST(Conepsi, PickValidation) {
  EXPECT_THROW(permval::conepsi::pick_check(Polygon{{{0, 0}, {1, 0}}}), std::runtime_error);
  // clockwise orientation rejected
  EXPECT_THROW(permval::conepsi::pick_check(Polygon{{{0, 0}, {0, 1}, {2, 0}}}),
               std::runtime_error);
  // collinear middle vertex rejected
  EXPECT_THROW(permval::conepsi::pick_check(Polygon{{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}),
               std::runtime_error);
}

}  // namespace
