#include <gtest/gtest.h>

#include <stdexcept>

#include "permval/permdata.hpp"

namespace {

using permval::exact::Int;
using permval::permdata::Composition;
using permval::permdata::SubsetIndex;
using permval::permdata::WeightVector;

TEST(Permdata, WeightVectorValidation) {
  WeightVector ok{3, {1, 0, 1}};
  EXPECT_NO_THROW(ok.check());
  EXPECT_FALSE(ok.is_point());
  WeightVector point{2, {0, 0}};
  EXPECT_TRUE(point.is_point());
  WeightVector bad_size{3, {1, 0}};
  EXPECT_THROW(bad_size.check(), std::runtime_error);
  WeightVector negative{2, {1, -1}};
  EXPECT_THROW(negative.check(), std::runtime_error);
}

TEST(Permdata, Hypersimplex) {
  auto w = permval::permdata::hypersimplex(2, 4);
  EXPECT_EQ(4, w.n);
  EXPECT_EQ((std::vector<long long>{0, 1, 0, 0}), w.weights);
  EXPECT_THROW(permval::permdata::hypersimplex(0, 4), std::runtime_error);
  EXPECT_THROW(permval::permdata::hypersimplex(5, 4), std::runtime_error);
}

TEST(Permdata, CompositionBasics) {
  Composition m{{3, 2, 1}};
  EXPECT_EQ(5, m.ambient_n());
  EXPECT_NO_THROW(m.check());
  EXPECT_EQ("3+2+1", permval::permdata::composition_label(m));
  EXPECT_THROW(Composition{{}}.check(), std::runtime_error);
  EXPECT_THROW((Composition{{2, 0}}.check()), std::runtime_error);
}

TEST(Permdata, SubsetValidationAndMask) {
  SubsetIndex s{3, {1, 3}};
  EXPECT_NO_THROW(s.check());
  EXPECT_EQ("1,3", permval::permdata::subset_label(s));
  EXPECT_EQ("-", permval::permdata::subset_label(SubsetIndex{3, {}}));
  EXPECT_THROW((SubsetIndex{3, {3, 1}}.check()), std::runtime_error);
  EXPECT_THROW((SubsetIndex{3, {1, 1}}.check()), std::runtime_error);
  EXPECT_THROW((SubsetIndex{3, {4}}.check()), std::runtime_error);
  EXPECT_THROW((SubsetIndex{0, {}}.check()), std::runtime_error);

  for (int n = 1; n <= 8; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto t = SubsetIndex::from_mask(n, mask);
      EXPECT_NO_THROW(t.check());
      EXPECT_EQ(mask, t.mask());
    }
  EXPECT_EQ((std::vector<int>{2}), (SubsetIndex{3, {1, 3}}.complement()));
}

TEST(Permdata, CompositionSubsetBijection) {
  auto s = permval::permdata::composition_to_subset(Composition{{3, 2, 1}});
  EXPECT_EQ(5, s.n);
  EXPECT_EQ((std::vector<int>{1, 2, 4}), s.members);
  auto m = permval::permdata::subset_to_composition(SubsetIndex{5, {1, 2, 4}});
  EXPECT_EQ((std::vector<int>{3, 2, 1}), m.parts);

  for (int n = 1; n <= 8; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto sub = SubsetIndex::from_mask(n, mask);
      auto comp = permval::permdata::subset_to_composition(sub);
      EXPECT_EQ(n, comp.ambient_n());
      EXPECT_EQ(sub, permval::permdata::composition_to_subset(comp));
    }
}

TEST(Permdata, OrbitSizeAndCConstant) {
  EXPECT_EQ(Int(6), permval::permdata::orbit_size(SubsetIndex{3, {1, 3}}));
  EXPECT_EQ(Int(24), permval::permdata::orbit_size(SubsetIndex{3, {}}));
  EXPECT_EQ(Int(1), permval::permdata::orbit_size(SubsetIndex{3, {1, 2, 3}}));
  EXPECT_EQ(Int(60), permval::permdata::orbit_size(SubsetIndex{5, {1, 2, 4}}));
  EXPECT_EQ(Int(1), permval::permdata::c_constant(SubsetIndex{3, {1, 3}}));
  EXPECT_EQ(Int(2), permval::permdata::c_constant(SubsetIndex{5, {1, 2, 4}}));
  EXPECT_EQ(Int(720), permval::permdata::c_constant(SubsetIndex{6, {1, 2, 3, 4, 5, 6}}));
}

TEST(Permdata, OrbitCIdentityExhaustive) {
  for (int n = 1; n <= 8; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      EXPECT_TRUE(permval::permdata::oc_identity_check(SubsetIndex::from_mask(n, mask)))
          << "n=" << n << " mask=" << mask;
}

TEST(Permdata, OrbitSizesSumToOrderedSetPartitions) {
  // all faces of the n=2 permutohedron: 13 = 6 vertices + 6 edges + 1 hexagon
  Int total = 0;
  for (unsigned mask = 0; mask < 4; ++mask)
    total += permval::permdata::orbit_size(SubsetIndex::from_mask(2, mask));
  EXPECT_EQ(Int(13), total);
}

TEST(Permdata, FaceFactorization) {
  auto f = permval::permdata::face_factorization(SubsetIndex{3, {1, 3}}, WeightVector{3, {1, 0, 1}});
  ASSERT_EQ(2u, f.factors.size());
  EXPECT_EQ(1, f.factors[0].n);
  EXPECT_EQ((std::vector<long long>{1}), f.factors[0].weights);
  EXPECT_EQ(1, f.factors[1].n);
  EXPECT_EQ((std::vector<long long>{1}), f.factors[1].weights);

  // the empty subset factors into n+1 points
  auto vertex = permval::permdata::face_factorization(SubsetIndex{3, {}}, WeightVector{3, {1, 1, 1}});
  ASSERT_EQ(4u, vertex.factors.size());
  for (const auto& p : vertex.factors) EXPECT_TRUE(p.is_point());

  // the full subset keeps the whole weight vector
  auto top = permval::permdata::face_factorization(SubsetIndex{3, {1, 2, 3}}, WeightVector{3, {2, 1, 3}});
  ASSERT_EQ(1u, top.factors.size());
  EXPECT_EQ((std::vector<long long>{2, 1, 3}), top.factors[0].weights);

  EXPECT_THROW(
      permval::permdata::face_factorization(SubsetIndex{2, {1}}, WeightVector{3, {1, 1, 1}}),
      std::runtime_error);
}

TEST(Permdata, CompositionSubsetEndpoints) {
  EXPECT_EQ((SubsetIndex{3, {}}),
            permval::permdata::composition_to_subset(Composition{{1, 1, 1, 1}}));
  EXPECT_EQ((SubsetIndex{3, {1, 2, 3}}),
            permval::permdata::composition_to_subset(Composition{{4}}));
  EXPECT_EQ((std::vector<int>{2, 2}),
            permval::permdata::subset_to_composition(SubsetIndex{3, {1, 3}}).parts);
  EXPECT_EQ((std::vector<int>{1, 1, 1, 1}),
            permval::permdata::subset_to_composition(SubsetIndex{3, {}}).parts);
  EXPECT_EQ(Int(6), permval::permdata::c_constant(SubsetIndex{3, {1, 2, 3}}));
}

TEST(Permdata, FaceFactorizationMixedBlockSizes) {
  // blocks of sizes 3, 2, 1 keep the strictly interior weights
  auto f = permval::permdata::face_factorization(SubsetIndex{5, {1, 2, 4}},
                                                 WeightVector{5, {1, 1, 1, 1, 1}});
  ASSERT_EQ(3u, f.factors.size());
  EXPECT_EQ((std::vector<long long>{1, 1}), f.factors[0].weights);
  EXPECT_EQ((std::vector<long long>{1}), f.factors[1].weights);
  EXPECT_TRUE(f.factors[2].is_point());
}

TEST(Permdata, FactorSizesMatchComposition) {
  for (int n = 1; n <= 6; ++n) {
    WeightVector w{n, std::vector<long long>(n, 1)};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto s = SubsetIndex::from_mask(n, mask);
      auto m = permval::permdata::subset_to_composition(s);
      auto f = permval::permdata::face_factorization(s, w);
      ASSERT_EQ(m.parts.size(), f.factors.size());
      for (size_t i = 0; i < m.parts.size(); ++i)
        EXPECT_EQ(m.parts[i] - 1, f.factors[i].n);
    }
  }
}

}  // namespace
