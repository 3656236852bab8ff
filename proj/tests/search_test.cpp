#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qk/abelian.hpp"
#include "qk/properties.hpp"
#include "qk/search.hpp"
#include "test_util.hpp"

namespace qk {
namespace {

std::vector<CayleyTable> small_corpus() {
  std::vector<CayleyTable> out;
  for (std::uint64_t m = 0; m <= 2; ++m) out.push_back(cyclic_midpoint(m));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(oracle::dihedral(n));
  FinAbGroup v({2, 2}), z4({4});
  out.push_back(alexander(v, make_auto(v, {{0, 1}, {1, 1}})));
  out.push_back(alexander(z4, make_auto(z4, {{3}})));
  out.push_back(CayleyTable(2, {1, 1, 0, 0}));  // permutation rack
  out.push_back(CayleyTable(3, {0, 0, 0, 0, 0, 0, 0, 0, 0}));
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(oracle::random_table(n, rng));
  return out;
}

TEST(Homomorphisms, Examples) {
  auto c3 = cyclic_midpoint(1), c5 = cyclic_midpoint(2);
  auto h = homomorphisms(c3, c5);
  ASSERT_EQ(h.size(), 5u);
  for (Element k = 0; k < 5; ++k) EXPECT_EQ(h[k], (Map{k, k, k}));
  EXPECT_EQ(homomorphisms(c3, c3).size(), 9u);
  auto one = cyclic_midpoint(0);
  auto from_one = homomorphisms(one, c5);
  ASSERT_EQ(from_one.size(), 5u);
  for (Element k = 0; k < 5; ++k) EXPECT_EQ(from_one[k], Map{k});
}

TEST(Homomorphisms, RejectsEmpty) {
  QK_EXPECT_ERROR(homomorphisms(CayleyTable::empty(), cyclic_midpoint(1)),
                  ErrorKind::kInvalidArgument);
  QK_EXPECT_ERROR(homomorphisms(cyclic_midpoint(1), CayleyTable::empty()),
                  ErrorKind::kInvalidArgument);
}

TEST(Homomorphisms, OracleEquivalence) {
  auto c = small_corpus();
  for (const auto& x : c)
    for (const auto& y : c) {
      if (x.order() * y.order() > 30) continue;
      auto got = homomorphisms(x, y);
      EXPECT_EQ(got, oracle::brute_homomorphisms(x, y));
      for (const auto& f : got) EXPECT_TRUE(is_homomorphism(x, y, f));
    }
}

TEST(IsHomomorphism, RejectsWrongShape) {
  auto c3 = cyclic_midpoint(1);
  EXPECT_FALSE(is_homomorphism(c3, c3, Map{0, 1}));
  EXPECT_FALSE(is_homomorphism(c3, c3, Map{0, 1, 5}));
  EXPECT_FALSE(is_homomorphism(c3, c3, Map{0, 0, 1}));
  EXPECT_TRUE(is_homomorphism(c3, c3, Map{1, 1, 1}));
}

TEST(IsIsomorphic, Examples) {
  auto c15 = cyclic_midpoint(7);
  std::vector<CayleyTable> f{cyclic_midpoint(1), cyclic_midpoint(2)};
  auto s = direct_sum(f);
  auto w = is_isomorphic(c15, s);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_permutation_map(*w));
  EXPECT_TRUE(is_homomorphism(c15, s, *w));

  FinAbGroup z9({9});
  auto a4 = alexander(z9, make_auto(z9, {{4}}));
  auto a7 = alexander(z9, make_auto(z9, {{7}}));
  auto w2 = is_isomorphic(a4, a7);
  ASSERT_TRUE(w2);
  EXPECT_TRUE(is_homomorphism(a4, a7, *w2));

  EXPECT_FALSE(is_isomorphic(cyclic_midpoint(1), cyclic_midpoint(2)));
}

TEST(IsIsomorphic, EmptyMagmas) {
  EXPECT_TRUE(is_isomorphic(CayleyTable::empty(), CayleyTable::empty()));
  EXPECT_FALSE(is_isomorphic(CayleyTable::empty(), cyclic_midpoint(0)));
}

TEST(IsIsomorphic, OracleEquivalence) {
  auto c = small_corpus();
  std::mt19937 rng(17);
  for (const auto& x : c) {
    auto relabeled = x.relabeled(oracle::random_permutation(x.order(), rng));
    for (const auto* y : {&relabeled}) {
      EXPECT_TRUE(is_isomorphic(x, *y).has_value());
    }
    for (const auto& y : c) {
      if (x.order() * y.order() > 30) continue;
      auto w = is_isomorphic(x, y);
      EXPECT_EQ(w.has_value(), oracle::brute_isomorphic(x, y));
      if (w) {
        EXPECT_TRUE(is_permutation_map(*w));
        EXPECT_TRUE(is_homomorphism(x, y, *w));
      }
    }
  }
}

TEST(IsIsomorphic, EquivalenceRelation) {
  std::mt19937 rng(23);
  std::vector<CayleyTable> c;
  for (const auto& t : small_corpus()) {
    c.push_back(t);
    c.push_back(t.relabeled(oracle::random_permutation(t.order(), rng)));
  }
  const std::size_t k = c.size();
  std::vector<std::vector<bool>> iso(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) iso[i][j] = is_isomorphic(c[i], c[j]).has_value();
  for (std::size_t i = 0; i < k; ++i) {
    auto self = is_isomorphic(c[i], c[i]);
    ASSERT_TRUE(self);
    EXPECT_TRUE(is_homomorphism(c[i], c[i], *self));
    for (std::size_t j = 0; j < k; ++j) {
      EXPECT_EQ(iso[i][j], iso[j][i]);
      for (std::size_t l = 0; l < k; ++l)
        if (iso[i][j] && iso[j][l]) EXPECT_TRUE(iso[i][l]);
    }
  }
}

TEST(GeneratingSet, GeneratesEverything) {
  for (const auto& t : small_corpus()) {
    auto plan = generating_set(t);
    EXPECT_EQ(plan.order.size(), t.order());
    EXPECT_EQ(plan.stage_end.size(), plan.generators.size());
    EXPECT_EQ(subalgebra(t, plan.generators).size(), t.order());
    std::vector<bool> known(t.order());
    for (const auto& s : plan.order) {
      if (!s.is_generator) {
        EXPECT_TRUE(known[s.left] && known[s.right]);
        EXPECT_EQ(t(s.left, s.right), s.element);
      }
      known[s.element] = true;
    }
  }
}

TEST(GeneratingSet, C5NeedsTwo) {
  auto plan = generating_set(cyclic_midpoint(2));
  EXPECT_EQ(plan.generators.size(), 2u);
  EXPECT_EQ(subalgebra(cyclic_midpoint(2), {3}), std::vector<Element>{3});
}

}  // namespace
}  // namespace qk
