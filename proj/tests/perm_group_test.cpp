#include "rwstab/perm_group.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace rwstab {
namespace {

Permutation cycles(const char* text, std::size_t degree) { return Permutation::parse(text, degree); }

Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

TEST(PermutationTest, ParseBothForms) {
  EXPECT_EQ(Permutation::parse("[1 2 0]"), cycles("(0 1 2)", 3));
  EXPECT_EQ(cycles("(0 1)(2 3)", 5).to_string(), "[1 0 3 2 4]");
  EXPECT_THROW(Permutation::parse("[0 0 1]"), std::invalid_argument);
  EXPECT_THROW(cycles("(0 7)", 3), std::invalid_argument);
}

TEST(PermutationTest, ComposeAppliesRightFactorFirst) {
  auto p = cycles("(0 1)", 3);
  auto q = cycles("(1 2)", 3);
  // (p∘q)(1) = p(q(1)) = p(2) = 2.
  EXPECT_EQ(compose(p, q)(1), 2u);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(compose(Permutation::identity(3), q), q);
  EXPECT_THROW(compose(p, Permutation::identity(4)), std::invalid_argument);
}

TEST(PermutationTest, Powers) {
  auto c = cycles("(0 1 2 3 4)", 5);
  EXPECT_TRUE(c.pow(5).is_identity());
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_EQ(c.pow(7), c.pow(2));
}

TEST(PermGroupTest, SymmetricGroupOnFourPoints) {
  PermGroup g(4, {cycles("(0 1)", 4), cycles("(0 1 2 3)", 4)});
  EXPECT_EQ(g.order(), 24);
  EXPECT_EQ(g.point_stabilizer_order(0), 6);
}

TEST(PermGroupTest, NoGeneratorsIsTrivial) {
  PermGroup g(5, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.orbits().cell_count(), 5u);
  EXPECT_EQ(g.point_stabilizer_order(3), 1);
  EXPECT_TRUE(g.contains(Permutation::identity(5)));
}

TEST(PermGroupTest, IdentityGeneratorsGiveOrderOne) {
  PermGroup g(3, {Permutation::identity(3), Permutation::identity(3)});
  EXPECT_EQ(g.order(), 1);
}

TEST(PermGroupTest, MembershipInCyclicGroup) {
  PermGroup g(3, {cycles("(0 1 2)", 3)});
  EXPECT_FALSE(g.contains(cycles("(0 1)", 3)));
  EXPECT_TRUE(g.contains(cycles("(0 2 1)", 3)));
  EXPECT_THROW(g.contains(Permutation::identity(4)), std::invalid_argument);
}

TEST(PermGroupTest, GeneratorDegreeMismatchThrows) {
  EXPECT_THROW(PermGroup(3, {Permutation::identity(4)}), std::invalid_argument);
}

TEST(PermGroupTest, Centrality) {
  PermGroup s3(3, {cycles("(0 1)", 3), cycles("(0 1 2)", 3)});
  EXPECT_TRUE(s3.is_central(Permutation::identity(3)));
  EXPECT_FALSE(s3.is_central(cycles("(0 1)", 3)));
  PermGroup c3(3, {cycles("(0 1 2)", 3)});
  EXPECT_THROW(c3.is_central(cycles("(0 1)", 3)), std::invalid_argument);
  PermGroup cyclic(6, {cycles("(0 1 2 3 4 5)", 6)});
  EXPECT_TRUE(cyclic.is_central(cycles("(0 3)(1 4)(2 5)", 6)));
}

TEST(PermGroupTest, OrbitsOrderedBySmallestPoint) {
  PermGroup g(6, {cycles("(1 4)", 6), cycles("(3 5 0)", 6)});
  auto cells = g.orbits().cells();
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0], (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(cells[1], (std::vector<Vertex>{1, 4}));
  EXPECT_EQ(cells[2], (std::vector<Vertex>{2}));
}

TEST(PermGroupTest, PetersenStabilizerFromBruteForceElements) {
  std::vector<Permutation> all;
  ASSERT_EQ(oracle::count_automorphisms(oracle::petersen(), &all), 120u);
  PermGroup g(10, all);
  EXPECT_EQ(g.order(), 120);
  for (Point v = 0; v < 10; ++v) EXPECT_EQ(g.point_stabilizer_order(v), 12);
}

TEST(PermGroupTest, LargeGroupOfHigherDegree) {
  // Sym(12) from a transposition and a 12-cycle.
  PermGroup g(12, {cycles("(0 1)", 12), cycles("(0 1 2 3 4 5 6 7 8 9 10 11)", 12)});
  EXPECT_EQ(g.order(), BigInt(479001600));
  // Sym(4) wr Sym(2)-ish direct product: two disjoint Sym(4)s.
  PermGroup h(8, {cycles("(0 1)", 8), cycles("(0 1 2 3)", 8), cycles("(4 5)", 8),
                  cycles("(4 5 6 7)", 8)});
  EXPECT_EQ(h.order(), 576);
}

TEST(PermGroupTest, BasePrefixIsRespected) {
  PermGroup g(5, {cycles("(0 1 2 3 4)", 5), cycles("(1 4)(2 3)", 5)},
              std::vector<Point>{3});
  EXPECT_EQ(g.base().front(), 3u);
  EXPECT_EQ(g.order(), 10);
}

// Orders and membership against closure enumeration for small random groups.
TEST(PermGroupProperty, AgreesWithClosureEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t degree = 2 + trial % 7;  // 2..8
    const int gen_count = 1 + trial % 3;
    std::vector<Permutation> gens;
    for (int k = 0; k < gen_count; ++k) {
      // Sparse permutations keep the groups small enough to enumerate.
      auto p = Permutation::identity(degree);
      std::vector<Point> images = p.images();
      std::uniform_int_distribution<std::size_t> pick(0, degree - 1);
      for (int swaps = 0; swaps < 2; ++swaps) std::swap(images[pick(rng)], images[pick(rng)]);
      gens.emplace_back(images);
    }
    PermGroup g(degree, gens);
    auto elements = oracle::group_closure(degree, gens);
    ASSERT_EQ(g.order(), BigInt(elements.size())) << "trial " << trial;
    for (int probe = 0; probe < 20; ++probe) {
      auto p = random_permutation(degree, rng);
      EXPECT_EQ(g.contains(p), elements.count(p.images()) == 1);
    }
    for (const auto& x : elements) EXPECT_TRUE(g.contains(Permutation(x)));
    for (Point v = 0; v < degree; ++v) {
      EXPECT_EQ(g.order(), g.point_stabilizer_order(v) * g.orbit(v).size());
    }
  }
}

TEST(PermGroupProperty, DenseRandomGeneratorsOfDegreeEight) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(random_permutation(8, rng));
    PermGroup g(8, gens);
    EXPECT_EQ(g.order(), BigInt(oracle::group_closure(8, gens).size()));
  }
}

}  // namespace
}  // namespace rwstab
