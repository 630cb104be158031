#include <gtest/gtest.h>

#include <random>

#include "smd/smd.hpp"

using namespace smd;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

// center 0, legs 0-1-2, 0-3-4, 0-5-6
SignedGraph spider(Sign a = P, Sign b = P, Sign c = P) {
  return SignedGraph::build(7, {{0, 1, a}, {1, 2, P}, {0, 3, b}, {3, 4, P}, {0, 5, c}, {5, 6, P}});
}

SignedGraph double_star(std::size_t a, std::size_t b) {
  std::vector<SignedEdge> edges{{0, 1, P}};
  Vertex next = 2;
  for (std::size_t i = 0; i < a; ++i) edges.push_back({0, next++, P});
  for (std::size_t i = 0; i < b; ++i) edges.push_back({1, next++, P});
  return SignedGraph::build(next, edges);
}

}  // namespace

TEST(TreeProfile, Spider) {
  auto p = tree_profile(spider());
  EXPECT_EQ(p.major_vertices, (std::vector<Vertex>{0}));
  EXPECT_EQ(p.exterior_major, (std::vector<Vertex>{0}));
  EXPECT_EQ(p.ter(0), 3u);
  EXPECT_EQ(p.lambda, 3u);
  EXPECT_EQ(p.ext, 1u);
  EXPECT_EQ(p.leaves, (std::vector<Vertex>{2, 4, 6}));
  EXPECT_EQ(p.legs.at(0)[0], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(p.terminal_of.at(4), 0u);
  EXPECT_EQ(unsigned_tree_dimension(p), 2u);
  EXPECT_EQ(metric_dimension(spider()).dimension, 2u);
}

TEST(TreeProfile, Fig3Caterpillar) {
  auto p = tree_profile(fig3_tree());
  EXPECT_EQ(p.lambda, 14u);
  EXPECT_EQ(p.ext, 7u);
  EXPECT_EQ(unsigned_tree_dimension(p), 7u);
  for (Vertex s = 0; s < 7; ++s) EXPECT_EQ(p.ter(s), 2u);
}

TEST(TreeProfile, Star) {
  auto p = tree_profile(generate({Family::star, 5}));
  EXPECT_EQ(p.exterior_major, (std::vector<Vertex>{0}));
  EXPECT_EQ(p.ter(0), 5u);
}

TEST(TreeProfile, DoubleStar) {
  auto g = double_star(3, 3);
  auto p = tree_profile(g);
  EXPECT_EQ(unsigned_tree_dimension(p), 4u);
  EXPECT_EQ(metric_dimension(g).dimension, 4u);
}

TEST(TreeProfile, Errors) {
  EXPECT_THROW(tree_profile(generate({Family::cycle, 5})), NotATree);
  EXPECT_THROW(tree_profile(generate({Family::path, 5})), IsAPath);
}

TEST(SpecialVertices, Examples) {
  auto star = generate(Family::star, 4, std::vector<Sign>{P, N, P, P});
  EXPECT_EQ(special_exterior_majors(star).special, (std::vector<Vertex>{0}));
  EXPECT_TRUE(special_exterior_majors(spider()).special.empty());
  auto fig3 = special_exterior_majors(fig3_tree());
  EXPECT_EQ(fig3.special, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(fig3.formula_applicable);
}

TEST(SpecialVertices, DeeperLegsMustDifferAtEveryIndex) {
  // legs (+,+) and (-,+) from the center: signed distances 1,2 vs -1,-2
  auto g = SignedGraph::build(7, {{0, 1, P}, {1, 2, P}, {0, 3, N}, {3, 4, P}, {0, 5, P}, {5, 6, P}});
  EXPECT_EQ(special_exterior_majors(g).special, (std::vector<Vertex>{0}));
  // legs (+,+) and (-,-): 1,2 vs -1,2 tie at index 2
  auto h = SignedGraph::build(7, {{0, 1, P}, {1, 2, P}, {0, 3, N}, {3, 4, N}, {0, 5, P}, {5, 6, P}});
  EXPECT_TRUE(special_exterior_majors(h).special.empty());
}

TEST(SignedTreeDimension, Examples) {
  EXPECT_EQ(signed_tree_dimension(generate(Family::star, 5, std::vector<Sign>{P, N, N, P, P})), 3u);
  auto leg1 = SignedGraph::build(4, {{0, 1, P}, {0, 2, P}, {0, 3, N}});
  EXPECT_EQ(signed_tree_dimension(leg1), 1u);
  EXPECT_EQ(metric_dimension(leg1).dimension, 1u);
  EXPECT_EQ(signed_tree_dimension(generate({Family::path, 6, Preset::random(2)})), 1u);
}

TEST(SignedTreeDimension, Fig3NotApplicable) {
  try {
    signed_tree_dimension(fig3_tree());
    FAIL() << "expected FormulaNotApplicable";
  } catch (const FormulaNotApplicable& e) {
    EXPECT_LT(e.vertex, 7u);
  }
  auto r = metric_dimension(fig3_tree(), {.cap = 21});  // 21 vertices, above the default cap
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_EQ(r.dim_underlying, 7u);
  EXPECT_EQ(r.mdd, 5u);
}

TEST(SignedTreeBounds, Examples) {
  EXPECT_EQ(signed_tree_bounds(fig3_tree()), (DimensionBounds{1, 7}));
  EXPECT_EQ(signed_tree_bounds(spider()), (DimensionBounds{1, 2}));
  EXPECT_EQ(metric_dimension(spider()).dimension, signed_tree_bounds(spider()).hi);
  auto star = generate(Family::star, 6, std::vector<Sign>{P, N, N, P, P, P});
  auto b = signed_tree_bounds(star);
  EXPECT_EQ(b, (DimensionBounds{4, 5}));
  EXPECT_EQ(metric_dimension(star).dimension, 4u);
}

TEST(SignedTreeDimension, RandomAgreement) {
  std::mt19937_64 rng(17);
  int applicable = 0;
  for (int i = 0; i < 300; ++i) {
    auto t = random_tree(3 + rng() % 10, rng);
    if (is_path_graph(t)) continue;
    const auto dim = metric_dimension(t).dimension;
    EXPECT_TRUE(signed_tree_bounds(t).contains(dim));
    auto sp = special_exterior_majors(t);
    if (!sp.formula_applicable) {
      EXPECT_THROW(signed_tree_dimension(t), FormulaNotApplicable);
      continue;
    }
    ++applicable;
    EXPECT_EQ(signed_tree_dimension(t), dim) << write_graph(t);
  }
  EXPECT_GT(applicable, 100);
}

TEST(SpecialVertices, InvariantUnderNegation) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto t = random_tree(3 + rng() % 10, rng);
    if (is_path_graph(t)) continue;
    EXPECT_EQ(special_exterior_majors(t).special, special_exterior_majors(negate(t)).special);
  }
}

TEST(Caterpillar, Shape) {
  auto g = alternating_caterpillar(3);
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_sign(0, 3), P);
  EXPECT_EQ(g.edge_sign(0, 4), N);
  EXPECT_EQ(g.edge_sign(2, 8), N);
  EXPECT_THROW(alternating_caterpillar(0), BadSize);
}
