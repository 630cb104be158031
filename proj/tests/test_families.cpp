#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smd/smd.hpp"

using namespace smd;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

std::size_t negatives(const SignedGraph& g) {
  std::size_t k = 0;
  for (const auto& e : g.edges()) k += e.sign == N;
  return k;
}

}  // namespace

TEST(Generate, SizesAndLabels) {
  for (Family f : all_families)
    for (std::size_t n = minimum_size(f); n <= 7; ++n) {
      auto g = generate({f, n});
      EXPECT_EQ(g.vertex_count(), family_vertex_count(f, n)) << to_string(f) << n;
      EXPECT_EQ(g.edge_count(), family_edge_count(f, n)) << to_string(f) << n;
    }
  EXPECT_EQ(generate({Family::star, 5}).degree(0), 5u);
  auto w = generate({Family::wheel, 6});
  EXPECT_EQ(w.degree(0), 6u);
  EXPECT_TRUE(w.adjacent(1, 6));
  EXPECT_TRUE(w.adjacent(3, 4));
}

TEST(Generate, FigureFixtures) {
  auto f1 = fig1_wheel();
  for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{{0, 5}, {0, 6}, {0, 7}, {7, 8}, {4, 5}})
    EXPECT_EQ(f1.edge_sign(a, b), N);
  EXPECT_EQ(negatives(f1), 5u);
  auto f2 = fig2_wheel();
  EXPECT_EQ(negatives(f2), 4u);
  EXPECT_EQ(f2.edge_sign(3, 4), N);
  EXPECT_EQ(generate({Family::complete, 4}), generate(Family::complete, 4, std::vector<Sign>(6, P)));
}

TEST(Generate, Presets) {
  EXPECT_EQ(negatives(generate({Family::path, 5, Preset::all_negative()})), 4u);
  auto k4 = generate({Family::complete, 4, Preset::single_negative(0)});
  EXPECT_EQ(k4.edge_sign(0, 1), N);
  EXPECT_EQ(negatives(k4), 1u);
  EXPECT_EQ(generate({Family::wheel, 6, Preset::random(3)}), generate({Family::wheel, 6, Preset::random(3)}));
  EXPECT_NE(generate({Family::wheel, 6, Preset::random(3)}), generate({Family::wheel, 6, Preset::random(4)}));
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate({Family::cycle, 2}), BadSize);
  EXPECT_THROW(generate({Family::wheel, 2}), BadSize);
  EXPECT_THROW(generate({Family::path, 1}), BadSize);
  EXPECT_THROW(generate({Family::path, 4, std::vector<Sign>{P, P}}), SignatureLengthMismatch);
  EXPECT_THROW(generate({Family::path, 4, Preset::single_negative(3)}), BadSize);
  const std::vector<std::pair<Vertex, Vertex>> not_edge{{1, 3}};
  EXPECT_THROW(signature_with_negatives(Family::wheel, 5, not_edge), BadSize);
}

TEST(Generate, RandomGraphsAreConnectedAndSeeded) {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_connected_graph(8, 0.3, a), random_connected_graph(8, 0.3, b));
}

TEST(CyclePredicate, Examples) {
  EXPECT_FALSE(cycle_dim1_predicate(generate({Family::cycle, 5, Preset::all_negative()})).dim1);
  auto c3 = cycle_dim1_predicate(generate({Family::cycle, 3, Preset::single_negative(0)}));
  EXPECT_TRUE(c3.dim1);
  EXPECT_TRUE(c3.witness_vertex);
  EXPECT_FALSE(cycle_dim1_predicate(generate({Family::cycle, 7})).dim1);
  EXPECT_THROW(cycle_dim1_predicate(generate({Family::path, 4})), NotACycle);
  EXPECT_THROW(cycle_dim1_predicate(generate({Family::cycle, 4, Preset::single_negative(0)})), IncompatibleGraph);
}

TEST(CyclePredicate, WitnessResolvesAlone) {
  for (std::size_t n = 3; n <= 9; n += 2)
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
      auto g = generate(Family::cycle, n, signature_from_mask(n, mask));
      auto pred = cycle_dim1_predicate(g);
      if (pred.dim1) {
        EXPECT_TRUE(is_resolving(signed_distances(g), {*pred.witness_vertex}).resolving);
      }
      EXPECT_EQ(pred.dim1, oracle::brute_dimension(g) == 1) << n << " " << mask;
    }
}

TEST(Star, Examples) {
  EXPECT_EQ(star_dimension(generate(Family::star, 4, std::vector<Sign>{P, P, N, N})), 2u);
  EXPECT_EQ(star_dimension(generate({Family::star, 4, Preset::all_negative()})), 3u);
  for (std::uint64_t mask = 0; mask < 4; ++mask)
    EXPECT_EQ(star_dimension(generate(Family::star, 2, signature_from_mask(2, mask))), 1u);
  EXPECT_EQ(star_center(generate({Family::star, 5})), 0u);
  EXPECT_THROW(star_dimension(generate({Family::cycle, 4})), NotAStar);
  EXPECT_THROW(star_dimension(generate({Family::path, 5})), NotAStar);
}

TEST(Star, MatchesSolver) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
      auto g = generate(Family::star, n, signature_from_mask(n, mask));
      EXPECT_EQ(star_dimension(g), metric_dimension(g).dimension) << n << " " << mask;
    }
}

TEST(Wheel, CompatibilityExamples) {
  EXPECT_TRUE(wheel_compatible_predicate(generate({Family::wheel, 6})).compatible);
  // spoke 0-1 is edge index 5 in W_5
  auto w5 = generate({Family::wheel, 5, Preset::single_negative(5)});
  ASSERT_EQ(w5.edge_sign(0, 1), N);
  auto pred = wheel_compatible_predicate(w5);
  EXPECT_FALSE(pred.compatible);
  ASSERT_TRUE(pred.witness);
  EXPECT_EQ(cycle_sign(w5, std::span<const Vertex>(*pred.witness)), N);
  EXPECT_FALSE(compatibility(w5).compatible);
  EXPECT_TRUE(wheel_compatible_predicate(fig1_wheel()).compatible);
  EXPECT_TRUE(wheel_compatible_predicate(fig2_wheel()).compatible);
}

TEST(Wheel, LayoutAndErrors) {
  auto layout = wheel_layout(generate({Family::wheel, 6}));
  EXPECT_EQ(layout.center, 0u);
  EXPECT_EQ(layout.rim, (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_THROW(wheel_layout(generate({Family::complete, 4})), NotAWheel);
  EXPECT_THROW(wheel_layout(generate({Family::cycle, 6})), NotAWheel);
}

TEST(Wheel, UnsignedDimension) {
  EXPECT_EQ(unsigned_wheel_dimension(9), 4u);
  EXPECT_EQ(unsigned_wheel_dimension(4), 2u);
  EXPECT_EQ(unsigned_wheel_dimension(6), 3u);
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_EQ(unsigned_wheel_dimension(n), metric_dimension(generate({Family::wheel, n})).dimension) << n;
  EXPECT_THROW(unsigned_wheel_dimension(2), BadSize);
}

TEST(Complete, Bounds) {
  EXPECT_EQ(complete_dimension_bounds(generate({Family::complete, 5})), (DimensionBounds{4, 4}));
  auto k4 = generate({Family::complete, 4, Preset::single_negative(0)});
  EXPECT_EQ(complete_dimension_bounds(k4), (DimensionBounds{2, 3}));
  EXPECT_EQ(metric_dimension(k4).dimension, 2u);
  auto k3 = generate({Family::complete, 3, Preset::single_negative(2)});
  EXPECT_EQ(complete_dimension_bounds(k3), (DimensionBounds{1, 2}));
  EXPECT_EQ(metric_dimension(k3).dimension, 1u);
  EXPECT_THROW(complete_dimension_bounds(generate({Family::cycle, 4})), NotComplete);
}

TEST(Complete, SolverWithinBounds) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::size_t m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1U << m); ++mask) {
      auto g = generate(Family::complete, n, signature_from_mask(m, mask));
      EXPECT_TRUE(complete_dimension_bounds(g).contains(metric_dimension(g).dimension)) << n << " " << mask;
    }
  }
}
