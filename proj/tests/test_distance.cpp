#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smd/smd.hpp"

using namespace smd;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

void expect_matches_oracle(const SignedGraph& g) {
  const auto dm = signed_distances(g);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto want = oracle::definitional(g, u, v);
      const auto& got = dm.at(u, v);
      ASSERT_EQ(got.d, want.d) << u << "," << v;
      ASSERT_EQ(got.sigma_max, want.sigma_max) << u << "," << v;
      ASSERT_EQ(got.sigma_min, want.sigma_min) << u << "," << v;
    }
}

}  // namespace

TEST(SignedDistances, C4OneNegativeEdgeIsIncompatibleAcrossTheCycle) {
  auto g = generate({Family::cycle, 4, Preset::single_negative(0)});  // edge 0-1 negative
  const auto& e = signed_distances(g).at(0, 2);
  EXPECT_EQ(e.d, 2u);
  EXPECT_EQ(e.sigma_max, P);
  EXPECT_EQ(e.sigma_min, N);
  EXPECT_FALSE(e.compatible());
}

TEST(SignedDistances, AllPositiveEqualsUnsigned) {
  auto g = generate({Family::wheel, 6});
  auto dm = signed_distances(g);
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = 0; v < 7; ++v) {
      EXPECT_EQ(dm.at(u, v).sigma_max, P);
      EXPECT_EQ(dm.at(u, v).sigma_min, P);
      EXPECT_EQ(dm.at(u, v).d_max(), static_cast<long>(dm.at(u, v).d));
    }
  EXPECT_EQ(dm.at(1, 4).d, 2u);
  EXPECT_EQ(dm.at(0, 4).d, 1u);
}

TEST(SignedDistances, PathEndpointsCarryThePathSign) {
  auto g = SignedGraph::build(3, {{0, 1, P}, {1, 2, N}});
  const auto& e = signed_distances(g).at(0, 2);
  EXPECT_EQ(e.d, 2u);
  EXPECT_EQ(e.sigma_max, N);
  EXPECT_EQ(e.sigma_min, N);
  EXPECT_EQ(e.d_max(), -2);
}

TEST(SignedDistances, MatrixInvariants) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    auto g = random_connected_graph(1 + rng() % 10, 0.3, rng);
    auto dm = signed_distances(g);
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(dm.at(u, u), (PairDistance{0, P, P}));
      for (Vertex v = 0; v < n; ++v) {
        const auto& e = dm.at(u, v);
        EXPECT_EQ(e, dm.at(v, u));
        EXPECT_FALSE(e.sigma_max == N && e.sigma_min == P);
        EXPECT_EQ(std::abs(e.d_max()), static_cast<long>(e.d));
        EXPECT_EQ(std::abs(e.d_min()), static_cast<long>(e.d));
        if (u != v) {
          EXPECT_GT(e.d, 0u);
        }
        for (Vertex w = 0; w < n; ++w) EXPECT_LE(e.d, dm.at(u, w).d + dm.at(w, v).d);
      }
    }
  }
}

TEST(EnumerateShortestPaths, Examples) {
  auto c4 = generate({Family::cycle, 4});
  EXPECT_EQ(enumerate_shortest_paths(c4, 0, 2).size(), 2u);

  std::mt19937_64 rng(9);
  auto t = random_tree(10, rng);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(enumerate_shortest_paths(t, u, v).size(), 1u);

  auto k4 = generate({Family::complete, 4});
  auto paths = enumerate_shortest_paths(k4, 1, 3);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].vertices, (std::vector<Vertex>{1, 3}));
}

TEST(EnumerateShortestPaths, GuardsSize) {
  auto p = generate({Family::path, 13});
  EXPECT_THROW(enumerate_shortest_paths(p, 0, 12), TooLarge);
}

TEST(SignedDistances, OracleEquivalenceOnSmallFamilies) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask)
      expect_matches_oracle(generate(Family::cycle, n, signature_from_mask(n, mask)));
  for (std::uint64_t mask = 0; mask < 64; ++mask)
    expect_matches_oracle(generate(Family::complete, 4, signature_from_mask(6, mask)));
}

TEST(SignedDistances, OracleEquivalenceOnRandomGraphs) {
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const double p = static_cast<double>(rng() % 70) / 100.0;
    expect_matches_oracle(random_connected_graph(2 + rng() % 9, p, rng));
  }
}

TEST(SignedDistances, NegationSwapsAndFlipsAtOddDistance) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto g = random_connected_graph(2 + rng() % 9, 0.4, rng);
    auto a = signed_distances(g);
    auto b = signed_distances(negate(g));
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& x = a.at(u, v);
        const auto& y = b.at(u, v);
        ASSERT_EQ(x.d, y.d);
        if (x.d % 2 == 0) {
          EXPECT_EQ(y.sigma_max, x.sigma_max);
          EXPECT_EQ(y.sigma_min, x.sigma_min);
        } else {
          EXPECT_EQ(y.sigma_max, -x.sigma_min);
          EXPECT_EQ(y.sigma_min, -x.sigma_max);
        }
      }
    EXPECT_EQ(compatibility(g).compatible, compatibility(negate(g)).compatible);
  }
}

TEST(Compatibility, BalancedAndTreesAreCompatible) {
  std::mt19937_64 rng(4);
  int balanced_seen = 0;
  for (int i = 0; i < 400; ++i) {
    auto g = random_connected_graph(2 + rng() % 8, 0.4, rng);
    if (is_balanced(g)) {
      ++balanced_seen;
      EXPECT_TRUE(compatibility(g).compatible);
    }
    if (is_balanced(negate(g))) {
      EXPECT_TRUE(compatibility(g).compatible);  // anti-balanced
    }
  }
  EXPECT_GT(balanced_seen, 10);
  for (int i = 0; i < 100; ++i) {
    auto report = compatibility(random_tree(2 + rng() % 9, rng));
    EXPECT_TRUE(report.compatible);
    EXPECT_FALSE(report.witness);
  }
}

TEST(Compatibility, WitnessIsSmallestIncompatiblePair) {
  auto g = generate({Family::cycle, 4, Preset::single_negative(0)});
  auto report = compatibility(g);
  EXPECT_FALSE(report.compatible);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(*report.witness, (std::pair<Vertex, Vertex>(0, 2)));
  const auto& e = signed_distances(g).at(0, 2);
  EXPECT_EQ(e.sigma_max, P);
  EXPECT_EQ(e.sigma_min, N);
}

TEST(Compatibility, WheelPredicateAgreesWithPairwiseCheck) {
  for (std::size_t n = 4; n <= 6; ++n) {
    const std::size_t m = 2 * n;
    for (std::uint64_t mask = 0; mask < (1U << m); ++mask) {
      auto g = generate(Family::wheel, n, signature_from_mask(m, mask));
      ASSERT_EQ(wheel_compatible_predicate(g).compatible, compatibility(g).compatible) << n << " " << mask;
    }
  }
}
