#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "smd/families.hpp"
#include "smd/signed_graph.hpp"
#include "smd/trees.hpp"

namespace smd {

// Three reference graphs: two signed wheels W_9 (center 0, rim 1..9
// clockwise from the top) and a signed caterpillar with a 7-vertex spine.
// expected_* hold the reference values; expected_basis is the drawn basis.
struct Fixture {
  std::string_view name;
  SignedGraph graph;
  std::size_t expected_dimension;
  std::size_t expected_dim_underlying;
  std::size_t expected_mdd;
  std::vector<Vertex> expected_basis;
};

inline constexpr std::array<std::string_view, 3> fixture_names{"fig1_w9", "fig2_w9", "fig3_tree"};

inline SignedGraph fig1_wheel() {
  const std::vector<std::pair<Vertex, Vertex>> negatives{{0, 5}, {0, 6}, {0, 7}, {7, 8}, {4, 5}};
  return generate(Family::wheel, 9, signature_with_negatives(Family::wheel, 9, negatives));
}

inline SignedGraph fig2_wheel() {
  const std::vector<std::pair<Vertex, Vertex>> negatives{{0, 4}, {0, 5}, {3, 4}, {5, 6}};
  return generate(Family::wheel, 9, signature_with_negatives(Family::wheel, 9, negatives));
}

// Spine 0..6; spine vertex i has positive leaf 7+2i and negative leaf 8+2i.
// The basis leaves are the negative leaf of spine vertex 0 and the
// positive leaf of spine vertex 6.
inline SignedGraph fig3_tree() { return alternating_caterpillar(7); }

inline std::optional<Fixture> fixture(std::string_view name) {
  if (name == "fig1_w9") return Fixture{"fig1_w9", fig1_wheel(), 4, 4, 0, {1, 3, 6, 8}};
  if (name == "fig2_w9") return Fixture{"fig2_w9", fig2_wheel(), 3, 4, 1, {1, 6, 8}};
  if (name == "fig3_tree") return Fixture{"fig3_tree", fig3_tree(), 2, 7, 5, {8, 19}};
  return std::nullopt;
}

}  // namespace smd
