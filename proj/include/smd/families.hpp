#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "smd/distance.hpp"
#include "smd/error.hpp"
#include "smd/signed_graph.hpp"

namespace smd {

// Labeling: path/cycle in index order; star center 0, leaves 1..n;
// wheel center 0, rim 1..n in cycle order; complete on 0..n-1.
enum class Family { path, cycle, star, wheel, complete };

inline constexpr std::array<Family, 5> all_families{Family::path, Family::cycle, Family::star,
                                                    Family::wheel, Family::complete};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

struct Preset {
  enum class Kind { all_positive, all_negative, single_negative, random };
  Kind kind = Kind::all_positive;
  std::size_t index = 0;    // edge index for single_negative
  std::uint64_t seed = 0;   // for random

  static Preset all_positive() { return {Kind::all_positive}; }
  static Preset all_negative() { return {Kind::all_negative}; }
  static Preset single_negative(std::size_t i) { return {Kind::single_negative, i}; }
  static Preset random(std::uint64_t seed) { return {Kind::random, 0, seed}; }
};

struct FamilySpec {
  Family family;
  std::size_t n;
  std::variant<std::vector<Sign>, Preset> signature = Preset::all_positive();
};

inline std::size_t minimum_size(Family f) {
  switch (f) {
    case Family::path: return 2;
    case Family::cycle: return 3;
    case Family::star: return 1;
    case Family::wheel: return 3;
    case Family::complete: return 2;
  }
  return 0;
}

inline std::size_t family_vertex_count(Family f, std::size_t n) {
  return (f == Family::star || f == Family::wheel) ? n + 1 : n;
}

inline std::size_t family_edge_count(Family f, std::size_t n) {
  switch (f) {
    case Family::path: return n - 1;
    case Family::cycle: return n;
    case Family::star: return n;
    case Family::wheel: return 2 * n;
    case Family::complete: return n * (n - 1) / 2;
  }
  return 0;
}

// Unsigned edges in canonical order: path (i,i+1); cycle adds the closing
// edge; star (0,i); wheel rim cycle then spokes; complete lexicographic.
inline std::vector<std::pair<Vertex, Vertex>> family_edges(Family f, std::size_t n) {
  if (n < minimum_size(f))
    throw BadSize(std::string(to_string(f)) + " needs n >= " + std::to_string(minimum_size(f)));
  std::vector<std::pair<Vertex, Vertex>> e;
  switch (f) {
    case Family::path:
      for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, n - 1);
      break;
    case Family::star:
      for (Vertex i = 1; i <= n; ++i) e.emplace_back(0, i);
      break;
    case Family::wheel:
      for (Vertex i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(1, n);
      for (Vertex i = 1; i <= n; ++i) e.emplace_back(0, i);
      break;
    case Family::complete:
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
      break;
  }
  return e;
}

// Bit i of mask set means canonical edge i is negative.
inline std::vector<Sign> signature_from_mask(std::size_t edge_count, std::uint64_t mask) {
  std::vector<Sign> s(edge_count, Sign::positive);
  for (std::size_t i = 0; i < edge_count && i < 64; ++i)
    if ((mask >> i) & 1U) s[i] = Sign::negative;
  return s;
}

inline std::vector<Sign> random_signature(std::size_t edge_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sign> s(edge_count);
  for (auto& x : s) x = (rng() & 1U) ? Sign::negative : Sign::positive;
  return s;
}

inline std::vector<Sign> resolve_signature(const FamilySpec& spec) {
  const std::size_t m = family_edge_count(spec.family, spec.n);
  if (const auto* explicit_signs = std::get_if<std::vector<Sign>>(&spec.signature)) {
    if (explicit_signs->size() != m) throw SignatureLengthMismatch(m, explicit_signs->size());
    return *explicit_signs;
  }
  const auto& p = std::get<Preset>(spec.signature);
  switch (p.kind) {
    case Preset::Kind::all_positive: return std::vector<Sign>(m, Sign::positive);
    case Preset::Kind::all_negative: return std::vector<Sign>(m, Sign::negative);
    case Preset::Kind::single_negative: {
      if (p.index >= m)
        throw BadSize("edge index " + std::to_string(p.index) + " out of range (" + std::to_string(m) +
                      " edges)");
      std::vector<Sign> s(m, Sign::positive);
      s[p.index] = Sign::negative;
      return s;
    }
    case Preset::Kind::random: return random_signature(m, p.seed);
  }
  return {};
}

// All-positive except the listed vertex pairs, which must be family edges.
inline std::vector<Sign> signature_with_negatives(Family f, std::size_t n,
                                                  std::span<const std::pair<Vertex, Vertex>> negatives) {
  const auto edges = family_edges(f, n);
  std::vector<Sign> s(edges.size(), Sign::positive);
  for (auto [a, b] : negatives) {
    auto key = std::pair(std::min(a, b), std::max(a, b));
    auto it = std::find(edges.begin(), edges.end(), key);
    if (it == edges.end())
      throw BadSize("{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge of this " +
                    std::string(to_string(f)));
    s[static_cast<std::size_t>(it - edges.begin())] = Sign::negative;
  }
  return s;
}

inline SignedGraph generate(Family f, std::size_t n, std::span<const Sign> signs) {
  const auto edges = family_edges(f, n);
  if (signs.size() != edges.size()) throw SignatureLengthMismatch(edges.size(), signs.size());
  std::vector<SignedEdge> signed_edges;
  signed_edges.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    signed_edges.push_back({edges[i].first, edges[i].second, signs[i]});
  return SignedGraph::build(family_vertex_count(f, n), signed_edges);
}

inline SignedGraph generate(const FamilySpec& spec) {
  family_edges(spec.family, spec.n);  // size check before the signature
  return generate(spec.family, spec.n, resolve_signature(spec));
}

// Random connected graph: random recursive tree plus each remaining pair with
// probability extra_edge_probability.
inline SignedGraph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng) {
  if (n == 0) throw BadSize("random graph needs n >= 1");
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  std::vector<SignedEdge> edges;
  auto sign = [&] { return (rng() & 1U) ? Sign::negative : Sign::positive; };
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = rng() % v;
    has[u][v] = true;
    edges.push_back({u, v, sign()});
  }
  const auto threshold = static_cast<std::uint64_t>(extra_edge_probability * 1000000.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!has[u][v] && rng() % 1000000 < threshold) edges.push_back({u, v, sign()});
  return SignedGraph::build(n, edges);
}

// ---- cycles -----------------------------------------------------------------

struct CyclePrediction {
  bool dim1 = false;
  std::optional<Vertex> witness_vertex;
};

inline bool is_cycle_graph(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// dim(C_n^sigma) = 1 iff some u has net degree 0 and, at every level
// k = 1..floor(n/2), the vertices of N_k(u) get distinct signs sigma(u, .).
inline CyclePrediction cycle_dim1_predicate(const SignedGraph& g) {
  if (!is_cycle_graph(g)) throw NotACycle("underlying graph is not a cycle");
  const auto dm = signed_distances(g);
  if (auto w = dm.first_incompatible()) throw IncompatibleGraph(w->first, w->second);
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (net_degree(g, u).d_net != 0) continue;
    bool separated = true;
    for (std::size_t k = 1; k <= n / 2 && separated; ++k) {
      const auto level = k_neighborhood(dm, u, k);
      if (level.size() == 2 && dm.at(u, level[0]).sigma_max == dm.at(u, level[1]).sigma_max)
        separated = false;
    }
    if (separated) return {true, u};
  }
  return {};
}

// ---- stars ------------------------------------------------------------------

// Center of K_{1,n}; for n <= 2 (a path) the smallest max-degree vertex.
inline Vertex star_center(const SignedGraph& g) {
  const std::size_t v = g.vertex_count();
  if (v < 2 || g.edge_count() != v - 1) throw NotAStar();
  Vertex center = 0;
  for (Vertex x = 0; x < v; ++x)
    if (g.degree(x) > g.degree(center)) center = x;
  if (g.degree(center) != v - 1) throw NotAStar();
  return center;
}

inline std::size_t star_dimension(const SignedGraph& g) {
  star_center(g);
  const std::size_t n = g.vertex_count() - 1;
  if (n <= 2) return 1;
  return g.is_homogeneous() ? n - 1 : n - 2;
}

// ---- wheels -----------------------------------------------------------------

struct WheelLayout {
  Vertex center;
  std::vector<Vertex> rim;  // cyclic order, starting at the smallest rim vertex
};

// Recognizes W_n, n >= 4 (W_3 = K_4 has no distinguished center).
inline WheelLayout wheel_layout(const SignedGraph& g) {
  const std::size_t v = g.vertex_count();
  if (v < 5 || g.edge_count() != 2 * (v - 1)) throw NotAWheel();
  std::optional<Vertex> center;
  for (Vertex x = 0; x < v; ++x) {
    if (g.degree(x) == v - 1) {
      if (center) throw NotAWheel();
      center = x;
    } else if (g.degree(x) != 3) {
      throw NotAWheel();
    }
  }
  if (!center) throw NotAWheel();
  WheelLayout layout{*center, {}};
  Vertex start = (*center == 0) ? 1 : 0;
  Vertex prev = *center;
  Vertex cur = start;
  do {
    layout.rim.push_back(cur);
    Vertex next = cur;
    for (const auto& nb : g.neighbors(cur)) {
      if (nb.vertex != *center && nb.vertex != prev) {
        next = nb.vertex;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start && layout.rim.size() <= v);
  if (layout.rim.size() != v - 1) throw NotAWheel();
  return layout;
}

struct WheelCompatibility {
  bool compatible = true;
  std::optional<std::array<Vertex, 4>> witness;  // (center, a, b, c) with ab, bc rim edges
};

// Compatible iff no negative 4-cycle through the center built from two
// consecutive rim edges.
inline WheelCompatibility wheel_compatible_predicate(const SignedGraph& g) {
  const auto layout = wheel_layout(g);
  const auto& rim = layout.rim;
  const std::size_t n = rim.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::array<Vertex, 4> c{layout.center, rim[i], rim[(i + 1) % n], rim[(i + 2) % n]};
    if (cycle_sign(g, std::span<const Vertex>(c)) == Sign::negative) return {false, c};
  }
  return {};
}

inline std::size_t unsigned_wheel_dimension(std::size_t n) {
  if (n < 3) throw BadSize("wheel needs n >= 3");
  if (n == 4 || n == 5) return 2;
  if (n == 3 || n == 6) return 3;
  return (2 * n + 2) / 5;
}

// ---- complete graphs --------------------------------------------------------

struct DimensionBounds {
  std::size_t lo;
  std::size_t hi;

  bool contains(std::size_t d) const noexcept { return lo <= d && d <= hi; }
  friend bool operator==(const DimensionBounds&, const DimensionBounds&) = default;
};

inline DimensionBounds complete_dimension_bounds(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n * (n - 1) / 2) throw NotComplete();
  if (g.is_homogeneous()) return {n - 1, n - 1};
  if (n == 3) return {1, 2};
  return {2, n - 1};
}

}  // namespace smd
