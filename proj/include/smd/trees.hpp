#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "smd/distance.hpp"
#include "smd/error.hpp"
#include "smd/families.hpp"
#include "smd/signed_graph.hpp"

namespace smd {

// Structure of a tree that is not a path.
//
// A leaf is a terminal vertex of the major vertex nearest to it; walking from
// a leaf through degree-2 vertices always reaches that major vertex first.
// legs[t][j] lists the vertices of the j-th leg of t excluding t itself, so
// legs[t][j][i - 1] is the vertex at index i (distance i from t). Legs are
// ordered by their terminal leaf.
struct TreeProfile {
  std::vector<Vertex> leaves;
  std::vector<Vertex> major_vertices;
  std::vector<Vertex> exterior_major;
  std::map<Vertex, Vertex> terminal_of;
  std::map<Vertex, std::vector<std::vector<Vertex>>> legs;
  std::size_t lambda = 0;
  std::size_t ext = 0;

  std::size_t ter(Vertex v) const {
    auto it = legs.find(v);
    return it == legs.end() ? 0 : it->second.size();
  }
};

struct SignedTreeProfile {
  TreeProfile base;
  std::vector<Vertex> special;
  bool formula_applicable = true;
};

inline bool is_tree(const SignedGraph& g) { return g.edge_count() + 1 == g.vertex_count(); }

inline bool is_path_graph(const SignedGraph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

inline TreeProfile tree_profile(const SignedGraph& g) {
  if (!is_tree(g)) throw NotATree();
  if (is_path_graph(g)) throw IsAPath();
  TreeProfile p;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) p.leaves.push_back(v);
    if (g.degree(v) >= 3) p.major_vertices.push_back(v);
  }
  for (Vertex leaf : p.leaves) {
    std::vector<Vertex> leg{leaf};
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf).front().vertex;
    while (g.degree(cur) == 2) {
      leg.push_back(cur);
      Vertex next = g.neighbors(cur)[0].vertex == prev ? g.neighbors(cur)[1].vertex : g.neighbors(cur)[0].vertex;
      prev = cur;
      cur = next;
    }
    std::reverse(leg.begin(), leg.end());
    p.terminal_of[leaf] = cur;
    p.legs[cur].push_back(std::move(leg));
  }
  for (const auto& [t, legs] : p.legs) {
    p.exterior_major.push_back(t);
    p.lambda += legs.size();
  }
  p.ext = p.exterior_major.size();
  return p;
}

// dim(T) = lambda(T) - ext(T)
inline std::size_t unsigned_tree_dimension(const TreeProfile& p) { return p.lambda - p.ext; }

// t is special when two of its legs have different signed distances from t
// at every index both legs reach.
inline SignedTreeProfile special_exterior_majors(const SignedGraph& g, const SignedDistanceMatrix& dm,
                                                 const TreeProfile& p) {
  if (!is_tree(g)) throw NotATree();
  SignedTreeProfile out{p, {}, true};
  auto separated = [&](Vertex t, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const std::size_t shared = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < shared; ++i)
      if (dm.at(t, a[i]).d_max() == dm.at(t, b[i]).d_max()) return false;
    return true;
  };
  for (const auto& [t, legs] : p.legs) {
    bool special = false;
    for (std::size_t a = 0; a < legs.size() && !special; ++a)
      for (std::size_t b = a + 1; b < legs.size() && !special; ++b) special = separated(t, legs[a], legs[b]);
    if (special) {
      out.special.push_back(t);
      if (legs.size() == 2) out.formula_applicable = false;
    }
  }
  return out;
}

inline SignedTreeProfile special_exterior_majors(const SignedGraph& g) {
  return special_exterior_majors(g, signed_distances(g), tree_profile(g));
}

// dim(T^sigma) = dim(T) - |eta(T^sigma)| when no special vertex has ter = 2.
// Paths short-circuit to 1.
inline std::size_t signed_tree_dimension(const SignedGraph& g) {
  if (!is_tree(g)) throw NotATree();
  if (is_path_graph(g)) return 1;
  const auto sp = special_exterior_majors(g);
  for (Vertex t : sp.special)
    if (sp.base.ter(t) == 2) throw FormulaNotApplicable(t);
  return unsigned_tree_dimension(sp.base) - sp.special.size();
}

// max(1, dim(T) - ext(T)) <= dim(T^sigma) <= dim(T)
inline DimensionBounds signed_tree_bounds(const SignedGraph& g) {
  if (!is_tree(g)) throw NotATree();
  if (is_path_graph(g)) return {1, 1};
  const auto p = tree_profile(g);
  const std::size_t hi = unsigned_tree_dimension(p);
  const std::size_t lo = hi > p.ext ? hi - p.ext : 0;
  return {std::max<std::size_t>(1, lo), hi};
}

// Uniformly random labeled tree on n vertices via a Pruefer sequence.
inline SignedGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw BadSize("random tree needs n >= 2");
  auto sign = [&] { return (rng() & 1U) ? Sign::negative : Sign::positive; };
  std::vector<SignedEdge> edges;
  if (n == 2) {
    edges.push_back({0, 1, sign()});
    return SignedGraph::build(n, edges);
  }
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = rng() % n;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, c, sign()});
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.push_back({last[0], last[1], sign()});
  return SignedGraph::build(n, edges);
}

// Caterpillar with `spine` vertices 0..spine-1 joined by positive edges; spine
// vertex i carries a positive leaf spine+2i and a negative leaf spine+2i+1.
inline SignedGraph alternating_caterpillar(std::size_t spine) {
  if (spine < 1) throw BadSize("caterpillar needs a spine of at least one vertex");
  std::vector<SignedEdge> edges;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1, Sign::positive});
  for (Vertex i = 0; i < spine; ++i) {
    edges.push_back({i, spine + 2 * i, Sign::positive});
    edges.push_back({i, spine + 2 * i + 1, Sign::negative});
  }
  return SignedGraph::build(3 * spine, edges);
}

}  // namespace smd
