#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "smd/error.hpp"
#include "smd/sign.hpp"

namespace smd {

struct SignedEdge {
  Vertex u;
  Vertex v;
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
  Vertex vertex;
  Sign sign;
};

struct NetDegree {
  Vertex vertex;
  std::size_t d_plus;
  std::size_t d_minus;
  long d_net;
};

// Simple connected graph on vertices 0..n-1 with a +/-1 signature on its edges.
// Immutable once built; every query is a const read.
class SignedGraph {
 public:
  // Validates and normalizes: edges are stored with u < v and sorted.
  static SignedGraph build(std::size_t n, std::span<const SignedEdge> edges) {
    if (n == 0) throw BadSize("a signed graph needs at least one vertex");
    SignedGraph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.u >= n) throw VertexOutOfRange(e.u, n);
      if (e.v >= n) throw VertexOutOfRange(e.v, n);
      if (e.u == e.v) throw SelfLoop(e.u);
      g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const SignedEdge& a, const SignedEdge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
      if (g.edges_[i - 1].u == g.edges_[i].u && g.edges_[i - 1].v == g.edges_[i].v)
        throw DuplicateEdge(g.edges_[i].u, g.edges_[i].v);
    }
    for (const auto& e : g.edges_) {
      g.adj_[e.u].push_back({e.v, e.sign});
      g.adj_[e.v].push_back({e.u, e.sign});
    }
    for (auto& row : g.adj_) {
      std::sort(row.begin(), row.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.adj_[x]) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          stack.push_back(nb.vertex);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v]) throw Disconnected(v);
    return g;
  }

  static SignedGraph build(std::size_t n, std::initializer_list<SignedEdge> edges) {
    return build(n, std::span<const SignedEdge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted by (u, v) with u < v.
  std::span<const SignedEdge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::optional<Sign> edge_sign(Vertex u, Vertex v) const {
    auto row = neighbors(u);
    check_vertex(v);
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& a, Vertex x) { return a.vertex < x; });
    if (it == row.end() || it->vertex != v) return std::nullopt;
    return it->sign;
  }

  bool adjacent(Vertex u, Vertex v) const { return edge_sign(u, v).has_value(); }

  // Same underlying graph, every edge carrying `s`.
  SignedGraph with_uniform_sign(Sign s) const {
    SignedGraph g = *this;
    for (auto& e : g.edges_) e.sign = s;
    for (auto& row : g.adj_)
      for (auto& nb : row) nb.sign = s;
    return g;
  }

  bool is_homogeneous() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(),
                       [&](const SignedEdge& e) { return e.sign == edges_.front().sign; });
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) throw VertexOutOfRange(v, n_);
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  SignedGraph() = default;

  std::size_t n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

inline SignedGraph build(std::size_t n, std::span<const SignedEdge> edges) {
  return SignedGraph::build(n, edges);
}

inline SignedGraph negate(const SignedGraph& g) {
  std::vector<SignedEdge> flipped(g.edges().begin(), g.edges().end());
  for (auto& e : flipped) e.sign = -e.sign;
  return SignedGraph::build(g.vertex_count(), flipped);
}

inline NetDegree net_degree(const SignedGraph& g, Vertex v) {
  NetDegree nd{v, 0, 0, 0};
  for (const auto& nb : g.neighbors(v)) {
    if (nb.sign == Sign::positive)
      ++nd.d_plus;
    else
      ++nd.d_minus;
  }
  nd.d_net = static_cast<long>(nd.d_plus) - static_cast<long>(nd.d_minus);
  return nd;
}

// Product of edge signs around a cycle given as distinct vertices in cyclic
// order. A repeated first vertex at the end is accepted.
inline Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle = cycle.first(cycle.size() - 1);
  if (cycle.size() < 3) throw NotACycle("a cycle needs at least three vertices");
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NotACycle("cycle repeats a vertex");
  Sign s = Sign::positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto e = g.edge_sign(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (!e) throw NotACycle("consecutive vertices are not adjacent");
    s = s * *e;
  }
  return s;
}

inline Sign cycle_sign(const SignedGraph& g, std::initializer_list<Vertex> cycle) {
  return cycle_sign(g, std::span<const Vertex>(cycle.begin(), cycle.size()));
}

// Spanning-tree sign potentials: balanced iff every edge sign equals the
// product of its endpoints' potentials.
inline bool is_balanced(const SignedGraph& g) {
  std::vector<std::optional<Sign>> potential(g.vertex_count());
  potential[0] = Sign::positive;
  std::queue<Vertex> queue;
  queue.push(0);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (const auto& nb : g.neighbors(x)) {
      if (!potential[nb.vertex]) {
        potential[nb.vertex] = *potential[x] * nb.sign;
        queue.push(nb.vertex);
      }
    }
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const SignedEdge& e) {
    return *potential[e.u] * *potential[e.v] == e.sign;
  });
}

}  // namespace smd
