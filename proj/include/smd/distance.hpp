#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "smd/error.hpp"
#include "smd/sign.hpp"
#include "smd/signed_graph.hpp"

namespace smd {

// sigma_max is +1 iff some shortest path is positive; sigma_min is -1 iff
// some shortest path is negative. On the diagonal both are +1.
struct PairDistance {
  std::size_t d = 0;
  Sign sigma_max = Sign::positive;
  Sign sigma_min = Sign::positive;

  bool compatible() const noexcept { return sigma_max == sigma_min; }
  long d_max() const noexcept { return to_int(sigma_max) * static_cast<long>(d); }
  long d_min() const noexcept { return to_int(sigma_min) * static_cast<long>(d); }

  friend bool operator==(const PairDistance&, const PairDistance&) = default;
};

class SignedDistanceMatrix {
 public:
  explicit SignedDistanceMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t vertex_count() const noexcept { return n_; }

  const PairDistance& at(Vertex u, Vertex v) const {
    if (u >= n_) throw VertexOutOfRange(u, n_);
    if (v >= n_) throw VertexOutOfRange(v, n_);
    return entries_[u * n_ + v];
  }

  PairDistance& mutable_at(Vertex u, Vertex v) { return entries_[u * n_ + v]; }

  std::size_t eccentricity(Vertex v) const {
    std::size_t e = 0;
    for (Vertex w = 0; w < n_; ++w) e = std::max(e, at(v, w).d);
    return e;
  }

  // First incompatible pair in lexicographic (u < v) order.
  std::optional<std::pair<Vertex, Vertex>> first_incompatible() const {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (!entries_[u * n_ + v].compatible()) return std::pair(u, v);
    return std::nullopt;
  }

  friend bool operator==(const SignedDistanceMatrix&, const SignedDistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<PairDistance> entries_;
};

// Per source: BFS levels, then propagate "a shortest path of this sign reaches w"
// over the shortest-path DAG in BFS order. A negative edge swaps the two flags.
inline SignedDistanceMatrix signed_distances(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  SignedDistanceMatrix dm(n);
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n);
  std::vector<Vertex> order;
  std::vector<char> reach_pos(n), reach_neg(n);
  order.reserve(n);
  for (Vertex src = 0; src < n; ++src) {
    std::fill(level.begin(), level.end(), unseen);
    std::fill(reach_pos.begin(), reach_pos.end(), 0);
    std::fill(reach_neg.begin(), reach_neg.end(), 0);
    order.clear();
    level[src] = 0;
    reach_pos[src] = 1;
    order.push_back(src);
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex x = order[head];
      for (const auto& nb : g.neighbors(x)) {
        if (level[nb.vertex] == unseen) {
          level[nb.vertex] = level[x] + 1;
          order.push_back(nb.vertex);
        }
      }
    }
    for (std::size_t i = 1; i < order.size(); ++i) {
      Vertex w = order[i];
      for (const auto& nb : g.neighbors(w)) {
        if (level[nb.vertex] + 1 != level[w]) continue;
        if (nb.sign == Sign::positive) {
          reach_pos[w] |= reach_pos[nb.vertex];
          reach_neg[w] |= reach_neg[nb.vertex];
        } else {
          reach_pos[w] |= reach_neg[nb.vertex];
          reach_neg[w] |= reach_pos[nb.vertex];
        }
      }
    }
    for (Vertex w = 0; w < n; ++w) {
      auto& e = dm.mutable_at(src, w);
      e.d = level[w];
      e.sigma_max = reach_pos[w] ? Sign::positive : Sign::negative;
      e.sigma_min = reach_neg[w] ? Sign::negative : Sign::positive;
    }
  }
  return dm;
}

struct ShortestPath {
  std::vector<Vertex> vertices;  // u first, v last
  Sign sign;
};

inline constexpr std::size_t enumeration_vertex_limit = 12;

// Every shortest u-v path with its sign. Exponential; test oracle only.
inline std::vector<ShortestPath> enumerate_shortest_paths(const SignedGraph& g, Vertex u, Vertex v) {
  const std::size_t n = g.vertex_count();
  if (n > enumeration_vertex_limit)
    throw TooLarge("path enumeration is limited to " + std::to_string(enumeration_vertex_limit) +
                   " vertices");
  g.check_vertex(u);
  g.check_vertex(v);
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> to_v(n, unseen);
  std::queue<Vertex> queue;
  to_v[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (const auto& nb : g.neighbors(x)) {
      if (to_v[nb.vertex] == unseen) {
        to_v[nb.vertex] = to_v[x] + 1;
        queue.push(nb.vertex);
      }
    }
  }
  std::vector<ShortestPath> out;
  std::vector<Vertex> path{u};
  auto walk = [&](auto&& self, Vertex x, Sign s) -> void {
    if (x == v) {
      out.push_back({path, s});
      return;
    }
    for (const auto& nb : g.neighbors(x)) {
      if (to_v[nb.vertex] + 1 != to_v[x]) continue;
      path.push_back(nb.vertex);
      self(self, nb.vertex, s * nb.sign);
      path.pop_back();
    }
  };
  walk(walk, u, Sign::positive);
  return out;
}

struct CompatibilityReport {
  bool compatible = true;
  std::optional<std::pair<Vertex, Vertex>> witness;
};

inline CompatibilityReport compatibility(const SignedDistanceMatrix& dm) {
  auto w = dm.first_incompatible();
  return {!w.has_value(), w};
}

inline CompatibilityReport compatibility(const SignedGraph& g) {
  return compatibility(signed_distances(g));
}

// N_k(v): vertices at hop distance exactly k (|signed distance| = k).
inline std::vector<Vertex> k_neighborhood(const SignedDistanceMatrix& dm, Vertex v, std::size_t k) {
  if (v >= dm.vertex_count()) throw VertexOutOfRange(v, dm.vertex_count());
  if (k == 0) throw BadSize("k-neighborhood needs k >= 1");
  std::vector<Vertex> out;
  for (Vertex u = 0; u < dm.vertex_count(); ++u)
    if (dm.at(v, u).d == k) out.push_back(u);
  return out;
}

}  // namespace smd
