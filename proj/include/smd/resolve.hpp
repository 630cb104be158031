#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smd/distance.hpp"
#include "smd/error.hpp"
#include "smd/signed_graph.hpp"

namespace smd {

inline constexpr std::size_t default_size_cap = 16;

struct SolverOptions {
  std::size_t cap = default_size_cap;
};

struct MetricRepresentation {
  Vertex vertex;
  std::vector<Vertex> landmarks;
  std::vector<long> coords;

  friend bool operator==(const MetricRepresentation&, const MetricRepresentation&) = default;
};

struct ResolvingCheck {
  bool resolving;
  std::optional<std::pair<Vertex, Vertex>> collision;  // smallest (u, v), u < v
};

struct ResolutionResult {
  std::size_t dimension;
  std::vector<Vertex> basis;
  std::vector<MetricRepresentation> representations;
  std::size_t dim_underlying;
  std::size_t mdd;
};

namespace detail {

// d_Sigma(u, v) for every pair of a compatible graph.
class SignedDistanceTable {
 public:
  explicit SignedDistanceTable(const SignedDistanceMatrix& dm) : n_(dm.vertex_count()), d_(n_ * n_) {
    if (auto w = dm.first_incompatible()) throw IncompatibleGraph(w->first, w->second);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) d_[u * n_ + v] = dm.at(u, v).d_max();
  }

  std::size_t vertex_count() const noexcept { return n_; }
  long operator()(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<long> d_;
};

// Refines the vertex partition one landmark at a time; stops as soon as every
// class is a singleton.
class Resolver {
 public:
  explicit Resolver(const SignedDistanceTable& table)
      : table_(table), label_(table.vertex_count()), key_(table.vertex_count()),
        order_(table.vertex_count()) {}

  bool resolves(std::span<const Vertex> landmarks) {
    const std::size_t n = table_.vertex_count();
    if (n <= 1) return true;
    std::fill(label_.begin(), label_.end(), 0);
    const long offset = static_cast<long>(n);
    const std::size_t radix = 2 * n + 1;
    for (Vertex w : landmarks) {
      for (Vertex v = 0; v < n; ++v)
        key_[v] = label_[v] * radix + static_cast<std::size_t>(table_(v, w) + offset);
      std::iota(order_.begin(), order_.end(), Vertex{0});
      std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return key_[a] < key_[b]; });
      std::size_t classes = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && key_[order_[i]] != key_[order_[i - 1]]) ++classes;
        label_[order_[i]] = classes;
      }
      if (classes + 1 == n) return true;
    }
    return false;
  }

 private:
  const SignedDistanceTable& table_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> key_;
  std::vector<Vertex> order_;
};

// Calls visit(subset) for each k-subset of 0..n-1 in lexicographic order
// until visit returns false.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    if (!visit(std::span<const Vertex>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_landmarks(std::size_t n, std::span<const Vertex> landmarks) {
  if (landmarks.empty()) throw EmptyLandmarks();
  std::vector<Vertex> sorted(landmarks.begin(), landmarks.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= n) throw VertexOutOfRange(sorted[i], n);
    if (i > 0 && sorted[i] == sorted[i - 1]) throw DuplicateLandmark(sorted[i]);
  }
}

inline void check_solvable(const SignedGraph& g, const SignedDistanceMatrix& dm, const SolverOptions& opts) {
  if (auto w = dm.first_incompatible()) throw IncompatibleGraph(w->first, w->second);
  if (g.vertex_count() > opts.cap) throw SizeCapExceeded(g.vertex_count(), opts.cap);
  if (g.vertex_count() < 2) throw BadSize("metric dimension needs at least two vertices");
}

// Lexicographically first resolving subset of minimum size.
inline std::vector<Vertex> canonical_basis(const SignedDistanceTable& table) {
  const std::size_t n = table.vertex_count();
  Resolver resolver(table);
  for (std::size_t k = 1; k < n; ++k) {
    std::optional<std::vector<Vertex>> found;
    for_each_subset(n, k, [&](std::span<const Vertex> w) {
      if (!resolver.resolves(w)) return true;
      found.emplace(w.begin(), w.end());
      return false;
    });
    if (found) return *found;
  }
  // V minus one vertex always resolves, so only n <= 1 reaches here.
  return {};
}

}  // namespace detail

inline MetricRepresentation representation(const SignedDistanceMatrix& dm, Vertex v,
                                           std::span<const Vertex> landmarks) {
  if (auto w = dm.first_incompatible()) throw IncompatibleGraph(w->first, w->second);
  detail::check_landmarks(dm.vertex_count(), landmarks);
  if (v >= dm.vertex_count()) throw VertexOutOfRange(v, dm.vertex_count());
  MetricRepresentation r{v, {landmarks.begin(), landmarks.end()}, {}};
  r.coords.reserve(landmarks.size());
  for (Vertex w : landmarks) r.coords.push_back(dm.at(v, w).d_max());
  return r;
}

inline ResolvingCheck is_resolving(const SignedDistanceMatrix& dm, std::span<const Vertex> landmarks) {
  if (auto w = dm.first_incompatible()) throw IncompatibleGraph(w->first, w->second);
  detail::check_landmarks(dm.vertex_count(), landmarks);
  const std::size_t n = dm.vertex_count();
  std::vector<std::vector<long>> reps(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : landmarks) reps[v].push_back(dm.at(v, w).d_max());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (reps[u] == reps[v]) return {false, std::pair(u, v)};
  return {true, std::nullopt};
}

inline ResolvingCheck is_resolving(const SignedDistanceMatrix& dm, std::initializer_list<Vertex> landmarks) {
  return is_resolving(dm, std::span<const Vertex>(landmarks.begin(), landmarks.size()));
}

// Exact metric dimension by increasing subset size; the basis is the
// lexicographically first resolving subset. dim(G) is the same search on the
// all-positive copy.
inline ResolutionResult metric_dimension(const SignedGraph& g, const SolverOptions& opts = {}) {
  const auto dm = signed_distances(g);
  detail::check_solvable(g, dm, opts);
  const detail::SignedDistanceTable table(dm);
  ResolutionResult out;
  out.basis = detail::canonical_basis(table);
  out.dimension = out.basis.size();
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.representations.push_back(representation(dm, v, out.basis));

  const auto positive = g.with_uniform_sign(Sign::positive);
  const detail::SignedDistanceTable unsigned_table(signed_distances(positive));
  out.dim_underlying = detail::canonical_basis(unsigned_table).size();
  out.mdd = out.dim_underlying - out.dimension;
  return out;
}

// Every resolving k-subset, lexicographic. For k = dim these are the bases.
inline std::vector<std::vector<Vertex>> all_bases(const SignedGraph& g, std::size_t k,
                                                  const SolverOptions& opts = {}) {
  const auto dm = signed_distances(g);
  detail::check_solvable(g, dm, opts);
  if (k > g.vertex_count()) throw BadSize("k exceeds the vertex count");
  const detail::SignedDistanceTable table(dm);
  detail::Resolver resolver(table);
  std::vector<std::vector<Vertex>> out;
  detail::for_each_subset(g.vertex_count(), k, [&](std::span<const Vertex> w) {
    if (resolver.resolves(w)) out.emplace_back(w.begin(), w.end());
    return true;
  });
  return out;
}

}  // namespace smd
