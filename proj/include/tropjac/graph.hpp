#pragma once

// Metric graphs, spanning trees, fundamental circuits and the edge-subset
// combinatorics behind the cells of W_d.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropjac/error.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

struct Edge {
  std::string id;
  std::size_t src = 0;
  std::size_t dst = 0;
  Rational length;

  bool is_loop() const noexcept { return src == dst; }
};

/// A finite multigraph with positive rational edge lengths. Vertices and edges are
/// referred to by position; the string ids are kept for reporting.
struct MetricGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::size_t basepoint = 0;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }

  std::optional<std::size_t> find_vertex(const std::string& id) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v] == id) return v;
    return std::nullopt;
  }
  std::optional<std::size_t> find_edge(const std::string& id) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].id == id) return e;
    return std::nullopt;
  }

  std::vector<std::size_t> valences() const {
    std::vector<std::size_t> val(vertices.size(), 0);
    for (const auto& e : edges) {
      ++val[e.src];
      ++val[e.dst];
    }
    return val;
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t component_count(std::size_t vertex_count, const std::vector<Edge>& edges,
                                   const std::vector<bool>* removed = nullptr) {
  DisjointSets sets(vertex_count);
  std::size_t components = vertex_count;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (removed && (*removed)[e]) continue;
    if (sets.unite(edges[e].src, edges[e].dst)) --components;
  }
  return components;
}

}  // namespace detail

/// First Betti number |E| - |V| + 1 of a connected graph.
inline std::size_t genus(const MetricGraph& g) {
  return g.edge_count() + 1 - g.vertex_count();
}

/// Checks lengths and connectivity, then deletes valence-1 vertices (with their
/// edges) until none are left. The genus is unchanged.
inline MetricGraph validate_and_prune(const MetricGraph& raw) {
  if (raw.vertices.empty()) throw Error(ErrorCode::EmptyAfterPruning, "graph has no vertices");
  for (const auto& e : raw.edges) {
    if (e.src >= raw.vertex_count() || e.dst >= raw.vertex_count())
      throw Error(ErrorCode::InvalidInput, "edge '" + e.id + "' references a missing vertex");
    if (e.length <= 0)
      throw Error(ErrorCode::NonPositiveLength,
                  "edge '" + e.id + "' has length " + to_string(e.length));
  }
  if (raw.basepoint >= raw.vertex_count())
    throw Error(ErrorCode::InvalidInput, "basepoint out of range");
  if (detail::component_count(raw.vertex_count(), raw.edges) != 1)
    throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");

  std::vector<bool> vertex_alive(raw.vertex_count(), true);
  std::vector<bool> edge_alive(raw.edge_count(), true);
  auto valence = raw.valences();
  std::size_t basepoint = raw.basepoint;

  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < valence.size(); ++v)
    if (valence[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const std::size_t leaf = leaves.back();
    leaves.pop_back();
    if (!vertex_alive[leaf] || valence[leaf] != 1) continue;
    for (std::size_t e = 0; e < raw.edge_count(); ++e) {
      if (!edge_alive[e]) continue;
      const auto& edge = raw.edges[e];
      if (edge.src != leaf && edge.dst != leaf) continue;
      const std::size_t other = edge.src == leaf ? edge.dst : edge.src;
      edge_alive[e] = false;
      vertex_alive[leaf] = false;
      valence[leaf] = 0;
      if (basepoint == leaf) basepoint = other;
      if (--valence[other] == 1) leaves.push_back(other);
      break;
    }
  }

  MetricGraph out;
  std::vector<std::size_t> remap(raw.vertex_count(), 0);
  for (std::size_t v = 0; v < raw.vertex_count(); ++v) {
    if (!vertex_alive[v]) continue;
    remap[v] = out.vertices.size();
    out.vertices.push_back(raw.vertices[v]);
  }
  for (std::size_t e = 0; e < raw.edge_count(); ++e) {
    if (!edge_alive[e]) continue;
    Edge edge = raw.edges[e];
    edge.src = remap[edge.src];
    edge.dst = remap[edge.dst];
    out.edges.push_back(std::move(edge));
  }
  if (out.edges.empty())
    throw Error(ErrorCode::EmptyAfterPruning, "graph is a tree; nothing remains after pruning");
  out.basepoint = remap[basepoint];
  return out;
}

/// Spanning tree, ordered cotree edges e_1..e_g and their fundamental circuits.
/// circuits[k][e] is the signed number of times c_k traverses edge e.
struct CircuitBasis {
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> cotree_edges;
  std::vector<std::vector<int>> circuits;

  std::size_t genus() const noexcept { return cotree_edges.size(); }
};

/// Deterministic for seed 0: the tree is grown by Kruskal over edges in descending
/// (length, position) order, so the cotree is the lexicographically smallest
/// complement. A nonzero seed replaces that order by a seeded shuffle.
/// Cotree edges keep their input orientation and appear in input order; c_k runs
/// along e_k and returns from dst to src through the tree.
inline CircuitBasis circuit_basis(const MetricGraph& g, std::uint64_t seed = 0) {
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (seed == 0) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (g.edges[a].length != g.edges[b].length) return g.edges[a].length > g.edges[b].length;
      return a > b;
    });
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  }

  std::vector<bool> in_tree(m, false);
  detail::DisjointSets sets(g.vertex_count());
  for (std::size_t e : order)
    if (sets.unite(g.edges[e].src, g.edges[e].dst)) in_tree[e] = true;

  CircuitBasis basis;
  for (std::size_t e = 0; e < m; ++e) (in_tree[e] ? basis.tree_edges : basis.cotree_edges).push_back(e);

  // tree adjacency: vertex -> (edge, neighbour)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count());
  for (std::size_t e : basis.tree_edges) {
    adj[g.edges[e].src].emplace_back(e, g.edges[e].dst);
    adj[g.edges[e].dst].emplace_back(e, g.edges[e].src);
  }

  for (std::size_t e : basis.cotree_edges) {
    std::vector<int> circuit(m, 0);
    circuit[e] = 1;
    const std::size_t from = g.edges[e].dst;
    const std::size_t to = g.edges[e].src;
    if (from != to) {
      // BFS rooted at `from`, then walk back from `to`.
      constexpr std::size_t none = static_cast<std::size_t>(-1);
      std::vector<std::size_t> parent_edge(g.vertex_count(), none);
      std::vector<std::size_t> parent(g.vertex_count(), none);
      std::vector<bool> seen(g.vertex_count(), false);
      std::queue<std::size_t> queue;
      queue.push(from);
      seen[from] = true;
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop();
        for (auto [edge, w] : adj[v]) {
          if (seen[w]) continue;
          seen[w] = true;
          parent[w] = v;
          parent_edge[w] = edge;
          queue.push(w);
        }
      }
      for (std::size_t v = to; v != from; v = parent[v]) {
        const auto& edge = g.edges[parent_edge[v]];
        // traversed parent[v] -> v
        circuit[parent_edge[v]] = (edge.src == parent[v] && edge.dst == v) ? 1 : -1;
      }
    }
    basis.circuits.push_back(std::move(circuit));
  }
  return basis;
}

/// True iff deleting the open edges in `removed` (vertices stay) leaves a connected space.
inline bool is_complement_connected(const MetricGraph& g, const std::vector<std::size_t>& removed) {
  std::vector<bool> mask(g.edge_count(), false);
  for (std::size_t e : removed) {
    if (e >= g.edge_count()) throw Error(ErrorCode::InvalidInput, "edge index out of range");
    mask[e] = true;
  }
  return detail::component_count(g.vertex_count(), g.edges, &mask) == 1;
}

/// All d-subsets of edges whose removal keeps the graph connected, in lexicographic
/// order of edge positions.
inline std::vector<std::vector<std::size_t>> wd_cell_subsets(const MetricGraph& g, std::size_t d) {
  const std::size_t gen = genus(g);
  if (d > gen)
    throw Error(ErrorCode::DOutOfRange,
                "d = " + std::to_string(d) + " exceeds genus " + std::to_string(gen));
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> subset(d);
  std::iota(subset.begin(), subset.end(), 0);
  const std::size_t m = g.edge_count();
  if (d > m) return out;
  while (true) {
    if (is_complement_connected(g, subset)) out.push_back(subset);
    // next combination
    std::size_t i = d;
    while (i > 0 && subset[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

}  // namespace tropjac
