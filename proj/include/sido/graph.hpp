// Copyright 2026 The sido Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sido/errors.hpp"

namespace sido {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of indices. The tag keeps vertex sets and bag
/// subfamilies from being mixed up.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> vs) : IndexSet(std::vector<int>(vs)) {}
  explicit IndexSet(std::vector<int> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (!items_.empty() && items_.front() < 0) {
      throw InvalidArgument("IndexSet: negative index");
    }
  }

  static IndexSet range(int n) {
    std::vector<int> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    return IndexSet(std::move(vs));
  }

  const std::vector<int>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  int operator[](std::size_t i) const { return items_[i]; }

  bool contains(int v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }

  /// Position of v in the sorted list, or -1.
  int index_of(int v) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    return (it != items_.end() && *it == v) ? static_cast<int>(it - items_.begin()) : -1;
  }

  bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  friend IndexSet intersect(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
  }

  friend IndexSet unite(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> items_;
};

struct VertexTag {};
struct BagTag {};

/// Sorted set of graph vertices (bags, intersections, the set U).
using VertexSet = IndexSet<VertexTag>;
/// Sorted set of bag indices of a Markov tree.
using BagSubfamily = IndexSet<BagTag>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (min,max)
/// pairs in sorted order, so structurally equal graphs compare equal.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw InvalidArgument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InvalidArgument("Graph: edge endpoint out of range: (" + std::to_string(u) +
                              "," + std::to_string(v) + ")");
      }
      if (u == v) throw InvalidArgument("Graph: self-loop at " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw InvalidArgument("Graph: duplicate edge");
    }
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    neighbors_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
      adjacency_[index(u, v)] = adjacency_[index(v, u)] = 1;
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[index(u, v)] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// H[s] together with the order-preserving relabeling: vertex i of `graph`
/// is vertex `vertices[i]` of the parent.
struct InducedSubgraph {
  Graph graph;
  VertexSet vertices;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      throw InvalidArgument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int iu = s.index_of(u);
    int iv = s.index_of(v);
    if (iu >= 0 && iv >= 0) edges.emplace_back(iu, iv);
  }
  return {Graph(static_cast<int>(s.size()), std::move(edges)), s};
}

/// Number of edges of g with both endpoints in s.
inline int induced_edge_count(const Graph& g, const VertexSet& s) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return s.contains(e.first) && s.contains(e.second);
  }));
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// False if x and y were already joined.
  bool join(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

inline bool is_forest(const Graph& g) {
  detail::DisjointSets ds(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    if (!ds.join(u, v)) return false;
  }
  return true;
}

inline bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  detail::DisjointSets ds(g.num_vertices());
  int components = g.num_vertices();
  for (auto [u, v] : g.edges()) components -= ds.join(u, v) ? 1 : 0;
  return components == 1;
}

/// Connected and acyclic. The empty graph is not a tree.
inline bool is_tree(const Graph& g) {
  return g.num_vertices() > 0 && g.num_edges() == g.num_vertices() - 1 && is_forest(g);
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// Disjoint union; b's vertices are shifted by a.num_vertices().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) {
    edges.emplace_back(u + a.num_vertices(), v + a.num_vertices());
  }
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

// Small named graphs used throughout the tests and fixtures.

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

/// Star with center 0 and leaves 1..leaves.
inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace sido
