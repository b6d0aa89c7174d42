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

#include <random>
#include <vector>

#include "sido/distribution.hpp"
#include "sido/graph.hpp"
#include "sido/markov_tree.hpp"
#include "sido/tree_decomposition.hpp"

// Seeded generators for property sweeps. Everything is driven by a caller's
// std::mt19937, so a seed reproduces an instance exactly.

namespace sido::random {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random labelled tree on n nodes: node i > 0 hangs off a uniform earlier node.
inline std::vector<Edge> tree_edges(int n, std::mt19937& rng) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(uniform(rng, 0, i - 1), i);
  return edges;
}

/// Random connected set of tree nodes grown from a uniform start.
inline BagSubfamily random_subtree(const MarkovTree& m, std::mt19937& rng, int max_size) {
  auto adj = detail::tree_adjacency(m);
  std::vector<int> nodes{uniform(rng, 0, m.num_bags() - 1)};
  int target = uniform(rng, 1, max_size);
  while (static_cast<int>(nodes.size()) < target) {
    std::vector<int> frontier;
    for (int x : nodes)
      for (int y : adj[x])
        if (std::find(nodes.begin(), nodes.end(), y) == nodes.end()) frontier.push_back(y);
    if (frontier.empty()) break;
    nodes.push_back(frontier[uniform(rng, 0, static_cast<int>(frontier.size()) - 1)]);
  }
  return BagSubfamily(std::move(nodes));
}

/// Valid Markov tree: every ground element is placed on a random subtree of
/// a random bag tree, which is exactly the running-intersection condition.
inline MarkovTree markov_tree(int num_bags, int ground_size, std::mt19937& rng, int max_spread = 3) {
  MarkovTree m;
  m.ground_size = ground_size;
  m.tree = tree_edges(num_bags, rng);
  std::vector<std::vector<int>> bags(static_cast<std::size_t>(num_bags));
  m.bags.assign(static_cast<std::size_t>(num_bags), VertexSet{});
  for (int v = 0; v < ground_size; ++v)
    for (int b : random_subtree(m, rng, max_spread)) bags[b].push_back(v);
  for (int b = 0; b < num_bags; ++b) m.bags[b] = VertexSet(std::move(bags[b]));
  return m;
}

/// Random distribution over all assignments of index_set; weights in
/// [0, max_weight] so some atoms vanish.
inline SparseDistribution joint(const VertexSet& index_set, int target_size, std::mt19937& rng, int max_weight = 3) {
  SparseDistribution::Masses weights;
  Assignment key(index_set.size(), 0);
  bool any = false;
  while (true) {
    int w = uniform(rng, 0, max_weight);
    if (w > 0) {
      weights[key] = w;
      any = true;
    }
    std::size_t i = 0;
    while (i < key.size() && ++key[i] == target_size) key[i++] = 0;
    if (i == key.size()) break;
  }
  if (!any) weights[Assignment(index_set.size(), 0)] = 1;
  return SparseDistribution::from_weights(index_set, target_size, weights);
}

/// Bag marginals of a random joint: consistent across every tree edge.
inline std::vector<SparseDistribution> consistent_bag_dists(const MarkovTree& m, int target_size, std::mt19937& rng) {
  SparseDistribution p = joint(VertexSet::range(m.ground_size), target_size, rng);
  std::vector<SparseDistribution> out;
  for (const auto& bag : m.bags) out.push_back(marginal(p, bag));
  return out;
}

/// Random Markov tree plus a host graph whose edges each lie inside some bag.
inline TreeDecomposition tree_decomposition(int num_bags, int num_vertices, std::mt19937& rng) {
  MarkovTree m = markov_tree(num_bags, num_vertices, rng);
  std::vector<Edge> edges;
  for (int u = 0; u < num_vertices; ++u) {
    for (int v = u + 1; v < num_vertices; ++v) {
      bool together = std::any_of(m.bags.begin(), m.bags.end(),
                                  [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
      if (together && uniform(rng, 0, 1) == 1) edges.emplace_back(u, v);
    }
  }
  return {Graph(num_vertices, std::move(edges)), std::move(m)};
}

}  // namespace sido::random
