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
#include <numeric>
#include <set>
#include <vector>

#include "sido/graph.hpp"

namespace sido {

/// Lexicographically smallest relabeled edge list over all n! relabelings.
/// Only meant for the handful of vertices the sweeps use.
inline std::vector<Edge> canonical_edges(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> relabeled;
    for (auto [u, v] : g.edges()) {
      int a = perm[u], b = perm[v];
      relabeled.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of graphs on exactly n vertices,
/// in canonical form, sorted by (edge count, edges).
inline std::vector<Graph> graphs_up_to_isomorphism(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::pair<std::size_t, std::vector<Edge>>> seen;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1UL) edges.push_back(slots[i]);
    auto canon = canonical_edges(Graph(n, std::move(edges)));
    seen.emplace(canon.size(), std::move(canon));
  }
  std::vector<Graph> out;
  for (const auto& [count, edges] : seen) out.emplace_back(n, edges);
  return out;
}

/// Connected graphs with at least one edge on 2..max_n vertices, up to isomorphism.
inline std::vector<Graph> connected_targets(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for (auto& g : graphs_up_to_isomorphism(n))
      if (g.num_edges() > 0 && is_connected(g)) out.push_back(std::move(g));
  return out;
}

/// All graphs on 1..max_n vertices, up to isomorphism.
inline std::vector<Graph> all_small_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : graphs_up_to_isomorphism(n)) out.push_back(std::move(g));
  return out;
}

/// Forests on 1..max_n vertices, up to isomorphism.
inline std::vector<Graph> small_forests(int max_n) {
  std::vector<Graph> out;
  for (auto& g : all_small_graphs(max_n))
    if (is_forest(g)) out.push_back(std::move(g));
  return out;
}

/// Trees on 1..max_n vertices up to isomorphism, grown leaf by leaf from a
/// single vertex. Cheaper than filtering all graphs once max_n passes 6.
inline std::vector<Graph> trees_up_to_isomorphism(int max_n) {
  std::vector<Graph> out;
  if (max_n < 1) return out;
  std::vector<Graph> layer{Graph(1, {})};
  for (int n = 1; n <= max_n; ++n) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (n == max_n) break;
    std::set<std::vector<Edge>> next;
    for (const auto& t : layer) {
      for (int v = 0; v < n; ++v) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(v, n);
        next.insert(canonical_edges(Graph(n + 1, std::move(edges))));
      }
    }
    layer.clear();
    for (const auto& edges : next) layer.emplace_back(n + 1, edges);
  }
  return out;
}

}  // namespace sido
