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
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "sido/graph.hpp"
#include "sido/validation.hpp"

namespace sido {

/// A family of bags over the ground set 0..ground_size-1 and a tree whose
/// nodes are the bag indices. The family may repeat a bag under two indices.
/// Nothing is checked on construction; see validate_markov_tree.
struct MarkovTree {
  int ground_size = 0;
  std::vector<VertexSet> bags;
  std::vector<Edge> tree;

  int num_bags() const noexcept { return static_cast<int>(bags.size()); }

  friend bool operator==(const MarkovTree&, const MarkovTree&) = default;
};

namespace detail {

/// Sorted adjacency lists of the bag tree. Assumes edges are in range.
inline std::vector<std::vector<int>> tree_adjacency(const MarkovTree& m) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m.num_bags()));
  for (auto [a, b] : m.tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

/// Reports problems with the tree itself; returns true if it is a tree.
inline bool check_tree_shape(const MarkovTree& m, ValidationReport& report) {
  const int nb = m.num_bags();
  bool ok = true;
  for (auto [a, b] : m.tree) {
    if (a < 0 || b < 0 || a >= nb || b >= nb) {
      report.add("malformed_tree", {{"reason", "edge endpoint out of range"}, {"edge", {a, b}}});
      ok = false;
    } else if (a == b) {
      report.add("malformed_tree", {{"reason", "self-loop"}, {"edge", {a, b}}});
      ok = false;
    }
  }
  if (!ok) return false;
  if (nb == 0) {
    report.add("malformed_tree", {{"reason", "no bags"}});
    return false;
  }
  DisjointSets ds(nb);
  for (auto [a, b] : m.tree) {
    if (!ds.join(a, b)) {
      report.add("malformed_tree", {{"reason", "cycle"}, {"edge", {a, b}}});
      ok = false;
    }
  }
  for (int i = 1; i < nb; ++i) {
    if (ds.find(i) != ds.find(0)) {
      report.add("malformed_tree", {{"reason", "disconnected"}, {"bag", i}});
      ok = false;
      break;
    }
  }
  return ok;
}

/// Bags on the tree path from `from` to `to`, both ends included.
inline std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (int y : adj[x]) {
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Checks that the bags cover the ground set and that every bag on the tree
/// path between A and B contains A∩B.
inline ValidationReport validate_markov_tree(const MarkovTree& m) {
  ValidationReport report;
  if (m.ground_size < 0) report.add("bad_ground_size", {{"ground_size", m.ground_size}});
  for (int i = 0; i < m.num_bags(); ++i) {
    for (Vertex v : m.bags[i]) {
      if (v >= m.ground_size) report.add("bag_out_of_range", {{"bag", i}, {"element", v}});
    }
  }
  const bool tree_ok = detail::check_tree_shape(m, report);

  std::vector<bool> covered(static_cast<std::size_t>(std::max(m.ground_size, 0)), false);
  for (const auto& bag : m.bags)
    for (Vertex v : bag)
      if (v < m.ground_size) covered[v] = true;
  for (int v = 0; v < m.ground_size; ++v) {
    if (!covered[v]) report.add("uncovered_element", {{"element", v}});
  }

  if (!tree_ok) return report;
  auto adj = detail::tree_adjacency(m);
  for (int a = 0; a < m.num_bags(); ++a) {
    for (int b = a + 1; b < m.num_bags(); ++b) {
      VertexSet shared = intersect(m.bags[a], m.bags[b]);
      if (shared.empty()) continue;
      auto path = detail::tree_path(adj, a, b);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        int c = path[i];
        if (!shared.is_subset_of(m.bags[c])) {
          std::vector<int> missing;
          std::set_difference(shared.begin(), shared.end(), m.bags[c].begin(), m.bags[c].end(),
                              std::back_inserter(missing));
          report.add("running_intersection", {{"a", a}, {"b", b}, {"c", c}, {"missing", missing}});
        }
      }
    }
  }
  return report;
}

/// True if `family` is nonempty and its bags induce a connected subgraph of
/// the tree.
inline bool induces_subtree(const MarkovTree& m, const BagSubfamily& family) {
  if (family.empty()) return false;
  for (int b : family)
    if (b >= m.num_bags()) return false;
  auto adj = detail::tree_adjacency(m);
  std::vector<bool> seen(static_cast<std::size_t>(m.num_bags()), false);
  std::deque<int> queue{family[0]};
  seen[family[0]] = true;
  std::size_t reached = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    ++reached;
    for (int y : adj[x]) {
      if (!seen[y] && family.contains(y)) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return reached == family.size();
}

/// 𝓕(v): the bags containing v.
inline BagSubfamily bags_containing(const MarkovTree& m, Vertex v) {
  if (v < 0 || v >= m.ground_size) {
    throw InvalidArgument("bags_containing: element " + std::to_string(v) + " out of range");
  }
  std::vector<int> out;
  for (int i = 0; i < m.num_bags(); ++i)
    if (m.bags[i].contains(v)) out.push_back(i);
  return BagSubfamily(std::move(out));
}

/// ⋂ over u of 𝓕(u).
inline BagSubfamily common_bags(const MarkovTree& m, const VertexSet& u) {
  BagSubfamily common = BagSubfamily::range(m.num_bags());
  for (Vertex v : u) common = intersect(common, bags_containing(m, v));
  return common;
}

/// Lowest-index bag shared by all families if they pairwise intersect,
/// nullopt if some pair is disjoint. Every family must induce a subtree.
inline std::optional<int> helly_intersection(const MarkovTree& m, const std::vector<BagSubfamily>& families) {
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (!induces_subtree(m, families[i])) {
      throw InvalidArgument("helly_intersection: family " + std::to_string(i) + " does not induce a subtree");
    }
  }
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j)
      if (intersect(families[i], families[j]).empty()) return std::nullopt;
  BagSubfamily common = BagSubfamily::range(m.num_bags());
  for (const auto& f : families) common = intersect(common, f);
  if (common.empty()) {
    throw std::logic_error("helly_intersection: pairwise-intersecting subtrees with empty intersection");
  }
  return common[0];
}

/// Vertices of the shortest tree path from a bag of `from` to a bag of `to`,
/// ties broken toward lower bag indices. Both families must be nonempty.
inline BagSubfamily shortest_path_between(const MarkovTree& m, const BagSubfamily& from, const BagSubfamily& to) {
  if (from.empty() || to.empty()) throw InvalidArgument("shortest_path_between: empty family");
  auto adj = detail::tree_adjacency(m);
  std::vector<int> parent(static_cast<std::size_t>(m.num_bags()), -1);
  std::vector<int> layer;
  for (int b : from) {
    parent[b] = b;
    layer.push_back(b);
  }
  while (!layer.empty()) {
    std::optional<int> hit;
    for (int x : layer)
      if (to.contains(x) && (!hit || x < *hit)) hit = x;
    if (hit) {
      std::vector<int> path;
      int x = *hit;
      while (parent[x] != x) {
        path.push_back(x);
        x = parent[x];
      }
      path.push_back(x);
      return BagSubfamily(std::move(path));
    }
    std::vector<int> next;
    for (int x : layer) {
      for (int y : adj[x]) {
        if (parent[y] < 0) {
          parent[y] = x;
          next.push_back(y);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  throw InvalidArgument("shortest_path_between: families lie in different components");
}

/// The Markov subtree on `keep`, relabeled: bag i of the result is bag
/// `bag_map[i]` of m and ground element j is `vertices[j]` of m's ground set.
struct MarkovSubtree {
  MarkovTree tree;
  VertexSet vertices;
  BagSubfamily bag_map;
};

inline MarkovSubtree markov_subtree(const MarkovTree& m, const BagSubfamily& keep) {
  if (!induces_subtree(m, keep)) throw InvalidArgument("markov_subtree: bags do not induce a subtree");
  VertexSet support;
  for (int b : keep) support = unite(support, m.bags[b]);
  MarkovSubtree out{{static_cast<int>(support.size()), {}, {}}, support, keep};
  for (int b : keep) {
    std::vector<int> relabeled;
    for (Vertex v : m.bags[b]) relabeled.push_back(support.index_of(v));
    out.tree.bags.emplace_back(std::move(relabeled));
  }
  for (auto [a, b] : m.tree) {
    if (keep.contains(a) && keep.contains(b)) out.tree.tree.emplace_back(keep.index_of(a), keep.index_of(b));
  }
  return out;
}

}  // namespace sido
