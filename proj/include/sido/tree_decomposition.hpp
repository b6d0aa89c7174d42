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

#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "sido/graph.hpp"
#include "sido/markov_tree.hpp"

namespace sido {

/// A Markov tree over V(host) whose bags also cover every edge of host.
struct TreeDecomposition {
  Graph host;
  MarkovTree markov;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

inline ValidationReport validate_tree_decomposition(const TreeDecomposition& d) {
  ValidationReport report = validate_markov_tree(d.markov);
  if (d.markov.ground_size != d.host.num_vertices()) {
    report.add("ground_size_mismatch",
               {{"ground_size", d.markov.ground_size}, {"host_vertices", d.host.num_vertices()}});
  }
  for (auto [u, v] : d.host.edges()) {
    bool covered = std::any_of(d.markov.bags.begin(), d.markov.bags.end(),
                               [&](const VertexSet& bag) { return bag.contains(u) && bag.contains(v); });
    if (!covered) report.add("uncovered_edge", {{"edge", {u, v}}});
  }
  return report;
}

/// The unique smallest subtree of bags whose union contains u, for a set u
/// that no single bag contains. Grown one element at a time: start from the
/// tree path joining the common bags of a prefix of u to the first element
/// that breaks the common intersection, then attach each later element's
/// bags by their shortest tree path whenever the current family misses them.
///
/// Throws ContainedInSingleBag when some bag already holds all of u; the
/// caller is expected to descend into that bag.
inline BagSubfamily minimum_covering_subfamily(const MarkovTree& m, const VertexSet& u) {
  if (u.empty()) throw InvalidArgument("minimum_covering_subfamily: empty vertex set");
  std::vector<BagSubfamily> holders;
  for (Vertex v : u) {
    holders.push_back(bags_containing(m, v));
    if (holders.back().empty()) {
      throw InvalidArgument("minimum_covering_subfamily: vertex " + std::to_string(v) + " lies in no bag");
    }
  }

  BagSubfamily prefix_common = holders[0];
  std::size_t breaker = 1;
  for (; breaker < holders.size(); ++breaker) {
    BagSubfamily next = intersect(prefix_common, holders[breaker]);
    if (next.empty()) break;
    prefix_common = std::move(next);
  }
  if (breaker == holders.size()) {
    throw ContainedInSingleBag("minimum_covering_subfamily: the set lies inside bag " +
                                   std::to_string(prefix_common[0]),
                               prefix_common[0]);
  }

  BagSubfamily family = shortest_path_between(m, prefix_common, holders[breaker]);
  for (std::size_t i = breaker + 1; i < holders.size(); ++i) {
    if (intersect(family, holders[i]).empty()) {
      family = unite(family, shortest_path_between(m, family, holders[i]));
    }
  }
  return family;
}

inline BagSubfamily minimum_covering_subfamily(const TreeDecomposition& d, const VertexSet& u) {
  for (Vertex v : u) {
    if (v < 0 || v >= d.host.num_vertices()) {
      throw InvalidArgument("minimum_covering_subfamily: vertex " + std::to_string(v) + " out of range");
    }
  }
  return minimum_covering_subfamily(d.markov, u);
}

/// A retraction together with its relabelings: vertex i of decomp.host is
/// `vertices[i]` of the original host and bag j is original bag `bag_map[j]`.
struct Retraction {
  TreeDecomposition decomp;
  VertexSet vertices;
  BagSubfamily bag_map;
};

/// Deletes leaves of the decomposition tree until exactly `keep` remains.
/// Any subtree is reachable that way, so `keep` only has to induce one.
inline Retraction retraction(const TreeDecomposition& d, const BagSubfamily& keep) {
  if (!induces_subtree(d.markov, keep)) throw InvalidArgument("retraction: bags do not induce a subtree");
  MarkovSubtree sub = markov_subtree(d.markov, keep);
  InducedSubgraph induced = induced_subgraph(d.host, sub.vertices);
  return {{std::move(induced.graph), std::move(sub.tree)}, std::move(sub.vertices), std::move(sub.bag_map)};
}

/// Line graph of g: vertex i is edge i of g (canonical order).
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> adj;
  const auto& e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
          e[i].second == e[j].second) {
        adj.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(g.num_edges(), std::move(adj));
}

/// Picks a spanning tree of a connected graph; returns its edges.
using SpanningTreeSelector = std::function<std::vector<Edge>(const Graph&)>;

/// Breadth-first spanning tree from vertex 0, neighbours in ascending order.
inline std::vector<Edge> bfs_spanning_tree(const Graph& g) {
  std::vector<Edge> out;
  if (g.num_vertices() == 0) return out;
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        out.emplace_back(x, y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

/// Base-level Markov tree of a tree t: one bag per edge of t, joined by the
/// selected spanning tree of t's line graph.
inline MarkovTree line_graph_markov_tree(const Graph& t, const SpanningTreeSelector& choose = bfs_spanning_tree) {
  if (t.num_edges() == 0) throw InvalidArgument("line_graph_markov_tree: tree has no edges");
  if (!is_tree(t)) throw InvalidArgument("line_graph_markov_tree: graph is not a tree");
  Graph lg = line_graph(t);
  std::vector<Edge> chosen = choose(lg);
  Graph chosen_graph(lg.num_vertices(), chosen);
  if (!is_tree(chosen_graph)) throw InvalidArgument("line_graph_markov_tree: selector did not return a spanning tree");
  for (auto [a, b] : chosen_graph.edges()) {
    if (!lg.adjacent(a, b)) {
      throw InvalidArgument("line_graph_markov_tree: selected edge is not in the line graph");
    }
  }
  MarkovTree m;
  m.ground_size = t.num_vertices();
  for (auto [u, v] : t.edges()) m.bags.push_back(VertexSet{u, v});
  m.tree = chosen_graph.edges();
  return m;
}

}  // namespace sido
