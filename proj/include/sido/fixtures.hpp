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

#include <vector>

#include "sido/graph.hpp"
#include "sido/markov_tree.hpp"
#include "sido/strong_decomposition.hpp"
#include "sido/tree_decomposition.hpp"

// Hand-built decompositions shipped with the project (also serialized under
// fixtures/). Positive ones validate; the `bad_*` ones each break exactly one
// condition.

namespace sido::fixtures {

/// Composite whose children are the level-0 decompositions of each bag.
inline StrongDecomposition over_trees(const Graph& host, std::vector<VertexSet> bags, std::vector<Edge> tree) {
  std::vector<StrongDecomposition> children;
  for (const auto& bag : bags) children.push_back(make_base(induced_subgraph(host, bag).graph));
  return make_composite(host, std::move(bags), std::move(tree), std::move(children));
}

inline StrongDecomposition edge() { return make_base(path_graph(2)); }
inline StrongDecomposition path3() { return make_base(path_graph(3)); }
inline StrongDecomposition star3() { return make_base(star_graph(3)); }

/// C4 = 0-1-2-3-0 split into the paths 0-1-2 and 2-3-0.
inline StrongDecomposition c4() {
  return over_trees(cycle_graph(4), {VertexSet{0, 1, 2}, VertexSet{0, 2, 3}}, {{0, 1}});
}

/// K_{2,3} with sides {0,1} and {2,3,4}: three paths 0-i-1 chained in a row.
inline Graph k23_graph() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

inline StrongDecomposition k23() {
  return over_trees(k23_graph(), {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 1, 4}}, {{0, 1}, {1, 2}});
}

/// Two 4-cycles 0-1-2-3 and 0-1-4-5 sharing the edge 01.
inline Graph book_graph() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {4, 5}, {0, 5}}); }

/// Level 2: one bag per 4-cycle, each carrying the level-1 C4 decomposition.
inline StrongDecomposition book() {
  return make_composite(book_graph(), {VertexSet{0, 1, 2, 3}, VertexSet{0, 1, 4, 5}}, {{0, 1}}, {c4(), c4()});
}

/// All positive fixtures, by file stem.
inline std::vector<std::pair<const char*, StrongDecomposition>> valid_strong() {
  return {{"edge_0strong", edge()}, {"path3_0strong", path3()}, {"star3_0strong", star3()},
          {"c4_1strong", c4()},     {"k23_1strong", k23()},     {"book_2strong", book()}};
}

/// Running intersection broken: bags {0,1},{2},{0,2} on a path.
inline MarkovTree bad_running_intersection() {
  return {3, {VertexSet{0, 1}, VertexSet{2}, VertexSet{0, 2}}, {{0, 1}, {1, 2}}};
}

/// C4 with bags {0,1},{2,3}: edges 12 and 03 uncovered.
inline TreeDecomposition bad_uncovered_edges() {
  return {cycle_graph(4), {4, {VertexSet{0, 1}, VertexSet{2, 3}}, {{0, 1}}}};
}

/// A 5-cycle split into paths of lengths 2 and 3 between 0 and 2; the two
/// paths are not isomorphic with 0 and 2 fixed.
inline Graph c5_graph() { return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}}); }

inline StrongDecomposition bad_condition3() {
  return over_trees(c5_graph(), {VertexSet{0, 1, 2}, VertexSet{0, 2, 3, 4}}, {{0, 1}});
}

/// C4 at level 2 with the whole cycle as two identical bags: the bags meet
/// in a cycle, not a forest.
inline StrongDecomposition bad_condition2() {
  return make_composite(cycle_graph(4), {VertexSet{0, 1, 2, 3}, VertexSet{0, 1, 2, 3}}, {{0, 1}}, {c4(), c4()});
}

}  // namespace sido::fixtures
