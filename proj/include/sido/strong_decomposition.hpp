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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sido/graph.hpp"
#include "sido/isomorphism.hpp"
#include "sido/markov_tree.hpp"
#include "sido/tree_decomposition.hpp"
#include "sido/validation.hpp"

namespace sido {

struct StrongDecomposition;

/// Level 0: the edges of a tree as bags, joined by a spanning tree of the
/// tree's line graph.
struct BasePayload {
  MarkovTree line_tree;
};

/// Level k > 0: a tree decomposition of the host plus one level k-1
/// decomposition per bag, stored in bag-index order.
struct CompositePayload {
  TreeDecomposition decomp;
  std::vector<StrongDecomposition> children;
};

struct StrongDecomposition {
  int level = 0;
  Graph host;
  std::variant<BasePayload, CompositePayload> payload;

  bool is_base() const noexcept { return std::holds_alternative<BasePayload>(payload); }
  const BasePayload& base() const { return std::get<BasePayload>(payload); }
  const CompositePayload& composite() const { return std::get<CompositePayload>(payload); }
};

inline bool operator==(const StrongDecomposition& a, const StrongDecomposition& b);

inline bool operator==(const BasePayload& a, const BasePayload& b) { return a.line_tree == b.line_tree; }
inline bool operator==(const CompositePayload& a, const CompositePayload& b) {
  return a.decomp == b.decomp && a.children == b.children;
}
inline bool operator==(const StrongDecomposition& a, const StrongDecomposition& b) {
  return a.level == b.level && a.host == b.host && a.payload == b.payload;
}

/// A decomposition of some induced subgraph of a parent host; vertex i of
/// `decomp.host` is parent vertex `vertices[i]`.
struct SubDecomposition {
  StrongDecomposition decomp;
  VertexSet vertices;
};

/// Host isomorphism plus the bag correspondence it induces.
struct StrongIsomorphism {
  VertexMap vertex_map;
  std::vector<int> bag_map;
};

inline const Graph& underlying_graph(const StrongDecomposition& sd) { return sd.host; }

inline StrongDecomposition make_base(const Graph& tree, const SpanningTreeSelector& choose = bfs_spanning_tree) {
  return {0, tree, BasePayload{line_graph_markov_tree(tree, choose)}};
}

/// Builds a level-(child level + 1) decomposition. Children must be given in
/// bag order; nothing is validated here.
inline StrongDecomposition make_composite(const Graph& host, std::vector<VertexSet> bags, std::vector<Edge> tree,
                                          std::vector<StrongDecomposition> children) {
  if (children.empty()) throw InvalidArgument("make_composite: no children");
  int level = children.front().level + 1;
  MarkovTree m{host.num_vertices(), std::move(bags), std::move(tree)};
  return {level, host, CompositePayload{{host, std::move(m)}, std::move(children)}};
}

namespace detail {

inline VertexSet localize(const VertexSet& bag, const VertexSet& u) {
  std::vector<int> local;
  for (Vertex v : u) {
    int i = bag.index_of(v);
    if (i < 0) throw InvalidArgument("localize: vertex outside bag");
    local.push_back(i);
  }
  return VertexSet(std::move(local));
}

}  // namespace detail

/// Smallest sub-decomposition whose host contains u. If some bag holds all of
/// u, descend into the lowest such bag's child; otherwise retract to the
/// minimum covering subfamily. At level 0 a set inside one edge yields that
/// single edge.
inline SubDecomposition minimum_subdecomposition(const StrongDecomposition& sd, const VertexSet& u) {
  if (u.empty()) throw InvalidArgument("minimum_subdecomposition: empty vertex set");
  for (Vertex v : u) {
    if (v >= sd.host.num_vertices()) {
      throw InvalidArgument("minimum_subdecomposition: vertex " + std::to_string(v) + " not in host");
    }
  }

  if (sd.is_base()) {
    const MarkovTree& m = sd.base().line_tree;
    BagSubfamily common = common_bags(m, u);
    BagSubfamily keep = common.empty() ? minimum_covering_subfamily(m, u) : BagSubfamily{common[0]};
    Retraction r = retraction(TreeDecomposition{sd.host, m}, keep);
    return {{0, r.decomp.host, BasePayload{std::move(r.decomp.markov)}}, std::move(r.vertices)};
  }

  const CompositePayload& c = sd.composite();
  BagSubfamily common = common_bags(c.decomp.markov, u);
  if (!common.empty()) {
    const VertexSet& bag = c.decomp.markov.bags[common[0]];
    SubDecomposition inner = minimum_subdecomposition(c.children[common[0]], detail::localize(bag, u));
    std::vector<int> lifted;
    for (Vertex v : inner.vertices) lifted.push_back(bag[v]);
    return {std::move(inner.decomp), VertexSet(std::move(lifted))};
  }

  BagSubfamily keep = minimum_covering_subfamily(c.decomp, u);
  Retraction r = retraction(c.decomp, keep);
  std::vector<StrongDecomposition> children;
  for (int b : keep) children.push_back(c.children[b]);
  Graph host = r.decomp.host;
  return {{sd.level, std::move(host), CompositePayload{std::move(r.decomp), std::move(children)}},
          std::move(r.vertices)};
}

namespace detail {

inline Graph bag_tree_graph(const MarkovTree& m) { return Graph(m.num_bags(), m.tree); }

/// Membership vector of each vertex: sorted list of bag indices containing it.
inline std::vector<std::vector<int>> memberships(const MarkovTree& m, int n) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int b = 0; b < m.num_bags(); ++b)
    for (Vertex v : m.bags[b]) out[v].push_back(b);
  return out;
}

inline bool children_isomorphic(const CompositePayload& c1, const CompositePayload& c2, const VertexMap& phi,
                                const std::vector<int>& psi);

}  // namespace detail

/// A host isomorphism sd1 -> sd2 extending `pin` whose induced bag map is an
/// isomorphism of decomposition trees and which restricts, bag by bag, to
/// strong isomorphisms of the children. At level 0 any isomorphism of the
/// underlying trees qualifies.
inline std::optional<StrongIsomorphism> strong_isomorphism(const StrongDecomposition& sd1,
                                                           const StrongDecomposition& sd2, const Pin& pin = {}) {
  if (sd1.level != sd2.level) throw InvalidArgument("strong_isomorphism: level mismatch");
  if (sd1.is_base() != sd2.is_base()) throw InvalidArgument("strong_isomorphism: payload kind mismatch");

  if (sd1.is_base()) {
    auto phi = find_isomorphism_pinned(sd1.host, sd2.host, pin);
    if (!phi) return std::nullopt;
    const auto& bags1 = sd1.base().line_tree.bags;
    const auto& bags2 = sd2.base().line_tree.bags;
    std::vector<int> bag_map;
    for (const auto& bag : bags1) {
      VertexSet image{(*phi)[bag[0]], (*phi)[bag[1]]};
      auto it = std::find(bags2.begin(), bags2.end(), image);
      if (it == bags2.end()) throw std::logic_error("strong_isomorphism: edge image is not a bag");
      bag_map.push_back(static_cast<int>(it - bags2.begin()));
    }
    return StrongIsomorphism{std::move(*phi), std::move(bag_map)};
  }

  const auto& c1 = sd1.composite();
  const auto& c2 = sd2.composite();
  const MarkovTree& m1 = c1.decomp.markov;
  const MarkovTree& m2 = c2.decomp.markov;
  if (m1.num_bags() != m2.num_bags() || sd1.host.num_vertices() != sd2.host.num_vertices()) return std::nullopt;

  const auto member1 = detail::memberships(m1, sd1.host.num_vertices());
  const auto member2 = detail::memberships(m2, sd2.host.num_vertices());
  std::optional<StrongIsomorphism> result;

  detail::for_each_isomorphism(
      detail::bag_tree_graph(m1), detail::bag_tree_graph(m2), {},
      [&](int a, int b) {
        return m1.bags[a].size() == m2.bags[b].size() &&
               c1.children[a].host.num_edges() == c2.children[b].host.num_edges();
      },
      [&](const VertexMap& psi) {
        auto membership_respected = [&](Vertex v, Vertex x) {
          if (member1[v].size() != member2[x].size()) return false;
          std::vector<int> image;
          for (int b : member1[v]) image.push_back(psi[b]);
          std::sort(image.begin(), image.end());
          return image == member2[x];
        };
        detail::for_each_isomorphism(sd1.host, sd2.host, pin, membership_respected, [&](const VertexMap& phi) {
          if (!detail::children_isomorphic(c1, c2, phi, psi)) return true;
          result = StrongIsomorphism{phi, psi};
          return false;
        });
        return !result;
      });

  if (result) {
    if (!is_isomorphism(sd1.host, sd2.host, result->vertex_map)) {
      throw std::logic_error("strong_isomorphism: host map is not an isomorphism");
    }
    for (int b = 0; b < m1.num_bags(); ++b) {
      std::vector<int> image;
      for (Vertex v : m1.bags[b]) image.push_back(result->vertex_map[v]);
      if (VertexSet(image) != m2.bags[result->bag_map[b]]) {
        throw std::logic_error("strong_isomorphism: bag map disagrees with the host map");
      }
    }
  }
  return result;
}

namespace detail {

inline bool children_isomorphic(const CompositePayload& c1, const CompositePayload& c2, const VertexMap& phi,
                                const std::vector<int>& psi) {
  for (int a = 0; a < static_cast<int>(c1.children.size()); ++a) {
    const VertexSet& bag1 = c1.decomp.markov.bags[a];
    const VertexSet& bag2 = c2.decomp.markov.bags[psi[a]];
    Pin local;
    for (std::size_t i = 0; i < bag1.size(); ++i) local[static_cast<int>(i)] = bag2.index_of(phi[bag1[i]]);
    if (!strong_isomorphism(c1.children[a], c2.children[psi[a]], local)) return false;
  }
  return true;
}

inline nlohmann::json with_path(nlohmann::json witness, const std::vector<int>& path) {
  witness["path"] = path;
  return witness;
}

inline void validate_strong_at(const StrongDecomposition& sd, std::vector<int>& path, ValidationReport& report) {
  auto add = [&](const std::string& kind, nlohmann::json witness) {
    report.add(kind, with_path(std::move(witness), path));
  };
  auto absorb = [&](const ValidationReport& inner, const std::string& prefix) {
    for (const auto& v : inner.violations) add(prefix + v.kind, v.witness);
  };

  if (sd.level < 0) {
    add("bad_level", {{"level", sd.level}});
    return;
  }

  if (sd.level == 0) {
    if (!sd.is_base()) {
      add("payload_kind", {{"expected", "base"}});
      return;
    }
    if (!is_tree(sd.host) || sd.host.num_edges() == 0) {
      add("level0_host_not_tree", {{"vertices", sd.host.num_vertices()}, {"edges", sd.host.num_edges()}});
      return;
    }
    const MarkovTree& m = sd.base().line_tree;
    absorb(validate_tree_decomposition(TreeDecomposition{sd.host, m}), "level0_");
    std::vector<VertexSet> bags = m.bags;
    std::vector<VertexSet> edges;
    for (auto [u, v] : sd.host.edges()) edges.push_back(VertexSet{u, v});
    std::sort(bags.begin(), bags.end());
    if (bags != edges) add("level0_bags_not_edges", {{"bags", m.num_bags()}, {"edges", sd.host.num_edges()}});
    for (auto [a, b] : m.tree) {
      if (a < 0 || b < 0 || a >= m.num_bags() || b >= m.num_bags()) continue;
      if (intersect(m.bags[a], m.bags[b]).empty()) {
        add("level0_not_line_graph_tree", {{"edge", {a, b}}});
      }
    }
    return;
  }

  if (sd.is_base()) {
    add("payload_kind", {{"expected", "composite"}});
    return;
  }
  const CompositePayload& c = sd.composite();
  const MarkovTree& m = c.decomp.markov;
  if (!(c.decomp.host == sd.host)) add("decomp_host_mismatch", nlohmann::json::object());
  ValidationReport td = validate_tree_decomposition(c.decomp);
  absorb(td, "");
  if (static_cast<int>(c.children.size()) != m.num_bags()) {
    add("child_count", {{"children", c.children.size()}, {"bags", m.num_bags()}});
    return;
  }
  if (!td.ok()) return;

  std::vector<bool> child_ok(c.children.size(), false);
  for (int b = 0; b < m.num_bags(); ++b) {
    const StrongDecomposition& child = c.children[b];
    if (child.level != sd.level - 1) {
      add("child_level", {{"bag", b}, {"level", child.level}, {"expected", sd.level - 1}});
      continue;
    }
    if (!(child.host == induced_subgraph(sd.host, m.bags[b]).graph)) {
      add("condition1_child_host_mismatch", {{"bag", b}});
      continue;
    }
    std::size_t before = report.violations.size();
    path.push_back(b);
    validate_strong_at(child, path, report);
    path.pop_back();
    child_ok[b] = report.violations.size() == before;
  }

  for (auto [x, y] : m.tree) {
    VertexSet shared = intersect(m.bags[x], m.bags[y]);
    if (!is_forest(induced_subgraph(sd.host, shared).graph)) {
      add("condition2_intersection_not_forest", {{"edge", {x, y}}, {"intersection", shared.items()}});
    }
    if (shared.empty() || !child_ok[x] || !child_ok[y]) continue;
    SubDecomposition sub_x = minimum_subdecomposition(c.children[x], localize(m.bags[x], shared));
    SubDecomposition sub_y = minimum_subdecomposition(c.children[y], localize(m.bags[y], shared));
    nlohmann::json witness = {{"edge", {x, y}}, {"intersection", shared.items()}};
    if (sub_x.decomp.level != sub_y.decomp.level) {
      witness["reason"] = "minimum sub-decompositions have different levels";
      add("condition3_no_isomorphism", witness);
      continue;
    }
    Pin pin;
    for (Vertex v : shared) {
      pin[sub_x.vertices.index_of(m.bags[x].index_of(v))] = sub_y.vertices.index_of(m.bags[y].index_of(v));
    }
    if (!strong_isomorphism(sub_x.decomp, sub_y.decomp, pin)) add("condition3_no_isomorphism", witness);
  }
}

}  // namespace detail

/// Checks every level recursively: children decompose the bag-induced
/// subgraphs, adjacent bags meet in an induced forest, and the minimum
/// sub-decompositions of adjacent children containing the shared vertices
/// are isomorphic with those vertices fixed pointwise. Each violation's
/// witness carries the bag path from the root.
inline ValidationReport validate_strong(const StrongDecomposition& sd) {
  ValidationReport report;
  std::vector<int> path;
  detail::validate_strong_at(sd, path, report);
  return report;
}

}  // namespace sido
