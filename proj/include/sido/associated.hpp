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
#include <optional>
#include <string>
#include <vector>

#include "sido/distribution.hpp"
#include "sido/homomorphism.hpp"
#include "sido/markov_glue.hpp"
#include "sido/strong_decomposition.hpp"

namespace sido {

/// Tree-indexed random walk on g: the lexicographically smallest edge of t
/// lands on a uniform ordered edge of g, then the remaining vertices of t are
/// placed in breadth-first order, each on a uniform neighbour of its parent's
/// image. Support is exactly Hom(t, g).
inline SparseDistribution brw_distribution(const Graph& t, const Graph& g) {
  if (t.num_edges() == 0 || !is_tree(t)) throw InvalidArgument("brw_distribution: source must be a tree with an edge");
  if (g.num_edges() == 0) throw InvalidArgument("brw_distribution: target has no edges");

  const int n = t.num_vertices();
  auto [r1, r2] = t.edges().front();
  std::vector<Vertex> order{r1, r2};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  parent[r1] = r1;
  parent[r2] = r1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex y : t.neighbors(order[head])) {
      if (parent[y] < 0) {
        parent[y] = order[head];
        order.push_back(y);
      }
    }
  }

  SparseDistribution::Masses out;
  VertexMap image(static_cast<std::size_t>(n), -1);
  std::function<void(std::size_t, const Rational&)> extend = [&](std::size_t i, const Rational& mass) {
    if (i == order.size()) {
      out.emplace(image, mass);
      return;
    }
    Vertex v = order[i];
    Vertex up = image[parent[v]];
    Rational step = mass / g.degree(up);
    for (Vertex x : g.neighbors(up)) {
      image[v] = x;
      extend(i + 1, step);
    }
  };
  const Rational root_mass(1, 2 * g.num_edges());
  for (auto [a, b] : g.edges()) {
    for (auto [x, y] : {Edge{a, b}, Edge{b, a}}) {
      image[r1] = x;
      image[r2] = y;
      extend(2, root_mass);
    }
  }
  return SparseDistribution(VertexSet::range(n), g.num_vertices(), std::move(out));
}

/// One gluing performed while building an associated distribution.
struct GlueStep {
  std::vector<int> path;  // bag indices from the root decomposition
  int level = 0;
  double joint_entropy = 0.0;
  double formula_entropy = 0.0;
};

struct AssociatedDistribution {
  SparseDistribution dist;
  std::vector<GlueStep> steps;
};

namespace detail {

inline SparseDistribution associated_at(const StrongDecomposition& sd, const Graph& g, std::vector<int>& path,
                                        std::vector<GlueStep>& steps) {
  if (sd.is_base()) return brw_distribution(sd.host, g);

  const CompositePayload& c = sd.composite();
  const MarkovTree& m = c.decomp.markov;
  std::vector<SparseDistribution> locals;
  for (int b = 0; b < m.num_bags(); ++b) {
    path.push_back(b);
    locals.push_back(associated_at(c.children[b], g, path, steps).renamed(m.bags[b]));
    path.pop_back();
  }
  ConsistencyReport consistency = check_marginal_consistency(m, locals);
  for (const auto& e : consistency.edges) {
    if (!e.ok) {
      throw MarginalMismatch("associated_distribution: child distributions disagree on a bag intersection",
                             {{"path", path},
                              {"edge", {e.edge.first, e.edge.second}},
                              {"shared", e.shared.items()},
                              {"assignment", *e.witness}});
    }
  }
  SparseDistribution joint = glue_markov_tree(m, locals);
  steps.push_back({path, sd.level, entropy(joint), tree_entropy_formula(m, locals)});
  return joint;
}

}  // namespace detail

/// Distribution on Hom(host, g) attached to a strong decomposition: the walk
/// distribution at level 0, otherwise the Markov-tree gluing of the
/// children's distributions. Agreement of the children on every bag
/// intersection is checked exactly before gluing.
inline AssociatedDistribution associated_distribution(const StrongDecomposition& sd, const Graph& g) {
  if (g.num_edges() == 0) throw InvalidArgument("associated_distribution: target has no edges");
  AssociatedDistribution out;
  std::vector<int> path;
  out.dist = detail::associated_at(sd, g, path, out.steps);
  for (const auto& [key, mass] : out.dist.masses()) {
    if (!is_homomorphism(sd.host, g, key)) {
      throw std::logic_error("associated_distribution: support atom is not a homomorphism");
    }
  }
  return out;
}

struct ProjectionReport {
  bool ok = false;
  VertexSet vertices;  // host vertices of the minimum sub-decomposition
  int sub_level = 0;
  std::size_t atoms = 0;
  std::optional<Assignment> witness;
};

/// Compares the marginal of the full associated distribution on the minimum
/// sub-decomposition containing u with that sub-decomposition's own
/// associated distribution.
inline ProjectionReport projection_consistency_check(const StrongDecomposition& sd, const Graph& g, const VertexSet& u,
                                                     const AssociatedDistribution& full) {
  SubDecomposition sub = minimum_subdecomposition(sd, u);
  SparseDistribution own = associated_distribution(sub.decomp, g).dist.renamed(sub.vertices);
  SparseDistribution projected = marginal(full.dist, sub.vertices);
  ProjectionReport report;
  report.vertices = sub.vertices;
  report.sub_level = sub.decomp.level;
  report.atoms = projected.support_size();
  report.witness = first_difference(projected, own);
  report.ok = !report.witness.has_value();
  return report;
}

inline ProjectionReport projection_consistency_check(const StrongDecomposition& sd, const Graph& g, const VertexSet& u) {
  return projection_consistency_check(sd, g, u, associated_distribution(sd, g));
}

struct TransportReport {
  bool ok = false;
  std::size_t atoms = 0;
  std::optional<Assignment> witness;  // an atom of sd2's distribution
};

/// Checks p2(h) = p1(h ∘ φ) on Hom(H2, g) for an isomorphism φ: V(H1) -> V(H2).
inline TransportReport isomorphism_transport_check(const StrongDecomposition& sd1, const StrongDecomposition& sd2,
                                                   const VertexMap& phi, const Graph& g) {
  if (!is_isomorphism(sd1.host, sd2.host, phi)) {
    throw InvalidArgument("isomorphism_transport_check: map is not a host isomorphism");
  }
  SparseDistribution p1 = associated_distribution(sd1, g).dist;
  SparseDistribution p2 = associated_distribution(sd2, g).dist;
  TransportReport report;
  report.atoms = p2.support_size();
  report.ok = p1.support_size() == p2.support_size();
  for (const auto& [h2, mass] : p2.masses()) {
    Assignment h1(h2.size());
    for (std::size_t v = 0; v < h1.size(); ++v) h1[v] = h2[phi[v]];
    if (p1.mass(h1) != mass) {
      report.ok = false;
      report.witness = h2;
      break;
    }
  }
  return report;
}

}  // namespace sido
