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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sido/distribution.hpp"
#include "sido/markov_tree.hpp"

namespace sido {

/// Exact comparison of the two A∩B marginals on every tree edge AB.
struct ConsistencyReport {
  struct EdgeCheck {
    Edge edge;
    VertexSet shared;
    bool ok = true;
    std::optional<Assignment> witness;
  };
  std::vector<EdgeCheck> edges;

  bool ok() const {
    return std::all_of(edges.begin(), edges.end(), [](const EdgeCheck& e) { return e.ok; });
  }
};

namespace detail {

inline void require_bag_dists(const MarkovTree& m, const std::vector<SparseDistribution>& dists) {
  ValidationReport report = validate_markov_tree(m);
  if (!report.ok()) {
    throw InvalidArgument("Markov tree is invalid (" + report.violations.front().kind + ")");
  }
  if (static_cast<int>(dists.size()) != m.num_bags()) {
    throw InvalidArgument("expected one distribution per bag");
  }
  for (int b = 0; b < m.num_bags(); ++b) {
    if (dists[b].index_set() != m.bags[b]) {
      throw InvalidArgument("distribution " + std::to_string(b) + " is not indexed by its bag");
    }
    if (dists[b].target_size() != dists[0].target_size()) throw InvalidArgument("bag target sizes differ");
  }
}

}  // namespace detail

inline ConsistencyReport check_marginal_consistency(const MarkovTree& m, const std::vector<SparseDistribution>& dists) {
  ConsistencyReport report;
  for (auto [a, b] : m.tree) {
    ConsistencyReport::EdgeCheck check{{a, b}, intersect(m.bags[a], m.bags[b]), true, std::nullopt};
    check.witness = first_difference(marginal(dists[a], check.shared), marginal(dists[b], check.shared));
    check.ok = !check.witness.has_value();
    report.edges.push_back(std::move(check));
  }
  return report;
}

namespace detail {

inline void require_consistent(const MarkovTree& m, const std::vector<SparseDistribution>& dists) {
  ConsistencyReport report = check_marginal_consistency(m, dists);
  for (const auto& e : report.edges) {
    if (!e.ok) {
      throw MarginalMismatch("bag marginals disagree on tree edge (" + std::to_string(e.edge.first) + "," +
                                 std::to_string(e.edge.second) + ")",
                             {{"edge", {e.edge.first, e.edge.second}},
                              {"shared", e.shared.items()},
                              {"assignment", *e.witness}});
    }
  }
}

}  // namespace detail

/// Order in which bags are peeled off: repeatedly the lowest-index leaf of
/// what remains. The last entry is the bag left standing.
inline std::vector<int> leaf_elimination_order(const MarkovTree& m) {
  auto adj = detail::tree_adjacency(m);
  std::vector<int> degree(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) degree[i] = static_cast<int>(adj[i].size());
  std::vector<bool> removed(adj.size(), false);
  std::vector<int> order;
  for (int step = 0; step + 1 < m.num_bags(); ++step) {
    int leaf = 0;
    while (removed[leaf] || degree[leaf] > 1) ++leaf;
    removed[leaf] = true;
    order.push_back(leaf);
    for (int y : adj[leaf])
      if (!removed[y]) --degree[y];
  }
  for (int b = 0; b < m.num_bags(); ++b)
    if (!removed[b]) order.push_back(b);
  return order;
}

/// Joint distribution on the ground set whose bag marginals are the given
/// ones, built by leaf elimination: peel leaves off the tree, then glue them
/// back in reverse, each conditionally independent of the rest given its
/// overlap with the bags already placed.
inline SparseDistribution glue_markov_tree(const MarkovTree& m, const std::vector<SparseDistribution>& dists) {
  detail::require_bag_dists(m, dists);
  detail::require_consistent(m, dists);
  std::vector<int> order = leaf_elimination_order(m);
  SparseDistribution joint = dists[order.back()];
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) joint = glue_pair(joint, dists[*it]);
  return joint;
}

/// Closed form of the same coupling: prod_F p_F(y_F) / prod_AB p_A(y_{A∩B}),
/// evaluated over every assignment consistent with all bag supports.
inline SparseDistribution junction_factorization(const MarkovTree& m, const std::vector<SparseDistribution>& dists) {
  detail::require_bag_dists(m, dists);
  detail::require_consistent(m, dists);
  const int k = m.ground_size;
  const int target = dists[0].target_size();

  // A bag becomes checkable once its largest element is assigned.
  std::vector<std::vector<int>> completes(static_cast<std::size_t>(k));
  for (int b = 0; b < m.num_bags(); ++b)
    if (!m.bags[b].empty()) completes[m.bags[b].items().back()].push_back(b);

  std::vector<SparseDistribution> overlaps;
  for (auto [a, b] : m.tree) overlaps.push_back(marginal(dists[a], intersect(m.bags[a], m.bags[b])));

  Rational empty_bags = 1;
  for (int b = 0; b < m.num_bags(); ++b)
    if (m.bags[b].empty()) empty_bags *= dists[b].mass({});

  SparseDistribution::Masses out;
  Assignment y(static_cast<std::size_t>(k), 0);
  std::vector<Rational> partial(static_cast<std::size_t>(k) + 1);
  partial[0] = empty_bags;

  auto restrict_to = [&](const VertexSet& s) {
    Assignment key;
    for (Vertex v : s) key.push_back(y[v]);
    return key;
  };

  std::function<void(int)> assign = [&](int i) {
    if (i == k) {
      Rational q = partial[k];
      for (const auto& o : overlaps) q /= o.mass(restrict_to(o.index_set()));
      out.emplace(y, q);
      return;
    }
    for (int x = 0; x < target; ++x) {
      y[i] = x;
      Rational p = partial[i];
      for (int b : completes[i]) {
        p *= dists[b].mass(restrict_to(m.bags[b]));
        if (sgn(p) == 0) break;
      }
      if (sgn(p) == 0) continue;
      partial[i + 1] = p;
      assign(i + 1);
    }
  };
  assign(0);
  return SparseDistribution(VertexSet::range(k), target, std::move(out));
}

/// Σ_F H(p_F) − Σ_AB H(p_A restricted to A∩B), in bits.
inline double tree_entropy_formula(const MarkovTree& m, const std::vector<SparseDistribution>& dists) {
  double h = 0.0;
  for (const auto& d : dists) h += entropy(d);
  for (auto [a, b] : m.tree) h -= entropy(marginal(dists[a], intersect(m.bags[a], m.bags[b])));
  return h;
}

}  // namespace sido
