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

// Brute-force references for the tests. None of these call into the code
// path they are used to check: homomorphisms come from enumerating every map,
// minimum families from enumerating every subset of bags, and the walk
// weights from the closed-form degree product.

#include <cstdint>
#include <optional>
#include <vector>

#include "sido.hpp"

namespace sido::oracle {

/// Every map V(h) -> V(g), filtered for adjacency, in lexicographic order.
inline std::vector<VertexMap> all_homs(const Graph& h, const Graph& g) {
  std::vector<VertexMap> out;
  VertexMap m(static_cast<std::size_t>(h.num_vertices()), 0);
  while (true) {
    bool ok = true;
    for (auto [u, v] : h.edges()) ok = ok && g.adjacent(m[u], m[v]);
    if (ok) out.push_back(m);
    int i = h.num_vertices() - 1;
    while (i >= 0 && ++m[i] == g.num_vertices()) m[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

/// Closed walks of length 4, i.e. trace(A^4): homomorphisms from C4.
inline std::uint64_t trace_a4(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::uint64_t>> a2(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a2[i][j] += (g.adjacent(i, k) && g.adjacent(k, j)) ? 1 : 0;
  std::uint64_t tr = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr += a2[i][j] * a2[j][i];
  return tr;
}

/// Connectivity of a bag subset in the decomposition tree, by union-find.
inline bool connected_in_tree(const MarkovTree& m, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<int> comp(m.num_bags());
  for (int i = 0; i < m.num_bags(); ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x];
    return x;
  };
  std::vector<bool> in(m.num_bags(), false);
  for (int b : subset) in[b] = true;
  int parts = static_cast<int>(subset.size());
  for (auto [a, b] : m.tree) {
    if (in[a] && in[b] && find(a) != find(b)) {
      comp[find(a)] = find(b);
      --parts;
    }
  }
  return parts == 1;
}

struct MinimumFamily {
  std::vector<int> family;
  bool unique = false;
  bool contained_in_all_good = false;
};

/// Smallest connected bag subsets whose union covers u, over all 2^|bags|
/// subsets.
inline std::optional<MinimumFamily> minimum_cover(const MarkovTree& m, const VertexSet& u) {
  std::vector<std::vector<int>> good;
  for (unsigned mask = 1; mask < (1u << m.num_bags()); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < m.num_bags(); ++b)
      if (mask >> b & 1u) subset.push_back(b);
    if (!connected_in_tree(m, subset)) continue;
    bool covers = true;
    for (Vertex v : u) {
      bool hit = false;
      for (int b : subset) hit = hit || m.bags[b].contains(v);
      covers = covers && hit;
    }
    if (covers) good.push_back(subset);
  }
  if (good.empty()) return std::nullopt;
  std::size_t best = good.front().size();
  for (const auto& s : good) best = std::min(best, s.size());
  MinimumFamily out;
  int count = 0;
  for (const auto& s : good) {
    if (s.size() == best) {
      out.family = s;
      ++count;
    }
  }
  out.unique = count == 1;
  out.contained_in_all_good = true;
  for (const auto& s : good)
    for (int b : out.family)
      out.contained_in_all_good = out.contained_in_all_good && std::find(s.begin(), s.end(), b) != s.end();
  return out;
}

/// Lowest bag in every family, found by scanning all bags.
inline std::optional<int> common_bag(int num_bags, const std::vector<BagSubfamily>& families) {
  for (int b = 0; b < num_bags; ++b) {
    bool everywhere = true;
    for (const auto& f : families) everywhere = everywhere && f.contains(b);
    if (everywhere) return b;
  }
  return std::nullopt;
}

/// Walk law of a tree: (1/2|E(g)|) · Π_v deg_g(h(v))^(1 − deg_t(v)).
inline Rational walk_weight(const Graph& t, const Graph& g, const VertexMap& h) {
  Rational w(1, 2 * g.num_edges());
  for (int v = 0; v < t.num_vertices(); ++v) {
    int power = 1 - t.degree(v);
    for (int i = 0; i < -power; ++i) w /= g.degree(h[v]);
    for (int i = 0; i < power; ++i) w *= g.degree(h[v]);
  }
  return w;
}

/// Every spanning tree of a small graph, as edge lists.
inline std::vector<std::vector<Edge>> spanning_trees(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  const auto& e = g.edges();
  const int need = g.num_vertices() - 1;
  std::vector<Edge> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (static_cast<int>(pick.size()) == need) {
      Graph t(g.num_vertices(), pick);
      if (is_tree(t)) out.push_back(pick);
      return;
    }
    if (i == e.size() || static_cast<int>(pick.size() + (e.size() - i)) < need) return;
    pick.push_back(e[i]);
    choose(i + 1);
    pick.pop_back();
    choose(i + 1);
  };
  choose(0);
  return out;
}

/// All subsets of bags inducing a subtree.
inline std::vector<BagSubfamily> all_subtrees(const MarkovTree& m) {
  std::vector<BagSubfamily> out;
  for (unsigned mask = 1; mask < (1u << m.num_bags()); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < m.num_bags(); ++b)
      if (mask >> b & 1u) subset.push_back(b);
    if (connected_in_tree(m, subset)) out.emplace_back(std::move(subset));
  }
  return out;
}

}  // namespace sido::oracle
