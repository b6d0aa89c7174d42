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
#include <map>
#include <optional>
#include <vector>

#include "sido/graph.hpp"
#include "sido/homomorphism.hpp"

namespace sido {

/// Partial injective map V(h1) -> V(h2).
using Pin = std::map<Vertex, Vertex>;

namespace detail {

/// Visits every isomorphism h1 -> h2 that extends `pin` and satisfies
/// `allowed(v, x)` for each assignment v -> x. Vertices of h1 are placed in
/// ascending order and images tried in ascending order, so the visiting order
/// is lexicographic. `visit` returns false to stop the search.
inline void for_each_isomorphism(const Graph& h1, const Graph& h2, const Pin& pin,
                                 const std::function<bool(Vertex, Vertex)>& allowed,
                                 const std::function<bool(const VertexMap&)>& visit) {
  const int n = h1.num_vertices();
  if (n != h2.num_vertices() || h1.num_edges() != h2.num_edges()) return;

  std::vector<int> deg1(static_cast<std::size_t>(n)), deg2(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    deg1[v] = h1.degree(v);
    deg2[v] = h2.degree(v);
  }
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return;
  }

  std::vector<bool> pinned_target(static_cast<std::size_t>(n), false);
  for (auto [v, x] : pin) {
    if (v < 0 || v >= n || x < 0 || x >= n) return;
    if (pinned_target[x]) throw InvalidArgument("isomorphism search: pin is not injective");
    pinned_target[x] = true;
  }

  VertexMap map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool stop = false;

  auto consistent = [&](Vertex v, Vertex x) {
    if (deg1[v] != deg2[x] || !allowed(v, x)) return false;
    for (Vertex u = 0; u < v; ++u) {
      if (h1.adjacent(u, v) != h2.adjacent(map[u], x)) return false;
    }
    return true;
  };

  std::function<void(Vertex)> place = [&](Vertex v) {
    if (v == n) {
      stop = !visit(map);
      return;
    }
    auto fixed = pin.find(v);
    if (fixed != pin.end()) {
      Vertex x = fixed->second;
      if (used[x] || !consistent(v, x)) return;
      map[v] = x;
      used[x] = true;
      place(v + 1);
      used[x] = false;
      return;
    }
    for (Vertex x = 0; x < n && !stop; ++x) {
      if (used[x] || pinned_target[x] || !consistent(v, x)) continue;
      map[v] = x;
      used[x] = true;
      place(v + 1);
      used[x] = false;
    }
  };
  place(0);
}

}  // namespace detail

/// Both directions of adjacency are preserved by the bijection `map`.
inline bool is_isomorphism(const Graph& h1, const Graph& h2, const VertexMap& map) {
  const int n = h1.num_vertices();
  if (n != h2.num_vertices() || static_cast<int>(map.size()) != n || h1.num_edges() != h2.num_edges()) {
    return false;
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Vertex x : map) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (auto [u, v] : h1.edges()) {
    if (!h2.adjacent(map[u], map[v])) return false;
  }
  return true;
}

/// First isomorphism h1 -> h2 extending `pin` in lexicographic backtracking
/// order, or nullopt.
inline std::optional<VertexMap> find_isomorphism_pinned(const Graph& h1, const Graph& h2, const Pin& pin = {}) {
  std::optional<VertexMap> found;
  detail::for_each_isomorphism(
      h1, h2, pin, [](Vertex, Vertex) { return true; },
      [&](const VertexMap& m) {
        found = m;
        return false;
      });
  if (found && !is_isomorphism(h1, h2, *found)) {
    throw std::logic_error("find_isomorphism_pinned: search produced a non-isomorphism");
  }
  return found;
}

}  // namespace sido
