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

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sido/graph.hpp"

namespace sido {

/// Total map source-vertex -> target-vertex.
using VertexMap = std::vector<Vertex>;

struct HomOptions {
  /// Upper bound on |V(g)|^|V(h)| before brute-force enumeration is refused.
  double candidate_cap = 1e8;
};

inline bool is_homomorphism(const Graph& h, const Graph& g, const VertexMap& map) {
  if (static_cast<int>(map.size()) != h.num_vertices()) return false;
  for (Vertex x : map) {
    if (x < 0 || x >= g.num_vertices()) return false;
  }
  for (auto [u, v] : h.edges()) {
    if (!g.adjacent(map[u], map[v])) return false;
  }
  return true;
}

namespace detail {

inline void check_hom_size(const Graph& h, const Graph& g, const HomOptions& opts) {
  if (h.num_vertices() == 0) throw InvalidArgument("hom enumeration: source graph has no vertices");
  double candidates = std::pow(static_cast<double>(g.num_vertices()), h.num_vertices());
  if (candidates > opts.candidate_cap) {
    throw SizeCapExceeded("hom enumeration: " + std::to_string(g.num_vertices()) + "^" +
                          std::to_string(h.num_vertices()) + " candidate maps exceed the cap");
  }
}

/// Backtracks over h's vertices in ascending order; only edges to
/// already-placed (lower) neighbours are checked. `visit` sees maps in
/// lexicographic order and may return false to stop.
inline void for_each_hom(const Graph& h, const Graph& g, const std::function<bool(const VertexMap&)>& visit) {
  const int nh = h.num_vertices();
  std::vector<std::vector<Vertex>> lower(static_cast<std::size_t>(nh));
  for (auto [u, v] : h.edges()) lower[v].push_back(u);

  VertexMap map(static_cast<std::size_t>(nh), 0);
  bool stop = false;
  std::function<void(int)> place = [&](int i) {
    if (i == nh) {
      stop = !visit(map);
      return;
    }
    for (Vertex x = 0; x < g.num_vertices() && !stop; ++x) {
      bool ok = true;
      for (Vertex u : lower[i]) {
        if (!g.adjacent(map[u], x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[i] = x;
      place(i + 1);
    }
  };
  place(0);
}

}  // namespace detail

/// All homomorphisms h -> g in lexicographic order of the map tuple.
inline std::vector<VertexMap> enumerate_homs(const Graph& h, const Graph& g, const HomOptions& opts = {}) {
  detail::check_hom_size(h, g, opts);
  std::vector<VertexMap> out;
  detail::for_each_hom(h, g, [&](const VertexMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline std::uint64_t hom_count(const Graph& h, const Graph& g, const HomOptions& opts = {}) {
  detail::check_hom_size(h, g, opts);
  std::uint64_t count = 0;
  detail::for_each_hom(h, g, [&](const VertexMap&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace sido
