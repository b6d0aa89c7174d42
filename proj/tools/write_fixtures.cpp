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

// Regenerates the JSON files under fixtures/ from the builders in
// sido/fixtures.hpp. Usage: write_fixtures <fixtures-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "sido.hpp"
#include "sido/fixtures.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const sido::json& j) {
  fs::create_directories(path.parent_path());
  std::ofstream(path) << j.dump(2) << "\n";
}

sido::SparseDistribution uniform_ordered_edges(const sido::Graph& g, sido::VertexSet index_set) {
  sido::SparseDistribution::Masses w;
  for (auto [a, b] : g.edges()) {
    w[{a, b}] = 1;
    w[{b, a}] = 1;
  }
  return sido::SparseDistribution::from_weights(std::move(index_set), g.num_vertices(), w);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: write_fixtures <fixtures-dir>\n";
    return 2;
  }
  fs::path root = argv[1];
  namespace fx = sido::fixtures;

  for (const auto& [name, sd] : fx::valid_strong()) write(root / "decompositions" / (std::string(name) + ".json"), to_json(sd));

  write(root / "graphs" / "k2.json", to_json(sido::complete_graph(2)));
  write(root / "graphs" / "k3.json", to_json(sido::complete_graph(3)));
  write(root / "graphs" / "k4.json", to_json(sido::complete_graph(4)));
  write(root / "graphs" / "c4.json", to_json(sido::cycle_graph(4)));
  write(root / "graphs" / "path3.json", to_json(sido::path_graph(3)));
  write(root / "graphs" / "star5.json", to_json(sido::star_graph(5)));
  write(root / "graphs" / "edgeless3.json", to_json(sido::Graph(3, {})));
  write(root / "graphs" / "book.json", to_json(fx::book_graph()));

  sido::MarkovTree two_edges{3, {sido::VertexSet{0, 1}, sido::VertexSet{1, 2}}, {{0, 1}}};
  write(root / "markov" / "two_edges.json", to_json(two_edges));
  write(root / "distributions" / "k3_edges_01.json",
        to_json(uniform_ordered_edges(sido::complete_graph(3), sido::VertexSet{0, 1})));
  write(root / "distributions" / "k3_edges_12.json",
        to_json(uniform_ordered_edges(sido::complete_graph(3), sido::VertexSet{1, 2})));

  write(root / "negative" / "markov_running_intersection.json", to_json(fx::bad_running_intersection()));
  write(root / "negative" / "td_uncovered_edges.json", to_json(fx::bad_uncovered_edges()));
  write(root / "negative" / "strong_condition2_c4.json", to_json(fx::bad_condition2()));
  write(root / "negative" / "strong_condition3_c5.json", to_json(fx::bad_condition3()));
  std::ofstream(root / "negative" / "malformed.json") << "{\"n\": 3, \"edges\": [[0, 1],\n";
  return 0;
}
