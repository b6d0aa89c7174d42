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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sido/associated.hpp"
#include "sido/bounds.hpp"
#include "sido/distribution.hpp"
#include "sido/graph.hpp"
#include "sido/markov_tree.hpp"
#include "sido/strong_decomposition.hpp"
#include "sido/tree_decomposition.hpp"
#include "sido/validation.hpp"

// JSON encodings. Objects are nlohmann::json with sorted keys, so dumping
// the same value always yields the same bytes.

namespace sido {

using nlohmann::json;

/// Thrown for documents that are well-formed JSON but not the expected shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

inline std::vector<Edge> pair_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<Edge> out;
  for (const auto& p : j) {
    auto xs = int_list(p, what);
    if (xs.size() != 2) throw FormatError(std::string(what) + " entries must be pairs");
    out.emplace_back(xs[0], xs[1]);
  }
  return out;
}

inline json pairs_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

inline double round12(double x) { return std::round(x * 1e12) / 1e12; }

}  // namespace detail

// Graph: {"n": int, "edges": [[u,v],...]} with u<v, sorted.

inline json to_json(const Graph& g) { return {{"n", g.num_vertices()}, {"edges", detail::pairs_to_json(g.edges())}}; }

inline Graph graph_from_json(const json& j) {
  try {
    return Graph(detail::as_int(detail::field(j, "n"), "n"), detail::pair_list(detail::field(j, "edges"), "edges"));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

// MarkovTree: {"ground_size": k, "bags": [[...],...], "tree": [[i,j],...]}.

inline json to_json(const MarkovTree& m) {
  json bags = json::array();
  for (const auto& b : m.bags) bags.push_back(b.items());
  return {{"ground_size", m.ground_size}, {"bags", bags}, {"tree", detail::pairs_to_json(m.tree)}};
}

inline MarkovTree markov_tree_from_json(const json& j) {
  MarkovTree m;
  m.ground_size = detail::as_int(detail::field(j, "ground_size"), "ground_size");
  const json& bags = detail::field(j, "bags");
  if (!bags.is_array()) throw FormatError("bags must be an array");
  for (const auto& b : bags) {
    auto items = detail::int_list(b, "bag");
    for (int v : items)
      if (v < 0) throw FormatError("bag elements must be nonnegative");
    m.bags.emplace_back(std::move(items));
  }
  m.tree = detail::pair_list(detail::field(j, "tree"), "tree");
  return m;
}

// TreeDecomposition: {"host": Graph, "markov": MarkovTree}.

inline json to_json(const TreeDecomposition& d) { return {{"host", to_json(d.host)}, {"markov", to_json(d.markov)}}; }

inline TreeDecomposition tree_decomposition_from_json(const json& j) {
  return {graph_from_json(detail::field(j, "host")), markov_tree_from_json(detail::field(j, "markov"))};
}

// StrongDecomposition: {"level": k, "host": Graph,
//   "payload": {"base": MarkovTree} | {"decomp": TreeDecomposition, "children": [...]}}.

inline json to_json(const StrongDecomposition& sd) {
  json payload;
  if (sd.is_base()) {
    payload["base"] = to_json(sd.base().line_tree);
  } else {
    payload["decomp"] = to_json(sd.composite().decomp);
    json children = json::array();
    for (const auto& c : sd.composite().children) children.push_back(to_json(c));
    payload["children"] = std::move(children);
  }
  return {{"level", sd.level}, {"host", to_json(sd.host)}, {"payload", std::move(payload)}};
}

inline StrongDecomposition strong_decomposition_from_json(const json& j) {
  StrongDecomposition sd;
  sd.level = detail::as_int(detail::field(j, "level"), "level");
  sd.host = graph_from_json(detail::field(j, "host"));
  const json& payload = detail::field(j, "payload");
  if (payload.is_object() && payload.contains("base")) {
    sd.payload = BasePayload{markov_tree_from_json(payload.at("base"))};
  } else {
    CompositePayload c;
    c.decomp = tree_decomposition_from_json(detail::field(payload, "decomp"));
    const json& children = detail::field(payload, "children");
    if (!children.is_array()) throw FormatError("children must be an array");
    for (const auto& child : children) c.children.push_back(strong_decomposition_from_json(child));
    sd.payload = std::move(c);
  }
  return sd;
}

inline json to_json(const SubDecomposition& sub) {
  return {{"vertices", sub.vertices.items()}, {"decomposition", to_json(sub.decomp)}};
}

// SparseDistribution: {"index_set": [...], "target_size": n,
//   "mass": [{"key": [...], "num": "..", "den": ".."}, ...]} with keys sorted.

inline json to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const json& j) {
  const json& num = detail::field(j, "num");
  const json& den = detail::field(j, "den");
  if (!num.is_string() || !den.is_string()) throw FormatError("num/den must be strings");
  mpz_class n, d;
  if (n.set_str(num.get<std::string>(), 10) != 0 || d.set_str(den.get<std::string>(), 10) != 0) {
    throw FormatError("num/den must be decimal integers");
  }
  if (d == 0) throw FormatError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline json to_json(const SparseDistribution& p) {
  json mass = json::array();
  for (const auto& [key, q] : p.masses()) {
    json atom = to_json(q);
    atom["key"] = key;
    mass.push_back(std::move(atom));
  }
  return {{"index_set", p.index_set().items()}, {"target_size", p.target_size()}, {"mass", std::move(mass)}};
}

inline SparseDistribution distribution_from_json(const json& j) {
  VertexSet index_set(detail::int_list(detail::field(j, "index_set"), "index_set"));
  int target = detail::as_int(detail::field(j, "target_size"), "target_size");
  const json& mass = detail::field(j, "mass");
  if (!mass.is_array()) throw FormatError("mass must be an array");
  SparseDistribution::Masses masses;
  for (const auto& atom : mass) {
    auto key = detail::int_list(detail::field(atom, "key"), "key");
    if (!masses.emplace(std::move(key), rational_from_json(atom)).second) throw FormatError("duplicate key");
  }
  try {
    return SparseDistribution(std::move(index_set), target, std::move(masses));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

// Reports.

inline json to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"kind", v.kind}, {"witness", v.witness}});
  return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

inline json to_json(const BoundReport& r) {
  return {{"entropy_bits", detail::round12(r.entropy_bits)},
          {"rhs_bits", detail::round12(r.rhs_bits)},
          {"rhs_exact", r.rhs_exact.get_str()},
          {"log_hom_bits", detail::round12(r.log_hom_bits)},
          {"hom_count", r.hom_count},
          {"degree_ok", r.degree_ok},
          {"entropy_meets_rhs", r.entropy_meets_rhs},
          {"sidorenko_gap", to_json(r.sidorenko_gap)},
          {"support_size", r.support_size}};
}

inline json to_json(const ConsistencyReport& r) {
  json edges = json::array();
  for (const auto& e : r.edges) {
    json row = {{"edge", {e.edge.first, e.edge.second}}, {"shared", e.shared.items()}, {"ok", e.ok}};
    if (e.witness) row["witness"] = *e.witness;
    edges.push_back(std::move(row));
  }
  return {{"ok", r.ok()}, {"edges", std::move(edges)}};
}

}  // namespace sido
