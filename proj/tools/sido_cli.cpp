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

// Command-line front end. Exit codes: 0 success, 1 semantic failure
// (validation, failed check, precondition), 2 unreadable or malformed input.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sido.hpp"

namespace {

using sido::json;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitInput = 2;
constexpr int kMaxSweepVertices = 6;

/// Input could not be read or parsed.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A well-formed input that fails its own validator.
struct InvalidInput : std::runtime_error {
  InvalidInput(const std::string& what, json report) : std::runtime_error(what), report(std::move(report)) {}
  json report;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <typename F>
auto parse_as(const std::string& path, F&& parse) {
  json j = read_json(path);
  try {
    return parse(j);
  } catch (const sido::FormatError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

enum class Kind { kGraph, kMarkovTree, kTreeDecomposition, kStrong, kDistribution, kUnknown };

Kind detect(const json& j) {
  if (!j.is_object()) return Kind::kUnknown;
  if (j.contains("level") && j.contains("payload")) return Kind::kStrong;
  if (j.contains("host") && j.contains("markov")) return Kind::kTreeDecomposition;
  if (j.contains("ground_size") && j.contains("bags")) return Kind::kMarkovTree;
  if (j.contains("index_set") && j.contains("mass")) return Kind::kDistribution;
  if (j.contains("n") && j.contains("edges")) return Kind::kGraph;
  return Kind::kUnknown;
}

sido::StrongDecomposition load_strong(const std::string& path) {
  auto sd = parse_as(path, sido::strong_decomposition_from_json);
  auto report = sido::validate_strong(sd);
  if (!report.ok()) throw InvalidInput(path + ": decomposition fails validation", sido::to_json(report));
  return sd;
}

sido::Graph load_graph(const std::string& path) { return parse_as(path, sido::graph_from_json); }

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

int cmd_validate(const std::string& path) {
  json doc = read_json(path);
  sido::ValidationReport report;
  try {
    switch (detect(doc)) {
      case Kind::kStrong:
        report = sido::validate_strong(sido::strong_decomposition_from_json(doc));
        break;
      case Kind::kTreeDecomposition:
        report = sido::validate_tree_decomposition(sido::tree_decomposition_from_json(doc));
        break;
      case Kind::kMarkovTree:
        report = sido::validate_markov_tree(sido::markov_tree_from_json(doc));
        break;
      case Kind::kGraph:
        sido::graph_from_json(doc);
        break;
      case Kind::kDistribution:
        sido::distribution_from_json(doc);
        break;
      case Kind::kUnknown:
        throw InputError(path + ": unrecognized document kind");
    }
  } catch (const sido::FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
  std::cout << sido::to_json(report).dump(2) << "\n";
  return report.ok() ? kExitOk : kExitSemantic;
}

json steps_json(const std::vector<sido::GlueStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"path", s.path},
                   {"level", s.level},
                   {"joint_entropy_bits", sido::detail::round12(s.joint_entropy)},
                   {"formula_entropy_bits", sido::detail::round12(s.formula_entropy)}});
  }
  return out;
}

int cmd_assoc(const std::string& decomp_path, const std::string& target_path, const std::string& out_path) {
  auto sd = load_strong(decomp_path);
  auto g = load_graph(target_path);
  if (g.num_edges() == 0) throw std::invalid_argument("target has no edges");
  auto assoc = sido::associated_distribution(sd, g);
  json result = {{"atoms", assoc.dist.support_size()},
                 {"report", sido::to_json(sido::bound_report(sd.host, g, assoc.dist))},
                 {"glue_steps", steps_json(assoc.steps)}};
  if (out_path.empty()) {
    result["distribution"] = sido::to_json(assoc.dist);
  } else {
    emit(sido::to_json(assoc.dist), out_path);
    result["distribution_file"] = out_path;
  }
  std::cout << result.dump(2) << "\n";
  return kExitOk;
}

int cmd_glue(const std::string& markov_path, const std::vector<std::string>& dist_paths, unsigned seed,
             int target_size, const std::string& out_path) {
  auto m = parse_as(markov_path, sido::markov_tree_from_json);
  auto report = sido::validate_markov_tree(m);
  if (!report.ok()) throw InvalidInput(markov_path + ": Markov tree fails validation", sido::to_json(report));

  std::vector<sido::SparseDistribution> dists;
  if (dist_paths.empty()) {
    std::mt19937 rng(seed);
    dists = sido::random::consistent_bag_dists(m, target_size, rng);
  } else {
    for (const auto& p : dist_paths) dists.push_back(parse_as(p, sido::distribution_from_json));
  }

  auto consistency = sido::check_marginal_consistency(m, dists);
  if (!consistency.ok()) {
    std::cout << json{{"consistency", sido::to_json(consistency)}}.dump(2) << "\n";
    return kExitSemantic;
  }
  auto joint = sido::glue_markov_tree(m, dists);
  json result = {{"consistency", sido::to_json(consistency)},
                 {"entropy_bits", sido::detail::round12(sido::entropy(joint))},
                 {"formula_bits", sido::detail::round12(sido::tree_entropy_formula(m, dists))},
                 {"atoms", joint.support_size()}};
  if (out_path.empty()) {
    result["distribution"] = sido::to_json(joint);
  } else {
    emit(sido::to_json(joint), out_path);
    result["distribution_file"] = out_path;
  }
  std::cout << result.dump(2) << "\n";
  return kExitOk;
}

int cmd_min_subdec(const std::string& decomp_path, const std::vector<int>& u, const std::string& out_path) {
  auto sd = load_strong(decomp_path);
  emit(sido::to_json(sido::minimum_subdecomposition(sd, sido::VertexSet(u))), out_path);
  return kExitOk;
}

std::string graph_label(const sido::Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << " {";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    os << (i ? " " : "") << g.edges()[i].first << g.edges()[i].second;
  }
  os << "}";
  return os.str();
}

int cmd_sweep(const std::string& decomp_path, int max_n, const std::string& format) {
  if (max_n < 2 || max_n > kMaxSweepVertices) {
    throw InputError("--max-n must be between 2 and " + std::to_string(kMaxSweepVertices));
  }
  auto sd = load_strong(decomp_path);
  bool all_nonnegative = true;
  json rows = json::array();
  for (const auto& g : sido::connected_targets(max_n)) {
    sido::Rational gap = sido::sidorenko_check(sd.host, g);
    all_nonnegative &= sgn(gap) >= 0;
    rows.push_back({{"target", sido::to_json(g)},
                    {"hom_count", sido::hom_count(sd.host, g)},
                    {"gap", sido::to_json(gap)},
                    {"degree_ok", sido::degree_condition(g)}});
  }
  if (format == "json") {
    std::cout << json{{"rows", rows}, {"all_nonnegative", all_nonnegative}}.dump(2) << "\n";
  } else {
    std::cout << "target\thom\tgap\tdegree_ok\n";
    for (const auto& row : rows) {
      auto g = sido::graph_from_json(row["target"]);
      std::cout << graph_label(g) << "\t" << row["hom_count"].get<std::uint64_t>() << "\t"
                << sido::rational_from_json(row["gap"]).get_str() << "\t"
                << (row["degree_ok"].get<bool>() ? "yes" : "no") << "\n";
    }
    std::cout << (all_nonnegative ? "all gaps nonnegative" : "NEGATIVE GAP FOUND") << "\n";
  }
  return all_nonnegative ? kExitOk : kExitSemantic;
}

int cmd_entropy_report(const std::string& decomp_path, const std::string& target_path) {
  auto sd = load_strong(decomp_path);
  auto g = load_graph(target_path);
  std::cout << sido::to_json(sido::entropy_bound_report(sd, g)).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov-tree gluing, strong tree decompositions and entropy bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format (json|text)")->check(CLI::IsMember({"json", "text"}));

  std::string path, target, out;
  std::vector<std::string> dists;
  std::vector<int> u;
  int max_n = 4;
  unsigned seed = 1;
  int target_size = 3;

  auto* validate = app.add_subcommand("validate", "Validate a graph, Markov tree, tree or strong decomposition");
  validate->add_option("path", path)->required();

  auto* assoc = app.add_subcommand("assoc", "Associated distribution of a decomposition on a target graph");
  assoc->add_option("decomposition", path)->required();
  assoc->add_option("target", target)->required();
  assoc->add_option("--out", out, "Write the distribution here");

  auto* glue = app.add_subcommand("glue", "Glue bag distributions along a Markov tree");
  glue->add_option("markov", path)->required();
  glue->add_option("distributions", dists, "One distribution per bag (random if omitted)");
  glue->add_option("--seed", seed, "Seed for random bag distributions");
  glue->add_option("--target-size", target_size, "Value range for random bag distributions")
      ->check(CLI::Range(1, 6));
  glue->add_option("--out", out, "Write the joint distribution here");

  auto* minsub = app.add_subcommand("min-subdec", "Minimum sub-decomposition containing a vertex set");
  minsub->add_option("decomposition", path)->required();
  minsub->add_option("--u", u, "Vertices, comma separated")->required()->delimiter(',');
  minsub->add_option("--out", out);

  auto* sweep = app.add_subcommand("sidorenko-sweep", "Sidorenko gap against every small connected target");
  sweep->add_option("decomposition", path)->required();
  sweep->add_option("--max-n", max_n, "Largest target vertex count");

  auto* report = app.add_subcommand("entropy-report", "Entropy of the associated distribution against the bounds");
  report->add_option("decomposition", path)->required();
  report->add_option("target", target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*assoc) return cmd_assoc(path, target, out);
    if (*glue) return cmd_glue(path, dists, seed, target_size, out);
    if (*minsub) return cmd_min_subdec(path, u, out);
    if (*sweep) return cmd_sweep(path, max_n, format);
    if (*report) return cmd_entropy_report(path, target);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidInput& e) {
    std::cout << e.report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const sido::CheckFailure& e) {
    std::cout << json{{"error", e.what()}, {"witness", e.witness()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const sido::SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitInput;
}
