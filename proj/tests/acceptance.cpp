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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and time limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "sido.hpp"
#include "sido/fixtures.hpp"

namespace {

using namespace sido;

constexpr double kEntropyTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Instance {
  MarkovTree markov;
  std::vector<SparseDistribution> dists;
};

// Shared by criteria 1, 2 and 4.
std::vector<Instance> random_instances(int count, int max_bags, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    MarkovTree m = random::markov_tree(random::uniform(rng, 1, max_bags), random::uniform(rng, 1, 6), rng);
    int target = random::uniform(rng, 1, 4);
    out.push_back({m, random::consistent_bag_dists(m, target, rng)});
  }
  return out;
}

int run(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = time_limit_s <= 0 || secs <= time_limit_s;
  bool ok = outcome.ok && in_time;
  std::printf("%s  [%2d] %s (%s; %.2f s", ok ? "PASS" : "FAIL", id, name, outcome.detail.c_str(), secs);
  if (time_limit_s > 0) std::printf(" of %.0f s", time_limit_s);
  std::printf(")\n");
  std::fflush(stdout);
  return ok ? 0 : 1;
}

Outcome entropy_identity() {
  auto instances = random_instances(200, 6, 101);
  double worst = 0;
  for (const auto& in : instances) {
    double joint = entropy(glue_markov_tree(in.markov, in.dists));
    worst = std::max(worst, std::abs(joint - tree_entropy_formula(in.markov, in.dists)));
  }
  std::ostringstream os;
  os << instances.size() << " instances, max |error| " << worst << " bits, tol " << kEntropyTol;
  return {worst <= kEntropyTol, os.str()};
}

Outcome glue_equals_junction() {
  auto instances = random_instances(200, 6, 101);
  int bad = 0;
  for (const auto& in : instances)
    if (!(glue_markov_tree(in.markov, in.dists) == junction_factorization(in.markov, in.dists))) ++bad;
  std::ostringstream os;
  os << instances.size() << " instances, " << bad << " exact mismatches";
  return {bad == 0, os.str()};
}

Outcome pair_conditional_independence() {
  std::mt19937 rng(202);
  int bad = 0, count = 100;
  for (int i = 0; i < count; ++i) {
    int target = random::uniform(rng, 1, 3);
    SparseDistribution p = random::joint(VertexSet{0, 1, 2, 3}, target, rng);
    VertexSet left_set = random::uniform(rng, 0, 1) ? VertexSet{0, 1, 2} : VertexSet{0, 1};
    SparseDistribution left = marginal(p, left_set);
    SparseDistribution right = marginal(p, VertexSet{1, 2, 3});
    SparseDistribution q = glue_pair(left, right);
    VertexSet shared = intersect(left_set, VertexSet{1, 2, 3});
    SparseDistribution mid = marginal(q, shared);
    bool ok = marginal(q, left_set) == left && marginal(q, right.index_set()) == right;
    Assignment y(4, 0);
    while (true) {
      Assignment yl, yr, ym;
      for (Vertex v : left_set) yl.push_back(y[v]);
      for (Vertex v : right.index_set()) yr.push_back(y[v]);
      for (Vertex v : shared) ym.push_back(y[v]);
      ok = ok && q.mass(y) * mid.mass(ym) == left.mass(yl) * right.mass(yr);
      std::size_t k = 0;
      while (k < 4 && ++y[k] == target) y[k++] = 0;
      if (k == 4) break;
    }
    if (!ok) ++bad;
  }
  std::ostringstream os;
  os << count << " pairs, " << bad << " failures (exact)";
  return {bad == 0, os.str()};
}

Outcome subtree_marginals() {
  auto instances = random_instances(100, 5, 303);
  int subtrees = 0, bad = 0;
  for (const auto& in : instances) {
    SparseDistribution full = glue_markov_tree(in.markov, in.dists);
    for (const auto& keep : oracle::all_subtrees(in.markov)) {
      MarkovSubtree sub = markov_subtree(in.markov, keep);
      std::vector<SparseDistribution> local;
      for (int i = 0; i < sub.tree.num_bags(); ++i) local.push_back(in.dists[keep[i]].renamed(sub.tree.bags[i]));
      ++subtrees;
      if (!(glue_markov_tree(sub.tree, local).renamed(sub.vertices) == marginal(full, sub.vertices))) ++bad;
    }
  }
  std::ostringstream os;
  os << instances.size() << " instances, " << subtrees << " subtrees, " << bad << " mismatches";
  return {bad == 0, os.str()};
}

Outcome minimum_covers() {
  std::mt19937 rng(404);
  int checked = 0, bad = 0;
  for (int trial = 0; checked < 300 && trial < 20000; ++trial) {
    TreeDecomposition d = random::tree_decomposition(random::uniform(rng, 2, 8), random::uniform(rng, 2, 8), rng);
    std::vector<int> pick;
    for (int v = 0; v < d.host.num_vertices(); ++v)
      if (rng() % 3 == 0) pick.push_back(v);
    VertexSet u(pick);
    if (u.empty() || !common_bags(d.markov, u).empty()) continue;
    ++checked;
    auto want = oracle::minimum_cover(d.markov, u);
    auto got = minimum_covering_subfamily(d, u);
    if (!want || !want->unique || !want->contained_in_all_good || got.items() != want->family) ++bad;
  }
  std::ostringstream os;
  os << checked << " covers, " << bad << " disagree with brute force or are not unique";
  return {checked >= 100 && bad == 0, os.str()};
}

Outcome helly() {
  std::mt19937 rng(505);
  int subtree_bad = 0, families = 0, helly_bad = 0;
  for (int trial = 0; trial < 300; ++trial) {
    MarkovTree m = random::markov_tree(random::uniform(rng, 1, 8), random::uniform(rng, 1, 8), rng);
    for (int v = 0; v < m.ground_size; ++v)
      if (!oracle::connected_in_tree(m, bags_containing(m, v).items())) ++subtree_bad;
    std::vector<BagSubfamily> fams;
    int count = random::uniform(rng, 1, 4);
    for (int i = 0; i < count; ++i) fams.push_back(random::random_subtree(m, rng, m.num_bags()));
    bool pairwise = true;
    for (std::size_t i = 0; i < fams.size(); ++i)
      for (std::size_t j = i + 1; j < fams.size(); ++j) pairwise = pairwise && !intersect(fams[i], fams[j]).empty();
    auto got = helly_intersection(m, fams);
    auto want = oracle::common_bag(m.num_bags(), fams);
    ++families;
    if (pairwise ? (!got || got != want) : got.has_value()) ++helly_bad;
  }
  std::ostringstream os;
  os << subtree_bad << " non-subtree vertex families; " << families << " Helly families, " << helly_bad
     << " mismatches";
  return {subtree_bad == 0 && helly_bad == 0 && families >= 100, os.str()};
}

Outcome four_cycle_figures() {
  AssociatedDistribution a = associated_distribution(fixtures::c4(), complete_graph(3));
  int small = 0, large = 0;
  for (const auto& [h, mass] : a.dist.masses()) {
    small += mass == Rational(1, 24);
    large += mass == Rational(1, 12);
  }
  BoundReport r = entropy_bound_report(fixtures::c4(), complete_graph(3));
  bool ok = a.dist.support_size() == 18 && small == 12 && large == 6 &&
            std::abs(r.entropy_bits - 4.0849625007) <= kEntropyTol &&
            std::abs(r.log_hom_bits - 4.1699250014) <= kEntropyTol && r.rhs_exact == 16 &&
            r.sidorenko_gap == Rational(2, 81);
  std::ostringstream os;
  os.precision(12);
  os << a.dist.support_size() << " atoms (" << small << " x 1/24, " << large << " x 1/12), H=" << r.entropy_bits
     << ", log2 hom=" << r.log_hom_bits << ", rhs=" << r.rhs_bits << ", gap=" << r.sidorenko_gap.get_str();
  return {ok, os.str()};
}

Outcome projection_and_transport() {
  int checks = 0, bad = 0;
  for (const auto& [name, sd] : fixtures::valid_strong()) {
    const MarkovTree& m = sd.is_base() ? sd.base().line_tree : sd.composite().decomp.markov;
    std::vector<VertexSet> sets(m.bags.begin(), m.bags.end());
    for (int a = 0; a < m.num_bags(); ++a)
      for (int b = a + 1; b < m.num_bags(); ++b)
        if (auto s = intersect(m.bags[a], m.bags[b]); !s.empty()) sets.push_back(s);
    for (const auto& g : connected_targets(4)) {
      auto full = associated_distribution(sd, g);
      for (const auto& s : sets) {
        ++checks;
        if (!projection_consistency_check(sd, g, s, full).ok) ++bad;
      }
    }
  }
  const StrongDecomposition c4 = fixtures::c4();
  const auto& children = c4.composite().children;
  int transport_bad = 0;
  for (const auto& g : connected_targets(4))
    if (!isomorphism_transport_check(children[0], children[1], {0, 2, 1}, g).ok) ++transport_bad;
  std::ostringstream os;
  os << checks << " projections, " << bad << " failures; transport failures " << transport_bad;
  return {bad == 0 && transport_bad == 0, os.str()};
}

Outcome sweep_gaps() {
  int pairs = 0, negative = 0;
  for (const auto& [name, sd] : fixtures::valid_strong())
    for (const auto& g : connected_targets(5)) {
      ++pairs;
      if (sgn(sidorenko_check(sd.host, g)) < 0) ++negative;
    }
  std::ostringstream os;
  os << pairs << " pairs, " << negative << " negative gaps";
  return {negative == 0, os.str()};
}

Outcome forest_bounds() {
  int pairs = 0, bad = 0;
  for (const auto& f : small_forests(5))
    for (const auto& g : all_small_graphs(5)) {
      if (!degree_condition(g)) continue;
      ++pairs;
      if (!forest_hom_bound_check(f, g).ok) ++bad;
    }
  std::ostringstream os;
  os << pairs << " pairs, " << bad << " violations";
  return {bad == 0, os.str()};
}

Outcome entropy_upper_bound() {
  int pairs = 0, bad = 0;
  double worst = -1e300;
  for (const auto& [name, sd] : fixtures::valid_strong())
    for (const auto& g : connected_targets(5)) {
      ++pairs;
      double h = entropy(associated_distribution(sd, g).dist);
      double log_hom = std::log2(static_cast<double>(hom_count(sd.host, g)));
      worst = std::max(worst, h - log_hom);
      if (h > log_hom + kEntropyTol) ++bad;
    }
  std::ostringstream os;
  os << pairs << " pairs, max H - log2 hom = " << worst << ", tol " << kEntropyTol;
  return {bad == 0, os.str()};
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "entropy of glued tree equals bag-minus-overlap formula", 10, entropy_identity);
  failures += run(2, "leaf-elimination glue equals junction product", 0, glue_equals_junction);
  failures += run(3, "pair glue: conditional independence and marginals", 0, pair_conditional_independence);
  failures += run(4, "glue over every subtree equals the marginal", 0, subtree_marginals);
  failures += run(5, "minimum covering subfamily matches brute force, unique", 10, minimum_covers);
  failures += run(6, "vertex bag families are subtrees; Helly intersection", 0, helly);
  failures += run(7, "C4 on K3 exact figures", 0, four_cycle_figures);
  failures += run(8, "projection consistency and isomorphism transport", 0, projection_and_transport);
  failures += run(9, "Sidorenko gap nonnegative on connected targets up to 5 vertices", 60, sweep_gaps);
  failures += run(10, "forest homomorphism bound under the degree condition", 60, forest_bounds);
  failures += run(11, "associated entropy at most log2 hom", 0, entropy_upper_bound);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
