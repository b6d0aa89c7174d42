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

#include <cstdint>

#include "sido/associated.hpp"
#include "sido/distribution.hpp"
#include "sido/homomorphism.hpp"

namespace sido {

/// max degree <= 4|E(g)|/|V(g)|, in exact integers.
inline bool degree_condition(const Graph& g) {
  return static_cast<long long>(max_degree(g)) * g.num_vertices() <= 4LL * g.num_edges();
}

/// 2|E(g)| / |V(g)|^2.
inline Rational edge_density(const Graph& g) {
  if (g.num_vertices() == 0) throw InvalidArgument("edge_density: empty graph");
  return Rational(2 * g.num_edges(), static_cast<long>(g.num_vertices()) * g.num_vertices());
}

inline Rational rational_pow(Rational base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

/// hom(h,g)/|V(g)|^|V(h)| − (2|E(g)|/|V(g)|²)^|E(h)|, exactly.
inline Rational sidorenko_check(const Graph& h, const Graph& g, const HomOptions& opts = {}) {
  if (g.num_edges() == 0) throw InvalidArgument("sidorenko_check: target has no edges");
  Rational density = Rational(mpz_class(hom_count(h, g, opts))) /
                     rational_pow(Rational(g.num_vertices()), h.num_vertices());
  Rational out = density - rational_pow(edge_density(g), h.num_edges());
  out.canonicalize();
  return out;
}

struct ForestBoundReport {
  std::uint64_t hom_count = 0;
  Rational bound;  // 2^e · n^v · (2|E|/n²)^e
  bool ok = false;
};

/// hom(f,g) <= 2^{e(f)} |V(g)|^{|V(f)|} (2|E(g)|/|V(g)|²)^{e(f)} for a forest f
/// and a target meeting the degree condition.
inline ForestBoundReport forest_hom_bound_check(const Graph& f, const Graph& g, const HomOptions& opts = {}) {
  if (!is_forest(f)) throw InvalidArgument("forest_hom_bound_check: source is not a forest");
  if (!degree_condition(g)) throw InvalidArgument("forest_hom_bound_check: target fails the degree condition");
  ForestBoundReport report;
  report.hom_count = hom_count(f, g, opts);
  report.bound = rational_pow(Rational(2), f.num_edges()) *
                 rational_pow(Rational(g.num_vertices()), f.num_vertices()) *
                 rational_pow(edge_density(g), f.num_edges());
  report.bound.canonicalize();
  report.ok = Rational(mpz_class(report.hom_count)) <= report.bound;
  return report;
}

struct BoundReport {
  double entropy_bits = 0.0;
  double rhs_bits = 0.0;  // e(H) log2(2|E|/n²) + v(H) log2 n, without c_H
  Rational rhs_exact;     // 2^{rhs_bits}
  double log_hom_bits = 0.0;
  std::uint64_t hom_count = 0;
  bool degree_ok = false;
  bool entropy_meets_rhs = false;  // informational only
  Rational sidorenko_gap;
  std::size_t support_size = 0;
};

/// Same as entropy_bound_report but without requiring the degree condition;
/// degree_ok records whether it holds.
inline BoundReport bound_report(const Graph& host, const Graph& g, const SparseDistribution& dist,
                                const HomOptions& opts = {}) {
  if (g.num_edges() == 0) throw InvalidArgument("bound_report: target has no edges");
  BoundReport r;
  r.degree_ok = degree_condition(g);
  r.entropy_bits = entropy(dist);
  r.support_size = dist.support_size();
  r.rhs_exact = rational_pow(Rational(g.num_vertices()), host.num_vertices()) *
                rational_pow(edge_density(g), host.num_edges());
  r.rhs_exact.canonicalize();
  r.rhs_bits = log2_rational(r.rhs_exact);
  r.hom_count = hom_count(host, g, opts);
  r.log_hom_bits = log2_rational(Rational(mpz_class(r.hom_count)));
  r.entropy_meets_rhs = r.entropy_bits >= r.rhs_bits - 1e-9;
  r.sidorenko_gap = sidorenko_check(host, g, opts);
  if (r.entropy_bits > r.log_hom_bits + 1e-9) {
    throw std::logic_error("bound_report: entropy exceeds log2 of the homomorphism count");
  }
  return r;
}

/// Entropy of the associated distribution against the Sidorenko-type lower
/// bound and the trivial upper bound log2 hom(H,G).
inline BoundReport entropy_bound_report(const StrongDecomposition& sd, const Graph& g, const HomOptions& opts = {}) {
  if (!degree_condition(g)) throw InvalidArgument("entropy_bound_report: target fails the degree condition");
  return bound_report(sd.host, g, associated_distribution(sd, g).dist, opts);
}

}  // namespace sido
