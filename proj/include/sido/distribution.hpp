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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sido/errors.hpp"
#include "sido/graph.hpp"

namespace sido {

using Rational = mpq_class;

/// Values assigned to the indices of a distribution, in index-set order.
using Assignment = std::vector<Vertex>;

/// Exact probability mass function over assignments index_set -> [0, target_size).
/// Only atoms with positive mass are stored; keys iterate in sorted order.
class SparseDistribution {
 public:
  using Masses = std::map<Assignment, Rational>;

  SparseDistribution() : SparseDistribution(VertexSet{}, 1, Masses{{Assignment{}, Rational(1)}}) {}

  SparseDistribution(VertexSet index_set, int target_size, Masses masses)
      : index_set_(std::move(index_set)), target_size_(target_size), masses_(std::move(masses)) {
    if (target_size_ < 1) throw InvalidArgument("SparseDistribution: target size must be positive");
    Rational total = 0;
    for (auto& [key, p] : masses_) {
      if (key.size() != index_set_.size()) throw InvalidArgument("SparseDistribution: key has wrong length");
      for (Vertex x : key) {
        if (x < 0 || x >= target_size_) throw InvalidArgument("SparseDistribution: key value out of range");
      }
      p.canonicalize();
      if (sgn(p) <= 0) throw InvalidArgument("SparseDistribution: non-positive mass");
      total += p;
    }
    if (total != 1) throw InvalidArgument("SparseDistribution: masses sum to " + total.get_str() + ", not 1");
  }

  /// Normalizes nonnegative weights; zero weights are dropped.
  static SparseDistribution from_weights(VertexSet index_set, int target_size, const Masses& weights) {
    Rational total = 0;
    for (const auto& [key, w] : weights) {
      if (sgn(w) < 0) throw InvalidArgument("from_weights: negative weight");
      total += w;
    }
    if (sgn(total) == 0) throw InvalidArgument("from_weights: all weights are zero");
    Masses masses;
    for (const auto& [key, w] : weights)
      if (sgn(w) > 0) masses.emplace(key, Rational(w / total));
    return SparseDistribution(std::move(index_set), target_size, std::move(masses));
  }

  const VertexSet& index_set() const noexcept { return index_set_; }
  int target_size() const noexcept { return target_size_; }
  const Masses& masses() const noexcept { return masses_; }
  std::size_t support_size() const noexcept { return masses_.size(); }

  Rational mass(const Assignment& key) const {
    auto it = masses_.find(key);
    return it == masses_.end() ? Rational(0) : it->second;
  }

  /// Same masses over a different index set of equal size (position i of
  /// every key now refers to new_index_set[i]).
  SparseDistribution renamed(VertexSet new_index_set) const {
    if (new_index_set.size() != index_set_.size()) throw InvalidArgument("renamed: index set size differs");
    return SparseDistribution(std::move(new_index_set), target_size_, masses_);
  }

  friend bool operator==(const SparseDistribution& a, const SparseDistribution& b) {
    return a.index_set_ == b.index_set_ && a.target_size_ == b.target_size_ && a.masses_ == b.masses_;
  }

 private:
  VertexSet index_set_;
  int target_size_;
  Masses masses_;
};

/// log2 of a positive rational, accurate for numerators and denominators far
/// beyond double range.
inline double log2_rational(const Rational& q) {
  if (sgn(q) <= 0) throw InvalidArgument("log2_rational: non-positive argument");
  auto log2_int = [](const mpz_class& z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
  };
  return log2_int(q.get_num()) - log2_int(q.get_den());
}

namespace detail {

inline Assignment restrict_key(const Assignment& key, const std::vector<int>& positions) {
  Assignment out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(key[p]);
  return out;
}

inline std::vector<int> positions_in(const VertexSet& outer, const VertexSet& inner) {
  std::vector<int> pos;
  for (Vertex v : inner) pos.push_back(outer.index_of(v));
  return pos;
}

}  // namespace detail

/// Projection onto a subset of the indices: sums mass over all extensions.
inline SparseDistribution marginal(const SparseDistribution& p, const VertexSet& s) {
  if (!s.is_subset_of(p.index_set())) throw InvalidArgument("marginal: set is not inside the index set");
  auto pos = detail::positions_in(p.index_set(), s);
  SparseDistribution::Masses out;
  for (const auto& [key, mass] : p.masses()) out[detail::restrict_key(key, pos)] += mass;
  return SparseDistribution(s, p.target_size(), std::move(out));
}

/// Shannon entropy in bits, summed in key order.
inline double entropy(const SparseDistribution& p) {
  double h = 0.0;
  for (const auto& [key, mass] : p.masses()) {
    double x = mass.get_d();
    h -= x * std::log2(x);
  }
  return h < 0.0 ? 0.0 : h;
}

/// First assignment on which two distributions over the same index set
/// differ, if any.
inline std::optional<Assignment> first_difference(const SparseDistribution& a, const SparseDistribution& b) {
  auto ia = a.masses().begin();
  auto ib = b.masses().begin();
  while (ia != a.masses().end() || ib != b.masses().end()) {
    if (ib == b.masses().end() || (ia != a.masses().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.masses().end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

/// Conditionally independent coupling of two distributions over their shared
/// indices: q(y) = p12(y12) p23(y23) / m(y_shared). The shared marginals must
/// agree exactly; an empty overlap gives the product.
inline SparseDistribution glue_pair(const SparseDistribution& p12, const SparseDistribution& p23) {
  if (p12.target_size() != p23.target_size()) throw InvalidArgument("glue_pair: target sizes differ");
  VertexSet shared = intersect(p12.index_set(), p23.index_set());
  SparseDistribution m12 = marginal(p12, shared);
  SparseDistribution m23 = marginal(p23, shared);
  if (auto diff = first_difference(m12, m23)) {
    throw MarginalMismatch("glue_pair: shared marginals differ",
                           {{"shared", shared.items()}, {"assignment", *diff},
                            {"left", m12.mass(*diff).get_str()}, {"right", m23.mass(*diff).get_str()}});
  }

  VertexSet joint = unite(p12.index_set(), p23.index_set());
  auto shared_in_12 = detail::positions_in(p12.index_set(), shared);
  auto shared_in_23 = detail::positions_in(p23.index_set(), shared);

  std::map<Assignment, std::vector<const std::pair<const Assignment, Rational>*>> right_by_shared;
  for (const auto& atom : p23.masses()) right_by_shared[detail::restrict_key(atom.first, shared_in_23)].push_back(&atom);

  SparseDistribution::Masses out;
  Assignment key(joint.size());
  for (const auto& [k12, mass12] : p12.masses()) {
    Assignment s = detail::restrict_key(k12, shared_in_12);
    Rational scale = mass12 / m12.mass(s);
    for (const auto* atom : right_by_shared[s]) {
      for (std::size_t i = 0; i < p12.index_set().size(); ++i) key[joint.index_of(p12.index_set()[i])] = k12[i];
      for (std::size_t i = 0; i < p23.index_set().size(); ++i) key[joint.index_of(p23.index_set()[i])] = atom->first[i];
      out.emplace(key, scale * atom->second);
    }
  }
  return SparseDistribution(std::move(joint), p12.target_size(), std::move(out));
}

}  // namespace sido
