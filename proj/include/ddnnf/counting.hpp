// Copyright 2026 The ddnnf-prune Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ddnnf/circuit.hpp"

namespace ddnnf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Per-node model count, each over the node's own varset.
struct CountAnnotation {
  std::vector<BigInt> counts;  // indexed by NodeId
};

/// One bottom-up pass.  Or nodes add 2^(gap) per child for the variables the
/// child leaves free.  Throws PreconditionError if the circuit is not
/// decomposable.
CountAnnotation annotate_counts(const Circuit& c);

/// Model count over the declared universe.
BigInt model_count(const Circuit& c);

/// Literal weights; unlisted literals default to 1 unless defaults are
/// disabled, in which case a lookup throws.
template <typename Scalar>
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(bool use_defaults) : use_defaults_(use_defaults) {}

  void set(int lit, Scalar w) { weights_[lit] = std::move(w); }
  void set(int var, Scalar positive, Scalar negative) {
    weights_[var] = std::move(positive);
    weights_[-var] = std::move(negative);
  }
  Scalar operator()(int lit) const;
  bool contains(int lit) const { return weights_.count(lit) != 0; }
  bool use_defaults() const noexcept { return use_defaults_; }
  const std::unordered_map<int, Scalar>& entries() const noexcept { return weights_; }

 private:
  std::unordered_map<int, Scalar> weights_;
  bool use_defaults_ = true;
};

/// Weighted model count over the declared universe.  A variable left free by
/// an Or child or by the root contributes w(v) + w(-v).
template <typename Scalar>
Scalar weighted_model_count(const Circuit& c, const WeightMap<Scalar>& w);

/// Weights file: `w <lit> <real>` lines, `#` comments.
WeightMap<double> parse_weights(std::string_view text);

/// Exact rational copy of a double weight map (doubles are dyadic rationals).
WeightMap<Rational> to_rational(const WeightMap<double>& w);

extern template class WeightMap<double>;
extern template class WeightMap<Rational>;
extern template double weighted_model_count(const Circuit&, const WeightMap<double>&);
extern template Rational weighted_model_count(const Circuit&, const WeightMap<Rational>&);

}  // namespace ddnnf
