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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ddnnf/circuit.hpp"
#include "ddnnf/cnf.hpp"
#include "ddnnf/formula.hpp"

/// Brute-force reference semantics.  Nothing in here calls into the counting,
/// compiling or pruning code; each source is evaluated by direct recursion on
/// every assignment.
namespace ddnnf::oracle {

/// Explicit model set.  Bit i of a model is the value of universe[i].
struct ModelSet {
  std::vector<int> universe;          // sorted
  std::vector<std::uint64_t> models;  // sorted, unique

  std::size_t size() const noexcept { return models.size(); }
  bool operator==(const ModelSet&) const = default;
};

/// DDNNF_ORACLE_MAX_VARS, else 20.
std::size_t max_vars();

/// Formula variables are mapped through `var_map`; the universe is the set of
/// mapped indices of the formula's variables plus `extra_universe`.
ModelSet enumerate_models(const Formula& f, const std::map<std::string, int>& var_map,
                          std::span<const int> extra_universe = {});
/// Universe 1..num_vars.
ModelSet enumerate_models(const CnfInstance& cnf);
/// Universe = the circuit's declared universe.
ModelSet enumerate_models(const Circuit& c);
/// Models of the subcircuit at `node` over the variables it mentions.
ModelSet enumerate_models(const Circuit& c, NodeId node);

/// Existential projection onto `keep` (which must be a subset of the universe).
ModelSet project(const ModelSet& m, std::span<const int> keep);

/// Projects the source onto universe \ X and compares with the models of
/// `reference` over the same variables.
bool check_exists_equiv(const CnfInstance& cnf, std::span<const int> X, const Formula& reference,
                        const std::map<std::string, int>& var_map);
bool check_exists_equiv(const Circuit& c, std::span<const int> X, const Formula& reference,
                        const std::map<std::string, int>& var_map);

/// Ground truth for artifact detection: for every assignment of the node's
/// non-X variables some assignment of its X variables satisfies it.
bool is_tautology_after_exists(const Circuit& c, NodeId node, std::span<const int> X);

/// Pairwise model-disjointness of every Or's children, over the universe.
bool is_deterministic(const Circuit& c);

}  // namespace ddnnf::oracle
