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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddnnf/circuit.hpp"
#include "ddnnf/cnf.hpp"

namespace ddnnf {

enum class Branching {
  InputOrder,       // smallest variable of the component
  Explicit,         // first listed variable present, else InputOrder
  MostOccurrences,  // most literal occurrences in the component, ties to smallest
  Random,           // uniform over the component's variables, seeded
};

struct CompileConfig {
  Branching branching = Branching::MostOccurrences;
  std::vector<int> order;  // Explicit only
  std::uint64_t seed = 0;  // Random only
  bool cache_enabled = true;
  std::optional<std::uint64_t> max_decisions;

  static CompileConfig with(Branching b) {
    CompileConfig cfg;
    cfg.branching = b;
    return cfg;
  }
  static CompileConfig input_order() { return with(Branching::InputOrder); }
  static CompileConfig explicit_order(std::vector<int> order) {
    CompileConfig cfg = with(Branching::Explicit);
    cfg.order = std::move(order);
    return cfg;
  }
  static CompileConfig dynamic() { return with(Branching::MostOccurrences); }
  static CompileConfig random(std::uint64_t seed) {
    CompileConfig cfg = with(Branching::Random);
    cfg.seed = seed;
    return cfg;
  }
};

struct CompileStats {
  std::uint64_t decisions = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_entries = 0;
};

/// Exhaustive DPLL with unit propagation, component decomposition and
/// component caching.  The result is a decision-DNNF over universe
/// {1..num_vars}; every Or is a decision node, and variables that never get
/// mentioned are left free rather than smoothed in.
Circuit compile(const CnfInstance& cnf, const CompileConfig& cfg = {},
                CompileStats* stats = nullptr);

/// Canonical cache key of a clause set: equal keys iff equal (normalized,
/// sorted) clause lists.
std::string component_key(const std::vector<Clause>& clauses);

enum class NnfFormat { C2d, D4 };

/// Reads a compiled circuit.  c2d: universe is 1..V from the header.  d4: the
/// universe is 1..`num_vars` when given, else 1..(largest literal seen); node 1
/// is the root.  Determinism is not checked (determinism_verified stays
/// false); decomposability is left to the consumer.
Circuit parse_nnf(std::string_view text, NnfFormat format = NnfFormat::C2d,
                  std::optional<int> num_vars = {});

}  // namespace ddnnf
