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
#include <vector>

#include "ddnnf/compiler.hpp"
#include "ddnnf/formula.hpp"

namespace ddnnf {

/// (a_1 & b_1) | ... | (a_n & b_n).
Formula gen_overlapping_disjunction(int n);

/// a & (a <=> OR_p (theta_p & theta_a_p)) for parents p = 1..n.
Formula gen_noisy_or(int n);

/// Bayesian network with mutually exclusive CPT encodings.  There are
/// `parents_per_node` root inputs r_1..r_k without tables, followed by
/// `num_nodes` table-bearing nodes n_1..n_m; node i draws k distinct parents
/// from the roots and the earlier nodes (seeded).  Node c with parents
/// p_1..p_k contributes
///   c <=> OR over all 2^k parent assignments s of (lits(s) & theta_c_s),
/// where the disjuncts are pairwise exclusive through the parent literals.
/// With k = 0 every node is just c <=> theta_c.
Formula gen_mutex_cpt(int num_nodes, int parents_per_node, std::uint64_t seed);

enum class Family { Overlap, NoisyOr, MutexCpt };

struct BenchSpec {
  Family family = Family::NoisyOr;
  std::vector<int> sizes;
  int parents_per_node = 2;  // MutexCpt only
  std::uint64_t seed = 1;    // MutexCpt only
  /// Brute-force verification is run when the CNF has at most this many
  /// variables.
  std::size_t verify_max_vars = 14;
};

struct BenchRow {
  std::string instance;
  int size = 0;
  std::uint64_t ddnnf = 0;
  std::uint64_t ddnnf_p = 0;
  std::uint64_t ddnnf_t = 0;
  std::uint64_t artifacts = 0;
  double frac_p = 1.0;
  double frac_t = 1.0;
  double compile_ms = 0.0;
  bool timeout = false;
  bool verified = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Header `instance,size,ddnnf,ddnnf_p,ddnnf_t,artifacts,frac_p,frac_t,compile_ms`.
  /// Timed-out rows leave the size columns empty and put `timeout` in
  /// compile_ms.
  std::string to_csv() const;
};

std::string family_name(Family family);
std::optional<Family> parse_family(const std::string& name);
Formula generate(const BenchSpec& spec, int size);

/// generate -> tseitin_transform -> compile -> prune, one row per size.
/// Throws Error if a brute-force check disagrees.
BenchReport run_bench(const BenchSpec& spec, const CompileConfig& cfg);

}  // namespace ddnnf
