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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ddnnf {

/// Sorted (ascending) nonzero literals, no duplicates, never both signs.
using Clause = std::vector<int>;

inline int var_of(int lit) noexcept { return lit < 0 ? -lit : lit; }

struct CnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<int> tseitin_vars;  // sorted, subset of 1..num_vars

  bool has_empty_clause() const;
  /// Variables occurring in some clause, sorted.
  std::vector<int> variables() const;

  bool operator==(const CnfInstance&) const = default;
};

/// Sorts and deduplicates; returns false for a tautological clause.
bool normalize_clause(Clause& clause);

/// Parses DIMACS CNF.  Duplicate literals are merged and tautologies dropped.
/// A clause-count mismatch is reported through `warnings` (if given) rather
/// than thrown.
CnfInstance parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string write_dimacs(const CnfInstance& cnf);

/// Clauses satisfied by `lit` vanish, `-lit` is removed from the rest.
/// An empty clause in the result means the branch is unsatisfiable.
CnfInstance condition(const CnfInstance& cnf, int lit);

/// Partitions the clauses into variable-disjoint components.  Each component
/// keeps num_vars; its tseitin_vars are restricted to the variables it uses.
/// Components are ordered by their smallest variable.
std::vector<CnfInstance> split_components(const CnfInstance& cnf);

/// A gate `head <=> AND(body)` recovered from the clause patterns
/// (-head | b) for b in body and (head | -b1 | ... | -bk).  An OR gate
/// `v <=> OR(l_i)` is the AND gate with head -v and body -l_i.
struct Gate {
  int head = 0;
  std::vector<int> body;
};

/// All syntactic gate candidates with head variable `var`.
std::vector<Gate> find_gates(const CnfInstance& cnf, int var);

/// Recovers Tseitin variables: heads of gates whose definition graph is
/// acyclic.  Variables are considered from the highest index down; a
/// candidate that would close a definition cycle is rejected, so of two
/// mutually defining variables the larger index wins.
std::vector<int> detect_tseitin_vars(const CnfInstance& cnf);

}  // namespace ddnnf
