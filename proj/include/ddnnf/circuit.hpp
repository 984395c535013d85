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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ddnnf {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { True, False, Literal, And, Or };

struct Node {
  NodeKind kind = NodeKind::True;
  int literal = 0;       // Literal only
  int decision_var = 0;  // Or only; 0 when unknown
  std::vector<NodeId> children;  // sorted ascending, And/Or only
  std::vector<int> varset;       // sorted variables mentioned below
};

/// Single-rooted NNF DAG stored in an arena.
///
/// Nodes are hash-consed on construction: the same literal, or an And/Or with
/// the same child multiset, always maps to the same id.  Children always have
/// smaller ids than their parents, so id order is a topological order.  Ids 0
/// and 1 are the True and False singletons.  No logical simplification happens
/// here beyond `conjoin({}) == top()` and `disjoin({}) == bottom()`.
class Circuit {
 public:
  Circuit();

  static constexpr NodeId top() noexcept { return 0; }
  static constexpr NodeId bottom() noexcept { return 1; }

  NodeId literal(int lit);
  NodeId conjoin(std::vector<NodeId> children);
  NodeId disjoin(std::vector<NodeId> children, int decision_var = 0);

  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t arena_size() const noexcept { return nodes_.size(); }

  NodeId root() const noexcept { return root_; }
  void set_root(NodeId id);

  /// Declared variable universe V (sorted).  Variables in V that the root does
  /// not mention are free.
  const std::vector<int>& universe() const noexcept { return universe_; }
  void set_universe(std::vector<int> vars);
  void set_num_vars(int n);
  /// Largest variable of the universe, or 0.
  int max_var() const noexcept { return universe_.empty() ? 0 : universe_.back(); }

  /// Designated Tseitin variables X (sorted, subset of the universe).
  const std::vector<int>& tseitin_vars() const noexcept { return tseitin_vars_; }
  void set_tseitin_vars(std::vector<int> vars);

  /// Set once an oracle has confirmed determinism; parsed circuits start false.
  bool determinism_verified = false;

  /// Ids reachable from the root, ascending (children before parents).
  std::vector<NodeId> reachable() const;

 private:
  NodeId add(Node node);

  std::vector<Node> nodes_;
  std::unordered_map<int, NodeId> literal_ids_;
  std::map<std::pair<NodeKind, std::vector<NodeId>>, NodeId> internal_ids_;
  NodeId root_ = top();
  std::vector<int> universe_;
  std::vector<int> tseitin_vars_;
};

/// Number of binary operations: sum over reachable And/Or nodes of
/// (fan-in - 1).
std::uint64_t size(const Circuit& c);

struct CircuitStats {
  std::uint64_t size = 0;
  std::uint64_t nodes = 0;  // reachable nodes, leaves included
  std::uint64_t edges = 0;
  std::uint64_t vars = 0;   // |universe|
  std::uint64_t tseitin = 0;
};

CircuitStats stats(const Circuit& c);
/// "size=<n> nodes=<n> edges=<n> vars=<n> tseitin=<n>"
std::string format_stats(const CircuitStats& s);

struct DecomposabilityCheck {
  bool ok = true;
  std::optional<NodeId> violating;
};

DecomposabilityCheck check_decomposable(const Circuit& c);
bool check_smooth(const Circuit& c);

/// Brute force over all assignments of the universe: every Or must have at
/// most one true child.  Throws OracleBoundError when the universe exceeds
/// `max_vars` (default: DDNNF_ORACLE_MAX_VARS or 16).
bool check_deterministic_oracle(const Circuit& c, std::optional<std::size_t> max_vars = {});

/// c2d NNF text of the reachable part, nodes renumbered topologically with the
/// root last.  The header's variable count is max_var().
std::string write_nnf(const Circuit& c);

/// True when both roots describe the same DAG shape (same kinds, literals and
/// child structure) over the same universe.
bool structurally_equal(const Circuit& a, const Circuit& b);

/// Reads the oracle bound from DDNNF_ORACLE_MAX_VARS, else `fallback`.
std::size_t oracle_bound_from_env(std::size_t fallback);

}  // namespace ddnnf
