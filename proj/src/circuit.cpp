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

#include "ddnnf/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>
#include <string>

#include "ddnnf/error.hpp"

namespace ddnnf {

namespace {

std::vector<int> merge_varsets(const std::vector<Node>& nodes, const std::vector<NodeId>& children) {
  std::vector<int> out;
  for (NodeId child : children) {
    const auto& vs = nodes[child].varset;
    std::vector<int> merged;
    merged.reserve(out.size() + vs.size());
    std::set_union(out.begin(), out.end(), vs.begin(), vs.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

Node make_node(NodeKind kind) {
  Node n;
  n.kind = kind;
  return n;
}

}  // namespace

Circuit::Circuit() {
  nodes_.push_back(make_node(NodeKind::True));
  nodes_.push_back(make_node(NodeKind::False));
}

NodeId Circuit::add(Node node) {
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId Circuit::literal(int lit) {
  if (lit == 0) throw PreconditionError("literal 0 is not a literal");
  if (auto it = literal_ids_.find(lit); it != literal_ids_.end()) return it->second;
  Node node = make_node(NodeKind::Literal);
  node.literal = lit;
  node.varset = {lit < 0 ? -lit : lit};
  const NodeId id = add(std::move(node));
  literal_ids_.emplace(lit, id);
  return id;
}

NodeId Circuit::conjoin(std::vector<NodeId> children) {
  if (children.empty()) return top();
  for (NodeId c : children)
    if (c >= nodes_.size()) throw PreconditionError("conjoin: unknown child id");
  std::sort(children.begin(), children.end());
  auto key = std::make_pair(NodeKind::And, children);
  if (auto it = internal_ids_.find(key); it != internal_ids_.end()) return it->second;
  Node node = make_node(NodeKind::And);
  node.varset = merge_varsets(nodes_, children);
  node.children = std::move(children);
  const NodeId id = add(std::move(node));
  internal_ids_.emplace(std::move(key), id);
  return id;
}

NodeId Circuit::disjoin(std::vector<NodeId> children, int decision_var) {
  if (children.empty()) return bottom();
  for (NodeId c : children)
    if (c >= nodes_.size()) throw PreconditionError("disjoin: unknown child id");
  std::sort(children.begin(), children.end());
  auto key = std::make_pair(NodeKind::Or, children);
  if (auto it = internal_ids_.find(key); it != internal_ids_.end()) return it->second;
  Node node = make_node(NodeKind::Or);
  node.decision_var = decision_var;
  node.varset = merge_varsets(nodes_, children);
  node.children = std::move(children);
  const NodeId id = add(std::move(node));
  internal_ids_.emplace(std::move(key), id);
  return id;
}

void Circuit::set_root(NodeId id) {
  if (id >= nodes_.size()) throw PreconditionError("set_root: unknown node id");
  root_ = id;
}

void Circuit::set_universe(std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  universe_ = std::move(vars);
}

void Circuit::set_num_vars(int n) {
  universe_.resize(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(universe_.begin(), universe_.end(), 1);
}

void Circuit::set_tseitin_vars(std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  tseitin_vars_ = std::move(vars);
}

std::vector<NodeId> Circuit::reachable() const {
  std::vector<bool> mark(nodes_.size(), false);
  mark[root_] = true;
  std::vector<NodeId> out;
  // Children have smaller ids, so one descending sweep marks everything.
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (!mark[i]) continue;
    out.push_back(static_cast<NodeId>(i));
    for (NodeId c : nodes_[i].children) mark[c] = true;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t size(const Circuit& c) { return stats(c).size; }

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    ++s.nodes;
    s.edges += n.children.size();
    if (!n.children.empty()) s.size += n.children.size() - 1;
  }
  s.vars = c.universe().size();
  s.tseitin = c.tseitin_vars().size();
  return s;
}

std::string format_stats(const CircuitStats& s) {
  return "size=" + std::to_string(s.size) + " nodes=" + std::to_string(s.nodes) +
         " edges=" + std::to_string(s.edges) + " vars=" + std::to_string(s.vars) +
         " tseitin=" + std::to_string(s.tseitin);
}

DecomposabilityCheck check_decomposable(const Circuit& c) {
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    if (n.kind != NodeKind::And) continue;
    std::vector<int> seen;
    for (NodeId child : n.children) {
      const auto& vs = c.node(child).varset;
      if (!disjoint(seen, vs)) return {false, id};
      std::vector<int> merged;
      std::set_union(seen.begin(), seen.end(), vs.begin(), vs.end(), std::back_inserter(merged));
      seen = std::move(merged);
    }
  }
  return {};
}

bool check_smooth(const Circuit& c) {
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    if (n.kind != NodeKind::Or) continue;
    for (NodeId child : n.children)
      if (c.node(child).varset != n.varset) return false;
  }
  return true;
}

bool check_deterministic_oracle(const Circuit& c, std::optional<std::size_t> max_vars) {
  const std::size_t bound = max_vars.value_or(oracle_bound_from_env(16));
  const auto& universe = c.universe();
  if (universe.size() > bound)
    throw OracleBoundError("universe of " + std::to_string(universe.size()) +
                           " variables exceeds the oracle bound " + std::to_string(bound));
  const auto order = c.reachable();
  std::vector<char> value(c.arena_size(), 0);
  std::vector<char> assignment(static_cast<std::size_t>(c.max_var()) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < universe.size(); ++i) assignment[universe[i]] = (bits >> i) & 1;
    for (NodeId id : order) {
      const auto& n = c.node(id);
      switch (n.kind) {
        case NodeKind::True: value[id] = 1; break;
        case NodeKind::False: value[id] = 0; break;
        case NodeKind::Literal: {
          const int v = n.literal < 0 ? -n.literal : n.literal;
          if (static_cast<std::size_t>(v) >= assignment.size())
            throw PreconditionError("literal outside the declared universe");
          value[id] = n.literal > 0 ? assignment[v] : !assignment[v];
          break;
        }
        case NodeKind::And:
          value[id] = std::all_of(n.children.begin(), n.children.end(),
                                  [&](NodeId ch) { return value[ch] != 0; });
          break;
        case NodeKind::Or: {
          int high = 0;
          for (NodeId ch : n.children) high += value[ch];
          if (high > 1) return false;
          value[id] = high > 0;
          break;
        }
      }
    }
  }
  return true;
}

std::string write_nnf(const Circuit& c) {
  const auto order = c.reachable();
  std::vector<std::size_t> index(c.arena_size(), 0);
  std::string body;
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId id = order[i];
    index[id] = i;
    const auto& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: body += "A 0\n"; break;
      case NodeKind::False: body += "O 0 0\n"; break;
      case NodeKind::Literal: body += "L " + std::to_string(n.literal) + "\n"; break;
      case NodeKind::And:
      case NodeKind::Or: {
        if (n.kind == NodeKind::And) {
          body += "A ";
        } else {
          body += "O " + std::to_string(n.decision_var) + " ";
        }
        body += std::to_string(n.children.size());
        for (NodeId ch : n.children) body += " " + std::to_string(index[ch]);
        body += "\n";
        edges += n.children.size();
        break;
      }
    }
  }
  return "nnf " + std::to_string(order.size()) + " " + std::to_string(edges) + " " +
         std::to_string(c.max_var()) + "\n" + body;
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.universe() != b.universe()) return false;
  // Both circuits are interned into one table of (kind, literal, child
  // classes); equal shapes end up in the same class.
  std::map<std::tuple<int, int, std::vector<std::size_t>>, std::size_t> classes;
  auto intern = [&](const Circuit& c) {
    std::vector<std::size_t> cls(c.arena_size(), 0);
    for (NodeId id : c.reachable()) {
      const auto& n = c.node(id);
      std::vector<std::size_t> kids;
      for (NodeId ch : n.children) kids.push_back(cls[ch]);
      std::sort(kids.begin(), kids.end());
      auto key = std::make_tuple(static_cast<int>(n.kind), n.literal, std::move(kids));
      cls[id] = classes.emplace(std::move(key), classes.size()).first->second;
    }
    return cls[c.root()];
  };
  const std::size_t ra = intern(a);
  const std::size_t rb = intern(b);
  return ra == rb && a.reachable().size() == b.reachable().size();
}

std::size_t oracle_bound_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("DDNNF_ORACLE_MAX_VARS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 62) return v;
  }
  return fallback;
}

}  // namespace ddnnf
