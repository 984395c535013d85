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

#include "ddnnf/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "ddnnf/error.hpp"

namespace ddnnf::oracle {

namespace {

void check_bound(std::size_t n) {
  if (n > max_vars() || n > 62)
    throw OracleBoundError(std::to_string(n) +
                           " variables (limit " + std::to_string(std::min<std::size_t>(max_vars(), 62)) +
                           ")");
}

/// Formula with variables resolved to universe positions.
struct Expr {
  Formula::Kind kind;
  std::size_t bit = 0;
  std::vector<Expr> kids;

  bool eval(std::uint64_t a) const {
    switch (kind) {
      case Formula::Kind::Var: return (a >> bit) & 1;
      case Formula::Kind::True: return true;
      case Formula::Kind::False: return false;
      case Formula::Kind::Not: return !kids[0].eval(a);
      case Formula::Kind::And:
        for (const auto& k : kids)
          if (!k.eval(a)) return false;
        return true;
      case Formula::Kind::Or:
        for (const auto& k : kids)
          if (k.eval(a)) return true;
        return false;
      case Formula::Kind::Iff: return kids[0].eval(a) == kids[1].eval(a);
    }
    return false;
  }
};

Expr resolve(const Formula& f, const std::map<std::string, int>& var_map,
             const std::vector<int>& universe) {
  Expr e;
  e.kind = f.kind();
  if (f.kind() == Formula::Kind::Var) {
    const int idx = var_map.at(f.name());
    e.bit = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), idx) -
                                     universe.begin());
  }
  for (const auto& child : f.children()) e.kids.push_back(resolve(child, var_map, universe));
  return e;
}

/// Direct evaluation of the sub-DAG under one node, independent of the
/// circuit's cached varsets and id ordering.
class CircuitEval {
 public:
  CircuitEval(const Circuit& c, NodeId root) : c_(c) {
    std::unordered_map<NodeId, bool> done;
    std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
    done[root] = false;
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      const auto& kids = c.node(id).children;
      if (next < kids.size()) {
        const NodeId ch = kids[next++];
        if (!done.count(ch)) {
          done[ch] = false;
          stack.emplace_back(ch, 0);
        }
        continue;
      }
      position_[id] = order_.size();
      order_.push_back(id);
      if (c.node(id).kind == NodeKind::Literal) vars_.push_back(var_of(c.node(id).literal));
      stack.pop_back();
    }
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    values_.resize(order_.size());
  }

  const std::vector<int>& vars() const { return vars_; }
  const std::vector<NodeId>& order() const { return order_; }

  /// `a` bit i is the value of `universe[i]`; every variable of the sub-DAG
  /// must be in the universe.
  bool eval(std::uint64_t a, const std::vector<int>& universe) {
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const auto& n = c_.node(order_[k]);
      bool v = false;
      switch (n.kind) {
        case NodeKind::True: v = true; break;
        case NodeKind::False: v = false; break;
        case NodeKind::Literal: {
          const auto it = std::lower_bound(universe.begin(), universe.end(), var_of(n.literal));
          if (it == universe.end() || *it != var_of(n.literal))
            throw PreconditionError("oracle: literal outside the universe");
          const bool bit = (a >> (it - universe.begin())) & 1;
          v = n.literal > 0 ? bit : !bit;
          break;
        }
        case NodeKind::And:
          v = true;
          for (NodeId ch : n.children) v = v && values_[position_.at(ch)];
          break;
        case NodeKind::Or:
          for (NodeId ch : n.children) v = v || values_[position_.at(ch)];
          break;
      }
      values_[k] = v;
    }
    return values_.back();
  }

  bool value(NodeId id) const { return values_[position_.at(id)]; }

 private:
  const Circuit& c_;
  std::vector<NodeId> order_;
  std::unordered_map<NodeId, std::size_t> position_;
  std::vector<int> vars_;
  std::vector<char> values_;
};

ModelSet enumerate_with(const std::vector<int>& universe, auto&& is_model) {
  check_bound(universe.size());
  ModelSet m{universe, {}};
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  for (std::uint64_t a = 0; a < total; ++a)
    if (is_model(a)) m.models.push_back(a);
  return m;
}

std::vector<int> minus(const std::vector<int>& a, std::span<const int> b) {
  std::vector<int> sb(b.begin(), b.end());
  std::sort(sb.begin(), sb.end());
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

bool matches_reference(const ModelSet& source, std::span<const int> X, const Formula& reference,
                       const std::map<std::string, int>& var_map) {
  const auto keep = minus(source.universe, X);
  for (const auto& name : variables(reference)) {
    auto it = var_map.find(name);
    if (it == var_map.end() || !std::binary_search(keep.begin(), keep.end(), it->second))
      return false;
  }
  return project(source, keep) == enumerate_models(reference, var_map, keep);
}

}  // namespace

std::size_t max_vars() { return oracle_bound_from_env(20); }

ModelSet enumerate_models(const Formula& f, const std::map<std::string, int>& var_map,
                          std::span<const int> extra_universe) {
  std::vector<int> universe(extra_universe.begin(), extra_universe.end());
  for (const auto& name : variables(f)) {
    auto it = var_map.find(name);
    if (it == var_map.end()) throw Error("oracle: variable '" + name + "' missing from the map");
    universe.push_back(it->second);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  const Expr e = resolve(f, var_map, universe);
  return enumerate_with(universe, [&](std::uint64_t a) { return e.eval(a); });
}

ModelSet enumerate_models(const CnfInstance& cnf) {
  std::vector<int> universe(static_cast<std::size_t>(cnf.num_vars));
  for (int i = 0; i < cnf.num_vars; ++i) universe[static_cast<std::size_t>(i)] = i + 1;
  return enumerate_with(universe, [&](std::uint64_t a) {
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool bit = (a >> (var_of(lit) - 1)) & 1;
        if (bit == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  });
}

ModelSet enumerate_models(const Circuit& c) {
  CircuitEval eval(c, c.root());
  const auto& universe = c.universe();
  return enumerate_with(universe, [&](std::uint64_t a) { return eval.eval(a, universe); });
}

ModelSet enumerate_models(const Circuit& c, NodeId node) {
  CircuitEval eval(c, node);
  const auto universe = eval.vars();
  return enumerate_with(universe, [&](std::uint64_t a) { return eval.eval(a, universe); });
}

ModelSet project(const ModelSet& m, std::span<const int> keep) {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> from;
  for (int v : sorted) {
    auto it = std::lower_bound(m.universe.begin(), m.universe.end(), v);
    if (it == m.universe.end() || *it != v)
      throw Error("oracle: projection variable " + std::to_string(v) + " not in the universe");
    from.push_back(static_cast<std::size_t>(it - m.universe.begin()));
  }
  ModelSet out{sorted, {}};
  for (std::uint64_t a : m.models) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < from.size(); ++i) b |= ((a >> from[i]) & 1) << i;
    out.models.push_back(b);
  }
  std::sort(out.models.begin(), out.models.end());
  out.models.erase(std::unique(out.models.begin(), out.models.end()), out.models.end());
  return out;
}

bool check_exists_equiv(const CnfInstance& cnf, std::span<const int> X, const Formula& reference,
                        const std::map<std::string, int>& var_map) {
  return matches_reference(enumerate_models(cnf), X, reference, var_map);
}

bool check_exists_equiv(const Circuit& c, std::span<const int> X, const Formula& reference,
                        const std::map<std::string, int>& var_map) {
  // X may already have been forgotten from a pruned circuit.
  std::vector<int> present;
  for (int x : X)
    if (std::binary_search(c.universe().begin(), c.universe().end(), x)) present.push_back(x);
  return matches_reference(enumerate_models(c), present, reference, var_map);
}

bool is_tautology_after_exists(const Circuit& c, NodeId node, std::span<const int> X) {
  const ModelSet m = enumerate_models(c, node);
  const auto keep = minus(m.universe, X);
  return project(m, keep).size() == (std::size_t{1} << keep.size());
}

bool is_deterministic(const Circuit& c) {
  CircuitEval eval(c, c.root());
  const auto& universe = c.universe();
  check_bound(universe.size());
  std::vector<NodeId> ors;
  for (NodeId id : eval.order())
    if (c.node(id).kind == NodeKind::Or) ors.push_back(id);
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    eval.eval(a, universe);
    for (NodeId id : ors) {
      int high = 0;
      for (NodeId ch : c.node(id).children) high += eval.value(ch);
      if (high > 1) return false;
    }
  }
  return true;
}

}  // namespace ddnnf::oracle
