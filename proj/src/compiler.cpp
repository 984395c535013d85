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

#include "ddnnf/compiler.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <random>
#include <unordered_map>

#include "ddnnf/error.hpp"

namespace ddnnf {

std::string component_key(const std::vector<Clause>& clauses) {
  std::vector<Clause> sorted = clauses;
  for (auto& clause : sorted) std::sort(clause.begin(), clause.end());
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& clause : sorted) {
    for (int lit : clause) key.append(reinterpret_cast<const char*>(&lit), sizeof lit);
    const int end = 0;
    key.append(reinterpret_cast<const char*>(&end), sizeof end);
  }
  return key;
}

namespace {

class Compiler {
 public:
  Compiler(Circuit& out, const CompileConfig& cfg, int num_vars)
      : out_(out), cfg_(cfg), rng_(cfg.seed), value_(static_cast<std::size_t>(num_vars) + 1, 0) {
    for (std::size_t i = 0; i < cfg.order.size(); ++i) rank_.emplace(cfg.order[i], i);
  }

  /// Unit propagation, then one node per variable-disjoint component.
  NodeId compile(std::vector<Clause> clauses) {
    std::vector<int> implied;
    if (!propagate(clauses, implied)) return Circuit::bottom();
    std::vector<NodeId> parts;
    for (int lit : implied) parts.push_back(out_.literal(lit));
    for (auto& component : components(std::move(clauses))) {
      const NodeId node = compile_component(std::move(component));
      if (node == Circuit::bottom()) return node;
      parts.push_back(node);
    }
    if (parts.size() == 1) return parts[0];
    return out_.conjoin(std::move(parts));
  }

  CompileStats stats;

 private:
  /// Conditions on unit clauses until none remain.  Returns false on conflict.
  bool propagate(std::vector<Clause>& clauses, std::vector<int>& implied) {
    for (;;) {
      std::vector<int> units;
      for (const auto& clause : clauses) {
        if (clause.empty()) return false;
        if (clause.size() == 1) units.push_back(clause[0]);
      }
      if (units.empty()) return true;
      std::sort(units.begin(), units.end());
      units.erase(std::unique(units.begin(), units.end()), units.end());
      for (int lit : units) {
        if (std::binary_search(units.begin(), units.end(), -lit)) return false;
        value_[var_of(lit)] = lit > 0 ? 1 : -1;
      }
      std::vector<Clause> next;
      next.reserve(clauses.size());
      bool conflict = false;
      for (auto& clause : clauses) {
        Clause reduced;
        bool satisfied = false;
        for (int l : clause) {
          const int v = value_[var_of(l)];
          if (v == 0) {
            reduced.push_back(l);
          } else if ((v > 0) == (l > 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (reduced.empty()) conflict = true;
        next.push_back(std::move(reduced));
      }
      for (int lit : units) value_[var_of(lit)] = 0;
      implied.insert(implied.end(), units.begin(), units.end());
      clauses = std::move(next);
      if (conflict) return false;
    }
  }

  std::vector<std::vector<Clause>> components(std::vector<Clause> clauses) {
    if (clauses.empty()) return {};
    std::unordered_map<int, int> parent;
    auto find = [&](int x) {
      int r = x;
      while (parent.at(r) != r) r = parent.at(r);
      while (parent.at(x) != r) {
        const int up = parent.at(x);
        parent[x] = r;
        x = up;
      }
      return r;
    };
    for (const auto& clause : clauses)
      for (int l : clause) parent.emplace(var_of(l), var_of(l));
    for (const auto& clause : clauses)
      for (std::size_t i = 1; i < clause.size(); ++i) {
        const int a = find(var_of(clause[0]));
        const int b = find(var_of(clause[i]));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::map<int, std::vector<Clause>> groups;
    for (auto& clause : clauses) {
      const int root = find(var_of(clause[0]));
      groups[root].push_back(std::move(clause));
    }
    std::vector<std::vector<Clause>> out;
    out.reserve(groups.size());
    for (auto& [root, group] : groups) out.push_back(std::move(group));
    return out;
  }

  NodeId compile_component(std::vector<Clause> clauses) {
    std::sort(clauses.begin(), clauses.end());
    std::string key;
    if (cfg_.cache_enabled) {
      key = component_key(clauses);
      if (auto it = cache_.find(key); it != cache_.end()) {
        ++stats.cache_hits;
        return it->second;
      }
    }
    if (cfg_.max_decisions && stats.decisions >= *cfg_.max_decisions)
      throw BudgetExceeded("decision budget of " + std::to_string(*cfg_.max_decisions) +
                           " exhausted");
    ++stats.decisions;

    const int v = pick(clauses);
    std::vector<NodeId> branches;
    for (int lit : {v, -v}) {
      const NodeId sub = compile(conditioned(clauses, lit));
      if (sub == Circuit::bottom()) continue;
      const NodeId decision = out_.literal(lit);
      branches.push_back(sub == Circuit::top() ? decision : out_.conjoin({decision, sub}));
    }
    NodeId result = Circuit::bottom();
    if (branches.size() == 1) result = branches[0];
    if (branches.size() == 2) result = out_.disjoin(std::move(branches), v);
    if (cfg_.cache_enabled) {
      cache_.emplace(std::move(key), result);
      stats.cache_entries = cache_.size();
    }
    return result;
  }

  static std::vector<Clause> conditioned(const std::vector<Clause>& clauses, int lit) {
    std::vector<Clause> out;
    out.reserve(clauses.size());
    for (const auto& clause : clauses) {
      if (std::binary_search(clause.begin(), clause.end(), lit)) continue;
      Clause reduced;
      reduced.reserve(clause.size());
      for (int l : clause)
        if (l != -lit) reduced.push_back(l);
      out.push_back(std::move(reduced));
    }
    return out;
  }

  int pick(const std::vector<Clause>& clauses) {
    std::map<int, std::size_t> occurrences;
    for (const auto& clause : clauses)
      for (int l : clause) ++occurrences[var_of(l)];
    switch (cfg_.branching) {
      case Branching::InputOrder:
        break;
      case Branching::Explicit: {
        int best = 0;
        std::size_t best_rank = 0;
        for (const auto& [v, _] : occurrences) {
          auto it = rank_.find(v);
          if (it != rank_.end() && (best == 0 || it->second < best_rank)) {
            best = v;
            best_rank = it->second;
          }
        }
        if (best != 0) return best;
        break;
      }
      case Branching::MostOccurrences: {
        int best = 0;
        std::size_t most = 0;
        for (const auto& [v, n] : occurrences)
          if (n > most) {
            best = v;
            most = n;
          }
        return best;
      }
      case Branching::Random: {
        std::uniform_int_distribution<std::size_t> dist(0, occurrences.size() - 1);
        return std::next(occurrences.begin(), static_cast<long>(dist(rng_)))->first;
      }
    }
    return occurrences.begin()->first;
  }

  Circuit& out_;
  const CompileConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<int> value_;
  std::unordered_map<int, std::size_t> rank_;
  std::unordered_map<std::string, NodeId> cache_;
};

}  // namespace

Circuit compile(const CnfInstance& cnf, const CompileConfig& cfg, CompileStats* stats) {
  if (cnf.num_vars < 0) throw PreconditionError("negative variable count");
  std::vector<Clause> clauses;
  clauses.reserve(cnf.clauses.size());
  for (Clause clause : cnf.clauses) {
    for (int lit : clause)
      if (lit == 0 || var_of(lit) > cnf.num_vars)
        throw PreconditionError("clause literal " + std::to_string(lit) +
                                " outside the universe 1.." + std::to_string(cnf.num_vars));
    if (normalize_clause(clause)) clauses.push_back(std::move(clause));
  }
  std::vector<int> order = cfg.order;
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end())
    throw PreconditionError("branch order lists a variable twice");
  for (int v : cfg.order)
    if (v <= 0 || v > cnf.num_vars)
      throw PreconditionError("branch order variable " + std::to_string(v) + " outside 1.." +
                              std::to_string(cnf.num_vars));

  Circuit out;
  out.set_num_vars(cnf.num_vars);
  out.set_tseitin_vars(cnf.tseitin_vars);
  Compiler compiler(out, cfg, cnf.num_vars);
  out.set_root(compiler.compile(std::move(clauses)));
  if (stats) *stats = compiler.stats;
  return out;
}

}  // namespace ddnnf
