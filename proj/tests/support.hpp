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


// Test-side generators and brute-force evaluators. The evaluators here walk
// the data structures directly and do not call into the oracle module.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ddnnf/circuit.hpp"
#include "ddnnf/cnf.hpp"
#include "ddnnf/formula.hpp"

namespace testing_support {

using ddnnf::Circuit;
using ddnnf::CnfInstance;
using ddnnf::Formula;
using ddnnf::NodeId;
using ddnnf::NodeKind;

inline std::string var_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

// Random formula over at most `num_vars` variables named a, b, c, ...
inline Formula random_formula(std::mt19937_64& rng, int num_vars, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (depth == 0 || pick(4) == 0) {
    Formula v = Formula::var(var_name(pick(num_vars)));
    return pick(3) == 0 ? Formula::negate(v) : v;
  }
  switch (pick(6)) {
    case 0:
      return Formula::negate(random_formula(rng, num_vars, depth - 1));
    case 1:
      return Formula::iff(random_formula(rng, num_vars, depth - 1),
                          random_formula(rng, num_vars, depth - 1));
    case 2:
    case 3: {
      std::vector<Formula> kids;
      for (int i = 0, n = 2 + pick(2); i < n; ++i)
        kids.push_back(random_formula(rng, num_vars, depth - 1));
      return Formula::conj(std::move(kids));
    }
    default: {
      std::vector<Formula> kids;
      for (int i = 0, n = 2 + pick(2); i < n; ++i)
        kids.push_back(random_formula(rng, num_vars, depth - 1));
      return Formula::disj(std::move(kids));
    }
  }
}

// Random k-CNF with clause widths in [1, max_width]; clauses are normalized
// the way the DIMACS reader would normalize them.
inline CnfInstance random_cnf(std::mt19937_64& rng, int num_vars, int num_clauses,
                              int max_width = 3) {
  CnfInstance cnf;
  cnf.num_vars = num_vars;
  for (int i = 0; i < num_clauses; ++i) {
    ddnnf::Clause cl;
    const int width = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_width));
    for (int j = 0; j < width; ++j) {
      const int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(num_vars));
      cl.push_back(rng() % 2 ? v : -v);
    }
    if (ddnnf::normalize_clause(cl)) cnf.clauses.push_back(cl);
  }
  return cnf;
}

// Truth of f where assignment maps a variable name to a value.
inline bool eval(const Formula& f, const std::map<std::string, bool>& a) {
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Var: return a.at(f.name());
    case Formula::Kind::Not: return !eval(f.children()[0], a);
    case Formula::Kind::And:
      for (const auto& k : f.children())
        if (!eval(k, a)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& k : f.children())
        if (eval(k, a)) return true;
      return false;
    case Formula::Kind::Iff: return eval(f.children()[0], a) == eval(f.children()[1], a);
  }
  return false;
}

inline std::uint64_t count_formula(const Formula& f, const std::vector<std::string>& names) {
  std::uint64_t n = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = (bits >> i) & 1;
    n += eval(f, a);
  }
  return n;
}

// assignment[v] for v in 1..num_vars
inline bool satisfies(const CnfInstance& cnf, const std::vector<bool>& assignment) {
  for (const auto& cl : cnf.clauses) {
    bool sat = false;
    for (int lit : cl) sat = sat || (assignment[static_cast<std::size_t>(std::abs(lit))] == (lit > 0));
    if (!sat) return false;
  }
  return true;
}

inline std::uint64_t count_cnf(const CnfInstance& cnf) {
  std::uint64_t n = 0;
  std::vector<bool> a(static_cast<std::size_t>(cnf.num_vars) + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cnf.num_vars); ++bits) {
    for (int v = 1; v <= cnf.num_vars; ++v) a[static_cast<std::size_t>(v)] = (bits >> (v - 1)) & 1;
    n += satisfies(cnf, a);
  }
  return n;
}

inline bool eval_node(const Circuit& c, NodeId id, const std::vector<bool>& a) {
  const auto& n = c.node(id);
  switch (n.kind) {
    case NodeKind::True: return true;
    case NodeKind::False: return false;
    case NodeKind::Literal: return a[static_cast<std::size_t>(std::abs(n.literal))] == (n.literal > 0);
    case NodeKind::And:
      for (NodeId ch : n.children)
        if (!eval_node(c, ch, a)) return false;
      return true;
    case NodeKind::Or:
      for (NodeId ch : n.children)
        if (eval_node(c, ch, a)) return true;
      return false;
  }
  return false;
}

// Models of the circuit over its declared universe.
inline std::uint64_t count_circuit(const Circuit& c) {
  const auto& u = c.universe();
  std::vector<bool> a(static_cast<std::size_t>(c.max_var()) + 1);
  std::uint64_t n = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << u.size()); ++bits) {
    for (std::size_t i = 0; i < u.size(); ++i) a[static_cast<std::size_t>(u[i])] = (bits >> i) & 1;
    n += eval_node(c, c.root(), a);
  }
  return n;
}

}  // namespace testing_support
