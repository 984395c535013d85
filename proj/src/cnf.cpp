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

#include "ddnnf/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ddnnf/error.hpp"

namespace ddnnf {

bool normalize_clause(Clause& clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (int lit : clause) {
    if (lit > 0 && std::binary_search(clause.begin(), clause.end(), -lit)) return false;
  }
  return true;
}

bool CnfInstance::has_empty_clause() const {
  return std::any_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.empty(); });
}

std::vector<int> CnfInstance::variables() const {
  std::vector<int> vars;
  for (const auto& clause : clauses)
    for (int lit : clause) vars.push_back(var_of(lit));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

CnfInstance parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  CnfInstance cnf;
  bool have_header = false;
  long long declared_clauses = 0;
  long long read_clauses = 0;
  Clause current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool done = false;
  while (pos <= text.size() && !done) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first);
    if (line[0] == 'c') continue;
    if (line[0] == '%') break;  // SATLIB trailer
    if (line[0] == 'p') {
      if (have_header) throw ParseError("duplicate 'p' header", line_no, 1);
      std::istringstream in{std::string(line)};
      std::string p, fmt;
      long long v = -1, c = -1;
      if (!(in >> p >> fmt >> v >> c) || p != "p" || fmt != "cnf" || v < 0 || c < 0 ||
          v > std::numeric_limits<int>::max())
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no, 1);
      cnf.num_vars = static_cast<int>(v);
      declared_clauses = c;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("missing 'p cnf' header before clauses", line_no, 1);

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      long long lit = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), lit);
      if (ec != std::errc()) throw ParseError("expected integer literal", line_no, first + i + 1);
      const std::size_t column = first + i + 1;
      i = static_cast<std::size_t>(ptr - line.data());
      if (lit == 0) {
        ++read_clauses;
        if (normalize_clause(current)) cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > cnf.num_vars || -lit > cnf.num_vars)
        throw ParseError("literal " + std::to_string(lit) + " out of range (num_vars=" +
                             std::to_string(cnf.num_vars) + ")",
                         line_no, column);
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) {
    if (warnings) warnings->push_back("last clause is not terminated by 0");
    ++read_clauses;
    if (normalize_clause(current)) cnf.clauses.push_back(std::move(current));
  }
  if (warnings && read_clauses != declared_clauses)
    warnings->push_back("header announces " + std::to_string(declared_clauses) +
                        " clauses, read " + std::to_string(read_clauses));
  return cnf;
}

std::string write_dimacs(const CnfInstance& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out += std::to_string(lit) + ' ';
    out += "0\n";
  }
  return out;
}

CnfInstance condition(const CnfInstance& cnf, int lit) {
  CnfInstance out;
  out.num_vars = cnf.num_vars;
  out.tseitin_vars = cnf.tseitin_vars;
  out.clauses.reserve(cnf.clauses.size());
  for (const auto& clause : cnf.clauses) {
    if (std::binary_search(clause.begin(), clause.end(), lit)) continue;
    Clause reduced;
    reduced.reserve(clause.size());
    for (int l : clause)
      if (l != -lit) reduced.push_back(l);
    out.clauses.push_back(std::move(reduced));
  }
  return out;
}

namespace {

struct UnionFind {
  std::unordered_map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent.emplace(x, x);
      return x;
    }
    if (it->second == x) return x;
    int root = find(it->second);
    parent[x] = root;
    return root;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<CnfInstance> split_components(const CnfInstance& cnf) {
  UnionFind uf;
  for (const auto& clause : cnf.clauses) {
    if (clause.empty()) continue;
    for (std::size_t i = 1; i < clause.size(); ++i) uf.unite(var_of(clause[0]), var_of(clause[i]));
    uf.find(var_of(clause[0]));
  }
  // Components are keyed by their smallest variable; empty clauses get key 0.
  std::map<int, CnfInstance> groups;
  std::unordered_map<int, int> key_of_root;
  for (const auto& [var, _] : uf.parent) {
    auto [it, inserted] = key_of_root.emplace(uf.find(var), var);
    if (!inserted) it->second = std::min(it->second, var);
  }
  for (const auto& clause : cnf.clauses) {
    const int key = clause.empty() ? 0 : key_of_root.at(uf.find(var_of(clause[0])));
    auto& group = groups[key];
    group.num_vars = cnf.num_vars;
    group.clauses.push_back(clause);
  }
  std::vector<CnfInstance> out;
  out.reserve(groups.size());
  for (auto& [key, group] : groups) {
    const auto vars = group.variables();
    for (int x : cnf.tseitin_vars)
      if (std::binary_search(vars.begin(), vars.end(), x)) group.tseitin_vars.push_back(x);
    out.push_back(std::move(group));
  }
  return out;
}

namespace {

class GateIndex {
 public:
  explicit GateIndex(const CnfInstance& cnf) : cnf_(cnf) {
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
      const auto& clause = cnf.clauses[i];
      for (int lit : clause) occurrences_[lit].push_back(i);
      if (clause.size() == 2) binaries_.emplace(clause[0], clause[1]);
    }
  }

  bool has_binary(int a, int b) const {
    return binaries_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  std::vector<Gate> gates(int var) const {
    std::vector<Gate> found;
    for (int head : {var, -var}) {
      auto it = occurrences_.find(head);
      if (it == occurrences_.end()) continue;
      for (std::size_t ci : it->second) {
        const auto& clause = cnf_.clauses[ci];
        if (clause.size() < 2) continue;
        Gate gate{head, {}};
        bool complete = true;
        for (int m : clause) {
          if (m == head) continue;
          if (!has_binary(-head, -m)) {
            complete = false;
            break;
          }
          gate.body.push_back(-m);
        }
        if (!complete) continue;
        std::sort(gate.body.begin(), gate.body.end());
        if (std::none_of(found.begin(), found.end(), [&](const Gate& g) {
              return g.head == gate.head && g.body == gate.body;
            }))
          found.push_back(std::move(gate));
      }
    }
    return found;
  }

 private:
  const CnfInstance& cnf_;
  std::unordered_map<int, std::vector<std::size_t>> occurrences_;
  std::set<std::pair<int, int>> binaries_;
};

int max_body_var(const Gate& g) {
  int m = 0;
  for (int l : g.body) m = std::max(m, var_of(l));
  return m;
}

}  // namespace

std::vector<Gate> find_gates(const CnfInstance& cnf, int var) { return GateIndex(cnf).gates(var); }

std::vector<int> detect_tseitin_vars(const CnfInstance& cnf) {
  GateIndex index(cnf);
  // accepted[v] holds v's chosen body variables.
  std::unordered_map<int, std::vector<int>> accepted;

  auto reaches = [&](int from, int target) {
    std::vector<int> stack{from};
    std::set<int> seen;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v == target) return true;
      if (!seen.insert(v).second) continue;
      auto it = accepted.find(v);
      if (it == accepted.end()) continue;
      for (int b : it->second) stack.push_back(b);
    }
    return false;
  };

  for (int var = cnf.num_vars; var >= 1; --var) {
    auto candidates = index.gates(var);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Gate& a, const Gate& b) { return max_body_var(a) < max_body_var(b); });
    for (const auto& gate : candidates) {
      std::vector<int> body;
      for (int l : gate.body) body.push_back(var_of(l));
      const bool cyclic =
          std::any_of(body.begin(), body.end(), [&](int b) { return reaches(b, var); });
      if (cyclic) continue;
      accepted.emplace(var, std::move(body));
      break;
    }
  }
  std::vector<int> out;
  for (const auto& [v, _] : accepted) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ddnnf
