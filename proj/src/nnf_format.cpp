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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ddnnf/compiler.hpp"
#include "ddnnf/error.hpp"

namespace ddnnf {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0, number = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream in{std::string(text.substr(pos, end - pos))};
    pos = end + 1;
    Line line{number, {}};
    std::string tok;
    while (in >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0] == "c") continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

long long to_int(const std::string& tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected integer, found '" + tok + "'", line, 1);
  return v;
}

void check_literal(long long lit, long long num_vars, std::size_t line) {
  if (lit == 0 || lit > num_vars || -lit > num_vars)
    throw ParseError("literal " + std::to_string(lit) + " outside 1.." + std::to_string(num_vars),
                     line, 1);
}

Circuit parse_c2d(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty NNF input");
  const auto& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "nnf")
    throw ParseError("expected header 'nnf <nodes> <edges> <vars>'", header.number, 1);
  const long long num_nodes = to_int(header.tokens[1], header.number);
  const long long num_edges = to_int(header.tokens[2], header.number);
  const long long num_vars = to_int(header.tokens[3], header.number);
  if (num_nodes <= 0 || num_edges < 0 || num_vars < 0 || num_vars > std::numeric_limits<int>::max())
    throw ParseError("invalid header counts", header.number, 1);
  if (static_cast<long long>(lines.size()) - 1 != num_nodes)
    throw ParseError("header announces " + std::to_string(num_nodes) + " nodes, found " +
                     std::to_string(lines.size() - 1));

  Circuit c;
  c.set_num_vars(static_cast<int>(num_vars));
  std::vector<NodeId> ids;
  ids.reserve(static_cast<std::size_t>(num_nodes));
  long long edges = 0;
  for (long long i = 0; i < num_nodes; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i) + 1];
    const auto& t = line.tokens;
    auto child_ids = [&](std::size_t first) {
      const long long count = to_int(t[first], line.number);
      if (count < 0 || static_cast<long long>(t.size()) != static_cast<long long>(first) + 1 + count)
        throw ParseError("child count does not match the node line", line.number, 1);
      std::vector<NodeId> children;
      for (std::size_t k = first + 1; k < t.size(); ++k) {
        const long long ref = to_int(t[k], line.number);
        if (ref < 0 || ref >= num_nodes)
          throw ParseError("dangling reference to node " + std::to_string(ref), line.number, 1);
        if (ref >= i)
          throw ParseError("reference to node " + std::to_string(ref) +
                               " not defined before use (cyclic or unordered)",
                           line.number, 1);
        children.push_back(ids[static_cast<std::size_t>(ref)]);
      }
      edges += count;
      return children;
    };
    if (t[0] == "L" && t.size() == 2) {
      const long long lit = to_int(t[1], line.number);
      check_literal(lit, num_vars, line.number);
      ids.push_back(c.literal(static_cast<int>(lit)));
    } else if (t[0] == "A" && t.size() >= 2) {
      ids.push_back(c.conjoin(child_ids(1)));
    } else if (t[0] == "O" && t.size() >= 3) {
      const long long j = to_int(t[1], line.number);
      if (j < 0 || j > num_vars) throw ParseError("decision variable out of range", line.number, 1);
      ids.push_back(c.disjoin(child_ids(2), static_cast<int>(j)));
    } else {
      throw ParseError("unrecognised node line '" + t[0] + "'", line.number, 1);
    }
  }
  if (edges != num_edges)
    throw ParseError("header announces " + std::to_string(num_edges) + " edges, found " +
                     std::to_string(edges));
  c.set_root(ids.back());
  return c;
}

Circuit parse_d4(std::string_view text, std::optional<int> declared_vars) {
  struct Edge {
    long long to;
    std::vector<int> lits;
  };
  struct D4Node {
    char kind;
    std::size_t line;
    std::vector<Edge> edges;
  };
  std::map<long long, D4Node> nodes;
  std::vector<std::pair<long long, Edge>> edges;
  std::vector<std::size_t> edge_lines;
  long long max_lit = 0;

  for (const auto& line : split_lines(text)) {
    const auto& t = line.tokens;
    if (t.size() == 3 && t[1].size() == 1 && std::isalpha(static_cast<unsigned char>(t[1][0]))) {
      const char kind = t[1][0];
      if (kind != 'o' && kind != 'a' && kind != 't' && kind != 'f')
        throw ParseError("unknown node type '" + t[1] + "'", line.number, 1);
      const long long id = to_int(t[0], line.number);
      if (!nodes.emplace(id, D4Node{kind, line.number, {}}).second)
        throw ParseError("node " + std::to_string(id) + " defined twice", line.number, 1);
      continue;
    }
    if (t.size() < 3 || t.back() != "0")
      throw ParseError("expected '<from> <to> <lits> 0'", line.number, 1);
    Edge e{to_int(t[1], line.number), {}};
    for (std::size_t k = 2; k + 1 < t.size(); ++k) {
      const long long lit = to_int(t[k], line.number);
      if (lit == 0 || lit > std::numeric_limits<int>::max() || -lit > std::numeric_limits<int>::max())
        throw ParseError("invalid literal", line.number, 1);
      max_lit = std::max(max_lit, lit < 0 ? -lit : lit);
      e.lits.push_back(static_cast<int>(lit));
    }
    edges.emplace_back(to_int(t[0], line.number), std::move(e));
    edge_lines.push_back(line.number);
  }
  const long long num_vars = declared_vars ? *declared_vars : max_lit;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto& [from, e] = edges[k];
    auto it = nodes.find(from);
    if (it == nodes.end() || !nodes.count(e.to))
      throw ParseError("edge refers to an undefined node", edge_lines[k], 1);
    for (int lit : e.lits) check_literal(lit, num_vars, edge_lines[k]);
    it->second.edges.push_back(std::move(e));
  }
  if (!nodes.count(1)) throw ParseError("d4 input has no root node 1");

  // Post-order DFS from the root with an explicit stack; grey nodes expose
  // cycles.
  Circuit c;
  c.set_num_vars(static_cast<int>(num_vars));
  std::unordered_map<long long, NodeId> built;
  std::unordered_map<long long, int> state;  // 1 = on stack, 2 = done
  std::vector<std::pair<long long, std::size_t>> stack{{1, 0}};
  state[1] = 1;
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const D4Node& n = nodes.at(id);
    if (next < n.edges.size()) {
      const long long to = n.edges[next++].to;
      const int s = state[to];
      if (s == 1) throw ParseError("cyclic reference through node " + std::to_string(to), n.line, 1);
      if (s == 0) {
        state[to] = 1;
        stack.emplace_back(to, 0);
      }
      continue;
    }
    NodeId result;
    if (n.kind == 't') {
      result = c.top();
    } else if (n.kind == 'f') {
      result = c.bottom();
    } else {
      std::vector<NodeId> children;
      for (const auto& e : n.edges) {
        std::vector<NodeId> parts;
        for (int lit : e.lits) parts.push_back(c.literal(lit));
        const NodeId target = built.at(e.to);
        if (target != c.top() || parts.empty()) parts.push_back(target);
        if (n.kind == 'a') {
          children.insert(children.end(), parts.begin(), parts.end());
        } else {
          children.push_back(parts.size() == 1 ? parts[0] : c.conjoin(parts));
        }
      }
      // Literals repeated across edges of one And collapse to one child.
      std::sort(children.begin(), children.end());
      if (n.kind == 'a') children.erase(std::unique(children.begin(), children.end()), children.end());
      result = n.kind == 'a' ? c.conjoin(std::move(children)) : c.disjoin(std::move(children));
    }
    built[id] = result;
    state[id] = 2;
    stack.pop_back();
  }
  c.set_root(built.at(1));
  return c;
}

}  // namespace

Circuit parse_nnf(std::string_view text, NnfFormat format, std::optional<int> num_vars) {
  Circuit c = format == NnfFormat::C2d ? parse_c2d(text) : parse_d4(text, num_vars);
  if (format == NnfFormat::C2d && num_vars) {
    if (*num_vars < c.max_var()) throw ParseError("--vars smaller than the header's count");
    c.set_num_vars(*num_vars);
  }
  return c;
}

}  // namespace ddnnf
