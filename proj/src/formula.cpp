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

#include "ddnnf/formula.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "ddnnf/error.hpp"

namespace ddnnf {

namespace {

Formula nary(Formula::Kind kind, std::vector<Formula> children,
             Formula (*neutral)(), Formula (*build)(Formula::Kind, std::vector<Formula>)) {
  std::vector<Formula> flat;
  flat.reserve(children.size());
  for (auto& child : children) {
    if (child.kind() == kind) {
      for (const auto& grandchild : child.children()) flat.push_back(grandchild);
    } else {
      flat.push_back(std::move(child));
    }
  }
  if (flat.empty()) return neutral();
  if (flat.size() == 1) return std::move(flat.front());
  return build(kind, std::move(flat));
}

int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Iff: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int min_level, std::string& out) {
  if (level(f) < min_level) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var: out += f.name(); break;
    case Formula::Kind::True: out += "true"; break;
    case Formula::Kind::False: out += "false"; break;
    case Formula::Kind::Not:
      out += '!';
      print_at(f.children()[0], 3, out);
      break;
    case Formula::Kind::Iff:
      print_at(f.children()[0], 0, out);
      out += " <=> ";
      print_at(f.children()[1], 1, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* sep = f.kind() == Formula::Kind::And ? " & " : " | ";
      const int min = f.kind() == Formula::Kind::And ? 3 : 2;
      bool first = true;
      for (const auto& child : f.children()) {
        if (!first) out += sep;
        first = false;
        print_at(child, min, out);
      }
      break;
    }
  }
}

Formula nnf(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Var: return negated ? Formula::negate(f) : f;
    case K::True: return negated ? Formula::bottom() : f;
    case K::False: return negated ? Formula::top() : f;
    case K::Not: return nnf(f.children()[0], !negated);
    case K::And:
    case K::Or: {
      std::vector<Formula> children;
      for (const auto& child : f.children()) children.push_back(nnf(child, negated));
      const bool conjunctive = (f.kind() == K::And) != negated;
      return conjunctive ? Formula::conj(std::move(children)) : Formula::disj(std::move(children));
    }
    case K::Iff: {
      const auto& l = f.children()[0];
      const auto& r = f.children()[1];
      // p <=> q   is (p & q) | (!p & !q);   !(p <=> q)  is (p & !q) | (!p & q)
      return Formula::disj({Formula::conj({nnf(l, false), nnf(r, negated)}),
                            Formula::conj({nnf(l, true), nnf(r, !negated)})});
    }
  }
  return f;
}

}  // namespace

Formula Formula::var(std::string name) {
  if (name.empty()) throw Error("empty variable name");
  return Formula(Kind::Var, std::move(name), {});
}

Formula Formula::negate(Formula child) { return Formula(Kind::Not, {}, {std::move(child)}); }

Formula Formula::conj(std::vector<Formula> children) {
  return nary(Kind::And, std::move(children), &Formula::top,
              [](Kind k, std::vector<Formula> c) { return Formula(k, {}, std::move(c)); });
}

Formula Formula::disj(std::vector<Formula> children) {
  return nary(Kind::Or, std::move(children), &Formula::bottom,
              [](Kind k, std::vector<Formula> c) { return Formula(k, {}, std::move(c)); });
}

Formula Formula::iff(Formula left, Formula right) {
  return Formula(Kind::Iff, {}, {std::move(left), std::move(right)});
}

Formula Formula::top() { return Formula(Kind::True, {}, {}); }
Formula Formula::bottom() { return Formula(Kind::False, {}, {}); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> order;
  std::unordered_set<std::string> seen;
  auto visit = [&](auto&& self, const Formula& g) -> void {
    if (g.kind() == Formula::Kind::Var) {
      if (seen.insert(g.name()).second) order.push_back(g.name());
      return;
    }
    for (const auto& child : g.children()) self(self, child);
  };
  visit(visit, f);
  return order;
}

Formula nnf_rewrite(const Formula& f) { return nnf(f, false); }

Formula fold_constants(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Var:
    case K::True:
    case K::False:
      return f;
    case K::Not: {
      Formula child = fold_constants(f.children()[0]);
      if (child.kind() == K::True) return Formula::bottom();
      if (child.kind() == K::False) return Formula::top();
      return Formula::negate(std::move(child));
    }
    case K::And:
    case K::Or: {
      const K absorbing = f.kind() == K::And ? K::False : K::True;
      std::vector<Formula> kept;
      for (const auto& child : f.children()) {
        Formula g = fold_constants(child);
        if (g.kind() == absorbing) return g;
        if (!g.is_constant()) kept.push_back(std::move(g));
      }
      return f.kind() == K::And ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
    }
    case K::Iff: {
      Formula l = fold_constants(f.children()[0]);
      Formula r = fold_constants(f.children()[1]);
      if (l.is_constant()) std::swap(l, r);
      if (r.kind() == K::True) return l;
      if (r.kind() == K::False) {
        if (l.kind() == K::True) return Formula::bottom();
        if (l.kind() == K::False) return Formula::top();
        return Formula::negate(std::move(l));
      }
      return Formula::iff(std::move(l), std::move(r));
    }
  }
  return f;
}

std::string write_tvars(std::span<const int> tseitin_vars) {
  std::ostringstream out;
  out << "t " << tseitin_vars.size() << '\n';
  for (std::size_t i = 0; i < tseitin_vars.size(); ++i) {
    if (i) out << ' ';
    out << tseitin_vars[i];
  }
  out << '\n';
  return out.str();
}

std::vector<int> parse_tvars(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long long count = -1;
  if (!(in >> tag >> count) || tag != "t" || count < 0)
    throw ParseError("tvars: expected header 't <count>'", 1, 1);
  std::vector<int> vars;
  long long v;
  while (in >> v) {
    if (v <= 0 || v > std::numeric_limits<int>::max())
      throw ParseError("tvars: variable index out of range: " + std::to_string(v));
    vars.push_back(static_cast<int>(v));
  }
  if (!in.eof()) throw ParseError("tvars: non-integer token");
  if (static_cast<long long>(vars.size()) != count)
    throw ParseError("tvars: header announces " + std::to_string(count) + " variables, found " +
                     std::to_string(vars.size()));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string write_var_map(const std::map<std::string, int>& var_map) {
  std::vector<std::pair<int, std::string>> by_index;
  for (const auto& [name, idx] : var_map) by_index.emplace_back(idx, name);
  std::sort(by_index.begin(), by_index.end());
  std::string out;
  for (const auto& [idx, name] : by_index) out += name + ' ' + std::to_string(idx) + '\n';
  return out;
}

}  // namespace ddnnf
