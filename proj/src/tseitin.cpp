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
#include <numeric>
#include <unordered_map>

#include "ddnnf/error.hpp"
#include "ddnnf/formula.hpp"

namespace ddnnf {

namespace {

Formula complement(const Formula& lit) {
  return lit.kind() == Formula::Kind::Not ? lit.children()[0] : Formula::negate(lit);
}

// Constant folding plus duplicate-child removal and x & !x absorption, so
// every emitted gate has distinct, non-complementary inputs. Without this a
// gate such as x <=> a & !a loses its wide clause to tautology removal and
// is no longer recognisable as a gate.
Formula simplify_nnf(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() != K::And && f.kind() != K::Or) return f;
  const K absorbing = f.kind() == K::And ? K::False : K::True;
  std::vector<Formula> kept;
  for (const auto& child : f.children()) {
    Formula g = simplify_nnf(child);
    if (g.kind() == absorbing) return g;
    if (g.is_constant()) continue;
    // Flatten a same-kind child produced by simplification.
    std::vector<Formula> parts;
    if (g.kind() == f.kind()) {
      parts.assign(g.children().begin(), g.children().end());
    } else {
      parts.push_back(std::move(g));
    }
    for (auto& p : parts) {
      if (std::find(kept.begin(), kept.end(), p) != kept.end()) continue;
      if (p.is_literal() && std::find(kept.begin(), kept.end(), complement(p)) != kept.end())
        return f.kind() == K::And ? Formula::bottom() : Formula::top();
      kept.push_back(std::move(p));
    }
  }
  return f.kind() == K::And ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
}

class TseitinEncoder {
 public:
  TseitinEncoder(const std::map<std::string, int>& var_map, int num_original)
      : var_map_(var_map), next_var_(num_original + 1) {}

  /// Asserts a conjunct of the (constant-free) input.
  void assert_conjunct(const Formula& f) {
    if (f.kind() == Formula::Kind::Iff) {
      const auto& l = f.children()[0];
      const auto& r = f.children()[1];
      if (l.is_literal()) return define(literal(l), simplify_nnf(nnf_rewrite(r)));
      if (r.is_literal()) return define(literal(r), simplify_nnf(nnf_rewrite(l)));
    }
    const Formula g = simplify_nnf(nnf_rewrite(f));
    if (g.kind() == Formula::Kind::True) return;
    if (g.kind() == Formula::Kind::False) return emit({});
    assert_nnf(g);
  }

  int next_var() const { return next_var_; }
  std::vector<Clause> take_clauses() { return std::move(clauses_); }

 private:
  void assert_nnf(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::And:
        for (const auto& child : f.children()) assert_nnf(child);
        return;
      case Formula::Kind::Or: {
        Clause clause;
        for (const auto& child : f.children()) clause.push_back(encode(child));
        emit(std::move(clause));
        return;
      }
      default:
        emit({encode(f)});
    }
  }

  /// head <=> body, where body is in NNF.
  void define(int head, const Formula& body) {
    if (body.is_constant()) return emit({body.kind() == Formula::Kind::True ? head : -head});
    if (body.is_literal()) {
      const int lit = literal(body);
      emit({-head, lit});
      emit({head, -lit});
      return;
    }
    std::vector<int> lits;
    for (const auto& child : body.children()) lits.push_back(encode(child));
    // An Or gate is the And gate of the negated head over negated inputs.
    const int sign = body.kind() == Formula::Kind::And ? 1 : -1;
    Clause wide{sign * head};
    for (int l : lits) {
      emit({-sign * head, sign * l});
      wide.push_back(-sign * l);
    }
    emit(std::move(wide));
  }

  int literal(const Formula& f) const {
    if (f.kind() == Formula::Kind::Var) return var_map_.at(f.name());
    return -var_map_.at(f.children()[0].name());
  }

  /// Literal standing for an NNF subformula, introducing a gate if needed.
  int encode(const Formula& f) {
    if (f.is_literal()) return literal(f);
    if (f.kind() != Formula::Kind::And && f.kind() != Formula::Kind::Or)
      throw Error("tseitin: unexpected node after normalisation: " + to_string(f));
    std::string key = to_string(f);
    if (auto it = gates_.find(key); it != gates_.end()) return it->second;
    // Inputs are numbered before the gate that uses them.
    std::vector<int> lits;
    for (const auto& child : f.children()) lits.push_back(encode(child));
    const int x = next_var_++;
    gates_.emplace(std::move(key), x);
    const int sign = f.kind() == Formula::Kind::And ? 1 : -1;
    Clause wide{sign * x};
    for (int l : lits) {
      emit({-sign * x, sign * l});
      wide.push_back(-sign * l);
    }
    emit(std::move(wide));
    return x;
  }

  void emit(Clause clause) {
    if (normalize_clause(clause)) clauses_.push_back(std::move(clause));
  }

  const std::map<std::string, int>& var_map_;
  int next_var_;
  std::unordered_map<std::string, int> gates_;
  std::vector<Clause> clauses_;
};

}  // namespace

TseitinOutput tseitin_transform(const Formula& f) {
  TseitinOutput out;
  const auto names = variables(f);
  for (std::size_t i = 0; i < names.size(); ++i) out.var_map[names[i]] = static_cast<int>(i) + 1;
  const int num_original = static_cast<int>(names.size());
  out.original_vars.resize(names.size());
  std::iota(out.original_vars.begin(), out.original_vars.end(), 1);

  const Formula folded = fold_constants(f);
  out.cnf.num_vars = num_original;
  if (folded.kind() == Formula::Kind::True) return out;
  if (folded.kind() == Formula::Kind::False) {
    out.cnf.clauses.push_back({});
    return out;
  }

  TseitinEncoder encoder(out.var_map, num_original);
  if (folded.kind() == Formula::Kind::And) {
    for (const auto& conjunct : folded.children()) encoder.assert_conjunct(conjunct);
  } else {
    encoder.assert_conjunct(folded);
  }
  out.cnf.clauses = encoder.take_clauses();
  out.cnf.num_vars = encoder.next_var() - 1;
  for (int x = num_original + 1; x < encoder.next_var(); ++x) out.tseitin_vars.push_back(x);
  out.cnf.tseitin_vars = out.tseitin_vars;
  return out;
}

}  // namespace ddnnf
