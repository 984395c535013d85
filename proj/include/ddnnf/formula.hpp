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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddnnf/cnf.hpp"

namespace ddnnf {

/// Immutable propositional formula tree over named variables.
///
/// The factory functions keep And/Or n-ary with at least two children:
/// nested And-under-And (Or-under-Or) is flattened, a single child is
/// returned as is, and an empty list yields the neutral constant.
class Formula {
 public:
  enum class Kind { Var, Not, And, Or, Iff, True, False };

  static Formula var(std::string name);
  static Formula negate(Formula child);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula iff(Formula left, Formula right);
  static Formula top();
  static Formula bottom();

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::span<const Formula> children() const noexcept { return children_; }

  bool is_literal() const noexcept {
    return kind_ == Kind::Var || (kind_ == Kind::Not && children_[0].kind_ == Kind::Var);
  }
  bool is_constant() const noexcept { return kind_ == Kind::True || kind_ == Kind::False; }

  bool operator==(const Formula& other) const = default;

 private:
  Formula(Kind kind, std::string name, std::vector<Formula> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_;
  std::string name_;
  std::vector<Formula> children_;
};

/// Parses the textual formula language:
///
///   formula := iff ; iff := or ("<=>" or)* ; or := and ("|" and)* ;
///   and := unary ("&" unary)* ; unary := "!" unary | atom ;
///   atom := IDENT | "true" | "false" | "(" formula ")"
///
/// `#` starts a comment running to end of line.  `<=>` associates to the
/// left.  Throws ParseError carrying line and column.
Formula parse_formula(std::string_view text);

/// Prints in the same language with minimal parentheses;
/// parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Variable names in order of first occurrence (left to right).
std::vector<std::string> variables(const Formula& f);

/// Pushes negations down to variables and expands `p <=> q` into
/// (p & q) | (!p & !q).  Constants are kept; see fold_constants.
Formula nnf_rewrite(const Formula& f);

/// Absorbs True/False into their parents.  The result is either a bare
/// constant or contains no constant at all.
Formula fold_constants(const Formula& f);

struct TseitinOutput {
  CnfInstance cnf;
  /// name -> index; indices 1..|original| are original variables in order of
  /// first occurrence, Tseitin variables follow.
  std::map<std::string, int> var_map;
  std::vector<int> tseitin_vars;   // sorted
  std::vector<int> original_vars;  // sorted
};

/// Tseitin transformation with the full biconditional gate encoding.
///
/// The input is normalised first (constants folded, negations pushed down).
/// Every internal And/Or below the root gets one fresh variable; structurally
/// identical subformulas share a gate.  The root itself is asserted directly:
/// a root Or becomes one clause, a root And contributes each conjunct.  A
/// root conjunct `l <=> g` with `l` a literal is encoded as the gate
/// definition with head `l` instead of being expanded.  True yields zero
/// clauses and False one empty clause.
TseitinOutput tseitin_transform(const Formula& f);

/// `.tvars` sidecar: "t <count>\n<idx> <idx> ...\n".
std::string write_tvars(std::span<const int> tseitin_vars);
std::vector<int> parse_tvars(std::string_view text);

/// `.map` sidecar: one "name index" per line, ordered by index.
std::string write_var_map(const std::map<std::string, int>& var_map);

}  // namespace ddnnf
