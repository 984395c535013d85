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


#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <set>

#include "ddnnf/error.hpp"
#include "ddnnf/formula.hpp"
#include "support.hpp"

using namespace ddnnf;
using testing_support::count_formula;
using testing_support::eval;
using testing_support::random_formula;

namespace {

Formula v(const char* n) { return Formula::var(n); }

// Precedence-climbing reference parser, written independently of the
// production recursive-descent parser.
class ReferenceParser {
 public:
  explicit ReferenceParser(std::string s) {
    for (std::size_t i = 0; i < s.size();) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      } else if (s.compare(i, 3, "<=>") == 0) {
        toks_.push_back("<=>");
        i += 3;
      } else if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        toks_.push_back(s.substr(i, j - i));
        i = j;
      } else {
        toks_.push_back(std::string(1, s[i++]));
      }
    }
  }
  Formula parse() { return binary(0); }

 private:
  static int prec(const std::string& op) {
    if (op == "<=>") return 1;
    if (op == "|") return 2;
    if (op == "&") return 3;
    return 0;
  }
  Formula binary(int min_prec) {
    Formula lhs = unary();
    while (pos_ < toks_.size() && prec(toks_[pos_]) > min_prec) {
      const std::string op = toks_[pos_++];
      // Every operator is left-associative.
      Formula rhs = binary(prec(op));
      if (op == "<=>") lhs = Formula::iff(lhs, rhs);
      else if (op == "|") lhs = Formula::disj({lhs, rhs});
      else lhs = Formula::conj({lhs, rhs});
    }
    return lhs;
  }
  Formula unary() {
    const std::string t = toks_[pos_++];
    if (t == "!") return Formula::negate(unary());
    if (t == "(") {
      Formula f = binary(0);
      ++pos_;
      return f;
    }
    if (t == "true") return Formula::top();
    if (t == "false") return Formula::bottom();
    return Formula::var(t);
  }
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(testing_support::var_name(i));
  return out;
}

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Not: return f.children()[0].kind() == Formula::Kind::Var;
    case Formula::Kind::Iff: return false;
    default:
      return std::all_of(f.children().begin(), f.children().end(),
                         [](const Formula& k) { return is_nnf(k); });
  }
}

}  // namespace

TEST(ParseFormula, OverlappingDisjunction) {
  EXPECT_EQ(parse_formula("(a & b) | (c & d)"),
            Formula::disj({Formula::conj({v("a"), v("b")}), Formula::conj({v("c"), v("d")})}));
}

TEST(ParseFormula, Constants) {
  EXPECT_EQ(parse_formula("true"), Formula::top());
  EXPECT_EQ(parse_formula("  false # trailing comment"), Formula::bottom());
}

TEST(ParseFormula, IffBindsLoosest) {
  EXPECT_EQ(parse_formula("a <=> b & c"), Formula::iff(v("a"), Formula::conj({v("b"), v("c")})));
}

TEST(ParseFormula, FlattensAssociativeChains) {
  const Formula f = parse_formula("a & (b & c) & d");
  ASSERT_EQ(f.kind(), Formula::Kind::And);
  EXPECT_EQ(f.children().size(), 4u);
  EXPECT_EQ(parse_formula("a | b | c").children().size(), 3u);
}

TEST(ParseFormula, AgreesWithReferenceParser) {
  const std::vector<std::string> inputs = {
      "a & b | c",           "a | b & c",          "!a & b",
      "!(a & b)",            "a <=> b <=> c",      "a | b <=> c & d",
      "!!a | b",             "(a <=> b) & c",      "a & (b | c) & d",
      "a | !b & !c | d",     "a <=> !b",           "true & a | false",
      "((a))",               "a & b & c | d & e",  "!(a | b) <=> !a & !b",
      "x_1 | y2 & _z",       "a <=> (b <=> c)",    "!a <=> b | c & d",
      "(a | b) & (c | d)",   "a & !(b <=> c) | d",
  };
  ASSERT_EQ(inputs.size(), 20u);
  for (const auto& s : inputs) EXPECT_EQ(parse_formula(s), ReferenceParser(s).parse()) << s;
}

TEST(ParseFormula, MultiLineWithComments) {
  EXPECT_EQ(parse_formula("# header\na &\n  # mid\n b\n"), Formula::conj({v("a"), v("b")}));
}

TEST(ParseFormula, ErrorsCarryPosition) {
  try {
    parse_formula("a &\n  (b | )");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("  # only a comment\n"), ParseError);
  EXPECT_THROW(parse_formula("a b"), ParseError);
  EXPECT_THROW(parse_formula("a $ b"), ParseError);
  EXPECT_THROW(parse_formula("(a"), ParseError);
  EXPECT_THROW(parse_formula("a <= b"), ParseError);
}

TEST(ParseFormula, PrintRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_formula(rng, 5, 5);
    const std::string text = to_string(f);
    EXPECT_EQ(parse_formula(text), f) << text;
  }
}

TEST(NnfRewrite, DeMorgan) {
  EXPECT_EQ(nnf_rewrite(parse_formula("!(a & b)")),
            Formula::disj({Formula::negate(v("a")), Formula::negate(v("b"))}));
}

TEST(NnfRewrite, DoubleNegation) { EXPECT_EQ(nnf_rewrite(parse_formula("!!a")), v("a")); }

TEST(NnfRewrite, IffExpansion) {
  EXPECT_EQ(nnf_rewrite(parse_formula("a <=> b")),
            Formula::disj({Formula::conj({v("a"), v("b")}),
                           Formula::conj({Formula::negate(v("a")), Formula::negate(v("b"))})}));
}

TEST(NnfRewrite, PreservesSemanticsAndShape) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_formula(rng, 4, 4);
    const Formula g = nnf_rewrite(f);
    EXPECT_TRUE(is_nnf(g)) << to_string(g);
    for (unsigned bits = 0; bits < 16; ++bits) {
      std::map<std::string, bool> a;
      for (int k = 0; k < 4; ++k) a[testing_support::var_name(k)] = (bits >> k) & 1;
      ASSERT_EQ(eval(f, a), eval(g, a)) << to_string(f);
    }
  }
}

TEST(FoldConstants, AbsorbsConstants) {
  EXPECT_EQ(fold_constants(parse_formula("a & true")), v("a"));
  EXPECT_EQ(fold_constants(parse_formula("a | true")), Formula::top());
  EXPECT_EQ(fold_constants(parse_formula("!(a & false)")), Formula::top());
  EXPECT_EQ(fold_constants(parse_formula("a <=> false")), Formula::negate(v("a")));
}

TEST(Tseitin, SevenClausesForOverlappingDisjunction) {
  const auto t = tseitin_transform(parse_formula("(a & b) | (c & d)"));
  EXPECT_EQ(t.cnf.num_vars, 6);
  ASSERT_EQ(t.cnf.clauses.size(), 7u);
  EXPECT_EQ(t.tseitin_vars, (std::vector<int>{5, 6}));
  EXPECT_EQ(t.original_vars, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(t.var_map.at("a"), 1);
  EXPECT_EQ(t.var_map.at("d"), 4);
  const std::set<Clause> expected = {{-5, 1}, {-5, 2}, {-2, -1, 5}, {-6, 3},
                                     {-6, 4}, {-4, -3, 6}, {5, 6}};
  EXPECT_EQ(std::set<Clause>(t.cnf.clauses.begin(), t.cnf.clauses.end()), expected);
}

TEST(Tseitin, SingleLiteralIsUnitClause) {
  const auto t = tseitin_transform(parse_formula("!a"));
  EXPECT_EQ(t.cnf.clauses, (std::vector<Clause>{{-1}}));
  EXPECT_TRUE(t.tseitin_vars.empty());
}

TEST(Tseitin, DisjunctionWithLiteral) {
  const auto t = tseitin_transform(parse_formula("(a & b) | c"));
  EXPECT_EQ(t.tseitin_vars, (std::vector<int>{4}));
  const std::set<Clause> expected = {{3, 4}, {-4, 1}, {-4, 2}, {-2, -1, 4}};
  EXPECT_EQ(std::set<Clause>(t.cnf.clauses.begin(), t.cnf.clauses.end()), expected);
}

TEST(Tseitin, Constants) {
  EXPECT_TRUE(tseitin_transform(Formula::top()).cnf.clauses.empty());
  const auto bottom = tseitin_transform(Formula::bottom());
  ASSERT_EQ(bottom.cnf.clauses.size(), 1u);
  EXPECT_TRUE(bottom.cnf.clauses[0].empty());
  // Folded-away variables stay in the universe as free variables.
  const auto t = tseitin_transform(parse_formula("a | (b & false)"));
  EXPECT_EQ(t.cnf.num_vars, 2);
  EXPECT_EQ(t.cnf.clauses, (std::vector<Clause>{{1}}));
}

TEST(Tseitin, SharedSubformulaGetsOneGate) {
  // Unshared this would need six gates.
  const auto t =
      tseitin_transform(parse_formula("(((a & b) | c) & d) | (((a & b) | c) & e)"));
  EXPECT_EQ(t.tseitin_vars.size(), 4u);
}

TEST(Tseitin, NoisyOrUsesOneGatePerParent) {
  const auto t = tseitin_transform(parse_formula("a & (a <=> (t1 & u1) | (t2 & u2) | (t3 & u3))"));
  EXPECT_EQ(t.tseitin_vars.size(), 3u);
}

TEST(Tseitin, ModelBijectionAndExistsElimination) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_formula(rng, 4, 4);
    const auto t = tseitin_transform(f);
    if (t.cnf.num_vars > 16) continue;
    // Universe partition.
    std::vector<int> all = t.original_vars;
    all.insert(all.end(), t.tseitin_vars.begin(), t.tseitin_vars.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), static_cast<std::size_t>(t.cnf.num_vars));
    for (int k = 0; k < t.cnf.num_vars; ++k) ASSERT_EQ(all[k], k + 1);

    std::vector<std::string> fvars;
    for (const auto& [name, idx] : t.var_map) fvars.push_back(name);
    EXPECT_EQ(count_formula(f, fvars), testing_support::count_cnf(t.cnf)) << to_string(f);

    // Projection of the CNF's models onto the original variables.
    std::set<std::uint64_t> projected;
    std::vector<bool> a(static_cast<std::size_t>(t.cnf.num_vars) + 1);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t.cnf.num_vars); ++bits) {
      for (int k = 1; k <= t.cnf.num_vars; ++k) a[k] = (bits >> (k - 1)) & 1;
      if (!testing_support::satisfies(t.cnf, a)) continue;
      std::uint64_t y = 0;
      for (std::size_t k = 0; k < t.original_vars.size(); ++k)
        if (a[t.original_vars[k]]) y |= std::uint64_t{1} << k;
      projected.insert(y);
    }
    std::set<std::uint64_t> reference;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << fvars.size()); ++bits) {
      std::map<std::string, bool> m;
      std::uint64_t y = 0;
      for (std::size_t k = 0; k < fvars.size(); ++k) {
        m[fvars[k]] = (bits >> k) & 1;
        const int idx = t.var_map.at(fvars[k]);
        const auto pos = std::lower_bound(t.original_vars.begin(), t.original_vars.end(), idx) -
                         t.original_vars.begin();
        if (m[fvars[k]]) y |= std::uint64_t{1} << pos;
      }
      if (eval(f, m)) reference.insert(y);
    }
    EXPECT_EQ(projected, reference) << to_string(f);
  }
}

TEST(Tseitin, ClauseCountIsLinear) {
  // Bound from the unshared NNF tree: every And/Or node is at most one gate
  // emitting fan-in + 1 clauses, plus one root clause.
  struct Tally {
    std::size_t gates = 0, fanin = 0;
    void walk(const Formula& f) {
      if (f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or) {
        ++gates;
        fanin += f.children().size();
      }
      for (const auto& k : f.children()) walk(k);
    }
  };
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_formula(rng, 5, 5);
    const auto t = tseitin_transform(f);
    Tally tally;
    tally.walk(nnf_rewrite(fold_constants(f)));
    EXPECT_LE(t.cnf.clauses.size(), tally.gates + tally.fanin + 1) << to_string(f);
    EXPECT_LE(t.tseitin_vars.size(), tally.gates);
  }
}

TEST(Sidecars, TvarsRoundTrip) {
  const std::vector<int> x = {4, 7, 9};
  EXPECT_EQ(write_tvars(x), "t 3\n4 7 9\n");
  EXPECT_EQ(parse_tvars(write_tvars(x)), x);
  EXPECT_EQ(parse_tvars("t 0\n\n"), std::vector<int>{});
  EXPECT_THROW(parse_tvars("t 2\n1\n"), ParseError);
}

TEST(Sidecars, VarMap) {
  EXPECT_EQ(write_var_map({{"b", 2}, {"a", 1}}), "a 1\nb 2\n");
}
