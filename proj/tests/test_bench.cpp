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

#include "ddnnf/bench.hpp"
#include "ddnnf/counting.hpp"
#include "ddnnf/error.hpp"
#include "support.hpp"

using namespace ddnnf;

namespace {

std::uint64_t brute_count(const Formula& f) { return testing_support::count_formula(f, variables(f)); }

std::uint64_t pipeline_count(const Formula& f) {
  return static_cast<std::uint64_t>(model_count(compile(tseitin_transform(f).cnf)));
}

}  // namespace

TEST(Generators, OverlapMatchesTextForm) {
  EXPECT_EQ(gen_overlapping_disjunction(2), parse_formula("(a1 & b1) | (a2 & b2)"));
  EXPECT_EQ(gen_overlapping_disjunction(1), parse_formula("a1 & b1"));
  EXPECT_EQ(brute_count(gen_overlapping_disjunction(3)), 37u);
  EXPECT_EQ(pipeline_count(gen_overlapping_disjunction(3)), 37u);
}

TEST(Generators, NoisyOr) {
  const Formula f = gen_noisy_or(2);
  EXPECT_EQ(variables(f).size(), 5u);
  EXPECT_EQ(brute_count(f), 7u);
  EXPECT_EQ(brute_count(gen_noisy_or(1)), 1u);
  // With one parent the disjunction collapses and a heads the gate itself.
  EXPECT_TRUE(tseitin_transform(gen_noisy_or(1)).tseitin_vars.empty());
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(tseitin_transform(gen_noisy_or(n)).tseitin_vars.size(), static_cast<std::size_t>(n));
  EXPECT_THROW(gen_noisy_or(0), PreconditionError);
}

TEST(Generators, MutexCptShape) {
  const Formula one = gen_mutex_cpt(1, 2, 1);
  ASSERT_EQ(one.kind(), Formula::Kind::Iff);
  const Formula cases = one.children()[1];
  ASSERT_EQ(cases.kind(), Formula::Kind::Or);
  EXPECT_EQ(cases.children().size(), 4u);
  EXPECT_EQ(to_string(one), "n1 <=> r1 & r2 & theta_n1_0 | r1 & !r2 & theta_n1_1 | "
                            "!r1 & r2 & theta_n1_2 | !r1 & !r2 & theta_n1_3");
  EXPECT_EQ(gen_mutex_cpt(1, 0, 1), parse_formula("n1 <=> theta_n1_0"));
  EXPECT_THROW(gen_mutex_cpt(1, 4, 1), PreconditionError);
}

TEST(Generators, MutexCasesAreExclusive) {
  // At most one case of every table holds in any assignment.
  const Formula f = gen_mutex_cpt(3, 2, 5);
  const auto names = variables(f);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); bits += 7) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = (bits >> i) & 1;
    for (const auto& table : f.children()) {
      int on = 0;
      for (const auto& c : table.children()[1].children()) on += testing_support::eval(c, a);
      ASSERT_LE(on, 1);
    }
  }
}

TEST(Generators, MutexSmallCountMatchesEnumeration) {
  const Formula f = gen_mutex_cpt(1, 1, 3);
  EXPECT_EQ(variables(f).size(), 4u);
  EXPECT_EQ(pipeline_count(f), brute_count(f));
  EXPECT_EQ(brute_count(f), 8u);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_mutex_cpt(6, 3, 42), gen_mutex_cpt(6, 3, 42));
  EXPECT_NE(to_string(gen_mutex_cpt(6, 2, 1)), to_string(gen_mutex_cpt(6, 2, 2)));
}

TEST(Generators, FamilyNames) {
  EXPECT_EQ(parse_family("noisy-or"), Family::NoisyOr);
  EXPECT_EQ(parse_family(family_name(Family::MutexCpt)), Family::MutexCpt);
  EXPECT_FALSE(parse_family("andes").has_value());
}

TEST(RunBench, EmptyRange) {
  BenchSpec spec;
  spec.sizes = {};
  const auto r = run_bench(spec, CompileConfig::dynamic());
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.to_csv(), "instance,size,ddnnf,ddnnf_p,ddnnf_t,artifacts,frac_p,frac_t,compile_ms\n");
}

TEST(RunBench, NoisyOrRowsAreVerifiedAndMonotone) {
  BenchSpec spec;
  spec.family = Family::NoisyOr;
  spec.sizes = {2, 3, 4, 5, 6};
  const auto r = run_bench(spec, CompileConfig::dynamic());
  ASSERT_EQ(r.rows.size(), 5u);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    EXPECT_LE(row.frac_t, row.frac_p);
    EXPECT_LE(row.frac_p, 1.0);
    EXPECT_LE(row.ddnnf_t, row.ddnnf_p);
    if (i > 0) EXPECT_GE(row.artifacts, r.rows[i - 1].artifacts);
  }
  EXPECT_TRUE(r.rows[0].verified);  // 3n + 1 = 7 variables
  EXPECT_EQ(r.rows[0].instance, "noisy-or_2");
}

TEST(RunBench, MutexRowsCarrySeed) {
  BenchSpec spec;
  spec.family = Family::MutexCpt;
  spec.sizes = {2};
  spec.parents_per_node = 1;
  spec.seed = 9;
  const auto r = run_bench(spec, CompileConfig::dynamic());
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_NE(r.rows[0].instance.find("9"), std::string::npos);
  EXPECT_TRUE(r.rows[0].verified);
}

TEST(RunBench, BudgetMarksTimeout) {
  BenchSpec spec;
  spec.family = Family::Overlap;
  spec.sizes = {4};
  CompileConfig cfg = CompileConfig::dynamic();
  cfg.max_decisions = 1;
  const auto r = run_bench(spec, cfg);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_TRUE(r.rows[0].timeout);
  EXPECT_NE(r.to_csv().find("overlap_4,4,,,,,,,timeout\n"), std::string::npos);
}
