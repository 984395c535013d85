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

#include "ddnnf/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "ddnnf/counting.hpp"
#include "ddnnf/error.hpp"
#include "ddnnf/oracle.hpp"
#include "ddnnf/pruning.hpp"

namespace ddnnf {

namespace {

Formula v(const std::string& name) { return Formula::var(name); }

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

Formula gen_overlapping_disjunction(int n) {
  if (n < 1) throw PreconditionError("overlapping disjunction needs n >= 1");
  std::vector<Formula> disjuncts;
  for (int i = 1; i <= n; ++i)
    disjuncts.push_back(
        Formula::conj({v("a" + std::to_string(i)), v("b" + std::to_string(i))}));
  return Formula::disj(std::move(disjuncts));
}

Formula gen_noisy_or(int n) {
  if (n < 1) throw PreconditionError("noisy-or needs at least one parent");
  std::vector<Formula> causes;
  for (int p = 1; p <= n; ++p)
    causes.push_back(Formula::conj(
        {v("theta_" + std::to_string(p)), v("theta_a_" + std::to_string(p))}));
  return Formula::conj({v("a"), Formula::iff(v("a"), Formula::disj(std::move(causes)))});
}

Formula gen_mutex_cpt(int num_nodes, int parents_per_node, std::uint64_t seed) {
  if (num_nodes < 1) throw PreconditionError("mutex CPT needs at least one node");
  if (parents_per_node < 0 || parents_per_node > 3)
    throw PreconditionError("parents_per_node must be in 0..3");
  const int k = parents_per_node;
  // Raw engine output only, so the instance is the same on every platform.
  std::mt19937_64 rng(seed);
  std::vector<std::string> pool;
  for (int r = 1; r <= k; ++r) pool.push_back("r" + std::to_string(r));

  std::vector<Formula> tables;
  for (int i = 1; i <= num_nodes; ++i) {
    const std::string node = "n" + std::to_string(i);
    std::vector<std::string> candidates = pool;
    std::vector<std::string> parents;
    for (int j = 0; j < k; ++j) {
      const std::size_t pick = static_cast<std::size_t>(rng() % candidates.size());
      parents.push_back(candidates[pick]);
      candidates.erase(candidates.begin() + static_cast<long>(pick));
    }
    std::vector<Formula> cases;
    for (int s = 0; s < (1 << k); ++s) {
      std::vector<Formula> conj;
      for (int j = 0; j < k; ++j) {
        // First case has every parent true, the last every parent false.
        const bool positive = ((s >> (k - 1 - j)) & 1) == 0;
        conj.push_back(positive ? v(parents[j]) : Formula::negate(v(parents[j])));
      }
      conj.push_back(v("theta_" + node + "_" + std::to_string(s)));
      cases.push_back(Formula::conj(std::move(conj)));
    }
    tables.push_back(Formula::iff(v(node), Formula::disj(std::move(cases))));
    pool.push_back(node);
  }
  return Formula::conj(std::move(tables));
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Overlap: return "overlap";
    case Family::NoisyOr: return "noisy-or";
    case Family::MutexCpt: return "mutex-cpt";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::Overlap, Family::NoisyOr, Family::MutexCpt})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

Formula generate(const BenchSpec& spec, int size) {
  switch (spec.family) {
    case Family::Overlap: return gen_overlapping_disjunction(size);
    case Family::NoisyOr: return gen_noisy_or(size);
    case Family::MutexCpt: return gen_mutex_cpt(size, spec.parents_per_node, spec.seed);
  }
  throw PreconditionError("unknown family");
}

std::string BenchReport::to_csv() const {
  std::string out = "instance,size,ddnnf,ddnnf_p,ddnnf_t,artifacts,frac_p,frac_t,compile_ms\n";
  for (const auto& r : rows) {
    out += r.instance + "," + std::to_string(r.size) + ",";
    if (r.timeout) {
      out += ",,,,,,timeout\n";
      continue;
    }
    out += std::to_string(r.ddnnf) + "," + std::to_string(r.ddnnf_p) + "," +
           std::to_string(r.ddnnf_t) + "," + std::to_string(r.artifacts) + "," +
           fixed(r.frac_p, 6) + "," + fixed(r.frac_t, 6) + "," + fixed(r.compile_ms, 3) + "\n";
  }
  return out;
}

BenchReport run_bench(const BenchSpec& spec, const CompileConfig& cfg) {
  BenchReport report;
  for (int n : spec.sizes) {
    BenchRow row;
    row.size = n;
    row.instance = family_name(spec.family) + "_" + std::to_string(n);
    if (spec.family == Family::MutexCpt)
      row.instance += "_k" + std::to_string(spec.parents_per_node) + "_s" +
                      std::to_string(spec.seed);

    const Formula f = generate(spec, n);
    const TseitinOutput t = tseitin_transform(f);
    Circuit compiled;
    const auto start = std::chrono::steady_clock::now();
    try {
      compiled = compile(t.cnf, cfg);
    } catch (const BudgetExceeded&) {
      row.timeout = true;
      report.rows.push_back(row);
      continue;
    }
    row.compile_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const auto result = prune(compiled, PruneMode::Artifacts);
    row.ddnnf = result.report.size_before;
    row.ddnnf_p = result.report.size_after_exists;
    row.ddnnf_t = result.report.size_after_artifacts;
    row.artifacts = result.report.artifacts_found;
    row.frac_p = result.report.frac_p();
    row.frac_t = result.report.frac_t();

    if (static_cast<std::size_t>(t.cnf.num_vars) <= spec.verify_max_vars) {
      if (!oracle::check_exists_equiv(result.circuit, t.tseitin_vars, f, t.var_map))
        throw Error("bench: pruned circuit of " + row.instance + " is not equivalent to its formula");
      if (model_count(result.circuit) != model_count(compiled))
        throw Error("bench: pruning changed the model count of " + row.instance);
      row.verified = true;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace ddnnf
