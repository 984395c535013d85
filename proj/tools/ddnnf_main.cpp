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


// ddnnf: command-line front end for the compile/prune/count pipeline.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ddnnf/bench.hpp"
#include "ddnnf/circuit.hpp"
#include "ddnnf/cnf.hpp"
#include "ddnnf/compiler.hpp"
#include "ddnnf/counting.hpp"
#include "ddnnf/error.hpp"
#include "ddnnf/formula.hpp"
#include "ddnnf/oracle.hpp"
#include "ddnnf/pruning.hpp"

namespace fs = std::filesystem;
using namespace ddnnf;

namespace {

struct FileNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// "dir/f.cnf" -> "dir/f"
std::string stem_of(const std::string& path) {
  fs::path p(path);
  return (p.parent_path() / p.stem()).string();
}

// Accepts "2..10" or "2,3,5".
std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

struct CircuitInput {
  std::string path;
  std::string format = "c2d";
  std::optional<int> vars;

  void add_to(CLI::App* cmd) {
    cmd->add_option("nnf", path, "NNF circuit file")->required();
    cmd->add_option("--format", format, "Input dialect")
        ->check(CLI::IsMember({"c2d", "d4"}));
    cmd->add_option("--vars", vars, "Override the declared variable count");
  }

  Circuit load() const {
    return parse_nnf(read_file(path), format == "d4" ? NnfFormat::D4 : NnfFormat::C2d, vars);
  }
};

// Designates X on a parsed circuit. Listed variables the circuit never
// mentions are dropped from the universe: a pruned file already forgot them.
void apply_tvars(Circuit& c, const std::vector<int>& x) {
  std::vector<int> mentioned = c.node(c.root()).varset;
  std::vector<int> universe, tseitin;
  for (int v : c.universe()) {
    const bool in_x = std::binary_search(x.begin(), x.end(), v);
    const bool used = std::binary_search(mentioned.begin(), mentioned.end(), v);
    if (in_x && !used) continue;
    universe.push_back(v);
    if (in_x) tseitin.push_back(v);
  }
  c.set_universe(std::move(universe));
  c.set_tseitin_vars(std::move(tseitin));
}

std::vector<int> load_tvars(const std::string& path) {
  auto x = parse_tvars(read_file(path));
  std::sort(x.begin(), x.end());
  return x;
}

CompileConfig make_config(const std::string& heuristic, const std::string& order,
                          std::optional<std::uint64_t> seed) {
  CompileConfig cfg;
  if (!order.empty()) {
    cfg.branching = Branching::Explicit;
    for (int v : parse_sizes(order)) cfg.order.push_back(v);
  } else if (heuristic == "input") {
    cfg.branching = Branching::InputOrder;
  } else if (heuristic == "random" || (heuristic.empty() && seed)) {
    cfg.branching = Branching::Random;
  }
  cfg.seed = seed.value_or(0);
  return cfg;
}

int report_check(const std::string& name, bool ok) {
  std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-DNNF compilation with Tseitin-artifact pruning"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ddnnf 1.0.0");

  // tseitin
  std::string t_in, t_out;
  auto* t_cmd = app.add_subcommand("tseitin", "Formula file to CNF with .tvars and .map sidecars");
  t_cmd->add_option("formula", t_in, "Formula file")->required();
  t_cmd->add_option("-o,--output", t_out, "Output stem (default: input stem)");

  // detect
  std::string d_in, d_out;
  auto* d_cmd = app.add_subcommand("detect", "Find gate-defined variables in a DIMACS file");
  d_cmd->add_option("cnf", d_in, "DIMACS file")->required();
  d_cmd->add_option("-o,--output", d_out, "Output .tvars (default: <stem>.tvars)");

  // compile
  std::string c_in, c_out, c_heuristic, c_order;
  std::optional<std::uint64_t> c_seed, c_budget;
  bool c_no_cache = false;
  auto* c_cmd = app.add_subcommand("compile", "Compile DIMACS to d-DNNF");
  c_cmd->add_option("cnf", c_in, "DIMACS file")->required();
  c_cmd->add_option("-o,--output", c_out, "Output .nnf (default: <stem>.nnf)");
  c_cmd->add_option("--heuristic", c_heuristic, "Branching heuristic")
      ->check(CLI::IsMember({"input", "dyn", "random"}));
  c_cmd->add_option("--order", c_order, "Explicit branch order, comma separated");
  c_cmd->add_option("--seed", c_seed, "Seed for random branching");
  c_cmd->add_flag("--no-cache", c_no_cache, "Disable the component cache");
  c_cmd->add_option("--max-decisions", c_budget, "Abort after this many decisions");

  // prune
  CircuitInput p_in;
  std::string p_tvars, p_out, p_mode = "t";
  bool p_recheck = false;
  auto* p_cmd = app.add_subcommand("prune", "Forget Tseitin variables and remove artifacts");
  p_in.add_to(p_cmd);
  p_cmd->add_option("--tvars", p_tvars, "Tseitin variable file")->required();
  p_cmd->add_option("--mode", p_mode, "p: forget only, t: artifacts then forget")
      ->check(CLI::IsMember({"p", "t"}));
  p_cmd->add_option("-o,--output", p_out, "Output .nnf (default: <stem>.pruned.nnf)");
  p_cmd->add_flag("--recheck", p_recheck, "Fail if tautological subcircuits remain");

  // count
  CircuitInput n_in;
  std::string n_tvars;
  auto* n_cmd = app.add_subcommand("count", "Exact model count");
  n_in.add_to(n_cmd);
  n_cmd->add_option("--tvars", n_tvars, "Tseitin variable file");

  // wmc
  CircuitInput w_in;
  std::string w_weights;
  bool w_exact = false;
  auto* w_cmd = app.add_subcommand("wmc", "Weighted model count");
  w_in.add_to(w_cmd);
  w_cmd->add_option("--weights", w_weights, "Weight file (w <lit> <real> per line)")->required();
  w_cmd->add_flag("--exact", w_exact, "Rational arithmetic");

  // verify
  std::string v_formula, v_cnf, v_nnf, v_tvars;
  auto* v_cmd = app.add_subcommand("verify", "Brute-force oracle checks");
  v_cmd->add_option("formula", v_formula, "Formula file: checks the whole pipeline");
  v_cmd->add_option("--cnf", v_cnf, "DIMACS file to compare against --nnf");
  v_cmd->add_option("--nnf", v_nnf, "NNF circuit to compare against --cnf");
  v_cmd->add_option("--tvars", v_tvars, "Tseitin variables of the circuit");

  // bench
  std::string b_family = "noisy-or", b_sizes = "2..10", b_out, b_heuristic = "dyn";
  std::uint64_t b_seed = 1;
  int b_parents = 2;
  std::optional<std::uint64_t> b_budget;
  auto* b_cmd = app.add_subcommand("bench", "Run a generator family and emit CSV");
  b_cmd->add_option("--family", b_family, "overlap | noisy-or | mutex-cpt")
      ->check(CLI::IsMember({"overlap", "noisy-or", "mutex-cpt"}));
  b_cmd->add_option("--sizes", b_sizes, "Range a..b or comma list");
  b_cmd->add_option("--seed", b_seed, "Generator seed (mutex-cpt)");
  b_cmd->add_option("--parents", b_parents, "Parents per node (mutex-cpt)")
      ->check(CLI::Range(0, 3));
  b_cmd->add_option("--heuristic", b_heuristic, "Branching heuristic")
      ->check(CLI::IsMember({"input", "dyn", "random"}));
  b_cmd->add_option("--max-decisions", b_budget, "Per-instance budget; exceeding rows say timeout");
  b_cmd->add_option("-o,--output", b_out, "CSV path (default: stdout)");

  // stats
  CircuitInput s_in;
  auto* s_cmd = app.add_subcommand("stats", "Size metrics and structural checks");
  s_in.add_to(s_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*t_cmd) {
      const Formula f = parse_formula(read_file(t_in));
      const auto t = tseitin_transform(f);
      const std::string base = t_out.empty() ? stem_of(t_in) : t_out;
      write_file(base + ".cnf", write_dimacs(t.cnf));
      write_file(base + ".tvars", write_tvars(t.tseitin_vars));
      write_file(base + ".map", write_var_map(t.var_map));
      std::cout << "vars=" << t.cnf.num_vars << " clauses=" << t.cnf.clauses.size()
                << " tseitin=" << t.tseitin_vars.size() << "\n";
    } else if (*d_cmd) {
      std::vector<std::string> warnings;
      const auto cnf = parse_dimacs(read_file(d_in), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      const auto x = detect_tseitin_vars(cnf);
      write_file(d_out.empty() ? stem_of(d_in) + ".tvars" : d_out, write_tvars(x));
      std::cout << "tseitin=" << x.size() << "\n";
    } else if (*c_cmd) {
      std::vector<std::string> warnings;
      auto cnf = parse_dimacs(read_file(c_in), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      CompileConfig cfg = make_config(c_heuristic, c_order, c_seed);
      cfg.cache_enabled = !c_no_cache;
      cfg.max_decisions = c_budget;
      CompileStats cs;
      const Circuit c = compile(cnf, cfg, &cs);
      write_file(c_out.empty() ? stem_of(c_in) + ".nnf" : c_out, write_nnf(c));
      std::cout << format_stats(stats(c)) << " decisions=" << cs.decisions
                << " cache_hits=" << cs.cache_hits << "\n";
    } else if (*p_cmd) {
      Circuit c = p_in.load();
      apply_tvars(c, load_tvars(p_tvars));
      const auto mode = p_mode == "p" ? PruneMode::Exists : PruneMode::Artifacts;
      const auto result = prune(c, mode, p_recheck);
      const std::string out = p_out.empty() ? stem_of(p_in.path) + ".pruned.nnf" : p_out;
      write_file(out, write_nnf(result.circuit));
      write_file(out + ".report", "mode=" + p_mode + "\n" + result.report.key_values());
      std::cout << result.report.summary() << "\n";
    } else if (*n_cmd) {
      Circuit c = n_in.load();
      if (!n_tvars.empty()) apply_tvars(c, load_tvars(n_tvars));
      std::cout << model_count(c) << "\n";
    } else if (*w_cmd) {
      const Circuit c = w_in.load();
      const auto weights = parse_weights(read_file(w_weights));
      if (w_exact) {
        std::cout << weighted_model_count(c, to_rational(weights)) << "\n";
      } else {
        std::cout.precision(17);
        std::cout << weighted_model_count(c, weights) << "\n";
      }
    } else if (*v_cmd) {
      int failures = 0;
      if (!v_formula.empty()) {
        const Formula f = parse_formula(read_file(v_formula));
        const auto t = tseitin_transform(f);
        failures += report_check("cnf equivalent under exists",
                                 oracle::check_exists_equiv(t.cnf, t.tseitin_vars, f, t.var_map));
        const Circuit compiled = compile(t.cnf);
        const auto mc = model_count(compiled);
        failures += report_check("compiled circuit decomposable", check_decomposable(compiled).ok);
        failures += report_check("compiled circuit deterministic",
                                 check_deterministic_oracle(compiled, oracle::max_vars()));
        for (auto mode : {PruneMode::Exists, PruneMode::Artifacts}) {
          const std::string tag = mode == PruneMode::Exists ? "+p" : "+t";
          const auto r = prune(compiled, mode);
          failures += report_check(tag + " equivalent under exists",
                                   oracle::check_exists_equiv(r.circuit, t.tseitin_vars, f, t.var_map));
          failures += report_check(tag + " count preserved", model_count(r.circuit) == mc);
          failures += report_check(tag + " decomposable", check_decomposable(r.circuit).ok);
          failures += report_check(tag + " deterministic",
                                   check_deterministic_oracle(r.circuit, oracle::max_vars()));
        }
      }
      if (!v_cnf.empty() || !v_nnf.empty()) {
        if (v_cnf.empty() || v_nnf.empty())
          throw CLI::RequiredError("verify needs both --cnf and --nnf");
        const auto cnf = parse_dimacs(read_file(v_cnf));
        Circuit c = parse_nnf(read_file(v_nnf));
        if (!v_tvars.empty()) apply_tvars(c, load_tvars(v_tvars));
        const auto cnf_models = oracle::enumerate_models(cnf);
        const auto circuit_models = oracle::enumerate_models(c);
        failures += report_check("circuit models match cnf",
                                 oracle::project(cnf_models, c.universe()) == circuit_models);
        failures += report_check("circuit decomposable", check_decomposable(c).ok);
        failures += report_check("circuit deterministic", oracle::is_deterministic(c));
      }
      if (v_formula.empty() && v_cnf.empty() && v_nnf.empty())
        throw CLI::RequiredError("verify needs a formula or --cnf/--nnf");
      return failures == 0 ? 0 : 1;
    } else if (*b_cmd) {
      BenchSpec spec;
      spec.family = *parse_family(b_family);
      spec.sizes = parse_sizes(b_sizes);
      spec.seed = b_seed;
      spec.parents_per_node = b_parents;
      CompileConfig cfg = make_config(b_heuristic, "", std::nullopt);
      cfg.max_decisions = b_budget;
      const auto report = run_bench(spec, cfg);
      if (b_out.empty())
        std::cout << report.to_csv();
      else
        write_file(b_out, report.to_csv());
    } else if (*s_cmd) {
      const Circuit c = s_in.load();
      std::cout << format_stats(stats(c)) << "\n";
      std::cout << "decomposable=" << (check_decomposable(c).ok ? "yes" : "no")
                << " smooth=" << (check_smooth(c) ? "yes" : "no") << "\n";
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const FileNotFound& e) {
    std::cerr << "error: file not found: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: parse error: " << e.what() << "\n";
    return 1;
  } catch (const OracleBoundError& e) {
    std::cerr << "error: oracle bound exceeded: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: usage: bad number: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
