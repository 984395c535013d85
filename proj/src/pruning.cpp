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

#include "ddnnf/pruning.hpp"

#include <algorithm>
#include <cstdio>

#include "ddnnf/cnf.hpp"
#include "ddnnf/error.hpp"

namespace ddnnf {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Copies the reachable part of `c`, forgetting `forget` and turning every
/// node with replace_by_top[id] set into True, with constant propagation.
Circuit rebuild(const Circuit& c, const std::vector<int>& forget,
                const std::vector<bool>* replace_by_top) {
  Circuit out;
  std::vector<int> universe, tseitin;
  std::set_difference(c.universe().begin(), c.universe().end(), forget.begin(), forget.end(),
                      std::back_inserter(universe));
  std::set_difference(c.tseitin_vars().begin(), c.tseitin_vars().end(), forget.begin(),
                      forget.end(), std::back_inserter(tseitin));
  out.set_universe(std::move(universe));
  out.set_tseitin_vars(std::move(tseitin));
  out.determinism_verified = c.determinism_verified;

  std::vector<NodeId> image(c.arena_size(), Circuit::top());
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    if (replace_by_top && (*replace_by_top)[id]) {
      image[id] = Circuit::top();
      continue;
    }
    switch (n.kind) {
      case NodeKind::True: image[id] = Circuit::top(); break;
      case NodeKind::False: image[id] = Circuit::bottom(); break;
      case NodeKind::Literal:
        image[id] = contains(forget, var_of(n.literal)) ? Circuit::top() : out.literal(n.literal);
        break;
      case NodeKind::And:
      case NodeKind::Or: {
        const bool is_and = n.kind == NodeKind::And;
        const NodeId absorbing = is_and ? Circuit::bottom() : Circuit::top();
        const NodeId neutral = is_and ? Circuit::top() : Circuit::bottom();
        std::vector<NodeId> kids;
        bool absorbed = false;
        for (NodeId ch : n.children) {
          const NodeId m = image[ch];
          if (m == absorbing) {
            absorbed = true;
            break;
          }
          if (m != neutral) kids.push_back(m);
        }
        if (absorbed) {
          image[id] = absorbing;
          break;
        }
        std::sort(kids.begin(), kids.end());
        kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        if (kids.empty()) {
          image[id] = neutral;
        } else if (kids.size() == 1) {
          image[id] = kids[0];
        } else if (is_and) {
          image[id] = out.conjoin(std::move(kids));
        } else {
          const bool keep_decision = kids.size() == n.children.size() &&
                                     n.decision_var != 0 && !contains(forget, n.decision_var);
          image[id] = out.disjoin(std::move(kids), keep_decision ? n.decision_var : 0);
        }
        break;
      }
    }
  }
  out.set_root(image[c.root()]);
  return out;
}

std::string format_fraction(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", f);
  return buf;
}

}  // namespace

Circuit exists_quantify(const Circuit& c, std::span<const int> vars) {
  std::vector<int> forget(vars.begin(), vars.end());
  std::sort(forget.begin(), forget.end());
  forget.erase(std::unique(forget.begin(), forget.end()), forget.end());
  for (int v : forget)
    if (!contains(c.universe(), v))
      throw PreconditionError("cannot forget variable " + std::to_string(v) +
                              ": not in the circuit's universe");
  return rebuild(c, forget, nullptr);
}

ArtifactDetection detect_artifacts(const Circuit& c, const CountAnnotation& counts) {
  ArtifactDetection det;
  det.flagged.assign(c.arena_size(), false);
  const auto& x = c.tseitin_vars();
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    std::size_t y = 0;
    for (int v : n.varset)
      if (!contains(x, v)) ++y;
    det.flagged[id] = counts.counts[id] == (BigInt(1) << static_cast<unsigned>(y));
  }

  // Maximal roots: flagged nodes with no flagged ancestor. Parents have
  // larger ids, so one descending sweep settles every node.
  const auto reach = c.reachable();
  std::vector<bool> covered(c.arena_size(), false);
  for (auto it = reach.rbegin(); it != reach.rend(); ++it) {
    const NodeId id = *it;
    if (det.flagged[id] && !covered[id]) det.roots.push_back(id);
    if (det.flagged[id] || covered[id])
      for (NodeId ch : c.node(id).children) covered[ch] = true;
  }
  std::sort(det.roots.begin(), det.roots.end());
  // A flagged True root is already what replacement would produce.
  for (NodeId id : det.roots) {
    const auto kind = c.node(id).kind;
    if (kind == NodeKind::Literal) {
      det.degenerate_roots.push_back(id);
    } else if (kind == NodeKind::And || kind == NodeKind::Or) {
      det.internal_roots.push_back(id);
    }
  }
  return det;
}

ArtifactDetection detect_artifacts(const Circuit& c) { return detect_artifacts(c, annotate_counts(c)); }

double PruneReport::frac_p() const {
  return size_before == 0 ? 1.0
                          : static_cast<double>(size_after_exists) / static_cast<double>(size_before);
}

double PruneReport::frac_t() const {
  return size_before == 0
             ? 1.0
             : static_cast<double>(size_after_artifacts) / static_cast<double>(size_before);
}

std::string PruneReport::summary() const {
  return "before=" + std::to_string(size_before) + " after_p=" + std::to_string(size_after_exists) +
         " after_t=" + std::to_string(size_after_artifacts) +
         " artifacts=" + std::to_string(artifacts_found) + " frac_p=" + format_fraction(frac_p()) +
         " frac_t=" + format_fraction(frac_t());
}

std::string PruneReport::key_values() const {
  std::string ids;
  for (std::size_t i = 0; i < artifact_node_ids.size(); ++i) {
    if (i) ids += ',';
    ids += std::to_string(artifact_node_ids[i]);
  }
  return "before=" + std::to_string(size_before) + "\nafter_p=" +
         std::to_string(size_after_exists) + "\nafter_t=" + std::to_string(size_after_artifacts) +
         "\nartifacts=" + std::to_string(artifacts_found) +
         "\ndegenerate_artifacts=" + std::to_string(degenerate_artifacts) +
         "\nfrac_p=" + format_fraction(frac_p()) + "\nfrac_t=" + format_fraction(frac_t()) +
         "\nartifact_node_ids=" + ids + "\n";
}

PruneResult prune(const Circuit& c, PruneMode mode, bool recheck) {
  const auto& x = c.tseitin_vars();
  for (int v : x)
    if (!contains(c.universe(), v))
      throw PreconditionError("Tseitin variable " + std::to_string(v) + " outside the universe");

  PruneReport report;
  report.size_before = size(c);
  Circuit forgotten = rebuild(c, x, nullptr);
  report.size_after_exists = size(forgotten);

  // Counts must come from the original circuit: the X/Y split is only
  // meaningful before X is forgotten.
  const auto detection = detect_artifacts(c);
  Circuit pruned = rebuild(c, x, &detection.flagged);
  report.size_after_artifacts = size(pruned);
  report.artifacts_found = detection.internal_roots.size();
  report.degenerate_artifacts = detection.degenerate_roots.size();
  report.artifact_node_ids = detection.internal_roots;

  if (recheck) {
    if (const auto left = residual_tautologies(pruned); left != 0)
      throw PreconditionError(std::to_string(left) +
                              " tautological nodes survived pruning; are the Tseitin variables "
                              "really defined?");
  }
  return {mode == PruneMode::Exists ? std::move(forgotten) : std::move(pruned), report};
}

std::uint64_t residual_tautologies(const Circuit& c) {
  const auto det = detect_artifacts(c);
  std::uint64_t n = 0;
  for (NodeId id : c.reachable()) {
    const auto kind = c.node(id).kind;
    if (det.flagged[id] && (kind == NodeKind::And || kind == NodeKind::Or)) ++n;
  }
  return n;
}

}  // namespace ddnnf
