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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ddnnf/circuit.hpp"
#include "ddnnf/counting.hpp"

namespace ddnnf {

/// Forgets the variables in `vars`: their literals become True, then True and
/// False are propagated to a fixpoint and nodes re-hash-consed.  The universe
/// shrinks accordingly.  Throws PreconditionError if a variable is outside the
/// universe.
Circuit exists_quantify(const Circuit& c, std::span<const int> vars);

struct ArtifactDetection {
  /// flagged[id]: node mentions at least one variable and its count equals
  /// 2^|varset(id) \ X|, i.e. it is a tautology once X is forgotten.
  std::vector<bool> flagged;
  /// Flagged nodes reachable from the root through unflagged nodes only.
  std::vector<NodeId> roots;
  std::vector<NodeId> internal_roots;    // And/Or among `roots`
  std::vector<NodeId> degenerate_roots;  // bare Tseitin literals among `roots`
};

ArtifactDetection detect_artifacts(const Circuit& c, const CountAnnotation& counts);
ArtifactDetection detect_artifacts(const Circuit& c);

enum class PruneMode {
  Exists,     // forget Tseitin variables only (d-DNNF+p)
  Artifacts,  // replace artifacts by True, then forget (d-DNNF+t)
};

struct PruneReport {
  std::uint64_t size_before = 0;
  std::uint64_t size_after_exists = 0;
  std::uint64_t size_after_artifacts = 0;
  std::uint64_t artifacts_found = 0;       // internal-node artifact roots
  std::uint64_t degenerate_artifacts = 0;  // Tseitin-literal roots
  std::vector<NodeId> artifact_node_ids;   // internal roots, ids of the input

  /// Remaining fractions relative to size_before (1 when the input has size 0).
  double frac_p() const;
  double frac_t() const;

  /// "before=<n> after_p=<n> after_t=<n> artifacts=<k> frac_p=<r> frac_t=<r>"
  std::string summary() const;
  /// key=value lines, one per field.
  std::string key_values() const;
};

struct PruneResult {
  Circuit circuit;
  PruneReport report;
};

/// Removes the circuit's Tseitin variables and, in Artifacts mode, the
/// Tseitin artifacts.  The input is left untouched.  With `recheck`, the
/// output is re-examined and PreconditionError thrown if any internal node
/// is still a tautology.
PruneResult prune(const Circuit& c, PruneMode mode = PruneMode::Artifacts, bool recheck = false);

/// Internal nodes of `c` whose count equals 2^|varset| (tautologies over their
/// own variables).  Zero for any correctly pruned circuit.
std::uint64_t residual_tautologies(const Circuit& c);

}  // namespace ddnnf
