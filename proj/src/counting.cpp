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

#include "ddnnf/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ddnnf/error.hpp"

namespace ddnnf {

namespace {

void require_decomposable(const Circuit& c) {
  const auto check = check_decomposable(c);
  if (!check.ok)
    throw PreconditionError("circuit is not decomposable (And node " +
                            std::to_string(*check.violating) + ")");
}

void require_in_universe(const Circuit& c) {
  const auto& vs = c.node(c.root()).varset;
  const auto& u = c.universe();
  if (!std::includes(u.begin(), u.end(), vs.begin(), vs.end()))
    throw PreconditionError("circuit mentions variables outside its declared universe");
}

std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

CountAnnotation annotate_counts(const Circuit& c) {
  require_decomposable(c);
  CountAnnotation ann;
  ann.counts.resize(c.arena_size());
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    BigInt& count = ann.counts[id];
    switch (n.kind) {
      case NodeKind::True:
      case NodeKind::Literal: count = 1; break;
      case NodeKind::False: count = 0; break;
      case NodeKind::And:
        count = 1;
        for (NodeId ch : n.children) count *= ann.counts[ch];
        break;
      case NodeKind::Or:
        count = 0;
        for (NodeId ch : n.children) {
          const auto gap = n.varset.size() - c.node(ch).varset.size();
          count += ann.counts[ch] << static_cast<unsigned>(gap);
        }
        break;
    }
  }
  return ann;
}

BigInt model_count(const Circuit& c) {
  require_in_universe(c);
  const auto ann = annotate_counts(c);
  const auto free = c.universe().size() - c.node(c.root()).varset.size();
  return ann.counts[c.root()] << static_cast<unsigned>(free);
}

template <typename Scalar>
Scalar WeightMap<Scalar>::operator()(int lit) const {
  if (auto it = weights_.find(lit); it != weights_.end()) return it->second;
  if (!use_defaults_) throw PreconditionError("no weight given for literal " + std::to_string(lit));
  return Scalar(1);
}

template <typename Scalar>
Scalar weighted_model_count(const Circuit& c, const WeightMap<Scalar>& w) {
  require_decomposable(c);
  require_in_universe(c);
  auto smoothing = [&](const std::vector<int>& vars) {
    Scalar factor(1);
    for (int v : vars) factor *= w(v) + w(-v);
    return factor;
  };
  std::vector<Scalar> value(c.arena_size(), Scalar(0));
  for (NodeId id : c.reachable()) {
    const auto& n = c.node(id);
    Scalar& val = value[id];
    switch (n.kind) {
      case NodeKind::True: val = Scalar(1); break;
      case NodeKind::False: val = Scalar(0); break;
      case NodeKind::Literal: val = w(n.literal); break;
      case NodeKind::And:
        val = Scalar(1);
        for (NodeId ch : n.children) val *= value[ch];
        break;
      case NodeKind::Or:
        val = Scalar(0);
        for (NodeId ch : n.children)
          val += value[ch] * smoothing(difference(n.varset, c.node(ch).varset));
        break;
    }
  }
  return value[c.root()] * smoothing(difference(c.universe(), c.node(c.root()).varset));
}

WeightMap<double> parse_weights(std::string_view text) {
  WeightMap<double> w;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    long long lit = 0;
    double weight = 0;
    std::string extra;
    if (tag != "w" || !(fields >> lit >> weight) || (fields >> extra) || lit == 0 ||
        lit > std::numeric_limits<int>::max() || -lit > std::numeric_limits<int>::max())
      throw ParseError("expected 'w <lit> <real>'", number, 1);
    if (!std::isfinite(weight)) throw ParseError("weight must be finite", number, 1);
    w.set(static_cast<int>(lit), weight);
  }
  return w;
}

WeightMap<Rational> to_rational(const WeightMap<double>& w) {
  WeightMap<Rational> out(w.use_defaults());
  for (const auto& [lit, weight] : w.entries()) out.set(lit, Rational(weight));
  return out;
}

template class WeightMap<double>;
template class WeightMap<Rational>;
template double weighted_model_count(const Circuit&, const WeightMap<double>&);
template Rational weighted_model_count(const Circuit&, const WeightMap<Rational>&);

}  // namespace ddnnf
