// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>

#include "duality.hpp"
#include "graph.hpp"
#include "graph_decompositions.hpp"
#include "graph_families.hpp"

namespace tangles {

template <class Certificate>
struct WidthResult {
  int value = 0;
  std::optional<Certificate> certificate;
};

namespace detail {
// Least k >= 1 at which the duality yields an S-tree, with that tree.
template <class MakeFamily>
std::pair<Order, STree> first_tree(const Graph& g, MakeFamily make_family, std::size_t max_nodes) {
  for (Order k = 1;; ++k) {
    auto verdict = verify_duality(vertex_separations(g, k), make_family(k), k, max_nodes);
    if (!verdict.has_tangle()) return {k, std::move(*verdict.tree)};
  }
}
}  // namespace detail

/// Least k with an S_k-tree over F_k, minus two; certificate from its bags.
inline WidthResult<TreeDecomposition> treewidth(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  auto [k, tree] = detail::first_tree(g, [&](Order k) { return family_Fk(g, k); }, max_nodes);
  return {static_cast<int>(k) - 2, stree_to_treedecomp(tree, g.size())};
}

/// As treewidth with F_k^(2); the certificate tree is a path.
inline WidthResult<TreeDecomposition> pathwidth(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  auto [k, tree] = detail::first_tree(g, [&](Order k) { return family_Fk2(g, k); }, max_nodes);
  return {static_cast<int>(k) - 2, stree_to_treedecomp(tree, g.size())};
}

/// Graphs without edges: 0. Otherwise the largest k in 3..|G| with a
/// T*-tangle of S_k; failing that 0 for matchings, 1 for other star forests
/// and 2 for everything else.
inline WidthResult<BranchDecomposition> branchwidth(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  WidthResult<BranchDecomposition> out;
  if (g.edge_count() == 0) return out;
  Order top = 0;
  for (Order k = 3; k <= static_cast<Order>(g.size()); ++k) {
    auto verdict = verify_duality(vertex_separations(g, k), family_Tstar(g, k), k, max_nodes);
    if (!verdict.has_tangle()) {
      if (g.edge_count() >= 2) out.certificate = stree_to_branchdecomp(g, *verdict.tree);
      break;
    }
    top = k;
  }
  if (top >= 3) {
    out.value = static_cast<int>(top);
    return out;
  }
  bool star_forest = true, matching = true;
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) > 1 && g.degree(v) > 1) star_forest = false;
    if (g.degree(u) > 1 || g.degree(v) > 1) matching = false;
  }
  out.value = matching ? 0 : (star_forest ? 1 : 2);
  return out;
}

/// Largest k <= |G| such that S_k has a T*-tangle.
inline int tangle_number(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  int best = 0;
  for (Order k = 1; k <= static_cast<Order>(g.size()); ++k) {
    if (!verify_duality(vertex_separations(g, k), family_Tstar(g, k), k, max_nodes).has_tangle()) break;
    best = static_cast<int>(k);
  }
  return best;
}

}  // namespace tangles
