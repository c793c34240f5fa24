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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duality.hpp"
#include "family.hpp"
#include "gf2.hpp"
#include "graph.hpp"
#include "universe.hpp"

namespace tangles {

/// Sets of at most three separations of order < k whose small sides cover V,
/// and singletons {(A,B)} of order < k with |B| = 1.
inline bool in_setsep_family(std::span<const Separation> sigma, std::size_t n, const OrderFunction& order, Order k) {
  if (sigma.empty() || sigma.size() > 3) return false;
  for (const Separation& s : sigma) {
    if (order(s) >= k) return false;
  }
  if (sigma.size() == 1 && sigma[0].b.size() == 1) return true;
  ElementSet covered;
  for (const Separation& s : sigma) covered |= s.a;
  return covered == ElementSet::full(n);
}

inline Family family_F_setsep(std::size_t n, OrderFunction order, Order k) {
  return Family{"F", [n, order, k](std::span<const Separation> sigma) { return in_setsep_family(sigma, n, order, k); },
                [](const SeparationSystem&, const Family::StarVisitor&) {
                  throw std::logic_error("F is not a family of stars");
                }};
}

/// The stars in F. Basis: every member.
inline Family family_Fstar_setsep(std::size_t n, OrderFunction order, Order k) {
  auto contains = [n, order, k](std::span<const Separation> sigma) {
    return is_star(sigma) && in_setsep_family(sigma, n, order, k);
  };
  return Family{"F*", contains, [contains](const SeparationSystem& system, const Family::StarVisitor& visit) {
                  enumerate_stars(
                      system, 3, [](std::size_t) { return true; },
                      [&](std::span<const std::size_t> star) {
                        if (contains(members_of(system, star))) visit(star);
                      });
                }};
}

/// Number of edges with one end on each side of the bipartition.
inline OrderFunction edge_cut_order(const Graph& g) {
  return [g](const Separation& s) {
    Order cut = 0;
    for (auto [u, v] : g.edges()) cut += s.a.contains(u) != s.a.contains(v);
    return cut;
  };
}

/// GF(2) rank of the adjacency matrix between A and B.
inline OrderFunction rank_order(const Graph& g) {
  return [g](const Separation& s) {
    std::vector<std::uint64_t> rows;
    s.a.for_each([&](std::size_t v) { rows.push_back((g.neighbours(v) & s.b).bits()); });
    return static_cast<Order>(gf2_rank(std::move(rows)));
  };
}

namespace detail {
// Least k with an S_k-tree over F* in the bipartition universe.
inline std::pair<Order, STree> first_bipartition_tree(std::size_t n, const OrderFunction& order,
                                                      std::size_t max_nodes) {
  BipartitionUniverse universe(n, order);
  for (Order k = 1;; ++k) {
    auto verdict = verify_duality(restrict_sk(universe, k), family_Fstar_setsep(n, order, k), k, max_nodes);
    if (!verdict.has_tangle()) return {k, std::move(*verdict.tree)};
  }
}

inline int largest_bipartition_tangle(std::size_t n, const OrderFunction& order, std::size_t max_nodes) {
  BipartitionUniverse universe(n, order);
  int best = 0;
  for (Order k = 1; k <= static_cast<Order>(n); ++k) {
    if (!verify_duality(restrict_sk(universe, k), family_Fstar_setsep(n, order, k), k, max_nodes).has_tangle()) break;
    best = static_cast<int>(k);
  }
  return best;
}
}  // namespace detail

struct BipartitionWidth {
  int value = 0;
  STree certificate;
};

/// Least k with an S_k-tree over F* for the edge-cut order, minus one.
inline BipartitionWidth carving_width(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  auto [k, tree] = detail::first_bipartition_tree(g.size(), edge_cut_order(g), max_nodes);
  return {static_cast<int>(k) - 1, std::move(tree)};
}

/// Largest k <= |V| with an F*-tangle for the edge-cut order.
inline int edge_tangle_number(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  return detail::largest_bipartition_tangle(g.size(), edge_cut_order(g), max_nodes);
}

/// Least k with an S_k-tree over F* for the cut-rank order, minus one.
inline BipartitionWidth rank_width(const Graph& g, std::size_t max_nodes = kDefaultMaxNodes) {
  auto [k, tree] = detail::first_bipartition_tree(g.size(), rank_order(g), max_nodes);
  return {static_cast<int>(k) - 1, std::move(tree)};
}

}  // namespace tangles
