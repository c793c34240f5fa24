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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "duality.hpp"
#include "family.hpp"
#include "gf2.hpp"
#include "graph.hpp"
#include "stree.hpp"
#include "universe.hpp"

namespace tangles {

/// A matroid on elements 0..n-1 given by a graphic, GF(2)-linear or uniform
/// rank oracle.
class Matroid {
 public:
  enum class Kind { graphic, gf2, uniform };

  /// Cycle matroid: elements are g.edges() in order.
  static Matroid graphic(Graph g) {
    Matroid m(Kind::graphic, g.edge_count());
    m.graph_ = std::move(g);
    return m;
  }

  /// Column matroid of bit-packed GF(2) columns.
  static Matroid gf2(std::vector<std::uint64_t> columns) {
    Matroid m(Kind::gf2, columns.size());
    m.columns_ = std::move(columns);
    return m;
  }

  /// U_{r,n}.
  static Matroid uniform(std::size_t r, std::size_t n) {
    if (r > n) throw std::invalid_argument("uniform matroid needs r <= n");
    Matroid m(Kind::uniform, n);
    m.uniform_rank_ = r;
    return m;
  }

  Kind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  const Graph& graph() const { return graph_; }
  const std::vector<std::uint64_t>& columns() const { return columns_; }
  std::size_t uniform_rank() const { return uniform_rank_; }

  std::size_t rank(ElementSet x) const {
    switch (kind_) {
      case Kind::graphic: {
        std::vector<std::size_t> parent(graph_.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t v) {
          while (parent[v] != v) v = parent[v] = parent[parent[v]];
          return v;
        };
        std::size_t r = 0;
        x.for_each([&](std::size_t e) {
          auto [u, v] = graph_.edges()[e];
          std::size_t a = find(u), b = find(v);
          if (a != b) {
            parent[a] = b;
            ++r;
          }
        });
        return r;
      }
      case Kind::gf2: {
        std::vector<std::uint64_t> rows;
        x.for_each([&](std::size_t e) { rows.push_back(columns_[e]); });
        return gf2_rank(std::move(rows));
      }
      case Kind::uniform:
        return std::min(x.size(), uniform_rank_);
    }
    return 0;
  }

  std::size_t full_rank() const { return rank(ground()); }

 private:
  Matroid(Kind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n > 64) throw std::invalid_argument("matroid too large");
  }

  Kind kind_;
  std::size_t n_;
  Graph graph_;
  std::vector<std::uint64_t> columns_;
  std::size_t uniform_rank_ = 0;
};

/// λ(X) = r(X) + r(E\X) - r(M).
inline Order matroid_lambda(const Matroid& m, ElementSet x) {
  return static_cast<Order>(m.rank(x) + m.rank(m.ground() - x)) - static_cast<Order>(m.full_rank());
}

inline OrderFunction matroid_order(const Matroid& m) {
  return [m](const Separation& s) { return matroid_lambda(m, s.a); };
}

inline BipartitionUniverse matroid_universe(const Matroid& m) {
  return BipartitionUniverse(m.size(), matroid_order(m), 0);
}

/// r(M) + Σ (r(B_i) - r(M)).
inline Order star_norm(const Matroid& m, std::span<const Separation> sigma) {
  Order rm = static_cast<Order>(m.full_rank());
  Order norm = rm;
  for (const Separation& s : sigma) norm += static_cast<Order>(m.rank(s.b)) - rm;
  return norm;
}

/// Stars of norm < k. Basis: members whose separations all have r(B) < r(M),
/// since the others add nothing to the norm.
inline Family matroid_family_Fk(const Matroid& m, Order k) {
  auto contains = [m, k](std::span<const Separation> sigma) { return is_star(sigma) && star_norm(m, sigma) < k; };
  auto enumerate = [m, k, contains](const SeparationSystem& system, const Family::StarVisitor& visit) {
    if (static_cast<Order>(m.full_rank()) < k) visit({});
    std::size_t rm = m.full_rank();
    enumerate_stars(
        system, m.size(), [&](std::size_t i) { return m.rank(system[i].b) < rm; },
        [&](std::span<const std::size_t> star) {
          if (contains(members_of(system, star))) visit(star);
        });
  };
  return Family{"F_k", contains, enumerate};
}

/// A tree with an arbitrary map from elements to nodes.
struct MatroidTreeDecomposition {
  DecorationTree tree;
  std::vector<std::size_t> tau;
};

/// Σ r(E\F_i) - (d-1) r(M) over the d branches at t, whose elements are F_i.
inline Order matroid_node_width(const Matroid& m, const MatroidTreeDecomposition& td, std::size_t t) {
  Order rm = static_cast<Order>(m.full_rank());
  Order total = 0;
  Order d = 0;
  for (const auto& inc : td.tree.incident(t)) {
    std::vector<bool> in_branch(td.tree.node_count(), false);
    for (std::size_t u : detail::side_of(td.tree, inc.neighbor, t)) in_branch[u] = true;
    ElementSet f;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (in_branch[td.tau[e]]) f.insert(e);
    }
    total += static_cast<Order>(m.rank(m.ground() - f));
    ++d;
  }
  return total - (d - 1) * rm;
}

inline Order matroid_td_width(const Matroid& m, const MatroidTreeDecomposition& td) {
  Order w = 0;
  for (std::size_t t = 0; t < td.tree.node_count(); ++t) w = std::max(w, matroid_node_width(m, td, t));
  return w;
}

/// τ(e) is the unique node towards which every edge points, an edge st
/// pointing at t when e lies in B for (A,B) = alpha(s,t).
inline MatroidTreeDecomposition matroid_stree_to_td(const Matroid& m, const STree& s) {
  MatroidTreeDecomposition td{s.tree(), std::vector<std::size_t>(m.size(), 0)};
  for (std::size_t e = 0; e < m.size(); ++e) {
    std::size_t sinks = 0;
    for (std::size_t t = 0; t < s.node_count(); ++t) {
      bool sink = true;
      for (const auto& inc : s.tree().incident(t)) sink = sink && s.alpha(inc.neighbor, t).b.contains(e);
      if (sink) {
        td.tau[e] = t;
        ++sinks;
      }
    }
    if (sinks != 1) throw PreconditionError("element has no unique sink");
  }
  return td;
}

/// alpha(s,t) = (τ⁻¹(T_s), τ⁻¹(T_t)).
inline STree matroid_td_to_stree(const Matroid& m, const MatroidTreeDecomposition& td, Order k) {
  if (matroid_td_width(m, td) >= k) throw PreconditionError("decomposition width too large");
  STree s;
  for (std::size_t t = 1; t < td.tree.node_count(); ++t) s.add_node();
  for (std::size_t i = 0; i < td.tree.edge_count(); ++i) {
    auto edge = td.tree.edge(i);
    std::vector<bool> near(td.tree.node_count(), false);
    for (std::size_t t : detail::side_of(td.tree, edge.from, edge.to)) near[t] = true;
    ElementSet a;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (near[td.tau[e]]) a.insert(e);
    }
    s.add_edge(edge.from, edge.to, Separation{a, m.ground() - a});
  }
  return s;
}

struct MatroidWidth {
  int value = 0;
  MatroidTreeDecomposition certificate;
};

/// Least k with an S_k-tree over F_k, minus one.
inline MatroidWidth matroid_treewidth(const Matroid& m, std::size_t max_nodes = kDefaultMaxNodes) {
  BipartitionUniverse universe = matroid_universe(m);
  for (Order k = 1;; ++k) {
    auto verdict = verify_duality(restrict_sk(universe, k), matroid_family_Fk(m, k), k, max_nodes);
    if (!verdict.has_tangle()) return {static_cast<int>(k) - 1, matroid_stree_to_td(m, *verdict.tree)};
  }
}

}  // namespace tangles
