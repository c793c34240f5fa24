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
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "separation.hpp"
#include "separation_system.hpp"
#include "universe.hpp"

namespace tangles {

/// A finite simple graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Graph(std::size_t n = 0) : adjacency_(n) {
    if (n > 64) throw std::invalid_argument("graph too large");
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Adds uv; ignores repeats. Loops are rejected.
  void add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjacency_[u].contains(v)) return;
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  ElementSet vertices() const { return ElementSet::full(size()); }
  ElementSet neighbours(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  /// Vertices outside X with a neighbour in X.
  ElementSet neighbourhood(ElementSet x) const {
    ElementSet out;
    x.for_each([&](std::size_t v) { out |= adjacency_[v]; });
    return out - x;
  }

  /// Vertex sets of the components of G[X].
  std::vector<ElementSet> components(ElementSet x) const {
    std::vector<ElementSet> out;
    ElementSet left = x;
    while (!left.empty()) {
      ElementSet comp = ElementSet::singleton(left.first());
      ElementSet frontier = comp;
      while (!frontier.empty()) {
        ElementSet next;
        frontier.for_each([&](std::size_t v) { next |= adjacency_[v]; });
        next = (next & x) - comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      left = left - comp;
    }
    return out;
  }

  bool connected(ElementSet x) const { return x.empty() || components(x).size() == 1; }

  /// Edges with both ends in X.
  bool edge_inside(const Edge& e, ElementSet x) const { return x.contains(e.first) && x.contains(e.second); }

 private:
  std::vector<ElementSet> adjacency_;
  std::vector<Edge> edges_;
};

/// (A,B) covers V and no edge joins A\B to B\A.
inline bool is_vertex_separation(const Graph& g, const Separation& s) {
  if (!s.covers(g.vertices())) return false;
  ElementSet only_a = s.a - s.b;
  ElementSet only_b = s.b - s.a;
  return !g.neighbourhood(only_a).intersects(only_b);
}

/// The universe of vertex separations of G with ord(A,B) = |A∩B|.
class GraphUniverse {
 public:
  explicit GraphUniverse(const Graph& g) : graph_(g) {}

  std::size_t ground_size() const { return graph_.size(); }
  bool contains(const Separation& s) const { return is_vertex_separation(graph_, s); }
  Order order(const Separation& s) const { return static_cast<Order>(s.separator().size()); }
  const Graph& graph() const { return graph_; }

  // Each separator Z with |Z| < k, then every split of the components of G-Z.
  void for_each_below(Order k, const std::function<void(const Separation&)>& fn) const {
    ElementSet all = graph_.vertices();
    for_each_subset(all, [&](ElementSet z) {
      if (static_cast<Order>(z.size()) >= k) return;
      auto comps = graph_.components(all - z);
      const std::size_t c = comps.size();
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
        ElementSet a = z, b = z;
        for (std::size_t i = 0; i < c; ++i) {
          if ((pick >> i) & 1U) a |= comps[i];
          else b |= comps[i];
        }
        fn(Separation{a, b});
      }
    });
  }

 private:
  Graph graph_;
};

/// All oriented vertex separations of order < k.
inline SeparationSystem vertex_separations(const Graph& g, Order k) { return restrict_sk(GraphUniverse(g), k); }

}  // namespace tangles
