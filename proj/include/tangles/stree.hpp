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
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "family.hpp"
#include "separation_system.hpp"

namespace tangles {

/// An ordered pair of adjacent nodes.
struct OrientedEdge {
  std::size_t from = 0;
  std::size_t to = 0;

  OrientedEdge reversed() const { return {to, from}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

/// A finite tree with stable node indices. Nodes are 0..node_count()-1.
class DecorationTree {
 public:
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  explicit DecorationTree(std::size_t nodes = 1) : adjacency_(nodes) {}

  std::size_t add_node() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
  }

  std::size_t add_edge(std::size_t x, std::size_t y) {
    if (x >= node_count() || y >= node_count() || x == y) throw std::invalid_argument("bad tree edge");
    edges_.push_back({x, y});
    adjacency_[x].push_back({y, edges_.size() - 1});
    adjacency_[y].push_back({x, edges_.size() - 1});
    return edges_.size() - 1;
  }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  OrientedEdge edge(std::size_t i) const { return edges_[i]; }
  std::span<const Incidence> incident(std::size_t t) const { return adjacency_[t]; }
  std::size_t degree(std::size_t t) const { return adjacency_[t].size(); }

  std::optional<std::size_t> edge_between(std::size_t x, std::size_t y) const {
    for (const Incidence& inc : adjacency_[x]) {
      if (inc.neighbor == y) return inc.edge;
    }
    return std::nullopt;
  }

  /// Nonempty, connected and acyclic.
  bool is_tree() const {
    if (node_count() == 0 || edge_count() + 1 != node_count()) return false;
    auto dist = distances_from(0);
    return std::find(dist.begin(), dist.end(), kUnreached) == dist.end();
  }

  std::vector<std::size_t> distances_from(std::size_t source) const {
    std::vector<std::size_t> dist(node_count(), kUnreached);
    std::queue<std::size_t> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
      std::size_t t = q.front();
      q.pop();
      for (const Incidence& inc : adjacency_[t]) {
        if (dist[inc.neighbor] == kUnreached) {
          dist[inc.neighbor] = dist[t] + 1;
          q.push(inc.neighbor);
        }
      }
    }
    return dist;
  }

  std::vector<std::vector<std::size_t>> distances() const {
    std::vector<std::vector<std::size_t>> d;
    d.reserve(node_count());
    for (std::size_t t = 0; t < node_count(); ++t) d.push_back(distances_from(t));
    return d;
  }

  static constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

 private:
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<OrientedEdge> edges_;
};

namespace detail {
// Nodes on x's side of the tree edge xy.
inline std::vector<std::size_t> side_of(const DecorationTree& tree, std::size_t x, std::size_t y) {
  std::vector<std::size_t> out{x};
  std::vector<bool> seen(tree.node_count(), false);
  seen[x] = seen[y] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& inc : tree.incident(out[i])) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        out.push_back(inc.neighbor);
      }
    }
  }
  return out;
}
}  // namespace detail

/// A tree whose oriented edges carry separations, alpha(y,x) = alpha(x,y)*.
class STree {
 public:
  STree() = default;

  std::size_t add_node() { return tree_.add_node(); }

  /// Adds the edge xy with alpha(x,y) = s.
  void add_edge(std::size_t x, std::size_t y, const Separation& s) {
    tree_.add_edge(x, y);
    labels_.push_back(s);
  }

  const DecorationTree& tree() const { return tree_; }
  std::size_t node_count() const { return tree_.node_count(); }
  std::size_t edge_count() const { return tree_.edge_count(); }

  Separation alpha(const OrientedEdge& e) const {
    auto id = tree_.edge_between(e.from, e.to);
    if (!id) throw std::out_of_range("not a tree edge");
    return tree_.edge(*id).from == e.from ? labels_[*id] : labels_[*id].inverse();
  }
  Separation alpha(std::size_t x, std::size_t y) const { return alpha(OrientedEdge{x, y}); }

  /// Both orientations of every edge.
  std::vector<OrientedEdge> oriented_edges() const {
    std::vector<OrientedEdge> out;
    for (std::size_t i = 0; i < edge_count(); ++i) {
      out.push_back(tree_.edge(i));
      out.push_back(tree_.edge(i).reversed());
    }
    return out;
  }

 private:
  DecorationTree tree_;
  std::vector<Separation> labels_;
};

/// alpha of the edges oriented towards t, as a sorted set.
inline std::vector<Separation> oriented_star_at(std::size_t t, const STree& s) {
  std::vector<Separation> out;
  for (const auto& inc : s.tree().incident(t)) out.push_back(s.alpha(inc.neighbor, t));
  return normalized(out);
}

/// Every node's inward star lies in the family.
inline bool is_over(const STree& s, const Family& family) {
  for (std::size_t t = 0; t < s.node_count(); ++t) {
    if (!family.contains(oriented_star_at(t, s))) return false;
  }
  return true;
}

/// Every edge label lies in S.
inline bool labels_in(const STree& s, const SeparationSystem& system) {
  for (const OrientedEdge& e : s.oriented_edges()) {
    if (!system.contains(s.alpha(e))) return false;
  }
  return true;
}

enum class EdgeOrder { less, greater, incomparable };

namespace detail {
// (x,y) < (u,v): distinct edges with the path x,y,...,u,v.
inline bool edge_below(const OrientedEdge& e, const OrientedEdge& f, const std::vector<std::vector<std::size_t>>& d) {
  if (e == f.reversed()) return false;
  std::size_t mid = d[e.to][f.from];
  return d[e.from][f.from] == mid + 1 && d[e.to][f.to] == mid + 1;
}
}  // namespace detail

inline EdgeOrder natural_edge_order(const OrientedEdge& e, const OrientedEdge& f, const DecorationTree& tree) {
  auto d = tree.distances();
  if (detail::edge_below(e, f, d)) return EdgeOrder::less;
  if (detail::edge_below(f, e, d)) return EdgeOrder::greater;
  return EdgeOrder::incomparable;
}

/// First pair e < f with alpha(e) not below alpha(f), if any.
inline std::optional<std::pair<OrientedEdge, OrientedEdge>> find_order_violation(const STree& s) {
  auto d = s.tree().distances();
  auto edges = s.oriented_edges();
  for (const OrientedEdge& e : edges) {
    for (const OrientedEdge& f : edges) {
      if (detail::edge_below(e, f, d) && !leq(s.alpha(e), s.alpha(f))) return std::make_pair(e, f);
    }
  }
  return std::nullopt;
}

inline bool check_order_preserving(const STree& s) { return !find_order_violation(s).has_value(); }

}  // namespace tangles
