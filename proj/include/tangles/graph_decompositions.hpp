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
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "duality.hpp"
#include "graph.hpp"
#include "graph_families.hpp"
#include "stree.hpp"

namespace tangles {


// ---------------------------------------------------------------------------
// Tree-decompositions

struct TreeDecomposition {
  DecorationTree tree;
  std::vector<ElementSet> bags;
};

inline bool is_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (!td.tree.is_tree() || td.bags.size() != td.tree.node_count()) return false;
  ElementSet covered;
  for (ElementSet bag : td.bags) covered |= bag;
  if (covered != g.vertices()) return false;
  for (const auto& e : g.edges()) {
    bool inside = std::any_of(td.bags.begin(), td.bags.end(), [&](ElementSet b) { return g.edge_inside(e, b); });
    if (!inside) return false;
  }
  // In a tree, the nodes holding v are connected iff they span one edge fewer.
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::size_t nodes = 0, edges = 0;
    for (ElementSet bag : td.bags) nodes += bag.contains(v);
    for (std::size_t i = 0; i < td.tree.edge_count(); ++i) {
      auto e = td.tree.edge(i);
      edges += td.bags[e.from].contains(v) && td.bags[e.to].contains(v);
    }
    if (nodes != edges + 1) return false;
  }
  return true;
}

inline int td_width(const TreeDecomposition& td) {
  int w = -1;
  for (ElementSet bag : td.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

inline int td_adhesion(const TreeDecomposition& td) {
  int a = 0;
  for (std::size_t i = 0; i < td.tree.edge_count(); ++i) {
    auto e = td.tree.edge(i);
    a = std::max(a, static_cast<int>((td.bags[e.from] & td.bags[e.to]).size()));
  }
  return a;
}

/// Bags V_t = ∩{B : (A,B) = alpha(s,t)}, V for an isolated node.
inline TreeDecomposition stree_to_treedecomp(const STree& s, std::size_t n) {
  TreeDecomposition td{s.tree(), {}};
  for (std::size_t t = 0; t < s.node_count(); ++t) {
    td.bags.push_back(intersect_big_sides(oriented_star_at(t, s), ElementSet::full(n)));
  }
  return td;
}

/// alpha(t1,t2) = (U1,U2) with U_i the union of the bags on t_i's side.
inline STree treedecomp_to_stree(const Graph& g, const TreeDecomposition& td, Order k) {
  if (!is_tree_decomposition(g, td)) throw PreconditionError("not a tree-decomposition");
  if (td_width(td) >= k - 1) throw PreconditionError("tree-decomposition width too large");
  STree s;
  for (std::size_t t = 1; t < td.tree.node_count(); ++t) s.add_node();
  auto union_of = [&](std::size_t x, std::size_t y) {
    ElementSet u;
    for (std::size_t t : detail::side_of(td.tree, x, y)) u |= td.bags[t];
    return u;
  };
  for (std::size_t i = 0; i < td.tree.edge_count(); ++i) {
    auto e = td.tree.edge(i);
    s.add_edge(e.from, e.to, Separation{union_of(e.from, e.to), union_of(e.to, e.from)});
  }
  return s;
}

// ---------------------------------------------------------------------------
// Branch-decompositions

/// A tree whose leaves correspond bijectively to the edges of G;
/// leaf_of_edge[i] is the leaf of g.edges()[i].
struct BranchDecomposition {
  DecorationTree tree;
  std::vector<std::size_t> leaf_of_edge;
};

inline bool is_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
  if (!bd.tree.is_tree() || bd.leaf_of_edge.size() != g.edge_count()) return false;
  std::vector<std::size_t> leaves;
  for (std::size_t t = 0; t < bd.tree.node_count(); ++t) {
    std::size_t d = bd.tree.degree(t);
    if (d <= 1) leaves.push_back(t);
    else if (d != 3) return false;
  }
  std::vector<std::size_t> image = bd.leaf_of_edge;
  std::sort(image.begin(), image.end());
  return image == leaves;
}

namespace detail {
// Vertices incident with an edge of G mapped to x's side of xy.
inline ElementSet incident_on_side(const Graph& g, const BranchDecomposition& bd, std::size_t x, std::size_t y) {
  std::vector<bool> on_side(bd.tree.node_count(), false);
  for (std::size_t t : side_of(bd.tree, x, y)) on_side[t] = true;
  ElementSet out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (on_side[bd.leaf_of_edge[i]]) {
      out.insert(g.edges()[i].first);
      out.insert(g.edges()[i].second);
    }
  }
  return out;
}
}  // namespace detail

/// Largest number of vertices incident with edges on both sides of a tree edge.
inline int bd_width(const Graph& g, const BranchDecomposition& bd) {
  int w = 0;
  for (std::size_t i = 0; i < bd.tree.edge_count(); ++i) {
    auto e = bd.tree.edge(i);
    ElementSet mid = detail::incident_on_side(g, bd, e.from, e.to) & detail::incident_on_side(g, bd, e.to, e.from);
    w = std::max(w, static_cast<int>(mid.size()));
  }
  return w;
}

/// The S_k-tree over T* of a branch-decomposition of width < k (k >= 3,
/// at least two edges). Leaf sides are duplicated onto the other side; each
/// isolated vertex gets its own leaf on a subdivided edge.
inline STree branchdecomp_to_stree(const Graph& g, const BranchDecomposition& bd, Order k) {
  if (k < 3) throw PreconditionError("branch-decomposition translation needs k >= 3");
  if (g.edge_count() < 2) throw PreconditionError("branch-decomposition translation needs two edges");
  if (!is_branch_decomposition(g, bd)) throw PreconditionError("not a branch-decomposition");
  if (bd_width(g, bd) >= k) throw PreconditionError("branch-decomposition width too large");

  // Working tree: nodes own the vertices of their edge or isolated vertex.
  DecorationTree tree = bd.tree;
  std::vector<ElementSet> owned(tree.node_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    owned[bd.leaf_of_edge[i]] = ElementSet{g.edges()[i].first, g.edges()[i].second};
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < tree.edge_count(); ++i) edges.emplace_back(tree.edge(i).from, tree.edge(i).to);
  auto subdivide = [&](std::size_t at) {
    auto [x, y] = edges[at];
    std::size_t m = owned.size();
    owned.emplace_back();
    edges[at] = {x, m};
    edges.emplace_back(m, y);
    return m;
  };
  if (edges.size() == 1) subdivide(0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 0) continue;
    std::size_t m = subdivide(0);
    std::size_t leaf = owned.size();
    owned.push_back(ElementSet::singleton(v));
    edges.emplace_back(m, leaf);
  }
  DecorationTree work(owned.size());
  for (auto [x, y] : edges) work.add_edge(x, y);

  auto side = [&](std::size_t x, std::size_t y) {
    ElementSet out;
    for (std::size_t t : detail::side_of(work, x, y)) out |= owned[t];
    return out;
  };
  STree s;
  for (std::size_t t = 1; t < work.node_count(); ++t) s.add_node();
  for (auto [x, y] : edges) {
    ElementSet a = side(x, y), b = side(y, x);
    if (work.degree(x) == 1) b |= owned[x];
    if (work.degree(y) == 1) a |= owned[y];
    s.add_edge(x, y, Separation{a, b});
  }
  return s;
}

namespace detail {

// Mutable labelled tree used while turning an S-tree into a branch-decomposition.
class LabelledTree {
 public:
  explicit LabelledTree(const STree& s) : adj_(s.node_count()), alive_(s.node_count(), true) {
    for (const OrientedEdge& e : s.oriented_edges()) {
      adj_[e.from].insert(e.to);
      label_[{e.from, e.to}] = s.alpha(e);
    }
  }

  std::size_t size() const { return adj_.size(); }
  bool alive(std::size_t t) const { return alive_[t]; }
  const std::set<std::size_t>& neighbours(std::size_t t) const { return adj_[t]; }
  std::size_t degree(std::size_t t) const { return adj_[t].size(); }
  const Separation& label(std::size_t x, std::size_t y) const { return label_.at({x, y}); }

  std::size_t add_node() {
    adj_.emplace_back();
    alive_.push_back(true);
    return adj_.size() - 1;
  }

  void link(std::size_t x, std::size_t y, const Separation& s) {
    adj_[x].insert(y);
    adj_[y].insert(x);
    label_[{x, y}] = s;
    label_[{y, x}] = s.inverse();
  }

  void unlink(std::size_t x, std::size_t y) {
    adj_[x].erase(y);
    adj_[y].erase(x);
    label_.erase({x, y});
    label_.erase({y, x});
  }

  // Removes y's side of the edge xy.
  void prune(std::size_t x, std::size_t y) {
    unlink(x, y);
    std::vector<std::size_t> stack{y};
    while (!stack.empty()) {
      std::size_t t = stack.back();
      stack.pop_back();
      alive_[t] = false;
      for (std::size_t u : std::vector<std::size_t>(adj_[t].begin(), adj_[t].end())) {
        unlink(t, u);
        stack.push_back(u);
      }
    }
  }

  void remove(std::size_t t) {
    for (std::size_t u : std::vector<std::size_t>(adj_[t].begin(), adj_[t].end())) unlink(t, u);
    alive_[t] = false;
  }

 private:
  std::vector<std::set<std::size_t>> adj_;
  std::vector<bool> alive_;
  std::map<std::pair<std::size_t, std::size_t>, Separation> label_;
};

}  // namespace detail

/// A branch-decomposition from an S-tree over T*: each edge of G goes to a
/// node all of whose edges point at it; that node is then made a private
/// leaf, unused leaves are deleted and degree-2 nodes suppressed.
inline BranchDecomposition stree_to_branchdecomp(const Graph& g, const STree& s) {
  detail::LabelledTree t(s);
  // Two branches with the same inward label at a node: keep one.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < t.size() && !changed; ++x) {
      if (!t.alive(x)) continue;
      std::map<Separation, std::size_t> seen;
      for (std::size_t y : t.neighbours(x)) {
        auto [it, fresh] = seen.emplace(t.label(y, x), y);
        if (!fresh) {
          t.prune(x, y);
          changed = true;
          break;
        }
      }
    }
  }

  const auto& edges = g.edges();
  auto points_to = [&](std::size_t i, std::size_t x, std::size_t y) {
    const Separation& sep = t.label(x, y);
    ElementSet ends{edges[i].first, edges[i].second};
    bool in_a = ends.subset_of(sep.a), in_b = ends.subset_of(sep.b);
    if (in_a && in_b) return y > x;
    return in_b;
  };
  std::vector<std::size_t> home(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::optional<std::size_t> sink;
    for (std::size_t x = 0; x < t.size() && !sink; ++x) {
      if (!t.alive(x)) continue;
      bool all_in = true;
      for (std::size_t y : t.neighbours(x)) all_in = all_in && points_to(i, y, x);
      if (all_in) sink = x;
    }
    if (!sink) throw PreconditionError("S-tree does not orient towards an edge");
    home[i] = *sink;
  }

  auto edge_ends = [&](std::size_t i) { return ElementSet{edges[i].first, edges[i].second}; };
  ElementSet all = g.vertices();
  auto attach_leaf = [&](std::size_t at, std::size_t i) {
    std::size_t leaf = t.add_node();
    t.link(leaf, at, Separation{edge_ends(i), all});
    home[i] = leaf;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < edges.size() && !changed; ++i) {
      std::size_t x = home[i];
      std::size_t d = t.degree(x);
      if (d == 1) continue;
      changed = true;
      if (d == 0 || d == 2) {
        attach_leaf(x, i);
      } else if (d == 3) {
        std::optional<std::size_t> via;
        for (std::size_t y : t.neighbours(x)) {
          if (edge_ends(i).subset_of(t.label(y, x).a)) via = y;
        }
        if (!via) throw PreconditionError("node star does not cover an edge");
        Separation sep = t.label(*via, x);
        std::size_t mid = t.add_node();
        t.unlink(*via, x);
        t.link(*via, mid, sep);
        t.link(mid, x, sep);
        attach_leaf(mid, i);
      } else {
        throw PreconditionError("node of degree above three");
      }
    }
    for (std::size_t i = 0; i < edges.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < edges.size() && !changed; ++j) {
        if (home[i] != home[j]) continue;
        std::size_t x = home[i];
        attach_leaf(x, i);
        attach_leaf(x, j);
        changed = true;
      }
    }
  }

  std::vector<bool> used(t.size(), false);
  for (std::size_t x : home) used[x] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t.alive(x) && !used[x] && t.degree(x) <= 1 && !(t.degree(x) == 0 && edges.empty())) {
        t.remove(x);
        changed = true;
      }
    }
  }
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (!t.alive(x) || t.degree(x) != 2) continue;
    auto it = t.neighbours(x).begin();
    std::size_t a = *it, b = *std::next(it);
    t.remove(x);
    t.link(a, b, Separation{});
  }

  std::vector<std::size_t> index(t.size(), DecorationTree::kUnreached);
  std::size_t count = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.alive(x)) index[x] = count++;
  }
  BranchDecomposition bd{DecorationTree(count), {}};
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (!t.alive(x)) continue;
    for (std::size_t y : t.neighbours(x)) {
      if (x < y) bd.tree.add_edge(index[x], index[y]);
    }
  }
  for (std::size_t x : home) bd.leaf_of_edge.push_back(index[x]);
  return bd;
}

// ---------------------------------------------------------------------------
// Brambles

struct Bramble {
  std::vector<ElementSet> sets;
};

inline bool touching(const Graph& g, ElementSet x, ElementSet y) {
  return x.intersects(y) || g.neighbourhood(x).intersects(y);
}

/// Nonempty connected sets, pairwise touching.
inline bool is_bramble(const Graph& g, const Bramble& b) {
  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    if (b.sets[i].empty() || !g.connected(b.sets[i])) return false;
    for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
      if (!touching(g, b.sets[i], b.sets[j])) return false;
    }
  }
  return true;
}

/// Least size of a vertex set meeting every member.
inline std::size_t bramble_order(const Graph& g, const Bramble& b) {
  std::size_t best = g.size();
  for_each_subset(g.vertices(), [&](ElementSet x) {
    if (x.size() >= best) return;
    for (ElementSet s : b.sets) {
      if (!s.intersects(x)) return;
    }
    best = x.size();
  });
  return b.sets.empty() ? 0 : best;
}

/// O = {(A,B) in S_k : B\A contains a bramble set}.
inline Orientation bramble_to_tangle(const Graph& g, const Bramble& b, Order k) {
  SeparationSystem system = vertex_separations(g, k);
  std::vector<Separation> members;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Separation& s = system[i];
    ElementSet strict_b = s.b - s.a;
    bool towards_b = std::any_of(b.sets.begin(), b.sets.end(), [&](ElementSet x) { return x.subset_of(strict_b); });
    if (towards_b) members.push_back(s);
  }
  Orientation o(std::move(members));
  if (!is_orientation_of(o, system)) throw PreconditionError("bramble order below k");
  return o;
}

/// For each X with |X| < k, the component C of G-X with (V\C, C∪N(C)) in O.
inline Bramble tangle_to_bramble(const Graph& g, const Orientation& o, Order k) {
  std::set<ElementSet> sets;
  ElementSet all = g.vertices();
  for_each_subset(all, [&](ElementSet x) {
    if (static_cast<Order>(x.size()) >= k) return;
    for (ElementSet c : g.components(all - x)) {
      if (o.contains(Separation{all - c, c | g.neighbourhood(c)})) {
        sets.insert(c);
        break;
      }
    }
  });
  return Bramble{std::vector<ElementSet>(sets.begin(), sets.end())};
}

// ---------------------------------------------------------------------------
// Blockages

/// Vertices of X with a neighbour outside X.
inline ElementSet boundary(const Graph& g, ElementSet x) {
  ElementSet out;
  x.for_each([&](std::size_t v) {
    if (!g.neighbours(v).subset_of(x)) out.insert(v);
  });
  return out;
}

struct Blockage {
  std::vector<ElementSet> members;  // sorted, distinct

  bool contains(ElementSet x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline Blockage make_blockage(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return Blockage{std::move(sets)};
}

/// (B1) small boundaries, (B2) closed under subsets of small boundary,
/// (B3) exactly one side of every separation in S_k.
inline bool is_blockage(const Graph& g, const Blockage& b, Order k) {
  auto small = [&](ElementSet x) { return static_cast<Order>(boundary(g, x).size()) < k; };
  for (ElementSet x : b.members) {
    if (!small(x)) return false;
    bool closed = true;
    for_each_subset(x, [&](ElementSet y) { closed = closed && (!small(y) || b.contains(y)); });
    if (!closed) return false;
  }
  SeparationSystem system = vertex_separations(g, k);
  for (const Separation& s : system.elements()) {
    if (b.contains(s.a) == b.contains(s.b)) return false;
  }
  return true;
}

/// O = {(X,Y) in S_k : X in B}.
inline Orientation blockage_to_tangle(const Graph& g, const Blockage& b, Order k) {
  SeparationSystem system = vertex_separations(g, k);
  std::vector<Separation> members;
  for (const Separation& s : system.elements()) {
    if (b.contains(s.a)) members.push_back(s);
  }
  return Orientation(std::move(members));
}

/// B = {X : (X,Y) in O}.
inline Blockage tangle_to_blockage(const Orientation& o) {
  std::vector<ElementSet> sets;
  for (const Separation& s : o.members) sets.push_back(s.a);
  return make_blockage(std::move(sets));
}

}  // namespace tangles
