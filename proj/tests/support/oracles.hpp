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

// Brute-force reference computations. None of these call the searches they
// are compared against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tangles/family.hpp"
#include "tangles/graph.hpp"
#include "tangles/separation.hpp"

namespace tangles::testing {

inline std::size_t popcount(std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

/// Every (A,B) with A∪B = V, no edge between A\B and B\A, |A∩B| < k.
inline std::vector<Separation> brute_vertex_separations(const Graph& g, std::int64_t k) {
  std::vector<Separation> out;
  const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
  for (std::uint64_t a = 0; a <= full; ++a) {
    for (std::uint64_t b = 0; b <= full; ++b) {
      if ((a | b) != full || static_cast<std::int64_t>(popcount(a & b)) >= k) continue;
      std::uint64_t only_a = a & ~b, only_b = b & ~a;
      bool ok = true;
      for (auto [u, v] : g.edges()) {
        bool cross = (((only_a >> u) & 1U) && ((only_b >> v) & 1U)) || (((only_a >> v) & 1U) && ((only_b >> u) & 1U));
        ok = ok && !cross;
      }
      if (ok) out.push_back(Separation{ElementSet(a), ElementSet(b)});
    }
  }
  return out;
}

/// Minimum over elimination orders of the largest neighbourhood eliminated.
inline int brute_treewidth(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    std::vector<std::uint64_t> adj(n);
    for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbours(v).bits();
    std::uint64_t gone = 0;
    int width = 0;
    for (std::size_t v : order) {
      std::uint64_t nb = adj[v] & ~gone;
      width = std::max(width, static_cast<int>(popcount(nb)));
      for (std::size_t u = 0; u < n; ++u)
        if ((nb >> u) & 1U) adj[u] |= nb & ~(std::uint64_t{1} << u);
      gone |= std::uint64_t{1} << v;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return n == 0 ? -1 : best;
}

/// Vertex separation number, which equals path-width.
inline int brute_pathwidth(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    std::uint64_t placed = 0;
    int width = 0;
    for (std::size_t v : order) {
      placed |= std::uint64_t{1} << v;
      int frontier = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (((placed >> u) & 1U) && (g.neighbours(u).bits() & ~placed)) ++frontier;
      width = std::max(width, frontier);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return n == 0 ? -1 : best;
}

/// Branch-width by dynamic programming over sets of edges: g(X) is the best
/// width of a rooted binary tree with leaves X.
inline int brute_branchwidth(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m <= 1) return 0;
  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  auto touched = [&](std::uint64_t x) {
    std::uint64_t vs = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((x >> i) & 1U) vs |= (std::uint64_t{1} << g.edges()[i].first) | (std::uint64_t{1} << g.edges()[i].second);
    return vs;
  };
  auto mid = [&](std::uint64_t x) { return static_cast<int>(popcount(touched(x) & touched(all & ~x))); };
  std::vector<int> best(all + 1, std::numeric_limits<int>::max());
  for (std::uint64_t x = 1; x <= all; ++x) {
    if (popcount(x) == 1) {
      best[x] = 0;
      continue;
    }
    for (std::uint64_t y = (x - 1) & x; y != 0; y = (y - 1) & x) {
      std::uint64_t z = x & ~y;
      if (y < z) continue;
      best[x] = std::min(best[x], std::max({mid(y), mid(z), best[y], best[z]}));
    }
  }
  int out = std::numeric_limits<int>::max();
  for (std::uint64_t x = 1; x < all; ++x) out = std::min(out, std::max({mid(x), best[x], best[all & ~x]}));
  return out;
}

/// Every ternary tree whose leaves are 0..n-1 (n >= 2), as edge lists over
/// nodes where node i < n is leaf i. Built by inserting leaves into edges.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> leaf_trees(std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}};
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t leaf, std::size_t next_inner) {
    if (leaf == n) {
      out.push_back(edges);
      return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [x, y] = edges[i];
      std::size_t m = next_inner;
      edges[i] = {x, m};
      edges.push_back({m, y});
      edges.push_back({m, leaf});
      grow(leaf + 1, next_inner + 1);
      edges.pop_back();
      edges.pop_back();
      edges[i] = {x, y};
    }
  };
  grow(2, n);
  return out;
}

/// min over ternary leaf trees on V of the largest f(side) over tree edges.
inline std::int64_t brute_leaf_tree_width(std::size_t n, const std::function<std::int64_t(std::uint64_t)>& f) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& edges : leaf_trees(n)) {
    std::size_t nodes = 0;
    for (auto [x, y] : edges) nodes = std::max({nodes, x + 1, y + 1});
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (auto [x, y] : edges) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::int64_t width = 0;
    for (auto [x, y] : edges) {
      std::uint64_t side = 0;
      std::vector<std::size_t> stack{x};
      std::vector<bool> seen(nodes, false);
      seen[x] = seen[y] = true;
      while (!stack.empty()) {
        std::size_t t = stack.back();
        stack.pop_back();
        if (t < n) side |= std::uint64_t{1} << t;
        for (std::size_t u : adj[t])
          if (!seen[u]) {
            seen[u] = true;
            stack.push_back(u);
          }
      }
      width = std::max(width, f(side));
    }
    best = std::min(best, width);
  }
  return best;
}

inline std::int64_t brute_cut(const Graph& g, std::uint64_t x) {
  std::int64_t c = 0;
  for (auto [u, v] : g.edges()) c += ((x >> u) & 1U) != ((x >> v) & 1U);
  return c;
}

/// GF(2) rank of the X × (V\X) adjacency matrix, by plain elimination.
inline std::int64_t brute_cut_rank(const Graph& g, std::uint64_t x) {
  std::vector<std::uint64_t> rows;
  const std::uint64_t rest = ((std::uint64_t{1} << g.size()) - 1) & ~x;
  for (std::size_t v = 0; v < g.size(); ++v)
    if ((x >> v) & 1U) rows.push_back(g.neighbours(v).bits() & rest);
  std::int64_t rank = 0;
  for (std::size_t col = 0; col < g.size(); ++col) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](std::uint64_t r) { return (r >> col) & 1U; });
    if (it == rows.end()) continue;
    std::uint64_t pivot = *it;
    rows.erase(it);
    for (auto& r : rows)
      if ((r >> col) & 1U) r ^= pivot;
    ++rank;
  }
  return rank;
}

inline std::int64_t brute_carving_width(const Graph& g) {
  return brute_leaf_tree_width(g.size(), [&](std::uint64_t x) { return brute_cut(g, x); });
}

inline std::int64_t brute_rank_width(const Graph& g) {
  return brute_leaf_tree_width(g.size(), [&](std::uint64_t x) { return brute_cut_rank(g, x); });
}

/// A bramble {C_X : |X| < k} with C_X a component of G - X, pairwise
/// touching, found by backtracking over the choices.
inline bool brute_component_bramble(const Graph& g, std::int64_t k) {
  const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
  std::vector<std::vector<std::uint64_t>> options;
  for (std::uint64_t x = 0; x <= full; ++x) {
    if (static_cast<std::int64_t>(popcount(x)) >= k) continue;
    std::vector<std::uint64_t> comps;
    for (ElementSet c : g.components(ElementSet(full & ~x))) comps.push_back(c.bits());
    if (comps.empty()) return false;
    options.push_back(comps);
  }
  auto touch = [&](std::uint64_t a, std::uint64_t b) {
    if (a & b) return true;
    for (auto [u, v] : g.edges())
      if ((((a >> u) & 1U) && ((b >> v) & 1U)) || (((a >> v) & 1U) && ((b >> u) & 1U))) return true;
    return false;
  };
  std::vector<std::uint64_t> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t i) {
    if (i == options.size()) return true;
    for (std::uint64_t c : options[i]) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::uint64_t d) { return touch(c, d); })) continue;
      chosen.push_back(c);
      if (pick(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(0);
}

/// A blockage of order k-1: a choice of sets X with |∂X| < k, closed under
/// such subsets, containing exactly one side of each separation of order < k.
/// Backtracking with propagation over the two-literal constraints.
inline bool brute_blockage(const Graph& g, std::int64_t k) {
  const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
  auto boundary = [&](std::uint64_t x) {
    std::size_t b = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (((x >> v) & 1U) && (g.neighbours(v).bits() & ~x)) ++b;
    return static_cast<std::int64_t>(b);
  };
  std::vector<std::uint64_t> cand;
  std::map<std::uint64_t, std::size_t> index;
  for (std::uint64_t x = 0; x <= full; ++x)
    if (boundary(x) < k) {
      index[x] = cand.size();
      cand.push_back(x);
    }
  // Clauses (lit1 or lit2); literal = 2*var + negated.
  std::vector<std::pair<std::size_t, std::size_t>> clauses;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (i != j && (cand[j] & ~cand[i]) == 0) clauses.push_back({2 * i + 1, 2 * j});
  for (const Separation& s : brute_vertex_separations(g, k)) {
    std::size_t a = index.at(s.a.bits()), b = index.at(s.b.bits());
    if (a == b) return false;
    clauses.push_back({2 * a, 2 * b});
    clauses.push_back({2 * a + 1, 2 * b + 1});
  }
  std::vector<std::vector<std::size_t>> watch(2 * cand.size());
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    watch[clauses[c].first ^ 1].push_back(c);
    watch[clauses[c].second ^ 1].push_back(c);
  }
  std::vector<int> value(cand.size(), -1);
  auto lit_true = [&](std::size_t lit) { return value[lit / 2] == static_cast<int>(1 - (lit & 1U)); };
  auto lit_false = [&](std::size_t lit) { return value[lit / 2] == static_cast<int>(lit & 1U); };
  std::function<bool(std::size_t, std::vector<std::size_t>&)> set = [&](std::size_t lit,
                                                                        std::vector<std::size_t>& trail) {
    if (lit_true(lit)) return true;
    if (lit_false(lit)) return false;
    value[lit / 2] = static_cast<int>(1 - (lit & 1U));
    trail.push_back(lit / 2);
    for (std::size_t c : watch[lit]) {
      auto [p, q] = clauses[c];
      std::size_t other = (p == (lit ^ 1)) ? q : p;
      if (!set(other, trail)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> solve = [&](std::size_t var) {
    while (var < cand.size() && value[var] != -1) ++var;
    if (var == cand.size()) return true;
    for (std::size_t lit : {2 * var, 2 * var + 1}) {
      std::vector<std::size_t> trail;
      if (set(lit, trail) && solve(var + 1)) return true;
      for (std::size_t v : trail) value[v] = -1;
    }
    return false;
  };
  return solve(0);
}

/// Every consistent orientation of `elements` (closed under inversion,
/// at most 20 elements) none of whose subsets lies in `family`.
inline std::vector<std::vector<Separation>> brute_tangles(const std::vector<Separation>& elements,
                                                           const Family& family) {
  std::vector<std::vector<Separation>> out;
  const std::size_t m = elements.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<Separation> o;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1U) o.push_back(elements[i]);
    bool orientation = true;
    for (const Separation& s : elements) {
      bool has = std::find(o.begin(), o.end(), s) != o.end();
      bool has_inv = std::find(o.begin(), o.end(), s.inverse()) != o.end();
      orientation = orientation && (s.degenerate() ? has : has != has_inv);
    }
    if (!orientation) continue;
    bool consistent = true;
    for (const Separation& r : o)
      for (const Separation& s : o)
        if (r != s && r != s.inverse() && leq(r.inverse(), s) && r.inverse() != s) consistent = false;
    if (!consistent) continue;
    bool avoids = true;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << o.size()) && avoids; ++sub) {
      std::vector<Separation> sigma;
      for (std::size_t i = 0; i < o.size(); ++i)
        if ((sub >> i) & 1U) sigma.push_back(o[i]);
      avoids = !family_contains(family, sigma);
    }
    if (avoids) {
      std::sort(o.begin(), o.end());
      out.push_back(o);
    }
  }
  return out;
}

}  // namespace tangles::testing
