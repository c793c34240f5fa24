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
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality.hpp"
#include "family.hpp"
#include "graph.hpp"

namespace tangles {

/// ∩B over the members; V for the empty set.
inline ElementSet intersect_big_sides(std::span<const Separation> sigma, ElementSet ground) {
  ElementSet out = ground;
  for (const Separation& s : sigma) out &= s.b;
  return out;
}

/// G[A_1] ∪ ... ∪ G[A_n] = G.
inline bool small_sides_cover(const Graph& g, std::span<const Separation> sigma) {
  ElementSet covered;
  for (const Separation& s : sigma) covered |= s.a;
  if (covered != g.vertices()) return false;
  for (const auto& e : g.edges()) {
    bool inside = false;
    for (const Separation& s : sigma) inside = inside || g.edge_inside(e, s.a);
    if (!inside) return false;
  }
  return true;
}

namespace detail {
inline bool all_below(std::span<const Separation> sigma, Order k) {
  for (const Separation& s : sigma) {
    if (static_cast<Order>(s.separator().size()) >= k) return false;
  }
  return true;
}

// Stars without small members, kept when `keep` accepts them; ∅ when `with_empty`.
template <class Keep>
void enumerate_nonsmall_stars(const SeparationSystem& system, std::size_t max_size, bool with_empty, Keep keep,
                              const Family::StarVisitor& visit) {
  if (with_empty) visit({});
  enumerate_stars(
      system, max_size, [&](std::size_t i) { return !is_small(system[i]); },
      [&](std::span<const std::size_t> star) {
        if (keep(members_of(system, star))) visit(star);
      });
}
}  // namespace detail

/// Sets of at most three separations of order < k whose small sides cover G.
inline Family family_T(const Graph& g, Order k) {
  return Family{"T", [g, k](std::span<const Separation> sigma) {
                  return sigma.size() <= 3 && detail::all_below(sigma, k) && small_sides_cover(g, sigma);
                },
                [g, k](const SeparationSystem&, const Family::StarVisitor&) {
                  throw std::logic_error("T is not a family of stars");
                }};
}

/// The stars in T. Basis: every member.
inline Family family_Tstar(const Graph& g, Order k) {
  auto contains = [g, k](std::span<const Separation> sigma) {
    return sigma.size() <= 3 && is_star(sigma) && detail::all_below(sigma, k) && small_sides_cover(g, sigma);
  };
  return Family{"T*", contains, [contains](const SeparationSystem& system, const Family::StarVisitor& visit) {
                  enumerate_stars(
                      system, 3, [](std::size_t) { return true; },
                      [&](std::span<const std::size_t> star) {
                        if (contains(members_of(system, star))) visit(star);
                      });
                }};
}

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Stars with |∩B| < w, members of order < k when `bounded`, at most
/// `max_size` members. Basis: the members without small separations.
inline Family graph_star_family(std::string name, const Graph& g, Order k, Order w, std::size_t max_size,
                                bool bounded) {
  ElementSet ground = g.vertices();
  auto contains = [=](std::span<const Separation> sigma) {
    if (sigma.size() > max_size || !is_star(sigma)) return false;
    if (bounded && !detail::all_below(sigma, k)) return false;
    return static_cast<Order>(intersect_big_sides(sigma, ground).size()) < w;
  };
  auto enumerate = [=](const SeparationSystem& system, const Family::StarVisitor& visit) {
    bool with_empty = static_cast<Order>(ground.size()) < w;
    // Stars of non-small separations have disjoint nonempty A\B.
    detail::enumerate_nonsmall_stars(system, std::min(max_size, ground.size()), with_empty, contains, visit);
  };
  return Family{std::move(name), contains, enumerate};
}

/// Stars with |∩B| < k.
inline Family family_Fk(const Graph& g, Order k) { return graph_star_family("F_k", g, k, k, kUnbounded, false); }

/// Members of F_k with at most two elements.
inline Family family_Fk2(const Graph& g, Order k) { return graph_star_family("F_k^(2)", g, k, k, 2, false); }

/// Stars of separations of order < k with |∩B| < w.
inline Family family_Fkw(const Graph& g, Order k, Order w) {
  return graph_star_family("F_k^w", g, k, w, kUnbounded, true);
}

/// Uncrosses a T-cover drawn from a consistent orientation into a T*-star.
/// Throws PreconditionError when neither corner of a crossing pair has
/// order < k, which can only happen if |G| < k. `steps` receives the number
/// of deletions and replacements.
inline std::vector<Separation> reduce_cover_to_star(const Graph& g, const Orientation& o,
                                                    std::span<const Separation> sigma, Order k,
                                                    std::size_t* steps = nullptr) {
  if (steps) *steps = 0;
  std::vector<Separation> cur = normalized(sigma);
  for (const Separation& s : cur) {
    if (!o.contains(s)) throw PreconditionError("cover member not in the orientation");
  }
  auto order = [](const Separation& s) { return static_cast<Order>(s.separator().size()); };
  const std::size_t cap = 4 * (cur.size() + 1) * (cur.size() + 1) + static_cast<std::size_t>(g.size()) * 16;
  for (std::size_t round = 0; round <= cap; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (std::size_t j = 0; j < cur.size() && !changed; ++j) {
        if (i == j) continue;
        const Separation r = cur[i];
        const Separation s = cur[j];
        if (leq(r, s)) {
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        } else if (!leq(r, s.inverse())) {
          Separation r2 = meet(r, s.inverse());
          Separation s2 = meet(s, r.inverse());
          if (order(r2) < k) {
            cur[i] = r2;
          } else if (order(s2) < k) {
            cur[j] = s2;
          } else {
            throw PreconditionError("no uncrossing corner of order < k");
          }
          changed = true;
        }
      }
    }
    if (changed && steps) ++*steps;
    if (!changed) {
      if (!small_sides_cover(g, cur)) throw DualityViolation("uncrossing lost the cover");
      for (const Separation& s : cur) {
        if (!o.contains(s)) throw DualityViolation("uncrossing left the orientation");
      }
      return cur;
    }
    cur = normalized(cur);
  }
  throw DualityViolation("uncrossing did not terminate");
}

}  // namespace tangles
