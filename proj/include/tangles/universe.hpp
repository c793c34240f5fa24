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

#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "separation_system.hpp"

namespace tangles {

/// A universe of set separations with an order function. Join and meet are
/// the set-separation ones from separation.hpp; a universe only decides
/// membership and orders, and can enumerate its members below an order bound.
template <class U>
concept SeparationUniverse = requires(const U& u, const Separation& s, Order k,
                                      const std::function<void(const Separation&)>& fn) {
  { u.ground_size() } -> std::convertible_to<std::size_t>;
  { u.contains(s) } -> std::same_as<bool>;
  { u.order(s) } -> std::convertible_to<Order>;
  u.for_each_below(k, fn);
};

using OrderFunction = std::function<Order(const Separation&)>;

/// All separations (A, B) of V, overlapping sides allowed.
class SetSeparationUniverse {
 public:
  SetSeparationUniverse(std::size_t n, OrderFunction order) : n_(n), ground_(ElementSet::full(n)), order_(std::move(order)) {}

  std::size_t ground_size() const { return n_; }
  ElementSet ground() const { return ground_; }
  bool contains(const Separation& s) const { return s.covers(ground_); }
  Order order(const Separation& s) const { return order_(s); }

  void for_each_below(Order k, const std::function<void(const Separation&)>& fn) const {
    for_each_subset(ground_, [&](ElementSet a) {
      // B must contain V \ A and may contain any part of A.
      for_each_subset(a, [&](ElementSet extra) {
        Separation s{a, (ground_ - a) | extra};
        if (order_(s) < k) fn(s);
      });
    });
  }

 private:
  std::size_t n_;
  ElementSet ground_;
  OrderFunction order_;
};

/// Bipartitions (X, V \ X) of a set of at least `min_size` elements.
class BipartitionUniverse {
 public:
  BipartitionUniverse(std::size_t n, OrderFunction order, std::size_t min_size = 2)
      : n_(n), ground_(ElementSet::full(n)), order_(std::move(order)) {
    if (n < min_size) throw std::invalid_argument("bipartition universe too small");
  }

  std::size_t ground_size() const { return n_; }
  ElementSet ground() const { return ground_; }
  bool contains(const Separation& s) const { return s.covers(ground_) && !s.a.intersects(s.b); }
  Order order(const Separation& s) const { return order_(s); }
  Separation bipartition(ElementSet x) const { return {x, ground_ - x}; }

  void for_each_below(Order k, const std::function<void(const Separation&)>& fn) const {
    for_each_subset(ground_, [&](ElementSet x) {
      Separation s{x, ground_ - x};
      if (order_(s) < k) fn(s);
    });
  }

 private:
  std::size_t n_;
  ElementSet ground_;
  OrderFunction order_;
};

/// S_k: the oriented separations of U of order < k.
template <SeparationUniverse U>
SeparationSystem restrict_sk(const U& universe, Order k) {
  std::vector<Separation> elements;
  std::vector<Order> orders;
  universe.for_each_below(k, [&](const Separation& s) {
    elements.push_back(s);
    orders.push_back(universe.order(s));
  });
  return SeparationSystem(universe.ground_size(), std::move(elements), std::move(orders));
}

/// Calls fn on every member s of U with lo <= s <= hi.
template <SeparationUniverse U, class Fn>
void for_each_in_interval(const U& universe, const Separation& lo, const Separation& hi, Fn&& fn) {
  if (!leq(lo, hi)) return;
  ElementSet ground = ElementSet::full(universe.ground_size());
  // lo.a ⊆ A ⊆ hi.a and hi.b ⊆ B ⊆ lo.b, with A ∪ B = V.
  ElementSet free_a = hi.a - lo.a;
  ElementSet free_b = lo.b - hi.b;
  for_each_subset(free_a, [&](ElementSet add_a) {
    ElementSet a = lo.a | add_a;
    ElementSet must_b = ground - a;
    if (!must_b.subset_of(lo.b)) return;
    ElementSet base_b = hi.b | must_b;
    for_each_subset(free_b - base_b, [&](ElementSet add_b) {
      Separation s{a, base_b | add_b};
      if (universe.contains(s)) fn(s);
    });
  });
}

/// A witness that ord is not an order function on U: either a pair violating
/// submodularity, or a single separation violating symmetry/non-negativity
/// (then `second == first`).
struct OrderLawViolation {
  Separation first;
  Separation second;
};

/// Exhaustively checks ord >= 0, ord(s) = ord(s*) and
/// ord(r ∨ s) + ord(r ∧ s) <= ord(r) + ord(s) over all members of U.
template <SeparationUniverse U>
std::optional<OrderLawViolation> find_order_law_violation(const U& universe) {
  std::vector<Separation> all;
  universe.for_each_below(std::numeric_limits<Order>::max(), [&](const Separation& s) { all.push_back(s); });
  for (const Separation& s : all) {
    Order o = universe.order(s);
    if (o < 0 || o != universe.order(s.inverse())) return OrderLawViolation{s, s};
  }
  for (const Separation& r : all) {
    for (const Separation& s : all) {
      Separation j = join(r, s), m = meet(r, s);
      if (!universe.contains(j) || !universe.contains(m)) return OrderLawViolation{r, s};
      if (universe.order(j) + universe.order(m) > universe.order(r) + universe.order(s)) return OrderLawViolation{r, s};
    }
  }
  return std::nullopt;
}

}  // namespace tangles
