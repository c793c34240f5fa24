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
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "separation.hpp"

namespace tangles {

using Order = std::int64_t;

/// A finite separation system: oriented separations of one ground set,
/// closed under inversion, each carrying its order value.
///
/// Elements are stored sorted by their (A, B) key; the partial order is
/// side inclusion and is evaluated on demand.
class SeparationSystem {
 public:
  SeparationSystem() = default;

  /// Missing inverses are added with the order of their partner. `orders`
  /// may be empty (all zero) or parallel to `elements`.
  SeparationSystem(std::size_t ground_size, std::vector<Separation> elements, std::vector<Order> orders = {})
      : ground_size_(ground_size), ground_(ElementSet::full(ground_size)) {
    if (!orders.empty() && orders.size() != elements.size()) {
      throw std::invalid_argument("orders must be parallel to elements");
    }
    std::unordered_map<Separation, Order, SeparationHash> order_of;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const Separation& s = elements[i];
      if (!s.covers(ground_)) throw std::invalid_argument("sides of a separation must cover the ground set");
      Order o = orders.empty() ? 0 : orders[i];
      order_of.emplace(s, o);
      order_of.emplace(s.inverse(), o);
    }
    elements_.reserve(order_of.size());
    for (const auto& [s, o] : order_of) elements_.push_back(s);
    std::sort(elements_.begin(), elements_.end());
    orders_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      orders_.push_back(order_of.at(elements_[i]));
      index_.emplace(elements_[i], i);
    }
    inverse_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_.at(elements_[i].inverse());

    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i <= inverse_[i]) separations_.push_back(i);
    }
    std::stable_sort(separations_.begin(), separations_.end(),
                     [&](std::size_t x, std::size_t y) { return orders_[x] < orders_[y]; });
  }

  std::size_t ground_size() const { return ground_size_; }
  ElementSet ground() const { return ground_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Separation& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Separation> elements() const { return elements_; }
  Order order(std::size_t i) const { return orders_[i]; }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

  std::optional<std::size_t> index_of(const Separation& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Separation& s) const { return index_.contains(s); }

  /// One index per unoriented separation (its smaller-keyed orientation),
  /// sorted by increasing order.
  std::span<const std::size_t> separations() const { return separations_; }
  std::size_t separation_count() const { return separations_.size(); }

 private:
  std::size_t ground_size_ = 0;
  ElementSet ground_;
  std::vector<Separation> elements_;
  std::vector<Order> orders_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> separations_;
  std::unordered_map<Separation, std::size_t, SeparationHash> index_;
};

/// r is trivial in S: some separation s ≠ r of S has r < s and r < s*.
inline bool is_trivial_in(const Separation& r, const SeparationSystem& system) {
  for (const Separation& s : system.elements()) {
    if (same_separation(r, s)) continue;
    if (less(r, s) && less(r, s.inverse())) return true;
  }
  return false;
}

/// Indices of the elements trivial in S.
inline std::vector<std::size_t> trivial_elements(const SeparationSystem& system) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (is_trivial_in(system[i], system)) out.push_back(i);
  }
  return out;
}

/// For all r, s in S at least one of r ∧ s, r ∨ s lies in S.
inline bool is_submodular(const SeparationSystem& system) {
  for (const Separation& r : system.elements()) {
    for (const Separation& s : system.elements()) {
      if (!system.contains(join(r, s)) && !system.contains(meet(r, s))) return false;
    }
  }
  return true;
}

/// A choice of exactly one orientation per separation of a system.
struct Orientation {
  std::vector<Separation> members;  // sorted

  Orientation() = default;
  explicit Orientation(std::vector<Separation> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
  }
  bool contains(const Separation& s) const { return std::binary_search(members.begin(), members.end(), s); }
  std::size_t size() const { return members.size(); }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// O contains exactly one orientation of every separation of S and nothing else.
inline bool is_orientation_of(const Orientation& o, const SeparationSystem& system) {
  if (o.members.size() != system.separation_count()) return false;
  for (std::size_t rep : system.separations()) {
    bool fwd = o.contains(system[rep]);
    bool bwd = o.contains(system[system.inverse_index(rep)]);
    if (system.inverse_index(rep) == rep) {
      if (!fwd) return false;
    } else if (fwd == bwd) {
      return false;
    }
  }
  return true;
}

}  // namespace tangles
