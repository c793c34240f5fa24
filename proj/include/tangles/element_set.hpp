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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tangles {

/// A subset of an indexed ground set {0, ..., 63}, stored as a bit mask.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<std::size_t> elements) {
    for (std::size_t e : elements) insert(e);
  }

  /// The ground set {0, ..., n-1}.
  static constexpr ElementSet full(std::size_t n) {
    if (n > kMaxElements) throw std::out_of_range("ground set larger than 64 elements");
    return ElementSet(n == kMaxElements ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(std::size_t e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  void insert(std::size_t e) {
    if (e >= kMaxElements) throw std::out_of_range("element index out of range");
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(std::size_t e) { bits_ &= ~(std::uint64_t{1} << e); }

  /// Smallest element; the set must be nonempty.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet x, ElementSet y) { return ElementSet(x.bits_ | y.bits_); }
  friend constexpr ElementSet operator&(ElementSet x, ElementSet y) { return ElementSet(x.bits_ & y.bits_); }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet x, ElementSet y) { return ElementSet(x.bits_ & ~y.bits_); }
  ElementSet& operator|=(ElementSet y) { bits_ |= y.bits_; return *this; }
  ElementSet& operator&=(ElementSet y) { bits_ &= y.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet x, ElementSet y) { return x.bits_ <=> y.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn on every subset of `mask` (including the empty set and mask itself).
template <class Fn>
void for_each_subset(ElementSet mask, Fn&& fn) {
  std::uint64_t m = mask.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

}  // namespace tangles
