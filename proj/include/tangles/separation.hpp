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
#include <functional>
#include <span>
#include <vector>

#include "element_set.hpp"

namespace tangles {

/// An oriented separation (A, B) of a ground set V, i.e. A ∪ B = V.
///
/// The pair (B, A) is its inverse; both together form the unoriented
/// separation {A, B}. Sides may be empty and may overlap.
struct Separation {
  ElementSet a;
  ElementSet b;

  constexpr Separation inverse() const { return {b, a}; }
  constexpr bool degenerate() const { return a == b; }
  constexpr ElementSet separator() const { return a & b; }
  constexpr bool covers(ElementSet ground) const { return (a | b) == ground; }

  /// Key of the unoriented separation: the lexicographically smaller orientation.
  constexpr Separation canonical() const {
    Separation inv = inverse();
    return (inv < *this) ? inv : *this;
  }

  friend constexpr bool operator==(const Separation&, const Separation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Separation& x, const Separation& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
};

inline constexpr Separation invert(const Separation& s) { return s.inverse(); }

/// (A,B) <= (C,D) iff A ⊆ C and B ⊇ D.
inline constexpr bool leq(const Separation& r, const Separation& s) {
  return r.a.subset_of(s.a) && s.b.subset_of(r.b);
}
inline constexpr bool less(const Separation& r, const Separation& s) { return r != s && leq(r, s); }

/// Supremum (A∪C, B∩D).
inline constexpr Separation join(const Separation& r, const Separation& s) { return {r.a | s.a, r.b & s.b}; }
/// Infimum (A∩C, B∪D).
inline constexpr Separation meet(const Separation& r, const Separation& s) { return {r.a & s.a, r.b | s.b}; }

inline constexpr bool is_degenerate(const Separation& s) { return s.degenerate(); }
/// s <= s*; for set separations this means B is the whole ground set.
inline constexpr bool is_small(const Separation& s) { return leq(s, s.inverse()); }

/// Some orientation of r is comparable with some orientation of s.
inline constexpr bool nested(const Separation& r, const Separation& s) {
  return leq(r, s) || leq(s, r) || leq(r, s.inverse()) || leq(s.inverse(), r);
}

/// r and s belong to the same unoriented separation.
inline constexpr bool same_separation(const Separation& r, const Separation& s) {
  return r == s || r == s.inverse();
}

/// Nondegenerate members pointing towards each other: r <= s* for distinct r, s.
inline bool is_star(std::span<const Separation> sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i].degenerate()) return false;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (i != j && sigma[i] != sigma[j] && !leq(sigma[i], sigma[j].inverse())) return false;
    }
  }
  return true;
}

/// No two orientations of distinct separations point away from each other:
/// there are no r < s of distinct separations with r*, s in O.
inline bool is_consistent(std::span<const Separation> orientation) {
  for (const Separation& x : orientation) {
    for (const Separation& y : orientation) {
      if (same_separation(x, y)) continue;
      if (less(x.inverse(), y)) return false;
    }
  }
  return true;
}

/// Contains the inverse of none of its nondegenerate members.
inline bool is_antisymmetric(std::span<const Separation> set) {
  for (const Separation& x : set) {
    if (x.degenerate()) continue;
    if (std::find(set.begin(), set.end(), x.inverse()) != set.end()) return false;
  }
  return true;
}

/// Sorted copy without duplicates.
inline std::vector<Separation> normalized(std::span<const Separation> set) {
  std::vector<Separation> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct SeparationHash {
  std::size_t operator()(const Separation& s) const noexcept {
    std::uint64_t h = s.a.bits() * 0x9E3779B97F4A7C15ULL;
    h ^= s.b.bits() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return std::hash<std::uint64_t>{}(h);
  }
};

}  // namespace tangles
