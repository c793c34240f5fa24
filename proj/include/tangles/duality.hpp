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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "family.hpp"
#include "orientation_search.hpp"
#include "separation_system.hpp"
#include "stree.hpp"
#include "universe.hpp"

namespace tangles {

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Both or neither side of the duality were found: an implementation bug.
class DualityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An S-tree exists but has more nodes than the materialisation cap.
class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxNodes = 200000;

// ---------------------------------------------------------------------------
// Shifting

/// The pair (r, s0) defining the shift s -> s v s0 on separations above r.
struct ShiftContext {
  Separation r;
  Separation s0;

  ShiftContext(const SeparationSystem& system, const Separation& r_in, const Separation& s0_in) : r(r_in), s0(s0_in) {
    if (!system.contains(r)) throw PreconditionError("shift: r not in S");
    if (r.degenerate()) throw PreconditionError("shift: r is degenerate");
    if (is_trivial_in(r, system)) throw PreconditionError("shift: r is trivial");
    if (!leq(r, s0)) throw PreconditionError("shift: r is not below s0");
  }

  /// s lies in the domain: s or s* is above r, and s is not r*.
  bool in_domain(const Separation& s) const {
    return s != r.inverse() && (leq(r, s) || leq(r, s.inverse()));
  }
};

inline Separation shift(const ShiftContext& ctx, const Separation& s) {
  if (!ctx.in_domain(s)) throw PreconditionError("shift: separation outside the domain");
  if (leq(ctx.r, s)) return join(s, ctx.s0);
  return join(s.inverse(), ctx.s0).inverse();
}

inline std::vector<Separation> shift_star(const ShiftContext& ctx, std::span<const Separation> sigma) {
  bool above = false;
  std::vector<Separation> out;
  for (const Separation& s : sigma) {
    above = above || leq(ctx.r, s);
    out.push_back(shift(ctx, s));
  }
  if (!above) throw PreconditionError("shift_star: no member above r");
  return normalized(out);
}

/// s0 emulates r in S: every s >= r in S other than r* has s v s0 in S.
inline bool emulates(const Separation& s0, const Separation& r, const SeparationSystem& system) {
  for (const Separation& s : system.elements()) {
    if (s != r.inverse() && leq(r, s) && !system.contains(join(s, s0))) return false;
  }
  return true;
}

namespace detail {
// Basis stars of F inside the shift domain with a member above r all shift into F.
inline bool shifts_basis_into(const ShiftContext& ctx, const SeparationSystem& system,
                              const std::vector<std::vector<std::size_t>>& basis, const Family& family) {
  for (const auto& idx : basis) {
    std::vector<Separation> sigma = members_of(system, idx);
    bool ok_domain = true, above = false;
    for (const Separation& s : sigma) {
      ok_domain = ok_domain && ctx.in_domain(s);
      above = above || leq(ctx.r, s);
    }
    if (!ok_domain || !above) continue;
    if (!family.contains(shift_star(ctx, sigma))) return false;
  }
  return true;
}
}  // namespace detail

/// s0 emulates r in S for F. Stars are drawn from the family's basis in S.
inline bool emulates_for_family(const Separation& s0, const Separation& r, const SeparationSystem& system,
                                const Family& family) {
  if (!emulates(s0, r, system)) return false;
  ShiftContext ctx(system, r, s0);
  return detail::shifts_basis_into(ctx, system, collect_basis(family, system), family);
}

/// A minimum-order s0 of U with r <= s0 <= r'*, ties broken by the
/// separation key. Requires r <= r'*.
template <SeparationUniverse U>
Separation choose_emulator(const U& universe, const Separation& r, const Separation& r_prime) {
  Separation hi = r_prime.inverse();
  if (!leq(r, hi)) throw PreconditionError("choose_emulator: r is not below r'*");
  std::optional<std::pair<Order, Separation>> best;
  for_each_in_interval(universe, r, hi, [&](const Separation& s) {
    std::pair<Order, Separation> key{universe.order(s), s};
    if (!best || key < *best) best = key;
  });
  return best->second;
}

/// {s*} is a member of F.
inline bool forces(const Family& family, const Separation& s) {
  std::vector<Separation> single{s.inverse()};
  return family.contains(single);
}

/// F forces every trivial element of S.
inline bool is_standard(const Family& family, const SeparationSystem& system) {
  for (std::size_t i : trivial_elements(system)) {
    if (!forces(family, system[i])) return false;
  }
  return true;
}

namespace detail {
inline std::vector<std::size_t> shiftable_elements(const SeparationSystem& system, const Family* family) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Separation& r = system[i];
    if (r.degenerate() || is_trivial_in(r, system)) continue;
    if (family && forces(*family, r)) continue;
    out.push_back(i);
  }
  return out;
}

inline bool separable_impl(const SeparationSystem& system, const Family* family) {
  auto candidates = shiftable_elements(system, family);
  std::vector<std::vector<std::size_t>> basis;
  if (family) basis = collect_basis(*family, system);
  auto good = [&](const Separation& s0, const Separation& r) {
    if (!emulates(s0, r, system)) return false;
    if (!family) return true;
    return shifts_basis_into(ShiftContext(system, r, s0), system, basis, *family);
  };
  for (std::size_t i : candidates) {
    for (std::size_t j : candidates) {
      const Separation& r = system[i];
      const Separation& rp = system[j];
      if (!leq(r, rp.inverse())) continue;
      bool found = false;
      for (const Separation& s0 : system.elements()) {
        if (leq(r, s0) && leq(s0, rp.inverse()) && good(s0, r) && good(s0.inverse(), rp)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}
}  // namespace detail

/// For all nontrivial nondegenerate r <= r'* in S some s0 in S between them
/// emulates r while s0* emulates r'.
inline bool is_separable(const SeparationSystem& system) { return detail::separable_impl(system, nullptr); }

/// As is_separable, with emulation for F and r, r' not forced by F.
inline bool is_F_separable(const SeparationSystem& system, const Family& family) {
  return detail::separable_impl(system, &family);
}

/// Whenever s0 in S emulates some nontrivial nondegenerate r not forced by F,
/// it emulates r for F.
inline bool is_closed_under_shifting(const Family& family, const SeparationSystem& system) {
  auto basis = collect_basis(family, system);
  for (std::size_t i : detail::shiftable_elements(system, &family)) {
    const Separation& r = system[i];
    for (const Separation& s0 : system.elements()) {
      if (!leq(r, s0) || !emulates(s0, r, system)) continue;
      if (!detail::shifts_basis_into(ShiftContext(system, r, s0), system, basis, family)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Searches

/// Streams the F-tangles of S: consistent orientations containing no basis
/// member of F. Stops when `visit` returns false.
template <class Visit>
void for_each_tangle(const SeparationSystem& system, const Family& family, Visit&& visit) {
  detail::OrientationSearch search(system, collect_basis(family, system));
  search.run(visit);
}

inline std::optional<Orientation> find_tangle(const SeparationSystem& system, const Family& family) {
  std::optional<Orientation> found;
  for_each_tangle(system, family, [&](const Orientation& o) {
    found = o;
    return false;
  });
  if (found && (!is_orientation_of(*found, system) || !is_consistent(found->members))) {
    throw DualityViolation("tangle search returned an invalid orientation");
  }
  return found;
}

namespace detail {

// Least fixed point of "u is the inward label of a finite subtree": u is good
// when some basis star contains u and v* is good for every other member v.
class TreeSearch {
 public:
  TreeSearch(const SeparationSystem& system, const Family& family)
      : system_(system), stars_(collect_basis(family, system)) {
    const std::size_t m = system.size();
    witness_.assign(m, kNone);
    waiting_.resize(m);
    missing_.resize(stars_.size());
    std::vector<std::size_t> ready;
    for (std::size_t f = 0; f < stars_.size(); ++f) {
      missing_[f] = stars_[f].size();
      for (std::size_t v : stars_[f]) waiting_[system.inverse_index(v)].push_back(f);
      if (missing_[f] <= 1) ready.push_back(f);
    }
    for (std::size_t f : ready) {
      if (settle(f)) return;
    }
    while (!queue_.empty() && !root_) {
      std::size_t u = queue_.back();
      queue_.pop_back();
      for (std::size_t f : waiting_[u]) {
        if (--missing_[f] <= 1 && settle(f)) break;
      }
    }
  }

  bool exists() const { return root_.has_value(); }

  // Materialises the tree; nullopt when it would exceed max_nodes.
  std::optional<STree> build(std::size_t max_nodes) const {
    if (!root_) return std::nullopt;
    STree tree;
    std::size_t budget = max_nodes == 0 ? 0 : max_nodes - 1;
    std::function<bool(std::size_t, std::size_t, std::size_t)> grow = [&](std::size_t t, std::size_t star,
                                                                          std::size_t skip) {
      for (std::size_t v : stars_[star]) {
        if (v == skip) continue;
        if (budget == 0) return false;
        --budget;
        std::size_t child = tree.add_node();
        std::size_t w = system_.inverse_index(v);
        tree.add_edge(child, t, system_[v]);
        if (!grow(child, witness_[w], w)) return false;
      }
      return true;
    };
    if (max_nodes == 0 || !grow(0, *root_, kNone)) return std::nullopt;
    return tree;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool good(std::size_t u) const { return witness_[u] != kNone; }

  // Returns true once a root star is found.
  bool settle(std::size_t f) {
    if (missing_[f] == 0) {
      root_ = f;
      return true;
    }
    for (std::size_t v : stars_[f]) {
      if (good(system_.inverse_index(v))) continue;
      if (!good(v)) {
        witness_[v] = f;
        queue_.push_back(v);
      }
      break;
    }
    return false;
  }

  const SeparationSystem& system_;
  std::vector<std::vector<std::size_t>> stars_;
  std::vector<std::size_t> witness_;
  std::vector<std::vector<std::size_t>> waiting_;
  std::vector<std::size_t> missing_;
  std::vector<std::size_t> queue_;
  std::optional<std::size_t> root_;
};

}  // namespace detail

enum class TreeSearchStatus { found, none, cap_exceeded };

struct TreeSearchResult {
  TreeSearchStatus status = TreeSearchStatus::none;
  std::optional<STree> tree;
};

/// Decides whether an S-tree over F exists and builds one within max_nodes.
inline TreeSearchResult search_stree(const SeparationSystem& system, const Family& family,
                                     std::size_t max_nodes = kDefaultMaxNodes) {
  detail::TreeSearch search(system, family);
  if (!search.exists()) return {};
  auto tree = search.build(max_nodes);
  if (!tree) return {TreeSearchStatus::cap_exceeded, std::nullopt};
  if (!is_over(*tree, family) || !labels_in(*tree, system)) {
    throw DualityViolation("tree search returned an invalid S-tree");
  }
  return {TreeSearchStatus::found, std::move(tree)};
}

/// An S-tree over F with labels in S, or nullopt. Throws SearchCapExceeded
/// when one exists but is larger than max_nodes.
inline std::optional<STree> find_stree(const SeparationSystem& system, const Family& family,
                                       std::size_t max_nodes = kDefaultMaxNodes) {
  auto result = search_stree(system, family, max_nodes);
  if (result.status == TreeSearchStatus::cap_exceeded) throw SearchCapExceeded("S-tree exceeds node cap");
  return std::move(result.tree);
}

/// Exactly one of an F-tangle and an S-tree over F.
struct DualityVerdict {
  std::string family;
  Order k = 0;
  std::optional<Orientation> tangle;
  std::optional<STree> tree;

  bool has_tangle() const { return tangle.has_value(); }
  std::string outcome() const { return has_tangle() ? "tangle" : "tree"; }
};

/// Runs both searches and checks that exactly one succeeds.
inline DualityVerdict verify_duality(const SeparationSystem& system, const Family& family, Order k,
                                     std::size_t max_nodes = kDefaultMaxNodes) {
  DualityVerdict verdict{family.name, k, find_tangle(system, family), std::nullopt};
  auto result = search_stree(system, family, max_nodes);
  bool tree_exists = result.status != TreeSearchStatus::none;
  if (verdict.has_tangle() == tree_exists) {
    throw DualityViolation(std::string(tree_exists ? "both" : "neither") + " side found for family " + family.name +
                           " at k=" + std::to_string(k));
  }
  if (result.status == TreeSearchStatus::cap_exceeded) throw SearchCapExceeded("S-tree exceeds node cap");
  verdict.tree = std::move(result.tree);
  return verdict;
}

}  // namespace tangles
