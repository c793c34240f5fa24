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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "separation_system.hpp"

namespace tangles {

/// A set of forbidden sets of oriented separations, given intensionally.
///
/// `contains` decides membership of an arbitrary finite set (it receives the
/// set sorted and without duplicates). `enumerate` lists, as index sets into
/// a given system S, a search basis of the members contained in S: every
/// member σ ⊆ S contains a basis member, and a family of stars is represented
/// in S-trees by its basis members alone. Each family documents its basis.
struct Family {
  using StarVisitor = std::function<void(std::span<const std::size_t>)>;

  std::string name;
  std::function<bool(std::span<const Separation>)> contains;
  std::function<void(const SeparationSystem&, const StarVisitor&)> enumerate;
};

/// Membership of an arbitrary (unsorted, possibly repeated) set.
inline bool family_contains(const Family& family, std::span<const Separation> set) {
  std::vector<Separation> norm = normalized(set);
  return family.contains(norm);
}

/// The family with no members.
inline Family empty_family() {
  return Family{"empty", [](std::span<const Separation>) { return false; },
                [](const SeparationSystem&, const Family::StarVisitor&) {}};
}

/// Lists the basis of `family` inside `system`, one index vector per member.
inline std::vector<std::vector<std::size_t>> collect_basis(const Family& family, const SeparationSystem& system) {
  std::vector<std::vector<std::size_t>> out;
  family.enumerate(system, [&](std::span<const std::size_t> star) { out.emplace_back(star.begin(), star.end()); });
  return out;
}

/// Enumerates the nonempty stars of S with at most `max_size` members drawn
/// from the elements accepted by `admit`. Each star is reported once, as
/// increasing indices.
template <class Admit, class Visit>
void enumerate_stars(const SeparationSystem& system, std::size_t max_size, Admit&& admit, Visit&& visit) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (!system[i].degenerate() && admit(i)) candidates.push_back(i);
  }
  const std::size_t m = candidates.size();
  // later[p]: positions q > p whose elements point towards candidates[p].
  std::vector<std::vector<std::size_t>> later(m);
  for (std::size_t p = 0; p < m; ++p) {
    const Separation& x = system[candidates[p]];
    for (std::size_t q = p + 1; q < m; ++q) {
      if (leq(x, system[candidates[q]].inverse())) later[p].push_back(q);
    }
  }
  std::vector<std::size_t> current;
  std::vector<std::size_t> positions;
  std::function<void(const std::vector<std::size_t>&)> extend = [&](const std::vector<std::size_t>& pool) {
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
      std::size_t p = pool[idx];
      current.push_back(candidates[p]);
      visit(std::span<const std::size_t>(current));
      if (current.size() < max_size) {
        std::vector<std::size_t> next;
        const auto& lp = later[p];
        std::set_intersection(pool.begin() + static_cast<std::ptrdiff_t>(idx) + 1, pool.end(), lp.begin(), lp.end(),
                              std::back_inserter(next));
        if (!next.empty()) extend(next);
      }
      current.pop_back();
    }
  };
  std::vector<std::size_t> all(m);
  for (std::size_t p = 0; p < m; ++p) all[p] = p;
  extend(all);
}

/// Elements of a star given by indices.
inline std::vector<Separation> members_of(const SeparationSystem& system, std::span<const std::size_t> star) {
  std::vector<Separation> out;
  out.reserve(star.size());
  for (std::size_t i : star) out.push_back(system[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tangles
