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
#include <span>
#include <vector>

#include "separation_system.hpp"

namespace tangles {
namespace detail {

// Backtracking over orientations of S that are consistent and contain no
// forbidden index set. Choosing an element forces everything strictly below
// it; a forbidden set with one undecided member left forces that member out.
class OrientationSearch {
 public:
  OrientationSearch(const SeparationSystem& system, std::vector<std::vector<std::size_t>> forbidden)
      : system_(system), forbidden_(std::move(forbidden)) {
    const std::size_t m = system.size();
    state_.assign(m, kUnset);
    below_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || j == system.inverse_index(i)) continue;
        if (leq(system[j], system[i])) below_[i].push_back(j);
      }
    }
    stars_of_.resize(m);
    count_.assign(forbidden_.size(), 0);
    for (std::size_t f = 0; f < forbidden_.size(); ++f) {
      if (forbidden_[f].empty()) infeasible_ = true;
      for (std::size_t i : forbidden_[f]) stars_of_[i].push_back(f);
    }
  }

  // Calls visit(const Orientation&) per solution until it returns false.
  template <class Visit>
  void run(Visit&& visit) {
    if (infeasible_) return;
    for (std::size_t i = 0; i < system_.size(); ++i) {
      if (system_[i].degenerate() && !assign(i)) return;
    }
    if (!propagate()) return;
    stop_ = false;
    descend(0, visit);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::uint8_t kUnset = 0, kIn = 1, kOut = 2;

  bool assign(std::size_t i) {
    if (state_[i] == kIn) return true;
    if (state_[i] == kOut) return false;
    std::size_t j = system_.inverse_index(i);
    state_[i] = kIn;
    if (j != i) state_[j] = kOut;
    assigned_.push_back(i);
    queue_.push_back(i);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      std::size_t x = queue_.back();
      queue_.pop_back();
      for (std::size_t f : stars_of_[x]) {
        ++count_[f];
        counted_.push_back(f);
        const auto& star = forbidden_[f];
        if (count_[f] == star.size()) return fail();
        if (count_[f] + 1 == star.size()) {
          for (std::size_t u : star) {
            if (state_[u] == kIn) continue;
            std::size_t v = system_.inverse_index(u);
            if (state_[u] == kUnset && (v == u || !assign(v))) return fail();
            break;
          }
        }
      }
      for (std::size_t y : below_[x]) {
        if (!assign(y)) return fail();
      }
    }
    return true;
  }

  bool fail() {
    queue_.clear();
    return false;
  }

  void undo(std::size_t assigned_mark, std::size_t counted_mark) {
    while (assigned_.size() > assigned_mark) {
      std::size_t i = assigned_.back();
      assigned_.pop_back();
      state_[i] = kUnset;
      state_[system_.inverse_index(i)] = kUnset;
    }
    while (counted_.size() > counted_mark) {
      --count_[counted_.back()];
      counted_.pop_back();
    }
  }

  template <class Visit>
  void descend(std::size_t pos, Visit& visit) {
    auto reps = system_.separations();
    while (pos < reps.size() && state_[reps[pos]] != kUnset) ++pos;
    ++nodes_;
    if (pos == reps.size()) {
      std::vector<Separation> members;
      for (std::size_t i = 0; i < system_.size(); ++i) {
        if (state_[i] == kIn) members.push_back(system_[i]);
      }
      if (!visit(Orientation(std::move(members)))) stop_ = true;
      return;
    }
    std::size_t rep = reps[pos];
    for (std::size_t choice : {rep, system_.inverse_index(rep)}) {
      std::size_t am = assigned_.size(), cm = counted_.size();
      if (assign(choice) && propagate()) descend(pos + 1, visit);
      undo(am, cm);
      if (stop_) return;
    }
  }

  const SeparationSystem& system_;
  std::vector<std::vector<std::size_t>> forbidden_;
  std::vector<std::uint8_t> state_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> stars_of_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> assigned_;
  std::vector<std::size_t> counted_;
  std::vector<std::size_t> queue_;
  bool infeasible_ = false;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Streams every consistent orientation of S; stops when `visit` returns false.
template <class Visit>
void for_each_consistent_orientation(const SeparationSystem& system, Visit&& visit) {
  detail::OrientationSearch search(system, {});
  search.run(visit);
}

/// All consistent orientations of S.
inline std::vector<Orientation> consistent_orientations(const SeparationSystem& system) {
  std::vector<Orientation> out;
  for_each_consistent_orientation(system, [&](const Orientation& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

}  // namespace tangles
