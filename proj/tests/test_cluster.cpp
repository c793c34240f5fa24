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


#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <vector>

#include "tangles.hpp"

namespace tangles {
namespace {

PixelGrid grid(std::size_t w, std::size_t h, std::vector<std::uint8_t> px) { return PixelGrid{w, h, std::move(px)}; }

PixelGrid two_regions() { return grid(3, 3, {0, 255, 255, 0, 255, 255, 0, 255, 255}); }

TEST(Pgm, PlainAndRaw) {
  std::istringstream plain("P2\n# comment\n2 1\n255\n0 17\n");
  PixelGrid g = read_pgm(plain);
  EXPECT_EQ(g.width, 2u);
  EXPECT_EQ(g.at(1, 0), 17);

  std::string raw = "P5 2 2 255\n";
  raw += std::string{'\x00', '\x10', '\x20', '\x7f'};
  std::istringstream rs(raw);
  PixelGrid r = read_pgm(rs);
  EXPECT_EQ(r.at(1, 1), 0x7f);

  std::istringstream bad("P3\n1 1\n255\n0\n");
  EXPECT_THROW(read_pgm(bad), std::runtime_error);
  std::istringstream over("P2 1 1 10 11");
  EXPECT_THROW(read_pgm(over), std::runtime_error);
  std::istringstream cut("P5 2 2 255\n\x01");
  EXPECT_THROW(read_pgm(cut), std::runtime_error);
}

TEST(GridCost, Values) {
  EXPECT_EQ(pixel_weight(9, 9), 256);
  EXPECT_EQ(pixel_weight(0, 255), 1);
  EXPECT_EQ(pixel_weight(0, 1), 128);
  PixelGrid flat = grid(2, 1, {5, 5});
  OrderFunction cost = grid_cost(flat);
  ElementSet all = ElementSet::full(2);
  EXPECT_EQ(cost({ElementSet{}, all}), 0);
  EXPECT_EQ(cost({ElementSet{0}, ElementSet{1}}), 256);
}

TEST(GridCost, Submodular) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> px(0, 255);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint8_t> v(4);
    for (auto& p : v) p = static_cast<std::uint8_t>(px(rng));
    PixelGrid g = grid(2, 2, v);
    EXPECT_FALSE(find_order_law_violation(BipartitionUniverse(4, grid_cost(g))));
  }
}

TEST(Cluster, TwoRegions) {
  PixelGrid g = two_regions();
  ClusterVerdict low = cluster(g, 256);
  ASSERT_TRUE(low.has_tangle());
  // The tangle sides with one region across the column boundary.
  Separation boundary{ElementSet{0, 3, 6}, ElementSet{1, 2, 4, 5, 7, 8}};
  EXPECT_TRUE(low.verdict.tangle->contains(boundary) || low.verdict.tangle->contains(boundary.inverse()));

  ClusterVerdict high = cluster(g, 2560);
  ASSERT_FALSE(high.has_tangle());
  ASSERT_TRUE(high.verdict.tree.has_value());
  OrderFunction cost = grid_cost(g);
  EXPECT_TRUE(is_over(*high.verdict.tree, family_Fstar_setsep(9, cost, 2560)));
  EXPECT_FALSE(high.laminar.empty());
  for (const Separation& r : high.laminar) {
    for (const Separation& s : high.laminar) EXPECT_TRUE(nested(r, s));
  }
}

TEST(Cluster, ExactOnSmallGrids) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> px(0, 255);
  for (std::size_t w = 1; w <= 3; ++w) {
    for (std::size_t h = 1; h <= 3; ++h) {
      if (w * h < 2) continue;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::uint8_t> v(w * h);
        for (auto& p : v) p = static_cast<std::uint8_t>(trial == 0 ? 128 : px(rng));
        for (Order k = 1; k <= 4; ++k) {
          ClusterVerdict c = cluster(grid(w, h, v), k);
          EXPECT_NE(c.verdict.tangle.has_value(), c.verdict.tree.has_value());
        }
      }
    }
  }
  ClusterVerdict one = cluster(grid(2, 1, {7, 7}), 1);
  EXPECT_NE(one.verdict.tangle.has_value(), one.verdict.tree.has_value());
}

TEST(Cluster, Limits) {
  EXPECT_THROW(cluster(grid(5, 4, std::vector<std::uint8_t>(20, 0)), 10), std::length_error);
  EXPECT_THROW(cluster(grid(1, 1, {0}), 10), std::invalid_argument);
}

}  // namespace
}  // namespace tangles
